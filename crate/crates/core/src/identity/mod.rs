//! Partition-indexed generating functions, eta-style products and the finite
//! identities checked by the harness.

mod finite;
mod rr;

use rayon::prelude::*;

use crate::arith::{MultiPoly, RatFunc, Rational, TruncatedSeries};
use crate::error::{Error, Result};
use crate::partition::{cell_stats, partitions_of, Cell, Partition};

pub use finite::{
    cofactor_determinant, corollary_5_2, cycle_index_determinant, Corollary52, Matrix, SignConvention, MAX_DET_SIZE,
};
pub use rr::{equivalence_classes_d, rr_partition_side, rr_q_series, squares_polynomial, squares_total, RrKind};

/// Which cells of each diagram enter a product.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum CellFilter {
    #[default]
    All,
    /// Cells with arm 0 (the last cell of each row).
    ArmZero,
    /// Cells with leg 0 (the bottom cell of each column).
    LegZero,
}

impl CellFilter {
    pub fn accepts(self, c: &Cell) -> bool {
        match self {
            CellFilter::All => true,
            CellFilter::ArmZero => c.arm == 0,
            CellFilter::LegZero => c.leg == 0,
        }
    }
}

/// `sum_{n<=order} x^n sum_{λ ⊢ n} f(λ)`.
///
/// Sizes are processed in parallel; each coefficient is summed in the
/// reverse-lex order of [`partitions_of`], so the result is deterministic.
pub fn partition_sum_series<F>(order: usize, f: F) -> Result<TruncatedSeries>
where
    F: Fn(&Partition) -> Result<RatFunc> + Sync,
{
    let coeffs: Vec<Result<RatFunc>> = (0..=order as u32)
        .into_par_iter()
        .map(|n| {
            let mut acc = RatFunc::zero();
            for lambda in partitions_of(n) {
                acc = &acc + &f(&lambda)?;
            }
            Ok(acc)
        })
        .collect();
    Ok(TruncatedSeries::from_coeffs("x", order, coeffs.into_iter().collect::<Result<_>>()?))
}

/// `prod_{u in λ, filter(u)} w(λ, u)` with one reduction at the end.
/// A failing weight is reported as [`Error::WeightUndefined`] at its cell.
pub fn cell_product<W>(lambda: &Partition, weight: &W, filter: CellFilter) -> Result<RatFunc>
where
    W: Fn(&Partition, &Cell) -> Result<RatFunc>,
{
    let mut num = MultiPoly::one();
    let mut den = MultiPoly::one();
    for c in cell_stats(lambda).iter().filter(|c| filter.accepts(c)) {
        let w = weight(lambda, c).map_err(|_| Error::WeightUndefined {
            partition: lambda.to_string(),
            row: c.row,
            col: c.col,
        })?;
        if w.is_zero() {
            return Ok(RatFunc::zero());
        }
        num = &num * w.num();
        if !w.den().is_one() {
            den = &den * w.den();
        }
    }
    RatFunc::new(num, den)
}

/// `sum_n x^n sum_{λ ⊢ n} prod_{u in λ, filter} w(λ, u)`; the empty
/// partition contributes 1.
pub fn partition_product_series<W>(order: usize, weight: W, filter: CellFilter) -> Result<TruncatedSeries>
where
    W: Fn(&Partition, &Cell) -> Result<RatFunc> + Sync,
{
    partition_sum_series(order, |lambda| cell_product(lambda, &weight, filter))
}

/// What an additive partition statistic ranges over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AdditiveMode {
    /// `sum_{u in λ} f(h_u)`.
    Hooks,
    /// `sum_i f(λ_i)`.
    Parts,
}

/// `sum_n x^n sum_{λ ⊢ n} sum f(·)` over hooks or parts.
pub fn partition_additive_series<F>(order: usize, mode: AdditiveMode, summand: F) -> Result<TruncatedSeries>
where
    F: Fn(u32) -> MultiPoly + Sync,
{
    partition_sum_series(order, |lambda| {
        let mut acc = MultiPoly::zero();
        match mode {
            AdditiveMode::Hooks => {
                for c in cell_stats(lambda) {
                    acc += &summand(c.hook);
                }
            }
            AdditiveMode::Parts => {
                for &p in lambda.parts() {
                    acc += &summand(p);
                }
            }
        }
        Ok(RatFunc::from(acc))
    })
}

/// One block `prod_{j>=1} (1 - x^{stride*j - offset})^{-exponent}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EtaFactor {
    pub stride: u32,
    pub offset: i64,
    pub exponent: MultiPoly,
}

impl EtaFactor {
    pub fn new(stride: u32, offset: i64, exponent: MultiPoly) -> Self {
        EtaFactor { stride, offset, exponent }
    }

    /// Plain integer exponent.
    pub fn int(stride: u32, offset: i64, exponent: i64) -> Self {
        EtaFactor::new(stride, offset, MultiPoly::from_int(exponent))
    }
}

/// Product of eta-style blocks truncated at `order`, computed as the
/// exponential of `sum E * sum_m x^{km}/m` so polynomial exponents are exact.
pub fn eta_product(factors: &[EtaFactor], order: usize) -> Result<TruncatedSeries> {
    let mut log = vec![MultiPoly::zero(); order + 1];
    for f in factors {
        if f.stride == 0 || (f.stride as i64) - f.offset < 1 {
            return Err(Error::InvalidArgument(format!(
                "eta factor exponent {}*j - {} must be positive for j >= 1",
                f.stride, f.offset
            )));
        }
        for j in 1.. {
            let k = (f.stride as i64 * j - f.offset) as usize;
            if k > order {
                break;
            }
            for m in 1..=order / k {
                let c = Rational::new(1.into(), (m as i64).into());
                log[k * m] += &f.exponent.scale(&c);
            }
        }
    }
    TruncatedSeries::from_polys("x", order, log).exp()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, Var};

    fn int(n: i64) -> MultiPoly {
        MultiPoly::from_int(n)
    }

    fn hook_weight(l: &Partition, c: &Cell) -> Result<RatFunc> {
        let _ = l;
        let h2 = int((c.hook * c.hook) as i64);
        RatFunc::new(&h2 + &MultiPoly::var(Var::T), h2)
    }

    #[test]
    fn nekrasov_okounkov_style_example() {
        let s = partition_product_series(2, hook_weight, CellFilter::All).unwrap();
        let t = MultiPoly::var(Var::T);
        assert!(s.coeff(0).is_one());
        assert_eq!(s.coeff(1), &RatFunc::from(&t + &int(1)));
        let c2 = (&(&t + &int(4)) * &(&t + &int(1))).scale(&rat(1, 2));
        assert_eq!(s.coeff(2), &RatFunc::from(c2));
        // middle equality of the hook variants: prod (1-x^j)^{-t-1}
        let rhs = eta_product(&[EtaFactor::new(1, 0, &t + &int(1))], 8).unwrap();
        assert_eq!(partition_product_series(8, hook_weight, CellFilter::All).unwrap(), rhs);
    }

    #[test]
    fn content_weights() {
        let t = MultiPoly::var(Var::T);
        let v = MultiPoly::var(Var::V);
        let s = partition_product_series(
            1,
            |_, c| {
                let cc = int(c.content);
                RatFunc::new(&(&t + &cc) * &(&v + &cc), int((c.hook * c.hook) as i64))
            },
            CellFilter::All,
        )
        .unwrap();
        assert_eq!(s.coeff(1), &RatFunc::from(&t * &v));

        let s =
            partition_product_series(2, |_, c| RatFunc::new(int(c.sp_content), int(c.hook as i64)), CellFilter::All)
                .unwrap();
        assert!(s.coeff(1).is_zero());
        assert_eq!(s.coeff(2), &RatFunc::from_int(-1));
    }

    #[test]
    fn failing_weight_reports_cell() {
        let err = partition_product_series(2, |_, c| RatFunc::new(MultiPoly::one(), int(c.content)), CellFilter::All)
            .unwrap_err();
        assert_eq!(err, Error::WeightUndefined { partition: "[1]".into(), row: 1, col: 1 });
    }

    #[test]
    fn filters() {
        let l = Partition::new(vec![3, 1]);
        let arms: Vec<_> = cell_stats(&l).into_iter().filter(|c| CellFilter::ArmZero.accepts(c)).collect();
        assert_eq!(arms.len(), 2);
        let legs: Vec<_> = cell_stats(&l).into_iter().filter(|c| CellFilter::LegZero.accepts(c)).collect();
        assert_eq!(legs.len(), 3);
    }

    #[test]
    fn additive_examples() {
        let s = partition_additive_series(2, AdditiveMode::Hooks, |h| int(h as i64)).unwrap();
        assert_eq!(s.coeff(2), &RatFunc::from_int(6));
        let s = partition_additive_series(2, AdditiveMode::Parts, |p| int((p * p) as i64)).unwrap();
        assert_eq!(s.coeff(2), &RatFunc::from_int(6));
        let q = MultiPoly::var(Var::Q);
        let s = partition_additive_series(2, AdditiveMode::Hooks, |h| q.pow(h)).unwrap();
        let expected = &q.pow(2).scale(&rat(2, 1)) + &q.scale(&rat(2, 1));
        assert_eq!(s.coeff(2), &RatFunc::from(expected));
    }

    fn ints(s: &TruncatedSeries) -> Vec<Rational> {
        s.coeffs().iter().map(|c| c.num().constant_term()).collect()
    }

    #[test]
    fn eta_examples() {
        // prod 1/(1 + x^{4j-2}) = prod (1 - x^{4j-2}) / (1 - x^{8j-4})
        let s = eta_product(&[EtaFactor::int(4, 2, -1), EtaFactor::int(8, 4, 1)], 4).unwrap();
        assert_eq!(ints(&s), vec![rat(1, 1), rat(0, 1), rat(-1, 1), rat(0, 1), rat(1, 1)]);

        let t = MultiPoly::var(Var::T);
        let s = eta_product(&[EtaFactor::new(1, 0, t.clone())], 2).unwrap();
        let c2 = (&(&t * &t) + &t.scale(&rat(3, 1))).scale(&rat(1, 2));
        assert_eq!(s.coeff(1), &RatFunc::from(t.clone()));
        assert_eq!(s.coeff(2), &RatFunc::from(c2));

        // Euler's pentagonal theorem
        let s = eta_product(&[EtaFactor::int(1, 0, -1)], 7).unwrap();
        let expected: Vec<Rational> = [1, -1, -1, 0, 0, 1, 0, 1].iter().map(|&c| rat(c, 1)).collect();
        assert_eq!(ints(&s), expected);

        assert!(eta_product(&[EtaFactor::int(2, 2, 1)], 3).is_err());
    }

    #[test]
    fn gauss_triangular_product() {
        // (x^2;x^2)^2 / (x;x) = sum_k x^{k(k+1)/2}
        let s = eta_product(&[EtaFactor::int(2, 0, -2), EtaFactor::int(1, 0, 1)], 15).unwrap();
        for (n, c) in ints(&s).into_iter().enumerate() {
            let tri = (0..6).any(|k| k * (k + 1) / 2 == n);
            assert_eq!(c, rat(tri as i64, 1), "n={n}");
        }
    }
}
