//! Rogers-Ramanujan style q-series, hook and square statistics of partitions.

use std::collections::BTreeMap;

use crate::arith::{gaussian_binomial, q_coeff, MultiPoly, TruncatedSeries, Var};
use crate::partition::{cell_stats, partitions_of, squares_count, Partition};

/// The q-sum sides that can be expanded.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RrKind {
    /// `sum_{k>=1} x^{k^2} q^{3k-2} / (qx;x)_k`.
    Prop91,
    /// `sum_{k>=0} x^{k(k+1)} q^{2k} / ((qx;x)_k (qx;x)_{k+1})`.
    Prop92Middle,
    /// `sum_n x^n sum_{i,j} q^j [q^{n-j}] binom(j-1, i)_q`, plus 1 at `n = 0`.
    Prop92Right,
    /// `sum_{k>=0} x^{k^2} q^{k(k+1)(2k+1)/6} / prod_{j<=k} (1 - x^j q^{j(j+1)/2})^2`.
    Thm95,
}

/// Dense series in `x` with polynomial coefficients in `q`.
struct Dense {
    c: Vec<MultiPoly>,
    q_order: Option<u32>,
}

impl Dense {
    fn monomial(n_x: usize, q_order: Option<u32>, x_pow: usize, q_pow: u32) -> Self {
        let mut c = vec![MultiPoly::zero(); n_x + 1];
        if x_pow <= n_x {
            c[x_pow] = MultiPoly::var_pow(Var::Q, q_pow);
        }
        let mut d = Dense { c, q_order };
        d.trim();
        d
    }

    fn trim(&mut self) {
        if let Some(m) = self.q_order {
            for p in &mut self.c {
                *p = p.truncate_in(Var::Q, m);
            }
        }
    }

    /// Multiply by `1 / (1 - q^e x^j)`.
    fn divide_one_minus(&mut self, j: usize, e: u32) {
        let f = MultiPoly::var_pow(Var::Q, e);
        for n in j..self.c.len() {
            let add = &f * &self.c[n - j];
            self.c[n] += &add;
            if let Some(m) = self.q_order {
                self.c[n] = self.c[n].truncate_in(Var::Q, m);
            }
        }
    }

    fn add_to(&self, acc: &mut [MultiPoly]) {
        for (a, c) in acc.iter_mut().zip(&self.c) {
            *a += c;
        }
    }
}

/// Exact expansion of one q-sum to `x^{n_x}`, with `q` truncated at
/// `n_q` when given.
pub fn rr_q_series(kind: RrKind, n_x: usize, n_q: Option<u32>) -> TruncatedSeries {
    let mut acc = vec![MultiPoly::zero(); n_x + 1];
    match kind {
        RrKind::Prop91 => {
            for k in (1..).take_while(|k| k * k <= n_x) {
                let mut term = Dense::monomial(n_x, n_q, k * k, 3 * k as u32 - 2);
                for j in 1..=k {
                    term.divide_one_minus(j, 1);
                }
                term.add_to(&mut acc);
            }
        }
        RrKind::Prop92Middle => {
            for k in (0..).take_while(|k| k * (k + 1) <= n_x) {
                let mut term = Dense::monomial(n_x, n_q, k * (k + 1), 2 * k as u32);
                for j in 1..=k {
                    term.divide_one_minus(j, 1);
                }
                for j in 1..=k + 1 {
                    term.divide_one_minus(j, 1);
                }
                term.add_to(&mut acc);
            }
        }
        RrKind::Prop92Right => {
            acc[0] = MultiPoly::one();
            for (n, slot) in acc.iter_mut().enumerate().skip(1) {
                let mut p = MultiPoly::zero();
                for j in 1..=n {
                    let c: crate::arith::Rational =
                        (0..j as i64).map(|i| q_coeff(&gaussian_binomial(j as i64 - 1, i), (n - j) as u32)).sum();
                    p += &MultiPoly::var_pow(Var::Q, j as u32).scale(&c);
                }
                *slot = p;
            }
        }
        RrKind::Thm95 => {
            for k in (0..).take_while(|k| k * k <= n_x) {
                let e = (k * (k + 1) * (2 * k + 1) / 6) as u32;
                let mut term = Dense::monomial(n_x, n_q, k * k, e);
                for j in 1..=k {
                    let ej = (j * (j + 1) / 2) as u32;
                    term.divide_one_minus(j, ej);
                    term.divide_one_minus(j, ej);
                }
                term.add_to(&mut acc);
            }
        }
    }
    if let Some(m) = n_q {
        for p in &mut acc {
            *p = p.truncate_in(Var::Q, m);
        }
    }
    TruncatedSeries::from_polys("x", n_x, acc)
}

fn hook11(lambda: &Partition) -> u32 {
    cell_stats(lambda).first().map_or(0, |c| c.hook)
}

/// The partition-side sum matching `kind`: `q^{h(1,1)}` over parts differing
/// by at least 2 (from `n = 1`) for [`RrKind::Prop91`], `q^{h(1,1)}` over all
/// partitions for the two [`RrKind::Prop92Middle`] forms, and `F_n(q)` for
/// [`RrKind::Thm95`].
pub fn rr_partition_side(kind: RrKind, n_x: usize, n_q: Option<u32>) -> TruncatedSeries {
    let mut acc = Vec::with_capacity(n_x + 1);
    for n in 0..=n_x as u32 {
        let mut p = MultiPoly::zero();
        match kind {
            RrKind::Prop91 => {
                if n >= 1 {
                    for l in partitions_of(n).filter(Partition::has_gap_two) {
                        p += &MultiPoly::var_pow(Var::Q, hook11(&l));
                    }
                }
            }
            RrKind::Prop92Middle | RrKind::Prop92Right => {
                for l in partitions_of(n) {
                    p += &MultiPoly::var_pow(Var::Q, hook11(&l));
                }
            }
            RrKind::Thm95 => p = squares_polynomial(n),
        }
        if let Some(m) = n_q {
            p = p.truncate_in(Var::Q, m);
        }
        acc.push(p);
    }
    TruncatedSeries::from_polys("x", n_x, acc)
}

/// `F_n(q) = sum_{λ ⊢ n} q^{a(λ)}`.
pub fn squares_polynomial(n: u32) -> MultiPoly {
    partitions_of(n).map(|l| MultiPoly::var_pow(Var::Q, squares_count(&l) as u32)).sum()
}

/// `f(n) = sum_{λ ⊢ n} a(λ)`.
pub fn squares_total(n: u32) -> u64 {
    partitions_of(n).map(|l| squares_count(&l)).sum()
}

/// `D_j(n)`: partitions of `n` grouped by `a(λ)`.
pub fn equivalence_classes_d(n: u32) -> BTreeMap<u64, Vec<Partition>> {
    let mut out: BTreeMap<u64, Vec<Partition>> = BTreeMap::new();
    for l in partitions_of(n) {
        out.entry(squares_count(&l)).or_default().push(l);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, RatFunc};
    use crate::partition::partition_counts;

    fn qp(pairs: &[(u32, i64)]) -> RatFunc {
        RatFunc::from(pairs.iter().map(|&(e, c)| MultiPoly::var_pow(Var::Q, e).scale(&rat(c, 1))).sum::<MultiPoly>())
    }

    #[test]
    fn examples() {
        let s = rr_q_series(RrKind::Prop91, 4, None);
        assert!(s.coeff(0).is_zero());
        assert_eq!(s.coeff(1), &qp(&[(1, 1)]));
        assert_eq!(s.coeff(4), &qp(&[(4, 2)]));
        let s = rr_q_series(RrKind::Thm95, 2, None);
        assert_eq!(s.coeff(2), &qp(&[(2, 2)]));
        assert_eq!(squares_polynomial(2), MultiPoly::var_pow(Var::Q, 2).scale(&rat(2, 1)));
        assert!(squares_polynomial(0).is_one());
        assert_eq!(squares_total(3), 9);
    }

    #[test]
    fn q_sums_match_partition_sides() {
        for kind in [RrKind::Prop91, RrKind::Prop92Middle, RrKind::Prop92Right] {
            assert_eq!(rr_q_series(kind, 10, Some(10)), rr_partition_side(kind, 10, Some(10)), "{kind:?}");
        }
        assert_eq!(rr_q_series(RrKind::Thm95, 12, None), rr_partition_side(RrKind::Thm95, 12, None));
    }

    #[test]
    fn values_at_one() {
        let counts = partition_counts(12);
        for n in 0..=12u32 {
            let f = squares_polynomial(n);
            let one = rat(1, 1);
            assert_eq!(f.eval_var(Var::Q, &one).constant_term(), rat(counts[n as usize] as i64, 1));
            let d = f.derivative(Var::Q).eval_var(Var::Q, &one).constant_term();
            assert_eq!(d, rat(squares_total(n) as i64, 1));
        }
    }

    #[test]
    fn classes() {
        let d = equivalence_classes_d(2);
        assert_eq!(d.len(), 1);
        assert_eq!(d[&2], vec![Partition::new(vec![2]), Partition::new(vec![1, 1])]);
        assert_eq!(equivalence_classes_d(0)[&0], vec![Partition::empty()]);
        let f = squares_polynomial(4);
        for (j, ls) in equivalence_classes_d(4) {
            assert_eq!(q_coeff(&f, j as u32), rat(ls.len() as i64, 1));
        }
    }
}
