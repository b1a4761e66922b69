//! Schur and elementary symmetric polynomials in `y_1..y_m`, and flattening.

use crate::arith::{factorial, Monomial, MultiPoly, Rational, Var};
use crate::error::{Error, Result};
use crate::partition::{dim_sytx, partitions_of, Partition};
use crate::perm::stirling2;

/// Largest `|λ|` accepted by [`schur_poly`].
pub const MAX_SCHUR_SIZE: u32 = 8;
/// Largest variable count accepted by [`schur_poly`].
pub const MAX_SCHUR_VARS: usize = 6;

/// `s_λ(y_1, ..., y_m)` as a sum over semistandard tableaux.
pub fn schur_poly(lambda: &Partition, m: usize) -> Result<MultiPoly> {
    if lambda.size() > MAX_SCHUR_SIZE || m > MAX_SCHUR_VARS {
        return Err(Error::BudgetExceeded(format!(
            "schur_poly needs |λ| <= {MAX_SCHUR_SIZE} and m <= {MAX_SCHUR_VARS}, got |λ| = {} and m = {m}",
            lambda.size()
        )));
    }
    let shape: Vec<usize> = lambda.parts().iter().map(|&p| p as usize).collect();
    let cells: Vec<(usize, usize)> =
        shape.iter().enumerate().flat_map(|(i, &len)| (0..len).map(move |j| (i, j))).collect();
    let mut filling: Vec<Vec<usize>> = shape.iter().map(|&len| vec![0; len]).collect();
    let mut out = MultiPoly::zero();
    fill(&cells, 0, m, &mut filling, &mut out);
    Ok(out)
}

fn fill(cells: &[(usize, usize)], idx: usize, m: usize, t: &mut [Vec<usize>], out: &mut MultiPoly) {
    if idx == cells.len() {
        let mut mono = Monomial::ONE;
        for &e in t.iter().flatten() {
            mono = mono.mul(&Monomial::var(Var::y(e)));
        }
        *out += &MultiPoly::monomial(Rational::from_integer(1.into()), mono);
        return;
    }
    let (i, j) = cells[idx];
    let lo_row = if j > 0 { t[i][j - 1] } else { 1 };
    let lo_col = if i > 0 { t[i - 1][j] + 1 } else { 1 };
    for e in lo_row.max(lo_col)..=m {
        t[i][j] = e;
        fill(cells, idx + 1, m, t, out);
    }
}

/// `e_j(y_1, ..., y_m)`; zero for `j > m`.
pub fn elementary_poly(j: usize, m: usize) -> MultiPoly {
    fn go(start: usize, left: usize, m: usize, mono: Monomial, out: &mut MultiPoly) {
        if left == 0 {
            *out += &MultiPoly::monomial(Rational::from_integer(1.into()), mono);
            return;
        }
        for i in start..=m {
            if m - i + 1 < left {
                break;
            }
            go(i + 1, left - 1, m, mono.mul(&Monomial::var(Var::y(i))), out);
        }
    }
    let mut out = MultiPoly::zero();
    go(1, j, m, Monomial::ONE, &mut out);
    out
}

/// Caps every exponent at 1, summing coefficients of monomials that collide.
pub fn flatten(p: &MultiPoly) -> Result<MultiPoly> {
    let mut out = MultiPoly::zero();
    for (mono, c) in p.terms() {
        let mut flat = Monomial::ONE;
        for v in mono.support() {
            if !v.is_y() {
                return Err(Error::VariableOutOfScope(v.name()));
            }
            flat.set_exp(v, 1);
        }
        out += &MultiPoly::monomial(c.clone(), flat);
    }
    Ok(out)
}

/// Both sides of the flattening identity at one `(k, m)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlatteningCheck {
    pub holds: bool,
    /// `flatten(sum_{λ ⊢ k} f_λ s_λ(y_1..y_m))`.
    pub lhs: MultiPoly,
    /// `sum_j j! S(k, j) e_j(y_1..y_m)`.
    pub rhs: MultiPoly,
}

/// Largest `k` and `m` accepted by [`problem_6_4_check`].
pub const MAX_FLATTEN_K: u32 = 6;
pub const MAX_FLATTEN_M: usize = 5;

pub fn problem_6_4_check(k: u32, m: usize) -> Result<FlatteningCheck> {
    if k > MAX_FLATTEN_K || m > MAX_FLATTEN_M {
        return Err(Error::BudgetExceeded(format!(
            "flattening check needs k <= {MAX_FLATTEN_K} and m <= {MAX_FLATTEN_M}, got k = {k} and m = {m}"
        )));
    }
    let mut sum = MultiPoly::zero();
    for l in partitions_of(k) {
        let s = schur_poly(&l, m)?;
        sum += &s.scale(&Rational::from_integer(dim_sytx(&l)));
    }
    let lhs = flatten(&sum)?;
    let mut rhs = MultiPoly::zero();
    for j in 0..=k {
        let c = Rational::from_integer(factorial(j) * stirling2(k, j));
        rhs += &elementary_poly(j as usize, m).scale(&c);
    }
    Ok(FlatteningCheck { holds: lhs == rhs, lhs, rhs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::partition::cell_stats;

    fn y(i: usize) -> MultiPoly {
        MultiPoly::var(Var::y(i))
    }

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec())
    }

    #[test]
    fn schur_examples() {
        assert_eq!(schur_poly(&p(&[1]), 2).unwrap(), &y(1) + &y(2));
        let expected = &(&(&y(1) * &y(1)) + &(&y(1) * &y(2))) + &(&y(2) * &y(2));
        assert_eq!(schur_poly(&p(&[2]), 2).unwrap(), expected);
        assert_eq!(schur_poly(&p(&[1, 1]), 2).unwrap(), &y(1) * &y(2));
        assert!(schur_poly(&p(&[1, 1, 1]), 2).unwrap().is_zero());
        assert!(schur_poly(&Partition::empty(), 3).unwrap().is_one());
        assert!(matches!(schur_poly(&p(&[9]), 2), Err(Error::BudgetExceeded(_))));
        assert!(matches!(schur_poly(&p(&[1]), 7), Err(Error::BudgetExceeded(_))));
    }

    #[test]
    fn schur_is_symmetric() {
        for n in 0..=6 {
            for l in partitions_of(n) {
                let s = schur_poly(&l, 4).unwrap();
                for i in 1..4 {
                    let swapped = MultiPoly::from_terms(s.terms().map(|(mono, c)| {
                        let mut m2 = *mono;
                        m2.set_exp(Var::y(i), mono.exp(Var::y(i + 1)));
                        m2.set_exp(Var::y(i + 1), mono.exp(Var::y(i)));
                        (m2, c.clone())
                    }));
                    assert_eq!(swapped, s, "{l} swap {i}");
                }
            }
        }
    }

    #[test]
    fn hook_content_evaluation() {
        for size in 0..=6 {
            for l in partitions_of(size) {
                for n in 1..=5usize {
                    let s = schur_poly(&l, n).unwrap();
                    let mut v = s;
                    for i in 1..=n {
                        v = v.eval_var(Var::y(i), &rat(1, 1));
                    }
                    let hc: Rational =
                        cell_stats(&l).iter().map(|c| rat(n as i64 + c.content, c.hook as i64)).product();
                    assert_eq!(v.constant_term(), hc, "{l} n={n}");
                }
            }
        }
    }

    #[test]
    fn elementary_examples() {
        assert_eq!(elementary_poly(1, 2), &y(1) + &y(2));
        let e2 = &(&(&y(1) * &y(2)) + &(&y(1) * &y(3))) + &(&y(2) * &y(3));
        assert_eq!(elementary_poly(2, 3), e2);
        assert!(elementary_poly(4, 3).is_zero());
        assert!(elementary_poly(0, 3).is_one());
    }

    #[test]
    fn flatten_examples() {
        assert_eq!(flatten(&(&y(1) * &y(1))).unwrap(), y(1));
        let s2 = schur_poly(&p(&[2]), 2).unwrap();
        let expected = &(&y(1) + &(&y(1) * &y(2))) + &y(2);
        assert_eq!(flatten(&s2).unwrap(), expected);
        let p3 = (&y(1).pow(3) * &y(2)).scale(&rat(3, 1));
        assert_eq!(flatten(&p3).unwrap(), (&y(1) * &y(2)).scale(&rat(3, 1)));
        assert_eq!(flatten(&MultiPoly::var(Var::T)), Err(Error::VariableOutOfScope("t".into())));
        let f = flatten(&s2).unwrap();
        assert_eq!(flatten(&f).unwrap(), f);
    }

    #[test]
    fn flattening_identity() {
        let c = problem_6_4_check(2, 2).unwrap();
        assert!(c.holds);
        assert_eq!(c.rhs, &elementary_poly(1, 2) + &elementary_poly(2, 2).scale(&rat(2, 1)));
        for k in 0..=4 {
            for m in 1..=4 {
                assert!(problem_6_4_check(k, m).unwrap().holds, "k={k} m={m}");
            }
        }
        assert!(problem_6_4_check(7, 2).is_err());
    }
}
