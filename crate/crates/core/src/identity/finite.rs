//! Finite identities: the hook moment sum and the cycle-index determinant.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{binomial, factorial, Rational};
use crate::error::{Error, Result};
use crate::partition::{dim_sytx, hooks, partitions_of};
use crate::perm::cycle_types;

/// Row-major square matrix.
pub type Matrix = Vec<Vec<Rational>>;

/// Both sides of the hook moment identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Corollary52 {
    pub lhs: Rational,
    pub rhs: Rational,
}

/// `lhs = (1/n!) sum_{λ ⊢ n} f_λ^2 sum_u prod_{j<r} (h_u^2 - j^2)` and the
/// closed form in binomials.
pub fn corollary_5_2(n: u32, r: u32) -> Corollary52 {
    let mut sum = BigInt::zero();
    for l in partitions_of(n) {
        let inner: BigInt = hooks(&l)
            .into_iter()
            .map(|h| {
                let h2 = BigInt::from(h).pow(2);
                (0..r).map(|j| &h2 - BigInt::from(j).pow(2)).product::<BigInt>()
            })
            .sum();
        sum += dim_sytx(&l).pow(2) * inner;
    }
    let lhs = Rational::new(sum, factorial(n));

    let (n, r) = (n as i64, r as i64);
    let first = Rational::new(
        binomial(2 * r + 1, r + 1).pow(2) * binomial(n, r + 1) * factorial(r as u32),
        BigInt::from(2 * r + 1),
    );
    let second = Rational::new(
        binomial(2 * r + 2, r + 1) * binomial(2 * r - 2, r - 1) * binomial(n, r) * factorial(r as u32 + 1),
        BigInt::from(8 * r + 4),
    );
    Corollary52 { lhs, rhs: first + second }
}

/// Sign attached to each cycle type in the cycle-index determinant.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SignConvention {
    /// `(-1)^{κ - 1}`.
    CycleCount,
    /// `(-1)^{n - κ}`, the sign of the permutation.
    Newton,
}

/// Largest matrix size accepted by the determinant routines.
pub const MAX_DET_SIZE: usize = 8;

fn check_square(m: &Matrix) -> Result<usize> {
    let n = m.len();
    if m.iter().any(|row| row.len() != n) {
        return Err(Error::NotSquare);
    }
    if n > MAX_DET_SIZE {
        return Err(Error::BudgetExceeded(format!("matrix size {n} exceeds {MAX_DET_SIZE}")));
    }
    Ok(n)
}

fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| (0..n).map(|k| &a[i][k] * &b[k][j]).sum()).collect()).collect()
}

/// `(1/n!) sum_π sign(π) t_1^{c_1} ... t_n^{c_n}` with `t_i = tr(M^i)`.
pub fn cycle_index_determinant(m: &Matrix, convention: SignConvention) -> Result<Rational> {
    let n = check_square(m)?;
    let mut traces = vec![Rational::zero(); n + 1];
    let mut power = m.clone();
    for (i, t) in traces.iter_mut().enumerate().skip(1) {
        if i > 1 {
            power = mat_mul(&power, m);
        }
        *t = (0..n).map(|k| power[k][k].clone()).sum();
    }
    let mut acc = Rational::zero();
    for ct in cycle_types(n as u32) {
        let kappa = ct.cycles() as i64;
        let odd = match convention {
            SignConvention::CycleCount => (kappa - 1).rem_euclid(2) == 1,
            SignConvention::Newton => (n as i64 - kappa) % 2 == 1,
        };
        let mut term = Rational::from_integer(ct.class_size().clone());
        for (&j, &c) in ct.multiplicities() {
            term *= num_traits::pow(traces[j as usize].clone(), c as usize);
        }
        if odd {
            acc -= term;
        } else {
            acc += term;
        }
    }
    Ok(acc / Rational::from_integer(factorial(n as u32)))
}

/// Laplace expansion along the first row.
pub fn cofactor_determinant(m: &Matrix) -> Result<Rational> {
    check_square(m)?;
    Ok(laplace(m))
}

fn laplace(m: &Matrix) -> Rational {
    let n = m.len();
    if n == 0 {
        return Rational::one();
    }
    let mut acc = Rational::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Matrix = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, v)| v.clone()).collect())
            .collect();
        let term = &m[0][j] * laplace(&minor);
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn mat(rows: &[&[i64]]) -> Matrix {
        rows.iter().map(|r| r.iter().map(|&v| rat(v, 1)).collect()).collect()
    }

    #[test]
    fn hook_moment_examples() {
        assert_eq!(corollary_5_2(1, 1), Corollary52 { lhs: rat(1, 1), rhs: rat(1, 1) });
        assert_eq!(corollary_5_2(2, 1), Corollary52 { lhs: rat(5, 1), rhs: rat(5, 1) });
        for n in 1..=8 {
            for r in 1..=3 {
                let c = corollary_5_2(n, r);
                assert_eq!(c.lhs, c.rhs, "n={n} r={r}");
            }
        }
    }

    #[test]
    fn newton_matches_cofactor() {
        let cases = [
            (mat(&[&[1, 0], &[0, 1]]), 1),
            (mat(&[&[1, 2], &[3, 4]]), -2),
            (mat(&[&[1, 0, 0], &[0, 2, 0], &[0, 0, 3]]), 6),
            (mat(&[&[2, -1, 0, 5], &[1, 3, 2, 0], &[0, 4, -2, 1], &[7, 0, 1, 1]]), 0),
        ];
        for (m, d) in cases.iter().take(3) {
            assert_eq!(cycle_index_determinant(m, SignConvention::Newton).unwrap(), rat(*d, 1));
            assert_eq!(cofactor_determinant(m).unwrap(), rat(*d, 1));
        }
        let m = &cases[3].0;
        assert_eq!(cycle_index_determinant(m, SignConvention::Newton).unwrap(), cofactor_determinant(m).unwrap());
    }

    #[test]
    fn cycle_count_sign_flips_even_sizes() {
        let id2 = mat(&[&[1, 0], &[0, 1]]);
        assert_eq!(cycle_index_determinant(&id2, SignConvention::CycleCount).unwrap(), rat(-1, 1));
        let id3 = mat(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(cycle_index_determinant(&id3, SignConvention::CycleCount).unwrap(), rat(1, 1));
    }

    #[test]
    fn shape_errors() {
        let bad = mat(&[&[1, 2], &[3]]);
        assert_eq!(cycle_index_determinant(&bad, SignConvention::Newton), Err(Error::NotSquare));
        assert_eq!(cofactor_determinant(&bad), Err(Error::NotSquare));
        let big: Matrix = vec![vec![rat(0, 1); 9]; 9];
        assert!(matches!(cofactor_determinant(&big), Err(Error::BudgetExceeded(_))));
    }
}
