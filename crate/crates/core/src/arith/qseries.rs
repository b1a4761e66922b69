//! Binomial series with formal exponents, q-Pochhammer symbols and Gaussian
//! binomial coefficients.

use num_bigint::BigInt;
use num_traits::One;

use super::poly::MultiPoly;
use super::ratfunc::RatFunc;
use super::series::TruncatedSeries;
use super::var::{Monomial, Var};
use super::Rational;
use crate::error::{Error, Result};

/// `coeff * x^power` where `x` is the series variable and `coeff` is a
/// monomial (or any polynomial) over the global variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesMonomial {
    pub coeff: MultiPoly,
    pub power: usize,
}

impl SeriesMonomial {
    pub fn new(coeff: MultiPoly, power: usize) -> Self {
        SeriesMonomial { coeff, power }
    }

    /// Plain `x^power`.
    pub fn x_pow(power: usize) -> Self {
        SeriesMonomial { coeff: MultiPoly::one(), power }
    }

    /// `self^k`.
    pub fn pow(&self, k: u32) -> SeriesMonomial {
        SeriesMonomial { coeff: self.coeff.pow(k), power: self.power * k as usize }
    }

    pub fn mul(&self, other: &SeriesMonomial) -> SeriesMonomial {
        SeriesMonomial { coeff: &self.coeff * &other.coeff, power: self.power + other.power }
    }
}

/// Length of a q-Pochhammer product.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PochLength {
    Finite(usize),
    Infinite,
}

/// `-log(1 - inner)` truncated at `order`.
pub fn neg_log_one_minus(var: &str, inner: &SeriesMonomial, order: usize) -> Result<TruncatedSeries> {
    if inner.power == 0 {
        return Err(Error::BadConstantTerm { op: "binomial_series", expected: "0 in the inner term" });
    }
    let mut s = TruncatedSeries::zero(var, order);
    let mut k = 1usize;
    while k * inner.power <= order {
        let c = inner.coeff.pow(k as u32).scale(&Rational::new(BigInt::one(), BigInt::from(k)));
        s.set_coeff(k * inner.power, RatFunc::from(c));
        k += 1;
    }
    Ok(s)
}

/// `(1 - inner)^(-exponent)` computed as `exp(exponent * (-log(1 - inner)))`.
///
/// Each coefficient is a polynomial in the exponent's variables.
pub fn binomial_series(
    var: &str,
    exponent: &MultiPoly,
    inner: &SeriesMonomial,
    order: usize,
) -> Result<TruncatedSeries> {
    neg_log_one_minus(var, inner, order)?.scale(&RatFunc::from(exponent)).exp()
}

/// q-Pochhammer `(a; step)_n = prod_{j=0}^{n-1} (1 - a * step^j)` as a series.
///
/// For [`PochLength::Infinite`] the product stops once a factor's power of the
/// series variable exceeds `order`; this needs `step.power >= 1`.
pub fn pochhammer(
    var: &str,
    a: &SeriesMonomial,
    step: &SeriesMonomial,
    n: PochLength,
    order: usize,
) -> Result<TruncatedSeries> {
    let mut acc = TruncatedSeries::one(var, order);
    let mut factor = a.clone();
    let mut j = 0usize;
    loop {
        match n {
            PochLength::Finite(len) if j >= len => break,
            PochLength::Infinite if factor.power > order => break,
            PochLength::Infinite if step.power == 0 => {
                return Err(Error::InvalidArgument("infinite q-Pochhammer needs a step of positive degree".into()))
            }
            _ => {}
        }
        if factor.power <= order {
            let mut term = TruncatedSeries::one(var, order);
            let c0 = if factor.power == 0 {
                RatFunc::from(&MultiPoly::one() - &factor.coeff)
            } else {
                term.set_coeff(factor.power, RatFunc::from(-&factor.coeff));
                RatFunc::one()
            };
            term.set_coeff(0, c0);
            acc = acc.mul(&term)?;
        }
        factor = factor.mul(step);
        j += 1;
    }
    Ok(acc)
}

/// `(q; q)_n` as a polynomial in `q`.
pub fn q_factorial(n: usize) -> MultiPoly {
    let q = Var::Q;
    (1..=n).map(|j| &MultiPoly::one() - &MultiPoly::var_pow(q, j as u32)).product()
}

/// Gaussian binomial coefficient `[n choose k]_q`; zero outside `0 <= k <= n`.
///
/// Built from the q-Pascal rule `[n,k] = [n-1,k-1] + q^k [n-1,k]`.
pub fn gaussian_binomial(n: i64, k: i64) -> MultiPoly {
    if n < 0 || k < 0 || k > n {
        return MultiPoly::zero();
    }
    let (n, k) = (n as usize, k as usize);
    let k = k.min(n - k);
    // row[j] = [m choose j]
    let mut row: Vec<MultiPoly> = vec![MultiPoly::one()];
    for m in 1..=n {
        let mut next = vec![MultiPoly::zero(); (m + 1).min(k + 1)];
        for (j, slot) in next.iter_mut().enumerate() {
            let left = if j >= 1 { row.get(j - 1).cloned().unwrap_or_default() } else { MultiPoly::zero() };
            let right = row.get(j).map(|p| p.mul_monomial(&Monomial::var_pow(Var::Q, j as u32))).unwrap_or_default();
            *slot = &left + &right;
        }
        row = next;
    }
    row.get(k).cloned().unwrap_or_default()
}

/// Coefficient of `q^e` in a polynomial of `q` alone.
pub fn q_coeff(p: &MultiPoly, e: u32) -> Rational {
    p.coeff(&Monomial::var_pow(Var::Q, e))
}
