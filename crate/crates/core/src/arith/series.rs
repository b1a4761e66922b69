//! Truncated formal power series in one distinguished variable with
//! rational-function coefficients.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use super::poly::MultiPoly;
use super::ratfunc::RatFunc;
use super::Rational;
use crate::error::{Error, Result};

/// `sum_{n=0}^{order} coeffs[n] * var^n`, everything above `order` discarded.
#[derive(Clone)]
pub struct TruncatedSeries {
    var: String,
    order: usize,
    coeffs: Vec<RatFunc>,
}

/// Binary operations exposed by [`series_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesOp {
    Add,
    Mul,
    Div,
}

/// Unary transcendental operations exposed by [`series_exp_log`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExpLog {
    Exp,
    Log,
}

pub fn series_arith(lhs: &TruncatedSeries, rhs: &TruncatedSeries, op: SeriesOp) -> Result<TruncatedSeries> {
    match op {
        SeriesOp::Add => lhs.add(rhs),
        SeriesOp::Mul => lhs.mul(rhs),
        SeriesOp::Div => lhs.div(rhs),
    }
}

pub fn series_exp_log(s: &TruncatedSeries, op: ExpLog) -> Result<TruncatedSeries> {
    match op {
        ExpLog::Exp => s.exp(),
        ExpLog::Log => s.log(),
    }
}

impl TruncatedSeries {
    pub fn zero(var: &str, order: usize) -> Self {
        TruncatedSeries { var: var.to_string(), order, coeffs: vec![RatFunc::zero(); order + 1] }
    }

    pub fn one(var: &str, order: usize) -> Self {
        let mut s = TruncatedSeries::zero(var, order);
        s.coeffs[0] = RatFunc::one();
        s
    }

    pub fn constant(var: &str, order: usize, c: RatFunc) -> Self {
        let mut s = TruncatedSeries::zero(var, order);
        s.coeffs[0] = c;
        s
    }

    /// `c * var^k`, or zero when `k > order`.
    pub fn monomial(var: &str, order: usize, c: RatFunc, k: usize) -> Self {
        let mut s = TruncatedSeries::zero(var, order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// Builds a series from leading coefficients; missing ones are zero and
    /// extra ones are dropped.
    pub fn from_coeffs(var: &str, order: usize, coeffs: Vec<RatFunc>) -> Self {
        let mut s = TruncatedSeries::zero(var, order);
        for (slot, c) in s.coeffs.iter_mut().zip(coeffs) {
            *slot = c;
        }
        s
    }

    pub fn from_polys(var: &str, order: usize, coeffs: Vec<MultiPoly>) -> Self {
        Self::from_coeffs(var, order, coeffs.into_iter().map(RatFunc::from).collect())
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[RatFunc] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &RatFunc {
        &self.coeffs[n]
    }

    pub fn set_coeff(&mut self, n: usize, c: RatFunc) {
        self.coeffs[n] = c;
    }

    /// Coefficients as polynomials, failing if any is a proper fraction.
    pub fn poly_coeffs(&self) -> Result<Vec<MultiPoly>> {
        self.coeffs.iter().map(|c| c.clone().into_polynomial()).collect()
    }

    /// Re-truncates to a lower order.
    pub fn truncate(&self, order: usize) -> TruncatedSeries {
        assert!(order <= self.order, "cannot extend a truncated series");
        TruncatedSeries { var: self.var.clone(), order, coeffs: self.coeffs[..=order].to_vec() }
    }

    fn check_compatible(&self, rhs: &TruncatedSeries) -> Result<()> {
        if self.var != rhs.var {
            return Err(Error::SeriesMismatch(format!("variable {} vs {}", self.var, rhs.var)));
        }
        if self.order != rhs.order {
            return Err(Error::SeriesMismatch(format!("order {} vs {}", self.order, rhs.order)));
        }
        Ok(())
    }

    pub fn add(&self, rhs: &TruncatedSeries) -> Result<TruncatedSeries> {
        self.check_compatible(rhs)?;
        Ok(self.zip_with(rhs, |a, b| a + b))
    }

    pub fn sub(&self, rhs: &TruncatedSeries) -> Result<TruncatedSeries> {
        self.check_compatible(rhs)?;
        Ok(self.zip_with(rhs, |a, b| a - b))
    }

    fn zip_with(&self, rhs: &TruncatedSeries, f: impl Fn(&RatFunc, &RatFunc) -> RatFunc) -> Self {
        TruncatedSeries {
            var: self.var.clone(),
            order: self.order,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| f(a, b)).collect(),
        }
    }

    pub fn neg(&self) -> TruncatedSeries {
        self.map_coeffs(|c| -c)
    }

    pub fn map_coeffs(&self, f: impl Fn(&RatFunc) -> RatFunc) -> TruncatedSeries {
        TruncatedSeries { var: self.var.clone(), order: self.order, coeffs: self.coeffs.iter().map(f).collect() }
    }

    pub fn scale(&self, c: &RatFunc) -> TruncatedSeries {
        self.map_coeffs(|x| x * c)
    }

    pub fn mul(&self, rhs: &TruncatedSeries) -> Result<TruncatedSeries> {
        self.check_compatible(rhs)?;
        let n = self.order;
        let mut out = vec![RatFunc::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..=n - i].iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Ok(TruncatedSeries { var: self.var.clone(), order: n, coeffs: out })
    }

    /// Multiplicative inverse; the constant term must be nonzero.
    pub fn inverse(&self) -> Result<TruncatedSeries> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::DivisionByNonUnit);
        }
        let inv0 = c0.inv()?;
        let n = self.order;
        let mut out: Vec<RatFunc> = Vec::with_capacity(n + 1);
        out.push(inv0.clone());
        for k in 1..=n {
            let mut acc = RatFunc::zero();
            for j in 1..=k {
                let a = &self.coeffs[j];
                if a.is_zero() {
                    continue;
                }
                acc = &acc + &(a * &out[k - j]);
            }
            out.push(-&(&acc * &inv0));
        }
        Ok(TruncatedSeries { var: self.var.clone(), order: n, coeffs: out })
    }

    pub fn div(&self, rhs: &TruncatedSeries) -> Result<TruncatedSeries> {
        self.check_compatible(rhs)?;
        let c0 = &rhs.coeffs[0];
        if c0.is_zero() {
            return Err(Error::DivisionByNonUnit);
        }
        let inv0 = c0.inv()?;
        let n = self.order;
        let mut out: Vec<RatFunc> = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut acc = self.coeffs[k].clone();
            for j in 1..=k {
                let b = &rhs.coeffs[j];
                if b.is_zero() {
                    continue;
                }
                acc = &acc - &(b * &out[k - j]);
            }
            out.push(&acc * &inv0);
        }
        Ok(TruncatedSeries { var: self.var.clone(), order: n, coeffs: out })
    }

    /// Formal derivative, reported at the same order (top coefficient 0).
    pub fn derivative(&self) -> TruncatedSeries {
        let mut out = TruncatedSeries::zero(&self.var, self.order);
        for k in 1..=self.order {
            out.coeffs[k - 1] = self.coeffs[k].scale(&int(k));
        }
        out
    }

    /// `exp(s)`; requires a zero constant term.
    ///
    /// Uses `n E_n = sum_{k=1}^n k S_k E_{n-k}`.
    pub fn exp(&self) -> Result<TruncatedSeries> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::BadConstantTerm { op: "exp", expected: "0" });
        }
        let n = self.order;
        let mut out: Vec<RatFunc> = Vec::with_capacity(n + 1);
        out.push(RatFunc::one());
        for m in 1..=n {
            let mut acc = RatFunc::zero();
            for k in 1..=m {
                let s = &self.coeffs[k];
                if s.is_zero() {
                    continue;
                }
                acc = &acc + &(&s.scale(&int(k)) * &out[m - k]);
            }
            out.push(acc.scale(&Rational::new(BigInt::one(), BigInt::from(m))));
        }
        Ok(TruncatedSeries { var: self.var.clone(), order: n, coeffs: out })
    }

    /// `log(s)`; requires a constant term of exactly 1.
    ///
    /// Uses `n L_n = n S_n - sum_{k=1}^{n-1} k L_k S_{n-k}`.
    pub fn log(&self) -> Result<TruncatedSeries> {
        if !self.coeffs[0].is_one() {
            return Err(Error::BadConstantTerm { op: "log", expected: "1" });
        }
        let n = self.order;
        let mut out: Vec<RatFunc> = Vec::with_capacity(n + 1);
        out.push(RatFunc::zero());
        for m in 1..=n {
            let mut acc = self.coeffs[m].scale(&int(m));
            for (k, l) in out.iter().enumerate().skip(1) {
                let s = &self.coeffs[m - k];
                if s.is_zero() || l.is_zero() {
                    continue;
                }
                acc = &acc - &(&l.scale(&int(k)) * s);
            }
            out.push(acc.scale(&Rational::new(BigInt::one(), BigInt::from(m))));
        }
        Ok(TruncatedSeries { var: self.var.clone(), order: n, coeffs: out })
    }

    /// `s^e = exp(e * log(s))` for a formal exponent; constant term must be 1.
    pub fn pow_formal(&self, e: &RatFunc) -> Result<TruncatedSeries> {
        self.log()?.scale(e).exp()
    }

    /// Integer power by repeated squaring (negative powers invert first).
    pub fn powi(&self, e: i64) -> Result<TruncatedSeries> {
        let mut base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut k = e.unsigned_abs();
        let mut acc = TruncatedSeries::one(&self.var, self.order);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Index of the first coefficient where the two series differ.
    pub fn first_difference(&self, other: &TruncatedSeries) -> Option<usize> {
        let n = self.order.min(other.order);
        (0..=n).find(|&k| self.coeffs[k] != other.coeffs[k])
    }
}

impl PartialEq for TruncatedSeries {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.coeffs == other.coeffs
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let wrap = c.num().num_terms() > 1 || !c.is_polynomial();
            match (k, wrap) {
                (0, _) => write!(f, "{c}")?,
                (_, true) => write!(f, "({c})*{}^{k}", self.var)?,
                (_, false) if c.is_one() => write!(f, "{}^{k}", self.var)?,
                (_, false) => write!(f, "{c}*{}^{k}", self.var)?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O({}^{})", self.var, self.order + 1)
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncatedSeries({self})")
    }
}

fn int(k: usize) -> Rational {
    Rational::from_integer(BigInt::from(k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, Var};

    fn x_series(order: usize, coeffs: &[i64]) -> TruncatedSeries {
        TruncatedSeries::from_coeffs("x", order, coeffs.iter().map(|&c| RatFunc::from_int(c)).collect())
    }

    fn rats(s: &TruncatedSeries) -> Vec<Rational> {
        s.coeffs().iter().map(|c| c.num().constant_term()).collect()
    }

    #[test]
    fn self_division_is_one() {
        let s = x_series(5, &[1, -1]);
        assert_eq!(series_arith(&s, &s, SeriesOp::Div).unwrap(), TruncatedSeries::one("x", 5));
    }

    #[test]
    fn geometric_series() {
        let one = TruncatedSeries::one("x", 3);
        let d = x_series(3, &[1, -1]);
        let g = series_arith(&one, &d, SeriesOp::Div).unwrap();
        // oracle: 1/(1-x) = sum x^k
        assert_eq!(g, x_series(3, &[1, 1, 1, 1]));
    }

    #[test]
    fn product_with_symbolic_coefficients() {
        let t = RatFunc::var(Var::T);
        let v = RatFunc::var(Var::V);
        let a = TruncatedSeries::from_coeffs("x", 2, vec![RatFunc::one(), t.clone()]);
        let b = TruncatedSeries::from_coeffs("x", 2, vec![RatFunc::one(), v.clone()]);
        let p = series_arith(&a, &b, SeriesOp::Mul).unwrap();
        assert_eq!(p.coeff(1), &(&t + &v));
        assert_eq!(p.coeff(2), &(&t * &v));
    }

    #[test]
    fn division_by_non_unit() {
        let s = x_series(3, &[0, 1]);
        assert_eq!(series_arith(&TruncatedSeries::one("x", 3), &s, SeriesOp::Div), Err(Error::DivisionByNonUnit));
    }

    #[test]
    fn exp_and_log_examples() {
        assert_eq!(series_exp_log(&TruncatedSeries::zero("x", 4), ExpLog::Exp).unwrap(), TruncatedSeries::one("x", 4));
        let e = series_exp_log(&x_series(3, &[0, 1]), ExpLog::Exp).unwrap();
        // oracle: 1/k!
        assert_eq!(rats(&e), vec![rat(1, 1), rat(1, 1), rat(1, 2), rat(1, 6)]);
        let l = series_exp_log(&x_series(3, &[1, -1]), ExpLog::Log).unwrap();
        // oracle: Mercator series -x^k/k
        assert_eq!(rats(&l), vec![rat(0, 1), rat(-1, 1), rat(-1, 2), rat(-1, 3)]);
    }

    #[test]
    fn bad_constant_terms() {
        assert!(matches!(x_series(3, &[1, 1]).exp(), Err(Error::BadConstantTerm { .. })));
        assert!(matches!(x_series(3, &[2, 1]).log(), Err(Error::BadConstantTerm { .. })));
    }

    #[test]
    fn mismatched_operands() {
        let a = x_series(3, &[1]);
        let b = x_series(4, &[1]);
        assert!(matches!(a.add(&b), Err(Error::SeriesMismatch(_))));
        let c = TruncatedSeries::one("y", 3);
        assert!(matches!(a.mul(&c), Err(Error::SeriesMismatch(_))));
    }

    #[test]
    fn inverse_and_powers() {
        let s = x_series(6, &[1, 2, 3]);
        let inv = s.inverse().unwrap();
        assert_eq!(s.mul(&inv).unwrap(), TruncatedSeries::one("x", 6));
        assert_eq!(s.powi(-2).unwrap(), inv.mul(&inv).unwrap());
        let half = s.pow_formal(&RatFunc::constant(rat(1, 2))).unwrap();
        assert_eq!(half.mul(&half).unwrap(), s);
    }

    #[test]
    fn display() {
        let s = x_series(2, &[1, 0, -3]);
        assert_eq!(s.to_string(), "1 + -3*x^2 + O(x^3)");
    }
}
