//! Quotients of multivariate polynomials in canonical form.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::gcd::poly_gcd;
use super::poly::MultiPoly;
use super::var::Var;
use super::Rational;
use crate::error::{Error, Result};

/// A rational function `num / den`.
///
/// Canonical form: `gcd(num, den) = 1` and the lex-leading coefficient of
/// `den` is 1. Two rational functions are equal as values iff their stored
/// representatives are equal. Zero is `0 / 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: MultiPoly,
    den: MultiPoly,
}

impl RatFunc {
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: MultiPoly, den: MultiPoly) -> Self {
        if num.is_zero() {
            return RatFunc::zero();
        }
        if let Some(c) = den.constant_value() {
            return RatFunc { num: num.scale(&c.recip()), den: MultiPoly::one() };
        }
        let g = poly_gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).expect("gcd divides numerator"), den.div_exact(&g).expect("gcd divides denominator"))
        };
        let lc = den.leading_term().unwrap().1.clone();
        RatFunc { num: num.scale(&lc.recip()), den: den.scale(&lc.recip()) }
    }

    pub fn zero() -> Self {
        RatFunc { num: MultiPoly::zero(), den: MultiPoly::one() }
    }

    pub fn one() -> Self {
        RatFunc::from(MultiPoly::one())
    }

    pub fn from_int(c: i64) -> Self {
        RatFunc::from(MultiPoly::from_int(c))
    }

    pub fn constant(c: Rational) -> Self {
        RatFunc::from(MultiPoly::constant(c))
    }

    pub fn var(v: Var) -> Self {
        RatFunc::from(MultiPoly::var(v))
    }

    pub fn num(&self) -> &MultiPoly {
        &self.num
    }

    pub fn den(&self) -> &MultiPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The numerator when the denominator is 1.
    pub fn as_polynomial(&self) -> Option<&MultiPoly> {
        self.is_polynomial().then_some(&self.num)
    }

    /// Converts to a polynomial or reports [`Error::NonPolynomialResult`].
    pub fn into_polynomial(self) -> Result<MultiPoly> {
        if self.is_polynomial() {
            Ok(self.num)
        } else {
            Err(Error::NonPolynomialResult(self.to_string()))
        }
    }

    pub fn inv(&self) -> Result<RatFunc> {
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn scale(&self, c: &Rational) -> RatFunc {
        if c.is_zero() {
            return RatFunc::zero();
        }
        RatFunc { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn div(&self, rhs: &RatFunc) -> Result<RatFunc> {
        if rhs.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, e: u32) -> RatFunc {
        // numerator and denominator stay coprime under powers
        let den = self.den.pow(e);
        let num = self.num.pow(e);
        if den.is_one() {
            return RatFunc { num, den };
        }
        let lc = den.leading_term().unwrap().1.clone();
        RatFunc { num: num.scale(&lc.recip()), den: den.scale(&lc.recip()) }
    }

    /// Substitutes a rational value for `v`. Fails if the denominator vanishes.
    pub fn eval_var(&self, v: Var, value: &Rational) -> Result<RatFunc> {
        RatFunc::new(self.num.eval_var(v, value), self.den.eval_var(v, value))
    }

    /// Equality by cross-multiplication; agrees with `==` on canonical forms.
    pub fn cross_eq(&self, other: &RatFunc) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Default for RatFunc {
    fn default() -> Self {
        RatFunc::zero()
    }
}

impl From<MultiPoly> for RatFunc {
    fn from(p: MultiPoly) -> Self {
        RatFunc { num: p, den: MultiPoly::one() }
    }
}

impl From<&MultiPoly> for RatFunc {
    fn from(p: &MultiPoly) -> Self {
        RatFunc::from(p.clone())
    }
}

impl From<Rational> for RatFunc {
    fn from(c: Rational) -> Self {
        RatFunc::constant(c)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

impl Add<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            if self.den.is_one() {
                return RatFunc::from(&self.num + &rhs.num);
            }
            return RatFunc::reduce(&self.num + &rhs.num, self.den.clone());
        }
        if rhs.den.is_one() {
            return RatFunc::reduce(&self.num + &(&rhs.num * &self.den), self.den.clone());
        }
        if self.den.is_one() {
            return RatFunc::reduce(&(&self.num * &rhs.den) + &rhs.num, rhs.den.clone());
        }
        let g = poly_gcd(&self.den, &rhs.den);
        let d1 = self.den.div_exact(&g).unwrap();
        let d2 = rhs.den.div_exact(&g).unwrap();
        let num = &(&self.num * &d2) + &(&rhs.num * &d1);
        RatFunc::reduce(num, &d1 * &rhs.den)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl Sub<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Mul<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc::from(&self.num * &rhs.num);
        }
        // cross-cancel so the product stays reduced
        let g1 = poly_gcd(&self.num, &rhs.den);
        let g2 = poly_gcd(&rhs.num, &self.den);
        let n1 = self.num.div_exact(&g1).unwrap();
        let d2 = rhs.den.div_exact(&g1).unwrap();
        let n2 = rhs.num.div_exact(&g2).unwrap();
        let d1 = self.den.div_exact(&g2).unwrap();
        let num = &n1 * &n2;
        let den = &d1 * &d2;
        if let Some(c) = den.constant_value() {
            return RatFunc { num: num.scale(&c.recip()), den: MultiPoly::one() };
        }
        let lc = den.leading_term().unwrap().1.clone();
        RatFunc { num: num.scale(&lc.recip()), den: den.scale(&lc.recip()) }
    }
}

impl Mul<&MultiPoly> for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &MultiPoly) -> RatFunc {
        self * &RatFunc::from(rhs)
    }
}

impl Div<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    /// Panics on division by zero; use [`RatFunc::div`] for a checked version.
    fn div(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::div(self, rhs).expect("division by zero rational function")
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: RatFunc) -> RatFunc {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: &RatFunc) -> RatFunc {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl std::iter::Sum for RatFunc {
    fn sum<I: Iterator<Item = RatFunc>>(iter: I) -> RatFunc {
        iter.fold(RatFunc::zero(), |acc, x| &acc + &x)
    }
}

impl std::iter::Product for RatFunc {
    fn product<I: Iterator<Item = RatFunc>>(iter: I) -> RatFunc {
        iter.fold(RatFunc::one(), |acc, x| &acc * &x)
    }
}

/// Builds `prod num_i / prod den_i` with a single reduction at the end.
pub fn ratfunc_product<I>(factors: I) -> Result<RatFunc>
where
    I: IntoIterator<Item = (MultiPoly, MultiPoly)>,
{
    let mut num = MultiPoly::one();
    let mut den = MultiPoly::one();
    for (n, d) in factors {
        num = &num * &n;
        den = &den * &d;
        if num.is_zero() {
            return Ok(RatFunc::zero());
        }
    }
    RatFunc::new(num, den)
}

impl RatFunc {
    /// True when `den` is 1 and `num` is the constant `1`.
    pub fn is_unit_constant(&self) -> bool {
        self.den.is_one() && self.num.constant_value().is_some_and(|c| c.is_one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn q() -> MultiPoly {
        MultiPoly::var(Var::Q)
    }

    #[test]
    fn reduces_common_factor() {
        let one = MultiPoly::one();
        let num = &(&one - &q()) * &(&one + &q());
        let den = (&one - &q()).scale(&rat(3, 1));
        let r = RatFunc::new(num, den).unwrap();
        assert!(r.is_polynomial());
        assert_eq!(r.num().to_string(), "1/3 + 1/3*q");
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(RatFunc::new(MultiPoly::one(), MultiPoly::zero()), Err(Error::ZeroDenominator));
    }

    #[test]
    fn sum_of_partial_fractions() {
        let one = MultiPoly::one();
        let a = RatFunc::new(one.clone(), &one - &q()).unwrap();
        let b = RatFunc::new(one.clone(), &one + &q()).unwrap();
        let s = &a + &b;
        // 1/(1-q) + 1/(1+q) = 2/(1-q^2)
        let expected = RatFunc::new(MultiPoly::from_int(2), &one - &(&q() * &q())).unwrap();
        assert_eq!(s, expected);
        assert!(s.cross_eq(&expected));
    }

    #[test]
    fn canonical_denominator_sign() {
        let one = MultiPoly::one();
        let a = RatFunc::new(one.clone(), &one - &q()).unwrap();
        let b = RatFunc::new(-&one, &q() - &one).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn multiply_and_invert() {
        let one = MultiPoly::one();
        let a = RatFunc::new(&one + &q(), &one - &q()).unwrap();
        let prod = &a * &a.inv().unwrap();
        assert!(prod.is_one());
        assert_eq!(a.pow(2), &a * &a);
    }

    #[test]
    fn non_polynomial_reported() {
        let a = RatFunc::new(MultiPoly::one(), q()).unwrap();
        assert!(matches!(a.into_polynomial(), Err(Error::NonPolynomialResult(_))));
    }
}
