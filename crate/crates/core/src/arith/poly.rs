//! Sparse multivariate polynomials with exact rational coefficients.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::var::{Monomial, Var};
use super::Rational;

/// A polynomial over the global variable set.
///
/// Terms are kept in a map from exponent vector to coefficient; zero
/// coefficients are never stored, so structural equality is polynomial
/// equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, Rational>,
}

/// The three ring operations exposed by [`poly_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

/// Applies one ring operation. Total: every pair of polynomials shares the
/// global variable set.
pub fn poly_arith(lhs: &MultiPoly, rhs: &MultiPoly, op: PolyOp) -> MultiPoly {
    match op {
        PolyOp::Add => lhs + rhs,
        PolyOp::Sub => lhs - rhs,
        PolyOp::Mul => lhs * rhs,
    }
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        MultiPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        MultiPoly::monomial(c, Monomial::ONE)
    }

    pub fn from_int(c: i64) -> Self {
        MultiPoly::constant(Rational::from_integer(BigInt::from(c)))
    }

    pub fn from_bigint(c: BigInt) -> Self {
        MultiPoly::constant(Rational::from_integer(c))
    }

    pub fn var(v: Var) -> Self {
        MultiPoly::monomial(Rational::one(), Monomial::var(v))
    }

    pub fn var_pow(v: Var, e: u32) -> Self {
        MultiPoly::monomial(Rational::one(), Monomial::var_pow(v, e))
    }

    pub fn monomial(c: Rational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MultiPoly { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(iter: I) -> Self {
        let mut p = MultiPoly::zero();
        for (m, c) in iter {
            p.add_term(m, c);
        }
        p
    }

    /// Builds `sum coeffs[i] * v^i`.
    pub fn from_univariate(v: Var, coeffs: &[Rational]) -> Self {
        MultiPoly::from_terms(coeffs.iter().enumerate().map(|(i, c)| (Monomial::var_pow(v, i as u32), c.clone())))
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Monomial::ONE).is_some_and(|c| c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    /// The value of a constant polynomial (zero included).
    pub fn constant_value(&self) -> Option<Rational> {
        if self.is_zero() {
            Some(Rational::zero())
        } else if self.is_constant() {
            Some(self.terms[&Monomial::ONE].clone())
        } else {
            None
        }
    }

    /// Coefficient of the constant monomial.
    pub fn constant_term(&self) -> Rational {
        self.coeff(&Monomial::ONE)
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Terms in ascending lexicographic order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Leading term under lex order over the global variable list.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exp(v)).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    pub fn variables(&self) -> BTreeSet<Var> {
        self.terms.keys().flat_map(|m| m.support()).collect()
    }

    pub fn contains_var(&self, v: Var) -> bool {
        self.terms.keys().any(|m| m.exp(v) > 0)
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly { terms: self.terms.iter().map(|(m, k)| (*m, k * c)).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> MultiPoly {
        MultiPoly { terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect() }
    }

    pub fn pow(&self, mut e: u32) -> MultiPoly {
        let mut base = self.clone();
        let mut acc = MultiPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Substitutes a rational value for `v`.
    pub fn eval_var(&self, v: Var, value: &Rational) -> MultiPoly {
        let mut out = MultiPoly::zero();
        let mut powers: Vec<Rational> = vec![Rational::one()];
        for (m, c) in &self.terms {
            let e = m.exp(v) as usize;
            while powers.len() <= e {
                let next = powers.last().unwrap() * value;
                powers.push(next);
            }
            let mut rest = *m;
            rest.set_exp(v, 0);
            out.add_term(rest, c * &powers[e]);
        }
        out
    }

    /// Substitutes a polynomial for `v`.
    pub fn substitute(&self, v: Var, value: &MultiPoly) -> MultiPoly {
        let coeffs = self.coeffs_in(v);
        let mut out = MultiPoly::zero();
        for c in coeffs.iter().rev() {
            out = &(&out * value) + c;
        }
        out
    }

    /// Evaluates every variable, returning a rational.
    pub fn eval_all(&self, value: impl Fn(Var) -> Rational) -> Rational {
        let mut p = self.clone();
        for v in self.variables() {
            p = p.eval_var(v, &value(v));
        }
        p.constant_term()
    }

    /// Dense coefficient list of `self` viewed as a polynomial in `v` over
    /// the remaining variables.
    pub fn coeffs_in(&self, v: Var) -> Vec<MultiPoly> {
        let deg = self.degree_in(v) as usize;
        let mut out = vec![MultiPoly::zero(); if self.is_zero() { 0 } else { deg + 1 }];
        for (m, c) in &self.terms {
            let e = m.exp(v) as usize;
            let mut rest = *m;
            rest.set_exp(v, 0);
            out[e].terms.insert(rest, c.clone());
        }
        out
    }

    /// Inverse of [`MultiPoly::coeffs_in`].
    pub fn from_coeffs_in(v: Var, coeffs: &[MultiPoly]) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (i, c) in coeffs.iter().enumerate() {
            let shift = Monomial::var_pow(v, i as u32);
            for (m, k) in &c.terms {
                out.add_term(m.mul(&shift), k.clone());
            }
        }
        out
    }

    /// Coefficient of `v^k` as a polynomial in the other variables.
    pub fn coeff_in(&self, v: Var, k: u32) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            if m.exp(v) == k {
                let mut rest = *m;
                rest.set_exp(v, 0);
                out.terms.insert(rest, c.clone());
            }
        }
        out
    }

    pub fn derivative(&self, v: Var) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let e = m.exp(v);
            if e > 0 {
                let mut d = *m;
                d.set_exp(v, e - 1);
                out.add_term(d, c * Rational::from_integer(BigInt::from(e)));
            }
        }
        out
    }

    /// Keeps only terms whose exponent of `v` is at most `max`.
    pub fn truncate_in(&self, v: Var, max: u32) -> MultiPoly {
        MultiPoly { terms: self.terms.iter().filter(|(m, _)| m.exp(v) <= max).map(|(m, c)| (*m, c.clone())).collect() }
    }

    /// Exact division. Returns `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &MultiPoly) -> Option<MultiPoly> {
        let (dm, dc) = d.leading_term()?;
        if let Some(c) = d.constant_value() {
            return Some(self.scale(&c.recip()));
        }
        let (dm, dc) = (*dm, dc.clone());
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero();
        while let Some((rm, rc)) = rem.leading_term() {
            if !dm.divides(rm) {
                return None;
            }
            let qm = dm.quotient_of(rm);
            let qc = rc / &dc;
            rem -= &d.mul_monomial(&qm).scale(&qc);
            quot.add_term(qm, qc);
        }
        Some(quot)
    }

    /// Positive rational `c` such that `self / c` has coprime integer
    /// coefficients. Zero for the zero polynomial.
    pub fn rational_content(&self) -> Rational {
        let mut num = BigInt::zero();
        let mut den = BigInt::one();
        for c in self.terms.values() {
            num = num.gcd(c.numer());
            den = den.lcm(c.denom());
        }
        if num.is_zero() {
            return Rational::zero();
        }
        Rational::new(num, den)
    }

    /// `self` scaled to coprime integer coefficients with positive leading
    /// coefficient.
    pub fn integer_primitive(&self) -> MultiPoly {
        if self.is_zero() {
            return MultiPoly::zero();
        }
        let mut c = self.rational_content();
        if self.leading_term().unwrap().1.is_negative() {
            c = -c;
        }
        self.scale(&c.recip())
    }

    /// `self` scaled so its lex-leading coefficient is 1.
    pub fn monic(&self) -> MultiPoly {
        match self.leading_term() {
            None => MultiPoly::zero(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    /// Dense coefficients when `self` involves at most the variable `v`.
    pub fn univariate_coeffs(&self, v: Var) -> Option<Vec<Rational>> {
        if self.variables().iter().any(|&w| w != v) {
            return None;
        }
        let deg = self.degree_in(v) as usize;
        let mut out = vec![Rational::zero(); deg + 1];
        for (m, c) in &self.terms {
            out[m.exp(v) as usize] = c.clone();
        }
        Some(out)
    }

    /// The single variable of a univariate polynomial, if there is exactly one.
    pub fn sole_variable(&self) -> Option<Var> {
        let vars = self.variables();
        if vars.len() == 1 {
            vars.into_iter().next()
        } else {
            None
        }
    }
}

impl fmt::Display for MultiPoly {
    /// Graded-lex rendering: ascending total degree, and within one degree
    /// the lex-larger monomial first, e.g. `1 + 4*t + t^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| a.degree().cmp(&b.degree()).then(b.cmp(a)));
        for (i, (m, c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({self})")
    }
}

impl From<i64> for MultiPoly {
    fn from(c: i64) -> Self {
        MultiPoly::from_int(c)
    }
}

impl From<Rational> for MultiPoly {
    fn from(c: Rational) -> Self {
        MultiPoly::constant(c)
    }
}

impl From<Var> for MultiPoly {
    fn from(v: Var) -> Self {
        MultiPoly::var(v)
    }
}

impl AddAssign<&MultiPoly> for MultiPoly {
    fn add_assign(&mut self, rhs: &MultiPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl SubAssign<&MultiPoly> for MultiPoly {
    fn sub_assign(&mut self, rhs: &MultiPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c.clone());
        }
    }
}

impl Add<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly { terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: &MultiPoly) -> MultiPoly {
                (&self).$method(rhs)
            }
        }
        impl $tr<MultiPoly> for &MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

impl std::iter::Sum for MultiPoly {
    fn sum<I: Iterator<Item = MultiPoly>>(iter: I) -> MultiPoly {
        let mut acc = MultiPoly::zero();
        for p in iter {
            acc += &p;
        }
        acc
    }
}

impl std::iter::Product for MultiPoly {
    fn product<I: Iterator<Item = MultiPoly>>(iter: I) -> MultiPoly {
        iter.fold(MultiPoly::one(), |acc, p| &acc * &p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn t() -> MultiPoly {
        MultiPoly::var(Var::T)
    }
    fn q() -> MultiPoly {
        MultiPoly::var(Var::Q)
    }

    #[test]
    fn binomial_square() {
        let p = &t() + &MultiPoly::one();
        let sq = poly_arith(&p, &p, PolyOp::Mul);
        assert_eq!(sq.to_string(), "1 + 2*t + t^2");
    }

    #[test]
    fn cancellation_normalizes_to_zero() {
        let p = &MultiPoly::one() + &q();
        let d = poly_arith(&p, &p, PolyOp::Sub);
        assert!(d.is_zero());
        assert_eq!(d.num_terms(), 0);
        assert_eq!(d, MultiPoly::zero());
    }

    #[test]
    fn product_matches_direct_expansion() {
        let a = &t() + &MultiPoly::from_int(2);
        let b = &t() + &MultiPoly::one();
        // (t+2)(t+1) expanded by hand: t^2 + 3t + 2
        let expected = MultiPoly::from_univariate(Var::T, &[rat(2, 1), rat(3, 1), rat(1, 1)]);
        assert_eq!(poly_arith(&a, &b, PolyOp::Mul), expected);
    }

    #[test]
    fn display_signs_and_fractions() {
        let p = MultiPoly::from_univariate(Var::T, &[rat(1, 1), rat(-1, 1), rat(1, 2)]);
        assert_eq!(p.to_string(), "1 - t + 1/2*t^2");
        let m = &t() * &MultiPoly::var(Var::V);
        assert_eq!((&m + &t()).to_string(), "t + t*v");
        assert_eq!((-&t()).to_string(), "-t");
    }

    #[test]
    fn exact_division() {
        let a = &t() + &q();
        let b = &t() - &q();
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&a), Some(b.clone()));
        assert_eq!(prod.div_exact(&(&t() + &MultiPoly::one())), None);
    }

    #[test]
    fn substitution_and_eval() {
        let p = &(&t() * &t()) + &q();
        assert_eq!(p.eval_var(Var::T, &rat(3, 1)), &q() + &MultiPoly::from_int(9));
        let s = p.substitute(Var::T, &(&q() + &MultiPoly::one()));
        assert_eq!(s.to_string(), "1 + 3*q + q^2");
    }

    #[test]
    fn coeffs_in_round_trip() {
        let p = &(&t() * &q()) + &(&q() * &q()) + MultiPoly::from_int(5);
        let c = p.coeffs_in(Var::Q);
        assert_eq!(c.len(), 3);
        assert_eq!(MultiPoly::from_coeffs_in(Var::Q, &c), p);
    }

    #[test]
    fn content() {
        let p = MultiPoly::from_univariate(Var::T, &[rat(2, 3), rat(4, 9)]);
        assert_eq!(p.rational_content(), rat(2, 9));
        assert_eq!(p.integer_primitive().to_string(), "3 + 2*t");
    }
}
