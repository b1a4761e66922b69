//! Real-root analysis of univariate rational polynomials via Sturm sequences.

use num_traits::{Signed, Zero};

use super::poly::MultiPoly;
use super::Rational;
use crate::error::{Error, Result};

/// Outcome of [`sturm_analysis`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootReport {
    /// Number of distinct real roots.
    pub real_root_count: usize,
    /// `gcd(p, p')` is constant.
    pub all_roots_simple: bool,
    /// Every real root lies in `(-inf, 0)`. Vacuously true with no real roots.
    pub all_roots_negative: bool,
}

/// Dense univariate polynomial, coefficients from degree 0 upward, no
/// trailing zeros (the zero polynomial is empty).
#[derive(Clone, Debug, PartialEq, Eq)]
struct Dense(Vec<Rational>);

impl Dense {
    fn new(mut c: Vec<Rational>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        Dense(c)
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn lead(&self) -> &Rational {
        self.0.last().expect("nonzero polynomial")
    }

    fn derivative(&self) -> Dense {
        Dense::new(self.0.iter().enumerate().skip(1).map(|(i, c)| c * Rational::from_integer(i.into())).collect())
    }

    fn rem(&self, d: &Dense) -> Dense {
        let mut r = self.0.clone();
        let dd = d.degree();
        let lc = d.lead().clone();
        while r.len() > dd && !r.is_empty() {
            let top = r.len() - 1;
            let f = &r[top] / &lc;
            for (i, c) in d.0.iter().enumerate() {
                r[top - dd + i] -= &f * c;
            }
            r.pop();
            while r.last().is_some_and(|x| x.is_zero()) {
                r.pop();
            }
        }
        Dense::new(r)
    }

    /// Scales by a positive rational so coefficients are coprime integers.
    /// Signs are untouched, which is all a Sturm chain needs.
    fn strip_content(&self) -> Dense {
        let p = MultiPoly::from_univariate(super::Var::T, &self.0);
        let c = p.rational_content();
        if c.is_zero() {
            return self.clone();
        }
        Dense(self.0.iter().map(|x| x / &c).collect())
    }

    fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.0.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Sign as x -> +inf (`at_pos`) or x -> -inf.
    fn sign_at_infinity(&self, at_pos: bool) -> i32 {
        let s = if self.lead().is_positive() { 1 } else { -1 };
        if at_pos || self.degree().is_multiple_of(2) {
            s
        } else {
            -s
        }
    }

    fn gcd(&self, other: &Dense) -> Dense {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b).strip_content();
            a = b;
            b = r;
        }
        a
    }
}

fn sturm_chain(p: &Dense) -> Vec<Dense> {
    let mut chain = vec![p.strip_content(), p.derivative().strip_content()];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            break;
        }
        let r = chain[n - 2].rem(&chain[n - 1]);
        if r.is_zero() {
            break;
        }
        let neg = Dense(r.0.iter().map(|c| -c).collect());
        chain.push(neg.strip_content());
    }
    chain
}

fn variations(signs: impl Iterator<Item = i32>) -> usize {
    let mut last = 0;
    let mut count = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

fn sign(r: &Rational) -> i32 {
    if r.is_positive() {
        1
    } else if r.is_negative() {
        -1
    } else {
        0
    }
}

fn as_dense(p: &MultiPoly) -> Result<Dense> {
    if p.is_zero() {
        return Err(Error::InvalidArgument("zero polynomial has no root structure".into()));
    }
    let coeffs = match p.sole_variable() {
        Some(v) => p.univariate_coeffs(v).unwrap(),
        None if p.is_constant() => vec![p.constant_term()],
        None => return Err(Error::NotUnivariate),
    };
    Ok(Dense::new(coeffs))
}

/// Counts distinct real roots, decides simplicity through `gcd(p, p')` and
/// negativity by comparing sign variations at `-inf` and at `0`.
pub fn sturm_analysis(p: &MultiPoly) -> Result<RootReport> {
    let d = as_dense(p)?;
    if d.degree() == 0 {
        return Ok(RootReport { real_root_count: 0, all_roots_simple: true, all_roots_negative: true });
    }
    let chain = sturm_chain(&d);
    let v_neg = variations(chain.iter().map(|q| q.sign_at_infinity(false)));
    let v_pos = variations(chain.iter().map(|q| q.sign_at_infinity(true)));
    let total = v_neg - v_pos;

    let g = d.gcd(&d.derivative());
    let all_roots_simple = g.degree() == 0;

    let zero = Rational::zero();
    let all_roots_negative = if d.eval(&zero).is_zero() {
        false
    } else {
        let v_zero = variations(chain.iter().map(|q| sign(&q.eval(&zero))));
        v_neg - v_zero == total
    };
    Ok(RootReport { real_root_count: total, all_roots_simple, all_roots_negative })
}

/// Coefficients (dense from degree 0) weakly rise and then weakly fall.
pub fn unimodal(p: &MultiPoly) -> Result<bool> {
    let coeffs = match p.sole_variable() {
        Some(v) => p.univariate_coeffs(v).unwrap(),
        None if p.is_constant() => vec![p.constant_term()],
        None => return Err(Error::NotUnivariate),
    };
    Ok(is_unimodal_sequence(&coeffs))
}

pub fn is_unimodal_sequence(c: &[Rational]) -> bool {
    let mut i = 0;
    while i + 1 < c.len() && c[i] <= c[i + 1] {
        i += 1;
    }
    while i + 1 < c.len() && c[i] >= c[i + 1] {
        i += 1;
    }
    i + 1 >= c.len()
}
