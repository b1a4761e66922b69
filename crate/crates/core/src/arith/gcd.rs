//! Multivariate polynomial GCD over the rationals.
//!
//! Recursive primitive polynomial remainder sequences: a polynomial is viewed
//! as univariate in its lowest-indexed variable with coefficients in the
//! remaining variables, contents are split off recursively, and the
//! primitive parts are reduced by pseudo-division.

use num_traits::Zero;

use super::poly::MultiPoly;
use super::var::{Monomial, Var};

/// Greatest common divisor, normalized to a lex-leading coefficient of 1.
/// `gcd(0, 0) = 0`.
pub fn poly_gcd(f: &MultiPoly, g: &MultiPoly) -> MultiPoly {
    gcd_rec(f, g).monic()
}

fn gcd_rec(f: &MultiPoly, g: &MultiPoly) -> MultiPoly {
    if f.is_zero() {
        return g.clone();
    }
    if g.is_zero() {
        return f.clone();
    }
    if f.is_constant() || g.is_constant() {
        return MultiPoly::one();
    }
    if f.is_monomial() && g.is_monomial() {
        return monomial_gcd(f, g);
    }
    let v = main_variable(f, g);
    match (f.contains_var(v), g.contains_var(v)) {
        (true, false) => return gcd_rec(&content_in(f, v), g),
        (false, true) => return gcd_rec(f, &content_in(g, v)),
        _ => {}
    }

    let cf = content_in(f, v);
    let cg = content_in(g, v);
    let c = gcd_rec(&cf, &cg);
    let mut a = divide(f, &cf).integer_primitive();
    let mut b = divide(g, &cg).integer_primitive();
    if a.degree_in(v) < b.degree_in(v) {
        std::mem::swap(&mut a, &mut b);
    }
    loop {
        let r = pseudo_remainder(&a, &b, v);
        if r.is_zero() {
            break;
        }
        if r.degree_in(v) == 0 {
            b = MultiPoly::one();
            break;
        }
        a = b;
        b = primitive_in(&r, v);
    }
    &c * &b
}

fn monomial_gcd(f: &MultiPoly, g: &MultiPoly) -> MultiPoly {
    let (mf, _) = f.leading_term().unwrap();
    let (mg, _) = g.leading_term().unwrap();
    let mut m = Monomial::ONE;
    for v in Var::all() {
        m.set_exp(v, mf.exp(v).min(mg.exp(v)));
    }
    MultiPoly::monomial(num_traits::One::one(), m)
}

fn main_variable(f: &MultiPoly, g: &MultiPoly) -> Var {
    let vf = f.variables();
    let vg = g.variables();
    *vf.union(&vg).next().expect("non-constant operand")
}

/// GCD of the coefficients of `p` viewed as a polynomial in `v`.
pub(crate) fn content_in(p: &MultiPoly, v: Var) -> MultiPoly {
    let mut acc = MultiPoly::zero();
    for c in p.coeffs_in(v) {
        if c.is_zero() {
            continue;
        }
        acc = gcd_rec(&acc, &c);
        if acc.is_constant() {
            return MultiPoly::one();
        }
    }
    acc
}

fn primitive_in(p: &MultiPoly, v: Var) -> MultiPoly {
    divide(p, &content_in(p, v)).integer_primitive()
}

fn divide(p: &MultiPoly, d: &MultiPoly) -> MultiPoly {
    p.div_exact(d).expect("content must divide the polynomial exactly")
}

/// Sparse pseudo-remainder of `a` by `b` with respect to `v`.
fn pseudo_remainder(a: &MultiPoly, b: &MultiPoly, v: Var) -> MultiPoly {
    let db = b.degree_in(v);
    let lcb = b.coeff_in(v, db);
    let mut r = a.clone();
    while !r.is_zero() && r.degree_in(v) >= db {
        let dr = r.degree_in(v);
        let lcr = r.coeff_in(v, dr);
        let shift = MultiPoly::var_pow(v, dr - db);
        r = &(&lcb * &r) - &(&(&lcr * &shift) * b);
        // Rational rescaling keeps coefficient growth in check.
        let c = r.rational_content();
        if !c.is_zero() {
            r = r.scale(&c.recip());
        }
    }
    r
}
