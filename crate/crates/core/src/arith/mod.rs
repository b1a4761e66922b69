//! Exact arithmetic: rationals, multivariate polynomials, rational functions,
//! truncated power series and q-analogues.

mod gcd;
mod poly;
mod qseries;
mod ratfunc;
mod series;
mod sturm;
mod var;

pub use gcd::poly_gcd;
pub use poly::{poly_arith, MultiPoly, PolyOp};
pub use qseries::{
    binomial_series, gaussian_binomial, neg_log_one_minus, pochhammer, q_coeff, q_factorial, PochLength, SeriesMonomial,
};
pub use ratfunc::{ratfunc_product, RatFunc};
pub use series::{series_arith, series_exp_log, ExpLog, SeriesOp, TruncatedSeries};
pub use sturm::{is_unimodal_sequence, sturm_analysis, unimodal, RootReport};
pub use var::{Monomial, Var, NAMED_VARS, NVARS, Y_BLOCK};

/// Arbitrary-precision rational number.
pub type Rational = num_rational::BigRational;

/// `n / d` as a [`Rational`]. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// `n!` as a big integer.
pub fn factorial(n: u32) -> num_bigint::BigInt {
    (1..=n).map(num_bigint::BigInt::from).product()
}

/// Binomial coefficient `C(n, k)`; zero unless `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> num_bigint::BigInt {
    if n < 0 || k < 0 || k > n {
        return num_bigint::BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = num_bigint::BigInt::from(1);
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}
