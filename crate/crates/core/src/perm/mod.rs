//! Conjugacy classes of the symmetric group and the statistics built on them.

mod eulerian;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{factorial, MultiPoly, RatFunc, Rational, TruncatedSeries, Var};
use crate::error::Result;
use crate::partition::{partitions_of, Partition};

pub use eulerian::{
    eulerian_a, eulerian_b, eulerian_coeff, q_eulerian_b, q_eulerian_table, q_exponential, q_exponential_scaled,
};

/// A conjugacy class of `S_n`: cycle lengths with multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleType {
    shape: Partition,
    multiplicities: BTreeMap<u32, u32>,
    class_size: BigInt,
}

impl CycleType {
    pub fn new(shape: Partition) -> Self {
        let multiplicities = shape.multiplicities();
        let mut denom = BigInt::one();
        for (&j, &m) in &multiplicities {
            denom *= BigInt::from(j).pow(m) * factorial(m);
        }
        let class_size = factorial(shape.size()) / denom;
        CycleType { shape, multiplicities, class_size }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn n(&self) -> u32 {
        self.shape.size()
    }

    /// `n! / prod_j (j^{m_j} m_j!)`.
    pub fn class_size(&self) -> &BigInt {
        &self.class_size
    }

    pub fn multiplicities(&self) -> &BTreeMap<u32, u32> {
        &self.multiplicities
    }

    /// `c_j`: number of cycles of length `j`.
    pub fn cycles_of_length(&self, j: u32) -> u32 {
        self.multiplicities.get(&j).copied().unwrap_or(0)
    }

    /// `κ`: number of cycles.
    pub fn cycles(&self) -> u32 {
        self.shape.len() as u32
    }

    /// `O`: number of odd-length cycles.
    pub fn odd_cycles(&self) -> u32 {
        self.shape.parts().iter().filter(|&&j| j % 2 == 1).count() as u32
    }

    /// `E`: number of even-length cycles.
    pub fn even_cycles(&self) -> u32 {
        self.shape.parts().iter().filter(|&&j| j % 2 == 0).count() as u32
    }

    /// Fixed points, `tr(π) = c_1`.
    pub fn trace(&self) -> u32 {
        self.cycles_of_length(1)
    }

    /// Every cycle has length 1 or 2.
    pub fn is_involution(&self) -> bool {
        self.shape.parts().iter().all(|&j| j <= 2)
    }
}

/// One cycle type per partition of `n`, in reverse-lex order of shapes.
pub fn cycle_types(n: u32) -> impl Iterator<Item = CycleType> {
    partitions_of(n).map(CycleType::new)
}

/// `sum_{n<=order} x^n/n! sum_{π in S_n} w(π)`, summing `class_size * w`
/// over cycle types.
pub fn egf_cycle_statistic(
    var: &str,
    order: usize,
    weight: impl Fn(&CycleType) -> Result<RatFunc>,
) -> Result<TruncatedSeries> {
    let mut coeffs = Vec::with_capacity(order + 1);
    for n in 0..=order as u32 {
        let mut acc = RatFunc::zero();
        for ct in cycle_types(n) {
            let w = weight(&ct)?;
            acc = &acc + &w.scale(&Rational::from_integer(ct.class_size().clone()));
        }
        coeffs.push(acc.scale(&Rational::new(BigInt::one(), factorial(n))));
    }
    Ok(TruncatedSeries::from_coeffs(var, order, coeffs))
}

/// Table of `S(n, k)` for `0 <= k <= n <= max`.
pub fn stirling2_table(max: u32) -> Vec<Vec<BigInt>> {
    let max = max as usize;
    let mut s = vec![vec![BigInt::zero(); max + 1]; max + 1];
    s[0][0] = BigInt::one();
    for n in 1..=max {
        for k in 1..=n {
            s[n][k] = BigInt::from(k) * &s[n - 1][k] + &s[n - 1][k - 1];
        }
    }
    s
}

/// Stirling number of the second kind; zero for `k > n`.
pub fn stirling2(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    stirling2_table(n)[n as usize][k as usize].clone()
}

/// `B̂_n(z) = sum_j S(n, j) z^j`.
pub fn bell_poly(n: u32) -> MultiPoly {
    let row = &stirling2_table(n)[n as usize];
    let coeffs: Vec<Rational> = row.iter().map(|c| Rational::from_integer(c.clone())).collect();
    MultiPoly::from_univariate(Var::Z, &coeffs)
}

/// `#Inv(S_n)`.
pub fn involution_count(n: u32) -> BigInt {
    involution_trace_moment(n, 0)
}

/// `sum_{π in Inv(S_n)} tr(π)^k`, with `0^0 = 1`.
pub fn involution_trace_moment(n: u32, k: u32) -> BigInt {
    (0..=n / 2)
        .map(|j| {
            let fixed = n - 2 * j;
            let count = factorial(n) / (factorial(fixed) * BigInt::from(2).pow(j) * factorial(j));
            BigInt::from(fixed).pow(k) * count
        })
        .sum()
}
