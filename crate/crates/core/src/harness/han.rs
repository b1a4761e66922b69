//! Additive hook and part statistics with a formal marker `q`.

use num_bigint::BigInt;
use num_traits::Zero;

use super::{chain_witness, Check, Outcome, Params};
use crate::arith::{MultiPoly, Rational, TruncatedSeries, Var};
use crate::error::Result;
use crate::identity::{eta_product, partition_additive_series, AdditiveMode, EtaFactor};
use crate::partition::{cell_stats, hook_part_census, partitions_of};

const LOCATION: &str = "quantum hook sums";

pub(super) const CHECKS: &[Check] = &[
    Check {
        id: "E8.3",
        location: LOCATION,
        description: "sum h_u^alpha = (1/(x;x)) sum_k k^(alpha+1) x^k/(1-x^k) = sum lambda_i^(alpha+1)",
        defaults: &[("max_alpha", 3), ("order", 12)],
        runner: e8_3,
    },
    Check {
        id: "C8.1",
        location: LOCATION,
        description: "sum q^(h_u^alpha) and sum q^(lambda_i^alpha) against their product forms",
        defaults: &[("max_alpha", 3), ("order", 12)],
        runner: c8_1,
    },
    Check {
        id: "P8.2",
        location: LOCATION,
        description: "part-sum, q-part and 1/(h(h-1)) variants and the census i * #parts(i) = #hooks(i)",
        defaults: &[("order", 12), ("max_n", 14)],
        runner: p8_2,
    },
];

fn q_pow(e: u64) -> Result<MultiPoly> {
    let e = u32::try_from(e).map_err(|_| crate::error::Error::InvalidArgument(format!("q exponent {e} too large")))?;
    Ok(MultiPoly::var_pow(Var::Q, e))
}

/// `1/(x;x)_inf` to `order`.
fn partition_gf(order: usize) -> Result<TruncatedSeries> {
    eta_product(&[EtaFactor::int(1, 0, 1)], order)
}

/// `(1/(x;x)) sum_k sum_(m>=1) c(k, m) x^(km)`.
fn divisor_product(order: usize, c: impl Fn(u64, u64) -> Result<MultiPoly>) -> Result<TruncatedSeries> {
    let mut s = vec![MultiPoly::zero(); order + 1];
    for k in 1..=order {
        for m in 1..=order / k {
            s[k * m] += &c(k as u64, m as u64)?;
        }
    }
    partition_gf(order)?.mul(&TruncatedSeries::from_polys("x", order, s))
}

fn int_pow(k: u64, e: u32) -> MultiPoly {
    MultiPoly::from_bigint(BigInt::from(k).pow(e))
}

fn e8_3(p: &Params) -> Result<Outcome> {
    let max_alpha = p.nonneg("max_alpha")?;
    let order = p.usize("order")?;
    for a in 0..=max_alpha {
        p.tick()?;
        let hooks = partition_additive_series(order, AdditiveMode::Hooks, |h| int_pow(h as u64, a))?;
        let mid = divisor_product(order, |k, _| Ok(int_pow(k, a + 1)))?;
        let parts = partition_additive_series(order, AdditiveMode::Parts, |l| int_pow(l as u64, a + 1))?;
        if let Some(w) = chain_witness(&[("hook sum", &hooks), ("product form", &mid), ("part sum", &parts)]) {
            return Ok(Outcome::refuted(format!("alpha={a}: {w}"), ""));
        }
    }
    Ok(Outcome::verified("alpha restricted to nonnegative integers"))
}

fn c8_1(p: &Params) -> Result<Outcome> {
    let max_alpha = p.nonneg("max_alpha")?;
    let order = p.usize("order")?;
    for a in 0..=max_alpha {
        p.tick()?;
        let hooks = partition_additive_series(order, AdditiveMode::Hooks, |h| MultiPoly::var_pow(Var::Q, h.pow(a)))?;
        let hook_rhs = divisor_product(order, |k, _| Ok(&q_pow(k.pow(a))? * &MultiPoly::from_int(k as i64)))?;
        if let Some(w) = chain_witness(&[("hook side", &hooks), ("product form", &hook_rhs)]) {
            return Ok(Outcome::refuted(format!("alpha={a}, hook display: {w}"), ""));
        }
        let parts = partition_additive_series(order, AdditiveMode::Parts, |l| MultiPoly::var_pow(Var::Q, l.pow(a)))?;
        let part_rhs = divisor_product(order, |k, _| q_pow(k.pow(a)))?;
        if let Some(w) = chain_witness(&[("part side", &parts), ("product form", &part_rhs)]) {
            return Ok(Outcome::refuted(format!("alpha={a}, part display: {w}"), ""));
        }
    }
    Ok(Outcome::verified("alpha restricted to nonnegative integers; q kept formal"))
}

fn p8_2(p: &Params) -> Result<Outcome> {
    let order = p.usize("order")?;
    let max_n = p.nonneg("max_n")?;
    let parts = partition_additive_series(order, AdditiveMode::Parts, |l| MultiPoly::from_int(l as i64))?;
    let rhs = divisor_product(order, |_, m| Ok(MultiPoly::from_int(m as i64)))?;
    if let Some(w) = chain_witness(&[("part sum", &parts), ("sum x^k/(1-x^k)^2 form", &rhs)]) {
        return Ok(Outcome::refuted(format!("first display: {w}"), ""));
    }
    p.tick()?;
    let q_parts = partition_additive_series(order, AdditiveMode::Parts, |l| MultiPoly::var_pow(Var::Q, l))?;
    let q_rhs = divisor_product(order, |_, m| q_pow(m))?;
    if let Some(w) = chain_witness(&[("q-part sum", &q_parts), ("sum q x^k/(1-q x^k) form", &q_rhs)]) {
        return Ok(Outcome::refuted(format!("second display: {w}"), ""));
    }
    for n in 0..=max_n {
        p.tick()?;
        let (mut lhs, mut rhs) = (Rational::zero(), Rational::zero());
        for l in partitions_of(n) {
            for &part in l.parts().iter().filter(|&&x| x != 1) {
                lhs += Rational::new(1.into(), (part as i64 - 1).into());
            }
            for c in cell_stats(&l).iter().filter(|c| c.hook != 1) {
                let h = c.hook as i64;
                rhs += Rational::new(1.into(), (h * (h - 1)).into());
            }
        }
        if lhs != rhs {
            return Ok(Outcome::refuted(format!("third display, n={n}: part side = {lhs}, hook side = {rhs}"), ""));
        }
        let census = hook_part_census(n);
        for (&i, &count) in &census.parts_count {
            let hooks = census.hooks_count[&i];
            if i as u64 * count != hooks {
                return Ok(Outcome::refuted(
                    format!("census, n={n}, i={i}: i * #parts = {}, #hooks = {hooks}", i as u64 * count),
                    "",
                ));
            }
        }
    }
    Ok(Outcome::verified("zeta display checked through the census identity i * #parts(i) = #hooks(i)"))
}
