//! Counts, largest sizes and total sizes of `(s, s+1, s+2)`-cores.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;

use super::{Check, Outcome, Params};
use crate::arith::binomial;
use crate::error::Result;
use crate::partition::{enumerate_sss_cores, CoreFamily, CoreStrategy};

const LOCATION: &str = "simultaneous cores";

const DEFAULTS: &[(&str, i64)] = &[("max_s", 6), ("fast", 0), ("budget", 70)];

pub(super) const CHECKS: &[Check] = &[
    Check {
        id: "C11.1",
        location: LOCATION,
        description: "number of (s,s+1,s+2)-cores f(s) = sum_k C(s,2k) Catalan(k)",
        defaults: DEFAULTS,
        runner: c11_1,
    },
    Check {
        id: "C11.2",
        location: LOCATION,
        description: "largest (s,s+1,s+2)-core g(s) = m C(m+1,3) (s = 2m-1), (m+1) C(m+1,3) + C(m+2,3) (s = 2m)",
        defaults: DEFAULTS,
        runner: c11_2,
    },
    Check {
        id: "C11.3",
        location: LOCATION,
        description: "total size h(s) = sum_(j<=s-2) C(j+3,3) sum_i C(j,2i) Catalan(i)",
        defaults: DEFAULTS,
        runner: c11_3,
    },
];

type Key = (u32, bool, u64);

fn cache() -> &'static Mutex<HashMap<Key, CoreFamily>> {
    static CACHE: OnceLock<Mutex<HashMap<Key, CoreFamily>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn family(s: u32, fast: bool, budget: u64) -> Result<CoreFamily> {
    let mut map = cache().lock().unwrap_or_else(|e| e.into_inner());
    if let Some(f) = map.get(&(s, fast, budget)) {
        return Ok(f.clone());
    }
    let strategy = if fast { CoreStrategy::BetaSet } else { CoreStrategy::BruteForce { budget } };
    let f = enumerate_sss_cores(s, strategy)?;
    map.insert((s, fast, budget), f.clone());
    Ok(f)
}

fn catalan(k: i64) -> BigInt {
    binomial(2 * k, k) / BigInt::from(k + 1)
}

/// `sum_k C(s, 2k) Catalan(k)`.
pub fn f_formula(s: u32) -> BigInt {
    let s = s as i64;
    (0..=s / 2).map(|k| binomial(s, 2 * k) * catalan(k)).sum()
}

pub fn g_formula(s: u32) -> BigInt {
    let m = (s as i64 + 1) / 2;
    if s % 2 == 1 {
        BigInt::from(m) * binomial(m + 1, 3)
    } else {
        BigInt::from(m + 1) * binomial(m + 1, 3) + binomial(m + 2, 3)
    }
}

pub fn h_formula(s: u32) -> BigInt {
    (0..=s as i64 - 2).map(|j| binomial(j + 3, 3) * f_formula(j as u32)).sum()
}

fn compare(p: &Params, name: &str, stat: fn(&CoreFamily) -> u64, formula: fn(u32) -> BigInt) -> Result<Outcome> {
    let max_s = p.nonneg("max_s")?;
    let fast = p.get("fast") != 0;
    let budget = p.nonneg("budget")? as u64;
    let mut values = Vec::new();
    for s in 1..=max_s {
        p.tick()?;
        let fam = family(s, fast, budget)?;
        let (got, want) = (stat(&fam), formula(s));
        if BigInt::from(got) != want {
            return Ok(Outcome::refuted(format!("s={s}: enumeration {name} = {got}, formula = {want}"), ""));
        }
        values.push(got.to_string());
    }
    let method = if fast { "beta-set enumeration" } else { "brute force" };
    Ok(Outcome::verified(format!("{name}(1..{max_s}) = {} by {method}", values.join(","))))
}

fn c11_1(p: &Params) -> Result<Outcome> {
    compare(p, "f", CoreFamily::count, f_formula)
}

fn c11_2(p: &Params) -> Result<Outcome> {
    compare(p, "g", CoreFamily::max_size, g_formula)
}

fn c11_3(p: &Params) -> Result<Outcome> {
    compare(p, "h", CoreFamily::total_size, h_formula)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::{run_check, Status};

    #[test]
    fn formula_values() {
        let f: Vec<BigInt> = (1..=6).map(f_formula).collect();
        assert_eq!(f, [1, 2, 4, 9, 21, 51].map(BigInt::from));
        assert_eq!(g_formula(3), BigInt::from(2));
        assert_eq!(g_formula(6), BigInt::from(26));
        assert_eq!(h_formula(6), BigInt::from(420));
    }

    #[test]
    fn small_s_verifies_both_ways() {
        for fast in [0, 1] {
            let b = [("max_s".to_string(), 5), ("fast".to_string(), fast)].into();
            for id in ["C11.1", "C11.2", "C11.3"] {
                let r = run_check(id, &b).unwrap();
                assert_eq!(r.status, Status::Verified, "{r:?}");
            }
        }
    }

    #[test]
    fn brute_force_beyond_budget_skips() {
        let r = run_check("C11.1", &[("max_s".to_string(), 7)].into()).unwrap();
        assert_eq!(r.status, Status::Skipped);
        let r = run_check("C11.1", &[("max_s".to_string(), 7), ("fast".to_string(), 1)].into()).unwrap();
        assert_eq!(r.status, Status::Verified, "{r:?}");
    }
}
