//! Registry of identity checks, bounded execution and result capture.

mod breed;
mod contents;
mod cores;
mod eulerian;
mod han;
mod hooks;
mod squares;
mod unify;

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::TruncatedSeries;
use crate::error::{Error, Result};
use crate::report::Report;

pub use contents::random_matrices;

/// Named integer parameters of a check.
pub type Bounds = BTreeMap<String, i64>;

/// Environment variable capping the wall-clock budget of [`run_all`].
pub const BUDGET_ENV: &str = "HOOKLAB_BUDGET_SECONDS";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Verified,
    Refuted,
    Error,
    Skipped,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Verified => "verified",
            Status::Refuted => "refuted",
            Status::Error => "error",
            Status::Skipped => "skipped",
        }
    }
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub id: String,
    pub status: Status,
    pub bounds: Bounds,
    pub elapsed_ms: u64,
    pub witness: Option<String>,
    pub notes: String,
}

impl CheckResult {
    /// Equality ignoring `elapsed_ms`.
    pub fn same_outcome(&self, other: &CheckResult) -> bool {
        self.id == other.id
            && self.status == other.status
            && self.bounds == other.bounds
            && self.witness == other.witness
            && self.notes == other.notes
    }
}

/// What a runner concluded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Verified { notes: String },
    Refuted { witness: String, notes: String },
}

impl Outcome {
    pub fn verified(notes: impl Into<String>) -> Self {
        Outcome::Verified { notes: notes.into() }
    }

    pub fn refuted(witness: impl Into<String>, notes: impl Into<String>) -> Self {
        Outcome::Refuted { witness: witness.into(), notes: notes.into() }
    }

    /// Refuted at the first failure, verified otherwise.
    pub fn from_failure(failure: Option<String>, notes: impl Into<String>) -> Self {
        match failure {
            Some(w) => Outcome::refuted(w, notes),
            None => Outcome::verified(notes),
        }
    }
}

/// Bounds of one run plus its deadline.
pub struct Params<'a> {
    bounds: &'a Bounds,
    deadline: Option<Instant>,
}

impl Params<'_> {
    pub fn get(&self, key: &str) -> i64 {
        self.bounds[key]
    }

    pub fn nonneg(&self, key: &str) -> Result<u32> {
        u32::try_from(self.get(key))
            .map_err(|_| Error::InvalidArgument(format!("bound {key} must be a nonnegative integer")))
    }

    pub fn usize(&self, key: &str) -> Result<usize> {
        Ok(self.nonneg(key)? as usize)
    }

    /// Fails with [`Error::BudgetExceeded`] once the deadline has passed.
    pub fn tick(&self) -> Result<()> {
        match self.deadline {
            Some(d) if Instant::now() >= d => Err(Error::BudgetExceeded("time budget exhausted".into())),
            _ => Ok(()),
        }
    }
}

pub type Runner = fn(&Params) -> Result<Outcome>;

pub struct Check {
    pub id: &'static str,
    pub location: &'static str,
    pub description: &'static str,
    pub defaults: &'static [(&'static str, i64)],
    pub runner: Runner,
}

impl Check {
    pub fn default_bounds(&self) -> Bounds {
        self.defaults.iter().map(|&(k, v)| (k.to_string(), v)).collect()
    }
}

/// Every check, ordered by topic.
pub fn registry() -> Vec<&'static Check> {
    [
        eulerian::CHECKS,
        hooks::CHECKS,
        unify::CHECKS,
        breed::CHECKS,
        contents::CHECKS,
        han::CHECKS,
        squares::CHECKS,
        cores::CHECKS,
    ]
    .into_iter()
    .flatten()
    .collect()
}

pub fn find_check(id: &str) -> Result<&'static Check> {
    registry().into_iter().find(|c| c.id == id).ok_or_else(|| Error::UnknownCheck(id.to_string()))
}

/// Merges `overrides` into the defaults of `id`.
pub fn resolve_bounds(id: &str, overrides: &Bounds) -> Result<Bounds> {
    let check = find_check(id)?;
    let mut bounds = check.default_bounds();
    for (k, v) in overrides {
        match bounds.get_mut(k) {
            Some(slot) => *slot = *v,
            None => return Err(Error::UnknownBound { check: id.to_string(), bound: k.clone() }),
        }
    }
    Ok(bounds)
}

pub fn run_check(id: &str, overrides: &Bounds) -> Result<CheckResult> {
    let bounds = resolve_bounds(id, overrides)?;
    Ok(execute(find_check(id)?, bounds, None))
}

/// [`run_check`] under the time budget of [`effective_budget`].
pub fn run_check_with_budget(id: &str, overrides: &Bounds, budget_seconds: Option<u64>) -> Result<CheckResult> {
    let bounds = resolve_bounds(id, overrides)?;
    let deadline = effective_budget(budget_seconds).map(|s| Instant::now() + Duration::from_secs(s));
    Ok(execute(find_check(id)?, bounds, deadline))
}

fn execute(check: &Check, bounds: Bounds, deadline: Option<Instant>) -> CheckResult {
    let start = Instant::now();
    let mut result = CheckResult {
        id: check.id.to_string(),
        status: Status::Skipped,
        bounds,
        elapsed_ms: 0,
        witness: None,
        notes: String::new(),
    };
    if deadline.is_some_and(|d| start >= d) {
        result.notes = "time budget exhausted before start".into();
        return result;
    }
    let params = Params { bounds: &result.bounds, deadline };
    let outcome = (check.runner)(&params);
    match outcome {
        Ok(Outcome::Verified { notes }) => {
            result.status = Status::Verified;
            result.notes = notes;
        }
        Ok(Outcome::Refuted { witness, notes }) => {
            result.status = Status::Refuted;
            result.witness = Some(witness);
            result.notes = notes;
        }
        Err(e @ (Error::BudgetExceeded(_) | Error::BoundOverflow { .. })) => {
            result.status = Status::Skipped;
            result.notes = e.to_string();
        }
        Err(e) => {
            result.status = Status::Error;
            result.notes = e.to_string();
        }
    }
    result.elapsed_ms = start.elapsed().as_millis() as u64;
    result
}

/// Effective budget: the smaller of the argument and [`BUDGET_ENV`].
pub fn effective_budget(budget_seconds: Option<u64>) -> Option<u64> {
    let env = std::env::var(BUDGET_ENV).ok().and_then(|v| v.trim().parse::<u64>().ok());
    match (budget_seconds, env) {
        (Some(a), Some(b)) => Some(a.min(b)),
        (a, b) => a.or(b),
    }
}

/// Runs every check at its default bounds on `jobs` worker threads
/// (`0` lets the pool decide). Results keep registry order.
pub fn run_all(budget_seconds: Option<u64>, jobs: usize) -> Result<Report> {
    let started_at = crate::report::now_iso8601();
    let start = Instant::now();
    let deadline = effective_budget(budget_seconds).map(|s| start + Duration::from_secs(s));
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::InvalidArgument(format!("cannot build worker pool: {e}")))?;
    let checks = registry();
    let results: Vec<CheckResult> =
        pool.install(|| checks.par_iter().map(|c| execute(c, c.default_bounds(), deadline)).collect());
    Ok(Report::new(started_at, results))
}

/// First coefficient where two series differ, rendered as a witness.
pub(crate) fn series_witness(
    lhs_name: &str,
    lhs: &TruncatedSeries,
    rhs_name: &str,
    rhs: &TruncatedSeries,
) -> Option<String> {
    lhs.first_difference(rhs)
        .map(|n| format!("[{}^{n}] {lhs_name} = {}, {rhs_name} = {}", lhs.var(), lhs.coeff(n), rhs.coeff(n)))
}

/// First pairwise difference along a chain of equal-order series.
pub(crate) fn chain_witness(sides: &[(&str, &TruncatedSeries)]) -> Option<String> {
    sides.windows(2).find_map(|w| series_witness(w[0].0, w[0].1, w[1].0, w[1].1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    const IDS: [&str; 46] = [
        "L1.1", "L1.2", "L1.3", "L1.7", "C1.8", "C2.1", "C2.2a", "C2.2b", "P2.2", "L2.3", "L3.1", "X3.2", "X3.3",
        "X3.4", "X3.5", "X3.6", "X3.7", "X3.8", "C4.1", "C4.2", "C4.3", "R4", "C5.2", "P6.1", "C6.2a", "C6.2b",
        "C6.2c", "C6.3a", "C6.3b", "C6.3c", "P6.4", "P7.1", "E8.3", "C8.1", "P8.2", "RR9", "P9.1", "P9.2", "L9.3",
        "T9.5i", "T9.5ii", "T9.5iii", "C9.7", "C11.1", "C11.2", "C11.3",
    ];

    #[test]
    fn registry_covers_documented_ids() {
        let ids: Vec<&str> = registry().iter().map(|c| c.id).collect();
        assert_eq!(ids, IDS);
        assert_eq!(ids.iter().collect::<HashSet<_>>().len(), ids.len());
        for c in registry() {
            assert!(!c.location.is_empty() && !c.description.is_empty(), "{}", c.id);
        }
    }

    #[test]
    fn unknown_ids_and_bounds() {
        assert_eq!(run_check("NOPE", &Bounds::new()), Err(Error::UnknownCheck("NOPE".into())));
        let b: Bounds = [("bogus".to_string(), 1)].into();
        assert_eq!(run_check("C5.2", &b), Err(Error::UnknownBound { check: "C5.2".into(), bound: "bogus".into() }));
    }

    #[test]
    fn negative_bound_is_an_error() {
        let b: Bounds = [("max_n".to_string(), -1)].into();
        assert_eq!(run_check("X3.7", &b).unwrap().status, Status::Error);
    }

    #[test]
    fn expired_deadline_skips() {
        let c = find_check("C5.2").unwrap();
        let r = execute(c, c.default_bounds(), Some(Instant::now()));
        assert_eq!(r.status, Status::Skipped);
        assert!(r.witness.is_none());
    }

    #[test]
    fn reruns_are_identical() {
        let a = run_check("L2.3", &Bounds::new()).unwrap();
        let b = run_check("L2.3", &Bounds::new()).unwrap();
        assert!(a.same_outcome(&b));
    }
}
