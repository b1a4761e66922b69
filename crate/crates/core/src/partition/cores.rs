//! t-cores, simultaneous `(s, s+1, s+2)`-cores and the Rogers-Ramanujan sets.

use super::{for_each_partition, partitions_of, Partition};
use crate::error::{Error, Result};

/// Largest size bound the brute-force core enumeration accepts by default.
/// `s = 6` needs 70; `s = 7` needs 126.
pub const DEFAULT_CORE_BUDGET: u64 = 70;

/// Beta set of `λ` with `L(λ)` beads: `λ_i + L - i` for `i = 1..L`.
/// These are the first-column hook lengths.
fn beta_set(parts: &[u32]) -> impl Iterator<Item = usize> + '_ {
    let l = parts.len();
    parts.iter().enumerate().map(move |(i, &p)| p as usize + l - 1 - i)
}

/// Beta set as a bitmask when every bead is below 128.
fn beta_mask(parts: &[u32]) -> Option<u128> {
    let top = parts.first().map_or(0, |&p| p as usize + parts.len() - 1);
    if top >= 128 {
        return None;
    }
    Some(beta_set(parts).fold(0u128, |m, b| m | (1u128 << b)))
}

/// A hook of length exactly `t` exists iff some bead can slide `t` places
/// down onto an empty position, so the mask test is `(m >> t) & !m == 0`.
fn mask_is_core(m: u128, t: u32) -> bool {
    t >= 128 || (m >> t) & !m == 0
}

/// True iff no cell of `λ` has hook length exactly `t`.
pub fn is_t_core(lambda: &Partition, t: u32) -> bool {
    assert!(t >= 1, "t must be positive");
    parts_are_t_core(lambda.parts(), t)
}

fn parts_are_t_core(parts: &[u32], t: u32) -> bool {
    if let Some(m) = beta_mask(parts) {
        return mask_is_core(m, t);
    }
    let beads: std::collections::HashSet<usize> = beta_set(parts).collect();
    let t = t as usize;
    beads.iter().all(|&b| b < t || beads.contains(&(b - t)))
}

/// `(s^2 - 1)((s+1)^2 - 1) / 24`, the largest size of an `(s, s+1)`-core.
pub fn core_size_bound(s: u32) -> u64 {
    let s = s as u64;
    (s * s - 1) * ((s + 1) * (s + 1) - 1) / 24
}

/// How [`enumerate_sss_cores`] finds its members.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoreStrategy {
    /// Filter every partition up to the `(s, s+1)`-core size bound; fails
    /// with [`Error::BoundOverflow`] when that bound exceeds `budget`.
    BruteForce { budget: u64 },
    /// Enumerate order ideals of the gap poset of the numerical semigroup
    /// generated by `s, s+1, s+2`; each ideal is the beta set of one core.
    BetaSet,
}

impl Default for CoreStrategy {
    fn default() -> Self {
        CoreStrategy::BruteForce { budget: DEFAULT_CORE_BUDGET }
    }
}

/// All `(s, s+1, s+2)`-cores, sorted by size and then reverse-lex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoreFamily {
    pub s: u32,
    pub members: Vec<Partition>,
}

impl CoreFamily {
    /// `f(s)`.
    pub fn count(&self) -> u64 {
        self.members.len() as u64
    }

    /// `g(s)`.
    pub fn max_size(&self) -> u64 {
        self.members.iter().map(|l| l.size() as u64).max().unwrap_or(0)
    }

    /// `h(s)`.
    pub fn total_size(&self) -> u64 {
        self.members.iter().map(|l| l.size() as u64).sum()
    }
}

pub fn enumerate_sss_cores(s: u32, strategy: CoreStrategy) -> Result<CoreFamily> {
    if s == 0 {
        return Err(Error::InvalidArgument("s must be at least 1".into()));
    }
    let mut members = match strategy {
        CoreStrategy::BruteForce { budget } => brute_force(s, budget)?,
        CoreStrategy::BetaSet => by_beta_sets(s),
    };
    members.sort_by(|a, b| a.size().cmp(&b.size()).then_with(|| b.cmp(a)));
    Ok(CoreFamily { s, members })
}

fn brute_force(s: u32, budget: u64) -> Result<Vec<Partition>> {
    let bound = core_size_bound(s);
    if bound > budget {
        return Err(Error::BoundOverflow { bound, budget });
    }
    let ts = [s, s + 1, s + 2];
    let mut out = Vec::new();
    for n in 0..=bound as u32 {
        for_each_partition(n, |parts| {
            let ok = match beta_mask(parts) {
                Some(m) => ts.iter().all(|&t| mask_is_core(m, t)),
                None => ts.iter().all(|&t| parts_are_t_core(parts, t)),
            };
            if ok {
                out.push(Partition(parts.to_vec()));
            }
        });
    }
    Ok(out)
}

fn by_beta_sets(s: u32) -> Vec<Partition> {
    let s = s as usize;
    let gens = [s, s + 1, s + 2];
    // n >= 1 is in the semigroup iff k*s <= n <= k*(s+2) for some k >= 1
    let in_semigroup = |n: usize| (1..=n / s).any(|k| k * s <= n && n <= k * (s + 2));
    let frobenius_limit = s * s + 2 * s;
    let gaps: Vec<usize> = (1..=frobenius_limit).filter(|&n| !in_semigroup(n)).collect();

    let mut out = Vec::new();
    let mut chosen = vec![false; frobenius_limit + 1];
    ideals(&gaps, 0, &gens, &mut chosen, &mut out);
    out
}

fn ideals(gaps: &[usize], idx: usize, gens: &[usize; 3], chosen: &mut [bool], out: &mut Vec<Partition>) {
    if idx == gaps.len() {
        let beads: Vec<usize> = (1..chosen.len()).rev().filter(|&b| chosen[b]).collect();
        let l = beads.len();
        let parts = beads.iter().enumerate().map(|(i, &b)| (b + 1 + i - l) as u32).collect();
        out.push(Partition(parts));
        return;
    }
    ideals(gaps, idx + 1, gens, chosen, out);
    let g = gaps[idx];
    // gaps are visited in increasing order, so every lower cover is decided
    if gens.iter().all(|&t| g <= t || chosen[g - t]) {
        chosen[g] = true;
        ideals(gaps, idx + 1, gens, chosen, out);
        chosen[g] = false;
    }
}

/// The two sides of the first Rogers-Ramanujan identity at size `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RrSets {
    /// Parts differ by at least 2.
    pub a: Vec<Partition>,
    /// Parts congruent to 1 or 4 mod 5.
    pub b: Vec<Partition>,
}

pub fn rr_sets(n: u32) -> RrSets {
    let mut a = Vec::new();
    let mut b = Vec::new();
    for lambda in partitions_of(n) {
        if lambda.has_gap_two() {
            a.push(lambda.clone());
        }
        if lambda.parts().iter().all(|p| matches!(p % 5, 1 | 4)) {
            b.push(lambda);
        }
    }
    RrSets { a, b }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::hooks;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec())
    }

    #[test]
    fn t_core_examples() {
        assert!(is_t_core(&p(&[1, 1]), 3));
        assert!(!is_t_core(&p(&[2, 1]), 3));
        for t in 1..6 {
            assert!(is_t_core(&Partition::empty(), t));
        }
    }

    #[test]
    fn t_core_matches_hook_scan() {
        for n in 0..=12 {
            for l in partitions_of(n) {
                let hs = hooks(&l);
                for t in 1..=14 {
                    assert_eq!(is_t_core(&l, t), !hs.contains(&t), "{l} t={t}");
                }
            }
        }
        // beads beyond the mask; hooks are 131, 130, 128..1 and 2, 1
        let wide = p(&[130, 2]);
        assert!(is_t_core(&wide, 129));
        assert!(!is_t_core(&wide, 131));
        assert!(!is_t_core(&wide, 2));
    }

    #[test]
    fn small_families() {
        let f1 = enumerate_sss_cores(1, CoreStrategy::default()).unwrap();
        assert_eq!(f1.members, vec![Partition::empty()]);
        let f2 = enumerate_sss_cores(2, CoreStrategy::default()).unwrap();
        assert_eq!(f2.members, vec![Partition::empty(), p(&[1])]);
        assert_eq!((f2.count(), f2.max_size(), f2.total_size()), (2, 1, 1));
        let f3 = enumerate_sss_cores(3, CoreStrategy::default()).unwrap();
        assert_eq!(f3.members, vec![Partition::empty(), p(&[1]), p(&[2]), p(&[1, 1])]);
        assert_eq!(f3.max_size(), 2);
    }

    #[test]
    fn beta_set_path_matches_brute_force() {
        for s in 1..=5 {
            let a = enumerate_sss_cores(s, CoreStrategy::default()).unwrap();
            let b = enumerate_sss_cores(s, CoreStrategy::BetaSet).unwrap();
            assert_eq!(a, b, "s={s}");
        }
    }

    #[test]
    fn budget_overflow() {
        assert_eq!(core_size_bound(7), 126);
        assert_eq!(
            enumerate_sss_cores(7, CoreStrategy::default()),
            Err(Error::BoundOverflow { bound: 126, budget: DEFAULT_CORE_BUDGET })
        );
        assert_eq!(enumerate_sss_cores(7, CoreStrategy::BetaSet).unwrap().count(), 127);
    }

    #[test]
    fn rogers_ramanujan_sets() {
        let r = rr_sets(4);
        assert_eq!(r.a, vec![p(&[4]), p(&[3, 1])]);
        assert_eq!(r.b, vec![p(&[4]), p(&[1, 1, 1, 1])]);
        assert_eq!(rr_sets(1).a, rr_sets(1).b);
        assert_eq!(rr_sets(6).a, vec![p(&[6]), p(&[5, 1]), p(&[4, 2])]);
        for n in 0..=20 {
            let r = rr_sets(n);
            assert_eq!(r.a.len(), r.b.len(), "n={n}");
        }
    }
}
