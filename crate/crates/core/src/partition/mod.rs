//! Integer partitions, Young-diagram statistics and simultaneous cores.

mod cells;
mod cores;

use std::collections::BTreeMap;
use std::fmt;

pub use cells::{
    cell_stats, diagonal_hooks, dim_sytx, hook_part_census, hooks, part_statistics, squares_by_diagonal_hooks,
    squares_by_min, squares_count, squares_geometric, Cell, HookPartCensus, PartStats,
};
pub use cores::{
    core_size_bound, enumerate_sss_cores, is_t_core, rr_sets, CoreFamily, CoreStrategy, RrSets, DEFAULT_CORE_BUDGET,
};

/// Weakly decreasing sequence of positive parts. The empty partition is the
/// unique partition of 0.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Builds a partition, sorting parts into decreasing order and dropping zeros.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Number of parts `L(λ)`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `λ_i` with 1-based `i`; zero beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        conjugate_parts(&self.0)
    }

    /// Multiplicities `m_j`, keyed by part size.
    pub fn multiplicities(&self) -> BTreeMap<u32, u32> {
        let mut m = BTreeMap::new();
        for &p in &self.0 {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// Consecutive parts differ by at least 2.
    pub fn has_gap_two(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1] + 2)
    }

    pub fn contains_cell(&self, row: usize, col: usize) -> bool {
        row >= 1 && col >= 1 && self.part(row) as usize >= col
    }
}

pub(crate) fn conjugate_parts(parts: &[u32]) -> Partition {
    let first = parts.first().copied().unwrap_or(0);
    Partition((1..=first).map(|j| parts.iter().take_while(|&&p| p >= j).count() as u32).collect())
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl From<&[u32]> for Partition {
    fn from(parts: &[u32]) -> Self {
        Partition::new(parts.to_vec())
    }
}

/// Partitions of `n` in reverse-lexicographic order, starting from `[n]` and
/// ending with `[1,...,1]`.
pub fn partitions_of(n: u32) -> PartitionIter {
    PartitionIter { next: Some(if n == 0 { Vec::new() } else { vec![n] }) }
}

/// All partitions of `n` collected into a vector, same order as [`partitions_of`].
pub fn partition_list(n: u32) -> Vec<Partition> {
    partitions_of(n).collect()
}

/// Iterator returned by [`partitions_of`].
#[derive(Clone, Debug)]
pub struct PartitionIter {
    next: Option<Vec<u32>>,
}

impl Iterator for PartitionIter {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let cur = self.next.take()?;
        let mut succ = cur.clone();
        if advance(&mut succ) {
            self.next = Some(succ);
        }
        Some(Partition(cur))
    }
}

/// Steps `p` to its reverse-lex successor; false when `p` was the last one.
fn advance(p: &mut Vec<u32>) -> bool {
    let mut rem = 0u32;
    while p.last() == Some(&1) {
        p.pop();
        rem += 1;
    }
    let Some(last) = p.last_mut() else {
        return false;
    };
    *last -= 1;
    let m = *last;
    rem += 1;
    while rem > 0 {
        let x = m.min(rem);
        p.push(x);
        rem -= x;
    }
    true
}

/// Visits every partition of `n` in reverse-lex order without allocating a
/// fresh vector per partition.
pub fn for_each_partition(n: u32, mut f: impl FnMut(&[u32])) {
    let mut p = if n == 0 { Vec::new() } else { vec![n] };
    loop {
        f(&p);
        if !advance(&mut p) {
            break;
        }
    }
}

/// `p(0), ..., p(n)` by Euler's pentagonal recurrence.
pub fn partition_counts(n: usize) -> Vec<u64> {
    let mut p = vec![0u64; n + 1];
    p[0] = 1;
    for m in 1..=n {
        let mut acc: i128 = 0;
        for k in 1.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > m {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            acc += sign * p[m - g1] as i128;
            let g2 = k * (3 * k + 1) / 2;
            if g2 <= m {
                acc += sign * p[m - g2] as i128;
            }
        }
        p[m] = acc as u64;
    }
    p
}
