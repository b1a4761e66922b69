//! Cell-level statistics of Young diagrams.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use super::{partitions_of, Partition};
use crate::arith::factorial;

/// Statistics of one cell `(row, col)`, both 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
    pub hook: u32,
    pub arm: u32,
    pub leg: u32,
    pub content: i64,
    pub sp_content: i64,
    pub o_content: i64,
}

/// Every cell of `λ`, row by row.
pub fn cell_stats(lambda: &Partition) -> Vec<Cell> {
    let conj = lambda.conjugate();
    let row_len = |i: usize| lambda.part(i) as i64;
    let col_len = |j: usize| conj.part(j) as i64;
    let mut out = Vec::with_capacity(lambda.size() as usize);
    for i in 1..=lambda.len() {
        for j in 1..=lambda.part(i) as usize {
            let (ii, jj) = (i as i64, j as i64);
            let arm = row_len(i) - jj;
            let leg = col_len(j) - ii;
            let sp_content =
                if i > j { row_len(i) + row_len(j) - ii - jj + 2 } else { ii + jj - col_len(i) - col_len(j) };
            let o_content =
                if i >= j { row_len(i) + row_len(j) - ii - jj } else { ii + jj - col_len(i) - col_len(j) - 2 };
            out.push(Cell {
                row: i,
                col: j,
                hook: (arm + leg + 1) as u32,
                arm: arm as u32,
                leg: leg as u32,
                content: jj - ii,
                sp_content,
                o_content,
            });
        }
    }
    out
}

/// Hook lengths of all cells, row by row.
pub fn hooks(lambda: &Partition) -> Vec<u32> {
    cell_stats(lambda).iter().map(|c| c.hook).collect()
}

/// Number of standard Young tableaux, `n! / prod h_u`.
pub fn dim_sytx(lambda: &Partition) -> BigInt {
    let fact = factorial(lambda.size());
    let prod: BigInt = hooks(lambda).into_iter().map(BigInt::from).product();
    fact / prod
}

/// Diagonal hook lengths `h(1,1), h(2,2), ...`.
pub fn diagonal_hooks(lambda: &Partition) -> Partition {
    let conj = lambda.conjugate();
    let d = (1..).take_while(|&i| lambda.part(i) as usize >= i).count();
    Partition::new((1..=d).map(|i| lambda.part(i) + conj.part(i) + 1 - 2 * i as u32).collect())
}

/// Number of squares of all sizes in the diagram, `a(λ)`.
pub fn squares_count(lambda: &Partition) -> u64 {
    squares_by_min(lambda)
}

/// `a(λ)` as `sum_{(i,j)} min(i,j)`.
pub fn squares_by_min(lambda: &Partition) -> u64 {
    (1..=lambda.len()).flat_map(|i| (1..=lambda.part(i) as usize).map(move |j| i.min(j) as u64)).sum()
}

/// `a(λ)` as `<1,2,3,...> . h_λ`.
pub fn squares_by_diagonal_hooks(lambda: &Partition) -> u64 {
    diagonal_hooks(lambda).parts().iter().enumerate().map(|(i, &h)| (i as u64 + 1) * h as u64).sum()
}

/// `a(λ)` by placing every `k x k` square with its top-left corner on a cell.
/// The square fits exactly when its bottom-right cell is in the diagram.
pub fn squares_geometric(lambda: &Partition) -> u64 {
    let mut count = 0;
    for i in 1..=lambda.len() {
        for j in 1..=lambda.part(i) as usize {
            let mut k = 1;
            while lambda.contains_cell(i + k - 1, j + k - 1) {
                count += 1;
                k += 1;
            }
        }
    }
    count
}

/// Part- and hook-based statistics of one partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartStats {
    /// Multiplicity of the part 1.
    pub f1: u32,
    /// Number of distinct parts.
    pub g1: u32,
    /// Number of cells with hook length 1.
    pub d1: u32,
    /// `k_j`: multiplicity of each part size.
    pub multiplicities: BTreeMap<u32, u32>,
    pub odd_parts: u32,
    pub even_parts: u32,
    pub length: u32,
}

pub fn part_statistics(lambda: &Partition) -> PartStats {
    let multiplicities = lambda.multiplicities();
    let parts = lambda.parts();
    // hook 1 cells are the corners: last cell of each row whose next row is shorter
    let d1 = (1..=lambda.len()).filter(|&i| lambda.part(i + 1) < lambda.part(i)).count() as u32;
    PartStats {
        f1: multiplicities.get(&1).copied().unwrap_or(0),
        g1: multiplicities.len() as u32,
        d1,
        odd_parts: parts.iter().filter(|&&p| p % 2 == 1).count() as u32,
        even_parts: parts.iter().filter(|&&p| p % 2 == 0).count() as u32,
        length: parts.len() as u32,
        multiplicities,
    }
}

/// Over all `λ ⊢ n`: how often each value occurs as a part and as a hook.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HookPartCensus {
    pub parts_count: BTreeMap<u32, u64>,
    pub hooks_count: BTreeMap<u32, u64>,
}

pub fn hook_part_census(n: u32) -> HookPartCensus {
    let mut parts_count: BTreeMap<u32, u64> = (1..=n).map(|i| (i, 0)).collect();
    let mut hooks_count = parts_count.clone();
    for lambda in partitions_of(n) {
        for &p in lambda.parts() {
            *parts_count.get_mut(&p).unwrap() += 1;
        }
        for h in hooks(&lambda) {
            *hooks_count.get_mut(&h).unwrap() += 1;
        }
    }
    HookPartCensus { parts_count, hooks_count }
}
