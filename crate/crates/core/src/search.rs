//! Exhaustive search over binary linear codes.
//!
//! Each `k`-dimensional subspace of `GF(2)^n` is visited once through its
//! reduced row echelon generator: a pivot set plus a fill of the free
//! entries. Pivot sets are independent shards.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use itertools::Itertools;

use crate::code::LinearCode;
use crate::gf::{Elem, Field};
use crate::insdel::lcs_len_with;
use crate::{Budgets, Result};

/// Number of `k`-dimensional subspaces of `GF(q)^n`.
pub fn gaussian_binomial(n: usize, k: usize, q: u64) -> u128 {
    if k > n {
        return 0;
    }
    let q = u128::from(q);
    let (mut num, mut den) = (1u128, 1u128);
    for i in 0..k as u32 {
        num *= q.pow(n as u32 - i) - 1;
        den *= q.pow(i + 1) - 1;
    }
    num / den
}

/// Binary RREF matrices with a fixed pivot set, as rows of bits.
struct Shard {
    n: usize,
    pivots: Vec<usize>,
    /// `(row, column)` of every free entry.
    free: Vec<(usize, usize)>,
    next_fill: u64,
    end: u64,
}

impl Shard {
    fn new(n: usize, pivots: Vec<usize>) -> Shard {
        let free: Vec<(usize, usize)> = pivots
            .iter()
            .enumerate()
            .flat_map(|(r, &p)| ((p + 1)..n).filter(|c| !pivots.contains(c)).map(move |c| (r, c)))
            .collect();
        let end = 1u64 << free.len();
        Shard {
            n,
            pivots,
            free,
            next_fill: 0,
            end,
        }
    }
}

impl Iterator for Shard {
    type Item = Vec<Vec<u8>>;

    fn next(&mut self) -> Option<Vec<Vec<u8>>> {
        if self.next_fill == self.end {
            return None;
        }
        let fill = self.next_fill;
        self.next_fill += 1;
        let mut rows = vec![vec![0u8; self.n]; self.pivots.len()];
        for (r, &p) in self.pivots.iter().enumerate() {
            rows[r][p] = 1;
        }
        for (b, &(r, c)) in self.free.iter().enumerate() {
            rows[r][c] = ((fill >> b) & 1) as u8;
        }
        Some(rows)
    }
}

fn binary_field() -> Arc<Field> {
    Arc::new(Field::prime(2).expect("2 is prime"))
}

fn to_code(field: &Arc<Field>, rows: &[Vec<u8>]) -> LinearCode {
    let rows: Vec<Vec<Elem>> = rows
        .iter()
        .map(|r| r.iter().map(|&b| if b == 1 { Elem::ONE } else { Elem::ZERO }).collect())
        .collect();
    LinearCode::from_rows(field, &rows).expect("RREF rows are independent")
}

/// Every `k`-dimensional binary code of length `n`, each in canonical form,
/// ordered by pivot set and then by free-entry fill.
pub fn enumerate_subspaces(
    n: usize,
    k: usize,
    budgets: &Budgets,
) -> Result<impl Iterator<Item = LinearCode>> {
    budgets.check_enumeration("subspaces", gaussian_binomial(n, k, 2))?;
    let field = binary_field();
    Ok((0..n)
        .combinations(k)
        .flat_map(move |pivots| Shard::new(n, pivots))
        .map(move |rows| to_code(&field, &rows)))
}

/// All `2^k` codewords spanned by binary rows, in message order.
fn span(rows: &[Vec<u8>]) -> Vec<Vec<u8>> {
    let n = rows.first().map_or(0, Vec::len);
    (0..1usize << rows.len())
        .map(|mask| {
            let mut w = vec![0u8; n];
            for (r, row) in rows.iter().enumerate() {
                if mask >> (rows.len() - 1 - r) & 1 == 1 {
                    w.iter_mut().zip(row).for_each(|(a, b)| *a ^= b);
                }
            }
            w
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum BoundKind {
    /// `max{2(n - 2k + 2), 2}`
    Half,
    /// `max{2(n - 2k + 1), 2}`, only for codes without the all-ones word.
    Strict,
}

impl BoundKind {
    pub fn value(self, n: usize, k: usize) -> usize {
        let slack = match self {
            BoundKind::Half => 2,
            BoundKind::Strict => 1,
        };
        (2 * (n + slack)).saturating_sub(4 * k).max(2)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum OnesFilter {
    RequireIn,
    RequireOut,
    Any,
}

impl OnesFilter {
    fn admits(self, has_ones: bool) -> bool {
        match self {
            OnesFilter::RequireIn => has_ones,
            OnesFilter::RequireOut => !has_ones,
            OnesFilter::Any => true,
        }
    }
}

/// Outcome of [`find_optimal`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    pub n: usize,
    pub k: usize,
    pub q: u32,
    pub bound: BoundKind,
    pub ones_filter: OnesFilter,
    /// A strict search always excludes codes containing the all-ones word.
    pub strict_excludes_ones: bool,
    pub target: usize,
    /// Canonical generators of the codes reaching `target`, sorted.
    pub matches: Vec<LinearCode>,
    pub subspaces_examined: u128,
    pub passed_filter: u128,
    pub pair_evaluations: u64,
}

#[derive(Default)]
struct ShardOutcome {
    matches: Vec<Vec<Vec<u8>>>,
    examined: u128,
    passed: u128,
    pairs: u64,
}

impl ShardOutcome {
    fn merge(mut self, other: ShardOutcome) -> ShardOutcome {
        self.matches.extend(other.matches);
        self.examined += other.examined;
        self.passed += other.passed;
        self.pairs += other.pairs;
        self
    }
}

/// Whether some pair of distinct words has an LCS longer than `max_lcs`,
/// stopping at the first one.
fn has_long_pair(words: &[Vec<u8>], max_lcs: usize, row: &mut [usize], pairs: &mut u64) -> bool {
    for (i, a) in words.iter().enumerate() {
        for b in &words[i + 1..] {
            *pairs += 1;
            if lcs_len_with(a, b, row) > max_lcs {
                return true;
            }
        }
    }
    false
}

fn run_shard(n: usize, pivots: Vec<usize>, filter: OnesFilter, strict: bool, target: usize) -> ShardOutcome {
    let mut out = ShardOutcome::default();
    let mut row = vec![0usize; n + 1];
    let max_lcs = n - target / 2;
    for rows in Shard::new(n, pivots) {
        out.examined += 1;
        let words = span(&rows);
        let has_ones = words.iter().any(|w| w.iter().all(|&b| b == 1));
        if !filter.admits(has_ones) || (strict && has_ones) {
            continue;
        }
        out.passed += 1;
        if !has_long_pair(&words, max_lcs, &mut row, &mut out.pairs) {
            out.matches.push(rows);
        }
    }
    out
}

/// Every binary `[n, k]` code passing `ones_filter` whose insdel distance
/// equals the chosen bound.
///
/// Both bounds hold for every eligible code, so a code matches exactly when
/// no pair of codewords has an LCS longer than `n - target/2`; each code is
/// abandoned at its first such pair.
pub fn find_optimal(
    n: usize,
    k: usize,
    bound: BoundKind,
    ones_filter: OnesFilter,
    budgets: &Budgets,
) -> Result<SearchResult> {
    let count = gaussian_binomial(n, k, 2);
    budgets.check_enumeration("subspaces", count)?;
    budgets.check_pairs(count.saturating_mul(pairs_per_code(k)))?;
    let target = bound.value(n, k);
    let strict = bound == BoundKind::Strict;
    let shards: Vec<Vec<usize>> = (0..n).combinations(k).collect();
    let outcome = run_shards(n, shards, ones_filter, strict, target);

    let field = binary_field();
    let mut matches: Vec<LinearCode> = outcome.matches.iter().map(|r| to_code(&field, r)).collect();
    matches.sort_by_key(|c| c.generator().to_rows());
    Ok(SearchResult {
        n,
        k,
        q: 2,
        bound,
        ones_filter,
        strict_excludes_ones: strict,
        target,
        matches,
        subspaces_examined: outcome.examined,
        passed_filter: outcome.passed,
        pair_evaluations: outcome.pairs,
    })
}

fn pairs_per_code(k: usize) -> u128 {
    let size = 1u128 << k;
    size * (size - 1) / 2
}

#[cfg(feature = "parallel")]
fn run_shards(n: usize, shards: Vec<Vec<usize>>, filter: OnesFilter, strict: bool, target: usize) -> ShardOutcome {
    use rayon::prelude::*;
    shards
        .into_par_iter()
        .map(|p| run_shard(n, p, filter, strict, target))
        .reduce(ShardOutcome::default, ShardOutcome::merge)
}

#[cfg(not(feature = "parallel"))]
fn run_shards(n: usize, shards: Vec<Vec<usize>>, filter: OnesFilter, strict: bool, target: usize) -> ShardOutcome {
    shards
        .into_iter()
        .map(|p| run_shard(n, p, filter, strict, target))
        .fold(ShardOutcome::default(), ShardOutcome::merge)
}

/// Whether every binary `[2k+3, k]` code has two distinct codewords with an
/// LCS of length at least `2k`.
pub fn lemma78_check(k: usize, budgets: &Budgets) -> Result<bool> {
    Ok(lemma78_counterexample(k, budgets)?.is_none())
}

/// The first binary `[2k+3, k]` code (in enumeration order) whose distinct
/// codewords all have LCS below `2k`.
///
/// At `k = 1` the code spanned by `11111` is one: its only pair has LCS 0.
pub fn lemma78_counterexample(k: usize, budgets: &Budgets) -> Result<Option<LinearCode>> {
    let n = 2 * k + 3;
    let count = gaussian_binomial(n, k, 2);
    budgets.check_enumeration("subspaces", count)?;
    budgets.check_pairs(count.saturating_mul(pairs_per_code(k)))?;
    let mut row = vec![0usize; n + 1];
    let mut pairs = 0;
    let found = (0..n)
        .combinations(k)
        .flat_map(|p| Shard::new(n, p))
        .find(|rows| !has_long_pair(&span(rows), 2 * k - 1, &mut row, &mut pairs));
    Ok(found.map(|rows| to_code(&binary_field(), &rows)))
}

/// One cell of [`conjecture_probe`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProbeEntry {
    pub k: usize,
    pub n: usize,
    pub bound: BoundKind,
    pub count: usize,
    /// The conjecture predicts no optimal code in this cell.
    pub predicted_zero: bool,
}

impl ProbeEntry {
    /// Observed count agrees with the prediction (always true when nothing is predicted).
    pub fn consistent(&self) -> bool {
        !self.predicted_zero || self.count == 0
    }
}

/// Counts optimal binary codes for each `k <= k_max`: strict at `n = 2k+1`
/// and `2k+2`, half at `n = 2k` and `2k+1`.
pub fn conjecture_probe(k_max: usize, budgets: &Budgets) -> Result<Vec<ProbeEntry>> {
    let mut entries = Vec::new();
    for k in 1..=k_max {
        let cells = [
            (2 * k + 1, BoundKind::Strict, OnesFilter::RequireOut, false),
            (2 * k + 2, BoundKind::Strict, OnesFilter::RequireOut, true),
            (2 * k, BoundKind::Half, OnesFilter::Any, false),
            (2 * k + 1, BoundKind::Half, OnesFilter::Any, true),
        ];
        for (n, bound, filter, predicted_zero) in cells {
            let result = find_optimal(n, k, bound, filter, budgets)?;
            entries.push(ProbeEntry {
                k,
                n,
                bound,
                count: result.matches.len(),
                predicted_zero,
            });
        }
    }
    Ok(entries)
}
