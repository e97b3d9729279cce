//! Longest common subsequences and insdel distances.
//!
//! For words of equal length `n`, the insdel distance (fewest insertions plus
//! deletions turning one into the other) is `2n - 2 * lcs`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use crate::code::{hamming, LinearCode};
use crate::gf::Elem;
use crate::{Budgets, Error, Result};

/// A common subsequence with its embeddings into both words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommonSubsequence {
    pub len: usize,
    /// Strictly increasing positions in the first word.
    pub a_positions: Vec<usize>,
    /// Strictly increasing positions in the second word.
    pub b_positions: Vec<usize>,
}

/// Length of a longest common subsequence.
pub fn lcs_len<T: PartialEq>(a: &[T], b: &[T]) -> usize {
    let mut row = vec![0usize; b.len() + 1];
    lcs_len_with(a, b, &mut row)
}

/// [`lcs_len`] with a caller-provided scratch row of length `b.len() + 1`.
pub(crate) fn lcs_len_with<T: PartialEq>(a: &[T], b: &[T], row: &mut [usize]) -> usize {
    row.fill(0);
    for x in a {
        let mut diag = 0;
        for (j, y) in b.iter().enumerate() {
            let up = row[j + 1];
            row[j + 1] = if x == y { diag + 1 } else { up.max(row[j]) };
            diag = up;
        }
    }
    row[b.len()]
}

/// A longest common subsequence with its embeddings.
pub fn lcs<T: PartialEq>(a: &[T], b: &[T]) -> CommonSubsequence {
    let (n, m) = (a.len(), b.len());
    let w = m + 1;
    let mut t = vec![0usize; (n + 1) * w];
    for i in 0..n {
        for j in 0..m {
            t[(i + 1) * w + j + 1] = if a[i] == b[j] {
                t[i * w + j] + 1
            } else {
                t[i * w + j + 1].max(t[(i + 1) * w + j])
            };
        }
    }
    let (mut i, mut j) = (n, m);
    let (mut pa, mut pb) = (Vec::new(), Vec::new());
    while i > 0 && j > 0 {
        if a[i - 1] == b[j - 1] && t[i * w + j] == t[(i - 1) * w + j - 1] + 1 {
            pa.push(i - 1);
            pb.push(j - 1);
            i -= 1;
            j -= 1;
        } else if t[(i - 1) * w + j] >= t[i * w + j - 1] {
            i -= 1;
        } else {
            j -= 1;
        }
    }
    pa.reverse();
    pb.reverse();
    CommonSubsequence {
        len: t[n * w + m],
        a_positions: pa,
        b_positions: pb,
    }
}

/// Insdel distance of two words of equal length.
pub fn insdel_distance_pair<T: PartialEq>(a: &[T], b: &[T]) -> Result<usize> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch {
            expected: a.len(),
            found: b.len(),
        });
    }
    Ok(2 * a.len() - 2 * lcs_len(a, b))
}

/// The minimum insdel distance of a word set and a pair attaining it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceWitness {
    pub distance: usize,
    /// Indices of the witness pair in the input list, `first < second`.
    pub first: usize,
    pub second: usize,
    pub word_a: Vec<Elem>,
    pub word_b: Vec<Elem>,
    pub common: CommonSubsequence,
    /// Number of unordered pairs in the input.
    pub pairs_total: u64,
}

impl DistanceWitness {
    pub fn lcs_len(&self) -> usize {
        self.common.len
    }
}

/// Exact minimum insdel distance over all unordered pairs of distinct
/// positions in `words`.
///
/// The witness is the least `(distance, first, second)` triple, so the
/// result does not depend on evaluation order. The sweep stops early once a
/// distance of 2 is found. Duplicate words give distance 0.
pub fn insdel_distance(words: &[Vec<Elem>], pair_budget: u64) -> Result<DistanceWitness> {
    let m = words.len();
    if m < 2 {
        return Err(Error::TooFewWords(m));
    }
    let n = words[0].len();
    if let Some(w) = words.iter().find(|w| w.len() != n) {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: w.len(),
        });
    }
    let pairs = (m as u128) * (m as u128 - 1) / 2;
    Budgets {
        enumeration: 0,
        pairs: pair_budget,
    }
    .check_pairs(pairs)?;

    // with distinct words lcs <= n - 1, which makes the early exit exact
    let (best_lcs, i, j) = match first_duplicate(words) {
        Some((i, j)) => (n, i, j),
        None => sweep(words),
    };
    let common = lcs(&words[i], &words[j]);
    debug_assert_eq!(common.len, best_lcs);
    Ok(DistanceWitness {
        distance: 2 * n - 2 * best_lcs,
        first: i,
        second: j,
        word_a: words[i].clone(),
        word_b: words[j].clone(),
        common,
        pairs_total: pairs as u64,
    })
}

/// Least `(i, j)` with `words[i] == words[j]`.
fn first_duplicate(words: &[Vec<Elem>]) -> Option<(usize, usize)> {
    let mut first_seen: BTreeMap<&[Elem], (usize, Option<usize>)> = BTreeMap::new();
    for (j, w) in words.iter().enumerate() {
        first_seen
            .entry(w.as_slice())
            .and_modify(|(_, second)| {
                second.get_or_insert(j);
            })
            .or_insert((j, None));
    }
    first_seen
        .into_values()
        .filter_map(|(i, j)| j.map(|j| (i, j)))
        .min()
}

/// Best pair in row `i`: maximal lcs, least `j` on ties.
fn best_in_row(words: &[Vec<Elem>], i: usize, scratch: &mut [usize]) -> (usize, usize) {
    let n = words[i].len();
    let mut best = (0usize, usize::MAX);
    for j in i + 1..words.len() {
        let l = lcs_len_with(&words[i], &words[j], scratch);
        if best.1 == usize::MAX || l > best.0 {
            best = (l, j);
            if l + 1 >= n {
                break;
            }
        }
    }
    best
}

/// Returns `(lcs, i, j)` maximizing lcs, least `(i, j)` on ties.
pub(crate) fn sweep_sequential(words: &[Vec<Elem>]) -> (usize, usize, usize) {
    let n = words[0].len();
    let mut scratch = vec![0usize; n + 1];
    let mut best = (0usize, usize::MAX, usize::MAX);
    for i in 0..words.len() - 1 {
        let (l, j) = best_in_row(words, i, &mut scratch);
        if best.1 == usize::MAX || l > best.0 {
            best = (l, i, j);
            if l + 1 >= n {
                break;
            }
        }
    }
    best
}

#[cfg(feature = "parallel")]
pub(crate) fn sweep_parallel(words: &[Vec<Elem>]) -> (usize, usize, usize) {
    use core::sync::atomic::{AtomicUsize, Ordering};
    use rayon::prelude::*;

    let n = words[0].len();
    // least row known to contain a pair at distance <= 2; later rows cannot win
    let cutoff = AtomicUsize::new(usize::MAX);
    (0..words.len() - 1)
        .into_par_iter()
        .map_init(
            || vec![0usize; n + 1],
            |scratch, i| {
                if i > cutoff.load(Ordering::Relaxed) {
                    return None;
                }
                let (l, j) = best_in_row(words, i, scratch);
                if l + 1 >= n {
                    cutoff.fetch_min(i, Ordering::Relaxed);
                }
                Some((l, i, j))
            },
        )
        .flatten()
        .reduce(
            || (0, usize::MAX, usize::MAX),
            |a, b| {
                if a.1 == usize::MAX {
                    return b;
                }
                if b.1 == usize::MAX {
                    return a;
                }
                // larger lcs wins, then smaller (i, j)
                if (core::cmp::Reverse(a.0), a.1, a.2) <= (core::cmp::Reverse(b.0), b.1, b.2) {
                    a
                } else {
                    b
                }
            },
        )
}

fn sweep(words: &[Vec<Elem>]) -> (usize, usize, usize) {
    #[cfg(feature = "parallel")]
    {
        if words.len() > 512 {
            return sweep_parallel(words);
        }
    }
    sweep_sequential(words)
}

/// Exact insdel distance of a linear code by comparing all codeword pairs.
pub fn code_insdel_distance(code: &LinearCode, budgets: &Budgets) -> Result<DistanceWitness> {
    let size = code.size();
    budgets.check_enumeration("codewords", size)?;
    budgets.check_pairs(size.saturating_mul(size.saturating_sub(1)) / 2)?;
    let words = code.all_codewords(budgets.enumeration)?;
    insdel_distance(&words, budgets.pairs)
}

/// Minimum Hamming distance between distinct positions of a word list.
pub fn min_hamming_distance(words: &[Vec<Elem>]) -> Result<usize> {
    if words.len() < 2 {
        return Err(Error::TooFewWords(words.len()));
    }
    let mut best = usize::MAX;
    for i in 0..words.len() {
        for j in i + 1..words.len() {
            best = best.min(hamming(&words[i], &words[j]));
        }
    }
    Ok(best)
}

/// A codeword `c`, positions `u <= v` and a scalar `alpha` such that
/// `x` (zero outside `u..=v`, `x_i = c_{i+1} - c_i` for `u <= i < v`,
/// `x_v = alpha`) is a nonzero codeword. Such a certificate exists exactly
/// when the code has insdel distance 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceTwoCertificate {
    pub codeword: Vec<Elem>,
    /// 0-based.
    pub u: usize,
    /// 0-based.
    pub v: usize,
    pub alpha: Elem,
    pub x: Vec<Elem>,
}

impl DistanceTwoCertificate {
    /// `x` has the required shape relative to `codeword`, `u`, `v`, `alpha`.
    pub fn is_well_formed(&self, code: &LinearCode) -> bool {
        let f = code.field();
        let c = &self.codeword;
        let n = c.len();
        if self.u > self.v || self.v >= n || self.x.len() != n {
            return false;
        }
        let shape_ok = (0..n).all(|i| {
            let expected = if i < self.u || i > self.v {
                Elem::ZERO
            } else if i < self.v {
                f.sub(c[i + 1], c[i])
            } else {
                self.alpha
            };
            self.x[i] == expected
        });
        shape_ok
            && self.x.iter().any(|x| !x.is_zero())
            && code.contains(&self.x).unwrap_or(false)
            && code.contains(c).unwrap_or(false)
    }
}

/// Searches every codeword `c`, every `u <= v` and every `alpha` for a
/// [`DistanceTwoCertificate`]; returns the first in that order.
pub fn has_distance_two(code: &LinearCode, budget: u64) -> Result<Option<DistanceTwoCertificate>> {
    let f = code.field();
    let words = code.all_codewords(budget)?;
    let members: BTreeSet<&[Elem]> = words.iter().map(Vec::as_slice).collect();
    let n = code.n();
    let mut x = vec![Elem::ZERO; n];
    for c in &words {
        for u in 0..n {
            for v in u..n {
                x.fill(Elem::ZERO);
                for i in u..v {
                    x[i] = f.sub(c[i + 1], c[i]);
                }
                for alpha in f.elements() {
                    x[v] = alpha;
                    if x.iter().any(|e| !e.is_zero()) && members.contains(x.as_slice()) {
                        return Ok(Some(DistanceTwoCertificate {
                            codeword: c.clone(),
                            u,
                            v,
                            alpha,
                            x: x.clone(),
                        }));
                    }
                }
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::Field;
    use alloc::sync::Arc;

    fn word(f: &Field, toks: &str) -> Vec<Elem> {
        toks.split_whitespace().map(|t| f.parse(t).unwrap()).collect()
    }

    #[test]
    fn lcs_basics() {
        assert_eq!(lcs_len(b"abcde", b"abcde"), 5);
        assert_eq!(lcs_len(&[0u8; 5], &[1u8; 5]), 0);
        assert_eq!(lcs_len(b"", b"abc"), 0);
        let c = lcs(b"axbycz", b"abc");
        assert_eq!(c.len, 3);
        assert_eq!(c.a_positions, vec![0, 2, 4]);
        assert_eq!(c.b_positions, vec![0, 1, 2]);
    }

    #[test]
    fn gf49_exhibited_pair() {
        let f = Field::new(7, 2, None).unwrap();
        let a = word(&f, "w^38 w^14 w^7 w^15 w^21");
        let b = word(&f, "w^2 w^38 w^14 w^7 w^2");
        assert_eq!(lcs_len(&a, &b), 3);
        assert_eq!(insdel_distance_pair(&a, &b), Ok(4));
    }

    #[test]
    fn binary_eleven_four_pair() {
        let x1 = [0u8, 1, 1, 1, 0, 0, 1, 1, 0, 1, 1];
        let x2 = [0u8, 1, 1, 0, 1, 0, 1, 0, 1, 1, 1];
        assert_eq!(lcs_len(&x1, &x2), 9);
        assert_eq!(insdel_distance_pair(&x1, &x2), Ok(4));
        assert_eq!(insdel_distance_pair(&x1, &x1), Ok(0));
        assert!(insdel_distance_pair(&x1, &x2[..3]).is_err());
    }

    #[test]
    fn duplicates_give_distance_zero() {
        let a = vec![Elem::ZERO, Elem::ONE, Elem::ONE];
        let b = vec![Elem::ONE, Elem::ONE, Elem::ZERO];
        let c = vec![Elem::ONE, Elem::ZERO, Elem::ONE];
        let words = vec![a.clone(), b.clone(), c, b, a];
        let w = insdel_distance(&words, 100).unwrap();
        assert_eq!((w.distance, w.first, w.second), (0, 0, 4));
    }

    #[test]
    fn set_distance_errors() {
        assert_eq!(insdel_distance(&[], 10), Err(Error::TooFewWords(0)));
        let w = vec![vec![Elem::ZERO; 3]; 5];
        assert!(matches!(
            insdel_distance(&w, 9),
            Err(Error::BudgetExceeded { required: 10, .. })
        ));
    }

    #[test]
    fn distance_two_on_short_code() {
        let f = Arc::new(Field::prime(2).unwrap());
        let code = LinearCode::from_rows(&f, &[vec![Elem::ONE, Elem::ZERO]]).unwrap();
        let cert = has_distance_two(&code, 100).unwrap().unwrap();
        assert!(cert.is_well_formed(&code));
        let d = code_insdel_distance(&code, &Budgets::default()).unwrap();
        assert_eq!(d.distance, 2);
    }
}
