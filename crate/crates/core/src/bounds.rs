//! Upper bounds on the insdel distance of linear codes and the two
//! constructive engines behind them.
//!
//! * [`bound_report`] evaluates every bound with its own applicability rule.
//! * [`certify_strict_optimal`] checks the determinant condition that forces
//!   `d_I = 2(n - 2k + 1)` when `n > 2k`.
//! * [`strict_direct_bound`] searches for information-free coordinate pairs
//!   placed inside the zero gaps of a minimum-weight codeword, which witness
//!   `d_I <= 2(d_H - t)` by an explicit codeword pair.
//! * [`dual_pair_analysis`] computes the distances of a code and its dual.
//!
//! Positions are 0-based throughout.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use itertools::Itertools;

use crate::code::{binomial, LinearCode};
use crate::gf::Elem;
use crate::insdel::{code_insdel_distance, lcs, CommonSubsequence};
use crate::linalg::Matrix;
use crate::{Budgets, Error, Result};

/// Two increasing index vectors of equal length and their meet.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct IncreasingPair {
    pub i: Vec<usize>,
    pub j: Vec<usize>,
    /// Values `i[e] = j[e]` at the componentwise-equal positions `e`, in order.
    pub meet: Vec<usize>,
}

impl IncreasingPair {
    pub fn new(i: Vec<usize>, j: Vec<usize>) -> Result<IncreasingPair> {
        if i.len() != j.len() {
            return Err(Error::DimensionMismatch {
                expected: i.len(),
                found: j.len(),
            });
        }
        let increasing = |v: &[usize]| v.windows(2).all(|w| w[0] < w[1]);
        if !increasing(&i) || !increasing(&j) {
            return Err(Error::InvalidParameters(
                "index vectors must be strictly increasing".to_string(),
            ));
        }
        let meet = meet(&i, &j);
        Ok(IncreasingPair { i, j, meet })
    }
}

fn meet(i: &[usize], j: &[usize]) -> Vec<usize> {
    i.iter().zip(j).filter(|(a, b)| a == b).map(|(a, _)| *a).collect()
}

/// `M_IJ`: generator columns at `i` stacked over the columns at `j`.
pub fn stacked_matrix(generator: &Matrix, pair: &IncreasingPair) -> Matrix {
    generator
        .select_columns(&pair.i)
        .vstack(&generator.select_columns(&pair.j))
        .expect("same field and width")
}

/// A pair whose meet columns have rank below `k`, with `det(M_IJ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QualifyingPair {
    pub pair: IncreasingPair,
    pub meet_rank: usize,
    pub det: Elem,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FailureReason {
    /// The all-ones word is a codeword; the condition can never hold.
    AllOnesInCode { message: Vec<Elem> },
    /// A qualifying pair has a singular `M_IJ`.
    SingularPair(IncreasingPair),
}

/// Outcome of [`certify_strict_optimal`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertificateReport {
    pub verdict: Verdict,
    pub n: usize,
    pub k: usize,
    /// Unordered pairs `{I, J}` examined, `I = J` included.
    pub pairs_examined: u64,
    /// Every pair with meet rank below `k`, in lexicographic order.
    pub qualifying: Vec<QualifyingPair>,
    /// First failure in lexicographic pair order.
    pub failure: Option<FailureReason>,
    /// `2(n - 2k + 1)` on a pass.
    pub certified_distance: Option<usize>,
}

impl CertificateReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    /// Qualifying pairs with `I != J`.
    pub fn distinct_qualifying(&self) -> impl Iterator<Item = &QualifyingPair> {
        self.qualifying.iter().filter(|q| q.pair.i != q.pair.j)
    }
}

/// Checks the determinant condition certifying `d_I = 2(n - 2k + 1)`.
///
/// All unordered pairs `{I, J}` of increasing vectors of length `2k` are
/// enumerated, `I = J` included. A pair qualifies when the generator
/// columns indexed by the meet values have rank below `k`; every qualifying
/// pair must have a nonsingular `M_IJ`. Swapping `I` and `J` only permutes
/// rows of `M_IJ`, so unordered pairs suffice. For `I = J` the matrix has two
/// equal row blocks, so a qualifying `I = J` pair is an automatic failure.
pub fn certify_strict_optimal(code: &LinearCode, budgets: &Budgets) -> Result<CertificateReport> {
    let (n, k) = (code.n(), code.k());
    if n <= 2 * k {
        return Err(Error::CertifierPrecondition { n, k });
    }
    let vectors_count = binomial(n, 2 * k);
    let pair_count = vectors_count * (vectors_count + 1) / 2;
    budgets.check_enumeration("increasing-vector pairs", pair_count)?;

    let mut report = CertificateReport {
        verdict: Verdict::Pass,
        n,
        k,
        pairs_examined: 0,
        qualifying: Vec::new(),
        failure: None,
        certified_distance: None,
    };
    if let Some(message) = code.contains_all_ones() {
        report.verdict = Verdict::Fail;
        report.failure = Some(FailureReason::AllOnesInCode { message });
        return Ok(report);
    }

    let g = code.generator();
    let vectors: Vec<Vec<usize>> = (0..n).combinations(2 * k).collect();
    for (a, i) in vectors.iter().enumerate() {
        for j in &vectors[a..] {
            report.pairs_examined += 1;
            let m = meet(i, j);
            let meet_rank = if m.is_empty() {
                0
            } else {
                g.select_columns(&m).rank()
            };
            if meet_rank >= k {
                continue;
            }
            let pair = IncreasingPair {
                i: i.clone(),
                j: j.clone(),
                meet: m,
            };
            let det = stacked_matrix(g, &pair).det()?;
            if det.is_zero() && report.failure.is_none() {
                report.verdict = Verdict::Fail;
                report.failure = Some(FailureReason::SingularPair(pair.clone()));
            }
            report.qualifying.push(QualifyingPair {
                pair,
                meet_rank,
                det,
            });
        }
    }
    if report.passed() {
        report.certified_distance = Some(2 * (n - 2 * k + 1));
    }
    Ok(report)
}

/// Information-free coordinate pairs inside the zero gaps of a
/// minimum-weight codeword, and the codeword pair they produce.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrictDirectWitness {
    pub d_h: usize,
    /// Message `m` of the minimum-weight codeword `x = mG`.
    pub message: Vec<Elem>,
    pub codeword: Vec<Elem>,
    /// Zero positions of `x`, increasing.
    pub zero_positions: Vec<usize>,
    /// Pairs `(j_u, w_u)` with `x1[j_u] = x2[w_u]`, sorted by `j_u`.
    pub pairs: Vec<(usize, usize)>,
    /// Some pair lies before the first zero or after the last one.
    pub uses_sentinel_gap: bool,
    /// Solution of `v (G_j - G_w) = m G_w` for every pair.
    pub v: Vec<Elem>,
    pub x1: Vec<Elem>,
    pub x2: Vec<Elem>,
    pub common: CommonSubsequence,
}

impl StrictDirectWitness {
    pub fn t(&self) -> usize {
        self.pairs.len()
    }

    /// `2(d_H - t)`.
    pub fn bound(&self) -> usize {
        2 * (self.d_h - self.t())
    }

    /// Re-checks every invariant against the code.
    pub fn verify(&self, code: &LinearCode) -> bool {
        let f = code.field();
        let g = code.generator();
        let n = code.n();
        let Ok(x) = code.encode(&self.message) else {
            return false;
        };
        if x != self.codeword || crate::code::weight(&x) != self.d_h {
            return false;
        }
        let zeros: Vec<usize> = (0..n).filter(|&i| x[i].is_zero()).collect();
        if zeros != self.zero_positions {
            return false;
        }
        let gaps = gap_ids(&x);
        let mut positions: Vec<usize> = Vec::new();
        for &(j, w) in &self.pairs {
            if j == w || gaps[j].is_none() || gaps[j] != gaps[w] {
                return false;
            }
            positions.push(j);
            positions.push(w);
        }
        if !crate::code::distinct(&positions) || !code.is_information_free(&positions) {
            return false;
        }
        if !order_consistent(&self.pairs, &gaps) {
            return false;
        }
        let equations_hold = self.pairs.iter().all(|&(j, w)| {
            let lhs = dot(f, &self.v, &g.column(j));
            let rhs = f.add(dot(f, &self.v, &g.column(w)), dot(f, &self.message, &g.column(w)));
            lhs == rhs
        });
        let Ok(x1) = code.encode(&self.v) else {
            return false;
        };
        let x2: Vec<Elem> = x1.iter().zip(&x).map(|(&a, &b)| f.add(a, b)).collect();
        equations_hold
            && x1 == self.x1
            && x2 == self.x2
            && lcs(&x1, &x2).len >= n - self.d_h + self.t()
    }
}

fn dot(f: &crate::gf::Field, a: &[Elem], b: &[Elem]) -> Elem {
    a.iter()
        .zip(b)
        .fold(Elem::ZERO, |acc, (&x, &y)| f.add(acc, f.mul(x, y)))
}

/// Gap index of each support position; `None` at zeros. Gap `g` is the run
/// of support positions after the `g`-th zero (gap 0 precedes the first zero).
fn gap_ids(x: &[Elem]) -> Vec<Option<usize>> {
    let mut gap = 0;
    x.iter()
        .map(|e| {
            if e.is_zero() {
                gap += 1;
                None
            } else {
                Some(gap)
            }
        })
        .collect()
}

/// Pairs sharing a gap must be ordered the same way on both sides.
fn order_consistent(pairs: &[(usize, usize)], gaps: &[Option<usize>]) -> bool {
    pairs.iter().tuple_combinations().all(|(&(j1, w1), &(j2, w2))| {
        gaps[j1] != gaps[j2] || ((j1 < j2) == (w1 < w2))
    })
}

/// Builds the witness for a given minimum-weight message and pair selection.
///
/// Fails with [`Error::InvalidParameters`] when the selection violates the
/// gap, distinctness, order or information-free conditions.
pub fn strict_direct_witness(
    code: &LinearCode,
    message: &[Elem],
    pairs: &[(usize, usize)],
    budgets: &Budgets,
) -> Result<StrictDirectWitness> {
    let d_h = code.hamming_distance(budgets.enumeration)?.distance;
    build_witness(code, d_h, message, pairs)
}

fn build_witness(
    code: &LinearCode,
    d_h: usize,
    message: &[Elem],
    pairs: &[(usize, usize)],
) -> Result<StrictDirectWitness> {
    let f = code.field();
    let g = code.generator();
    let n = code.n();
    let x = code.encode(message)?;
    if crate::code::weight(&x) != d_h {
        return Err(Error::InvalidParameters(
            "message does not encode a minimum-weight codeword".to_string(),
        ));
    }
    let mut pairs = pairs.to_vec();
    pairs.sort_unstable();
    let gaps = gap_ids(&x);
    let mut positions = Vec::new();
    for &(j, w) in &pairs {
        if j >= n || w >= n || j == w || gaps[j].is_none() || gaps[j] != gaps[w] {
            return Err(Error::InvalidParameters(
                "each pair must be two distinct positions inside one gap".to_string(),
            ));
        }
        positions.push(j);
        positions.push(w);
    }
    if !code.is_information_free(&positions) {
        return Err(Error::InvalidParameters(
            "pair positions are not an information-free subset".to_string(),
        ));
    }
    if !order_consistent(&pairs, &gaps) {
        return Err(Error::InvalidParameters(
            "pairs sharing a gap are not order-consistent".to_string(),
        ));
    }

    // v . (G_j - G_w) = m . G_w, one column per pair
    let k = code.k();
    let mut a = Matrix::zeros(f, k, pairs.len());
    let mut b = Vec::with_capacity(pairs.len());
    for (u, &(j, w)) in pairs.iter().enumerate() {
        let (gj, gw) = (g.column(j), g.column(w));
        for r in 0..k {
            a.set(r, u, f.sub(gj[r], gw[r]));
        }
        b.push(dot(f, message, &gw));
    }
    let v = a
        .solve_left(&b)?
        .expect("independent difference columns make the system solvable");
    let x1 = code.encode(&v)?;
    let x2: Vec<Elem> = x1.iter().zip(&x).map(|(&p, &q)| f.add(p, q)).collect();
    let common = lcs(&x1, &x2);
    let last_gap = n - d_h;
    let uses_sentinel_gap = pairs
        .iter()
        .any(|&(j, _)| matches!(gaps[j], Some(0)) || gaps[j] == Some(last_gap));
    let witness = StrictDirectWitness {
        d_h,
        message: message.to_vec(),
        codeword: x.clone(),
        zero_positions: (0..n).filter(|&i| x[i].is_zero()).collect(),
        pairs,
        uses_sentinel_gap,
        v,
        x1,
        x2,
        common,
    };
    debug_assert!(witness.common.len >= n - d_h + witness.t());
    Ok(witness)
}

/// Searches the minimum-weight codewords for the largest `t`.
///
/// For each minimum-weight codeword (at most `budgets.enumeration` of them,
/// in message order) the pair selections are searched exhaustively with
/// pruning. The first codeword reaching the best `t` is reported. Returns
/// `None` when no codeword admits even one pair.
pub fn strict_direct_bound(code: &LinearCode, budgets: &Budgets) -> Result<Option<StrictDirectWitness>> {
    let (d_h, candidates) = code.min_weight_codewords(budgets.enumeration)?;
    let cap = code.k() / 2;
    let mut best: Option<(Vec<Elem>, Vec<(usize, usize)>)> = None;
    for (message, x) in candidates {
        let selection = best_pairs(code, &x, best.as_ref().map_or(0, |b| b.1.len()));
        if let Some(sel) = selection {
            best = Some((message, sel));
            if best.as_ref().is_some_and(|b| b.1.len() == cap) {
                break;
            }
        }
    }
    match best {
        Some((message, pairs)) => Ok(Some(build_witness(code, d_h, &message, &pairs)?)),
        None => Ok(None),
    }
}

/// Best pair selection for one codeword if it beats `incumbent`.
fn best_pairs(code: &LinearCode, x: &[Elem], incumbent: usize) -> Option<Vec<(usize, usize)>> {
    let gaps = gap_ids(x);
    let n = x.len();
    let gap_count = gaps.iter().flatten().max().map_or(0, |g| g + 1);
    let mut gap_sizes = vec![0usize; gap_count];
    for g in gaps.iter().flatten() {
        gap_sizes[*g] += 1;
    }
    let cap = (code.k() / 2).min(gap_sizes.iter().map(|s| s / 2).sum());
    if cap <= incumbent {
        return None;
    }
    // ordered candidates (j, w), sorted by j then w
    let candidates: Vec<(usize, usize)> = (0..n)
        .flat_map(|j| (0..n).map(move |w| (j, w)))
        .filter(|&(j, w)| j != w && gaps[j].is_some() && gaps[j] == gaps[w])
        .collect();
    let mut search = PairSearch {
        code,
        gaps: &gaps,
        candidates: &candidates,
        cap,
        used: vec![false; n],
        unused_in_gap: gap_sizes,
        chosen: Vec::new(),
        best: Vec::new(),
        best_len: incumbent,
    };
    search.extend(0);
    (search.best_len > incumbent).then_some(search.best)
}

struct PairSearch<'a> {
    code: &'a LinearCode,
    gaps: &'a [Option<usize>],
    candidates: &'a [(usize, usize)],
    cap: usize,
    used: Vec<bool>,
    unused_in_gap: Vec<usize>,
    chosen: Vec<(usize, usize)>,
    best: Vec<(usize, usize)>,
    best_len: usize,
}

impl PairSearch<'_> {
    fn extend(&mut self, from: usize) {
        if self.chosen.len() > self.best_len {
            self.best_len = self.chosen.len();
            self.best = self.chosen.clone();
        }
        if self.best_len >= self.cap {
            return;
        }
        let room: usize = self.unused_in_gap.iter().map(|s| s / 2).sum();
        if self.chosen.len() + room <= self.best_len {
            return;
        }
        for idx in from..self.candidates.len() {
            let (j, w) = self.candidates[idx];
            if self.used[j] || self.used[w] {
                continue;
            }
            let gap = self.gaps[j].expect("candidates lie in gaps");
            // j increases along `chosen`, so w must too within a gap
            let consistent = self
                .chosen
                .iter()
                .all(|&(j2, w2)| self.gaps[j2] != Some(gap) || (j2 < j && w2 < w));
            if !consistent {
                continue;
            }
            self.chosen.push((j, w));
            let positions: Vec<usize> = self.chosen.iter().flat_map(|&(a, b)| [a, b]).collect();
            if self.code.is_information_free(&positions) {
                self.used[j] = true;
                self.used[w] = true;
                self.unused_in_gap[gap] -= 2;
                // next pair has a larger j
                let next = self.candidates.partition_point(|&(cj, _)| cj <= j);
                self.extend(next.max(idx + 1));
                self.used[j] = false;
                self.used[w] = false;
                self.unused_in_gap[gap] += 2;
            }
            self.chosen.pop();
            if self.best_len >= self.cap {
                return;
            }
        }
    }
}

/// One bound: its value when applicable, and why.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundEntry {
    pub value: Option<usize>,
    pub applicable: bool,
    pub reason: String,
}

impl BoundEntry {
    fn applies(value: usize, reason: &str) -> BoundEntry {
        BoundEntry {
            value: Some(value),
            applicable: true,
            reason: reason.to_string(),
        }
    }

    fn inapplicable(value: Option<usize>, reason: &str) -> BoundEntry {
        BoundEntry {
            value,
            applicable: false,
            reason: reason.to_string(),
        }
    }
}

pub const DIRECT: &str = "direct";
pub const DIRECT_SINGLETON: &str = "direct-singleton";
pub const IMPROVED_SINGLETON: &str = "improved-singleton";
pub const HALF_SINGLETON: &str = "half-singleton";
pub const STRICT_HALF_SINGLETON: &str = "strict-half-singleton";
pub const PROJECTIVE_STRICT_DIRECT: &str = "projective-strict-direct";
pub const STRICT_DIRECT: &str = "strict-direct";

/// Every upper bound on `d_I` for one code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub n: usize,
    pub k: usize,
    /// `None` when the Hamming distance could not be determined within budget.
    pub d_h: Option<usize>,
    pub contains_all_ones: bool,
    pub projective: bool,
    pub bounds: BTreeMap<&'static str, BoundEntry>,
    pub strict_direct_witness: Option<StrictDirectWitness>,
    /// Minimum over the applicable bounds.
    pub envelope: usize,
}

impl BoundReport {
    pub fn get(&self, name: &str) -> Option<&BoundEntry> {
        self.bounds.get(name)
    }

    /// Value of `name` if it is applicable.
    pub fn applicable_value(&self, name: &str) -> Option<usize> {
        self.get(name).filter(|e| e.applicable).and_then(|e| e.value)
    }
}

/// Evaluates every bound for `code`.
///
/// The Hamming distance comes from full enumeration; past the enumeration
/// budget an MDS code still gets `d_H = n - k + 1`, otherwise the bounds
/// that need `d_H` are marked inapplicable.
pub fn bound_report(code: &LinearCode, budgets: &Budgets) -> BoundReport {
    let (n, k) = (code.n(), code.k());
    let d_h = match code.hamming_distance(budgets.enumeration) {
        Ok(mw) => Some(mw.distance),
        Err(_) => match code.is_mds(budgets) {
            Ok(true) => Some(n - k + 1),
            _ => None,
        },
    };
    let contains_all_ones = code.contains_all_ones().is_some();
    let projective = code.is_projective();
    let mut bounds = BTreeMap::new();

    bounds.insert(
        DIRECT,
        match d_h {
            Some(d) => BoundEntry::applies(2 * d, "2 d_H, valid for every code"),
            None => BoundEntry::inapplicable(None, "Hamming distance not determined within budget"),
        },
    );
    bounds.insert(
        DIRECT_SINGLETON,
        BoundEntry::applies(2 * (n - k + 1), "2(n - k + 1), from the Singleton bound"),
    );
    bounds.insert(
        IMPROVED_SINGLETON,
        if n > k && k >= 2 {
            BoundEntry::applies(
                2 * (n - k),
                "2(n - k), applied for n > k >= 2 (stated in places with k > 2; the k = 2 case is the two-dimensional result)",
            )
        } else {
            BoundEntry::inapplicable(Some(2 * (n - k)), "requires n > k >= 2")
        },
    );
    let half = (2 * (n + 2)).saturating_sub(4 * k).max(2);
    bounds.insert(
        HALF_SINGLETON,
        BoundEntry::applies(half, "max{2(n - 2k + 2), 2}, valid for every linear code"),
    );
    let strict_half = (2 * (n + 1)).saturating_sub(4 * k).max(2);
    bounds.insert(
        STRICT_HALF_SINGLETON,
        if contains_all_ones {
            BoundEntry::inapplicable(Some(strict_half), "the all-ones word is a codeword")
        } else {
            BoundEntry::applies(strict_half, "max{2(n - 2k + 1), 2}, the all-ones word is not a codeword")
        },
    );
    bounds.insert(
        PROJECTIVE_STRICT_DIRECT,
        match d_h {
            Some(d) if projective && 2 * d > n + 1 => {
                BoundEntry::applies(2 * (d - 1), "2(d_H - 1): projective with d_H > (n + 1)/2")
            }
            Some(d) if !projective => {
                BoundEntry::inapplicable(Some(2 * d.saturating_sub(1)), "code is not projective")
            }
            Some(d) => BoundEntry::inapplicable(Some(2 * d.saturating_sub(1)), "requires d_H > (n + 1)/2"),
            None => BoundEntry::inapplicable(None, "Hamming distance not determined within budget"),
        },
    );
    let witness = strict_direct_bound(code, budgets);
    let strict_direct_witness = match witness {
        Ok(Some(w)) => {
            let reason = if w.uses_sentinel_gap {
                "2(d_H - t) from an information-free pair selection; uses a gap before the first or after the last zero"
            } else {
                "2(d_H - t) from an information-free pair selection"
            };
            bounds.insert(STRICT_DIRECT, BoundEntry::applies(w.bound(), reason));
            Some(w)
        }
        Ok(None) => {
            bounds.insert(
                STRICT_DIRECT,
                BoundEntry::inapplicable(None, "no pair fits inside a zero gap of any minimum-weight codeword"),
            );
            None
        }
        Err(_) => {
            bounds.insert(
                STRICT_DIRECT,
                BoundEntry::inapplicable(None, "minimum-weight codewords not enumerable within budget"),
            );
            None
        }
    };
    let envelope = bounds
        .values()
        .filter(|e| e.applicable)
        .filter_map(|e| e.value)
        .min()
        .expect("direct-singleton always applies");
    BoundReport {
        n,
        k,
        d_h,
        contains_all_ones,
        projective,
        bounds,
        strict_direct_witness,
        envelope,
    }
}

/// Insdel distances of a code and its dual.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualPairReport {
    pub n: usize,
    pub k: usize,
    pub d_i: usize,
    pub d_i_dual: usize,
    /// Both distances exceed 2.
    pub both_correcting: bool,
    /// When both correct errors: `n = 2k`, all-ones in the code, both
    /// distances 4, and the characteristic divides `n`.
    pub consequences: Option<DualConsequences>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualConsequences {
    pub n_is_twice_k: bool,
    pub contains_all_ones: bool,
    pub both_distances_four: bool,
    pub characteristic_divides_n: bool,
}

impl DualConsequences {
    pub fn all_hold(&self) -> bool {
        self.n_is_twice_k
            && self.contains_all_ones
            && self.both_distances_four
            && self.characteristic_divides_n
    }
}

pub fn dual_pair_analysis(code: &LinearCode, budgets: &Budgets) -> Result<DualPairReport> {
    let dual = code.dual()?;
    let d_i = code_insdel_distance(code, budgets)?.distance;
    let d_i_dual = code_insdel_distance(&dual, budgets)?.distance;
    let both_correcting = d_i > 2 && d_i_dual > 2;
    let (n, k) = (code.n(), code.k());
    let consequences = both_correcting.then(|| DualConsequences {
        n_is_twice_k: n == 2 * k,
        contains_all_ones: code.contains_all_ones().is_some(),
        both_distances_four: d_i == 4 && d_i_dual == 4,
        characteristic_divides_n: n % code.field().characteristic() as usize == 0,
    });
    Ok(DualPairReport {
        n,
        k,
        d_i,
        d_i_dual,
        both_correcting,
        consequences,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::Field;
    use alloc::sync::Arc;

    fn bin(rows: &[&[u32]]) -> LinearCode {
        let f = Arc::new(Field::prime(2).unwrap());
        let rows: Vec<Vec<Elem>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| f.element(v).unwrap()).collect())
            .collect();
        LinearCode::from_rows(&f, &rows).unwrap()
    }

    #[test]
    fn meet_collects_equal_components() {
        let p = IncreasingPair::new(vec![0, 1, 2, 3], vec![0, 2, 3, 4]).unwrap();
        assert_eq!(p.meet, vec![0]);
        let p = IncreasingPair::new(vec![1, 2, 3, 4], vec![0, 1, 2, 3]).unwrap();
        assert!(p.meet.is_empty());
        assert!(IncreasingPair::new(vec![1, 0], vec![0, 1]).is_err());
    }

    #[test]
    fn certifier_requires_n_above_2k() {
        let c = bin(&[&[1, 1, 0, 0], &[0, 0, 1, 1]]);
        assert_eq!(
            certify_strict_optimal(&c, &Budgets::default()).unwrap_err(),
            Error::CertifierPrecondition { n: 4, k: 2 }
        );
    }

    #[test]
    fn certifier_fails_on_non_optimal_code() {
        // d_I = 2 here, below 2(n - 2k + 1) = 4
        let c = bin(&[&[1, 0, 0, 0, 0], &[0, 1, 0, 0, 0]]);
        let r = certify_strict_optimal(&c, &Budgets::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Fail);
        let Some(FailureReason::SingularPair(p)) = &r.failure else {
            panic!("expected a singular pair, got {:?}", r.failure);
        };
        assert_eq!(stacked_matrix(c.generator(), p).det(), Ok(Elem::ZERO));
        assert!(c.generator().select_columns(&p.meet).rank() < 2);
        assert_eq!(r.certified_distance, None);
    }

    #[test]
    fn certifier_fails_when_all_ones_present() {
        let c = bin(&[&[1, 1, 1, 1, 1], &[0, 1, 0, 1, 0]]);
        let r = certify_strict_optimal(&c, &Budgets::default()).unwrap();
        assert!(matches!(r.failure, Some(FailureReason::AllOnesInCode { .. })));
    }

    #[test]
    fn isolated_support_admits_no_pairs() {
        let c = bin(&[&[1, 0, 1, 0, 1]]);
        assert_eq!(strict_direct_bound(&c, &Budgets::default()).unwrap(), None);
    }

    #[test]
    fn sentinel_gap_is_flagged() {
        // min-weight codeword 11000, its support sits before the first zero
        let c = bin(&[&[1, 1, 0, 0, 0], &[0, 1, 1, 1, 1]]);
        let w = strict_direct_bound(&c, &Budgets::default()).unwrap().unwrap();
        assert_eq!(w.t(), 1);
        assert!(w.uses_sentinel_gap);
        assert!(w.verify(&c));
    }

    #[test]
    fn witness_rejects_bad_selection() {
        let c = bin(&[&[1, 1, 0, 0, 0], &[0, 1, 1, 1, 1]]);
        let m = vec![Elem::ONE, Elem::ZERO];
        let b = Budgets::default();
        // positions 1 and 2 are in different gaps (2 is a zero of 11000)
        assert!(strict_direct_witness(&c, &m, &[(1, 2)], &b).is_err());
        assert!(strict_direct_witness(&c, &m, &[(0, 1)], &b).is_ok());
    }

    #[test]
    fn report_small_cases() {
        let b = Budgets::default();
        let r = bound_report(&bin(&[&[1, 1, 0, 0, 0], &[0, 0, 1, 1, 0]]), &b);
        assert_eq!(r.applicable_value(STRICT_HALF_SINGLETON), Some(4));
        let r = bound_report(&bin(&[&[1, 1, 0, 0], &[0, 0, 1, 1]]), &b);
        assert_eq!(r.applicable_value(HALF_SINGLETON), Some(4));
        assert_eq!(r.applicable_value(STRICT_HALF_SINGLETON), None);
        let r = bound_report(&bin(&[&[1, 0, 1], &[0, 1, 1]]), &b);
        assert_eq!(r.applicable_value(HALF_SINGLETON), Some(2));
        assert_eq!(r.envelope, 2);
    }

    #[test]
    fn dual_pairs() {
        let b = Budgets::default();
        let r = dual_pair_analysis(&bin(&[&[1, 1, 0, 0], &[0, 0, 1, 1]]), &b).unwrap();
        assert_eq!((r.d_i, r.d_i_dual), (4, 4));
        assert!(r.both_correcting && r.consequences.unwrap().all_hold());
        let r = dual_pair_analysis(&bin(&[&[1, 1, 1]]), &b).unwrap();
        assert_eq!(r.d_i_dual, 2);
        assert!(!r.both_correcting);
        let r = dual_pair_analysis(&bin(&[&[1, 1, 0, 0, 0], &[0, 0, 1, 1, 0]]), &b).unwrap();
        assert!(!r.both_correcting);
    }
}
