//! Linear codes given by a full-rank generator matrix.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use itertools::Itertools;

use crate::gf::{Elem, Field};
use crate::linalg::Matrix;
use crate::{Budgets, Error, Result};

/// An `[n, k]` linear code over a finite field.
///
/// Identity is the row space: two codes are the same code iff their
/// generators have the same reduced row echelon form ([`LinearCode::same_code`]).
/// Coordinate order is significant (insdel distance depends on it) and is
/// never normalized.
#[derive(Clone, Debug)]
pub struct LinearCode {
    generator: Matrix,
}

impl PartialEq for LinearCode {
    fn eq(&self, other: &LinearCode) -> bool {
        self.same_code(other)
    }
}

impl Eq for LinearCode {}

/// A minimum-weight codeword together with its message.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinWeight {
    pub distance: usize,
    pub message: Vec<Elem>,
    pub codeword: Vec<Elem>,
}

impl LinearCode {
    /// Validates that `generator` is nonempty with full row rank.
    pub fn new(generator: Matrix) -> Result<LinearCode> {
        if generator.rows() == 0 || generator.cols() == 0 {
            return Err(Error::EmptyGenerator);
        }
        let rank = generator.rank();
        if rank < generator.rows() {
            return Err(Error::RankDeficient {
                rank,
                rows: generator.rows(),
            });
        }
        Ok(LinearCode { generator })
    }

    pub fn from_rows(field: &Arc<Field>, rows: &[Vec<Elem>]) -> Result<LinearCode> {
        LinearCode::new(Matrix::from_rows(field, rows)?)
    }

    pub fn field(&self) -> &Arc<Field> {
        self.generator.field()
    }

    pub fn generator(&self) -> &Matrix {
        &self.generator
    }

    /// Code length.
    pub fn n(&self) -> usize {
        self.generator.cols()
    }

    /// Dimension.
    pub fn k(&self) -> usize {
        self.generator.rows()
    }

    /// Number of codewords `q^k`, saturating at `u128::MAX`.
    pub fn size(&self) -> u128 {
        u128::from(self.field().order())
            .checked_pow(self.k() as u32)
            .unwrap_or(u128::MAX)
    }

    pub fn encode(&self, message: &[Elem]) -> Result<Vec<Elem>> {
        self.generator.left_mul(message)
    }

    /// All `(message, codeword)` pairs in lexicographic message order.
    pub fn codewords(&self, budget: u64) -> Result<Codewords<'_>> {
        Budgets {
            enumeration: budget,
            pairs: 0,
        }
        .check_enumeration("codewords", self.size())?;
        Ok(Codewords {
            code: self,
            message: vec![Elem::ZERO; self.k()],
            done: false,
        })
    }

    /// Every codeword, in lexicographic message order.
    pub fn all_codewords(&self, budget: u64) -> Result<Vec<Vec<Elem>>> {
        Ok(self.codewords(budget)?.map(|(_, c)| c).collect())
    }

    /// Minimum Hamming weight of a nonzero codeword, with the first
    /// codeword (in message order) attaining it.
    pub fn hamming_distance(&self, budget: u64) -> Result<MinWeight> {
        let mut best: Option<MinWeight> = None;
        for (message, codeword) in self.codewords(budget)?.skip(1) {
            let w = weight(&codeword);
            if best.as_ref().is_none_or(|b| w < b.distance) {
                best = Some(MinWeight {
                    distance: w,
                    message,
                    codeword,
                });
            }
        }
        Ok(best.expect("k >= 1 gives a nonzero codeword"))
    }

    /// All minimum-weight codewords with their messages, up to `budget` of
    /// them, together with the minimum weight.
    pub fn min_weight_codewords(&self, budget: u64) -> Result<(usize, Vec<(Vec<Elem>, Vec<Elem>)>)> {
        let all: Vec<_> = self.codewords(budget)?.skip(1).collect();
        let d = all
            .iter()
            .map(|(_, c)| weight(c))
            .min()
            .expect("k >= 1 gives a nonzero codeword");
        let words = all.into_iter().filter(|(_, c)| weight(c) == d).collect();
        Ok((d, words))
    }

    /// The orthogonal complement, generated by a basis of the left kernel
    /// of `G^T`.
    pub fn dual(&self) -> Result<LinearCode> {
        if self.k() == self.n() {
            return Err(Error::FullSpaceDual);
        }
        let basis = self.generator.transpose().left_kernel();
        LinearCode::from_rows(self.field(), &basis)
    }

    /// The message encoding `word`, if `word` is a codeword.
    pub fn message_of(&self, word: &[Elem]) -> Result<Option<Vec<Elem>>> {
        self.generator.solve_left(word)
    }

    pub fn contains(&self, word: &[Elem]) -> Result<bool> {
        Ok(self.message_of(word)?.is_some())
    }

    /// The message `x` with `xG = (1, ..., 1)`, if the all-ones word is a codeword.
    pub fn contains_all_ones(&self) -> Option<Vec<Elem>> {
        let ones = vec![Elem::ONE; self.n()];
        self.message_of(&ones).expect("length matches n")
    }

    /// All columns nonzero and pairwise linearly independent.
    pub fn is_projective(&self) -> bool {
        let g = &self.generator;
        if (0..self.n()).any(|c| g.column(c).iter().all(|x| x.is_zero())) {
            return false;
        }
        (0..self.n())
            .tuple_combinations()
            .all(|(a, b)| g.select_columns(&[a, b]).rank() == 2)
    }

    /// Whether the projection onto `positions` (0-based) is surjective.
    pub fn is_information_free(&self, positions: &[usize]) -> bool {
        if positions.len() > self.k() {
            return false;
        }
        if positions.iter().any(|&p| p >= self.n()) || !distinct(positions) {
            return false;
        }
        self.generator.select_columns(positions).rank() == positions.len()
    }

    /// Checks that every set of `n - d_H + 1` columns has rank `k`.
    pub fn lemma1_holds(&self, budgets: &Budgets) -> Result<bool> {
        let d = self.hamming_distance(budgets.enumeration)?.distance;
        let s = self.n() - d + 1;
        budgets.check_enumeration("column subsets", binomial(self.n(), s))?;
        Ok((0..self.n())
            .combinations(s)
            .all(|cols| self.generator.select_columns(&cols).rank() == self.k()))
    }

    /// Every `k` columns independent, i.e. `d_H = n - k + 1`.
    pub fn is_mds(&self, budgets: &Budgets) -> Result<bool> {
        budgets.check_enumeration("column subsets", binomial(self.n(), self.k()))?;
        Ok((0..self.n())
            .combinations(self.k())
            .all(|cols| self.generator.select_columns(&cols).rank() == self.k()))
    }

    /// Reduced row echelon form of the generator: the canonical form.
    pub fn canonical_generator(&self) -> Matrix {
        self.generator.rref().0
    }

    /// A copy of this code with its canonical generator.
    pub fn canonical(&self) -> LinearCode {
        LinearCode {
            generator: self.canonical_generator(),
        }
    }

    pub fn same_code(&self, other: &LinearCode) -> bool {
        self.canonical_generator() == other.canonical_generator()
    }
}

/// Iterator over `(message, codeword)` pairs.
pub struct Codewords<'a> {
    code: &'a LinearCode,
    message: Vec<Elem>,
    done: bool,
}

impl Iterator for Codewords<'_> {
    type Item = (Vec<Elem>, Vec<Elem>);

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        let msg = self.message.clone();
        let word = self.code.encode(&msg).expect("message length is k");
        // odometer, last coordinate fastest
        let q = self.code.field().order();
        self.done = true;
        for slot in self.message.iter_mut().rev() {
            let next = slot.index() + 1;
            if next < q {
                *slot = self.code.field().element(next).expect("below q");
                self.done = false;
                break;
            }
            *slot = Elem::ZERO;
        }
        Some((msg, word))
    }
}

pub(crate) fn distinct(positions: &[usize]) -> bool {
    let mut sorted = positions.to_vec();
    sorted.sort_unstable();
    sorted.windows(2).all(|w| w[0] != w[1])
}

/// Number of nonzero coordinates.
pub fn weight(word: &[Elem]) -> usize {
    word.iter().filter(|x| !x.is_zero()).count()
}

pub fn hamming(a: &[Elem], b: &[Elem]) -> usize {
    a.iter().zip(b).filter(|(x, y)| x != y).count() + a.len().abs_diff(b.len())
}

pub(crate) fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i as u128 + 1))
}
