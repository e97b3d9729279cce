//! Exact computations for linear insertion-deletion (insdel) codes over finite fields.
//!
//! The crate is `no_std` (with `alloc`). It covers:
//!
//! * arithmetic in `GF(p^e)` with a designated primitive element ([`gf`]),
//! * dense exact linear algebra over those fields ([`linalg`]),
//! * the linear-code model and its structural predicates ([`code`]),
//! * longest common subsequences and insdel distances ([`insdel`]),
//! * the upper bounds on insdel distance, the determinant optimality
//!   certificate and the strict direct bound witness finder ([`bounds`]),
//! * explicit optimal code families ([`constructions`]),
//! * exhaustive searches over binary codes ([`search`]).
//!
//! Enable the `parallel` feature (which implies `std`) to run the pairwise
//! distance sweep and the binary code search on a rayon thread pool. Results
//! are identical with and without it.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod bounds;
pub mod code;
pub mod constructions;
mod error;
pub mod gf;
pub mod insdel;
pub mod linalg;
pub mod search;

pub use code::LinearCode;
pub use error::Error;
pub use gf::{Elem, Field};
pub use linalg::Matrix;

pub type Result<T> = core::result::Result<T, Error>;

/// Default cap on the number of codewords an operation may enumerate.
pub const DEFAULT_ENUM_BUDGET: u64 = 1 << 22;
/// Default cap on the number of word pairs a distance sweep may evaluate.
pub const DEFAULT_PAIR_BUDGET: u64 = 1 << 23;

/// Work limits for the exhaustive operations.
///
/// Operations that would exceed a limit fail with [`Error::BudgetExceeded`]
/// rather than sampling.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budgets {
    /// Maximum number of codewords (or subsets, or subspaces) enumerated.
    pub enumeration: u64,
    /// Maximum number of unordered word pairs compared.
    pub pairs: u64,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            enumeration: DEFAULT_ENUM_BUDGET,
            pairs: DEFAULT_PAIR_BUDGET,
        }
    }
}

impl Budgets {
    pub(crate) fn check_enumeration(&self, what: &'static str, required: u128) -> Result<()> {
        if required > u128::from(self.enumeration) {
            return Err(Error::BudgetExceeded {
                what,
                required,
                budget: self.enumeration,
            });
        }
        Ok(())
    }

    pub(crate) fn check_pairs(&self, required: u128) -> Result<()> {
        if required > u128::from(self.pairs) {
            return Err(Error::BudgetExceeded {
                what: "word pairs",
                required,
                budget: self.pairs,
            });
        }
        Ok(())
    }
}
