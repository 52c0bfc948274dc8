//! Flattened partitions avoiding patterns of length three.
//!
//! A flattened partition of `[n]` is a permutation whose maximal ascending
//! runs start at increasing values. This crate enumerates the classes
//! avoiding one or two patterns of length three, implements the bijections
//! between several of them, and checks the counting identities (closed
//! forms, recurrences, q-distributions and a bivariate generating function)
//! against exhaustive enumeration.
//!
//! ```
//! use flatpart_core::{count_avoiding, PatternSet};
//!
//! let ps: PatternSet = "213,231".parse().unwrap();
//! assert_eq!(count_avoiding(7, &ps).unwrap(), 13);
//! ```

pub mod bijections;
pub mod enumerate;
mod error;
pub mod partition;
pub mod pattern;
pub mod perm;
pub mod report;
pub mod runs;
pub mod series;
pub mod verify;

pub use bijections::{certify, Bijection, BijectionCertificate};
pub use enumerate::{
    all_flattened, all_permutations, brute_force_avoiding, count_avoiding, enumerate_avoiding, CountTable, Limits,
    Method, PQDecomposition, SplitAtMax,
};
pub use error::{Error, Result};
pub use partition::SetPartition;
pub use pattern::{Pattern, PatternSet};
pub use perm::{standardize, Permutation};
pub use report::{Status, VerificationReport};
pub use runs::RunDecomposition;
pub use series::{BivariateSeries, QPolynomial};
pub use verify::Scope;
