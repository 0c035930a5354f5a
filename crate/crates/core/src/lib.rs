//! Reduced words of signed permutations and the combinatorics around them.
//!
//! The crate covers the hyperoctahedral group `B_n` (and its stable limit
//! `B_∞`), wiring diagrams of reduced words, the signed Little bump and its
//! canonical transition bijection, Kraśkiewicz and Edelman-Greene insertion,
//! standard shifted tableaux with Haiman's shifted dual equivalence moves,
//! Coxeter-Knuth graphs and shifted dual equivalence graphs, and
//! finite-variable Schur Q / type C Stanley symmetric functions.
//!
//! Positions inside words and tableaux are 1-based throughout the public API.
//!
//! ```
//! use signed_little::{Word, SignedPermutation};
//!
//! let a: Word = "0120312".parse().unwrap();
//! assert_eq!(a.evaluate(), SignedPermutation::new(vec![3, 4, -2, -1]).unwrap());
//! assert!(a.is_reduced());
//! ```

mod error;

pub mod graphs;
pub mod insertion;
pub mod little;
pub mod permutations;
pub mod symmetric;
pub mod tableaux;
pub mod verify;
pub mod wiring;

pub use error::{Error, Result};
pub use little::{BumpTrace, Direction};
pub use permutations::{SignedPermutation, Transposition, Word};
pub use tableaux::{ShiftedTableau, StrictPartition};
