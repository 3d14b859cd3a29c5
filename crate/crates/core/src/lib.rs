//! Signed Brauer diagrams and the signed permutation group embedded in the
//! symmetric group on `2n` points.
//!
//! The crate is organised bottom-up:
//!
//! - [`perm`]: permutations of `{1..m}`, cycle notation and parity.
//! - [`diagram`]: general signed Brauer diagrams and their composition,
//!   with loops collected into a power of `x`.
//! - [`hyperoct`]: the group of vertical signed diagrams as signed
//!   permutations, and the embedding into `S_2n`.
//! - [`groups`]: ranked enumeration of the full group and its even-sign
//!   subgroup, plus the claim registry used by `sbrauer verify`.
//! - [`bsgs`]: a deterministic Schreier-Sims implementation used as an
//!   independent order and membership oracle.
//! - [`arith`]: 2-adic valuations of factorials and falling products.
//! - [`cli`]: the `sbrauer` command line front end.
//!
//! All point labels are 1-based. Products are read left to right: `a * b`
//! applies `a` first, which is the order in which diagrams are stacked top
//! to bottom.

pub mod arith;
pub mod bsgs;
pub mod cli;
pub mod diagram;
mod error;
pub mod groups;
pub mod hyperoct;
pub mod perm;

pub use error::{Error, Result};

pub use bsgs::Bsgs;
pub use diagram::{EdgeSign, ScaledDiagram, SignedDiagram};
pub use groups::{Claim, VerificationReport};
pub use hyperoct::SignedPermutation;
pub use perm::{CycleDecomposition, Parity, Permutation};
