//! Open Heegaard diagrams for two families of closed orientable 3-manifolds,
//! their curve systems as words in surface braid group generators, the plat
//! slide move calculus on those words, and first-homology invariants.
//!
//! The two families:
//!
//! * [`dunwoody`] — cyclically symmetric diagrams `M(a, b, c, n, r, s)`
//!   built from 2n disks on a sphere with `d = 2a + b + c` glued arcs per
//!   period.
//! * [`takahashi`] — periodic manifolds `T_n(p/q, r/s)` obtained by Dehn
//!   surgery on a chain of 4n linked circles, presented here by a genus-2n
//!   diagram with one curve per handle.
//!
//! Words live in [`word`], the move engine in [`moves`], homology in
//! [`homology`], and diagram serialization in [`export`].

pub mod cli;
pub mod dunwoody;
pub mod export;
pub mod faces;
pub mod homology;
pub mod moves;
pub mod takahashi;
pub mod word;

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Parameter tuples that do not define a diagram.
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    /// Malformed word text or file contents.
    #[error("parse error: {0}")]
    Parse(String),
    /// Two words from incompatible groups were combined.
    #[error("context mismatch: {0}")]
    ContextMismatch(String),
    /// A move was requested at a position where it does not apply.
    #[error("move not applicable: {0}")]
    MoveNotApplicable(String),
    /// Structural failure while building or traversing a diagram.
    #[error("diagram error: {0}")]
    Diagram(String),
}

pub type Result<T> = std::result::Result<T, Error>;
