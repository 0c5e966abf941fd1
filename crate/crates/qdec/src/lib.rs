//! q-decreasing binary words: membership, the bijection with
//! generalized Fibonacci words, exact enumeration from generating
//! functions, exhaustive generation in three orders (lexicographic,
//! BRGC-restricted 3-Gray, recursive 1-Gray for q = 1), and the
//! induced Hamiltonian path in Fibonacci-run graphs.

pub mod bijection;
pub mod cli;
pub mod enumeration;
pub mod generation;
pub mod rungraph;
pub mod word;

pub use word::{Word, Q};

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid character {0:?} in word, expected '0' or '1'")]
    Parse(char),
    #[error("words of lengths {0} and {1} are incomparable")]
    LengthMismatch(usize, usize),
    #[error("q must be at least 1, got {0}")]
    InvalidQ(u32),
    #[error("word is not in the image of psi for q = {0}")]
    NotInPsiImage(u32),
    #[error("word contains the forbidden factor 1^{0}")]
    ForbiddenOnesRun(usize),
    #[error("word is not {0}-decreasing")]
    NotQDecreasing(u32),
    #[error("unknown series kind {0:?}")]
    UnknownKind(String),
    #[error("delta list precondition failed: {0}")]
    DeltaPrecondition(String),
    #[error("order gray1 requires q = 1")]
    Gray1RequiresQ1,
    #[error("path vertex {0} is not a vertex of the graph")]
    PathVertexNotInGraph(String),
}
