//! Red-white colorings of cycles and paths: identification (ID) colorings,
//! reflection symmetry, symmetry reconstruction for prime cycles, named
//! counterexample constructions and an exhaustive verification harness.
//!
//! All public APIs index vertices 0-based. A coloring is written as a string
//! over `R`/`W` (case-insensitive; `1`/`0` accepted as aliases), character `i`
//! being the color of vertex `u_i`.

pub mod analysis;
pub mod constructions;
pub mod cycle;
pub mod harness;
pub mod paths;
pub mod reconstruction;

use reconstruction::ReconstructionTrace;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("vertex index {index} out of range for n={n}")]
    IndexOutOfRange { n: usize, index: usize },
    #[error("cycle must have at least 3 vertices, got {0}")]
    CycleTooSmall(usize),
    #[error("path must have at least 2 vertices, got {0}")]
    PathTooSmall(usize),
    #[error("operation requires an odd cycle, got n={0}")]
    EvenCycleUnsupported(usize),
    #[error("n={0} is not prime")]
    NotPrime(usize),
    #[error("n={0} is not an odd composite number")]
    NotOddComposite(usize),
    #[error("p={p} is not a nontrivial divisor of n={n} with n/p >= 3")]
    BadFactor { n: usize, p: usize },
    #[error("vertices {a} and {b} must be distinct")]
    VerticesNotDistinct { a: usize, b: usize },
    #[error("vertices {a} and {b} have different codes")]
    CodesDiffer { a: usize, b: usize },
    #[error("coloring has no red vertex")]
    NoRedVertex,
    #[error("criterion requires at least two red vertices")]
    TooFewReds,
    #[error("invalid color character '{ch}' at position {pos}")]
    InvalidColorChar { ch: char, pos: usize },
    #[error("expected a vertex pair \"a,b\", got \"{0}\"")]
    BadPairArgument(String),
    #[error("n={n} outside supported range {lo}..={hi}")]
    OutOfRange { n: usize, lo: usize, hi: usize },
    #[error("internal inconsistency at step {step}: {detail}")]
    Inconsistency {
        step: usize,
        detail: String,
        trace: Box<ReconstructionTrace>,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
