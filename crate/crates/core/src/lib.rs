//! Exact scalars, sparse linear combinations, word coalgebras and the
//! convolution calculus shared by the rest of the workspace.

pub mod error;
pub mod hopf;
pub mod lincomb;
pub mod linalg;
pub mod report;
pub mod scalar;
pub mod text;
pub mod words;

pub use error::{Error, Result};
pub use hopf::{Algebra, Coalgebra, Graded};
pub use lincomb::{Key, LinComb};
pub use report::Report;
pub use scalar::Scalar;
pub use words::{SymWord, Word};

/// Default truncation bound on word degree.
pub const DEFAULT_BOUND: usize = 6;
