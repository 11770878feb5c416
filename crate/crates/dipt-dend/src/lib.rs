//! Dipterous and dendriform algebras: the free ones on trees, their
//! coproducts, idempotents, and the multibrace data they carry.

pub mod context;
pub mod dend;
pub mod dims;
pub mod dipt;
pub mod extract;
pub mod idempotent;
pub mod recursions;
pub mod tensor;

pub use context::{Dendriform, Dipterous, TensorContext, TwoAs};
pub use dend::{DendTree, FreeDend};
pub use dipt::{DiptMono, FreeDipt};
