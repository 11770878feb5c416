//! Tree families, permutations, compositions and the enumerations behind
//! the dimension tables.

pub mod binary;
pub mod composition;
pub mod cursor;
pub mod perm;
pub mod planar;
pub mod rooted;
pub mod series;
pub mod series_parallel;
pub mod unreduced;

pub use binary::Pbt;
pub use composition::Composition;
pub use perm::Permutation;
pub use planar::PlanarTree;
pub use rooted::RootedTree;
pub use unreduced::Put;

/// The Catalan number `cat(n)`, with cat(0) = cat(1) = 1.
pub fn catalan(n: usize) -> u64 {
    let mut c = vec![1u64; n + 1];
    for m in 1..=n {
        c[m] = (0..m).map(|i| c[i] * c[m - 1 - i]).sum();
    }
    c[n]
}
