//! Symmetric multibrace structures on the cofree cocommutative coalgebra:
//! ComAs and Lie sources, pre-Lie algebras with their symmetric braces,
//! and the Grossman–Larson and Connes–Kreimer algebras of rooted trees.

pub mod ck;
pub mod comas;
pub mod eulerian;
pub mod lie;
pub mod prelie;
pub mod smb;
pub mod uea;

pub use ck::{admissible_cuts, ck_coproduct, pairing_gl_ck, ConnesKreimer, Forest};
pub use comas::{comas_to_smb, ComAs};
pub use lie::LieAlgebra;
pub use prelie::{grossman_larson, guin_oudom, FreePreLie, PreLie};
pub use smb::{check_sr, check_sr_all, smb_to_product, SmbStructure};
pub use uea::{lie_to_smb, Uea};
