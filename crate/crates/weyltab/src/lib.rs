//! Derives the unipotent character degrees of E6(q) from scratch: the Weyl
//! group is enumerated as a permutation group on the roots, its character
//! table is computed by class-algebra splitting, fake degrees come from the
//! coinvariant-algebra Molien series, and the family Fourier transform turns
//! those into the 30 generic degrees.  The result ships as a data file; this
//! crate exists to regenerate and re-verify it.

pub mod assemble;
pub mod chartab;
pub mod emit;
pub mod fake;
pub mod poly;
pub mod weyl;

pub use assemble::{unipotent_degrees, Entry};
pub use emit::render;
