//! Exact arithmetic for unipotent-block and weight counting in groups of
//! type E6 over a finite field.
//!
//! Everything is built on one invariant: every polynomial this library ever
//! needs (generic character degrees, group orders, torus orders, relative
//! Weyl group orders) factors as
//!
//! ```text
//!     c * q^a * prod_d Phi_d(q)^(m_d)
//! ```
//!
//! with `c` rational and `Phi_d` the d-th cyclotomic polynomial.  Keeping
//! that shape explicit makes l-adic valuations, degree comparisons and the
//! `q -> -q` twist exact integer bookkeeping instead of polynomial algebra.
//!
//! Module layout:
//!
//! * [`cyclopoly`]: the factored form itself, valuations, Ennola twist.
//! * [`symbols`]: bipartitions and symbols indexing classical unipotent
//!   characters, with enumeration by rank and defect.
//! * [`degrees`]: generic degree formulas for types A and D, and the
//!   defect-zero scans built on them.
//! * [`groupdata`]: the text format for finite-group facts, local-subgroup
//!   records and torus data shipped in `data/`.
//! * [`blocks`]: unipotent block classification of E6(q) / 2E6(q) at the
//!   five classes of "large" primes.
//! * [`weights`]: weight counts per block and the block-by-block comparison
//!   with the irreducible Brauer character counts.

pub mod blocks;
pub mod cyclopoly;
pub mod degrees;
pub mod groupdata;
pub mod symbols;
pub mod weights;

pub use cyclopoly::{CycloProduct, Sign, ValuationContext, ValuationForm};
