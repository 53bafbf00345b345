//! Rank-1 lattices that integrate and reconstruct Chebyshev expansions
//! supported on lower (downward closed) multi-index sets.
//!
//! The crate is organised bottom-up:
//!
//! * [`index_sets`]: multi-indices, lower sets, mirroring, set sums and the
//!   standard set families (blocks, crosses, simplices, hyperbolic crosses).
//! * [`admissibility`]: the four collision regimes ([`Plan`]) deciding whether
//!   a lattice `(n, z)` is usable for a set, both directly and incrementally
//!   through alias tables.
//! * [`search`]: bounds on the optimal modulus, the exhaustive oracle, the
//!   dimension-wise search, the two-step search and closed-form lattices.
//! * [`cubature`]: lattice nodes, cosine-transformed cubature and the three
//!   coefficient reconstruction operators.
//! * [`format`]: plain-text formats for sets, lattices and coefficient maps.

pub mod admissibility;
pub mod cubature;
mod error;
pub mod format;
pub mod index_sets;
pub mod search;

pub use admissibility::{check_direct, LatticeConfig, Plan};
pub use error::{Error, Result};
pub use index_sets::{IndexSet, LowerSet, MultiIndex, SignedMultiIndex};
