//! Lattice cubature and Chebyshev coefficient reconstruction.
//!
//! Nodes are `t_i = (i z mod n)/n`; a function `f` on `[−1, 1]^d` is sampled
//! at `cos(2π t_i)`, the cosine image of the tent-transformed lattice.

mod chebyshev;
mod lattice;
mod reconstruct;

pub use chebyshev::{chebyshev_t, eval_cheb_basis, ChebSeries};
pub use lattice::{character_sum, cubature, cubature_half, tent, Node, Rank1Lattice};
pub use reconstruct::{reconstruct, ReconstructionMode, EXACTNESS_TOL};
