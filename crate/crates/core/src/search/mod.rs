//! Finding admissible lattices.
//!
//! * [`bounds`]: the lower bound `l*` and prime upper bound `p*` on the
//!   optimal modulus `n*`.
//! * [`exhaustive`]: the optimality oracle.
//! * [`cbc`]: dimension-wise construction of `z` at a growing modulus.
//! * [`two_step`]: exact-integer generator search followed by a modulus scan.
//! * [`closed_form`]: known optimal lattices for blocks, simplices and crosses.

pub mod bounds;
pub mod cbc;
pub mod closed_form;
pub mod exhaustive;
pub mod two_step;

use std::fmt;
use std::str::FromStr;

pub use bounds::{lower_bound, smallest_prime_geq, upper_bound, SearchBounds};
pub use cbc::cbc_search;
pub use closed_form::{
    closed_form_block, closed_form_cross2d, closed_form_padua, closed_form_simplex2d,
};
pub use exhaustive::{admissible_at, exhaustive_search};
pub use two_step::{modulus_search, two_step_search, vector_search};

use crate::admissibility::alias::AliasTable;
use crate::admissibility::{LatticeConfig, Plan};
use crate::error::{Error, Result};

/// Search strategy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Exhaustive,
    Cbc,
    TwoStep,
}

impl Algorithm {
    pub const ALL: [Algorithm; 3] = [Algorithm::Exhaustive, Algorithm::Cbc, Algorithm::TwoStep];
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Algorithm::Exhaustive => "exhaustive",
            Algorithm::Cbc => "cbc",
            Algorithm::TwoStep => "two-step",
        })
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exhaustive" => Ok(Algorithm::Exhaustive),
            "cbc" => Ok(Algorithm::Cbc),
            "two-step" | "two_step" => Ok(Algorithm::TwoStep),
            other => Err(Error::InvalidArgument(format!(
                "unknown algorithm `{other}`"
            ))),
        }
    }
}

/// An admissible lattice together with how it was found.
#[derive(Clone, Debug)]
pub struct SearchResult {
    pub n: u64,
    pub z: Vec<i64>,
    pub plan: Plan,
    pub algorithm: Algorithm,
    pub elapsed_ms: f64,
    pub table: Option<AliasTable>,
}

impl SearchResult {
    pub fn config(&self) -> LatticeConfig {
        LatticeConfig {
            n: self.n,
            z: self.z.clone(),
        }
    }
}

/// Wall-clock timer; reads zero on targets without a clock.
pub(crate) struct Stopwatch {
    #[cfg(not(target_arch = "wasm32"))]
    start: std::time::Instant,
}

impl Stopwatch {
    pub(crate) fn start() -> Self {
        Stopwatch {
            #[cfg(not(target_arch = "wasm32"))]
            start: std::time::Instant::now(),
        }
    }

    pub(crate) fn elapsed_ms(&self) -> f64 {
        #[cfg(not(target_arch = "wasm32"))]
        {
            self.start.elapsed().as_secs_f64() * 1e3
        }
        #[cfg(target_arch = "wasm32")]
        {
            0.0
        }
    }
}
