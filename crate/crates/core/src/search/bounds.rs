//! Bounds on the optimal modulus `n*`.

use crate::admissibility::Plan;
use crate::error::{Error, Result};
use crate::index_sets::{mirror_cardinality, IndexSet, LowerSet, MultiIndex};

/// Inclusive search range for the modulus.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBounds {
    pub n_min: u64,
    pub n_max: u64,
}

impl SearchBounds {
    pub fn new(n_min: u64, n_max: u64) -> Result<Self> {
        if n_min == 0 || n_min > n_max {
            return Err(Error::InvalidArgument(format!(
                "empty modulus range [{n_min}, {n_max}]"
            )));
        }
        Ok(SearchBounds { n_min, n_max })
    }

    /// `[l*, p*]` for a lower set.
    pub fn default_for(set: &LowerSet, plan: Plan) -> Result<Self> {
        let lo = lower_bound(set.members(), plan);
        SearchBounds::new(lo, upper_bound(set, plan)?.max(lo))
    }
}

/// `l*`: no admissible lattice has a smaller modulus.
///
/// Valid for any finite `Λ ⊂ ℕ₀^d`; for lower sets it reads `#M(Λ)`,
/// `2#Λ − 1` and `2#Λ − 2` for Plans A, B and C.
pub fn lower_bound(set: &[MultiIndex], plan: Plan) -> u64 {
    let card = set.len() as u64;
    let has_zero = set.iter().any(MultiIndex::is_zero);
    match plan {
        Plan::Zero => {
            if set.iter().any(|k| !k.is_zero()) {
                2
            } else {
                1
            }
        }
        Plan::A => mirror_cardinality(set) as u64 + u64::from(!has_zero),
        Plan::B => {
            if has_zero {
                (2 * card).saturating_sub(1).max(1)
            } else {
                2 * card + 1
            }
        }
        Plan::C => (2 * card).saturating_sub(2).max(1),
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut f = 2u64;
    while f * f <= p {
        if p.is_multiple_of(f) {
            return false;
        }
        f += 1;
    }
    true
}

/// Smallest prime `≥ m`.
pub fn smallest_prime_geq(m: u64) -> u64 {
    (m.max(2)..)
        .find(|&p| is_prime(p))
        .expect("primes are unbounded")
}

/// `p*`: a prime modulus for which an admissible `z` is guaranteed.
///
/// It is the smallest prime strictly above
///
/// * Plan 0: `max(‖Λ‖∞, #(M(Λ)∖{0})/2 + 1)`,
/// * Plan A: `max(2‖Λ‖∞, (#(M(Λ)⊕M(Λ)) + 1)/2)`,
/// * Plan B: `max(2‖Λ‖∞, #(Λ⊕M(Λ)))`,
/// * Plan C: `max(2‖Λ‖∞, #Λ·#M(Λ))`.
pub fn upper_bound(set: &LowerSet, plan: Plan) -> Result<u64> {
    let inf = set.max_norm() as u64;
    let m = set.mirror_cardinality() as u64;
    // Twice the threshold, so halves stay exact.
    let twice = match plan {
        Plan::Zero => (2 * inf).max(m - 1 + 2),
        Plan::A => {
            let mirror = set.mirror()?;
            (4 * inf).max(mirror.sum(&mirror)?.len() as u64 + 1)
        }
        Plan::B => {
            let signed = IndexSet::new(set.dim(), set.iter().map(MultiIndex::to_signed))?;
            (4 * inf).max(2 * signed.sum(&set.mirror()?)?.len() as u64)
        }
        Plan::C => {
            let product = (set.len() as u64)
                .checked_mul(m)
                .ok_or(Error::Overflow("upper bound"))?;
            (4 * inf).max(2 * product)
        }
    };
    Ok(smallest_prime_geq(twice / 2 + 1))
}
