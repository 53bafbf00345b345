//! Explicit lattices for standard families.

use crate::admissibility::LatticeConfig;
use crate::error::{Error, Result};
use crate::index_sets::MultiIndex;

fn need_2d(k: &MultiIndex) -> Result<()> {
    if k.dim() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: k.dim(),
        });
    }
    Ok(())
}

/// `n = ∏(2k_j + 1)`, `z_i = ∏_{j<i}(2k_j + 1)` for the block `B_k`.
pub fn closed_form_block(k: &MultiIndex) -> Result<LatticeConfig> {
    let mut z = Vec::with_capacity(k.dim());
    let mut n = 1i64;
    for &kj in k.coords() {
        z.push(n);
        n = n
            .checked_mul(2 * kj as i64 + 1)
            .ok_or(Error::Overflow("block modulus"))?;
    }
    LatticeConfig::new(n as u64, z)
}

/// `(2k² + 2k + 1, (1, 2k + 1))` for `S_{1,k}` in two dimensions.
pub fn closed_form_simplex2d(k: u32) -> Result<LatticeConfig> {
    let k = k as i64;
    LatticeConfig::new((2 * k * k + 2 * k + 1) as u64, vec![1, 2 * k + 1])
}

/// `(2k² + 2k + 1, (k, k + 1))`, the Padua lattice.
pub fn closed_form_padua(k: u32) -> Result<LatticeConfig> {
    let k = k as i64;
    LatticeConfig::new((2 * k * k + 2 * k + 1) as u64, vec![k, k + 1])
}

/// `((k₁+1)(k₂+1) + 1, (1, k₁+1))` for the cross `C_k`, `k₁, k₂ ≥ 1`.
pub fn closed_form_cross2d(k: &MultiIndex) -> Result<LatticeConfig> {
    need_2d(k)?;
    let (k1, k2) = (k.coords()[0] as i64, k.coords()[1] as i64);
    if k1 == 0 || k2 == 0 {
        return Err(Error::InvalidArgument(format!(
            "cross {k} needs both arms nonempty"
        )));
    }
    LatticeConfig::new(((k1 + 1) * (k2 + 1) + 1) as u64, vec![1, k1 + 1])
}
