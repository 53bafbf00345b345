//! Admissibility of a rank-1 lattice `(n, z)` for an index set.
//!
//! With `M(Λ)` the mirrored set, the four regimes are
//!
//! * [`Plan::Zero`]: `h·z ≢ 0 (mod n)` for every nonzero `h ∈ M(Λ)`;
//! * [`Plan::A`]: the residues `h·z mod n` are pairwise distinct on `M(Λ)`;
//! * [`Plan::B`]: `σ(h)·z ≢ h′·z` for `h, h′ ∈ Λ`, `σ ∈ S_h`, `σ(h) ≠ h′`;
//! * [`Plan::C`]: as B but only for `h ≠ h′`.
//!
//! The direct checks here are the reference; [`alias`] evaluates the same
//! conditions incrementally and [`fast`] is a tuned kernel for searches.

pub mod alias;
pub mod fast;
pub mod simplex;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::index_sets::{MultiIndex, SignedMultiIndex};

/// Collision regime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Plan {
    Zero,
    A,
    B,
    C,
}

impl Plan {
    pub const ALL: [Plan; 4] = [Plan::Zero, Plan::A, Plan::B, Plan::C];
}

impl fmt::Display for Plan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Plan::Zero => "0",
            Plan::A => "A",
            Plan::B => "B",
            Plan::C => "C",
        })
    }
}

impl FromStr for Plan {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "0" | "zero" | "Zero" => Ok(Plan::Zero),
            "A" | "a" => Ok(Plan::A),
            "B" | "b" => Ok(Plan::B),
            "C" | "c" => Ok(Plan::C),
            other => Err(Error::InvalidArgument(format!("unknown plan `{other}`"))),
        }
    }
}

/// Modulus `n` and generating vector `z`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticeConfig {
    pub n: u64,
    pub z: Vec<i64>,
}

impl LatticeConfig {
    pub fn new(n: u64, z: impl Into<Vec<i64>>) -> Result<Self> {
        if n == 0 || n > i64::MAX as u64 {
            return Err(Error::InvalidArgument(format!("modulus {n} out of range")));
        }
        Ok(LatticeConfig { n, z: z.into() })
    }

    pub fn dim(&self) -> usize {
        self.z.len()
    }

    /// `h·z mod n` in `[0, n)`.
    pub fn residue_of(&self, h: &SignedMultiIndex) -> Result<u64> {
        Ok(residue(dot(h, &self.z)?, self.n))
    }
}

impl fmt::Display for LatticeConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.n)?;
        for z in &self.z {
            write!(f, " {z}")?;
        }
        Ok(())
    }
}

/// `Σ h_j z_j` with overflow detection.
pub fn dot(h: &SignedMultiIndex, z: &[i64]) -> Result<i64> {
    if h.dim() != z.len() {
        return Err(Error::DimensionMismatch {
            expected: h.dim(),
            found: z.len(),
        });
    }
    h.coords().iter().zip(z).try_fold(0i64, |acc, (&a, &b)| {
        a.checked_mul(b)
            .and_then(|p| acc.checked_add(p))
            .ok_or(Error::Overflow("scalar product"))
    })
}

/// Canonical representative of `x mod n` in `[0, n)`.
pub fn residue(x: i64, n: u64) -> u64 {
    (x as i128).rem_euclid(n as i128) as u64
}

/// Two colliding mirrored indices (`right` is zero for Plan 0).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub left: SignedMultiIndex,
    pub right: SignedMultiIndex,
    pub residue: u64,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}·z ≡ {}·z ≡ {} (mod n)",
            self.left, self.right, self.residue
        )
    }
}

/// Whether `cfg` is admissible for `set` under `plan`.
pub fn check_direct(set: &[MultiIndex], cfg: &LatticeConfig, plan: Plan) -> Result<bool> {
    Ok(find_violation(set, cfg, plan)?.is_none())
}

/// The first collision in canonical order, or `None` if admissible.
pub fn find_violation(
    set: &[MultiIndex],
    cfg: &LatticeConfig,
    plan: Plan,
) -> Result<Option<Violation>> {
    let n = cfg.n;
    // Residues of every σ(k), identity first within each k.
    let mut flips: Vec<(usize, SignedMultiIndex, u64)> = Vec::new();
    for (i, k) in set.iter().enumerate() {
        for h in k.sign_flips() {
            let r = residue(dot(&h, &cfg.z)?, n);
            flips.push((i, h, r));
        }
    }
    let violation = |left: &SignedMultiIndex, right: &SignedMultiIndex, residue| {
        Ok(Some(Violation {
            left: left.clone(),
            right: right.clone(),
            residue,
        }))
    };
    match plan {
        Plan::Zero => {
            for (_, h, r) in &flips {
                if *r == 0 && !h.is_zero() {
                    return violation(h, &SignedMultiIndex::zero(h.dim()), 0);
                }
            }
        }
        Plan::A => {
            let mut seen: HashMap<u64, &SignedMultiIndex> = HashMap::new();
            for (_, h, r) in &flips {
                if let Some(prev) = seen.insert(*r, h) {
                    if prev != h {
                        return violation(prev, h, *r);
                    }
                }
            }
        }
        Plan::B | Plan::C => {
            let mut ids: HashMap<u64, usize> = HashMap::new();
            for (i, k) in set.iter().enumerate() {
                let r = residue(dot(&k.to_signed(), &cfg.z)?, n);
                if let Some(&j) = ids.get(&r) {
                    if set[j] != *k {
                        return violation(&set[j].to_signed(), &k.to_signed(), r);
                    }
                }
                ids.insert(r, i);
            }
            for (i, h, r) in &flips {
                if h.coords().iter().all(|&c| c >= 0) {
                    continue;
                }
                if let Some(&j) = ids.get(r) {
                    if plan == Plan::B || set[j] != set[*i] {
                        return violation(h, &set[j].to_signed(), *r);
                    }
                }
            }
        }
    }
    Ok(None)
}

/// `c_k = #{σ ∈ S_k : σ(k)·z ≡ k·z (mod n)}`.
pub fn aliasing_count_ck(k: &MultiIndex, cfg: &LatticeConfig) -> Result<u32> {
    let id = cfg.residue_of(&k.to_signed())?;
    let mut count = 0;
    for h in k.sign_flips() {
        if cfg.residue_of(&h)? == id {
            count += 1;
        }
    }
    Ok(count)
}

/// Plan B via Plan C plus `2h·z ≢ 0` on the nonzero extremal elements.
pub fn plan_b_via_plan_c(set: &crate::index_sets::LowerSet, cfg: &LatticeConfig) -> Result<bool> {
    if !check_direct(set.members(), cfg, Plan::C)? {
        return Ok(false);
    }
    if cfg.n % 2 == 1 {
        return Ok(true);
    }
    for h in set.extremal_elements() {
        if !h.is_zero() {
            let twice = dot(&h.to_signed(), &cfg.z)?
                .checked_mul(2)
                .ok_or(Error::Overflow("scalar product"))?;
            if residue(twice, cfg.n) == 0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
