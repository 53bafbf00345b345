//! Reduced Plan A checks for simplex sets `S_{w,u}`.
//!
//! Each mode inspects a subset of the colliding pairs that is still enough
//! to decide Plan A on a simplex.

use std::collections::HashMap;

use super::{dot, residue, LatticeConfig};
use crate::error::{Error, Result};
use crate::index_sets::{make_simplex, mirror_of, MultiIndex, Simplex};

/// Which reduced pair set to examine.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SimplexCheck {
    /// `h ∈ M(Λ)` against `h′ ∈ M(E_≤(Λ))`.
    MaximalPartner,
    /// Pairs with weighted-norm gap at most `α_{h,h′}`, `c_h = 1` on every
    /// `h`, and all pairs of `M(Λ)` with `‖h‖ + ‖h′‖ > 2u − α_{h,h′}`.
    NormGap,
    /// Isotropic only: `h′` on the top layer `|h′|₁ = k`.
    IsotropicTop,
    /// Isotropic only: `|h′|₁ − |h|₁ ∈ {0, 1}`, plus `c_h = 1` on every `h`.
    ///
    /// The layer pairs alone miss collisions `σ(h)·z ≡ h·z` such as
    /// `2·2·5 ≡ 0 (mod 20)` on `S_{1,3}`, so self-aliasing is checked too.
    IsotropicLayer,
}

impl SimplexCheck {
    pub const ALL: [SimplexCheck; 4] = [
        SimplexCheck::MaximalPartner,
        SimplexCheck::NormGap,
        SimplexCheck::IsotropicTop,
        SimplexCheck::IsotropicLayer,
    ];
}

struct Prepared {
    lambda: Vec<MultiIndex>,
    ids: Vec<u64>,
    flips: Vec<Vec<u64>>,
}

fn prepare(s: &Simplex, cfg: &LatticeConfig) -> Result<Prepared> {
    if cfg.dim() != s.dim() {
        return Err(Error::DimensionMismatch {
            expected: s.dim(),
            found: cfg.dim(),
        });
    }
    let lambda = make_simplex(s)?.members().to_vec();
    let mut ids = Vec::with_capacity(lambda.len());
    let mut flips = Vec::with_capacity(lambda.len());
    for k in &lambda {
        let r = k
            .sign_flips()
            .iter()
            .map(|h| Ok(residue(dot(h, &cfg.z)?, cfg.n)))
            .collect::<Result<Vec<u64>>>()?;
        ids.push(r[0]);
        flips.push(r);
    }
    Ok(Prepared { lambda, ids, flips })
}

/// Plan A on `S_{w,u}` decided from a reduced set of pairs.
pub fn simplex_reduced_check_plan_a(
    s: &Simplex,
    cfg: &LatticeConfig,
    mode: SimplexCheck,
) -> Result<bool> {
    match mode {
        SimplexCheck::MaximalPartner => maximal_partner(s, cfg),
        SimplexCheck::NormGap => norm_gap(s, cfg),
        SimplexCheck::IsotropicTop | SimplexCheck::IsotropicLayer => {
            if !s.is_isotropic() {
                return Err(Error::InvalidArgument(
                    "isotropic check on anisotropic simplex".into(),
                ));
            }
            let k = s.axis_extent(0) as u64;
            let p = prepare(s, cfg)?;
            let l1: Vec<u64> = p.lambda.iter().map(MultiIndex::l1).collect();
            if mode == SimplexCheck::IsotropicTop {
                return Ok(axis_condition(s, cfg)? && reduced_plan_c(&p, |_, j| l1[j] == k));
            }
            let self_aliasing = p.flips.iter().any(|r| r[1..].contains(&r[0]));
            Ok(!self_aliasing && reduced_plan_c(&p, |i, j| l1[j] == l1[i] || l1[j] == l1[i] + 1))
        }
    }
}

/// `σ(h)·z ≢ h′·z` for `h ≠ h′ ∈ Λ` restricted to pairs `keep(h, h′)`.
fn reduced_plan_c(p: &Prepared, keep: impl Fn(usize, usize) -> bool) -> bool {
    let m = p.lambda.len();
    for i in 0..m {
        for j in 0..m {
            if i != j && keep(i, j) && p.flips[i].contains(&p.ids[j]) {
                return false;
            }
        }
    }
    true
}

/// `2⌊u/w_j⌋ z_j ≢ 0` whenever `⌊u/w_j⌋ ≥ 1`.
fn axis_condition(s: &Simplex, cfg: &LatticeConfig) -> Result<bool> {
    for (j, &zj) in cfg.z.iter().enumerate() {
        let ext = s.axis_extent(j) as i64;
        if ext >= 1 {
            let v = (2 * ext)
                .checked_mul(zj)
                .ok_or(Error::Overflow("scalar product"))?;
            if residue(v, cfg.n) == 0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn maximal_partner(s: &Simplex, cfg: &LatticeConfig) -> Result<bool> {
    if cfg.dim() != s.dim() {
        return Err(Error::DimensionMismatch {
            expected: s.dim(),
            found: cfg.dim(),
        });
    }
    let lambda = make_simplex(s)?;
    let mirror = lambda.mirror()?;
    let mut count: HashMap<u64, u32> = HashMap::new();
    for h in mirror.iter() {
        *count.entry(cfg.residue_of(h)?).or_default() += 1;
    }
    for h in mirror_of(&lambda.maximal_elements())?.iter() {
        if count[&cfg.residue_of(h)?] > 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

fn norm_gap(s: &Simplex, cfg: &LatticeConfig) -> Result<bool> {
    let p = prepare(s, cfg)?;
    let w = s.scaled_weights();
    let norm: Vec<i64> = p.lambda.iter().map(|h| s.scaled_norm(h.coords())).collect();
    let alpha = |a: &[u32], b: &[u32]| {
        (0..w.len())
            .filter(|&i| a[i] != 0 || b[i] != 0)
            .map(|i| w[i])
            .max()
            .unwrap_or(0)
    };
    let keep = |i: usize, j: usize| {
        let a = alpha(p.lambda[i].coords(), p.lambda[j].coords());
        (norm[j] - norm[i]).abs() <= a
    };
    let self_aliasing = p.flips.iter().any(|r| r[1..].contains(&r[0]));
    if self_aliasing || !axis_condition(s, cfg)? || !reduced_plan_c(&p, keep) {
        return Ok(false);
    }
    // High-norm pairs: both weighted norms lie in (u − max w, u].
    let u = s.scaled_radius();
    let max_w = w.iter().copied().max().unwrap_or(0);
    let mut top: Vec<(&[u32], i64, u64)> = Vec::new();
    for (i, k) in p.lambda.iter().enumerate() {
        if norm[i] > u - max_w {
            top.extend(p.flips[i].iter().map(|&r| (k.coords(), norm[i], r)));
        }
    }
    for a in 0..top.len() {
        for b in a + 1..top.len() {
            let (ha, na, ra) = &top[a];
            let (hb, nb, rb) = &top[b];
            if ra == rb && na + nb > 2 * u - alpha(ha, hb) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::admissibility::{check_direct, Plan};
    use crate::index_sets::parse_rational;

    fn cfg(n: u64, z: &[i64]) -> LatticeConfig {
        LatticeConfig::new(n, z.to_vec()).unwrap()
    }

    #[test]
    fn examples() {
        let s1 = Simplex::isotropic(2, 1).unwrap();
        let s2 = Simplex::isotropic(2, 2).unwrap();
        for mode in SimplexCheck::ALL {
            assert!(simplex_reduced_check_plan_a(&s1, &cfg(5, &[1, 3]), mode).unwrap());
            assert!(simplex_reduced_check_plan_a(&s2, &cfg(13, &[1, 5]), mode).unwrap());
            assert!(!simplex_reduced_check_plan_a(&s2, &cfg(12, &[1, 5]), mode).unwrap());
        }
    }

    #[test]
    fn isotropic_modes_need_isotropy() {
        let s = Simplex::new("0.9,0.8".parse().unwrap(), parse_rational("2").unwrap()).unwrap();
        assert!(
            simplex_reduced_check_plan_a(&s, &cfg(5, &[1, 3]), SimplexCheck::IsotropicTop).is_err()
        );
    }

    #[test]
    fn all_modes_match_direct_on_small_isotropic() {
        for k in 1..=3 {
            let s = Simplex::isotropic(2, k).unwrap();
            let lambda = make_simplex(&s).unwrap();
            for n in 1..=2 * (2 * k * k + 2 * k + 1) as u64 {
                for z1 in 0..n.min(4) as i64 {
                    for z2 in 0..n as i64 {
                        let c = cfg(n, &[z1, z2]);
                        let direct = check_direct(lambda.members(), &c, Plan::A).unwrap();
                        for mode in SimplexCheck::ALL {
                            assert_eq!(
                                simplex_reduced_check_plan_a(&s, &c, mode).unwrap(),
                                direct,
                                "k={k} n={n} z=({z1},{z2}) {mode:?}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn anisotropic_modes_match_direct() {
        let cases = [
            ("0.9,0.8", "2"),
            ("0.9,0.8", "2.5"),
            ("1,0.5", "1.5"),
            ("0.7,0.3", "1.2"),
            ("0.9,0.8,0.7", "1.6"),
        ];
        for (w, u) in cases {
            let s = Simplex::new(w.parse().unwrap(), parse_rational(u).unwrap()).unwrap();
            let lambda = make_simplex(&s).unwrap();
            let m = lambda.mirror_cardinality() as u64;
            for n in m.saturating_sub(4).max(1)..=2 * m {
                for code in 0..n.pow(s.dim() as u32 - 1).min(400) {
                    let mut z = vec![1i64];
                    let mut c = code;
                    for _ in 1..s.dim() {
                        z.push((c % n) as i64);
                        c /= n;
                    }
                    let c = cfg(n, &z);
                    let direct = check_direct(lambda.members(), &c, Plan::A).unwrap();
                    for mode in [SimplexCheck::MaximalPartner, SimplexCheck::NormGap] {
                        assert_eq!(
                            simplex_reduced_check_plan_a(&s, &c, mode).unwrap(),
                            direct,
                            "w={w} u={u} n={n} z={z:?} {mode:?}"
                        );
                    }
                }
            }
        }
    }
}
