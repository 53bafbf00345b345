use std::f64::consts::{PI, SQRT_2};
use std::fmt;
use std::str::FromStr;

use super::{eval_cheb_basis, ChebSeries, Rank1Lattice};
use crate::admissibility::{aliasing_count_ck, Plan};
use crate::error::{Error, Result};
use crate::index_sets::MultiIndex;

/// Absolute per-coefficient tolerance for exact recovery.
pub const EXACTNESS_TOL: f64 = 1e-10;

/// Coefficient formula; mode `a` needs Plan A, `b` Plan B, `c` Plan C.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ReconstructionMode {
    A,
    B,
    C,
}

impl ReconstructionMode {
    pub const ALL: [ReconstructionMode; 3] = [
        ReconstructionMode::A,
        ReconstructionMode::B,
        ReconstructionMode::C,
    ];

    /// The plan under which this mode is exact.
    pub fn plan(self) -> Plan {
        match self {
            ReconstructionMode::A => Plan::A,
            ReconstructionMode::B => Plan::B,
            ReconstructionMode::C => Plan::C,
        }
    }
}

impl fmt::Display for ReconstructionMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ReconstructionMode::A => "a",
            ReconstructionMode::B => "b",
            ReconstructionMode::C => "c",
        })
    }
}

impl FromStr for ReconstructionMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "a" | "A" => Ok(ReconstructionMode::A),
            "b" | "B" => Ok(ReconstructionMode::B),
            "c" | "C" => Ok(ReconstructionMode::C),
            other => Err(Error::InvalidArgument(format!("unknown mode `{other}`"))),
        }
    }
}

/// Estimates the coefficients of `f` on `set` from its samples at the
/// cosine-transformed lattice nodes.
///
/// * `a`: `(1/n) Σ f(x_i) η_k(x_i)`;
/// * `b`: `(1/n) Σ f(x_i) √2^{|k|₀} cos(2π i (k·z)/n)`;
/// * `c`: mode `b` divided by `c_k`.
pub fn reconstruct(
    lat: &Rank1Lattice,
    f: impl Fn(&[f64]) -> f64,
    set: &[MultiIndex],
    mode: ReconstructionMode,
) -> Result<ChebSeries> {
    let cfg = lat.config();
    let n = cfg.n;
    let points: Vec<Vec<f64>> = (0..n).map(|i| lat.node(i).cosine_point()).collect();
    let samples: Vec<f64> = points.iter().map(|x| f(x)).collect();
    let mut coeffs = Vec::with_capacity(set.len());
    for k in set {
        if k.dim() != lat.dim() {
            return Err(Error::DimensionMismatch {
                expected: lat.dim(),
                found: k.dim(),
            });
        }
        let value = match mode {
            ReconstructionMode::A => {
                let mut sum = 0.0;
                for (x, fx) in points.iter().zip(&samples) {
                    sum += fx * eval_cheb_basis(k, x)?;
                }
                sum / n as f64
            }
            ReconstructionMode::B | ReconstructionMode::C => {
                let r = cfg.residue_of(&k.to_signed())?;
                let scale = SQRT_2.powi(k.support_size() as i32);
                let sum: f64 = samples
                    .iter()
                    .enumerate()
                    .map(|(i, fx)| {
                        let phase = (i as u128 * r as u128 % n as u128) as f64;
                        fx * (2.0 * PI * phase / n as f64).cos()
                    })
                    .sum();
                let b = scale * sum / n as f64;
                if mode == ReconstructionMode::C {
                    b / aliasing_count_ck(k, cfg)? as f64
                } else {
                    b
                }
            }
        };
        coeffs.push((k.clone(), value));
    }
    ChebSeries::new(lat.dim(), coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::admissibility::{check_direct, LatticeConfig};
    use crate::index_sets::{make_simplex_iso, LowerSet};

    fn lat(n: u64, z: &[i64]) -> Rank1Lattice {
        Rank1Lattice::new(LatticeConfig::new(n, z.to_vec()).unwrap())
    }

    /// Deterministic coefficients in [−1, 1].
    fn series(set: &LowerSet) -> ChebSeries {
        ChebSeries::new(
            set.dim(),
            set.iter()
                .enumerate()
                .map(|(i, k)| (k.clone(), ((i * 37 + 11) % 23) as f64 / 11.0 - 1.0)),
        )
        .unwrap()
    }

    #[test]
    fn constant_function() {
        let s = make_simplex_iso(2, 1).unwrap();
        for mode in ReconstructionMode::ALL {
            let r = reconstruct(&lat(5, &[1, 3]), |_| 1.0, s.members(), mode).unwrap();
            for (k, c) in r.coefficients() {
                let expected = if k.is_zero() { 1.0 } else { 0.0 };
                assert!((c - expected).abs() < EXACTNESS_TOL, "{mode} {k}");
            }
        }
    }

    #[test]
    fn exact_on_admissible_lattice() {
        let s = make_simplex_iso(2, 2).unwrap();
        let f = series(&s);
        let l = lat(13, &[1, 5]);
        for mode in ReconstructionMode::ALL {
            let r = reconstruct(&l, |x| f.eval(x).unwrap(), s.members(), mode).unwrap();
            assert!(r.max_abs_diff(&f) < EXACTNESS_TOL, "{mode}");
        }
    }

    #[test]
    fn plan_c_only_lattice() {
        let set = LowerSet::new(1, [MultiIndex::new(vec![0]), MultiIndex::new(vec![1])]).unwrap();
        let cfg = LatticeConfig::new(2, vec![1]).unwrap();
        assert!(check_direct(set.members(), &cfg, Plan::C).unwrap());
        assert!(!check_direct(set.members(), &cfg, Plan::B).unwrap());
        let f = ChebSeries::new(
            1,
            [
                (MultiIndex::new(vec![0]), 0.3),
                (MultiIndex::new(vec![1]), -0.8),
            ],
        )
        .unwrap();
        let l = Rank1Lattice::new(cfg);
        let b = reconstruct(
            &l,
            |x| f.eval(x).unwrap(),
            set.members(),
            ReconstructionMode::B,
        )
        .unwrap();
        assert!(b.max_abs_diff(&f) > 1e-6);
        let c = reconstruct(
            &l,
            |x| f.eval(x).unwrap(),
            set.members(),
            ReconstructionMode::C,
        )
        .unwrap();
        assert!(c.max_abs_diff(&f) < EXACTNESS_TOL);
    }

    #[test]
    fn mode_names() {
        for m in ReconstructionMode::ALL {
            assert_eq!(m.to_string().parse::<ReconstructionMode>().unwrap(), m);
        }
        assert!("d".parse::<ReconstructionMode>().is_err());
    }
}
