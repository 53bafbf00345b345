use std::f64::consts::PI;

use num_complex::Complex64;

use crate::admissibility::{residue, LatticeConfig};
use crate::error::Result;
use crate::index_sets::SignedMultiIndex;

/// A lattice node kept as the exact fraction `num / den`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Node {
    pub num: Vec<u64>,
    pub den: u64,
}

impl Node {
    pub fn to_f64(&self) -> Vec<f64> {
        self.num
            .iter()
            .map(|&a| a as f64 / self.den as f64)
            .collect()
    }

    /// `cos(2π t)` per coordinate, evaluated from the exact fraction.
    pub fn cosine_point(&self) -> Vec<f64> {
        self.num
            .iter()
            .map(|&a| (2.0 * PI * a as f64 / self.den as f64).cos())
            .collect()
    }

    /// Tent-transformed coordinates `1 − |2t − 1|`.
    pub fn tent_point(&self) -> Vec<f64> {
        self.to_f64().into_iter().map(tent).collect()
    }
}

/// The node set of `(n, z)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rank1Lattice {
    cfg: LatticeConfig,
}

impl Rank1Lattice {
    pub fn new(cfg: LatticeConfig) -> Self {
        Rank1Lattice { cfg }
    }

    pub fn config(&self) -> &LatticeConfig {
        &self.cfg
    }

    pub fn dim(&self) -> usize {
        self.cfg.dim()
    }

    pub fn len(&self) -> usize {
        self.cfg.n as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The `i`-th node.
    pub fn node(&self, i: u64) -> Node {
        let n = self.cfg.n;
        let num = self
            .cfg
            .z
            .iter()
            .map(|&zj| ((i as u128 * residue(zj, n) as u128) % n as u128) as u64)
            .collect();
        Node { num, den: n }
    }

    pub fn nodes(&self) -> Vec<Node> {
        (0..self.cfg.n).map(|i| self.node(i)).collect()
    }
}

/// `1 − |2x − 1|`.
pub fn tent(x: f64) -> f64 {
    1.0 - (2.0 * x - 1.0).abs()
}

/// `(1/n) Σ_i exp(2πi · i(h·z)/n)`: one when `h·z ≡ 0`, zero otherwise.
pub fn character_sum(h: &SignedMultiIndex, cfg: &LatticeConfig) -> Result<Complex64> {
    let n = cfg.n;
    let r = cfg.residue_of(h)?;
    let sum: Complex64 = (0..n)
        .map(|i| {
            let phase = ((i as u128 * r as u128) % n as u128) as f64 / n as f64;
            Complex64::from_polar(1.0, 2.0 * PI * phase)
        })
        .sum();
    Ok(sum / n as f64)
}

/// `(1/n) Σ_{i<n} g(t_i)` with `g` evaluated on the raw nodes in `[0, 1)^d`.
pub fn cubature(lat: &Rank1Lattice, g: impl Fn(&Node) -> f64) -> f64 {
    let n = lat.config().n;
    (0..n).map(|i| g(&lat.node(i))).sum::<f64>() / n as f64
}

/// The same sum from `i ≤ n/2` only, valid for `g(t) = g(1 − t)`:
/// interior nodes count twice, `i = 0` and (even `n`) `i = n/2` once.
pub fn cubature_half(lat: &Rank1Lattice, g: impl Fn(&Node) -> f64) -> f64 {
    let n = lat.config().n;
    let total: f64 = (0..=n / 2)
        .map(|i| {
            let w = if i == 0 || 2 * i == n { 1.0 } else { 2.0 };
            w * g(&lat.node(i))
        })
        .sum();
    total / n as f64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lat(n: u64, z: &[i64]) -> Rank1Lattice {
        Rank1Lattice::new(LatticeConfig::new(n, z.to_vec()).unwrap())
    }

    #[test]
    fn node_examples() {
        assert_eq!(
            lat(2, &[1])
                .nodes()
                .iter()
                .map(|p| p.to_f64()[0])
                .collect::<Vec<_>>(),
            vec![0.0, 0.5]
        );
        assert_eq!(lat(5, &[1, 3]).node(2).to_f64(), vec![0.4, 0.2]);
        assert_eq!(
            lat(1, &[4, 7]).nodes(),
            vec![Node {
                num: vec![0, 0],
                den: 1
            }]
        );
        assert_eq!(lat(5, &[-1]).node(1).num, vec![4]);
    }

    #[test]
    fn node_symmetry() {
        let l = lat(12, &[1, 5, 7]);
        for i in 1..12 {
            let a = l.node(i);
            let b = l.node(12 - i);
            for (x, y) in a.num.iter().zip(&b.num) {
                assert_eq!((x + y) % 12, 0);
            }
        }
    }

    #[test]
    fn tent_values() {
        assert_eq!(tent(0.0), 0.0);
        assert_eq!(tent(0.5), 1.0);
        assert_eq!(tent(0.25), 0.5);
        for x in [0.1, 0.3, 0.6, 0.9] {
            assert!(((2.0 * PI * x).cos() - (PI * tent(x)).cos()).abs() < 1e-14);
        }
    }

    #[test]
    fn characters() {
        let cfg = LatticeConfig::new(5, vec![1, 3]).unwrap();
        let one = character_sum(&SignedMultiIndex::zero(2), &cfg).unwrap();
        assert!((one - 1.0).norm() < 1e-12);
        let zero = character_sum(&SignedMultiIndex::new(vec![1, 0]), &cfg).unwrap();
        assert!(zero.norm() < 1e-12);
        let alias = character_sum(&SignedMultiIndex::new(vec![5, 0]), &cfg).unwrap();
        assert!((alias - 1.0).norm() < 1e-12);
    }

    #[test]
    fn half_rule_matches_full() {
        for (n, z) in [(7u64, vec![1i64, 3]), (8, vec![1, 3]), (13, vec![2, 5])] {
            let l = lat(n, &z);
            let g = |p: &Node| {
                p.cosine_point()
                    .iter()
                    .map(|c| 1.0 + c * c)
                    .product::<f64>()
            };
            assert!((cubature(&l, g) - cubature_half(&l, g)).abs() < 1e-12);
        }
        assert_eq!(cubature(&lat(9, &[1, 2]), |_| 1.0), 1.0);
    }
}
