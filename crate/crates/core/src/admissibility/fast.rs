//! Allocation-free admissibility kernel for scanning many `(n, z)` pairs
//! against one fixed set.

use super::Plan;
use crate::index_sets::MultiIndex;

/// A set preprocessed for repeated checks under one plan.
pub struct FastChecker {
    dim: usize,
    plan: Plan,
    /// Mirrored points, flattened; identity flips of all keys come first.
    coords: Vec<i64>,
    keys: Vec<u32>,
    num_ids: usize,
    stamp: Vec<u32>,
    owner: Vec<u32>,
    epoch: u32,
}

impl FastChecker {
    pub fn new(set: &[MultiIndex], plan: Plan) -> Self {
        let dim = set.first().map_or(0, MultiIndex::dim);
        let mut coords = Vec::new();
        let mut keys = Vec::new();
        let mut rest_coords = Vec::new();
        let mut rest_keys = Vec::new();
        for (key, k) in set.iter().enumerate() {
            for (i, h) in k.sign_flips().into_iter().enumerate() {
                if plan == Plan::Zero && h.is_zero() {
                    continue;
                }
                if i == 0 {
                    coords.extend_from_slice(h.coords());
                    keys.push(key as u32);
                } else {
                    rest_coords.extend_from_slice(h.coords());
                    rest_keys.push(key as u32);
                }
            }
        }
        let num_ids = keys.len();
        coords.extend(rest_coords);
        keys.extend(rest_keys);
        FastChecker {
            dim,
            plan,
            coords,
            keys,
            num_ids,
            stamp: Vec::new(),
            owner: Vec::new(),
            epoch: 0,
        }
    }

    /// Number of mirrored points examined per check.
    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }

    fn next_epoch(&mut self, n: usize) {
        if self.stamp.len() < n {
            self.stamp.resize(n, 0);
            self.owner.resize(n, 0);
        }
        self.epoch = self.epoch.wrapping_add(1);
        if self.epoch == 0 {
            self.stamp.iter_mut().for_each(|s| *s = 0);
            self.epoch = 1;
        }
    }

    /// Same answer as `check_direct` for `z` with `|z_j| < n ≤ 2^31`.
    pub fn check(&mut self, n: u64, z: &[i64]) -> bool {
        debug_assert_eq!(z.len(), self.dim);
        let ni = n as i64;
        let d = self.dim;
        let residue = |p: &[i64]| -> usize {
            let dot: i64 = p.iter().zip(z).map(|(a, b)| a * b).sum();
            dot.rem_euclid(ni) as usize
        };
        match self.plan {
            Plan::Zero => self.coords.chunks_exact(d.max(1)).all(|p| residue(p) != 0),
            Plan::A => {
                self.next_epoch(n as usize);
                let epoch = self.epoch;
                for p in self.coords.chunks_exact(d.max(1)) {
                    let r = residue(p);
                    if self.stamp[r] == epoch {
                        return false;
                    }
                    self.stamp[r] = epoch;
                }
                true
            }
            Plan::B | Plan::C => {
                self.next_epoch(n as usize);
                let epoch = self.epoch;
                let strict = self.plan == Plan::B;
                for (i, p) in self.coords.chunks_exact(d.max(1)).enumerate() {
                    let r = residue(p);
                    let key = self.keys[i];
                    if i < self.num_ids {
                        if self.stamp[r] == epoch {
                            return false;
                        }
                        self.stamp[r] = epoch;
                        self.owner[r] = key;
                    } else if self.stamp[r] == epoch && (strict || self.owner[r] != key) {
                        return false;
                    }
                }
                true
            }
        }
    }
}
