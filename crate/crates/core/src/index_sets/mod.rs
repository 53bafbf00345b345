//! Multi-indices and lower sets.
//!
//! Members of every set are kept in ascending lexicographic order, which is
//! also the order used by enumerations, alias tables and the text formats.

mod families;
mod weights;

use std::fmt;

pub use families::{
    make_block, make_cross, make_hyperbolic, make_simplex, make_simplex_by_cardinality,
    make_simplex_iso, mirror_simplex_cardinality,
};
pub use weights::{parse_rational, Simplex, Weights};

use crate::error::{Error, Result};

/// Largest supported dimension.
pub const MAX_DIM: usize = 16;

/// Largest number of mirrored points any enumeration may produce.
pub const MAX_MIRROR_CARD: usize = 10_000_000;

/// A point of `ℕ₀^d`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiIndex(Vec<u32>);

/// A point of `ℤ^d`, typically a sign-flipped [`MultiIndex`].
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedMultiIndex(Vec<i64>);

impl MultiIndex {
    pub fn new(coords: impl Into<Vec<u32>>) -> Self {
        MultiIndex(coords.into())
    }

    pub fn zero(dim: usize) -> Self {
        MultiIndex(vec![0; dim])
    }

    /// The unit index `e_j` (0-based `j`).
    pub fn unit(dim: usize, j: usize) -> Self {
        let mut c = vec![0; dim];
        c[j] = 1;
        MultiIndex(c)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[u32] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Number of nonzero coordinates, `|k|₀`.
    pub fn support_size(&self) -> u32 {
        self.0.iter().filter(|&&c| c != 0).count() as u32
    }

    pub fn l1(&self) -> u64 {
        self.0.iter().map(|&c| c as u64).sum()
    }

    pub fn max_coord(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// Componentwise `self ≤ other`.
    pub fn le(&self, other: &MultiIndex) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// The first `j` coordinates.
    pub fn prefix(&self, j: usize) -> MultiIndex {
        MultiIndex(self.0[..j].to_vec())
    }

    pub fn add(&self, other: &MultiIndex) -> MultiIndex {
        MultiIndex(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn with_coord(&self, j: usize, value: u32) -> MultiIndex {
        let mut c = self.0.clone();
        c[j] = value;
        MultiIndex(c)
    }

    pub fn to_signed(&self) -> SignedMultiIndex {
        SignedMultiIndex(self.0.iter().map(|&c| c as i64).collect())
    }

    /// All sign flips `σ(k)`, `σ ∈ S_k`, identity first.
    ///
    /// The first coordinate of the support toggles fastest.
    pub fn sign_flips(&self) -> Vec<SignedMultiIndex> {
        let support: Vec<usize> = (0..self.dim()).filter(|&j| self.0[j] != 0).collect();
        let base = self.to_signed();
        (0u64..1 << support.len())
            .map(|mask| {
                let mut c = base.0.clone();
                for (bit, &j) in support.iter().enumerate() {
                    if mask >> bit & 1 == 1 {
                        c[j] = -c[j];
                    }
                }
                SignedMultiIndex(c)
            })
            .collect()
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, self.0.iter())
    }
}

impl From<Vec<u32>> for MultiIndex {
    fn from(v: Vec<u32>) -> Self {
        MultiIndex(v)
    }
}

impl SignedMultiIndex {
    pub fn new(coords: impl Into<Vec<i64>>) -> Self {
        SignedMultiIndex(coords.into())
    }

    pub fn zero(dim: usize) -> Self {
        SignedMultiIndex(vec![0; dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Componentwise absolute value.
    pub fn abs(&self) -> MultiIndex {
        MultiIndex(self.0.iter().map(|&c| c.unsigned_abs() as u32).collect())
    }

    pub fn add(&self, other: &SignedMultiIndex) -> SignedMultiIndex {
        SignedMultiIndex(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn neg(&self) -> SignedMultiIndex {
        SignedMultiIndex(self.0.iter().map(|&c| -c).collect())
    }
}

impl fmt::Display for SignedMultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, self.0.iter())
    }
}

fn write_tuple<T: fmt::Display>(
    f: &mut fmt::Formatter<'_>,
    it: impl Iterator<Item = T>,
) -> fmt::Result {
    f.write_str("(")?;
    for (i, c) in it.enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{c}")?;
    }
    f.write_str(")")
}

/// Maps `h ∈ ℤ^d` to `2|h| − 1_{h<0}`.
///
/// The map is injective and sends `M(Λ)` into `Λ ⊕ Λ` for every lower `Λ`.
pub fn embed_to_sum(h: &SignedMultiIndex) -> MultiIndex {
    MultiIndex(
        h.0.iter()
            .map(|&c| (2 * c.unsigned_abs() - u64::from(c < 0)) as u32)
            .collect(),
    )
}

pub(crate) fn check_dim(dim: usize) -> Result<()> {
    if dim == 0 || dim > MAX_DIM {
        return Err(Error::UnsupportedDimension(dim));
    }
    Ok(())
}

fn common_dim<'a, I>(mut it: I) -> Result<Option<usize>>
where
    I: Iterator<Item = usize> + 'a,
{
    let Some(d) = it.next() else { return Ok(None) };
    for other in it {
        if other != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                found: other,
            });
        }
    }
    Ok(Some(d))
}

/// True iff every `k` with `k_j ≥ 1` has `k − e_j` in the set.
pub fn is_lower(members: &[MultiIndex]) -> Result<bool> {
    if common_dim(members.iter().map(MultiIndex::dim))?.is_none() {
        return Ok(true);
    }
    let mut sorted = members.to_vec();
    sorted.sort();
    sorted.dedup();
    Ok(first_missing_predecessor(&sorted).is_none())
}

fn first_missing_predecessor(sorted: &[MultiIndex]) -> Option<&MultiIndex> {
    sorted.iter().find(|k| {
        (0..k.dim())
            .any(|j| k.0[j] > 0 && sorted.binary_search(&k.with_coord(j, k.0[j] - 1)).is_err())
    })
}

/// A finite, nonempty, downward closed subset of `ℕ₀^d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LowerSet {
    dim: usize,
    members: Vec<MultiIndex>,
}

impl LowerSet {
    /// Validates and builds a lower set; duplicates are merged.
    pub fn new(dim: usize, members: impl IntoIterator<Item = MultiIndex>) -> Result<Self> {
        check_dim(dim)?;
        let mut members: Vec<MultiIndex> = members.into_iter().collect();
        for k in &members {
            if k.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: k.dim(),
                });
            }
        }
        members.sort();
        members.dedup();
        if members.first() != Some(&MultiIndex::zero(dim)) {
            return Err(Error::NotLower(format!(
                "{} (zero index absent)",
                MultiIndex::zero(dim)
            )));
        }
        if let Some(k) = first_missing_predecessor(&members) {
            return Err(Error::NotLower(k.to_string()));
        }
        Ok(LowerSet { dim, members })
    }

    /// The smallest lower set containing `members`.
    pub fn closure(dim: usize, members: &[MultiIndex]) -> Result<Self> {
        check_dim(dim)?;
        let mut all = std::collections::BTreeSet::from([MultiIndex::zero(dim)]);
        for k in members {
            if k.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: k.dim(),
                });
            }
            all.extend(families::make_block(k)?.members().iter().cloned());
        }
        Ok(LowerSet::from_sorted_unchecked(
            dim,
            all.into_iter().collect(),
        ))
    }

    /// The set `{0}`.
    pub fn origin(dim: usize) -> Result<Self> {
        LowerSet::new(dim, [MultiIndex::zero(dim)])
    }

    pub(crate) fn from_sorted_unchecked(dim: usize, members: Vec<MultiIndex>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        LowerSet { dim, members }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[MultiIndex] {
        &self.members
    }

    pub fn iter(&self) -> std::slice::Iter<'_, MultiIndex> {
        self.members.iter()
    }

    pub fn contains(&self, k: &MultiIndex) -> bool {
        self.members.binary_search(k).is_ok()
    }

    /// `‖Λ‖∞`.
    pub fn max_norm(&self) -> u32 {
        self.members
            .iter()
            .map(MultiIndex::max_coord)
            .max()
            .unwrap_or(0)
    }

    /// `#M(Λ) = Σ 2^{|k|₀}`, computed without enumeration.
    pub fn mirror_cardinality(&self) -> usize {
        mirror_cardinality(&self.members)
    }

    /// The mirrored set `M(Λ)`.
    pub fn mirror(&self) -> Result<IndexSet> {
        mirror_of(&self.members)
    }

    /// Minkowski sum `Λ ⊕ Λ′`, again a lower set.
    pub fn sum(&self, other: &LowerSet) -> Result<LowerSet> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        let card = self.len().saturating_mul(other.len());
        if card > MAX_MIRROR_CARD {
            return Err(Error::CardinalityCap {
                found: card,
                cap: MAX_MIRROR_CARD,
            });
        }
        let mut out: Vec<MultiIndex> = self
            .members
            .iter()
            .flat_map(|a| other.members.iter().map(move |b| a.add(b)))
            .collect();
        out.sort();
        out.dedup();
        Ok(LowerSet::from_sorted_unchecked(self.dim, out))
    }

    /// Elements `k` with `k + e_i ∉ Λ` for every `i`.
    pub fn maximal_elements(&self) -> Vec<MultiIndex> {
        self.members
            .iter()
            .filter(|k| (0..self.dim).all(|i| !self.contains(&k.with_coord(i, k.0[i] + 1))))
            .cloned()
            .collect()
    }

    /// Elements that are not the midpoint of two distinct members.
    pub fn extremal_elements(&self) -> Vec<MultiIndex> {
        self.members
            .iter()
            .filter(|k| self.is_extremal(k))
            .cloned()
            .collect()
    }

    fn is_extremal(&self, k: &MultiIndex) -> bool {
        // k + e_j ∈ Λ with j ∈ supp(k) makes k the midpoint of k ± e_j.
        if (0..self.dim).any(|j| k.0[j] > 0 && self.contains(&k.with_coord(j, k.0[j] + 1))) {
            return false;
        }
        !self.members.iter().any(|h| {
            if h == k || !h.0.iter().zip(&k.0).all(|(&a, &b)| a <= 2 * b) {
                return false;
            }
            let partner = MultiIndex(h.0.iter().zip(&k.0).map(|(&a, &b)| 2 * b - a).collect());
            self.contains(&partner)
        })
    }

    /// `Λ_[j] = { k_[j] : k ∈ Λ }` for `1 ≤ j ≤ d`.
    pub fn projection(&self, j: usize) -> Result<LowerSet> {
        if j == 0 || j > self.dim {
            return Err(Error::ProjectionOutOfRange { j, dim: self.dim });
        }
        let mut out: Vec<MultiIndex> = self.members.iter().map(|k| k.prefix(j)).collect();
        out.dedup();
        Ok(LowerSet::from_sorted_unchecked(j, out))
    }

    /// `Some(k)` when `Λ = B_k`.
    pub fn as_block(&self) -> Option<MultiIndex> {
        let top = self.members.last()?;
        let block_len = top.0.iter().map(|&c| c as usize + 1).product::<usize>();
        (block_len == self.len() && self.members.iter().all(|k| k.le(top))).then(|| top.clone())
    }
}

impl<'a> IntoIterator for &'a LowerSet {
    type Item = &'a MultiIndex;
    type IntoIter = std::slice::Iter<'a, MultiIndex>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}

pub(crate) fn mirror_cardinality(members: &[MultiIndex]) -> usize {
    members.iter().map(|k| 1usize << k.support_size()).sum()
}

/// `M(S)` for an arbitrary finite `S ⊂ ℕ₀^d`.
pub fn mirror_of(members: &[MultiIndex]) -> Result<IndexSet> {
    let dim = common_dim(members.iter().map(MultiIndex::dim))?.unwrap_or(0);
    let card = mirror_cardinality(members);
    if card > MAX_MIRROR_CARD {
        return Err(Error::CardinalityCap {
            found: card,
            cap: MAX_MIRROR_CARD,
        });
    }
    let flips = members.iter().flat_map(MultiIndex::sign_flips).collect();
    Ok(IndexSet::from_unsorted(dim, flips))
}

/// A finite subset of `ℤ^d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IndexSet {
    dim: usize,
    members: Vec<SignedMultiIndex>,
}

impl IndexSet {
    pub fn new(dim: usize, members: impl IntoIterator<Item = SignedMultiIndex>) -> Result<Self> {
        let members: Vec<SignedMultiIndex> = members.into_iter().collect();
        for h in &members {
            if h.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: h.dim(),
                });
            }
        }
        Ok(IndexSet::from_unsorted(dim, members))
    }

    fn from_unsorted(dim: usize, mut members: Vec<SignedMultiIndex>) -> Self {
        members.sort();
        members.dedup();
        IndexSet { dim, members }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[SignedMultiIndex] {
        &self.members
    }

    pub fn iter(&self) -> std::slice::Iter<'_, SignedMultiIndex> {
        self.members.iter()
    }

    pub fn contains(&self, h: &SignedMultiIndex) -> bool {
        self.members.binary_search(h).is_ok()
    }

    /// Minkowski sum of two signed sets.
    pub fn sum(&self, other: &IndexSet) -> Result<IndexSet> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        let card = self.len().saturating_mul(other.len());
        if card > MAX_MIRROR_CARD {
            return Err(Error::CardinalityCap {
                found: card,
                cap: MAX_MIRROR_CARD,
            });
        }
        let sums = self
            .members
            .iter()
            .flat_map(|a| other.members.iter().map(move |b| a.add(b)))
            .collect();
        Ok(IndexSet::from_unsorted(self.dim, sums))
    }
}
