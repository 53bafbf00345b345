//! Standard lower-set families.

use super::{check_dim, LowerSet, MultiIndex, Simplex, Weights, MAX_MIRROR_CARD};
use crate::error::{Error, Result};

/// Lexicographically ordered enumeration of a downward closed set given by
/// a monotone membership predicate; `extent[j]` bounds coordinate `j`.
fn enumerate_lower<F>(dim: usize, extent: &[u32], mut member: F) -> Result<LowerSet>
where
    F: FnMut(&[u32]) -> bool,
{
    check_dim(dim)?;
    let mut out = Vec::new();
    let mut cur = vec![0u32; dim];
    // Odometer with the last coordinate varying fastest gives lex order.
    'outer: loop {
        if member(&cur) {
            if out.len() >= MAX_MIRROR_CARD {
                return Err(Error::CardinalityCap {
                    found: out.len() + 1,
                    cap: MAX_MIRROR_CARD,
                });
            }
            out.push(MultiIndex::new(cur.clone()));
            if let Some(last) = cur.last_mut() {
                if *last < extent[dim - 1] {
                    *last += 1;
                    continue;
                }
            }
        }
        // Monotonicity: once a point leaves the set, raising the trailing
        // coordinate cannot bring it back, so carry into earlier ones.
        let mut j = dim;
        loop {
            if j == 0 {
                break 'outer;
            }
            j -= 1;
            cur[j] = 0;
            if j == 0 {
                break 'outer;
            }
            if cur[j - 1] < extent[j - 1] {
                cur[j - 1] += 1;
                if member(&cur) {
                    break;
                }
            }
        }
    }
    Ok(LowerSet::from_sorted_unchecked(dim, out))
}

/// The block `B_k = {h : h ≤ k}`.
pub fn make_block(k: &MultiIndex) -> Result<LowerSet> {
    let k = k.coords().to_vec();
    enumerate_lower(k.len(), &k, |h| h.iter().zip(&k).all(|(a, b)| a <= b))
}

/// The cross `C_k = ∪_j {h_j e_j : h_j ≤ k_j}`.
pub fn make_cross(k: &MultiIndex) -> Result<LowerSet> {
    let k = k.coords().to_vec();
    enumerate_lower(k.len(), &k, |h| {
        h.iter().filter(|&&c| c != 0).count() <= 1 && h.iter().zip(&k).all(|(a, b)| a <= b)
    })
}

/// The isotropic simplex `S_{1,k} = {h : |h|₁ ≤ k}`.
pub fn make_simplex_iso(dim: usize, k: u32) -> Result<LowerSet> {
    enumerate_lower(dim, &vec![k; dim], |h| {
        h.iter().map(|&c| c as u64).sum::<u64>() <= k as u64
    })
}

/// The weighted simplex `S_{w,u}`.
pub fn make_simplex(s: &Simplex) -> Result<LowerSet> {
    let extent: Vec<u32> = (0..s.dim()).map(|j| s.axis_extent(j)).collect();
    enumerate_lower(s.dim(), &extent, |h| s.scaled_norm(h) <= s.scaled_radius())
}

/// The hyperbolic cross `H_{d,N} = {h : ∏(h_j + 1) ≤ N}`.
pub fn make_hyperbolic(dim: usize, n: u32) -> Result<LowerSet> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "hyperbolic cross needs N ≥ 1".into(),
        ));
    }
    let extent = vec![n - 1; dim];
    enumerate_lower(dim, &extent, |h| {
        h.iter()
            .try_fold(1u64, |acc, &c| {
                let p = acc * (c as u64 + 1);
                (p <= n as u64).then_some(p)
            })
            .is_some()
    })
}

/// The `N` indices with smallest `⟨w, h⟩`, ties broken lexicographically.
pub fn make_simplex_by_cardinality(w: &Weights, n: usize) -> Result<LowerSet> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "cardinality must be at least 1".into(),
        ));
    }
    if n > MAX_MIRROR_CARD {
        return Err(Error::CardinalityCap {
            found: n,
            cap: MAX_MIRROR_CARD,
        });
    }
    let max_w = *w.values().iter().max().expect("weights are nonempty");
    let mut radius = max_w;
    let simplex = loop {
        let s = Simplex::new(w.clone(), radius)?;
        if make_simplex(&s)?.len() >= n {
            break s;
        }
        radius *= 2;
    };
    let candidates = make_simplex(&simplex)?;
    let mut ranked: Vec<(i64, &MultiIndex)> = candidates
        .iter()
        .map(|h| (simplex.scaled_norm(h.coords()), h))
        .collect();
    ranked.sort();
    let mut chosen: Vec<MultiIndex> = ranked.into_iter().take(n).map(|(_, h)| h.clone()).collect();
    chosen.sort();
    Ok(LowerSet::from_sorted_unchecked(w.dim(), chosen))
}

/// `#M(S_{1,k})` in dimension `d`, from the dimension recurrence
/// `#M(S_k^{d+1}) = #M(S_k^d) + 2 Σ_{l<k} #M(S_l^d)`, `#M(S_k^1) = 2k + 1`.
pub fn mirror_simplex_cardinality(dim: usize, k: u32) -> Result<u64> {
    if dim == 0 {
        return Err(Error::UnsupportedDimension(0));
    }
    let overflow = || Error::Overflow("mirrored simplex cardinality");
    let mut row: Vec<u64> = (0..=k as u64).map(|l| 2 * l + 1).collect();
    for _ in 1..dim {
        let mut next = Vec::with_capacity(row.len());
        let mut prefix = 0u64;
        for &m in &row {
            let v = prefix
                .checked_mul(2)
                .and_then(|p| p.checked_add(m))
                .ok_or_else(overflow)?;
            next.push(v);
            prefix = prefix.checked_add(m).ok_or_else(overflow)?;
        }
        row = next;
    }
    Ok(row[k as usize])
}
