//! The exhaustive oracle: smallest `n`, then lexicographically smallest
//! `z ∈ {0, …, n−1}^d`.
//!
//! Every plan only compares residues of `h·z`, so multiplying `z` by a unit
//! of `ℤ/nℤ` preserves admissibility. Any `z_1` can be moved to
//! `gcd(z_1, n)` that way, hence existence at a given `n` only needs
//! `z_1 ∈ {0} ∪ {g : g | n, g < n}`. The full lexicographic scan runs only
//! at the modulus where a solution is known to exist.

use super::{Algorithm, SearchResult, Stopwatch};
use crate::admissibility::fast::FastChecker;
use crate::admissibility::Plan;
use crate::error::{Error, Result};
use crate::index_sets::MultiIndex;

fn proper_divisors(n: u64) -> impl Iterator<Item = i64> {
    (1..n)
        .filter(move |&g| n.is_multiple_of(g))
        .map(|g| g as i64)
}

/// Calls `visit` on `z` with `z_0` fixed and the remaining coordinates in
/// lexicographic order over `[0, n)`; stops when `visit` returns true.
fn scan_tail(z: &mut [i64], n: u64, mut visit: impl FnMut(&[i64]) -> bool) -> bool {
    let d = z.len();
    for v in &mut z[1..] {
        *v = 0;
    }
    loop {
        if visit(z) {
            return true;
        }
        let mut j = d;
        loop {
            j -= 1;
            if j == 0 {
                return false;
            }
            z[j] += 1;
            if (z[j] as u64) < n {
                break;
            }
            z[j] = 0;
        }
    }
}

fn exists(checker: &mut FastChecker, dim: usize, n: u64) -> bool {
    let mut z = vec![0i64; dim];
    std::iter::once(0).chain(proper_divisors(n)).any(|z0| {
        z[0] = z0;
        scan_tail(&mut z, n, |z| checker.check(n, z))
    })
}

fn first_lexicographic(checker: &mut FastChecker, dim: usize, n: u64) -> Option<Vec<i64>> {
    let mut z = vec![0i64; dim];
    for z0 in 0..n as i64 {
        z[0] = z0;
        if scan_tail(&mut z, n, |z| checker.check(n, z)) {
            return Some(z);
        }
    }
    None
}

/// Smallest admissible `n` in `[n_lower, n_upper]` with its lexicographically
/// smallest generator; accepts any finite set.
pub fn exhaustive_search(
    set: &[MultiIndex],
    plan: Plan,
    n_lower: u64,
    n_upper: u64,
) -> Result<SearchResult> {
    let timer = Stopwatch::start();
    let dim = set
        .first()
        .map(MultiIndex::dim)
        .ok_or_else(|| Error::InvalidArgument("exhaustive search needs a nonempty set".into()))?;
    if n_lower == 0 || n_lower > n_upper {
        return Err(Error::InvalidArgument(format!(
            "empty modulus range [{n_lower}, {n_upper}]"
        )));
    }
    if n_upper > 1 << 31 {
        return Err(Error::InvalidArgument(format!(
            "modulus bound {n_upper} too large"
        )));
    }
    let mut checker = FastChecker::new(set, plan);
    for n in n_lower..=n_upper {
        if exists(&mut checker, dim, n) {
            let z = first_lexicographic(&mut checker, dim, n)
                .expect("a unit multiple of an admissible z is admissible");
            return Ok(SearchResult {
                n,
                z,
                plan,
                algorithm: Algorithm::Exhaustive,
                elapsed_ms: timer.elapsed_ms(),
                table: None,
            });
        }
    }
    Err(Error::NotFound {
        lo: n_lower,
        hi: n_upper,
    })
}

/// Whether some `z` is admissible at exactly this `n`.
pub fn admissible_at(set: &[MultiIndex], plan: Plan, n: u64) -> bool {
    let Some(dim) = set.first().map(MultiIndex::dim) else {
        return true;
    };
    exists(&mut FastChecker::new(set, plan), dim, n)
}
