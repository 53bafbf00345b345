//! Dimension-wise generator construction.
//!
//! For `j = 1, …, d` the component `z_j` is the smallest `ζ ∈ [0, n)` for
//! which the alias table of `Λ_[j]` stays admissible modulo the current `n`;
//! when no `ζ` works, `n` grows by one and the scan restarts at `ζ = 0`.
//! Each dimension first retests the modulus that closed the previous one.

use super::{Algorithm, SearchResult, Stopwatch};
use crate::admissibility::alias::{table_extend, AliasTable};
use crate::admissibility::Plan;
use crate::error::Result;
use crate::index_sets::LowerSet;

/// Runs the dimension-wise search starting from modulus `n_min`.
pub fn cbc_search(set: &LowerSet, plan: Plan, n_min: u64) -> Result<SearchResult> {
    let timer = Stopwatch::start();
    let mut n = n_min.max(1);
    let mut z = Vec::with_capacity(set.dim());
    let mut table = AliasTable::root();
    for j in 1..=set.dim() {
        let proj = set.projection(j)?;
        'modulus: loop {
            for zeta in 0..n as i64 {
                if let Some(next) = table_extend(&proj, &table, Some(n), zeta, plan)? {
                    table = next;
                    z.push(zeta);
                    break 'modulus;
                }
            }
            n += 1;
        }
    }
    Ok(SearchResult {
        n,
        z,
        plan,
        algorithm: Algorithm::Cbc,
        elapsed_ms: timer.elapsed_ms(),
        table: Some(table),
    })
}
