//! Two-step search: a generator without wrap-around, then the modulus.
//!
//! Step one picks each `z_j` as the smallest `ζ ≥ 0` keeping all products
//! of `Λ_[j]` pairwise compatible as exact integers. Step two scans moduli
//! upward from `n_min` over the stored products. It always stops by
//! `2·max|h·z| + 1`, beyond which no two distinct products can coincide.

use super::{Algorithm, SearchResult, Stopwatch};
use crate::admissibility::alias::{check_table, table_extend, AliasTable};
use crate::admissibility::Plan;
use crate::error::{Error, Result};
use crate::index_sets::LowerSet;

/// Largest generator component tried in [`vector_search`].
pub const ZETA_CAP: i64 = 1_000_000_000;

/// Step one: the generator and its table of unreduced products.
pub fn vector_search(set: &LowerSet, plan: Plan) -> Result<(Vec<i64>, AliasTable)> {
    let mut z = Vec::with_capacity(set.dim());
    let mut table = AliasTable::root();
    for j in 1..=set.dim() {
        let proj = set.projection(j)?;
        let mut zeta = 0i64;
        loop {
            if let Some(next) = table_extend(&proj, &table, None, zeta, plan)? {
                table = next;
                break;
            }
            zeta += 1;
            if zeta > ZETA_CAP {
                return Err(Error::ZetaCap(ZETA_CAP, j));
            }
        }
        z.push(zeta);
    }
    Ok((z, table))
}

/// Step two: smallest `n ≥ n_min` (odd only if requested) at which the
/// table passes the plan's checks.
pub fn modulus_search(table: &AliasTable, n_min: u64, plan: Plan, odd_only: bool) -> u64 {
    let mut n = n_min.max(1);
    loop {
        if (!odd_only || n % 2 == 1) && check_table(table, Some(n), plan) {
            return n;
        }
        n += 1;
    }
}

/// Both steps; the table is kept in the result.
pub fn two_step_search(
    set: &LowerSet,
    plan: Plan,
    n_min: u64,
    odd_only: bool,
) -> Result<SearchResult> {
    let timer = Stopwatch::start();
    let (z, table) = vector_search(set, plan)?;
    let n = modulus_search(&table, n_min, plan, odd_only);
    Ok(SearchResult {
        n,
        z,
        plan,
        algorithm: Algorithm::TwoStep,
        elapsed_ms: timer.elapsed_ms(),
        table: Some(table),
    })
}
