//! Alias tables: per-index scalar products of all sign flips, extended one
//! dimension at a time.
//!
//! For a key `h ∈ Λ_[j]` the entry stores `v_id = h·z` and the multiset
//! `v_other = {σ(h)·z : σ ≠ id}`. Going from `j − 1` to `j` with the new
//! generator component `ζ`, an index `h = (ĥ, h_j)` with `h_j ≠ 0` and
//! `s = h_j ζ` gets
//!
//! ```text
//! v_id    = v_id(ĥ) + s
//! v_other = {v_id(ĥ) − s} ∪ {w + s, w − s : w ∈ v_other(ĥ)}
//! ```
//!
//! while `h_j = 0` copies the entry of `ĥ`. Products are stored unreduced so
//! one table can be checked against many moduli.

use std::collections::{BTreeMap, HashSet};

use super::{residue, Plan};
use crate::error::{Error, Result};
use crate::index_sets::{LowerSet, MultiIndex};

/// Products for one key.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AliasEntry {
    pub v_id: i64,
    /// Sorted.
    pub v_other: Vec<i64>,
}

/// Alias table `D_j` keyed by `Λ_[j]` in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AliasTable {
    dim: usize,
    entries: BTreeMap<MultiIndex, AliasEntry>,
}

impl AliasTable {
    /// The table for dimension 0: a single empty key with entry `(0, ∅)`.
    pub fn root() -> Self {
        let mut entries = BTreeMap::new();
        entries.insert(
            MultiIndex::new(Vec::new()),
            AliasEntry {
                v_id: 0,
                v_other: Vec::new(),
            },
        );
        AliasTable { dim: 0, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, key: &MultiIndex) -> Option<&AliasEntry> {
        self.entries.get(key)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&MultiIndex, &AliasEntry)> {
        self.entries.iter()
    }

    /// `max |h·z|` over all stored products.
    pub fn max_abs_product(&self) -> u64 {
        self.entries
            .values()
            .flat_map(|e| std::iter::once(&e.v_id).chain(&e.v_other))
            .map(|v| v.unsigned_abs())
            .max()
            .unwrap_or(0)
    }
}

/// Growing membership structures `V` (identity products) and `V*` (all
/// other products) over residues, or raw integers when `n` is `None`.
pub struct Collisions {
    n: Option<u64>,
    plan: Plan,
    ids: HashSet<i64>,
    others: HashSet<i64>,
}

impl Collisions {
    pub fn new(plan: Plan, n: Option<u64>) -> Self {
        Collisions {
            n,
            plan,
            ids: HashSet::new(),
            others: HashSet::new(),
        }
    }

    fn reduce(&self, x: i64) -> i64 {
        match self.n {
            Some(n) => residue(x, n) as i64,
            None => x,
        }
    }

    /// Checks the next entry and, if it passes, records it.
    pub fn admit(&mut self, entry: &AliasEntry) -> bool {
        let v_id = self.reduce(entry.v_id);
        let others: Vec<i64> = entry.v_other.iter().map(|&w| self.reduce(w)).collect();
        if rejection_condition(self.plan, v_id, &others, &self.ids, &self.others) {
            return false;
        }
        self.ids.insert(v_id);
        self.others.extend(others);
        true
    }
}

/// The per-key inadmissibility test on already reduced values.
///
/// The zero key is recognised by its empty `v_other`.
pub fn rejection_condition(
    plan: Plan,
    v_id: i64,
    v_other: &[i64],
    ids: &HashSet<i64>,
    others: &HashSet<i64>,
) -> bool {
    let seen = |x: &i64| ids.contains(x) || others.contains(x);
    match plan {
        Plan::Zero => !v_other.is_empty() && (v_id == 0 || v_other.contains(&0)),
        Plan::C => seen(&v_id) || v_other.iter().any(|w| ids.contains(w)),
        Plan::B => {
            seen(&v_id) || v_other.contains(&v_id) || v_other.iter().any(|w| ids.contains(w))
        }
        Plan::A => {
            let mut sorted = v_other.to_vec();
            sorted.sort_unstable();
            sorted.windows(2).any(|p| p[0] == p[1])
                || v_other.contains(&v_id)
                || seen(&v_id)
                || v_other.iter().any(seen)
        }
    }
}

fn extend_entry(prev: &AliasEntry, s: i64) -> Result<AliasEntry> {
    let overflow = || Error::Overflow("alias table update");
    let add = |a: i64, b: i64| a.checked_add(b).ok_or_else(overflow);
    let sub = |a: i64, b: i64| a.checked_sub(b).ok_or_else(overflow);
    let mut v_other = Vec::with_capacity(2 * prev.v_other.len() + 1);
    v_other.push(sub(prev.v_id, s)?);
    for &w in &prev.v_other {
        v_other.push(add(w, s)?);
        v_other.push(sub(w, s)?);
    }
    v_other.sort_unstable();
    Ok(AliasEntry {
        v_id: add(prev.v_id, s)?,
        v_other,
    })
}

/// Extends `prev` (keyed by `Λ_[j−1]`) to `Λ_[j]` with generator component
/// `zeta`, returning `None` as soon as a key violates the plan.
pub fn table_extend(
    lambda_j: &LowerSet,
    prev: &AliasTable,
    n: Option<u64>,
    zeta: i64,
    plan: Plan,
) -> Result<Option<AliasTable>> {
    let j = lambda_j.dim();
    if prev.dim + 1 != j {
        return Err(Error::DimensionMismatch {
            expected: prev.dim + 1,
            found: j,
        });
    }
    let mut checker = Collisions::new(plan, n);
    let mut entries = BTreeMap::new();
    for h in lambda_j {
        let head = h.prefix(j - 1);
        let base = prev.get(&head).ok_or_else(|| {
            Error::InvalidArgument(format!("projection key {head} missing from alias table"))
        })?;
        let hj = h.coords()[j - 1] as i64;
        let entry = if hj == 0 {
            base.clone()
        } else {
            let s = hj
                .checked_mul(zeta)
                .ok_or(Error::Overflow("alias table update"))?;
            extend_entry(base, s)?
        };
        if !checker.admit(&entry) {
            return Ok(None);
        }
        entries.insert(h.clone(), entry);
    }
    Ok(Some(AliasTable { dim: j, entries }))
}

/// Builds the full table for `z` without any admissibility test.
pub fn build_table(lambda: &LowerSet, z: &[i64]) -> Result<AliasTable> {
    if z.len() != lambda.dim() {
        return Err(Error::DimensionMismatch {
            expected: lambda.dim(),
            found: z.len(),
        });
    }
    let mut table = AliasTable::root();
    for (j, &zeta) in z.iter().enumerate() {
        let proj = lambda.projection(j + 1)?;
        let mut entries = BTreeMap::new();
        for h in &proj {
            let base = &table.entries[&h.prefix(j)];
            let hj = h.coords()[j] as i64;
            let entry = if hj == 0 {
                base.clone()
            } else {
                extend_entry(
                    base,
                    hj.checked_mul(zeta)
                        .ok_or(Error::Overflow("alias table update"))?,
                )?
            };
            entries.insert(h.clone(), entry);
        }
        table = AliasTable {
            dim: j + 1,
            entries,
        };
    }
    Ok(table)
}

/// Re-checks every entry of a table under modulus `n` (or exactly).
pub fn check_table(table: &AliasTable, n: Option<u64>, plan: Plan) -> bool {
    let mut checker = Collisions::new(plan, n);
    table.entries.values().all(|e| checker.admit(e))
}
