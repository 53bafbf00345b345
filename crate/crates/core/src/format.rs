//! Plain-text formats.
//!
//! Index sets:
//!
//! ```text
//! # optional comments
//! d 2
//! 0 0
//! 0 1
//! 1 0
//! ```
//!
//! Lattices are a single line `n z_1 … z_d`. Coefficient maps start with
//! `d <dim>` followed by `k_1 … k_d <coefficient>` lines.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::admissibility::LatticeConfig;
use crate::cubature::ChebSeries;
use crate::error::{Error, Result};
use crate::index_sets::{IndexSet, LowerSet, MultiIndex, SignedMultiIndex};

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn parse_fields<T: FromStr>(line: usize, s: &str) -> Result<Vec<T>> {
    s.split_whitespace()
        .map(|t| {
            t.parse::<T>()
                .map_err(|_| parse_err(line, format!("bad number `{t}`")))
        })
        .collect()
}

/// Header plus rows of `dim` numbers each.
fn parse_rows<T: FromStr>(text: &str) -> Result<(usize, Vec<Vec<T>>)> {
    let mut lines = content_lines(text);
    let (hline, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "missing `d <dim>` header"))?;
    let dim: usize = header
        .strip_prefix('d')
        .filter(|rest| rest.starts_with(char::is_whitespace))
        .and_then(|rest| rest.trim().parse().ok())
        .ok_or_else(|| parse_err(hline, format!("expected `d <dim>`, found `{header}`")))?;
    let mut rows = Vec::new();
    for (line, body) in lines {
        let row: Vec<T> = parse_fields(line, body)?;
        if row.len() != dim {
            return Err(parse_err(
                line,
                format!("expected {dim} entries, found {}", row.len()),
            ));
        }
        rows.push(row);
    }
    Ok((dim, rows))
}

/// Parses an unsigned index set of any shape.
pub fn parse_index_list(text: &str) -> Result<(usize, Vec<MultiIndex>)> {
    let (dim, rows) = parse_rows::<u32>(text)?;
    let mut members: Vec<MultiIndex> = rows.into_iter().map(MultiIndex::new).collect();
    members.sort();
    members.dedup();
    Ok((dim, members))
}

/// Parses and validates a lower set.
pub fn parse_lower_set(text: &str) -> Result<LowerSet> {
    let (dim, members) = parse_index_list(text)?;
    LowerSet::new(dim, members)
}

pub fn parse_signed_set(text: &str) -> Result<IndexSet> {
    let (dim, rows) = parse_rows::<i64>(text)?;
    IndexSet::new(dim, rows.into_iter().map(SignedMultiIndex::new))
}

fn write_rows<'a, T: std::fmt::Display + 'a>(
    dim: usize,
    rows: impl Iterator<Item = &'a [T]>,
) -> String {
    let mut out = format!("d {dim}\n");
    for row in rows {
        let fields: Vec<String> = row.iter().map(T::to_string).collect();
        out.push_str(&fields.join(" "));
        out.push('\n');
    }
    out
}

pub fn write_index_list(dim: usize, members: &[MultiIndex]) -> String {
    let mut sorted = members.to_vec();
    sorted.sort();
    write_rows(dim, sorted.iter().map(MultiIndex::coords))
}

pub fn write_lower_set(set: &LowerSet) -> String {
    write_rows(set.dim(), set.iter().map(MultiIndex::coords))
}

pub fn write_signed_set(set: &IndexSet) -> String {
    write_rows(set.dim(), set.iter().map(SignedMultiIndex::coords))
}

/// Parses `n z_1 … z_d`.
pub fn parse_lattice(text: &str) -> Result<LatticeConfig> {
    let mut lines = content_lines(text);
    let (line, body) = lines
        .next()
        .ok_or_else(|| parse_err(1, "empty lattice file"))?;
    if let Some((extra, _)) = lines.next() {
        return Err(parse_err(extra, "lattice file has more than one line"));
    }
    let mut fields = body.split_whitespace();
    let n_text = fields
        .next()
        .ok_or_else(|| parse_err(line, "missing modulus"))?;
    let n: u64 = n_text
        .parse()
        .map_err(|_| parse_err(line, format!("bad modulus `{n_text}`")))?;
    let z: Vec<i64> = parse_fields(line, &fields.collect::<Vec<_>>().join(" "))?;
    LatticeConfig::new(n, z).map_err(|e| parse_err(line, e.to_string()))
}

pub fn write_lattice(cfg: &LatticeConfig) -> String {
    format!("{cfg}\n")
}

pub fn parse_cheb_series(text: &str) -> Result<ChebSeries> {
    let mut lines = content_lines(text);
    let (hline, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "missing `d <dim>` header"))?;
    let dim: usize = header
        .strip_prefix("d ")
        .and_then(|rest| rest.trim().parse().ok())
        .ok_or_else(|| parse_err(hline, format!("expected `d <dim>`, found `{header}`")))?;
    let mut coeffs = Vec::new();
    for (line, body) in lines {
        let fields: Vec<&str> = body.split_whitespace().collect();
        if fields.len() != dim + 1 {
            return Err(parse_err(
                line,
                format!("expected {} entries, found {}", dim + 1, fields.len()),
            ));
        }
        let k: Vec<u32> = parse_fields(line, &fields[..dim].join(" "))?;
        let c: f64 = fields[dim]
            .parse()
            .map_err(|_| parse_err(line, format!("bad coefficient `{}`", fields[dim])))?;
        coeffs.push((MultiIndex::new(k), c));
    }
    ChebSeries::new(dim, coeffs)
}

/// Coefficients are written with 17 significant digits.
pub fn write_cheb_series(series: &ChebSeries) -> String {
    let mut out = format!("d {}\n", series.dim());
    for (k, c) in series.coefficients() {
        for kj in k.coords() {
            let _ = write!(out, "{kj} ");
        }
        let _ = writeln!(out, "{c:.16e}");
    }
    out
}
