use std::io::Write;
use std::path::Path;

use rank1_lower::search::Algorithm;
use rank1_lower::Plan;
use serde::Deserialize;

use crate::commands::{build_family, read, run_search, FamilyParams, SearchOptions};
use crate::error::{CliError, CliResult};
use crate::record::BenchRecord;

/// Benchmark description, from TOML or flags.
///
/// `sizes` is the family's size parameter: `N` for `simplex-card` and
/// `hyperbolic`, the radius `k` for `simplex`, `block` and `cross`.
#[derive(Clone, Debug, Default, Deserialize, PartialEq)]
#[serde(default, deny_unknown_fields)]
pub struct BenchConfig {
    pub family: Option<String>,
    pub w: Option<String>,
    pub d: Option<usize>,
    pub sizes: Vec<u32>,
    pub plans: Vec<String>,
    pub algos: Vec<String>,
    pub odd_only: bool,
}

impl BenchConfig {
    pub fn from_toml(text: &str) -> CliResult<Self> {
        Ok(toml::from_str(text)?)
    }

    /// Fields set in `other` replace those in `self`.
    pub fn merge(mut self, other: BenchConfig) -> Self {
        self.family = other.family.or(self.family);
        self.w = other.w.or(self.w);
        self.d = other.d.or(self.d);
        if !other.sizes.is_empty() {
            self.sizes = other.sizes;
        }
        if !other.plans.is_empty() {
            self.plans = other.plans;
        }
        if !other.algos.is_empty() {
            self.algos = other.algos;
        }
        self.odd_only |= other.odd_only;
        self
    }

    fn params(&self, family: &str, size: u32) -> FamilyParams {
        let d = self.d;
        let mut p = FamilyParams {
            d,
            w: self.w.clone(),
            ..FamilyParams::default()
        };
        match family {
            "simplex-card" | "hyperbolic" => p.n = Some(size),
            "block" | "cross" => p.k = vec![size; d.unwrap_or(2)],
            _ => p.k = vec![size],
        }
        p
    }
}

fn parse_list<T>(items: &[String], default: &[T]) -> CliResult<Vec<T>>
where
    T: Clone + std::str::FromStr,
    T::Err: std::fmt::Display,
{
    if items.is_empty() {
        return Ok(default.to_vec());
    }
    items
        .iter()
        .map(|s| s.parse::<T>().map_err(|e| CliError::Usage(e.to_string())))
        .collect()
}

/// Every row in input order, then `# mape_percent=…` when some heuristic
/// row can be compared against an oracle row.
pub fn run_bench(cfg: &BenchConfig, out: &mut dyn Write) -> CliResult<()> {
    let family = cfg.family.clone().unwrap_or_else(|| "simplex-card".into());
    let plans: Vec<Plan> = parse_list(&cfg.plans, &[Plan::A, Plan::B, Plan::C])?;
    let algos: Vec<Algorithm> =
        parse_list(&cfg.algos, &[Algorithm::Exhaustive, Algorithm::TwoStep])?;

    let mut wtr = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(Vec::new());
    wtr.write_record([
        "set_id",
        "d",
        "card_lambda",
        "card_mirror",
        "plan",
        "algo",
        "n",
        "elapsed_ms",
        "error",
    ])?;
    let mut errors = Vec::new();
    for &size in &cfg.sizes {
        let set_id = format!("{family}-{size}");
        let set = build_family(&family, &cfg.params(&family, size))?;
        let card_mirror = set.mirror_cardinality();
        for &plan in &plans {
            let mut oracle = None;
            let mut heuristic = Vec::new();
            for &algo in &algos {
                let opts = SearchOptions {
                    plan,
                    algo,
                    odd_only: cfg.odd_only && algo == Algorithm::TwoStep,
                    n_min: None,
                    n_max: None,
                };
                let (n, elapsed_ms, error) = match run_search(set.dim(), set.members(), &opts) {
                    Ok(r) => (Some(r.n), format!("{:.3}", r.elapsed_ms), String::new()),
                    Err(e) => (None, String::new(), e.to_string()),
                };
                match (algo, n) {
                    (Algorithm::Exhaustive, Some(n)) => oracle = Some(n),
                    (_, Some(n)) => heuristic.push(n),
                    _ => {}
                }
                wtr.serialize(BenchRecord {
                    set_id: set_id.clone(),
                    d: set.dim(),
                    card_lambda: set.len(),
                    card_mirror,
                    plan: plan.to_string(),
                    algo: algo.to_string(),
                    n,
                    elapsed_ms,
                    error,
                })?;
            }
            if let Some(best) = oracle {
                errors.extend(
                    heuristic
                        .iter()
                        .map(|&n| (n as f64 - best as f64).abs() / best as f64),
                );
            }
        }
    }
    let mut bytes = wtr
        .into_inner()
        .map_err(|e| CliError::io("csv", e.into_error()))?;
    if !errors.is_empty() {
        let mape = 100.0 * errors.iter().sum::<f64>() / errors.len() as f64;
        bytes.extend(
            format!("# mape_percent={mape:.2} compared_rows={}\n", errors.len()).into_bytes(),
        );
    }
    out.write_all(&bytes).map_err(|e| CliError::io("output", e))
}

pub fn bench(config: Option<&Path>, flags: BenchConfig, out: Option<&Path>) -> CliResult<()> {
    let base = match config {
        Some(path) => BenchConfig::from_toml(&read(path)?)?,
        None => BenchConfig::default(),
    };
    let cfg = base.merge(flags);
    match out {
        Some(path) => {
            let mut file = std::fs::File::create(path)
                .map_err(|e| CliError::io(path.display().to_string(), e))?;
            run_bench(&cfg, &mut file)
        }
        None => run_bench(&cfg, &mut std::io::stdout().lock()),
    }
}
