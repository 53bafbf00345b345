use std::fs;
use std::path::{Path, PathBuf};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rank1_lower::admissibility::find_violation;
use rank1_lower::cubature::{
    reconstruct, ChebSeries, Rank1Lattice, ReconstructionMode, EXACTNESS_TOL,
};
use rank1_lower::format::{parse_index_list, parse_lattice, write_lattice, write_lower_set};
use rank1_lower::index_sets::{
    make_block, make_cross, make_hyperbolic, make_simplex, make_simplex_by_cardinality,
    make_simplex_iso, mirror_of, parse_rational, Simplex, Weights,
};
use rank1_lower::search::{
    cbc_search, exhaustive_search, lower_bound, two_step_search, upper_bound, Algorithm,
    SearchResult,
};
use rank1_lower::{check_direct, LatticeConfig, LowerSet, MultiIndex, Plan};

use crate::error::{CliError, CliResult};
use crate::record::BenchRecord;

pub fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| CliError::io(path.display().to_string(), e))
}

pub fn write(path: &Path, text: &str) -> CliResult<()> {
    fs::write(path, text).map_err(|e| CliError::io(path.display().to_string(), e))
}

/// Writes to `out` when given, otherwise to standard output.
pub fn emit(out: Option<&Path>, text: &str) -> CliResult<()> {
    match out {
        Some(path) => write(path, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// File stem used as the set identifier in CSV rows.
pub fn set_id(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "set".into())
}

#[derive(Clone, Debug, Default)]
pub struct FamilyParams {
    pub k: Vec<u32>,
    pub d: Option<usize>,
    pub n: Option<u32>,
    pub w: Option<String>,
    pub u: Option<String>,
}

fn need<T: Clone>(value: &Option<T>, flag: &str, family: &str) -> CliResult<T> {
    value
        .clone()
        .ok_or_else(|| CliError::Usage(format!("{family} needs --{flag}")))
}

/// Builds one of the named set families.
pub fn build_family(family: &str, p: &FamilyParams) -> CliResult<LowerSet> {
    let k_index = || {
        if p.k.is_empty() {
            Err(CliError::Usage(format!("{family} needs --k")))
        } else {
            Ok(MultiIndex::new(p.k.clone()))
        }
    };
    let set = match family {
        "block" => make_block(&k_index()?)?,
        "cross" => make_cross(&k_index()?)?,
        "simplex" => match (&p.w, &p.u) {
            (Some(w), Some(u)) => {
                make_simplex(&Simplex::new(w.parse::<Weights>()?, parse_rational(u)?)?)?
            }
            (None, None) => {
                let d = need(&p.d, "d", family)?;
                let [k] = p.k[..] else {
                    return Err(CliError::Usage(
                        "isotropic simplex needs --d and a single --k".into(),
                    ));
                };
                make_simplex_iso(d, k)?
            }
            _ => {
                return Err(CliError::Usage(
                    "weighted simplex needs both --w and --u".into(),
                ))
            }
        },
        "simplex-card" => {
            let w: Weights = need(&p.w, "w", family)?.parse()?;
            make_simplex_by_cardinality(&w, need(&p.n, "n", family)? as usize)?
        }
        "hyperbolic" => make_hyperbolic(need(&p.d, "d", family)?, need(&p.n, "n", family)?)?,
        other => {
            return Err(CliError::Usage(format!(
                "unknown family `{other}` (block, cross, simplex, simplex-card, hyperbolic)"
            )))
        }
    };
    Ok(set)
}

pub fn gen_set(family: &str, params: &FamilyParams, out: Option<&Path>) -> CliResult<()> {
    emit(out, &write_lower_set(&build_family(family, params)?))
}

/// Search options shared by `search` and `bench`.
#[derive(Clone, Copy, Debug)]
pub struct SearchOptions {
    pub plan: Plan,
    pub algo: Algorithm,
    pub odd_only: bool,
    pub n_min: Option<u64>,
    pub n_max: Option<u64>,
}

/// Runs one search over any finite set; the heuristics require it to be lower.
pub fn run_search(
    dim: usize,
    members: &[MultiIndex],
    opts: &SearchOptions,
) -> CliResult<SearchResult> {
    if opts.odd_only && opts.algo != Algorithm::TwoStep {
        return Err(CliError::Usage(
            "--odd-only applies to two-step only".into(),
        ));
    }
    let lo = opts
        .n_min
        .unwrap_or_else(|| lower_bound(members, opts.plan));
    let result = match opts.algo {
        Algorithm::Exhaustive => {
            let hi = match opts.n_max {
                Some(hi) => hi,
                None => upper_bound(&LowerSet::closure(dim, members)?, opts.plan)?.max(lo),
            };
            if hi < lo {
                return Err(rank1_lower::Error::NotFound { lo, hi }.into());
            }
            exhaustive_search(members, opts.plan, lo, hi)?
        }
        Algorithm::Cbc | Algorithm::TwoStep => {
            let set = LowerSet::new(dim, members.iter().cloned())?;
            let r = if opts.algo == Algorithm::Cbc {
                cbc_search(&set, opts.plan, lo)?
            } else {
                two_step_search(&set, opts.plan, lo, opts.odd_only)?
            };
            if let Some(hi) = opts.n_max {
                if r.n > hi {
                    return Err(rank1_lower::Error::NotFound { lo, hi }.into());
                }
            }
            r
        }
    };
    Ok(result)
}

pub fn search(set_path: &Path, opts: &SearchOptions, out: Option<&Path>) -> CliResult<()> {
    let (dim, members) = parse_index_list(&read(set_path)?)?;
    if members.is_empty() {
        return Err(CliError::Usage("empty index set".into()));
    }
    let result = run_search(dim, &members, opts)?;
    let lattice = write_lattice(&result.config());
    if let Some(path) = out {
        write(path, &lattice)?;
    }
    print!("{lattice}");
    let record = BenchRecord {
        set_id: set_id(set_path),
        d: dim,
        card_lambda: members.len(),
        card_mirror: mirror_of(&members)?.len(),
        plan: opts.plan.to_string(),
        algo: result.algorithm.to_string(),
        n: Some(result.n),
        elapsed_ms: format!("{:.3}", result.elapsed_ms),
        error: String::new(),
    };
    let mut wtr = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(std::io::stdout());
    wtr.serialize(record)?;
    wtr.flush().map_err(|e| CliError::io("stdout", e))?;
    Ok(())
}

fn load_pair(
    set_path: &Path,
    lattice_path: &Path,
) -> CliResult<(usize, Vec<MultiIndex>, LatticeConfig)> {
    let (dim, members) = parse_index_list(&read(set_path)?)?;
    let cfg = parse_lattice(&read(lattice_path)?)?;
    if cfg.dim() != dim {
        return Err(rank1_lower::Error::DimensionMismatch {
            expected: dim,
            found: cfg.dim(),
        }
        .into());
    }
    Ok((dim, members, cfg))
}

pub fn verify(set_path: &Path, lattice_path: &Path, plan: Plan, verbose: bool) -> CliResult<()> {
    let (_, members, cfg) = load_pair(set_path, lattice_path)?;
    match find_violation(&members, &cfg, plan)? {
        None => {
            println!("admissible: ({cfg}) under plan {plan}");
            Ok(())
        }
        Some(v) => {
            let mut msg = format!("not admissible: ({cfg}) under plan {plan}");
            if verbose {
                msg.push_str(&format!("\nfirst collision: {v}"));
            }
            Err(CliError::Rejected(msg))
        }
    }
}

pub fn bounds(set_path: &Path, plan: Plan, oracle: bool) -> CliResult<()> {
    let (dim, members) = parse_index_list(&read(set_path)?)?;
    if members.is_empty() {
        return Err(CliError::Usage("empty index set".into()));
    }
    let lo = lower_bound(&members, plan);
    let hi = upper_bound(&LowerSet::closure(dim, &members)?, plan)?;
    println!("l* = {lo}");
    println!("p* = {hi}");
    if oracle {
        let r = exhaustive_search(&members, plan, lo, hi.max(lo))?;
        println!("n* = {}", r.n);
    }
    Ok(())
}

pub fn reconstruct_demo(
    set_path: &Path,
    lattice_path: &Path,
    mode: ReconstructionMode,
    seed: u64,
) -> CliResult<()> {
    let (dim, members, cfg) = load_pair(set_path, lattice_path)?;
    let plan = mode.plan();
    if !check_direct(&members, &cfg, plan)? {
        return Err(CliError::Rejected(format!(
            "({cfg}) is not plan {plan} admissible; mode {mode} refused"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let truth = ChebSeries::new(
        dim,
        members
            .iter()
            .map(|k| (k.clone(), rng.gen_range(-1.0..=1.0))),
    )?;
    let lattice = Rank1Lattice::new(cfg);
    let got = reconstruct(
        &lattice,
        |x| truth.eval(x).unwrap_or(f64::NAN),
        &members,
        mode,
    )?;
    let err = got.max_abs_diff(&truth);
    println!("coefficients: {}", members.len());
    println!("max |error| = {err:.3e}");
    if err <= EXACTNESS_TOL {
        Ok(())
    } else {
        Err(CliError::Rejected(format!(
            "error {err:.3e} exceeds {EXACTNESS_TOL:e}"
        )))
    }
}

/// Resolves `-` as standard output.
pub fn out_path(p: &Option<PathBuf>) -> Option<&Path> {
    p.as_deref().filter(|p| p.as_os_str() != "-")
}
