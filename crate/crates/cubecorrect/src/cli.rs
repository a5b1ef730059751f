//! Command-line front end.
//!
//! Every subcommand writes one JSON document (or a CSV table for
//! experiments) that echoes the resolved configuration. Outputs are
//! byte-identical for identical arguments, except the timings of `bench`.
//! Exit codes: 0 on success, 2 on invalid input, 3 when a measured result
//! misses its threshold.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::Zero;
use serde_json::{json, Value};

use crate::correct::{
    const_torsion_correct, unique_local_correct_with, unique_query_count, CorrectorConfig, SubConstantCorrector, TorsionCorrector,
};
use crate::groups::GroupSpec;
use crate::interpolate::build_interpolating_set;
use crate::lab::{self, AntiFamily, ExperimentReport, ListGenerator, SliceSet};
use crate::listdecode::{agreement, local_list_correct, stitched_oracle, ListConfig};
use crate::oracle::{Instance, Oracle};
use crate::poly::{CubePoint, MultilinearPoly, RandomModel};
use crate::seeding::{derive_rng, rng_from_seed, run_trials, salt};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_THRESHOLD: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "cubecorrect", version, about = "Local correction of low-degree polynomials over Abelian groups")]
#[command(args_override_self = true)]
pub struct Cli {
    /// JSON object of flag values; its entries override flags given on the
    /// command line.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Write the result here instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Unique local correction of a corrupted instance.
    Correct(CorrectArgs),
    /// Constant-query correction for torsion groups.
    CorrectTorsion(TorsionArgs),
    /// Local list correction of an instance.
    ListCorrect(ListArgs),
    /// Build a weight-balanced interpolating set.
    BuildSet(SetArgs),
    /// Check soundness and interpolation identities of a set.
    VerifySet(VerifyArgs),
    /// Johnson graph spectrum from the closed form and numerically.
    Eigen(EigenArgs),
    /// Run one experiment and emit its report.
    Experiment(ExperimentArgs),
    /// Time the correctors on random instances.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
pub struct CorrectArgs {
    /// Instance file (see the README for the format).
    #[arg(long)]
    pub instance: PathBuf,
    /// Correct at this point only.
    #[arg(long)]
    pub point: Option<String>,
    /// Number of uniformly random points to correct.
    #[arg(long, default_value_t = 20)]
    pub points: usize,
    /// Error margin: the corrector targets rate 1/2^(d+1) - epsilon.
    #[arg(long, default_value_t = 0.05)]
    pub epsilon: f64,
    /// Error-reduction stage dimensions, innermost first.
    #[arg(long, value_delimiter = ',')]
    pub er_stages: Option<Vec<usize>>,
    /// Skip error reduction and query the interpolating set directly.
    #[arg(long)]
    pub no_error_reduction: bool,
    #[arg(long, default_value_t = 4)]
    pub a_const: u32,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Exit with code 3 if the success rate is below this.
    #[arg(long, default_value_t = 0.75)]
    pub min_success: f64,
}

#[derive(Debug, Args)]
pub struct TorsionArgs {
    #[arg(long)]
    pub instance: PathBuf,
    /// Exponent M of the group; defaults to the group's exponent.
    #[arg(long)]
    pub exponent: Option<u64>,
    #[arg(long, default_value_t = 20)]
    pub points: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 0.75)]
    pub min_success: f64,
}

#[derive(Debug, Args)]
pub struct ListArgs {
    #[arg(long)]
    pub instance: PathBuf,
    /// Second polynomial stitched with the instance polynomial, replacing
    /// the instance corruption.
    #[arg(long)]
    pub stitch: Option<String>,
    /// Margin below the list-decoding radius 1/2^d, as a fraction.
    #[arg(long, default_value = "1/5")]
    pub epsilon: Ratio<u64>,
    /// Dimension of the advice subcubes.
    #[arg(long, default_value_t = 4)]
    pub k: usize,
    /// Number of advice iterations.
    #[arg(long, default_value_t = 4)]
    pub ell: usize,
    #[arg(long, default_value_t = 64)]
    pub list_cap: usize,
    #[arg(long, value_delimiter = ',')]
    pub er_stages: Vec<usize>,
    /// Random inputs on which each output oracle is compared with the
    /// planted polynomials.
    #[arg(long, default_value_t = 50)]
    pub test_points: usize,
    /// Required agreement for a planted polynomial to count as recovered.
    #[arg(long, default_value = "9/10")]
    pub min_agreement: Ratio<u64>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct SetArgs {
    #[arg(long)]
    pub d: usize,
    #[arg(long)]
    pub k: usize,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub d: usize,
    #[arg(long)]
    pub k: usize,
    /// Coefficient group of the random polynomials.
    #[arg(long, default_value = "Z%2")]
    pub group: GroupSpec,
    /// Random nonzero polynomials checked for a non-root on the set.
    #[arg(long, default_value_t = 1000)]
    pub trials: usize,
    /// Random targets for the interpolation identity.
    #[arg(long, default_value_t = 5)]
    pub targets: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct EigenArgs {
    #[arg(long)]
    pub twok: usize,
    /// Degree parameter; all d in 0..=k when omitted.
    #[arg(long)]
    pub d: Option<usize>,
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ExperimentName {
    SliceSampling,
    SplitPair,
    Anticoncentration,
    TailBound,
    ListSize,
    Collision,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct ExperimentArgs {
    pub name: ExperimentName,
    /// Parameter grid (k, s or t depending on the experiment).
    #[arg(long, value_delimiter = ',')]
    pub grid: Option<Vec<usize>>,
    #[arg(long)]
    pub trials: Option<usize>,
    #[arg(long, default_value_t = 1)]
    pub d: usize,
    #[arg(long, default_value_t = 0.1)]
    pub eta: f64,
    #[arg(long, default_value_t = 10.0)]
    pub slack: f64,
    #[arg(long, default_value_t = 0.5)]
    pub density: f64,
    /// Uniform inputs per polynomial in the anti-concentration experiment.
    #[arg(long, default_value_t = 200)]
    pub points: usize,
    /// Use the structured family in the anti-concentration experiment.
    #[arg(long)]
    pub structured: bool,
    #[arg(long, default_value = "Z%2")]
    pub group: GroupSpec,
    /// Cube dimension for list-size and collision experiments.
    #[arg(long)]
    pub n: Option<usize>,
    /// Margins for the list-size experiment.
    #[arg(long, value_delimiter = ',', default_value = "1/10,1/4")]
    pub eps: Vec<Ratio<u64>>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, default_value_t = 32)]
    pub n: usize,
    #[arg(long, default_value_t = 1)]
    pub d: usize,
    #[arg(long, default_value_t = 10)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

/// Failure with its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

fn invalid(e: impl std::fmt::Display) -> Failure {
    Failure { code: EXIT_INVALID, message: e.to_string() }
}

/// A finished command: its document and whether thresholds were met.
struct Outcome {
    text: String,
    pass: bool,
}

fn document(v: Value, pass: bool) -> Outcome {
    Outcome { text: serde_json::to_string_pretty(&v).expect("json") + "\n", pass }
}

/// Appends `--key value` pairs from a JSON config file so that they win
/// over earlier flags.
fn expand_config(args: Vec<OsString>) -> Result<Vec<OsString>, Failure> {
    let pos = args.iter().position(|a| a == "--config");
    let path = match pos.and_then(|p| args.get(p + 1)) {
        Some(p) => PathBuf::from(p),
        None => return Ok(args),
    };
    let text = std::fs::read_to_string(&path).map_err(|e| invalid(format!("{}: {e}", path.display())))?;
    let map: serde_json::Map<String, Value> = serde_json::from_str(&text).map_err(|e| invalid(format!("{}: {e}", path.display())))?;
    let mut out = args;
    for (key, value) in map {
        let flag = format!("--{}", key.replace('_', "-"));
        match value {
            Value::Bool(true) => out.push(flag.into()),
            Value::Bool(false) | Value::Null => {}
            Value::String(s) => out.extend([flag.into(), s.into()]),
            Value::Array(items) => {
                let joined: Vec<String> = items.iter().map(|v| v.as_str().map_or_else(|| v.to_string(), str::to_string)).collect();
                out.extend([flag.into(), joined.join(",").into()]);
            }
            other => out.extend([flag.into(), other.to_string().into()]),
        }
    }
    Ok(out)
}

/// Parses `args` (including the program name), runs the command and writes
/// its result. Returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString>,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let args = match expand_config(args) {
        Ok(a) => a,
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            return f.code;
        }
    };
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() { write!(stderr, "{rendered}") } else { write!(stdout, "{rendered}") };
            return code;
        }
    };
    let result = execute(&cli.command);
    match result {
        Ok(outcome) => {
            let written = match &cli.output {
                Some(path) => std::fs::write(path, &outcome.text).map_err(|e| e.to_string()),
                None => stdout.write_all(outcome.text.as_bytes()).map_err(|e| e.to_string()),
            };
            if let Err(e) = written {
                let _ = writeln!(stderr, "error: {e}");
                return EXIT_INVALID;
            }
            if outcome.pass {
                EXIT_OK
            } else {
                let _ = writeln!(stderr, "threshold not met");
                EXIT_THRESHOLD
            }
        }
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}

fn execute(cmd: &Command) -> Result<Outcome, Failure> {
    match cmd {
        Command::Correct(a) => cmd_correct(a),
        Command::CorrectTorsion(a) => cmd_torsion(a),
        Command::ListCorrect(a) => cmd_list(a),
        Command::BuildSet(a) => cmd_build_set(a),
        Command::VerifySet(a) => cmd_verify_set(a),
        Command::Eigen(a) => cmd_eigen(a),
        Command::Experiment(a) => cmd_experiment(a),
        Command::Bench(a) => cmd_bench(a),
    }
}

fn load_instance(path: &PathBuf) -> Result<Instance, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| invalid(format!("{}: {e}", path.display())))?;
    Instance::parse(&text).map_err(|e| invalid(format!("{}: {e}", path.display())))
}

fn test_points(n: usize, fixed: &Option<String>, count: usize, seed: u64) -> Result<Vec<CubePoint>, Failure> {
    match fixed {
        Some(s) => {
            let p = CubePoint::parse(s).map_err(invalid)?;
            if p.len() != n {
                return Err(invalid(format!("point has {} bits, instance has n = {n}", p.len())));
            }
            Ok(vec![p])
        }
        None => {
            let mut rng = derive_rng(seed, salt::TRIAL, u128::MAX);
            Ok((0..count).map(|_| CubePoint::random(n, &mut rng)).collect())
        }
    }
}

fn cmd_correct(a: &CorrectArgs) -> Result<Outcome, Failure> {
    let inst = load_instance(&a.instance)?;
    let f = inst.oracle().map_err(invalid)?;
    let (n, d) = (inst.poly.n(), inst.poly.degree_bound());
    let mut cfg = CorrectorConfig::new(n, d, a.epsilon, a.seed).map_err(invalid)?;
    cfg.a_const = a.a_const;
    if let Some(stages) = &a.er_stages {
        cfg.er_stages = stages.clone();
    }
    if a.no_error_reduction {
        cfg.er_stages.clear();
    }
    cfg.validate().map_err(invalid)?;
    let corrector = SubConstantCorrector::new(n, d, cfg.a_const).map_err(invalid)?;
    let points = test_points(n, &a.point, a.points, a.seed)?;
    let results = run_trials(points.len(), a.seed, |i, _| {
        let x = &points[i];
        unique_local_correct_with(&corrector, &f, x, &cfg).map(|c| (c, inst.poly.eval_bits(x.bits())))
    })
    .into_iter()
    .collect::<Result<Vec<_>, _>>()
    .map_err(invalid)?;
    let successes = results.iter().filter(|(c, e)| c.value == *e).count();
    let rate = successes as f64 / results.len().max(1) as f64;
    let rows: Vec<Value> = points
        .iter()
        .zip(&results)
        .map(|(x, (c, e))| json!({ "point": x, "value": c.value.to_string(), "expected": e.to_string(), "correct": c.value == *e, "queries": c.queries }))
        .collect();
    let doc = json!({
        "command": "correct",
        "config": cfg,
        "instance": inst.to_string(),
        "hash_dimension": corrector.set().k(),
        "set_size": corrector.queries(),
        "queries_per_point": unique_query_count(corrector.queries(), &cfg),
        "results": rows,
        "success_rate": rate,
        "min_success": a.min_success,
    });
    Ok(document(doc, rate >= a.min_success))
}

fn cmd_torsion(a: &TorsionArgs) -> Result<Outcome, Failure> {
    let inst = load_instance(&a.instance)?;
    let f = inst.oracle().map_err(invalid)?;
    let spec = inst.poly.spec();
    let exponent = match a.exponent.or_else(|| spec.exponent()) {
        Some(m) => m,
        None => return Err(invalid(format!("group {spec} is not a torsion group"))),
    };
    let d = inst.poly.degree_bound();
    let corrector = TorsionCorrector::new(d, exponent).map_err(invalid)?;
    let points = test_points(inst.poly.n(), &None, a.points, a.seed)?;
    let results = run_trials(points.len(), a.seed, |i, s| {
        let x = &points[i];
        const_torsion_correct(&f, x, d, exponent, s).map(|c| (c, inst.poly.eval_bits(x.bits())))
    })
    .into_iter()
    .collect::<Result<Vec<_>, _>>()
    .map_err(invalid)?;
    let successes = results.iter().filter(|(c, e)| c.value == *e).count();
    let rate = successes as f64 / results.len().max(1) as f64;
    let coeffs = corrector.coefficients();
    let rows: Vec<Value> = points
        .iter()
        .zip(&results)
        .map(|(x, (c, e))| json!({ "point": x, "value": c.value.to_string(), "expected": e.to_string(), "correct": c.value == *e, "queries": c.queries }))
        .collect();
    let doc = json!({
        "command": "correct-torsion",
        "config": { "d": d, "exponent": exponent, "points": a.points, "seed": a.seed, "min_success": a.min_success },
        "instance": inst.to_string(),
        "slice_k": coeffs.k,
        "factors": coeffs.factors,
        "support_size": corrector.support().len(),
        "results": rows,
        "success_rate": rate,
    });
    Ok(document(doc, rate >= a.min_success))
}

fn cmd_list(a: &ListArgs) -> Result<Outcome, Failure> {
    let inst = load_instance(&a.instance)?;
    let (n, d, spec) = (inst.poly.n(), inst.poly.degree_bound(), inst.poly.spec().clone());
    let mut planted = vec![inst.poly.clone()];
    if let Some(s) = &a.stitch {
        planted.push(MultilinearPoly::parse_terms(s, n, d, &spec).map_err(invalid)?);
    }
    let corrupted = inst.oracle().map_err(invalid)?;
    let stitched = stitched_oracle(&planted, inst.seed).map_err(invalid)?;
    let f: &dyn Oracle = if a.stitch.is_some() { &stitched } else { &corrupted };
    let mut cfg = ListConfig::new(d, a.epsilon, a.k, a.ell, a.seed);
    cfg.list_cap = a.list_cap;
    cfg.er_stages = a.er_stages.clone();
    if !spec.is_finite() {
        cfg.planted = Some(planted.clone());
    }
    let result = local_list_correct(f, &cfg).map_err(invalid)?;
    let inputs = test_points(n, &None, a.test_points, a.seed)?;
    let mut oracles = Vec::new();
    let mut best = vec![Ratio::<u64>::zero(); planted.len()];
    for (i, o) in result.oracles.iter().enumerate() {
        let scores: Vec<Ratio<u64>> = planted.iter().map(|p| agreement(o, p, &inputs, Ratio::zero())).collect();
        for (b, s) in best.iter_mut().zip(&scores) {
            *b = (*b).max(*s);
        }
        oracles.push(json!({
            "index": i,
            "advice": o.triple(),
            "agreement": scores.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
        }));
    }
    let recovered: Vec<bool> = best.iter().map(|b| *b >= a.min_agreement).collect();
    let doc = json!({
        "command": "list-correct",
        "config": cfg,
        "instance": inst.to_string(),
        "planted": planted.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
        "advice_queries": result.advice.queries,
        "list_sizes": result.advice.list_sizes,
        "oracles": oracles,
        "best_agreement": best.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
        "recovered": recovered,
    });
    Ok(document(doc, recovered.iter().all(|&r| r)))
}

fn cmd_build_set(a: &SetArgs) -> Result<Outcome, Failure> {
    let set = build_interpolating_set(a.d, a.k).map_err(invalid)?;
    let balance = set.balance();
    let doc = json!({
        "command": "build-set",
        "config": { "d": a.d, "k": a.k },
        "size": set.len(),
        "size_bound": set.size_bound().to_string(),
        "block_size": set.block_size(),
        "blocks": set.blocks(),
        "weights": set.weights(),
        "total_weight": set.total_weight(),
        "balance": balance,
        "points": set.points(),
    });
    Ok(document(doc, balance.pass))
}

fn cmd_verify_set(a: &VerifyArgs) -> Result<Outcome, Failure> {
    let set = build_interpolating_set(a.d, a.k).map_err(invalid)?;
    let mut rng = rng_from_seed(a.seed);
    let mut vanishing = 0usize;
    let mut checked = 0usize;
    while checked < a.trials {
        let q = MultilinearPoly::random(a.k, a.d, &a.group, RandomModel::UniformDense, &mut rng).map_err(invalid)?;
        if q.is_zero() {
            continue;
        }
        checked += 1;
        if set.points().iter().all(|y| q.eval_bits(y.bits()).is_zero()) {
            vanishing += 1;
        }
    }
    let mut identity_failures = 0usize;
    let mut interp = set.interpolator();
    for _ in 0..a.targets {
        let b = CubePoint::random(a.k, &mut rng);
        let c = interp.coefficients(&b).map_err(invalid)?;
        let q = MultilinearPoly::random(a.k, a.d, &a.group, RandomModel::UniformDense, &mut rng).map_err(invalid)?;
        let values: Vec<_> = set.points().iter().map(|y| q.eval_bits(y.bits())).collect();
        if !set.moment_identity_holds(&b, &c) || set.combine(&c, &values) != q.eval_bits(b.bits()) {
            identity_failures += 1;
        }
    }
    let balance = set.balance();
    let pass = vanishing == 0 && identity_failures == 0 && balance.pass;
    let doc = json!({
        "command": "verify-set",
        "config": { "d": a.d, "k": a.k, "group": a.group, "trials": a.trials, "targets": a.targets, "seed": a.seed },
        "size": set.len(),
        "balance": balance,
        "polynomials_vanishing_on_set": vanishing,
        "identity_failures": identity_failures,
        "pass": pass,
    });
    Ok(document(doc, pass))
}

fn cmd_eigen(a: &EigenArgs) -> Result<Outcome, Failure> {
    if a.twok % 2 == 1 || a.twok == 0 {
        return Err(invalid(format!("2k must be even and positive, got {}", a.twok)));
    }
    let ds: Vec<usize> = match a.d {
        Some(d) => vec![d],
        None => (0..=a.twok / 2).collect(),
    };
    let mut tables = Vec::new();
    let mut pass = true;
    for d in ds {
        let spectrum = lab::johnson_formula_spectrum(a.twok, d).map_err(invalid)?;
        let agree = lab::johnson_spectra_agree(a.twok, d, a.tol).map_err(invalid)?;
        pass &= agree;
        let rows: Vec<Value> = spectrum
            .iter()
            .enumerate()
            .map(|(s, (v, m))| json!({ "s": s, "eigenvalue": v.to_string(), "multiplicity": m.to_string() }))
            .collect();
        tables.push(json!({ "d": d, "spectrum": rows, "numeric_agrees": agree }));
    }
    let doc = json!({ "command": "eigen", "config": { "twok": a.twok, "d": a.d, "tol": a.tol }, "tables": tables });
    Ok(document(doc, pass))
}

fn cmd_experiment(a: &ExperimentArgs) -> Result<Outcome, Failure> {
    let grid = |default: &[usize]| a.grid.clone().unwrap_or_else(|| default.to_vec());
    let trials = |default: usize| a.trials.unwrap_or(default);
    let report: ExperimentReport = match a.name {
        ExperimentName::SliceSampling => {
            lab::slice_sampling_experiment(&grid(&[6, 10, 14]), SliceSet::Random(a.density), trials(200), a.seed)
        }
        ExperimentName::SplitPair => lab::slice_sampling_experiment(&grid(&[6, 10, 14]), SliceSet::SplitPair, trials(2000), a.seed),
        ExperimentName::Anticoncentration => {
            let family = if a.structured { AntiFamily::Structured } else { AntiFamily::Random };
            lab::anticoncentration_experiment(a.d, &grid(&[25, 100, 400]), family, a.slack, trials(50), a.points, a.seed)
        }
        ExperimentName::TailBound => lab::tail_bound_experiment(a.d, &grid(&[20, 40, 80]), a.eta, &a.group, 1, trials(4000), a.seed),
        ExperimentName::ListSize => {
            let gens = [ListGenerator::Polynomial, ListGenerator::Stitched, ListGenerator::Majority, ListGenerator::RandomTable];
            let gens = if a.group == GroupSpec::cyclic(2).expect("valid") { &gens[..] } else { &[gens[0], gens[1], gens[3]][..] };
            lab::list_size_experiment(a.n.unwrap_or(4 * a.d), a.d, &a.group, &a.eps, gens, trials(20), 64, a.seed)
        }
        ExperimentName::Collision => {
            let eps = a.eps.first().copied().unwrap_or(Ratio::new(1, 5));
            lab::collision_experiment(a.n.unwrap_or(16), a.d, &grid(&[2, 3, 4]), eps, trials(400), a.seed)
        }
    }
    .map_err(invalid)?;
    let text = match a.format {
        Format::Json => report.to_json() + "\n",
        Format::Csv => report.to_csv().map_err(invalid)?,
    };
    Ok(Outcome { text, pass: report.pass })
}

fn cmd_bench(a: &BenchArgs) -> Result<Outcome, Failure> {
    let spec = GroupSpec::Integers;
    let mut rng = rng_from_seed(a.seed);
    let p = MultilinearPoly::random(a.n, a.d, &spec, RandomModel::Sparsity(a.n.min(64)), &mut rng).map_err(invalid)?;
    let f = crate::oracle::CorruptedOracle::new(p.clone(), crate::oracle::CorruptionSpec::none(&spec), a.seed).map_err(invalid)?;
    let start = Instant::now();
    let corrector = SubConstantCorrector::new(a.n, a.d, 4).map_err(invalid)?;
    let setup = start.elapsed();
    let cfg = CorrectorConfig { d: a.d, a_const: 4, epsilon: 0.0, er_stages: Vec::new(), seed: a.seed };
    let points = test_points(a.n, &None, a.trials, a.seed)?;
    let start = Instant::now();
    let mut queries = 0;
    for x in &points {
        queries = unique_local_correct_with(&corrector, &f, x, &cfg).map_err(invalid)?.queries;
    }
    let per_point = start.elapsed() / a.trials.max(1) as u32;
    let max_coeff_bits = corrector.coefficients().iter().map(BigInt::bits).max().unwrap_or(0);
    let doc = json!({
        "command": "bench",
        "config": { "n": a.n, "d": a.d, "trials": a.trials, "seed": a.seed },
        "set_size": corrector.queries(),
        "queries_per_point": queries,
        "max_coefficient_bits": max_coeff_bits,
        "setup_micros": setup.as_micros() as u64,
        "micros_per_point": per_point.as_micros() as u64,
    });
    Ok(document(doc, true))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(std::iter::once("cubecorrect").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn help_exits_zero() {
        let (code, out, _) = run_capture(&["correct", "--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("Usage"));
    }

    #[test]
    fn unknown_flag_is_invalid() {
        assert_eq!(run_capture(&["eigen", "--bogus"]).0, EXIT_INVALID);
        assert_eq!(run_capture(&["build-set", "--d", "1", "--k", "25"]).0, EXIT_INVALID);
    }

    #[test]
    fn eigen_octahedron() {
        let (code, out, _) = run_capture(&["eigen", "--twok", "4", "--d", "1"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        let spec = &v["tables"][0]["spectrum"];
        let pairs: Vec<(String, String)> = (0..3)
            .map(|s| (spec[s]["eigenvalue"].as_str().unwrap().to_string(), spec[s]["multiplicity"].as_str().unwrap().to_string()))
            .collect();
        assert_eq!(pairs, [("4", "1"), ("0", "3"), ("-2", "2")].map(|(a, b)| (a.to_string(), b.to_string())));
    }

    #[test]
    fn build_set_is_byte_stable() {
        let (code, a, _) = run_capture(&["build-set", "--d", "1", "--k", "20"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&a).unwrap();
        assert_eq!(v["size"], 21);
        assert_eq!(v["balance"]["pass"], true);
        assert_eq!(a, run_capture(&["build-set", "--d", "1", "--k", "20"]).1);
    }

    #[test]
    fn config_file_overrides_flags() {
        let dir = std::env::temp_dir().join(format!("cubecorrect-cli-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("cfg.json");
        std::fs::write(&path, r#"{"d": 2}"#).unwrap();
        let (code, out, _) = run_capture(&["eigen", "--twok", "4", "--d", "1", "--config", path.to_str().unwrap()]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["config"]["d"], 2);
    }
}
