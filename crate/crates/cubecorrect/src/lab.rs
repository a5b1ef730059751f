//! Experiments on the combinatorial lemmas behind the correctors.
//!
//! Every experiment returns an [`ExperimentReport`] that is a pure function
//! of its parameters and seed. Asymptotic statements are checked as trends
//! or against explicit slack constants recorded in the report.

use nalgebra::{DMatrix, SymmetricEigen};
use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{ToPrimitive, Zero};
use rand::Rng;
use serde::Serialize;
use serde_json::json;
use thiserror::Error;

use crate::correct::binomial_upper_tail;
use crate::groups::{GroupSpec, GroupValue};
use crate::interpolate::binomial;
use crate::listdecode::{brute_force_list_decode, psi_evaluate, stitched_oracle, AdviceTriple, ListConfig, ListError};
use crate::poly::{for_each_weight, random_disjoint_lm_batch, CubePoint, Monomial, MultilinearPoly, PolyError, RandomModel};
use crate::seeding::{derive_rng, rng_from_seed, run_trials, salt, split_seed};
use crate::subcube::{random_permutation, random_two_to_one, SubcubeEmbedding, SubcubeError};

#[derive(Debug, Error)]
pub enum LabError {
    #[error("parameter out of range: {0}")]
    Range(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Subcube(#[from] SubcubeError),
    #[error(transparent)]
    List(#[from] ListError),
    #[error("csv output failed: {0}")]
    Csv(String),
}

/// Outcome of one experiment: a table of measurements plus a verdict.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExperimentReport {
    pub name: String,
    pub parameters: serde_json::Value,
    pub seed: u64,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<f64>>,
    pub notes: Vec<String>,
    pub pass: bool,
}

impl ExperimentReport {
    fn new(name: &str, parameters: serde_json::Value, seed: u64, columns: &[&str]) -> Self {
        ExperimentReport {
            name: name.to_string(),
            parameters,
            seed,
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
            notes: Vec::new(),
            pass: true,
        }
    }

    /// Values of one column, in row order.
    pub fn column(&self, name: &str) -> Vec<f64> {
        let i = self.columns.iter().position(|c| c == name).unwrap_or_else(|| panic!("no column {name}"));
        self.rows.iter().map(|r| r[i]).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_csv(&self) -> Result<String, LabError> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.columns).map_err(|e| LabError::Csv(e.to_string()))?;
        for row in &self.rows {
            w.write_record(row.iter().map(|v| v.to_string())).map_err(|e| LabError::Csv(e.to_string()))?;
        }
        let bytes = w.into_inner().map_err(|e| LabError::Csv(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| LabError::Csv(e.to_string()))
    }
}

fn strictly_decreasing(v: &[f64]) -> bool {
    v.windows(2).all(|w| w[1] < w[0])
}

fn non_increasing(v: &[f64]) -> bool {
    v.windows(2).all(|w| w[1] <= w[0])
}

fn binom_i(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        BigInt::zero()
    } else {
        binomial(n as usize, k as usize)
    }
}

/// Eigenvalue beta_s of the Johnson graph J(2k, k, d).
pub fn johnson_eigenvalue(k: usize, d: usize, s: usize) -> Result<BigInt, LabError> {
    if s > k || d > k {
        return Err(LabError::Range(format!("need s, d <= k (k={k}, d={d}, s={s})")));
    }
    let (k, d, s) = (k as i64, d as i64, s as i64);
    let mut total = BigInt::zero();
    for r in 0..=s {
        let term = binom_i(s, r) * binom_i(k - r, k - d - r) * binom_i(k - s + r, d - s + r);
        if (s - r) % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    Ok(total)
}

/// Multiplicity C(2k, s) - C(2k, s-1) of beta_s.
pub fn johnson_multiplicity(two_k: usize, s: usize) -> Result<BigInt, LabError> {
    if two_k % 2 == 1 || s > two_k / 2 {
        return Err(LabError::Range(format!("need even 2k and s <= k (2k={two_k}, s={s})")));
    }
    Ok(binom_i(two_k as i64, s as i64) - binom_i(two_k as i64, s as i64 - 1))
}

/// Spectrum from the closed form, as (eigenvalue, multiplicity) pairs.
pub fn johnson_formula_spectrum(two_k: usize, d: usize) -> Result<Vec<(BigInt, BigInt)>, LabError> {
    (0..=two_k / 2).map(|s| Ok((johnson_eigenvalue(two_k / 2, d, s)?, johnson_multiplicity(two_k, s)?))).collect()
}

/// Adjacency matrix of J(2k, k, d): middle-slice points at Hamming distance 2d.
pub fn johnson_adjacency(two_k: usize, d: usize) -> Result<DMatrix<f64>, LabError> {
    if two_k % 2 == 1 || two_k > 16 || d > two_k / 2 {
        return Err(LabError::Range(format!("need even 2k <= 16 and d <= k (2k={two_k}, d={d})")));
    }
    let mut verts = Vec::new();
    for_each_weight(two_k, two_k / 2, |x| verts.push(x));
    let n = verts.len();
    Ok(DMatrix::from_fn(n, n, |i, j| if (verts[i] ^ verts[j]).count_ones() as usize == 2 * d { 1.0 } else { 0.0 }))
}

/// Eigenvalues of the adjacency matrix, ascending.
pub fn johnson_numeric_spectrum(two_k: usize, d: usize) -> Result<Vec<f64>, LabError> {
    let eig = SymmetricEigen::new(johnson_adjacency(two_k, d)?);
    let mut v: Vec<f64> = eig.eigenvalues.iter().copied().collect();
    v.sort_by(f64::total_cmp);
    Ok(v)
}

/// Whether the closed-form multiset matches the numeric spectrum within `tol`.
pub fn johnson_spectra_agree(two_k: usize, d: usize, tol: f64) -> Result<bool, LabError> {
    let mut formula = Vec::new();
    for (value, mult) in johnson_formula_spectrum(two_k, d)? {
        let v = value.to_f64().unwrap_or(f64::NAN);
        formula.extend(std::iter::repeat_n(v, mult.to_usize().unwrap_or(0)));
    }
    formula.sort_by(f64::total_cmp);
    let numeric = johnson_numeric_spectrum(two_k, d)?;
    Ok(formula.len() == numeric.len() && formula.iter().zip(&numeric).all(|(a, b)| (a - b).abs() <= tol))
}

/// Stateless 64-bit mixer used to define large pseudo-random sets.
fn mix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Test sets for the slice sampling experiment.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum SliceSet {
    /// Each middle-slice point is included independently with this density.
    Random(f64),
    /// The whole middle slice.
    Full,
    /// Points whose first two coordinates differ.
    SplitPair,
}

impl SliceSet {
    fn contains(&self, x: u64, key: u64) -> bool {
        match *self {
            SliceSet::Random(p) => (mix(x ^ key) >> 11) as f64 / (1u64 << 53) as f64 <= p,
            SliceSet::Full => true,
            SliceSet::SplitPair => (x & 1) != (x >> 1 & 1),
        }
    }
}

/// Density of S on the middle slice of {0,1}^{2k} against its density on
/// the middle slice of a random pairing subcube z_c = y_{rho(c)}.
///
/// Columns: k, mean and max deviation, and the frequency with which S
/// misses the subcube's middle slice entirely (compared with 1/(2k-1) for
/// the split-pair set).
pub fn slice_sampling_experiment(k_grid: &[usize], set: SliceSet, trials: usize, seed: u64) -> Result<ExperimentReport, LabError> {
    let mut report = ExperimentReport::new(
        "slice_sampling",
        json!({ "k_grid": k_grid, "set": set, "trials": trials }),
        seed,
        &["k", "density", "mean_deviation", "max_deviation", "empty_rate", "pair_collapse_prediction"],
    );
    for &k in k_grid {
        if k % 2 == 1 || k == 0 || 2 * k > 30 {
            return Err(LabError::Range(format!("k must be even and 2k <= 30, got {k}")));
        }
        let key = split_seed(seed, k as u64);
        let (mut inside, mut total) = (0u64, 0u64);
        for_each_weight(2 * k, k, |x| {
            total += 1;
            inside += set.contains(x, key) as u64;
        });
        let density = inside as f64 / total as f64;
        let mut halves = Vec::new();
        for_each_weight(k, k / 2, |y| halves.push(y));
        let results = run_trials(trials, split_seed(seed, 1000 + k as u64), |_, s| {
            let rho = random_two_to_one(2 * k, &mut rng_from_seed(s)).expect("even domain");
            let hits = halves
                .iter()
                .filter(|&&y| {
                    let z = rho.iter().enumerate().fold(0u64, |acc, (c, &j)| acc | ((y >> j & 1) << c));
                    set.contains(z, key)
                })
                .count();
            (hits as f64 / halves.len() as f64, hits == 0)
        });
        let devs: Vec<f64> = results.iter().map(|(f, _)| (f - density).abs()).collect();
        let mean = devs.iter().sum::<f64>() / trials as f64;
        let max = devs.iter().copied().fold(0.0, f64::max);
        let empty = results.iter().filter(|r| r.1).count() as f64 / trials as f64;
        report.rows.push(vec![k as f64, density, mean, max, empty, 1.0 / (2 * k - 1) as f64]);
    }
    report.pass = match set {
        SliceSet::Random(_) => strictly_decreasing(&report.column("mean_deviation")),
        SliceSet::Full => report.column("max_deviation").iter().all(|&d| d == 0.0),
        SliceSet::SplitPair => {
            report.rows.iter().all(|r| (r[4] - r[5]).abs() <= 4.0 * (r[5] * (1.0 - r[5]) / trials as f64).sqrt() + 1.0 / trials as f64)
        }
    };
    Ok(report)
}

/// Polynomial families for the anti-concentration experiment.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum AntiFamily {
    /// s random monomials of degree exactly d with random nonzero integer
    /// coefficients.
    Random,
    /// x_1 ... x_{d-1} (x_d - x_{d+1} + x_{d+2} - ...) with s terms.
    Structured,
}

fn anti_poly<R: Rng + ?Sized>(d: usize, s: usize, family: AntiFamily, rng: &mut R) -> Result<MultilinearPoly, LabError> {
    let spec = GroupSpec::Integers;
    match family {
        AntiFamily::Structured => {
            let n = d - 1 + s;
            if n > crate::poly::MAX_DIM {
                return Err(LabError::Range(format!("structured family needs {n} variables")));
            }
            let prefix: Vec<usize> = (0..d - 1).collect();
            let terms = (0..s).map(|i| {
                let mut vars = prefix.clone();
                vars.push(d - 1 + i);
                let c = GroupValue::Int(if i % 2 == 0 { 1.into() } else { (-1).into() });
                (Monomial::from_vars(&vars), c)
            });
            Ok(MultilinearPoly::from_terms(n, d, spec, terms)?)
        }
        AntiFamily::Random => {
            let n = (d * s).clamp(d, 120);
            let mut seen = std::collections::BTreeSet::new();
            while seen.len() < s {
                let mut vars: Vec<usize> = Vec::new();
                while vars.len() < d {
                    let v = rng.gen_range(0..n);
                    if !vars.contains(&v) {
                        vars.push(v);
                    }
                }
                seen.insert(Monomial::from_vars(&vars));
            }
            let terms = seen.into_iter().map(|m| (m, spec.sample_nonzero(rng)));
            Ok(MultilinearPoly::from_terms(n, d, spec.clone(), terms)?)
        }
    }
}

/// Pr[Q(x) != 0] for polynomials over Z of sparsity s, against the bound
/// 1/2^{d-1} - slack/sqrt(s). Each trial draws a fresh polynomial and
/// `points` uniform inputs; the minimum over trials is compared.
pub fn anticoncentration_experiment(
    d: usize,
    s_grid: &[usize],
    family: AntiFamily,
    slack: f64,
    trials: usize,
    points: usize,
    seed: u64,
) -> Result<ExperimentReport, LabError> {
    if d == 0 {
        return Err(LabError::Range("d must be positive".into()));
    }
    let mut report = ExperimentReport::new(
        "anticoncentration",
        json!({ "d": d, "s_grid": s_grid, "family": family, "slack": slack, "trials": trials, "points": points }),
        seed,
        &["s", "mean_nonzero", "min_nonzero", "bound"],
    );
    report.notes.push(format!("bound = 1/2^(d-1) - {slack}/sqrt(s)"));
    for &s in s_grid {
        let rates = run_trials(trials, split_seed(seed, s as u64), |_, t| -> Result<f64, LabError> {
            let mut rng = rng_from_seed(t);
            let q = anti_poly(d, s, family, &mut rng)?;
            let nonzero =
                (0..points).filter(|_| !q.evaluate(&CubePoint::random(q.n(), &mut rng)).map(|v| v.is_zero()).unwrap_or(true)).count();
            Ok(nonzero as f64 / points as f64)
        })
        .into_iter()
        .collect::<Result<Vec<_>, _>>()?;
        let mean = rates.iter().sum::<f64>() / rates.len() as f64;
        let min = rates.iter().copied().fold(1.0, f64::min);
        let bound = 0.5f64.powi(d as i32 - 1) - slack / (s as f64).sqrt();
        report.pass &= min >= bound;
        report.rows.push(vec![s as f64, mean, min, bound]);
    }
    Ok(report)
}

/// Frequency of the event that at least (1 - 1/2^d + eta) t of a batch of
/// t polynomials with pairwise-disjoint leading monomials vanish at a
/// uniform point.
///
/// With d = 1, lower_terms = 1 and G = Z_2 the count is exactly binomial,
/// and the exact tail is reported next to the measurement.
pub fn tail_bound_experiment(
    d: usize,
    t_grid: &[usize],
    eta: f64,
    spec: &GroupSpec,
    lower_terms: usize,
    trials: usize,
    seed: u64,
) -> Result<ExperimentReport, LabError> {
    let mut report = ExperimentReport::new(
        "tail_bound",
        json!({ "d": d, "t_grid": t_grid, "eta": eta, "group": spec.to_string(), "lower_terms": lower_terms, "trials": trials }),
        seed,
        &["t", "threshold", "frequency", "binomial_tail", "log_frequency"],
    );
    let p0 = 1.0 - 0.5f64.powi(d as i32);
    for &t in t_grid {
        let threshold = ((p0 + eta) * t as f64).ceil() as u64;
        let hits = run_trials(trials, split_seed(seed, t as u64), |_, s| -> Result<bool, LabError> {
            let mut rng = rng_from_seed(s);
            let batch = random_disjoint_lm_batch(t * d, d, t, spec, lower_terms, &mut rng)?;
            let a = CubePoint::random(t * d, &mut rng);
            let zeros = batch.iter().filter(|q| q.eval_bits(a.bits()).is_zero()).count() as u64;
            Ok(zeros >= threshold)
        })
        .into_iter()
        .collect::<Result<Vec<_>, _>>()?;
        let freq = hits.iter().filter(|&&h| h).count() as f64 / trials as f64;
        let exact = binomial_upper_tail(t as u64, p0, threshold);
        report.rows.push(vec![t as f64, threshold as f64, freq, exact, freq.max(1.0 / trials as f64).ln()]);
    }
    let freqs = report.column("frequency");
    // A zero frequency is an unbounded log-decrease and stays decreasing.
    report.pass = freqs.windows(2).all(|w| w[1] < w[0] || (w[0] == 0.0 && w[1] == 0.0));
    report.notes.push("binomial_tail is exact for independent vanishing events with probability 1 - 1/2^d".into());
    Ok(report)
}

/// Functions whose list sizes are measured.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ListGenerator {
    /// A random polynomial of degree at most d.
    Polynomial,
    /// Two random polynomials stitched by a seeded coin where they differ.
    Stitched,
    /// Majority of x_1, x_2, x_3 (over Z_2 only).
    Majority,
    /// A uniformly random table.
    RandomTable,
}

/// Largest list at radius 1/2^d - eps over `samples` functions from each
/// generator.
#[allow(clippy::too_many_arguments)]
pub fn list_size_experiment(
    n: usize,
    d: usize,
    spec: &GroupSpec,
    eps_grid: &[Ratio<u64>],
    generators: &[ListGenerator],
    samples: usize,
    list_cap: usize,
    seed: u64,
) -> Result<ExperimentReport, LabError> {
    if n > 12 {
        return Err(LabError::Range(format!("n = {n} too large for exhaustive listing")));
    }
    let mut report = ExperimentReport::new(
        "list_size",
        json!({ "n": n, "d": d, "group": spec.to_string(), "eps_grid": eps_grid.iter().map(|e| e.to_string()).collect::<Vec<_>>(),
                "generators": generators, "samples": samples, "list_cap": list_cap }),
        seed,
        &["generator", "epsilon", "max_list", "mean_list"],
    );
    let base = Ratio::new(1u64, 1u64 << d);
    for (gi, &generator) in generators.iter().enumerate() {
        let mut tables = Vec::new();
        for i in 0..samples {
            let mut rng = derive_rng(seed, salt::TRIAL, ((gi as u128) << 64) | i as u128);
            let table = match generator {
                ListGenerator::Polynomial => MultilinearPoly::random(n, d, spec, RandomModel::UniformDense, &mut rng)?.truth_table()?,
                ListGenerator::Stitched => {
                    let polys = [
                        MultilinearPoly::random(n, d, spec, RandomModel::UniformDense, &mut rng)?,
                        MultilinearPoly::random(n, d, spec, RandomModel::UniformDense, &mut rng)?,
                    ];
                    let f = stitched_oracle(&polys, rng.gen())?;
                    crate::oracle::materialize(&f).map_err(|e| LabError::Range(e.to_string()))?
                }
                ListGenerator::Majority => {
                    if *spec != GroupSpec::cyclic(2).expect("valid") || n < 3 {
                        return Err(LabError::Range("majority needs Z_2 and n >= 3".into()));
                    }
                    (0..1u32 << n).map(|x| spec.parse_value(if (x & 7).count_ones() >= 2 { "1" } else { "0" }).expect("valid")).collect()
                }
                ListGenerator::RandomTable => (0..1usize << n).map(|_| spec.sample(&mut rng)).collect(),
            };
            tables.push(table);
        }
        for &eps in eps_grid {
            if eps > base {
                return Err(LabError::Range(format!("epsilon {eps} exceeds 1/2^d")));
            }
            let radius = base - eps;
            let mut sizes = Vec::new();
            for table in &tables {
                sizes.push(brute_force_list_decode(table, n, d, radius, spec, list_cap)?.len());
            }
            let max = sizes.iter().copied().max().unwrap_or(0);
            let mean = sizes.iter().sum::<usize>() as f64 / sizes.len().max(1) as f64;
            report.rows.push(vec![gi as f64, eps.to_f64().unwrap_or(f64::NAN), max as f64, mean]);
        }
    }
    report.notes.push(format!("generator index follows {generators:?}"));
    report.pass = report.column("max_list").iter().all(|&m| m <= list_cap as f64);
    Ok(report)
}

/// Rate at which Psi finds several consistent candidates that disagree at
/// the query point, for a triple whose Q is the restriction of a planted
/// polynomial. f is two random polynomials stitched together.
pub fn collision_experiment(
    n: usize,
    d: usize,
    k_grid: &[usize],
    epsilon: Ratio<u64>,
    trials: usize,
    seed: u64,
) -> Result<ExperimentReport, LabError> {
    let spec = GroupSpec::cyclic(2).expect("valid");
    let mut report = ExperimentReport::new(
        "collision",
        json!({ "n": n, "d": d, "k_grid": k_grid, "epsilon": epsilon.to_string(), "trials": trials }),
        seed,
        &["k", "collision_rate", "ambiguous_rate", "psi_error_rate"],
    );
    for &k in k_grid {
        let outcomes = run_trials(trials, split_seed(seed, k as u64), |_, s| -> Result<(bool, bool, bool), LabError> {
            let mut rng = rng_from_seed(s);
            let polys = [
                MultilinearPoly::random(n, d, &spec, RandomModel::UniformDense, &mut rng)?,
                MultilinearPoly::random(n, d, &spec, RandomModel::UniformDense, &mut rng)?,
            ];
            let f = stitched_oracle(&polys, rng.gen())?;
            let cube = SubcubeEmbedding::sample_uniform(CubePoint::random(n, &mut rng), k, &mut rng)?;
            let q = polys[0].restrict_to_subcube(&cube)?;
            let triple = AdviceTriple { cube, sigma: random_permutation(2 * k, &mut rng), q };
            let cfg = ListConfig::new(d, epsilon, k, 1, s);
            let b = CubePoint::random(n, &mut rng);
            let out = psi_evaluate(&f, &triple, &b, &cfg)?;
            Ok((out.collision, out.consistent > 1, out.value != polys[0].eval_bits(b.bits())))
        })
        .into_iter()
        .collect::<Result<Vec<_>, _>>()?;
        let rate = |sel: fn(&(bool, bool, bool)) -> bool| outcomes.iter().filter(|o| sel(o)).count() as f64 / trials as f64;
        report.rows.push(vec![k as f64, rate(|o| o.0), rate(|o| o.1), rate(|o| o.2)]);
    }
    report.pass = non_increasing(&report.column("collision_rate"));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn johnson_small_cases() {
        for k in 1..=6 {
            for d in 0..=k {
                assert_eq!(johnson_eigenvalue(k, d, 0).unwrap(), binomial(k, d).pow(2));
            }
            let total: BigInt = (0..=k).map(|s| johnson_multiplicity(2 * k, s).unwrap()).sum();
            assert_eq!(total, binomial(2 * k, k));
        }
        let spec: Vec<(i64, i64)> =
            johnson_formula_spectrum(4, 1).unwrap().into_iter().map(|(v, m)| (v.to_i64().unwrap(), m.to_i64().unwrap())).collect();
        assert_eq!(spec, vec![(4, 1), (0, 3), (-2, 2)]);
        let numeric = johnson_numeric_spectrum(4, 1).unwrap();
        let expect = [-2.0, -2.0, 0.0, 0.0, 0.0, 4.0];
        assert!(numeric.iter().zip(expect).all(|(a, b)| (a - b).abs() < 1e-9));
        assert!(johnson_eigenvalue(3, 4, 0).is_err());
    }

    #[test]
    fn full_slice_has_zero_deviation() {
        let r = slice_sampling_experiment(&[4, 6], SliceSet::Full, 20, 1).unwrap();
        assert!(r.pass);
        assert!(r.column("empty_rate").iter().all(|&e| e == 0.0));
    }

    #[test]
    fn single_monomial_vanishes_off_its_support() {
        let mut rng = rng_from_seed(4);
        let q = MultilinearPoly::random(6, 2, &GroupSpec::Integers, RandomModel::Sparsity(1), &mut rng).unwrap();
        let deg = q.degree();
        let nonzero = (0..64u128).filter(|&x| !q.eval_bits(x).is_zero()).count();
        assert_eq!(nonzero, 64 >> deg);
    }

    #[test]
    fn tail_with_one_polynomial_is_vanishing_rate() {
        let r = tail_bound_experiment(1, &[1], 0.0, &GroupSpec::cyclic(2).unwrap(), 1, 2000, 3).unwrap();
        assert!((r.rows[0][2] - 0.5).abs() < 0.05);
    }

    #[test]
    fn list_sizes_for_small_cubes() {
        let z2 = GroupSpec::cyclic(2).unwrap();
        let r = list_size_experiment(3, 1, &z2, &[Ratio::new(1, 10)], &[ListGenerator::Majority], 1, 64, 0).unwrap();
        assert!(r.rows[0][2] >= 2.0);
        let r = list_size_experiment(4, 1, &z2, &[Ratio::new(2, 5)], &[ListGenerator::Polynomial], 5, 64, 0).unwrap();
        assert_eq!(r.column("max_list"), vec![1.0]);
        let r = list_size_experiment(4, 1, &z2, &[Ratio::new(1, 2)], &[ListGenerator::RandomTable], 5, 64, 0).unwrap();
        assert!(r.rows[0][2] <= 1.0);
    }

    #[test]
    fn reports_render() {
        let r = slice_sampling_experiment(&[4], SliceSet::Random(0.5), 10, 2).unwrap();
        assert!(r.to_csv().unwrap().starts_with("k,density"));
        assert_eq!(r, slice_sampling_experiment(&[4], SliceSet::Random(0.5), 10, 2).unwrap());
        assert!(r.to_json().contains("\"slice_sampling\""));
    }
}
