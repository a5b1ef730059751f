//! Unique local correction.
//!
//! * [`SubConstantCorrector`]: one random weighted subcube through the
//!   target, read on the interpolating set (works for error rates below
//!   about 1/(100|S|)).
//! * [`error_reduce`]: a virtual oracle that decodes a random subcube
//!   through each query point by majority logic.
//! * [`unique_local_correct`]: error reduction stages followed by the
//!   sub-constant corrector.
//! * [`TorsionCorrector`]: constant-query correction over torsion groups,
//!   reading a random image of the middle slice of {0,1}^{2k}.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::Zero;
use rand::Rng;
use serde::Serialize;
use thiserror::Error;

use crate::groups::{GroupSpec, GroupValue};
use crate::interpolate::{build_interpolating_set, slice_coefficients, InterpolateError, SliceCoefficients, WeightedInterpolatingSet};
use crate::oracle::{CountingOracle, Oracle, VirtualOracle};
use crate::poly::{for_each_weight, table_distance, CubePoint, Monomial, MultilinearPoly, PolyError, MAX_DIM};
use crate::seeding::{derive_rng, salt, split_seed};
use crate::subcube::{SubcubeEmbedding, SubcubeError};

/// Largest subcube dimension a decoder will enumerate.
pub const MAX_DECODE_DIM: usize = 22;

#[derive(Debug, Error)]
pub enum CorrectError {
    #[error(transparent)]
    Interpolate(#[from] InterpolateError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Subcube(#[from] SubcubeError),
    #[error("point has dimension {0}, oracle has dimension {1}")]
    DimMismatch(usize, usize),
    #[error("group {group} has no exponent dividing {exponent}")]
    ExponentMismatch { group: String, exponent: u64 },
    #[error("invalid configuration: {0}")]
    Config(String),
}

/// Parameters of the unique correctors.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CorrectorConfig {
    pub d: usize,
    /// The constant A in k = ceil(A (d+1) log2 n).
    pub a_const: u32,
    /// Margin below the unique decoding radius 1/2^(d+1) assumed for the
    /// input; used only to choose default error-reduction dimensions.
    pub epsilon: f64,
    /// Subcube dimension of each error-reduction stage, innermost first.
    pub er_stages: Vec<usize>,
    pub seed: u64,
}

impl CorrectorConfig {
    /// Defaults for an n-variate instance: A = 4 and a single
    /// error-reduction stage of dimension [`default_er_dim`].
    pub fn new(n: usize, d: usize, epsilon: f64, seed: u64) -> Result<Self, CorrectError> {
        let k = hash_dimension(n, d, 4)?;
        let set_size = build_interpolating_set(d, k)?.len();
        let er = default_er_dim(d, epsilon, set_size)?;
        Ok(CorrectorConfig { d, a_const: 4, epsilon, er_stages: vec![er], seed })
    }

    /// Largest stage dimension (the er_dim of the schedule).
    pub fn er_dim(&self) -> usize {
        self.er_stages.iter().copied().max().unwrap_or(0)
    }

    pub fn validate(&self) -> Result<(), CorrectError> {
        if self.a_const == 0 {
            return Err(CorrectError::Config("A must be positive".into()));
        }
        if let Some(&bad) = self.er_stages.iter().find(|&&s| s < self.d + 1 || s > MAX_DECODE_DIM) {
            return Err(CorrectError::Config(format!("error-reduction dimension {bad} outside [{}, {MAX_DECODE_DIM}]", self.d + 1)));
        }
        Ok(())
    }
}

/// k = ceil(A (d+1) log2 n), rounded up to a positive multiple of 10(d+1).
pub fn hash_dimension(n: usize, d: usize, a_const: u32) -> Result<usize, CorrectError> {
    let r = 10 * (d + 1);
    let raw = (a_const as f64 * (d + 1) as f64 * (n.max(2) as f64).log2()).ceil() as usize;
    let k = raw.div_ceil(r).max(1) * r;
    if k > MAX_DIM {
        return Err(CorrectError::Config(format!("hash dimension {k} exceeds {MAX_DIM}")));
    }
    Ok(k)
}

/// Smallest subcube dimension D >= d+1 such that, if each of the 2^D
/// subcube points is independently corrupted with probability
/// 1/2^(d+1) - epsilon, the chance of reaching the decoding threshold
/// 2^(D-d-1) is at most 1/(100 * set_size), the error rate the
/// sub-constant corrector tolerates.
pub fn default_er_dim(d: usize, epsilon: f64, set_size: usize) -> Result<usize, CorrectError> {
    let rate = 0.5f64.powi(d as i32 + 1) - epsilon;
    if !(epsilon > 0.0 && rate > 0.0) {
        return Err(CorrectError::Config(format!("epsilon must lie in (0, 1/2^(d+1)), got {epsilon}")));
    }
    let target = 1.0 / (100.0 * set_size as f64);
    (d + 1..=MAX_DECODE_DIM)
        .find(|&dim| binomial_upper_tail(1u64 << dim, rate, 1u64 << (dim - d - 1)) <= target)
        .ok_or_else(|| CorrectError::Config(format!("no error-reduction dimension up to {MAX_DECODE_DIM} suffices")))
}

/// Pr[Bin(n, p) >= t], summed in log space.
pub fn binomial_upper_tail(n: u64, p: f64, t: u64) -> f64 {
    if t == 0 {
        return 1.0;
    }
    if t > n {
        return 0.0;
    }
    let (lp, lq) = (p.ln(), (1.0 - p).ln());
    let mut log_pmf = n as f64 * lq;
    let mut terms = Vec::new();
    for i in 0..n {
        if i >= t {
            terms.push(log_pmf);
        }
        log_pmf += ((n - i) as f64).ln() - ((i + 1) as f64).ln() + lp - lq;
    }
    terms.push(log_pmf);
    let max = terms.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    max.exp() * terms.iter().map(|x| (x - max).exp()).sum::<f64>()
}

/// Value returned by a corrector, with the queries it spent on the base
/// oracle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Correction {
    pub value: GroupValue,
    pub queries: u64,
}

/// The sub-constant-error corrector: read f on the image of the
/// interpolating set under a random weighted embedding through the target.
#[derive(Debug, Clone)]
pub struct SubConstantCorrector {
    n: usize,
    set: WeightedInterpolatingSet,
    coeffs: Vec<BigInt>,
}

impl SubConstantCorrector {
    pub fn new(n: usize, d: usize, a_const: u32) -> Result<Self, CorrectError> {
        let k = hash_dimension(n, d, a_const)?;
        let set = build_interpolating_set(d, k)?;
        let coeffs = set.interpolation_coefficients(&CubePoint::zeros(k))?;
        Ok(SubConstantCorrector { n, set, coeffs })
    }

    pub fn set(&self) -> &WeightedInterpolatingSet {
        &self.set
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Queries per call: |S|.
    pub fn queries(&self) -> usize {
        self.set.len()
    }

    pub fn correct<R: Rng + ?Sized>(&self, f: &dyn Oracle, a: &CubePoint, rng: &mut R) -> Result<GroupValue, CorrectError> {
        if a.len() != self.n || f.dim() != self.n {
            return Err(CorrectError::DimMismatch(a.len(), f.dim()));
        }
        let c = SubcubeEmbedding::sample_weighted(*a, self.set.weights(), rng)?;
        let values: Vec<GroupValue> = self.set.points().iter().map(|u| f.fetch(&c.lift(u))).collect();
        Ok(self.set.combine(&self.coeffs, &values))
    }
}

/// One run of the sub-constant corrector with randomness from `cfg.seed`.
pub fn correct_low_error(f: &dyn Oracle, a: &CubePoint, cfg: &CorrectorConfig) -> Result<Correction, CorrectError> {
    let corrector = SubConstantCorrector::new(f.dim(), cfg.d, cfg.a_const)?;
    let counted = CountingOracle::new(f);
    let mut rng = derive_rng(cfg.seed, salt::TRIAL, a.bits());
    let value = corrector.correct(&counted, a, &mut rng)?;
    Ok(Correction { value, queries: counted.query_count() })
}

/// Majority-logic decoding of a full table on {0,1}^k.
///
/// For s = d down to 0 and every |S| = s, c_S is the plurality over all
/// 2^(k-s) assignments y of the variables outside S of the alternating sum
/// sum over T within S of (-1)^(|S|-|T|) g(y + T). The recovered level is
/// then subtracted from g. Ties go to the value whose text form is least.
pub fn majority_decode(table: &[GroupValue], k: usize, d: usize, spec: &GroupSpec) -> MultilinearPoly {
    assert_eq!(table.len(), 1usize << k, "table must cover {{0,1}}^k");
    let mut g = table.to_vec();
    let mut terms = Vec::new();
    let full = (1usize << k) - 1;
    for s in (0..=d.min(k)).rev() {
        let mut level = Vec::new();
        for_each_weight(k, s, |mask| {
            let mask = mask as usize;
            let mut counts: HashMap<GroupValue, u32> = HashMap::new();
            let rest = full & !mask;
            let mut y = 0usize;
            loop {
                *counts.entry(alternating_sum(&g, y, mask)).or_insert(0) += 1;
                if y == rest {
                    break;
                }
                y = (y.wrapping_sub(rest)) & rest;
            }
            let c = plurality(counts);
            if !c.is_zero() {
                level.push((mask, c));
            }
        });
        for (mask, c) in &level {
            let rest = full & !mask;
            let mut y = 0usize;
            loop {
                g[y | mask].sub_assign_ref(c);
                if y == rest {
                    break;
                }
                y = (y.wrapping_sub(rest)) & rest;
            }
        }
        terms.extend(level.into_iter().map(|(m, c)| (Monomial(m as u128), c)));
    }
    MultilinearPoly::from_terms(k, d, spec.clone(), terms).expect("decoded terms have degree at most d")
}

fn alternating_sum(g: &[GroupValue], y: usize, mask: usize) -> GroupValue {
    if mask == 0 {
        return g[y].clone();
    }
    let parity = mask.count_ones() % 2;
    let mut acc = g[y | mask].clone();
    let mut t = (mask - 1) & mask;
    loop {
        if t.count_ones() % 2 == parity {
            acc.add_assign_ref(&g[y | t]);
        } else {
            acc.sub_assign_ref(&g[y | t]);
        }
        if t == 0 {
            break;
        }
        t = (t - 1) & mask;
    }
    acc
}

fn plurality(counts: HashMap<GroupValue, u32>) -> GroupValue {
    let best = counts.values().copied().max().expect("at least one vote");
    counts
        .into_iter()
        .filter(|&(_, c)| c == best)
        .map(|(v, _)| (v.to_string(), v))
        .min_by(|a, b| a.0.cmp(&b.0))
        .map(|(_, v)| v)
        .expect("at least one vote")
}

/// Majority-logic decoding followed by a distance check: the decoded
/// polynomial if it is within `radius` of the table.
pub fn brute_force_unique_decode(
    table: &[GroupValue],
    k: usize,
    d: usize,
    spec: &GroupSpec,
    radius: Ratio<u64>,
) -> Result<Option<MultilinearPoly>, CorrectError> {
    if k > MAX_DECODE_DIM {
        return Err(PolyError::OverCap(k, MAX_DECODE_DIM).into());
    }
    let p = majority_decode(table, k, d, spec);
    let dist = table_distance(table, &p.truth_table()?);
    Ok((dist <= radius).then_some(p))
}

/// Largest distance e/2^k with e < 2^(k-d-1), inside which majority logic
/// is exact.
pub fn unique_radius(k: usize, d: usize) -> Ratio<u64> {
    if k < d + 1 {
        return Ratio::zero();
    }
    Ratio::new((1u64 << (k - d - 1)) - 1, 1u64 << k)
}

/// Virtual oracle g(x): decode f on a random uniform subcube of dimension
/// `dim` based at x and return the decoded value at x. The subcube is a
/// function of (seed, x), so g is a fixed function. Each query of g costs
/// 2^dim queries of f.
pub fn error_reduce<'a>(f: &'a dyn Oracle, d: usize, dim: usize, seed: u64) -> Result<VirtualOracle<'a>, CorrectError> {
    if dim < d + 1 || dim > MAX_DECODE_DIM {
        return Err(CorrectError::Config(format!("error-reduction dimension {dim} outside [{}, {MAX_DECODE_DIM}]", d + 1)));
    }
    let spec = f.spec().clone();
    let inner_spec = spec.clone();
    Ok(VirtualOracle::new(f.dim(), spec, move |x: &CubePoint| {
        let mut rng = derive_rng(seed, salt::ERROR_REDUCTION, x.bits());
        let c = SubcubeEmbedding::sample_uniform(*x, dim, &mut rng).expect("dimension is positive");
        let table: Vec<GroupValue> = c.lift_all().iter().map(|p| f.fetch(p)).collect();
        majority_decode(&table, dim, d, &inner_spec).coeff(Monomial::ONE)
    }))
}

/// Error reduction stages (innermost first) followed by the sub-constant
/// corrector. Queries to f: |S| * prod 2^(stage dim).
pub fn unique_local_correct(f: &dyn Oracle, a: &CubePoint, cfg: &CorrectorConfig) -> Result<Correction, CorrectError> {
    cfg.validate()?;
    let corrector = SubConstantCorrector::new(f.dim(), cfg.d, cfg.a_const)?;
    unique_local_correct_with(&corrector, f, a, cfg)
}

/// As [`unique_local_correct`] with a prebuilt sub-constant corrector.
pub fn unique_local_correct_with(
    corrector: &SubConstantCorrector,
    f: &dyn Oracle,
    a: &CubePoint,
    cfg: &CorrectorConfig,
) -> Result<Correction, CorrectError> {
    let counted = CountingOracle::new(f);
    let mut rng = derive_rng(cfg.seed, salt::TRIAL, a.bits());
    let value = with_stages(&counted, cfg, 0, &mut |top| corrector.correct(top, a, &mut rng))?;
    Ok(Correction { value, queries: counted.query_count() })
}

/// Calls `k` on the oracle obtained by stacking the stages from `i` on.
fn with_stages(
    f: &dyn Oracle,
    cfg: &CorrectorConfig,
    i: usize,
    k: &mut dyn FnMut(&dyn Oracle) -> Result<GroupValue, CorrectError>,
) -> Result<GroupValue, CorrectError> {
    match cfg.er_stages.get(i) {
        None => k(f),
        Some(&dim) => {
            let g = error_reduce(f, cfg.d, dim, split_seed(cfg.seed, i as u64 + 1))?;
            with_stages(&g, cfg, i + 1, k)
        }
    }
}

/// Expected base-oracle queries of [`unique_local_correct`].
pub fn unique_query_count(set_size: usize, cfg: &CorrectorConfig) -> u64 {
    cfg.er_stages.iter().fold(set_size as u64, |acc, &dim| acc << dim)
}

/// Constant-query corrector for groups of exponent dividing M.
#[derive(Debug, Clone)]
pub struct TorsionCorrector {
    coeffs: SliceCoefficients,
    support: Vec<CubePoint>,
}

impl TorsionCorrector {
    pub fn new(d: usize, exponent: u64) -> Result<Self, CorrectError> {
        let coeffs = slice_coefficients(d, exponent)?;
        let support = coeffs.support();
        Ok(TorsionCorrector { coeffs, support })
    }

    pub fn coefficients(&self) -> &SliceCoefficients {
        &self.coeffs
    }

    /// Slice points with nonzero coefficient: C(k+d, k) of them.
    pub fn support(&self) -> &[CubePoint] {
        &self.support
    }

    /// Sample h: [n] -> [2k] uniformly and return sum_b c_b f(x(b)) over the
    /// weight-k slice, skipping the points whose coefficient is zero.
    pub fn correct<R: Rng + ?Sized>(&self, f: &dyn Oracle, a: &CubePoint, rng: &mut R) -> Result<GroupValue, CorrectError> {
        if a.len() != f.dim() {
            return Err(CorrectError::DimMismatch(a.len(), f.dim()));
        }
        check_exponent(f.spec(), self.coeffs.exponent)?;
        let c = SubcubeEmbedding::sample_uniform(*a, 2 * self.coeffs.k, rng)?;
        let scale = BigInt::from(self.coeffs.a);
        let mut acc = f.spec().zero();
        for b in &self.support {
            acc.add_assign_ref(&f.fetch(&c.lift(b)).int_scale(&scale));
        }
        Ok(acc)
    }
}

fn check_exponent(spec: &GroupSpec, m: u64) -> Result<(), CorrectError> {
    match spec.exponent() {
        Some(e) if m.is_multiple_of(e) => Ok(()),
        _ => Err(CorrectError::ExponentMismatch { group: spec.to_string(), exponent: m }),
    }
}

pub fn const_torsion_correct(f: &dyn Oracle, a: &CubePoint, d: usize, exponent: u64, seed: u64) -> Result<Correction, CorrectError> {
    let corrector = TorsionCorrector::new(d, exponent)?;
    let counted = CountingOracle::new(f);
    let mut rng = derive_rng(seed, salt::TRIAL, a.bits());
    let value = corrector.correct(&counted, a, &mut rng)?;
    Ok(Correction { value, queries: counted.query_count() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{CorruptedOracle, CorruptionSpec};
    use crate::poly::RandomModel;
    use crate::seeding::rng_from_seed;
    use std::collections::BTreeSet;

    fn clean(p: MultilinearPoly) -> CorruptedOracle {
        let spec = p.spec().clone();
        CorruptedOracle::new(p, CorruptionSpec::none(&spec), 0).unwrap()
    }

    #[test]
    fn hash_dimensions() {
        assert_eq!(hash_dimension(64, 1, 4).unwrap(), 60);
        assert_eq!(hash_dimension(64, 2, 4).unwrap(), 90);
        assert_eq!(hash_dimension(32, 1, 4).unwrap(), 40);
        assert_eq!(hash_dimension(16, 1, 4).unwrap(), 40);
        assert_eq!(hash_dimension(2, 0, 4).unwrap(), 10);
    }

    #[test]
    fn low_error_corrector_is_exact_without_errors() {
        let mut rng = rng_from_seed(1);
        let p = MultilinearPoly::random(24, 2, &GroupSpec::Integers, RandomModel::Sparsity(20), &mut rng).unwrap();
        let f = clean(p.clone());
        let cfg = CorrectorConfig { d: 2, a_const: 4, epsilon: 0.05, er_stages: vec![], seed: 3 };
        for _ in 0..5 {
            let a = CubePoint::random(24, &mut rng);
            let out = correct_low_error(&f, &a, &cfg).unwrap();
            assert_eq!(out.value, p.evaluate(&a).unwrap());
            assert_eq!(out.queries as usize, SubConstantCorrector::new(24, 2, 4).unwrap().queries());
        }
    }

    #[test]
    fn constant_polynomial_is_returned() {
        let g = GroupSpec::cyclic(7).unwrap().parse_value("3").unwrap();
        let f = clean(MultilinearPoly::constant(16, 1, g.clone()));
        let corrector = SubConstantCorrector::new(16, 1, 4).unwrap();
        let mut rng = rng_from_seed(2);
        for _ in 0..5 {
            let a = CubePoint::random(16, &mut rng);
            assert_eq!(corrector.correct(&f, &a, &mut rng).unwrap(), g);
        }
    }

    #[test]
    fn majority_decoder_recovers_planted_errors() {
        let mut rng = rng_from_seed(3);
        let p = MultilinearPoly::random(6, 1, &GroupSpec::Integers, RandomModel::UniformDense, &mut rng).unwrap();
        let mut table = p.truth_table().unwrap();
        for i in [5usize, 17, 40] {
            table[i].add_assign_ref(&GroupValue::Int(BigInt::from(4)));
        }
        let out = brute_force_unique_decode(&table, 6, 1, &GroupSpec::Integers, unique_radius(6, 1)).unwrap();
        assert_eq!(out, Some(p.clone()));
        assert_eq!(majority_decode(&p.truth_table().unwrap(), 6, 1, &GroupSpec::Integers), p);
    }

    #[test]
    fn far_table_is_rejected() {
        // x1 x2 + x3 x4 over Z_2 is at distance 6/16 from every affine function.
        let spec = GroupSpec::cyclic(2).unwrap();
        let table: Vec<GroupValue> =
            (0..16u32).map(|x| spec.parse_value(&((x & 1 & (x >> 1) ^ (x >> 2) & 1 & (x >> 3)) & 1).to_string()).unwrap()).collect();
        for coeffs in 0..32u32 {
            let mut nearest = 0;
            for x in 0..16u32 {
                let v = (coeffs & 1) ^ ((coeffs >> 1) & x).count_ones() & 1;
                let t = if table[x as usize].is_zero() { 0 } else { 1 };
                nearest += (v != t) as u32;
            }
            assert!(nearest >= 6);
        }
        assert_eq!(brute_force_unique_decode(&table, 4, 1, &spec, unique_radius(4, 1)).unwrap(), None);
    }

    #[test]
    fn error_reduction_of_clean_oracle() {
        let mut rng = rng_from_seed(4);
        let p = MultilinearPoly::random(12, 1, &GroupSpec::Rationals, RandomModel::UniformDense, &mut rng).unwrap();
        let f = clean(p.clone());
        let g = error_reduce(&f, 1, 5, 9).unwrap();
        for _ in 0..10 {
            let x = CubePoint::random(12, &mut rng);
            let before = f.query_count();
            assert_eq!(g.fetch(&x), p.evaluate(&x).unwrap());
            assert_eq!(f.query_count() - before, 32);
        }
    }

    #[test]
    fn composed_corrector_accounting() {
        let mut rng = rng_from_seed(5);
        let p = MultilinearPoly::random(16, 1, &GroupSpec::Integers, RandomModel::UniformDense, &mut rng).unwrap();
        let f = clean(p.clone());
        let cfg = CorrectorConfig { d: 1, a_const: 4, epsilon: 0.05, er_stages: vec![3, 4], seed: 6 };
        let a = CubePoint::random(16, &mut rng);
        let out = unique_local_correct(&f, &a, &cfg).unwrap();
        assert_eq!(out.value, p.evaluate(&a).unwrap());
        assert_eq!(out.queries, unique_query_count(41, &cfg));
        assert_eq!(out.queries, 41 * 8 * 16);
    }

    #[test]
    fn torsion_corrector_is_exact_without_errors() {
        let spec = GroupSpec::cyclic(2).unwrap();
        let mut rng = rng_from_seed(7);
        let p = MultilinearPoly::random(20, 1, &spec, RandomModel::UniformDense, &mut rng).unwrap();
        let f = clean(p.clone());
        for s in 0..10 {
            let a = CubePoint::random(20, &mut rng);
            let out = const_torsion_correct(&f, &a, 1, 2, s).unwrap();
            assert_eq!(out.value, p.evaluate(&a).unwrap());
            assert_eq!(out.queries, 9);
        }
        let z = clean(MultilinearPoly::zero(4, 1, GroupSpec::Integers));
        assert!(const_torsion_correct(&z, &CubePoint::zeros(4), 1, 2, 0).is_err());
        let z4 = clean(MultilinearPoly::zero(4, 1, GroupSpec::cyclic(4).unwrap()));
        assert!(const_torsion_correct(&z4, &CubePoint::zeros(4), 1, 2, 0).is_err());
    }

    #[test]
    fn binomial_tail_matches_direct_sum() {
        // Pr[Bin(4, 1/2) >= 3] = 5/16.
        assert!((binomial_upper_tail(4, 0.5, 3) - 5.0 / 16.0).abs() < 1e-12);
        assert_eq!(binomial_upper_tail(4, 0.5, 0), 1.0);
        assert_eq!(default_er_dim(1, 0.05, 41).unwrap(), 10);
        assert!(default_er_dim(1, 0.3, 41).is_err());
    }

    #[test]
    fn planted_error_set_is_avoided_by_most_subcubes() {
        let spec = GroupSpec::cyclic(3).unwrap();
        let mut rng = rng_from_seed(8);
        let p = MultilinearPoly::random(20, 1, &spec, RandomModel::UniformDense, &mut rng).unwrap();
        let errors: BTreeSet<CubePoint> = (0..20).map(|_| CubePoint::random(20, &mut rng)).collect();
        let f = CorruptedOracle::new(p.clone(), CorruptionSpec::planted(errors, &spec), 0).unwrap();
        let corrector = SubConstantCorrector::new(20, 1, 4).unwrap();
        let a = CubePoint::random(20, &mut rng);
        let hits = (0..50).filter(|_| corrector.correct(&f, &a, &mut rng).unwrap() == p.evaluate(&a).unwrap()).count();
        assert!(hits >= 45);
    }
}
