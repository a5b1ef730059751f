//! Query-counted access to functions {0,1}^n -> G.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use num_rational::Ratio;
use rand::seq::SliceRandom;
use rand::Rng;
use thiserror::Error;

use crate::groups::{GroupSpec, GroupValue};
use crate::poly::{CubePoint, MultilinearPoly, PolyError, DEFAULT_ENUM_CAP};
use crate::seeding::{derive_rng, salt};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("query of dimension {got} to an oracle of dimension {expected}")]
    DimMismatch { expected: usize, got: usize },
    #[error("corruption rate {0} exceeds 1")]
    RateTooLarge(String),
    #[error("planted point {0} has the wrong dimension")]
    PlantedDim(String),
    #[error("table of length {0} is not 2^{1}")]
    TableLength(usize, usize),
    #[error("malformed instance: {0}")]
    Instance(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// A function {0,1}^n -> G behind a query counter.
///
/// Implementors supply `evaluate`; callers use `query` (checked) or `fetch`
/// (dimension checked only in debug builds). Both increment the counter by
/// exactly one.
pub trait Oracle: Send + Sync {
    fn dim(&self) -> usize;
    fn spec(&self) -> &GroupSpec;
    /// Uncounted evaluation.
    fn evaluate(&self, x: &CubePoint) -> GroupValue;
    fn counter(&self) -> &AtomicU64;

    fn query(&self, x: &CubePoint) -> Result<GroupValue, OracleError> {
        if x.len() != self.dim() {
            return Err(OracleError::DimMismatch { expected: self.dim(), got: x.len() });
        }
        Ok(self.fetch(x))
    }

    fn fetch(&self, x: &CubePoint) -> GroupValue {
        debug_assert_eq!(x.len(), self.dim());
        self.counter().fetch_add(1, Ordering::Relaxed);
        self.evaluate(x)
    }

    fn query_count(&self) -> u64 {
        self.counter().load(Ordering::Relaxed)
    }
}

/// Explicit truth table.
pub struct TableOracle {
    n: usize,
    spec: GroupSpec,
    table: Vec<GroupValue>,
    counter: AtomicU64,
}

impl TableOracle {
    pub fn new(n: usize, spec: GroupSpec, table: Vec<GroupValue>) -> Result<Self, OracleError> {
        if n > DEFAULT_ENUM_CAP || table.len() != 1usize << n {
            return Err(OracleError::TableLength(table.len(), n));
        }
        Ok(TableOracle { n, spec, table, counter: AtomicU64::new(0) })
    }

    pub fn table(&self) -> &[GroupValue] {
        &self.table
    }
}

impl Oracle for TableOracle {
    fn dim(&self) -> usize {
        self.n
    }
    fn spec(&self) -> &GroupSpec {
        &self.spec
    }
    fn evaluate(&self, x: &CubePoint) -> GroupValue {
        self.table[x.index()].clone()
    }
    fn counter(&self) -> &AtomicU64 {
        &self.counter
    }
}

/// Which points are corrupted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CorruptionMode {
    None,
    /// Exactly these points.
    Planted(BTreeSet<CubePoint>),
    /// Each point independently with this probability, fixed by the seed.
    IidRate(Ratio<u64>),
}

/// How a corrupted output is chosen.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ErrorValueModel {
    /// Clean value plus this nonzero offset.
    FixedOffset(GroupValue),
    /// Clean value plus a per-point random nonzero element.
    RandomNonzero,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorruptionSpec {
    pub mode: CorruptionMode,
    pub values: ErrorValueModel,
}

impl CorruptionSpec {
    pub fn none(spec: &GroupSpec) -> Self {
        CorruptionSpec { mode: CorruptionMode::None, values: ErrorValueModel::FixedOffset(spec.unit()) }
    }

    pub fn planted(points: BTreeSet<CubePoint>, spec: &GroupSpec) -> Self {
        CorruptionSpec { mode: CorruptionMode::Planted(points), values: ErrorValueModel::FixedOffset(spec.unit()) }
    }

    pub fn iid(rate: Ratio<u64>, spec: &GroupSpec) -> Self {
        CorruptionSpec { mode: CorruptionMode::IidRate(rate), values: ErrorValueModel::FixedOffset(spec.unit()) }
    }
}

/// A polynomial seen through a corruption pattern.
pub struct CorruptedOracle {
    poly: MultilinearPoly,
    corruption: CorruptionSpec,
    seed: u64,
    threshold: u128,
    counter: AtomicU64,
}

pub fn make_corrupted_oracle(p: MultilinearPoly, c: CorruptionSpec, seed: u64) -> Result<CorruptedOracle, OracleError> {
    CorruptedOracle::new(p, c, seed)
}

impl CorruptedOracle {
    pub fn new(poly: MultilinearPoly, corruption: CorruptionSpec, seed: u64) -> Result<Self, OracleError> {
        let mut threshold = 0u128;
        match &corruption.mode {
            CorruptionMode::None => {}
            CorruptionMode::Planted(points) => {
                if let Some(bad) = points.iter().find(|p| p.len() != poly.n()) {
                    return Err(OracleError::PlantedDim(bad.to_string()));
                }
            }
            CorruptionMode::IidRate(rate) => {
                if rate > &Ratio::from_integer(1) {
                    return Err(OracleError::RateTooLarge(rate.to_string()));
                }
                threshold = ((*rate.numer() as u128) << 64) / (*rate.denom() as u128);
            }
        }
        if let ErrorValueModel::FixedOffset(o) = &corruption.values {
            if o.is_zero() || !o.belongs_to(poly.spec()) {
                return Err(OracleError::Instance("offset must be a nonzero element of the group".into()));
            }
        }
        Ok(CorruptedOracle { poly, corruption, seed, threshold, counter: AtomicU64::new(0) })
    }

    pub fn poly(&self) -> &MultilinearPoly {
        &self.poly
    }

    pub fn corruption(&self) -> &CorruptionSpec {
        &self.corruption
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn is_corrupted(&self, x: &CubePoint) -> bool {
        match &self.corruption.mode {
            CorruptionMode::None => false,
            CorruptionMode::Planted(points) => points.contains(x),
            CorruptionMode::IidRate(_) => (derive_rng(self.seed, salt::CORRUPTION, x.bits()).gen::<u64>() as u128) < self.threshold,
        }
    }
}

impl Oracle for CorruptedOracle {
    fn dim(&self) -> usize {
        self.poly.n()
    }
    fn spec(&self) -> &GroupSpec {
        self.poly.spec()
    }
    fn evaluate(&self, x: &CubePoint) -> GroupValue {
        let mut v = self.poly.eval_bits(x.bits());
        if self.is_corrupted(x) {
            match &self.corruption.values {
                ErrorValueModel::FixedOffset(o) => v.add_assign_ref(o),
                ErrorValueModel::RandomNonzero => {
                    let mut rng = derive_rng(self.seed, salt::CORRUPTION_VALUE, x.bits());
                    v.add_assign_ref(&self.poly.spec().sample_nonzero(&mut rng));
                }
            }
        }
        v
    }
    fn counter(&self) -> &AtomicU64 {
        &self.counter
    }
}

type EvalFn<'a> = Box<dyn Fn(&CubePoint) -> GroupValue + Send + Sync + 'a>;

/// An oracle computed by a procedure (typically a decoder querying another
/// oracle, whose own counter then accumulates the inner queries).
pub struct VirtualOracle<'a> {
    n: usize,
    spec: GroupSpec,
    eval: EvalFn<'a>,
    counter: AtomicU64,
}

impl<'a> VirtualOracle<'a> {
    pub fn new(n: usize, spec: GroupSpec, eval: impl Fn(&CubePoint) -> GroupValue + Send + Sync + 'a) -> Self {
        VirtualOracle { n, spec, eval: Box::new(eval), counter: AtomicU64::new(0) }
    }
}

impl Oracle for VirtualOracle<'_> {
    fn dim(&self) -> usize {
        self.n
    }
    fn spec(&self) -> &GroupSpec {
        &self.spec
    }
    fn evaluate(&self, x: &CubePoint) -> GroupValue {
        (self.eval)(x)
    }
    fn counter(&self) -> &AtomicU64 {
        &self.counter
    }
}

/// Forwards to another oracle with a private counter, so concurrent users of
/// a shared oracle can each measure their own queries.
pub struct CountingOracle<'a> {
    inner: &'a dyn Oracle,
    counter: AtomicU64,
}

impl<'a> CountingOracle<'a> {
    pub fn new(inner: &'a dyn Oracle) -> Self {
        CountingOracle { inner, counter: AtomicU64::new(0) }
    }
}

impl Oracle for CountingOracle<'_> {
    fn dim(&self) -> usize {
        self.inner.dim()
    }
    fn spec(&self) -> &GroupSpec {
        self.inner.spec()
    }
    fn evaluate(&self, x: &CubePoint) -> GroupValue {
        self.inner.fetch(x)
    }
    fn counter(&self) -> &AtomicU64 {
        &self.counter
    }
}

/// Uncounted full truth table of an oracle.
pub fn materialize(o: &dyn Oracle) -> Result<Vec<GroupValue>, OracleError> {
    let n = o.dim();
    if n > DEFAULT_ENUM_CAP {
        return Err(PolyError::OverCap(n, DEFAULT_ENUM_CAP).into());
    }
    Ok((0..1u64 << n).map(|i| o.evaluate(&CubePoint::from_index(i, n))).collect())
}

/// `size` points closest in Hamming distance to `target` (ties broken at
/// random): an error set clustered around the point being corrected.
pub fn cluster_error_set<R: Rng + ?Sized>(target: &CubePoint, size: usize, rng: &mut R) -> BTreeSet<CubePoint> {
    let n = target.len();
    assert!(n <= DEFAULT_ENUM_CAP);
    let mut by_dist: Vec<Vec<CubePoint>> = vec![Vec::new(); n + 1];
    for i in 0..1u64 << n {
        let p = CubePoint::from_index(i, n);
        by_dist[p.xor(target).weight()].push(p);
    }
    let mut out = BTreeSet::new();
    for mut layer in by_dist {
        if out.len() >= size {
            break;
        }
        layer.shuffle(rng);
        for p in layer.into_iter().take(size - out.len()) {
            out.insert(p);
        }
    }
    out
}

/// All points agreeing with `pattern` on the first `fixed` coordinates: an
/// error set of density 2^{-fixed} concentrated on one subcube.
pub fn subcube_error_set(n: usize, fixed: usize, pattern: u64) -> BTreeSet<CubePoint> {
    assert!(n <= DEFAULT_ENUM_CAP && fixed <= n);
    let mask = (1u64 << fixed) - 1;
    (0..1u64 << n).filter(|i| i & mask == pattern & mask).map(|i| CubePoint::from_index(i, n)).collect()
}

/// `size` distinct uniformly random points.
pub fn random_error_set<R: Rng + ?Sized>(n: usize, size: usize, rng: &mut R) -> BTreeSet<CubePoint> {
    assert!(n <= 63 && (size as u128) <= (1u128 << n));
    let mut out = BTreeSet::new();
    while out.len() < size {
        out.insert(CubePoint::from_index(rng.gen_range(0..1u64 << n), n));
    }
    out
}

/// A planted instance: polynomial, corruption and seed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub poly: MultilinearPoly,
    pub corruption: CorruptionSpec,
    pub seed: u64,
}

impl Instance {
    pub fn oracle(&self) -> Result<CorruptedOracle, OracleError> {
        CorruptedOracle::new(self.poly.clone(), self.corruption.clone(), self.seed)
    }

    /// Parses the line-based instance format (see `Display`).
    pub fn parse(text: &str) -> Result<Self, OracleError> {
        let mut fields = std::collections::HashMap::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (k, v) = line.split_once(':').ok_or_else(|| OracleError::Instance(format!("expected key: value, got {line:?}")))?;
            fields.insert(k.trim().to_string(), v.trim().to_string());
        }
        let get = |k: &str| fields.get(k).ok_or_else(|| OracleError::Instance(format!("missing field {k:?}")));
        let spec: GroupSpec = get("group")?.parse().map_err(|e: crate::groups::GroupError| OracleError::Instance(e.to_string()))?;
        let n: usize = get("n")?.parse().map_err(|_| OracleError::Instance("bad n".into()))?;
        let d: usize = get("d")?.parse().map_err(|_| OracleError::Instance("bad d".into()))?;
        let poly = MultilinearPoly::parse_terms(get("poly")?, n, d, &spec)?;
        let seed: u64 = match fields.get("seed") {
            Some(s) => s.parse().map_err(|_| OracleError::Instance("bad seed".into()))?,
            None => 0,
        };
        let corruption = fields.get("corruption").map(String::as_str).unwrap_or("none");
        let mode = if corruption == "none" {
            CorruptionMode::None
        } else if let Some(rest) = corruption.strip_prefix("iid") {
            let rate: Ratio<u64> = rest.trim().parse().map_err(|_| OracleError::Instance("bad rate".into()))?;
            CorruptionMode::IidRate(rate)
        } else if let Some(rest) = corruption.strip_prefix("planted") {
            let mut set = BTreeSet::new();
            for p in rest.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                set.insert(CubePoint::parse(p)?);
            }
            CorruptionMode::Planted(set)
        } else {
            return Err(OracleError::Instance(format!("unknown corruption {corruption:?}")));
        };
        let values = match fields.get("errors").map(String::as_str) {
            None => ErrorValueModel::FixedOffset(spec.unit()),
            Some("random") => ErrorValueModel::RandomNonzero,
            Some(s) => {
                let v = s.strip_prefix("offset").ok_or_else(|| OracleError::Instance(format!("bad errors field {s:?}")))?;
                ErrorValueModel::FixedOffset(spec.parse_value(v).map_err(|e| OracleError::Instance(e.to_string()))?)
            }
        };
        let inst = Instance { poly, corruption: CorruptionSpec { mode, values }, seed };
        inst.oracle()?;
        Ok(inst)
    }
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "group: {}", self.poly.spec())?;
        writeln!(f, "n: {}", self.poly.n())?;
        writeln!(f, "d: {}", self.poly.degree_bound())?;
        writeln!(f, "poly: {}", self.poly)?;
        match &self.corruption.mode {
            CorruptionMode::None => writeln!(f, "corruption: none")?,
            CorruptionMode::IidRate(r) => writeln!(f, "corruption: iid {r}")?,
            CorruptionMode::Planted(points) => {
                let list: Vec<String> = points.iter().map(|p| p.to_string()).collect();
                writeln!(f, "corruption: planted {}", list.join(","))?
            }
        }
        match &self.corruption.values {
            ErrorValueModel::FixedOffset(o) => writeln!(f, "errors: offset {o}")?,
            ErrorValueModel::RandomNonzero => writeln!(f, "errors: random")?,
        }
        writeln!(f, "seed: {}", self.seed)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::RandomModel;
    use crate::seeding::rng_from_seed;

    fn poly(n: usize) -> MultilinearPoly {
        let mut rng = rng_from_seed(11);
        MultilinearPoly::random(n, 2, &GroupSpec::Cyclic(3), RandomModel::UniformDense, &mut rng).unwrap()
    }

    #[test]
    fn clean_oracle_matches_poly_and_counts() {
        let p = poly(6);
        let o = make_corrupted_oracle(p.clone(), CorruptionSpec::none(p.spec()), 0).unwrap();
        let t = materialize(&o).unwrap();
        assert_eq!(t, p.truth_table().unwrap());
        assert_eq!(o.query_count(), 0);
        o.query(&CubePoint::zeros(6)).unwrap();
        o.query(&CubePoint::ones(6)).unwrap();
        assert_eq!(o.query_count(), 2);
        assert!(o.query(&CubePoint::zeros(5)).is_err());
    }

    #[test]
    fn planted_half_gives_distance_half() {
        let p = poly(6);
        let set = subcube_error_set(6, 1, 1);
        assert_eq!(set.len(), 32);
        let o = make_corrupted_oracle(p.clone(), CorruptionSpec::planted(set.clone(), p.spec()), 0).unwrap();
        let t = materialize(&o).unwrap();
        let clean = p.truth_table().unwrap();
        let diff = t.iter().zip(&clean).filter(|(a, b)| a != b).count();
        assert_eq!(diff, 32);
        for x in &set {
            assert_ne!(o.query(x).unwrap(), p.evaluate(x).unwrap());
        }
    }

    #[test]
    fn rate_above_one_is_rejected() {
        let p = poly(4);
        let c = CorruptionSpec::iid(Ratio::new(3, 2), p.spec());
        assert!(make_corrupted_oracle(p, c, 0).is_err());
    }

    #[test]
    fn cluster_set_is_a_ball() {
        let mut rng = rng_from_seed(1);
        let target = CubePoint::parse("1010").unwrap();
        let set = cluster_error_set(&target, 5, &mut rng);
        assert_eq!(set.len(), 5);
        assert!(set.iter().all(|p| p.xor(&target).weight() <= 1));
    }

    #[test]
    fn instance_round_trip() {
        let p = poly(5);
        let mut rng = rng_from_seed(2);
        for c in [
            CorruptionSpec::none(p.spec()),
            CorruptionSpec::iid(Ratio::new(1, 100), p.spec()),
            CorruptionSpec::planted(random_error_set(5, 4, &mut rng), p.spec()),
            CorruptionSpec { mode: CorruptionMode::None, values: ErrorValueModel::RandomNonzero },
        ] {
            let inst = Instance { poly: p.clone(), corruption: c, seed: 9 };
            let back = Instance::parse(&inst.to_string()).unwrap();
            assert_eq!(inst, back);
        }
    }

    #[test]
    fn virtual_oracle_forwards_counts() {
        let p = poly(4);
        let inner = make_corrupted_oracle(p.clone(), CorruptionSpec::none(p.spec()), 0).unwrap();
        let v = VirtualOracle::new(4, p.spec().clone(), |x| {
            let a = inner.fetch(x);
            let b = inner.fetch(x);
            &a + &b
        });
        v.query(&CubePoint::zeros(4)).unwrap();
        assert_eq!(v.query_count(), 1);
        assert_eq!(inner.query_count(), 2);
    }
}
