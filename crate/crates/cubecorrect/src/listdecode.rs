//! List decoding on small cubes and local list correction.
//!
//! [`build_advice`] restricts f to random k-dimensional subcubes C and
//! lists every degree-d polynomial close to each restriction, producing
//! triples (C, sigma, Q). For a triple, [`psi_evaluate`] answers a query b
//! by decoding f on the 2k-dimensional cube spanned by C and b and keeping
//! the candidate whose restriction to C is Q. Each Psi is then passed
//! through the unique corrector.

use std::collections::{BTreeMap, HashMap};
use std::sync::atomic::AtomicU64;
use std::sync::Arc;

use num_rational::Ratio;
use rand::Rng;
use serde::Serialize;
use thiserror::Error;

use crate::correct::{unique_local_correct_with, CorrectError, CorrectorConfig, SubConstantCorrector};
use crate::groups::{GroupSpec, GroupValue};
use crate::oracle::{CountingOracle, Oracle, VirtualOracle};
use crate::poly::{monomials_up_to, zeta_transform, CubePoint, Monomial, MultilinearPoly, PolyError};
use crate::seeding::{derive_rng, salt, split_seed};
use crate::subcube::{pairing_from_sigma, random_permutation, SpannedSubcube, SubcubeEmbedding, SubcubeError};

/// Largest cube dimension the list decoder accepts.
pub const MAX_LIST_DIM: usize = 16;

#[derive(Debug, Error)]
pub enum ListError {
    #[error("list has more than {0} polynomials")]
    ListCapExceeded(usize),
    #[error("search space exceeds the enumeration cap of {0}")]
    EnumerationCap(u128),
    #[error("exhaustive list decoding needs a finite group, got {0}; supply planted candidates")]
    InfiniteGroup(String),
    #[error("radius 1/2^d - epsilon/2 must be positive")]
    EmptyRadius,
    #[error("cube dimension {0} exceeds {MAX_LIST_DIM}")]
    TooLarge(usize),
    #[error("table has {got} entries, expected {expected}")]
    TableSize { expected: usize, got: usize },
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Subcube(#[from] SubcubeError),
    #[error(transparent)]
    Correct(#[from] CorrectError),
}

/// Canonical total order on polynomials: by their sorted term lists.
pub fn canonical_cmp(p: &MultilinearPoly, q: &MultilinearPoly) -> std::cmp::Ordering {
    p.terms().iter().cmp(q.terms().iter())
}

/// Number of disagreements allowed on a cube of dimension k at `radius`.
pub fn radius_budget(radius: Ratio<u64>, k: usize) -> u64 {
    ((*radius.numer() as u128) << k).checked_div(*radius.denom() as u128).unwrap_or(0) as u64
}

/// All polynomials of degree at most d within distance `radius` of the
/// table, in canonical order.
///
/// The search fixes the polynomial on the subcubes Y_i = {x : x_l = 0 for
/// l >= i} one variable at a time. Passing from Y_i to Y_{i+1} adds
/// x_i * D(x) with D of degree d-1 in i variables, and the disagreements on
/// the new half are those between D and f(x + e_i) - P(x), so D is found by
/// the same procedure one degree lower under the remaining budget.
pub fn brute_force_list_decode(
    table: &[GroupValue],
    k: usize,
    d: usize,
    radius: Ratio<u64>,
    spec: &GroupSpec,
    cap: usize,
) -> Result<Vec<MultilinearPoly>, ListError> {
    if k > MAX_LIST_DIM {
        return Err(ListError::TooLarge(k));
    }
    if table.len() != 1usize << k {
        return Err(ListError::TableSize { expected: 1usize << k, got: table.len() });
    }
    let elements = spec.elements().ok_or_else(|| ListError::InfiniteGroup(spec.to_string()))?;
    let budget = radius_budget(radius, k);
    let mut out = Vec::new();
    for (terms, _) in list_rec(table, k, d, budget, &elements, cap)? {
        out.push(MultilinearPoly::from_terms(k, d, spec.clone(), terms.into_iter().map(|(m, c)| (Monomial(m), c)))?);
    }
    out.sort_by(canonical_cmp);
    if out.len() > cap {
        return Err(ListError::ListCapExceeded(cap));
    }
    Ok(out)
}

type Terms = Vec<(u128, GroupValue)>;

fn list_rec(
    table: &[GroupValue],
    j: usize,
    d: usize,
    budget: u64,
    elements: &[GroupValue],
    cap: usize,
) -> Result<Vec<(Terms, u64)>, ListError> {
    let size = 1u64 << j;
    if d == 0 || j == 0 {
        let mut counts: HashMap<&GroupValue, u64> = HashMap::new();
        for v in table {
            *counts.entry(v).or_insert(0) += 1;
        }
        let mut out = Vec::new();
        for e in elements {
            let err = size - counts.get(e).copied().unwrap_or(0);
            if err <= budget {
                let terms = if e.is_zero() { vec![] } else { vec![(0u128, e.clone())] };
                out.push((terms, err));
            }
        }
        return Ok(out);
    }
    let mut out = Vec::new();
    for (terms, err) in list_rec(&table[..1], 0, d, budget, elements, cap)? {
        let base = vec![terms.first().map_or_else(|| elements[0].clone(), |t| t.1.clone())];
        extend(table, j, d, budget, elements, cap, 0, base, terms, err, &mut out)?;
    }
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn extend(
    table: &[GroupValue],
    j: usize,
    d: usize,
    budget: u64,
    elements: &[GroupValue],
    cap: usize,
    i: usize,
    values: Vec<GroupValue>,
    terms: Terms,
    err: u64,
    out: &mut Vec<(Terms, u64)>,
) -> Result<(), ListError> {
    if i == j {
        out.push((terms, err));
        // Intermediate lists are bounded by the same cap, scaled for the
        // lower-degree searches, to keep runaway enumerations in check.
        if out.len() > cap.saturating_mul(1 << 12) {
            return Err(ListError::EnumerationCap(out.len() as u128));
        }
        return Ok(());
    }
    let half = 1usize << i;
    let g: Vec<GroupValue> = (0..half).map(|x| &table[x | half] - &values[x]).collect();
    for (dterms, derr) in list_rec(&g, i, d - 1, budget - err, elements, cap)? {
        let mut delta = vec![elements[0].clone(); half];
        for (m, c) in &dterms {
            delta[*m as usize] = c.clone();
        }
        zeta_transform(&mut delta, i);
        let mut next = values.clone();
        next.extend(values.iter().zip(&delta).map(|(p, q)| p + q));
        let mut next_terms = terms.clone();
        next_terms.extend(dterms.into_iter().map(|(m, c)| (m | half as u128, c)));
        extend(table, j, d, budget, elements, cap, i + 1, next, next_terms, err + derr, out)?;
    }
    Ok(())
}

/// Planted-candidate mode: the supplied candidates (already on the same
/// cube) that lie within `radius` of the table, in canonical order.
pub fn planted_list_decode(
    table: &[GroupValue],
    candidates: &[MultilinearPoly],
    radius: Ratio<u64>,
) -> Result<Vec<MultilinearPoly>, ListError> {
    let mut out = Vec::new();
    for c in candidates {
        let k = c.n();
        if table.len() != 1usize << k {
            return Err(ListError::TableSize { expected: 1usize << k, got: table.len() });
        }
        let errs = c.truth_table()?.iter().zip(table).filter(|(x, y)| x != y).count() as u64;
        if errs <= radius_budget(radius, k) && !out.contains(c) {
            out.push(c.clone());
        }
    }
    out.sort_by(canonical_cmp);
    Ok(out)
}

/// Which route Psi uses to find the candidates consistent with Q.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PsiRoute {
    /// Enumerate the polynomials R on the spanned cube with R|_C = Q and
    /// keep those within the radius.
    Fiber,
    /// List every polynomial within the radius, then keep those with
    /// R|_C = Q.
    FullList,
}

#[derive(Debug, Clone, Serialize)]
pub struct ListConfig {
    pub d: usize,
    pub epsilon: Ratio<u64>,
    /// Dimension of the subcubes sampled by the advice algorithm.
    pub k_list: usize,
    /// Number of advice iterations.
    pub ell: usize,
    /// Largest list any brute-force decoding may return.
    pub list_cap: usize,
    /// Largest coefficient space the fiber route may enumerate.
    pub enum_cap: u128,
    pub seed: u64,
    /// Parameters of the unique corrector composed with each Psi.
    pub a_const: u32,
    pub er_stages: Vec<usize>,
    pub route: PsiRoute,
    /// Candidate polynomials on the full cube (planted-candidate mode).
    #[serde(skip)]
    pub planted: Option<Vec<MultilinearPoly>>,
}

impl ListConfig {
    pub fn new(d: usize, epsilon: Ratio<u64>, k_list: usize, ell: usize, seed: u64) -> Self {
        ListConfig {
            d,
            epsilon,
            k_list,
            ell,
            list_cap: 64,
            enum_cap: 1 << 20,
            seed,
            a_const: 4,
            er_stages: Vec::new(),
            route: PsiRoute::Fiber,
            planted: None,
        }
    }

    /// 1/2^d - epsilon/2.
    pub fn radius(&self) -> Result<Ratio<u64>, ListError> {
        let base = Ratio::new(1u64, 1u64 << self.d);
        let half_eps = self.epsilon / 2;
        if half_eps >= base {
            return Err(ListError::EmptyRadius);
        }
        Ok(base - half_eps)
    }

    fn list(&self, table: &[GroupValue], cube: &SubcubeEmbedding, spec: &GroupSpec) -> Result<Vec<MultilinearPoly>, ListError> {
        let k = cube.dim();
        match &self.planted {
            Some(cands) => {
                let restricted = cands.iter().map(|p| p.restrict_to_subcube(cube)).collect::<Result<Vec<_>, _>>()?;
                planted_list_decode(table, &restricted, self.radius()?)
            }
            None => brute_force_list_decode(table, k, self.d, self.radius()?, spec, self.list_cap),
        }
    }
}

/// (C, sigma, Q): a subcube, a permutation of [2k] and a listed
/// polynomial on C.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AdviceTriple {
    pub cube: SubcubeEmbedding,
    pub sigma: Vec<usize>,
    pub q: MultilinearPoly,
}

#[derive(Debug, Clone, Serialize)]
pub struct Advice {
    pub triples: Vec<AdviceTriple>,
    /// List size found in each iteration.
    pub list_sizes: Vec<usize>,
    pub queries: u64,
}

/// The advice algorithm: `ell` random subcubes of dimension k_list, each
/// listed at radius 1/2^d - epsilon/2, each paired with a random sigma.
pub fn build_advice(f: &dyn Oracle, cfg: &ListConfig) -> Result<Advice, ListError> {
    if cfg.k_list > MAX_LIST_DIM / 2 {
        return Err(ListError::TooLarge(2 * cfg.k_list));
    }
    let counted = CountingOracle::new(f);
    let mut triples = Vec::new();
    let mut list_sizes = Vec::new();
    for it in 0..cfg.ell {
        let mut rng = derive_rng(cfg.seed, salt::ADVICE, it as u128);
        let a = CubePoint::random(f.dim(), &mut rng);
        let cube = SubcubeEmbedding::sample_uniform(a, cfg.k_list, &mut rng)?;
        let table: Vec<GroupValue> = cube.lift_all().iter().map(|x| counted.fetch(x)).collect();
        let list = cfg.list(&table, &cube, f.spec())?;
        let sigma = random_permutation(2 * cfg.k_list, &mut rng);
        list_sizes.push(list.len());
        for q in list {
            triples.push(AdviceTriple { cube: cube.clone(), sigma: sigma.clone(), q });
        }
    }
    Ok(Advice { triples, list_sizes, queries: counted.query_count() })
}

/// Polynomials R of degree at most d on {0,1}^{2k} whose restriction
/// z_c = y_{rho(c)} equals Q, in canonical order.
pub fn fiber(q: &MultilinearPoly, rho: &[usize], d: usize, enum_cap: u128) -> Result<Vec<MultilinearPoly>, ListError> {
    let spec = q.spec().clone();
    let elements = spec.elements().ok_or_else(|| ListError::InfiniteGroup(spec.to_string()))?;
    let two_k = rho.len();
    let mut groups: BTreeMap<u128, Vec<Monomial>> = BTreeMap::new();
    for m in monomials_up_to(two_k, d) {
        let image = m.vars().fold(0u128, |acc, c| acc | 1u128 << rho[c]);
        groups.entry(image).or_default().push(m);
    }
    let free: Vec<Monomial> = groups.values().flat_map(|ms| ms[1..].iter().copied()).collect();
    let space = (elements.len() as u128).checked_pow(free.len() as u32);
    match space {
        Some(s) if s <= enum_cap => {}
        _ => return Err(ListError::EnumerationCap(enum_cap)),
    }
    let mut out = Vec::new();
    let mut digits = vec![0usize; free.len()];
    loop {
        let assigned: HashMap<Monomial, &GroupValue> = free.iter().zip(&digits).map(|(m, &i)| (*m, &elements[i])).collect();
        let mut terms = Vec::new();
        for (image, ms) in &groups {
            let mut head = q.coeff(Monomial(*image));
            for m in &ms[1..] {
                let v = assigned[m];
                head.sub_assign_ref(v);
                terms.push((*m, v.clone()));
            }
            terms.push((ms[0], head));
        }
        out.push(MultilinearPoly::from_terms(two_k, d, spec.clone(), terms)?);
        // Mixed-radix increment.
        let mut pos = 0;
        loop {
            if pos == digits.len() {
                out.sort_by(canonical_cmp);
                return Ok(out);
            }
            digits[pos] += 1;
            if digits[pos] < elements.len() {
                break;
            }
            digits[pos] = 0;
            pos += 1;
        }
    }
}

/// Outcome of one Psi evaluation with diagnostics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PsiOutcome {
    pub value: GroupValue,
    /// Number of candidates consistent with Q within the radius.
    pub consistent: usize,
    /// Whether consistent candidates disagree at w.
    pub collision: bool,
}

/// Psi[C, sigma, Q](b): decode f on the spanned cube C' with x(w) = b and
/// return R(w) for the canonically least candidate R with R|_C = Q, or zero
/// if there is none.
pub fn psi_evaluate(f: &dyn Oracle, triple: &AdviceTriple, b: &CubePoint, cfg: &ListConfig) -> Result<PsiOutcome, ListError> {
    let span = SpannedSubcube::new(&triple.cube, b, &triple.sigma)?;
    let cube = span.cube();
    let table: Vec<GroupValue> = cube.lift_all().iter().map(|x| f.fetch(x)).collect();
    let rho = pairing_from_sigma(&triple.sigma);
    let inner = CubePoint::zeros(2 * triple.cube.dim());
    let k = triple.cube.dim();
    let consistent: Vec<MultilinearPoly> = match (&cfg.planted, cfg.route) {
        (None, PsiRoute::Fiber) => {
            let radius = cfg.radius()?;
            let budget = radius_budget(radius, 2 * k);
            let mut keep = Vec::new();
            for r in fiber(&triple.q, &rho, cfg.d, cfg.enum_cap)? {
                let errs = r.truth_table()?.iter().zip(&table).filter(|(x, y)| x != y).count() as u64;
                if errs <= budget {
                    keep.push(r);
                }
            }
            if keep.len() > cfg.list_cap {
                return Err(ListError::ListCapExceeded(cfg.list_cap));
            }
            keep
        }
        _ => {
            let mut keep = Vec::new();
            for r in cfg.list(&table, cube, f.spec())? {
                if r.restrict(&inner, &rho, k)? == triple.q {
                    keep.push(r);
                }
            }
            keep
        }
    };
    let w = span.w();
    let values: Vec<GroupValue> = consistent.iter().map(|r| r.evaluate(w)).collect::<Result<_, _>>()?;
    let value = values.first().cloned().unwrap_or_else(|| f.spec().zero());
    let collision = values.iter().any(|v| *v != value);
    Ok(PsiOutcome { value, consistent: consistent.len(), collision })
}

/// Psi for one triple as an oracle.
pub struct PsiOracle<'a> {
    f: &'a dyn Oracle,
    triple: &'a AdviceTriple,
    cfg: &'a ListConfig,
    counter: AtomicU64,
}

impl<'a> PsiOracle<'a> {
    pub fn new(f: &'a dyn Oracle, triple: &'a AdviceTriple, cfg: &'a ListConfig) -> Self {
        PsiOracle { f, triple, cfg, counter: AtomicU64::new(0) }
    }
}

impl Oracle for PsiOracle<'_> {
    fn dim(&self) -> usize {
        self.f.dim()
    }
    fn spec(&self) -> &GroupSpec {
        self.f.spec()
    }
    fn evaluate(&self, x: &CubePoint) -> GroupValue {
        psi_evaluate(self.f, self.triple, x, self.cfg).expect("Psi evaluation within configured caps").value
    }
    fn counter(&self) -> &AtomicU64 {
        &self.counter
    }
}

/// One output of the local list corrector: Psi for a triple composed with
/// the unique corrector.
pub struct ListOracle<'a> {
    f: &'a dyn Oracle,
    triple: AdviceTriple,
    cfg: Arc<ListConfig>,
    corrector: Arc<SubConstantCorrector>,
    unique: CorrectorConfig,
    counter: AtomicU64,
}

impl ListOracle<'_> {
    pub fn triple(&self) -> &AdviceTriple {
        &self.triple
    }
}

impl Oracle for ListOracle<'_> {
    fn dim(&self) -> usize {
        self.f.dim()
    }
    fn spec(&self) -> &GroupSpec {
        self.f.spec()
    }
    fn evaluate(&self, x: &CubePoint) -> GroupValue {
        let psi = PsiOracle::new(self.f, &self.triple, &self.cfg);
        unique_local_correct_with(&self.corrector, &psi, x, &self.unique).expect("validated configuration").value
    }
    fn counter(&self) -> &AtomicU64 {
        &self.counter
    }
}

pub struct LocalListCorrection<'a> {
    pub advice: Advice,
    pub oracles: Vec<ListOracle<'a>>,
}

/// Runs the advice algorithm and wraps every triple as a corrected oracle.
/// Returns at most ell * list_cap oracles.
pub fn local_list_correct<'a>(f: &'a dyn Oracle, cfg: &ListConfig) -> Result<LocalListCorrection<'a>, ListError> {
    let advice = build_advice(f, cfg)?;
    let corrector = Arc::new(SubConstantCorrector::new(f.dim(), cfg.d, cfg.a_const)?);
    let shared = Arc::new(cfg.clone());
    let oracles = advice
        .triples
        .iter()
        .enumerate()
        .map(|(i, t)| {
            let unique = CorrectorConfig {
                d: cfg.d,
                a_const: cfg.a_const,
                epsilon: 0.0,
                er_stages: cfg.er_stages.clone(),
                seed: split_seed(split_seed(cfg.seed, 1), i as u64),
            };
            unique.validate()?;
            Ok(ListOracle { f, triple: t.clone(), cfg: shared.clone(), corrector: corrector.clone(), unique, counter: AtomicU64::new(0) })
        })
        .collect::<Result<Vec<_>, ListError>>()?;
    Ok(LocalListCorrection { advice, oracles })
}

/// Fraction of `inputs` on which `oracle` agrees with `p`, stopping early
/// once the fraction can no longer reach `threshold`.
pub fn agreement(oracle: &dyn Oracle, p: &MultilinearPoly, inputs: &[CubePoint], threshold: Ratio<u64>) -> Ratio<u64> {
    let total = inputs.len() as u64;
    let allowed = total - (threshold * total).ceil().to_integer().min(total);
    let mut wrong = 0u64;
    for x in inputs {
        if oracle.fetch(x) != p.eval_bits(x.bits()) {
            wrong += 1;
            if wrong > allowed {
                return Ratio::new(total - wrong, total.max(1));
            }
        }
    }
    Ratio::new(total - wrong, total.max(1))
}

/// Index of an output oracle computing `p` on at least `threshold` of
/// `inputs`, if any. Oracles whose advice restricts `p` exactly are tried
/// first; the answer does not depend on the order.
pub fn find_computing_oracle(
    result: &LocalListCorrection<'_>,
    p: &MultilinearPoly,
    inputs: &[CubePoint],
    threshold: Ratio<u64>,
) -> Result<Option<usize>, ListError> {
    let mut order: Vec<(bool, usize)> = Vec::new();
    for (i, o) in result.oracles.iter().enumerate() {
        let matches = p.restrict_to_subcube(&o.triple.cube)? == o.triple.q;
        order.push((!matches, i));
    }
    order.sort();
    Ok(order.into_iter().map(|(_, i)| i).find(|&i| agreement(&result.oracles[i], p, inputs, threshold) >= threshold))
}

/// Agrees with every polynomial wherever they all agree; elsewhere takes
/// the value of one of them chosen by a seeded coin at each point.
pub fn stitched_oracle(polys: &[MultilinearPoly], seed: u64) -> Result<VirtualOracle<'_>, ListError> {
    let first = polys.first().ok_or(ListError::TableSize { expected: 1, got: 0 })?;
    let (n, spec) = (first.n(), first.spec().clone());
    Ok(VirtualOracle::new(n, spec, move |x| {
        let values: Vec<GroupValue> = polys.iter().map(|p| p.eval_bits(x.bits())).collect();
        if values.iter().all(|v| *v == values[0]) {
            return values[0].clone();
        }
        let pick = derive_rng(seed, salt::CORRUPTION, x.bits()).gen_range(0..values.len());
        values[pick].clone()
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{CorruptedOracle, CorruptionSpec};
    use crate::poly::RandomModel;
    use crate::seeding::rng_from_seed;
    use num_traits::Zero;

    fn z2() -> GroupSpec {
        GroupSpec::cyclic(2).unwrap()
    }

    fn naive_list(table: &[GroupValue], k: usize, d: usize, radius: Ratio<u64>, spec: &GroupSpec) -> Vec<MultilinearPoly> {
        let monos = monomials_up_to(k, d);
        let els = spec.elements().unwrap();
        let budget = radius_budget(radius, k);
        let mut out = Vec::new();
        let total = els.len().pow(monos.len() as u32);
        for code in 0..total {
            let mut rest = code;
            let terms: Vec<(Monomial, GroupValue)> = monos
                .iter()
                .map(|m| {
                    let v = els[rest % els.len()].clone();
                    rest /= els.len();
                    (*m, v)
                })
                .collect();
            let p = MultilinearPoly::from_terms(k, d, spec.clone(), terms).unwrap();
            let errs = (0..1u128 << k).filter(|&x| p.eval_bits(x) != table[x as usize]).count() as u64;
            if errs <= budget {
                out.push(p);
            }
        }
        out.sort_by(canonical_cmp);
        out
    }

    #[test]
    fn list_matches_naive_scan() {
        let mut rng = rng_from_seed(1);
        for (spec, k, d) in [(z2(), 4, 1), (z2(), 4, 2), (GroupSpec::cyclic(3).unwrap(), 3, 1), (z2(), 3, 3)] {
            for _ in 0..5 {
                let table: Vec<GroupValue> = (0..1 << k).map(|_| spec.sample(&mut rng)).collect();
                for radius in [Ratio::new(0, 1), Ratio::new(1, 4), Ratio::new(3, 8), Ratio::new(1, 2)] {
                    let fast = brute_force_list_decode(&table, k, d, radius, &spec, 1 << 20).unwrap();
                    assert_eq!(fast, naive_list(&table, k, d, radius, &spec), "{spec} k={k} d={d} r={radius}");
                }
            }
        }
    }

    #[test]
    fn stitched_function_lists_both_halves() {
        let spec = z2();
        // x1 where x3 = 0 and x2 where x3 = 1.
        let table: Vec<GroupValue> = (0..16u32)
            .map(|x| {
                let v = if x >> 2 & 1 == 0 { x & 1 } else { x >> 1 & 1 };
                spec.parse_value(&v.to_string()).unwrap()
            })
            .collect();
        let radius = Ratio::new(1, 2) - Ratio::new(1, 10);
        let list = brute_force_list_decode(&table, 4, 1, radius, &spec, 64).unwrap();
        let x1 = MultilinearPoly::parse_terms("x1", 4, 1, &spec).unwrap();
        let x2 = MultilinearPoly::parse_terms("x2", 4, 1, &spec).unwrap();
        assert!(list.contains(&x1) && list.contains(&x2));
    }

    #[test]
    fn radius_zero_lists_only_exact_polynomial() {
        let spec = z2();
        let p = MultilinearPoly::parse_terms("x1*x2 + x3 + 1", 3, 2, &spec).unwrap();
        let table = p.truth_table().unwrap();
        assert_eq!(brute_force_list_decode(&table, 3, 2, Ratio::zero(), &spec, 8).unwrap(), vec![p]);
        assert!(brute_force_list_decode(&table, 3, 1, Ratio::zero(), &spec, 8).unwrap().is_empty());
        assert!(brute_force_list_decode(&table, 3, 1, Ratio::zero(), &GroupSpec::Integers, 8).is_err());
    }

    #[test]
    fn fiber_restricts_to_q() {
        let mut rng = rng_from_seed(2);
        for (spec, d) in [(GroupSpec::cyclic(3).unwrap(), 1), (z2(), 2)] {
            let q = MultilinearPoly::random(3, d, &spec, RandomModel::UniformDense, &mut rng).unwrap();
            let sigma = random_permutation(6, &mut rng);
            let rho = pairing_from_sigma(&sigma);
            let rs = fiber(&q, &rho, d, 1 << 24).unwrap();
            assert!(!rs.is_empty());
            for r in &rs {
                assert_eq!(r.restrict(&CubePoint::zeros(6), &rho, 3).unwrap(), q);
            }
        }
    }

    #[test]
    fn psi_on_clean_oracle_returns_p() {
        let spec = z2();
        let mut rng = rng_from_seed(3);
        let p = MultilinearPoly::random(12, 1, &spec, RandomModel::UniformDense, &mut rng).unwrap();
        let f = CorruptedOracle::new(p.clone(), CorruptionSpec::none(&spec), 0).unwrap();
        let cfg = ListConfig::new(1, Ratio::new(1, 5), 3, 2, 9);
        let advice = build_advice(&f, &cfg).unwrap();
        assert_eq!(advice.queries, 2 * 8);
        let good: Vec<&AdviceTriple> = advice.triples.iter().filter(|t| t.q == p.restrict_to_subcube(&t.cube).unwrap()).collect();
        assert_eq!(good.len(), 2);
        let mut full = cfg.clone();
        full.route = PsiRoute::FullList;
        for _ in 0..10 {
            let b = CubePoint::random(12, &mut rng);
            assert_eq!(psi_evaluate(&f, good[0], &b, &cfg).unwrap().value, p.evaluate(&b).unwrap());
            assert_eq!(psi_evaluate(&f, good[0], &b, &full).unwrap().value, p.evaluate(&b).unwrap());
        }
        let mut bogus = good[0].clone();
        bogus.q = bogus.q.add(&MultilinearPoly::parse_terms("1", 3, 1, &spec).unwrap()).unwrap();
        let b = CubePoint::random(12, &mut rng);
        let out = psi_evaluate(&f, &bogus, &b, &cfg).unwrap();
        assert_eq!((out.value, out.consistent), (spec.zero(), 0));
    }
}
