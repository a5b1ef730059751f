//! Multilinear polynomials of bounded degree over an Abelian group.
//!
//! Variables are 0-indexed internally. The text format is 1-indexed
//! (`x1` is variable 0) to match the usual mathematical notation.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_rational::Ratio;
use rand::seq::index::sample as sample_indices;
use rand::Rng;
use serde::Serialize;
use thiserror::Error;

use crate::groups::{GroupError, GroupSpec, GroupValue};
use crate::subcube::SubcubeEmbedding;

/// Largest supported cube dimension (points are packed into a `u128`).
pub const MAX_DIM: usize = 128;

/// Largest dimension for which full truth tables are enumerated by default.
pub const DEFAULT_ENUM_CAP: usize = 24;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimMismatch { expected: usize, got: usize },
    #[error("dimension {0} exceeds the enumeration cap {1}")]
    OverCap(usize, usize),
    #[error("monomial of degree {0} exceeds the degree bound {1}")]
    DegreeTooLarge(usize, usize),
    #[error("variable index {0} out of range for n = {1}")]
    VarOutOfRange(usize, usize),
    #[error("zero polynomial has no leading monomial")]
    ZeroPolynomial,
    #[error("infeasible parameters: {0}")]
    Infeasible(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// A point of {0,1}^len, bit i is coordinate i.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CubePoint {
    bits: u128,
    len: u8,
}

impl CubePoint {
    pub fn zeros(len: usize) -> Self {
        assert!(len <= MAX_DIM, "dimension {len} exceeds {MAX_DIM}");
        CubePoint { bits: 0, len: len as u8 }
    }

    pub fn ones(len: usize) -> Self {
        Self::from_bits(mask_of_len(len), len)
    }

    /// Builds a point from the low `len` bits of `bits`.
    pub fn from_bits(bits: u128, len: usize) -> Self {
        assert!(len <= MAX_DIM, "dimension {len} exceeds {MAX_DIM}");
        CubePoint { bits: bits & mask_of_len(len), len: len as u8 }
    }

    pub fn from_index(index: u64, len: usize) -> Self {
        Self::from_bits(index as u128, len)
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn bits(&self) -> u128 {
        self.bits
    }

    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len());
        (self.bits >> i) & 1 == 1
    }

    pub fn set(&mut self, i: usize, v: bool) {
        assert!(i < self.len());
        if v {
            self.bits |= 1u128 << i;
        } else {
            self.bits &= !(1u128 << i);
        }
    }

    pub fn weight(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn xor(&self, other: &CubePoint) -> CubePoint {
        assert_eq!(self.len, other.len, "dimension mismatch");
        CubePoint { bits: self.bits ^ other.bits, len: self.len }
    }

    /// Index into a truth table of length 2^len.
    pub fn index(&self) -> usize {
        self.bits as usize
    }

    pub fn support(&self) -> Monomial {
        Monomial(self.bits)
    }

    pub fn random<R: Rng + ?Sized>(len: usize, rng: &mut R) -> Self {
        Self::from_bits(rng.gen::<u128>(), len)
    }

    /// Parses a string of '0'/'1' characters; character i is coordinate i.
    pub fn parse(s: &str) -> Result<Self, PolyError> {
        let s = s.trim();
        if s.len() > MAX_DIM {
            return Err(PolyError::Parse(format!("point longer than {MAX_DIM}")));
        }
        let mut p = CubePoint::zeros(s.len());
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => p.set(i, true),
                _ => return Err(PolyError::Parse(format!("bad bit {c:?} in point"))),
            }
        }
        Ok(p)
    }
}

impl fmt::Display for CubePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len() {
            write!(f, "{}", if self.get(i) { '1' } else { '0' })?;
        }
        Ok(())
    }
}

impl Serialize for CubePoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

pub(crate) fn mask_of_len(len: usize) -> u128 {
    if len >= 128 {
        u128::MAX
    } else {
        (1u128 << len) - 1
    }
}

/// A multilinear monomial, stored as the bitmask of its variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(pub u128);

impl Monomial {
    pub const ONE: Monomial = Monomial(0);

    pub fn from_vars(vars: &[usize]) -> Self {
        let mut m = 0u128;
        for &v in vars {
            assert!(v < MAX_DIM);
            m |= 1u128 << v;
        }
        Monomial(m)
    }

    pub fn degree(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(&self, v: usize) -> bool {
        (self.0 >> v) & 1 == 1
    }

    pub fn is_subset_of(&self, other: Monomial) -> bool {
        self.0 & !other.0 == 0
    }

    /// Variable indices in increasing order.
    pub fn vars(&self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(v)
            }
        })
    }

    pub fn max_var(&self) -> Option<usize> {
        (self.0 != 0).then(|| 127 - self.0.leading_zeros() as usize)
    }

    /// Graded lexicographic comparison: higher degree wins; at equal degree
    /// the monomial containing the least differing variable is larger.
    pub fn graded_cmp(&self, other: &Monomial) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {
                let diff = self.0 ^ other.0;
                if diff == 0 {
                    Ordering::Equal
                } else if self.0 & (diff & diff.wrapping_neg()) != 0 {
                    Ordering::Greater
                } else {
                    Ordering::Less
                }
            }
            o => o,
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return write!(f, "1");
        }
        for (i, v) in self.vars().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            write!(f, "x{}", v + 1)?;
        }
        Ok(())
    }
}

/// All monomials in `n` variables of degree at most `d`, ordered by degree
/// then by mask.
pub fn monomials_up_to(n: usize, d: usize) -> Vec<Monomial> {
    let mut out = vec![Monomial::ONE];
    let mut layer = vec![Monomial::ONE];
    for _ in 0..d.min(n) {
        let mut next = Vec::new();
        for m in &layer {
            let start = m.max_var().map_or(0, |v| v + 1);
            for v in start..n {
                next.push(Monomial(m.0 | (1u128 << v)));
            }
        }
        out.extend_from_slice(&next);
        layer = next;
    }
    out
}

/// Degree-bounded multilinear polynomial in canonical form (no zero
/// coefficients stored).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultilinearPoly {
    n: usize,
    d: usize,
    spec: GroupSpec,
    terms: BTreeMap<Monomial, GroupValue>,
}

impl MultilinearPoly {
    pub fn zero(n: usize, d: usize, spec: GroupSpec) -> Self {
        assert!(n <= MAX_DIM);
        MultilinearPoly { n, d, spec, terms: BTreeMap::new() }
    }

    /// Builds a polynomial from (monomial, coefficient) pairs, summing
    /// repeated monomials and dropping zeros.
    pub fn from_terms<I>(n: usize, d: usize, spec: GroupSpec, terms: I) -> Result<Self, PolyError>
    where
        I: IntoIterator<Item = (Monomial, GroupValue)>,
    {
        if n > MAX_DIM {
            return Err(PolyError::OverCap(n, MAX_DIM));
        }
        let mut map: BTreeMap<Monomial, GroupValue> = BTreeMap::new();
        for (m, c) in terms {
            if let Some(v) = m.max_var() {
                if v >= n {
                    return Err(PolyError::VarOutOfRange(v, n));
                }
            }
            if !c.belongs_to(&spec) {
                return Err(GroupError::SpecMismatch(spec.to_string(), c.spec().to_string()).into());
            }
            match map.get_mut(&m) {
                Some(acc) => acc.add_assign_ref(&c),
                None => {
                    map.insert(m, c);
                }
            }
        }
        map.retain(|_, c| !c.is_zero());
        if let Some(m) = map.keys().find(|m| m.degree() > d) {
            return Err(PolyError::DegreeTooLarge(m.degree(), d));
        }
        Ok(MultilinearPoly { n, d, spec, terms: map })
    }

    /// Single monomial with the given coefficient.
    pub fn monomial(n: usize, d: usize, m: Monomial, c: GroupValue) -> Result<Self, PolyError> {
        let spec = c.spec();
        Self::from_terms(n, d, spec, [(m, c)])
    }

    pub fn constant(n: usize, d: usize, c: GroupValue) -> Self {
        let spec = c.spec();
        Self::from_terms(n, d, spec, [(Monomial::ONE, c)]).expect("constant is always valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree_bound(&self) -> usize {
        self.d
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, GroupValue> {
        &self.terms
    }

    pub fn coeff(&self, m: Monomial) -> GroupValue {
        self.terms.get(&m).cloned().unwrap_or_else(|| self.spec.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn sparsity(&self) -> usize {
        self.terms.len()
    }

    /// Largest degree of a stored monomial; 0 for the zero polynomial.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    /// Same polynomial with a different degree bound (must still hold).
    pub fn with_degree_bound(&self, d: usize) -> Result<Self, PolyError> {
        if self.degree() > d {
            return Err(PolyError::DegreeTooLarge(self.degree(), d));
        }
        Ok(MultilinearPoly { d, ..self.clone() })
    }

    pub fn evaluate(&self, x: &CubePoint) -> Result<GroupValue, PolyError> {
        if x.len() != self.n {
            return Err(PolyError::DimMismatch { expected: self.n, got: x.len() });
        }
        Ok(self.eval_bits(x.bits()))
    }

    /// Evaluation at the point whose coordinates are the bits of `bits`.
    pub fn eval_bits(&self, bits: u128) -> GroupValue {
        let mut acc = self.spec.zero();
        for (m, c) in &self.terms {
            if m.0 & !bits == 0 {
                acc.add_assign_ref(c);
            }
        }
        acc
    }

    fn check_compatible(&self, other: &Self) -> Result<(), PolyError> {
        if self.n != other.n {
            return Err(PolyError::DimMismatch { expected: self.n, got: other.n });
        }
        if self.spec != other.spec {
            return Err(GroupError::SpecMismatch(self.spec.to_string(), other.spec.to_string()).into());
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_compatible(other)?;
        let d = self.d.max(other.d);
        let terms = self.terms.iter().chain(other.terms.iter()).map(|(m, c)| (*m, c.clone()));
        Self::from_terms(self.n, d, self.spec.clone(), terms)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_compatible(other)?;
        let d = self.d.max(other.d);
        let terms = self.terms.iter().map(|(m, c)| (*m, c.clone())).chain(other.terms.iter().map(|(m, c)| (*m, c.neg())));
        Self::from_terms(self.n, d, self.spec.clone(), terms)
    }

    pub fn neg(&self) -> Self {
        MultilinearPoly { n: self.n, d: self.d, spec: self.spec.clone(), terms: self.terms.iter().map(|(m, c)| (*m, c.neg())).collect() }
    }

    /// The graded-lex maximal monomial with a nonzero coefficient.
    pub fn leading_monomial(&self) -> Result<Monomial, PolyError> {
        self.terms.keys().copied().max_by(|a, b| a.graded_cmp(b)).ok_or(PolyError::ZeroPolynomial)
    }

    /// Substitutes x_i = y_{h(i)} xor a_i and re-multilinearizes.
    pub fn restrict(&self, a: &CubePoint, h: &[usize], k: usize) -> Result<Self, PolyError> {
        if a.len() != self.n || h.len() != self.n {
            return Err(PolyError::DimMismatch { expected: self.n, got: a.len().min(h.len()) });
        }
        if let Some(&bad) = h.iter().find(|&&j| j >= k) {
            return Err(PolyError::VarOutOfRange(bad, k));
        }
        let mut acc: HashMap<Monomial, GroupValue> = HashMap::new();
        for (m, c) in &self.terms {
            // Per target variable: positive factors y_j and negated factors (1 - y_j).
            let mut pos = 0u128;
            let mut negs = 0u128;
            for i in m.vars() {
                let bit = 1u128 << h[i];
                if a.get(i) {
                    negs |= bit;
                } else {
                    pos |= bit;
                }
            }
            if pos & negs != 0 {
                continue;
            }
            // prod_{j in pos} y_j * prod_{j in negs} (1 - y_j)
            let mut sub = negs;
            loop {
                let mono = Monomial(pos | sub);
                let coeff = if sub.count_ones() % 2 == 1 { c.neg() } else { c.clone() };
                match acc.get_mut(&mono) {
                    Some(v) => v.add_assign_ref(&coeff),
                    None => {
                        acc.insert(mono, coeff);
                    }
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & negs;
            }
        }
        Self::from_terms(k, self.d, self.spec.clone(), acc)
    }

    pub fn restrict_to_subcube(&self, c: &SubcubeEmbedding) -> Result<Self, PolyError> {
        self.restrict(c.base(), c.hash(), c.dim())
    }

    /// Full truth table, indexed by `CubePoint::index`.
    pub fn truth_table(&self) -> Result<Vec<GroupValue>, PolyError> {
        if self.n > DEFAULT_ENUM_CAP {
            return Err(PolyError::OverCap(self.n, DEFAULT_ENUM_CAP));
        }
        let mut table = vec![self.spec.zero(); 1usize << self.n];
        for (m, c) in &self.terms {
            table[m.0 as usize] = c.clone();
        }
        zeta_transform(&mut table, self.n);
        Ok(table)
    }

    /// Unique multilinear representation of a full truth table, provided it
    /// has degree at most `d`.
    pub fn from_truth_table(table: &[GroupValue], n: usize, d: usize, spec: GroupSpec) -> Result<Self, PolyError> {
        if table.len() != 1usize << n {
            return Err(PolyError::DimMismatch { expected: 1usize << n, got: table.len() });
        }
        let mut coeffs = table.to_vec();
        mobius_transform(&mut coeffs, n);
        let terms = coeffs.into_iter().enumerate().map(|(i, c)| (Monomial(i as u128), c));
        Self::from_terms(n, d, spec, terms)
    }

    /// Number of weight-k points where the polynomial is nonzero.
    pub fn slice_nonzero_count(&self, k: usize) -> Result<u64, PolyError> {
        if self.n > DEFAULT_ENUM_CAP {
            return Err(PolyError::OverCap(self.n, DEFAULT_ENUM_CAP));
        }
        if k > self.n {
            return Ok(0);
        }
        let mut count = 0;
        for_each_weight(self.n, k, |bits| {
            if !self.eval_bits(bits as u128).is_zero() {
                count += 1;
            }
        });
        Ok(count)
    }

    /// Parses the body of the text format, e.g. `2 + 3*x1 - 1*x1*x3`.
    pub fn parse_terms(s: &str, n: usize, d: usize, spec: &GroupSpec) -> Result<Self, PolyError> {
        let mut terms = Vec::new();
        let normalized = s.replace('-', "+-");
        for raw in normalized.split('+') {
            let t = raw.trim();
            if t.is_empty() {
                continue;
            }
            let (neg, t) = match t.strip_prefix('-') {
                Some(rest) => (true, rest.trim()),
                None => (false, t),
            };
            let mut coeff: Option<GroupValue> = None;
            let mut vars = Vec::new();
            for f in t.split('*').map(str::trim) {
                if let Some(idx) = f.strip_prefix('x') {
                    let i: usize = idx.parse().map_err(|_| PolyError::Parse(format!("bad variable {f:?}")))?;
                    if i == 0 || i > n {
                        return Err(PolyError::VarOutOfRange(i, n));
                    }
                    vars.push(i - 1);
                } else if coeff.is_none() {
                    coeff = Some(spec.parse_value(f)?);
                } else {
                    return Err(PolyError::Parse(format!("two coefficients in term {t:?}")));
                }
            }
            let mut c = coeff.unwrap_or_else(|| spec.unit());
            if neg {
                c = c.neg();
            }
            let m = Monomial::from_vars(&vars);
            if m.degree() != vars.len() {
                return Err(PolyError::Parse(format!("repeated variable in term {t:?}")));
            }
            terms.push((m, c));
        }
        Self::from_terms(n, d, spec.clone(), terms)
    }

    pub fn random<R: Rng + ?Sized>(n: usize, d: usize, spec: &GroupSpec, model: RandomModel, rng: &mut R) -> Result<Self, PolyError> {
        let monos = monomials_up_to(n, d);
        match model {
            RandomModel::UniformDense => {
                let terms: Vec<_> = monos.into_iter().map(|m| (m, spec.sample(rng))).collect();
                Self::from_terms(n, d, spec.clone(), terms)
            }
            RandomModel::Sparsity(s) => {
                if s > monos.len() {
                    return Err(PolyError::Infeasible(format!("sparsity {s} exceeds {} monomials", monos.len())));
                }
                if s > 0 && spec.order() == Some(1) {
                    return Err(PolyError::Infeasible("trivial group".into()));
                }
                let picks = sample_indices(rng, monos.len(), s);
                let terms: Vec<_> = picks.into_iter().map(|i| (monos[i], spec.sample_nonzero(rng))).collect();
                Self::from_terms(n, d, spec.clone(), terms)
            }
        }
    }
}

/// Sampling models for random polynomials.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RandomModel {
    /// Every monomial of degree <= d gets an independent uniform coefficient
    /// (for infinite groups, the bounded sampler of `GroupSpec::sample`).
    UniformDense,
    /// Exactly s monomials with nonzero coefficients.
    Sparsity(usize),
}

/// A batch of `t` polynomials whose leading monomials are pairwise disjoint:
/// polynomial i has leading monomial on variables [i*d, (i+1)*d) and random
/// lower-degree terms over all variables.
pub fn random_disjoint_lm_batch<R: Rng + ?Sized>(
    n: usize,
    d: usize,
    t: usize,
    spec: &GroupSpec,
    lower_terms: usize,
    rng: &mut R,
) -> Result<Vec<MultilinearPoly>, PolyError> {
    if d == 0 || t * d > n {
        return Err(PolyError::Infeasible(format!("need d >= 1 and t*d <= n (t={t}, d={d}, n={n})")));
    }
    let lower = if d >= 1 { monomials_up_to(n, d - 1) } else { Vec::new() };
    let mut out = Vec::with_capacity(t);
    for i in 0..t {
        let lm = Monomial::from_vars(&(i * d..(i + 1) * d).collect::<Vec<_>>());
        let mut terms = vec![(lm, spec.sample_nonzero(rng))];
        let picks = sample_indices(rng, lower.len(), lower_terms.min(lower.len()));
        for p in picks {
            terms.push((lower[p], spec.sample(rng)));
        }
        out.push(MultilinearPoly::from_terms(n, d, spec.clone(), terms)?);
    }
    Ok(out)
}

/// Relative Hamming distance between two polynomials on {0,1}^n.
pub fn distance(p: &MultilinearPoly, q: &MultilinearPoly) -> Result<Ratio<u64>, PolyError> {
    p.check_compatible(q)?;
    let diff = p.sub(q)?;
    let t = diff.truth_table()?;
    let count = t.iter().filter(|v| !v.is_zero()).count() as u64;
    Ok(Ratio::new(count, t.len() as u64))
}

/// Fraction of positions where two tables differ.
pub fn table_distance(a: &[GroupValue], b: &[GroupValue]) -> Ratio<u64> {
    assert_eq!(a.len(), b.len());
    let count = a.iter().zip(b).filter(|(x, y)| x != y).count() as u64;
    Ratio::new(count, a.len() as u64)
}

/// In-place subset-sum transform: coefficient table -> value table.
pub fn zeta_transform(table: &mut [GroupValue], n: usize) {
    for i in 0..n {
        let bit = 1usize << i;
        for x in 0..table.len() {
            if x & bit != 0 {
                let (lo, hi) = table.split_at_mut(x);
                hi[0].add_assign_ref(&lo[x ^ bit]);
            }
        }
    }
}

/// Inverse of [`zeta_transform`].
pub fn mobius_transform(table: &mut [GroupValue], n: usize) {
    for i in 0..n {
        let bit = 1usize << i;
        for x in 0..table.len() {
            if x & bit != 0 {
                let (lo, hi) = table.split_at_mut(x);
                hi[0].sub_assign_ref(&lo[x ^ bit]);
            }
        }
    }
}

/// Calls `f` on every n-bit mask of popcount k, in increasing order.
pub fn for_each_weight(n: usize, k: usize, mut f: impl FnMut(u64)) {
    assert!(n <= 63);
    if k > n {
        return;
    }
    if k == 0 {
        f(0);
        return;
    }
    let mut x: u64 = (1u64 << k) - 1;
    let limit = 1u64 << n;
    while x < limit {
        f(x);
        let c = x & x.wrapping_neg();
        let r = x + c;
        x = (((r ^ x) >> 2) / c) | r;
    }
}

impl fmt::Display for MultilinearPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut ordered: Vec<_> = self.terms.iter().collect();
        ordered.sort_by(|a, b| a.0.degree().cmp(&b.0.degree()).then(a.0.cmp(b.0)));
        for (i, (m, c)) in ordered.into_iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if m.0 == 0 {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}*{m}")?;
            }
        }
        Ok(())
    }
}

impl Serialize for MultilinearPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn int(v: i64) -> GroupValue {
        GroupValue::Int(BigInt::from(v))
    }

    fn z2(v: u64) -> GroupValue {
        GroupValue::Mod { value: v, modulus: 2 }
    }

    #[test]
    fn evaluate_examples() {
        let p = MultilinearPoly::parse_terms("x1*x2", 4, 2, &GroupSpec::Integers).unwrap();
        assert_eq!(p.evaluate(&CubePoint::parse("1100").unwrap()).unwrap(), int(1));
        let zero = MultilinearPoly::zero(3, 1, GroupSpec::Integers);
        assert_eq!(zero.evaluate(&CubePoint::parse("101").unwrap()).unwrap(), int(0));
        let p = MultilinearPoly::parse_terms("2 + 3*x1 - 1*x1*x3", 3, 2, &GroupSpec::Integers).unwrap();
        assert_eq!(p.evaluate(&CubePoint::parse("101").unwrap()).unwrap(), int(4));
        assert!(p.evaluate(&CubePoint::parse("10").unwrap()).is_err());
    }

    #[test]
    fn sub_sparsity_degree() {
        let p = MultilinearPoly::parse_terms("x1 + x2*x3", 3, 2, &GroupSpec::Integers).unwrap();
        assert!(p.sub(&p).unwrap().is_zero());
        assert_eq!(p.sparsity(), 2);
        assert_eq!(MultilinearPoly::zero(3, 2, GroupSpec::Integers).degree(), 0);
    }

    #[test]
    fn restriction_collapses_in_z2() {
        let p = MultilinearPoly::parse_terms("x1 + x2", 2, 1, &GroupSpec::Cyclic(2)).unwrap();
        let q = p.restrict(&CubePoint::zeros(2), &[0, 0], 1).unwrap();
        assert!(q.is_zero());
    }

    #[test]
    fn identity_restriction() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let p = MultilinearPoly::random(5, 2, &GroupSpec::Integers, RandomModel::UniformDense, &mut rng).unwrap();
        let q = p.restrict(&CubePoint::zeros(5), &[0, 1, 2, 3, 4], 5).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn distance_examples() {
        let spec = GroupSpec::Cyclic(2);
        for d in 1..=4 {
            let m = Monomial::from_vars(&(0..d).collect::<Vec<_>>());
            let p = MultilinearPoly::monomial(d, d, m, z2(1)).unwrap();
            let zero = MultilinearPoly::zero(d, d, spec.clone());
            assert_eq!(distance(&p, &zero).unwrap(), Ratio::new(1, 1u64 << d));
        }
        let p = MultilinearPoly::parse_terms("x1", 1, 1, &spec).unwrap();
        let q = MultilinearPoly::parse_terms("1 + x1", 1, 1, &spec).unwrap();
        assert_eq!(distance(&p, &q).unwrap(), Ratio::new(1, 1));
    }

    #[test]
    fn leading_monomial_examples() {
        let spec = GroupSpec::Integers;
        let p = MultilinearPoly::parse_terms("x1*x3 + x2", 4, 2, &spec).unwrap();
        assert_eq!(p.leading_monomial().unwrap(), Monomial::from_vars(&[0, 2]));
        let p = MultilinearPoly::parse_terms("x1*x4 + x2*x3", 4, 2, &spec).unwrap();
        assert_eq!(p.leading_monomial().unwrap(), Monomial::from_vars(&[0, 3]));
        let p = MultilinearPoly::parse_terms("7", 4, 2, &spec).unwrap();
        assert_eq!(p.leading_monomial().unwrap(), Monomial::ONE);
        assert!(MultilinearPoly::zero(2, 1, spec).leading_monomial().is_err());
    }

    #[test]
    fn slice_examples() {
        let p = MultilinearPoly::parse_terms("x1 - x2", 4, 1, &GroupSpec::Integers).unwrap();
        assert_eq!(p.slice_nonzero_count(2).unwrap(), 4);
        let c = MultilinearPoly::parse_terms("3", 5, 1, &GroupSpec::Integers).unwrap();
        assert_eq!(c.slice_nonzero_count(2).unwrap(), 10);
        // x1 + x2 + x3 - 2 vanishes on the weight-2 slice of {0,1}^3.
        let v = MultilinearPoly::parse_terms("x1 + x2 + x3 - 2", 3, 1, &GroupSpec::Integers).unwrap();
        assert_eq!(v.slice_nonzero_count(2).unwrap(), 0);
    }

    #[test]
    fn random_models() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let p = MultilinearPoly::random(4, 2, &GroupSpec::Cyclic(3), RandomModel::Sparsity(0), &mut rng).unwrap();
        assert!(p.is_zero());
        let p = MultilinearPoly::random(4, 2, &GroupSpec::Cyclic(3), RandomModel::Sparsity(5), &mut rng).unwrap();
        assert_eq!(p.sparsity(), 5);
        assert!(MultilinearPoly::random(2, 1, &GroupSpec::Cyclic(3), RandomModel::Sparsity(4), &mut rng).is_err());
        let batch = random_disjoint_lm_batch(12, 2, 5, &GroupSpec::Cyclic(5), 4, &mut rng).unwrap();
        for i in 0..batch.len() {
            for j in 0..i {
                let a = batch[i].leading_monomial().unwrap();
                let b = batch[j].leading_monomial().unwrap();
                assert_eq!(a.0 & b.0, 0);
            }
        }
    }

    #[test]
    fn truth_table_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let p = MultilinearPoly::random(6, 3, &GroupSpec::Rationals, RandomModel::UniformDense, &mut rng).unwrap();
        let t = p.truth_table().unwrap();
        let q = MultilinearPoly::from_truth_table(&t, 6, 3, GroupSpec::Rationals).unwrap();
        assert_eq!(p, q);
        for (i, v) in t.iter().enumerate() {
            assert_eq!(*v, p.eval_bits(i as u128));
        }
    }

    #[test]
    fn text_round_trip() {
        let spec: GroupSpec = "Z%2 x Z%3".parse().unwrap();
        let p = MultilinearPoly::parse_terms("(1,2)*x1*x3 + (0,1) + (1,1)*x2", 3, 2, &spec).unwrap();
        let q = MultilinearPoly::parse_terms(&p.to_string(), 3, 2, &spec).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn weight_enumeration() {
        let mut seen = Vec::new();
        for_each_weight(5, 2, |x| seen.push(x));
        assert_eq!(seen.len(), 10);
        assert!(seen.windows(2).all(|w| w[0] < w[1]));
        assert!(seen.iter().all(|x| x.count_ones() == 2));
    }
}
