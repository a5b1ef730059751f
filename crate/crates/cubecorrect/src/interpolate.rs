//! Weight-balanced interpolating sets, integral interpolation coefficients
//! and the slice coefficients used by the torsion corrector.
//!
//! Points of {0,1}^k are split into m = k/r blocks of r = 10(d+1)
//! coordinates. Block i (1-indexed) occupies coordinates (i-1)r..ir and
//! every coordinate in it has weight 2^(i-1). The set is built by the
//! recursion S_{l,j} = union over j' of {(z, b) : b in S_{l-1,j-j'},
//! z in H(lo_b, j')}, where the new block z becomes block 1 and the blocks
//! of b move up by one.

use std::collections::{BTreeSet, HashMap};
use std::rc::Rc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::groups::GroupValue;
use crate::poly::{for_each_weight, monomials_up_to, CubePoint, Monomial, MAX_DIM};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InterpolateError {
    #[error("k = {k} must be a positive multiple of 10(d+1) = {r}")]
    Divisibility { k: usize, r: usize },
    #[error("k = {0} exceeds the supported dimension")]
    TooLarge(usize),
    #[error("target has dimension {0}, expected {1}")]
    DimMismatch(usize, usize),
    #[error("integer overflow while computing interpolation coefficients")]
    Overflow,
    #[error("no integral solution exists")]
    NoSolution,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("invalid argument: {0}")]
    Invalid(String),
}

/// The set S together with its weights.
#[derive(Debug, Clone, Serialize)]
pub struct WeightedInterpolatingSet {
    d: usize,
    k: usize,
    r: usize,
    m: usize,
    t: u64,
    weights: Vec<u64>,
    total_weight: u64,
    points: Vec<CubePoint>,
    #[serde(skip)]
    index: HashMap<u128, usize>,
}

/// Balance report for a set: the largest |sum w y - W/2| over S.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BalanceReport {
    pub max_deviation: u64,
    pub slack: u64,
    pub pass: bool,
}

pub fn build_interpolating_set(d: usize, k: usize) -> Result<WeightedInterpolatingSet, InterpolateError> {
    let r = 10 * (d + 1);
    if k == 0 || !k.is_multiple_of(r) {
        return Err(InterpolateError::Divisibility { k, r });
    }
    if k > MAX_DIM {
        return Err(InterpolateError::TooLarge(k));
    }
    let m = k / r;
    let t = d.div_ceil(2) as u64;
    let weights: Vec<u64> = (0..k).map(|c| 1u64 << (c / r)).collect();
    let total_weight = weights.iter().sum();
    let layout = Layout { r, t };
    let mut memo = HashMap::new();
    let raw = layout.level_points(m, d, &mut memo);
    let points: Vec<CubePoint> = raw.iter().map(|&b| CubePoint::from_bits(b, k)).collect();
    let index = raw.iter().enumerate().map(|(i, &b)| (b, i)).collect();
    Ok(WeightedInterpolatingSet { d, k, r, m, t, weights, total_weight, points, index })
}

impl WeightedInterpolatingSet {
    pub fn d(&self) -> usize {
        self.d
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn block_size(&self) -> usize {
        self.r
    }

    pub fn blocks(&self) -> usize {
        self.m
    }

    /// The slack t = ceil(d/2).
    pub fn slack(&self) -> u64 {
        self.t
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn total_weight(&self) -> u64 {
        self.total_weight
    }

    /// Points in increasing order of their bit encoding.
    pub fn points(&self) -> &[CubePoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn position(&self, p: &CubePoint) -> Option<usize> {
        self.index.get(&p.bits()).copied()
    }

    /// The bound (2(r+1))^d * m^d on |S|.
    pub fn size_bound(&self) -> u128 {
        ((2 * (self.r as u128 + 1)) * self.m as u128).pow(self.d as u32)
    }

    pub fn weighted_sum(&self, y: &CubePoint) -> u64 {
        y.support().vars().map(|c| self.weights[c]).sum()
    }

    pub fn balance(&self) -> BalanceReport {
        let half = self.total_weight / 2;
        let max_deviation = self.points.iter().map(|y| self.weighted_sum(y).abs_diff(half)).max().unwrap_or(0);
        BalanceReport { max_deviation, slack: self.t, pass: max_deviation <= self.t }
    }

    /// Integers c_u (aligned with [`points`](Self::points)) such that
    /// sum_u c_u Q(u) = Q(b) for every polynomial Q of degree at most d.
    pub fn interpolation_coefficients(&self, b: &CubePoint) -> Result<Vec<BigInt>, InterpolateError> {
        self.interpolator().coefficients(b)
    }

    /// A solver that caches intermediate results across targets.
    pub fn interpolator(&self) -> Interpolator<'_> {
        Interpolator { set: self, layout: Layout { r: self.r, t: self.t }, memo: HashMap::new() }
    }

    /// The 0/1 matrix with rows indexed by monomials of degree at most d
    /// (in [`monomials_up_to`] order) and columns by the points of S.
    pub fn monomial_matrix(&self) -> (Vec<Monomial>, Vec<Vec<BigInt>>) {
        let rows = monomials_up_to(self.k, self.d);
        let mat =
            rows.iter().map(|mono| self.points.iter().map(|u| BigInt::from(mono.is_subset_of(u.support()) as u8)).collect()).collect();
        (rows, mat)
    }

    /// Coefficients obtained by solving the monomial system through its
    /// Smith normal form. Only practical for small sets.
    pub fn interpolation_coefficients_snf(&self, b: &CubePoint) -> Result<Vec<BigInt>, InterpolateError> {
        self.check_target(b)?;
        let (rows, mat) = self.monomial_matrix();
        let rhs: Vec<BigInt> = rows.iter().map(|mono| BigInt::from(mono.is_subset_of(b.support()) as u8)).collect();
        integer_solve(&mat, &rhs).ok_or(InterpolateError::NoSolution)
    }

    /// Exact check of sum_u c_u m(u) = m(b) for every monomial m of degree
    /// at most d.
    pub fn moment_identity_holds(&self, b: &CubePoint, c: &[BigInt]) -> bool {
        if c.len() != self.points.len() || b.len() != self.k {
            return false;
        }
        let support: Vec<(u128, &BigInt)> = self.points.iter().zip(c).filter(|(_, c)| !c.is_zero()).map(|(u, c)| (u.bits(), c)).collect();
        monomials_up_to(self.k, self.d).into_iter().all(|mono| {
            let lhs: BigInt = support.iter().filter(|(u, _)| mono.0 & !u == 0).map(|(_, c)| *c).sum();
            let rhs = BigInt::from(mono.is_subset_of(b.support()) as u8);
            lhs == rhs
        })
    }

    /// sum_u c_u * values[u].
    pub fn combine(&self, c: &[BigInt], values: &[GroupValue]) -> GroupValue {
        assert_eq!(c.len(), values.len());
        let mut iter = c.iter().zip(values).filter(|(c, _)| !c.is_zero());
        let mut acc = match iter.next() {
            Some((c, v)) => v.int_scale(c),
            None => return values.first().map(|v| v.spec().zero()).expect("nonempty set"),
        };
        for (c, v) in iter {
            acc.add_assign_ref(&v.int_scale(c));
        }
        acc
    }

    fn check_target(&self, b: &CubePoint) -> Result<(), InterpolateError> {
        if b.len() != self.k {
            return Err(InterpolateError::DimMismatch(b.len(), self.k));
        }
        Ok(())
    }
}

/// Block geometry shared by the set construction and the solver.
#[derive(Debug, Clone, Copy)]
struct Layout {
    r: usize,
    t: u64,
}

impl Layout {
    fn block_mask(&self) -> u128 {
        if self.r == 128 {
            u128::MAX
        } else {
            (1u128 << self.r) - 1
        }
    }

    /// Lowest admissible weight lo_b = r/2 - 2 tau - t of a new block placed
    /// in front of b, a point of `level` blocks.
    fn lo(&self, level: usize, b: u128) -> usize {
        let r = self.r as i64;
        let mut weighted = 0i64;
        for i in 0..level {
            let block = (b >> (i * self.r)) & self.block_mask();
            weighted += (block.count_ones() as i64) << i;
        }
        let half = r * ((1i64 << level) - 1) / 2;
        let tau = weighted - half;
        let lo = r / 2 - 2 * tau - self.t as i64;
        debug_assert!(lo >= 0 && lo + 2 * self.t as i64 <= r, "balance invariant broken");
        lo as usize
    }

    /// The first `lo` coordinates of the block outside `a`.
    fn filler(&self, a: u128, lo: usize) -> u128 {
        let mut out = 0u128;
        let mut left = lo;
        let mut c = 0;
        while left > 0 {
            if a >> c & 1 == 0 {
                out |= 1u128 << c;
                left -= 1;
            }
            c += 1;
        }
        out
    }

    fn level_points(&self, level: usize, j: usize, memo: &mut HashMap<(usize, usize), Rc<Vec<u128>>>) -> Rc<Vec<u128>> {
        if level == 0 {
            return Rc::new(vec![0]);
        }
        if let Some(p) = memo.get(&(level, j)) {
            return p.clone();
        }
        let mut out = BTreeSet::new();
        for jp in 0..=j {
            let subsets = subsets_up_to(self.block_mask(), jp);
            for &b in self.level_points(level - 1, j - jp, memo).iter() {
                let lo = self.lo(level - 1, b);
                for &a in &subsets {
                    let fill = self.filler(a, lo);
                    for_each_submask(a, |x| {
                        out.insert(x | fill | b << self.r);
                    });
                }
            }
        }
        let pts = Rc::new(out.into_iter().collect::<Vec<_>>());
        memo.insert((level, j), pts.clone());
        pts
    }
}

type Sparse = Rc<Vec<(u128, i128)>>;

/// Constructive solver for the interpolation coefficients.
///
/// Write Q(z, y) = sum_A z^A Q_A(y) with z the first block. For a target
/// (z_t, b_t), Q(z_t, b_t) = sum over A within supp z_t of Q_A(b_t). Each
/// Q_A(b_t) is interpolated one level down from the values Q_A(b') on
/// b' in S_{l-1, j-|A|}, and Q_A(b') is the alternating sum of Q over the
/// points of H(lo_b', |A|) with pattern A, minus the terms Q_A''(b') for the
/// strict supersets A'' of A that the filler block also covers. Those
/// supersets have larger |A|, so processing by |A| terminates.
pub struct Interpolator<'a> {
    set: &'a WeightedInterpolatingSet,
    layout: Layout,
    memo: HashMap<(usize, usize, u128), Sparse>,
}

impl Interpolator<'_> {
    pub fn coefficients(&mut self, b: &CubePoint) -> Result<Vec<BigInt>, InterpolateError> {
        self.set.check_target(b)?;
        let sparse = self.solve(self.set.m, self.set.d, b.bits())?;
        let mut out = vec![BigInt::zero(); self.set.points.len()];
        for &(u, c) in sparse.iter() {
            let pos = *self.set.index.get(&u).expect("solver only uses points of S");
            out[pos] = BigInt::from(c);
        }
        Ok(out)
    }

    fn solve(&mut self, level: usize, j: usize, target: u128) -> Result<Sparse, InterpolateError> {
        if level == 0 {
            return Ok(Rc::new(vec![(0, 1)]));
        }
        if let Some(v) = self.memo.get(&(level, j, target)) {
            return Ok(v.clone());
        }
        let r = self.layout.r;
        let z = target & self.layout.block_mask();
        let rest = target >> r;
        let mut layers: Vec<HashMap<(u128, u128), i128>> = vec![HashMap::new(); j + 1];
        let mut out: HashMap<u128, i128> = HashMap::new();
        for a in subsets_up_to(z, j) {
            self.push_component(level, j, a, rest, 1, &mut layers)?;
        }
        for size in 0..=j {
            let mut layer: Vec<((u128, u128), i128)> = std::mem::take(&mut layers[size]).into_iter().collect();
            layer.sort_unstable();
            for ((a, bp), w) in layer {
                if w == 0 {
                    continue;
                }
                let fill = self.layout.filler(a, self.layout.lo(level - 1, bp));
                let mut err = false;
                for_each_submask(a, |x| {
                    let sign = if (a ^ x).count_ones() % 2 == 0 { w } else { -w };
                    let e = out.entry(x | fill | bp << r).or_insert(0);
                    match e.checked_add(sign) {
                        Some(v) => *e = v,
                        None => err = true,
                    }
                });
                if err {
                    return Err(InterpolateError::Overflow);
                }
                for extra in subsets_up_to(fill, j - size) {
                    if extra != 0 {
                        self.push_component(level, j, a | extra, bp, -w, &mut layers)?;
                    }
                }
            }
        }
        let mut v: Vec<(u128, i128)> = out.into_iter().filter(|&(_, c)| c != 0).collect();
        v.sort_unstable();
        let v = Rc::new(v);
        self.memo.insert((level, j, target), v.clone());
        Ok(v)
    }

    /// Adds `w` times the functional for Q_A(b) to the pending layers.
    fn push_component(
        &mut self,
        level: usize,
        j: usize,
        a: u128,
        b: u128,
        w: i128,
        layers: &mut [HashMap<(u128, u128), i128>],
    ) -> Result<(), InterpolateError> {
        let size = a.count_ones() as usize;
        let lower = self.solve(level - 1, j - size, b)?;
        let layer = &mut layers[size];
        for &(bp, c) in lower.iter() {
            let add = w.checked_mul(c).ok_or(InterpolateError::Overflow)?;
            let e = layer.entry((a, bp)).or_insert(0);
            *e = e.checked_add(add).ok_or(InterpolateError::Overflow)?;
        }
        Ok(())
    }
}

/// All submasks of `mask` with at most `max` bits set, in increasing
/// popcount order.
fn subsets_up_to(mask: u128, max: usize) -> Vec<u128> {
    let bits: Vec<u128> = (0..128).filter(|&c| mask >> c & 1 == 1).map(|c| 1u128 << c).collect();
    let mut out = vec![0u128];
    let mut layer = vec![(0u128, 0usize)];
    for _ in 0..max.min(bits.len()) {
        let mut next = Vec::new();
        for &(s, start) in &layer {
            for (i, &bit) in bits.iter().enumerate().skip(start) {
                next.push((s | bit, i + 1));
            }
        }
        out.extend(next.iter().map(|&(s, _)| s));
        layer = next;
    }
    out
}

fn for_each_submask(mask: u128, mut f: impl FnMut(u128)) {
    let mut s = mask;
    loop {
        f(s);
        if s == 0 {
            break;
        }
        s = (s - 1) & mask;
    }
}

/// Smith normal form U * M * V = D of an integer matrix, with U and V
/// unimodular. Pivots are chosen as the smallest nonzero entry in absolute
/// value to limit coefficient growth.
#[derive(Debug, Clone)]
pub struct SmithForm {
    pub u: Vec<Vec<BigInt>>,
    pub diagonal: Vec<BigInt>,
    pub v: Vec<Vec<BigInt>>,
}

pub fn smith_normal_form(m: &[Vec<BigInt>]) -> SmithForm {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let mut u = identity(rows);
    let mut v = identity(cols);
    let mut diagonal = Vec::new();
    for p in 0..rows.min(cols) {
        loop {
            let Some((pi, pj)) = smallest_entry(&a, p) else {
                return SmithForm { u, diagonal, v };
            };
            a.swap(p, pi);
            u.swap(p, pi);
            swap_cols(&mut a, p, pj);
            swap_cols(&mut v, p, pj);
            let mut clean = true;
            for i in p + 1..rows {
                if a[i][p].is_zero() {
                    continue;
                }
                let q = a[i][p].div_floor(&a[p][p]);
                row_axpy(&mut a, i, p, &q);
                row_axpy(&mut u, i, p, &q);
                clean &= a[i][p].is_zero();
            }
            for j in p + 1..cols {
                if a[p][j].is_zero() {
                    continue;
                }
                let q = a[p][j].div_floor(&a[p][p]);
                col_axpy(&mut a, j, p, &q);
                col_axpy(&mut v, j, p, &q);
                clean &= a[p][j].is_zero();
            }
            if !clean {
                continue;
            }
            // Divisibility: fold any row whose entry the pivot does not
            // divide into the pivot row and reduce again.
            let pivot = a[p][p].clone();
            let bad = (p + 1..rows).find(|&i| (p + 1..cols).any(|j| !a[i][j].is_multiple_of(&pivot)));
            match bad {
                Some(i) => {
                    row_axpy(&mut a, p, i, &BigInt::from(-1));
                    row_axpy(&mut u, p, i, &BigInt::from(-1));
                }
                None => break,
            }
        }
        if a[p][p].is_negative() {
            for x in a[p].iter_mut() {
                *x = -x.clone();
            }
            for x in u[p].iter_mut() {
                *x = -x.clone();
            }
        }
        diagonal.push(a[p][p].clone());
    }
    SmithForm { u, diagonal, v }
}

/// An integral c with M c = beta, or `None` when no integral solution
/// exists.
pub fn integer_solve(m: &[Vec<BigInt>], beta: &[BigInt]) -> Option<Vec<BigInt>> {
    let rows = m.len();
    assert_eq!(beta.len(), rows, "right-hand side length must match the row count");
    let cols = m.first().map_or(0, Vec::len);
    let snf = smith_normal_form(m);
    let ub: Vec<BigInt> = snf.u.iter().map(|row| row.iter().zip(beta).map(|(x, y)| x * y).sum()).collect();
    let mut y = vec![BigInt::zero(); cols];
    for (i, target) in ub.iter().enumerate() {
        match snf.diagonal.get(i) {
            Some(dv) if !dv.is_zero() => {
                let (q, rem) = target.div_rem(dv);
                if !rem.is_zero() {
                    return None;
                }
                y[i] = q;
            }
            _ => {
                if !target.is_zero() {
                    return None;
                }
            }
        }
    }
    Some((0..cols).map(|i| snf.v[i].iter().zip(&y).map(|(x, y)| x * y).sum()).collect())
}

fn identity(n: usize) -> Vec<Vec<BigInt>> {
    (0..n).map(|i| (0..n).map(|j| BigInt::from((i == j) as u8)).collect()).collect()
}

fn smallest_entry(a: &[Vec<BigInt>], p: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, BigInt)> = None;
    for (i, row) in a.iter().enumerate().skip(p) {
        for (j, x) in row.iter().enumerate().skip(p) {
            if x.is_zero() {
                continue;
            }
            let ax = x.abs();
            if best.as_ref().is_none_or(|(_, _, b)| ax < *b) {
                let one = ax.is_one();
                best = Some((i, j, ax));
                if one {
                    return best.map(|(i, j, _)| (i, j));
                }
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

fn swap_cols(a: &mut [Vec<BigInt>], i: usize, j: usize) {
    if i != j {
        for row in a.iter_mut() {
            row.swap(i, j);
        }
    }
}

/// row_i -= q * row_p
fn row_axpy(a: &mut [Vec<BigInt>], i: usize, p: usize, q: &BigInt) {
    let (src, dst) = if i < p {
        let (lo, hi) = a.split_at_mut(p);
        (&hi[0], &mut lo[i])
    } else {
        let (lo, hi) = a.split_at_mut(i);
        (&lo[p], &mut hi[0])
    };
    for (d, s) in dst.iter_mut().zip(src.iter()) {
        if !s.is_zero() {
            *d -= q * s;
        }
    }
}

/// col_j -= q * col_p
fn col_axpy(a: &mut [Vec<BigInt>], j: usize, p: usize, q: &BigInt) {
    for row in a.iter_mut() {
        if !row[p].is_zero() {
            let delta = q * &row[p];
            row[j] -= delta;
        }
    }
}

/// Coefficients on the weight-k slice of {0,1}^{2k} that reproduce Q(0) for
/// every degree-d polynomial over a group of exponent dividing M.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SliceCoefficients {
    pub d: usize,
    pub exponent: u64,
    /// (p_j, r_j, s_j) for each prime power in the factorization of M.
    pub factors: Vec<(u64, u32, u32)>,
    pub k: usize,
    pub a: u64,
}

pub fn slice_coefficients(d: usize, exponent: u64) -> Result<SliceCoefficients, InterpolateError> {
    if exponent < 2 {
        return Err(InterpolateError::Invalid(format!("exponent must be at least 2, got {exponent}")));
    }
    let mut factors = Vec::new();
    let mut k: u64 = 1;
    for (p, r) in factorize(exponent) {
        let pr = p.checked_pow(r).ok_or_else(|| InterpolateError::Invalid("exponent too large".into()))?;
        let mut s = 1u32;
        let mut power = pr as u128;
        while power <= d as u128 {
            power *= pr as u128;
            s += 1;
        }
        let step = p.checked_pow(3 * r * s).ok_or_else(|| InterpolateError::Invalid(format!("slice dimension overflows for p = {p}")))?;
        k = k.checked_mul(step).ok_or_else(|| InterpolateError::Invalid("slice dimension overflows".into()))?;
        factors.push((p, r, s));
    }
    let k = usize::try_from(k).map_err(|_| InterpolateError::Invalid("slice dimension overflows".into()))?;
    if 2 * k > MAX_DIM {
        return Err(InterpolateError::TooLarge(2 * k));
    }
    let k_big = k as u64;
    for &(p, r, _) in &factors {
        if kummer_valuation(k_big + d as u64, k_big, p)? != 0 {
            return Err(InterpolateError::Invalid(format!("{p} divides C(k+d, k)")));
        }
        for i in 1..=d as u64 {
            if kummer_valuation(k_big + d as u64 - i, k_big - i, p)? < r as u64 {
                return Err(InterpolateError::Invalid(format!("{p}^{r} does not divide C(k+d-{i}, k-{i})")));
            }
        }
    }
    let binom = binomial(k + d, k);
    let residue = (&binom % BigInt::from(exponent)).to_i64().expect("residue fits");
    let ext = BigInt::from(residue).extended_gcd(&BigInt::from(exponent));
    if !ext.gcd.is_one() {
        return Err(InterpolateError::Invalid("C(k+d, k) is not invertible modulo M".into()));
    }
    let a = ext.x.mod_floor(&BigInt::from(exponent)).to_u64().expect("residue fits");
    Ok(SliceCoefficients { d, exponent, factors, k, a })
}

impl SliceCoefficients {
    /// c_b for a weight-k point b of {0,1}^{2k}: A when b has no 1 among
    /// the last k - d coordinates, 0 otherwise.
    pub fn coeff(&self, b: &CubePoint) -> u64 {
        assert_eq!(b.len(), 2 * self.k);
        let tail = (b.bits() >> (self.k + self.d)) != 0;
        if tail || b.weight() != self.k {
            0
        } else {
            self.a
        }
    }

    /// The C(k+d, k) points with c_b = A, in increasing order.
    pub fn support(&self) -> Vec<CubePoint> {
        let head = self.k + self.d;
        let mut out = Vec::new();
        // Choose which d of the first k+d coordinates are zero.
        for_each_weight(head, self.d, |zeros| {
            let ones = ((1u128 << head) - 1) & !(zeros as u128);
            out.push(CubePoint::from_bits(ones, 2 * self.k));
        });
        out.sort();
        out
    }
}

fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|q| q * q <= p).all(|q| !p.is_multiple_of(q))
}

/// Sum of the base-p digits of n.
pub fn digit_sum(mut n: u64, p: u64) -> u64 {
    assert!(p >= 2);
    let mut s = 0;
    while n > 0 {
        s += n % p;
        n /= p;
    }
    s
}

/// The p-adic valuation of C(a, b), from base-p digit sums.
pub fn kummer_valuation(a: u64, b: u64, p: u64) -> Result<u64, InterpolateError> {
    if !is_prime(p) {
        return Err(InterpolateError::NotPrime(p));
    }
    if b > a {
        return Err(InterpolateError::Invalid(format!("need b <= a, got a = {a}, b = {b}")));
    }
    Ok((digit_sum(b, p) + digit_sum(a - b, p) - digit_sum(a, p)) / (p - 1))
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}
