//! Subcube embeddings C_{a,h}, spanned subcubes and random 2-to-1 pairings.

use rand::distributions::{Distribution, WeightedIndex};
use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;
use thiserror::Error;

use crate::poly::CubePoint;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SubcubeError {
    #[error("hash has length {0} but base point has dimension {1}")]
    HashLength(usize, usize),
    #[error("hash value {0} out of range for k = {1}")]
    HashRange(usize, usize),
    #[error("invalid distribution: {0}")]
    InvalidDistribution(String),
    #[error("point of dimension {0} does not match {1}")]
    DimMismatch(usize, usize),
    #[error("{0} is not a permutation of [{1}]")]
    NotPermutation(String, usize),
    #[error("2-to-1 map needs an even positive domain, got {0}")]
    OddDomain(usize),
}

/// The map y -> x(y) with x(y)_i = y_{h(i)} xor a_i.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubcubeEmbedding {
    a: CubePoint,
    h: Vec<usize>,
    k: usize,
    #[serde(skip)]
    masks: Vec<u128>,
}

impl SubcubeEmbedding {
    pub fn new(a: CubePoint, h: Vec<usize>, k: usize) -> Result<Self, SubcubeError> {
        if h.len() != a.len() {
            return Err(SubcubeError::HashLength(h.len(), a.len()));
        }
        if let Some(&bad) = h.iter().find(|&&j| j >= k) {
            return Err(SubcubeError::HashRange(bad, k));
        }
        let mut masks = vec![0u128; k];
        for (i, &j) in h.iter().enumerate() {
            masks[j] |= 1u128 << i;
        }
        Ok(SubcubeEmbedding { a, h, k, masks })
    }

    pub fn base(&self) -> &CubePoint {
        &self.a
    }

    pub fn hash(&self) -> &[usize] {
        &self.h
    }

    pub fn dim(&self) -> usize {
        self.k
    }

    pub fn ambient_dim(&self) -> usize {
        self.a.len()
    }

    /// Coordinates of {0,1}^n that move with y_j.
    pub fn fiber_mask(&self, j: usize) -> u128 {
        self.masks[j]
    }

    pub fn lift(&self, y: &CubePoint) -> CubePoint {
        assert_eq!(y.len(), self.k, "lift expects a point of dimension k");
        self.lift_bits(y.bits())
    }

    pub fn lift_bits(&self, mut y: u128) -> CubePoint {
        let mut x = self.a.bits();
        while y != 0 {
            let j = y.trailing_zeros() as usize;
            x ^= self.masks[j];
            y &= y - 1;
        }
        CubePoint::from_bits(x, self.a.len())
    }

    /// All 2^k lifted points, indexed by y.
    pub fn lift_all(&self) -> Vec<CubePoint> {
        let size = 1usize << self.k;
        let mut out = Vec::with_capacity(size);
        let mut cur = self.a.bits();
        let mut prev_gray = 0usize;
        let mut by_index = vec![0u128; size];
        for step in 0..size {
            let gray = step ^ (step >> 1);
            if step > 0 {
                let changed = (gray ^ prev_gray).trailing_zeros() as usize;
                cur ^= self.masks[changed];
            }
            by_index[gray] = cur;
            prev_gray = gray;
        }
        for bits in by_index {
            out.push(CubePoint::from_bits(bits, self.a.len()));
        }
        out
    }

    /// h(i) drawn independently from the distribution proportional to
    /// `weights` (exact integer weights).
    pub fn sample_weighted<R: Rng + ?Sized>(a: CubePoint, weights: &[u64], rng: &mut R) -> Result<Self, SubcubeError> {
        let dist = WeightedIndex::new(weights).map_err(|e| SubcubeError::InvalidDistribution(e.to_string()))?;
        let h = (0..a.len()).map(|_| dist.sample(rng)).collect();
        Self::new(a, h, weights.len())
    }

    /// h uniform over all maps [n] -> [k].
    pub fn sample_uniform<R: Rng + ?Sized>(a: CubePoint, k: usize, rng: &mut R) -> Result<Self, SubcubeError> {
        if k == 0 {
            return Err(SubcubeError::InvalidDistribution("k must be positive".into()));
        }
        let h = (0..a.len()).map(|_| rng.gen_range(0..k)).collect();
        Self::new(a, h, k)
    }
}

/// The 2k-dimensional cube spanned by an embedding C and a point b.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpannedSubcube {
    base: SubcubeEmbedding,
    b: CubePoint,
    sigma: Vec<usize>,
    cube: SubcubeEmbedding,
    w: CubePoint,
}

impl SpannedSubcube {
    /// h'(i) = sigma(h(i)) if a_i = b_i, else sigma(h(i) + k); w has
    /// w_{sigma(j)} = 0 and w_{sigma(j+k)} = 1.
    pub fn new(base: &SubcubeEmbedding, b: &CubePoint, sigma: &[usize]) -> Result<Self, SubcubeError> {
        let k = base.dim();
        if b.len() != base.ambient_dim() {
            return Err(SubcubeError::DimMismatch(b.len(), base.ambient_dim()));
        }
        check_permutation(sigma, 2 * k)?;
        let v = base.base().xor(b);
        let hprime: Vec<usize> = base.hash().iter().enumerate().map(|(i, &j)| if v.get(i) { sigma[j + k] } else { sigma[j] }).collect();
        let cube = SubcubeEmbedding::new(*base.base(), hprime, 2 * k)?;
        let mut w = CubePoint::zeros(2 * k);
        for j in 0..k {
            w.set(sigma[j + k], true);
        }
        debug_assert_eq!(cube.lift(&w), *b);
        Ok(SpannedSubcube { base: base.clone(), b: *b, sigma: sigma.to_vec(), cube, w })
    }

    pub fn base(&self) -> &SubcubeEmbedding {
        &self.base
    }

    pub fn target(&self) -> &CubePoint {
        &self.b
    }

    pub fn sigma(&self) -> &[usize] {
        &self.sigma
    }

    /// The embedding z -> x(z) of {0,1}^{2k}.
    pub fn cube(&self) -> &SubcubeEmbedding {
        &self.cube
    }

    pub fn hprime(&self) -> &[usize] {
        self.cube.hash()
    }

    /// The point of {0,1}^{2k} lifting to b.
    pub fn w(&self) -> &CubePoint {
        &self.w
    }

    /// The 2-to-1 map rho: [2k] -> [k] with rho(sigma(j)) = rho(sigma(j+k)) = j;
    /// the original cube sits inside as z_c = y_{rho(c)}.
    pub fn pairing(&self) -> Vec<usize> {
        pairing_from_sigma(&self.sigma)
    }

    /// Point of {0,1}^{2k} corresponding to y in the original cube.
    pub fn embed_inner(&self, y: &CubePoint) -> CubePoint {
        let k = self.base.dim();
        assert_eq!(y.len(), k);
        let mut z = CubePoint::zeros(2 * k);
        for j in 0..k {
            if y.get(j) {
                z.set(self.sigma[j], true);
                z.set(self.sigma[j + k], true);
            }
        }
        z
    }
}

pub fn pairing_from_sigma(sigma: &[usize]) -> Vec<usize> {
    let k = sigma.len() / 2;
    let mut rho = vec![0; 2 * k];
    for j in 0..k {
        rho[sigma[j]] = j;
        rho[sigma[j + k]] = j;
    }
    rho
}

fn check_permutation(sigma: &[usize], m: usize) -> Result<(), SubcubeError> {
    let mut seen = vec![false; m];
    if sigma.len() != m {
        return Err(SubcubeError::NotPermutation(format!("{sigma:?}"), m));
    }
    for &s in sigma {
        if s >= m || seen[s] {
            return Err(SubcubeError::NotPermutation(format!("{sigma:?}"), m));
        }
        seen[s] = true;
    }
    Ok(())
}

pub fn random_permutation<R: Rng + ?Sized>(m: usize, rng: &mut R) -> Vec<usize> {
    let mut p: Vec<usize> = (0..m).collect();
    p.shuffle(rng);
    p
}

/// Uniformly random map [2k] -> [k] with every fiber of size exactly 2.
pub fn random_two_to_one<R: Rng + ?Sized>(two_k: usize, rng: &mut R) -> Result<Vec<usize>, SubcubeError> {
    if two_k == 0 || two_k % 2 == 1 {
        return Err(SubcubeError::OddDomain(two_k));
    }
    let perm = random_permutation(two_k, rng);
    let mut rho = vec![0; two_k];
    for (pos, &c) in perm.iter().enumerate() {
        rho[c] = pos / 2;
    }
    Ok(rho)
}
