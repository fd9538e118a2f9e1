//! Feature hashing: n-gram multisets to fixed-dimension sparse vectors.
//!
//! There is no vocabulary table. Any n-gram from any script maps to an
//! index through MurmurHash3, so strings unseen in training still produce
//! features instead of being dropped; that is what lets the classifier
//! treat unknown text as evidence of an outlier.

use crate::error::Error;
use crate::text::{NGramCounts, Sentence};

/// MurmurHash3 x86_32, reinterpreted as signed. The sign doubles as the
/// feature's contribution sign in [`vectorize`].
pub fn murmur3_32(data: &[u8], seed: u32) -> i32 {
    const C1: u32 = 0xcc9e2d51;
    const C2: u32 = 0x1b873593;
    let mut h = seed;

    let mut chunks = data.chunks_exact(4);
    for block in &mut chunks {
        let mut k = u32::from_le_bytes(block.try_into().unwrap());
        k = k.wrapping_mul(C1).rotate_left(15).wrapping_mul(C2);
        h ^= k;
        h = h.rotate_left(13).wrapping_mul(5).wrapping_add(0xe6546b64);
    }

    let tail = chunks.remainder();
    if !tail.is_empty() {
        let mut k = 0u32;
        for (i, &b) in tail.iter().enumerate() {
            k ^= u32::from(b) << (8 * i);
        }
        h ^= k.wrapping_mul(C1).rotate_left(15).wrapping_mul(C2);
    }

    h ^= data.len() as u32;
    h ^= h >> 16;
    h = h.wrapping_mul(0x85ebca6b);
    h ^= h >> 13;
    h = h.wrapping_mul(0xc2b2ae35);
    h ^= h >> 16;
    h as i32
}

/// Feature-space geometry: `2^hash_bits` dimensions, hash seeded by `seed`.
/// Both are stored in the model file so prediction reproduces training
/// exactly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HashConfig {
    pub hash_bits: u32,
    pub seed: u32,
}

impl Default for HashConfig {
    fn default() -> Self {
        HashConfig { hash_bits: 18, seed: 0 }
    }
}

impl HashConfig {
    pub fn dim(&self) -> usize {
        1usize << self.hash_bits
    }

    pub fn validate(&self) -> Result<(), Error> {
        if !(8..=31).contains(&self.hash_bits) {
            return Err(Error::InvalidParameter(format!(
                "hash_bits must be in 8..=31, got {}",
                self.hash_bits
            )));
        }
        Ok(())
    }
}

/// Sparse vector with strictly increasing indices and no stored zeros.
#[derive(Debug, Clone, PartialEq)]
pub struct SparseVector {
    dim: usize,
    indices: Vec<u32>,
    values: Vec<f64>,
}

impl SparseVector {
    /// Builds from arbitrary (index, value) pairs: sorts, merges duplicate
    /// indices by summing, drops exact zeros.
    pub fn new(dim: usize, mut pairs: Vec<(u32, f64)>) -> Self {
        pairs.sort_unstable_by_key(|&(i, _)| i);
        let mut indices = Vec::with_capacity(pairs.len());
        let mut values = Vec::with_capacity(pairs.len());
        for (i, v) in pairs {
            assert!((i as usize) < dim, "index {i} out of range for dim {dim}");
            if indices.last() == Some(&i) {
                *values.last_mut().unwrap() += v;
                if *values.last().unwrap() == 0.0 {
                    indices.pop();
                    values.pop();
                }
            } else if v != 0.0 {
                indices.push(i);
                values.push(v);
            }
        }
        SparseVector { dim, indices, values }
    }

    pub fn zero(dim: usize) -> Self {
        SparseVector { dim, indices: Vec::new(), values: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nnz(&self) -> usize {
        self.indices.len()
    }

    pub fn is_zero(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, f64)> + '_ {
        self.indices.iter().copied().zip(self.values.iter().copied())
    }

    pub fn l2_norm(&self) -> f64 {
        self.values.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    /// Merge-join over the two sorted index lists.
    pub fn dot(&self, other: &SparseVector) -> f64 {
        debug_assert_eq!(self.dim, other.dim);
        let mut acc = 0.0;
        let (mut i, mut j) = (0, 0);
        while i < self.indices.len() && j < other.indices.len() {
            match self.indices[i].cmp(&other.indices[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    acc += self.values[i] * other.values[j];
                    i += 1;
                    j += 1;
                }
            }
        }
        acc
    }

    /// Dot against a dense vector, touching only this vector's nonzeros.
    pub fn dot_dense(&self, dense: &[f64]) -> f64 {
        debug_assert_eq!(self.dim, dense.len());
        self.iter().map(|(i, v)| v * dense[i as usize]).sum()
    }

    /// Adds `scale` times this vector into a dense accumulator.
    pub fn add_scaled_into(&self, scale: f64, dense: &mut [f64]) {
        debug_assert_eq!(self.dim, dense.len());
        for (i, v) in self.iter() {
            dense[i as usize] += scale * v;
        }
    }
}

/// The signed hashing trick. Each n-gram hashes to an index (low
/// `hash_bits` bits) and a sign (sign of the 32-bit hash); its count is
/// added with that sign, collisions sum, and the result is L2-normalized.
/// Cancellation from opposite signs keeps colliding features unbiased.
pub fn vectorize(grams: &NGramCounts, cfg: &HashConfig) -> SparseVector {
    let dim = cfg.dim();
    let mask = (dim - 1) as u32;
    let mut pairs: Vec<(u32, f64)> = Vec::with_capacity(grams.entries.len());
    for (gram, &count) in &grams.entries {
        let h = murmur3_32(gram.as_bytes(), cfg.seed);
        let index = (h as u32) & mask;
        let signed = if h >= 0 { f64::from(count) } else { -f64::from(count) };
        pairs.push((index, signed));
    }
    // integer-valued sums are exact, so accumulation order cannot matter
    let mut v = SparseVector::new(dim, pairs);
    let norm = v.l2_norm();
    if norm > 0.0 {
        for value in &mut v.values {
            *value /= norm;
        }
    }
    v
}

/// normalize -> extract -> hash, the full path from sentence to vector.
pub fn featurize(s: &Sentence, ngram_order: usize, cfg: &HashConfig) -> SparseVector {
    vectorize(&crate::text::extract_ngrams(s, ngram_order), cfg)
}
