//! Fixed-length bit vectors and bit matrices over GF(2).
//!
//! `BitVec` is a length-`n` vector with XOR as addition; index `n-1` is
//! treated as cyclically adjacent to index 0 by the shift operations.
//! `BitMat` is a list of equal-length rows with Gaussian elimination,
//! rank, nullspace and syndrome computations.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::gf2::Poly2;

const WORD_BITS: usize = 64;

/// A fixed-length vector over GF(2). Bit `i` of `words[i / 64]` holds
/// component `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    /// The zero vector of length `n`.
    pub fn zero(n: usize) -> Self {
        BitVec {
            len: n,
            words: vec![0; n.div_ceil(WORD_BITS)],
        }
    }

    /// The all-one vector of length `n`.
    pub fn all_one(n: usize) -> Self {
        let mut v = Self::zero(n);
        for i in 0..n {
            v.set(i, true);
        }
        v
    }

    /// The unit vector with a single 1 at `pos`.
    pub fn unit(n: usize, pos: usize) -> Self {
        let mut v = Self::zero(n);
        v.set(pos, true);
        v
    }

    /// Builds a vector from the positions of its nonzero components.
    pub fn from_support(n: usize, support: &[usize]) -> Self {
        let mut v = Self::zero(n);
        for &i in support {
            v.set(i, true);
        }
        v
    }

    /// Parses a bitstring such as `"100110"`; character `i` is component `i`.
    pub fn from_bitstring(s: &str) -> Result<Self> {
        let mut v = Self::zero(s.len());
        for (i, ch) in s.chars().enumerate() {
            match ch {
                '0' => {}
                '1' => v.set(i, true),
                _ => {
                    return Err(Error::PolyParse {
                        literal: s.to_string(),
                        reason: format!("unexpected character {ch:?} in bitstring"),
                    })
                }
            }
        }
        Ok(v)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        (self.words[i / WORD_BITS] >> (i % WORD_BITS)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        debug_assert!(i < self.len);
        let mask = 1u64 << (i % WORD_BITS);
        if value {
            self.words[i / WORD_BITS] |= mask;
        } else {
            self.words[i / WORD_BITS] &= !mask;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Number of nonzero components.
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Positions of the nonzero components, ascending.
    pub fn support(&self) -> Vec<usize> {
        (0..self.len).filter(|&i| self.get(i)).collect()
    }

    /// Component-wise XOR; both vectors must have the same length.
    pub fn xor(&self, other: &BitVec) -> BitVec {
        assert_eq!(self.len, other.len, "BitVec length mismatch");
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a ^ b)
            .collect();
        BitVec {
            len: self.len,
            words,
        }
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        assert_eq!(self.len, other.len, "BitVec length mismatch");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    /// Inner product modulo 2.
    pub fn dot(&self, other: &BitVec) -> bool {
        assert_eq!(self.len, other.len, "BitVec length mismatch");
        self.words
            .iter()
            .zip(&other.words)
            .fold(0u32, |acc, (a, b)| acc ^ (a & b).count_ones())
            & 1
            == 1
    }

    /// Cyclic shift to the right by `m`: component `i` of the result is
    /// component `(i - m) mod n` of the input.
    pub fn shift_right(&self, m: usize) -> BitVec {
        let n = self.len;
        if n == 0 {
            return self.clone();
        }
        let m = m % n;
        let mut out = Self::zero(n);
        for i in 0..n {
            if self.get((i + n - m) % n) {
                out.set(i, true);
            }
        }
        out
    }

    /// Concatenation `(self | other)` as a single vector.
    pub fn concat(&self, other: &BitVec) -> BitVec {
        let mut out = Self::zero(self.len + other.len);
        for i in 0..self.len {
            if self.get(i) {
                out.set(i, true);
            }
        }
        for i in 0..other.len {
            if other.get(i) {
                out.set(self.len + i, true);
            }
        }
        out
    }

    /// The vector as a polynomial with component `i` as the coefficient of x^i.
    pub fn to_poly(&self) -> Poly2 {
        Poly2::from_words(self.words.clone())
    }

    /// Embeds a polynomial of degree < n as a length-n vector.
    pub fn from_poly(p: &Poly2, n: usize) -> Result<Self> {
        if let Some(d) = p.degree() {
            if d >= n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    got: d + 1,
                });
            }
        }
        let mut v = Self::zero(n);
        for i in p.exponents() {
            v.set(i, true);
        }
        Ok(v)
    }

    /// The vector as an integer with component `i` contributing 2^i.
    /// Length must be at most 64.
    pub fn to_mask(&self) -> u64 {
        assert!(self.len <= 64, "mask only defined up to 64 components");
        if self.words.is_empty() {
            0
        } else {
            self.words[0]
        }
    }

    pub fn to_bitstring(&self) -> String {
        (0..self.len)
            .map(|i| if self.get(i) { '1' } else { '0' })
            .collect()
    }
}

impl fmt::Display for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_bitstring())
    }
}

impl Ord for BitVec {
    /// Total order by the integer value of the encoding (component `i`
    /// weighs 2^i), shorter vectors first. Used for deterministic
    /// tie-breaking of representatives.
    fn cmp(&self, other: &Self) -> Ordering {
        self.len
            .cmp(&other.len)
            .then_with(|| self.words.iter().rev().cmp(other.words.iter().rev()))
    }
}

impl PartialOrd for BitVec {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Symplectic inner product of two `(alpha | beta)` pairs:
/// `alpha_u . beta_v + alpha_v . beta_u` modulo 2.
pub fn symplectic_product(u: &(BitVec, BitVec), v: &(BitVec, BitVec)) -> bool {
    u.0.dot(&v.1) ^ v.0.dot(&u.1)
}

/// A matrix over GF(2), stored as rows of common length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitMat {
    rows: Vec<BitVec>,
    cols: usize,
}

impl BitMat {
    pub fn new(rows: Vec<BitVec>) -> Result<Self> {
        let cols = rows.first().map_or(0, BitVec::len);
        for r in &rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row length {} differs from {}",
                    r.len(),
                    cols
                )));
            }
        }
        Ok(BitMat { rows, cols })
    }

    pub fn rows(&self) -> &[BitVec] {
        &self.rows
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_cols(&self) -> usize {
        self.cols
    }

    pub fn transpose(&self) -> BitMat {
        let mut rows = vec![BitVec::zero(self.rows.len()); self.cols];
        for (i, r) in self.rows.iter().enumerate() {
            for j in 0..self.cols {
                if r.get(j) {
                    rows[j].set(i, true);
                }
            }
        }
        BitMat {
            rows,
            cols: self.rows.len(),
        }
    }

    /// Row-echelon basis of the row space, with the pivot column of each
    /// basis row.
    fn echelon(&self) -> (Vec<BitVec>, Vec<usize>) {
        let mut basis: Vec<BitVec> = Vec::new();
        let mut pivots: Vec<usize> = Vec::new();
        for row in &self.rows {
            let mut r = row.clone();
            for (b, &p) in basis.iter().zip(&pivots) {
                if r.get(p) {
                    r.xor_assign(b);
                }
            }
            if let Some(p) = (0..self.cols).find(|&j| r.get(j)) {
                basis.push(r);
                pivots.push(p);
            }
        }
        (basis, pivots)
    }

    /// Rank over GF(2).
    pub fn rank(&self) -> usize {
        self.echelon().0.len()
    }

    /// True iff `v` lies in the row space.
    pub fn row_space_contains(&self, v: &BitVec) -> bool {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        let (basis, pivots) = self.echelon();
        let mut r = v.clone();
        for (b, &p) in basis.iter().zip(&pivots) {
            if r.get(p) {
                r.xor_assign(b);
            }
        }
        r.is_zero()
    }

    /// A basis (as rows) of `{ v : M v^T = 0 }`.
    pub fn nullspace(&self) -> BitMat {
        let (mut basis, pivots) = self.echelon();
        // back-substitute so each pivot column has a single 1
        for i in (0..basis.len()).rev() {
            let p = pivots[i];
            let row_i = basis[i].clone();
            for j in 0..i {
                if basis[j].get(p) {
                    basis[j].xor_assign(&row_i);
                }
            }
        }
        let mut null_rows = Vec::new();
        for free in 0..self.cols {
            if pivots.contains(&free) {
                continue;
            }
            let mut v = BitVec::zero(self.cols);
            v.set(free, true);
            for (row, &p) in basis.iter().zip(&pivots) {
                if row.get(free) {
                    v.set(p, true);
                }
            }
            null_rows.push(v);
        }
        BitMat {
            rows: null_rows,
            cols: self.cols,
        }
    }

    /// Syndrome `M v^T` as a vector of length `num_rows`.
    pub fn syndrome(&self, v: &BitVec) -> BitVec {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        let mut s = BitVec::zero(self.rows.len());
        for (i, row) in self.rows.iter().enumerate() {
            if row.dot(v) {
                s.set(i, true);
            }
        }
        s
    }

    /// Cyclically shifts every row `m` columns to the right.
    pub fn shift_columns(&self, m: usize) -> BitMat {
        BitMat {
            rows: self.rows.iter().map(|r| r.shift_right(m)).collect(),
            cols: self.cols,
        }
    }

    /// Row-wise XOR of two matrices of identical shape.
    pub fn xor(&self, other: &BitMat) -> Result<BitMat> {
        if self.cols != other.cols || self.rows.len() != other.rows.len() {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows.len(),
                self.cols,
                other.rows.len(),
                other.cols
            )));
        }
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| a.xor(b))
            .collect();
        Ok(BitMat {
            rows,
            cols: self.cols,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shift_matches_rotation() {
        let v = BitVec::from_bitstring("100110").unwrap();
        assert_eq!(v.shift_right(1).to_bitstring(), "010011");
        assert_eq!(v.shift_right(6), v);
        assert_eq!(v.shift_right(7).to_bitstring(), "010011");
    }

    #[test]
    fn dot_and_weight() {
        let a = BitVec::from_bitstring("1101").unwrap();
        let b = BitVec::from_bitstring("1011").unwrap();
        assert_eq!(a.weight(), 3);
        // overlap at positions 0 and 3 -> even
        assert!(!a.dot(&b));
        let c = BitVec::from_bitstring("1111").unwrap();
        assert!(a.dot(&c));
    }

    #[test]
    fn symplectic_examples() {
        let p = |a: &str, b: &str| {
            (
                BitVec::from_bitstring(a).unwrap(),
                BitVec::from_bitstring(b).unwrap(),
            )
        };
        let u = p("10", "01");
        let v = p("01", "10");
        assert!(!symplectic_product(&u, &v));
        let w = p("11", "00");
        assert!(symplectic_product(&u, &w));
        // alpha_u . beta_u = 0 here, so the self-product vanishes
        assert!(!symplectic_product(&u, &u));
    }

    #[test]
    fn rank_nullity() {
        let rows = vec![
            BitVec::from_bitstring("10110").unwrap(),
            BitVec::from_bitstring("01011").unwrap(),
            BitVec::from_bitstring("11101").unwrap(),
        ];
        let m = BitMat::new(rows).unwrap();
        let rank = m.rank();
        let null = m.nullspace();
        assert_eq!(rank + null.num_rows(), 5);
        for v in null.rows() {
            assert!(m.syndrome(v).is_zero());
        }
    }

    #[test]
    fn syndrome_of_zero_is_zero() {
        let m = BitMat::new(vec![
            BitVec::from_bitstring("110").unwrap(),
            BitVec::from_bitstring("011").unwrap(),
        ])
        .unwrap();
        assert!(m.syndrome(&BitVec::zero(3)).is_zero());
    }

    #[test]
    fn ordering_is_by_encoded_integer() {
        let a = BitVec::from_bitstring("100").unwrap(); // 1
        let b = BitVec::from_bitstring("010").unwrap(); // 2
        let c = BitVec::from_bitstring("001").unwrap(); // 4
        assert!(a < b && b < c);
        assert!(BitVec::zero(3) < a);
    }
}
