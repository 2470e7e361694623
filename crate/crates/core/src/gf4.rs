//! GF(4) arithmetic, polynomials, and cyclic codes over GF(4).
//!
//! Just enough machinery to verify burst-sum freeness of the length-13
//! quadratic-residue code: field ops, polynomial division, burst
//! enumeration over GF(4), and the codeword check itself.
//!
//! GF(4) = {0, 1, w, W} with W = w^2 and w^3 = 1. Elements are encoded
//! in two bits (0 -> 00, 1 -> 01, w -> 10, W -> 11); addition is XOR of
//! the encodings and multiplication is a 4x4 table. Polynomial literals
//! are comma-separated coefficients ascending, e.g. `"1,W,0,w,0,W,1"`.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// An element of GF(4), encoded in the low two bits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct F4(pub u8);

pub const F4_ZERO: F4 = F4(0);
pub const F4_ONE: F4 = F4(1);
/// The cube root of unity w.
pub const F4_W: F4 = F4(2);
/// w^2, the other cube root of unity.
pub const F4_W2: F4 = F4(3);

/// All four field elements, in encoding order.
pub const F4_ALL: [F4; 4] = [F4_ZERO, F4_ONE, F4_W, F4_W2];

// multiplication table, row-major over encodings
const MUL: [[u8; 4]; 4] = [
    [0, 0, 0, 0],
    [0, 1, 2, 3],
    [0, 2, 3, 1],
    [0, 3, 1, 2],
];

impl F4 {
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn add(self, other: F4) -> F4 {
        F4(self.0 ^ other.0)
    }

    pub fn mul(self, other: F4) -> F4 {
        F4(MUL[self.0 as usize][other.0 as usize])
    }

    /// Multiplicative inverse; zero for zero (callers guard).
    pub fn inv(self) -> F4 {
        match self.0 {
            1 => F4_ONE,
            2 => F4_W2, // w * w^2 = w^3 = 1
            3 => F4_W,
            _ => F4_ZERO,
        }
    }
}

impl fmt::Display for F4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self.0 {
            0 => "0",
            1 => "1",
            2 => "w",
            _ => "W",
        })
    }
}

/// A polynomial over GF(4), coefficients ascending, leading coefficient
/// nonzero unless zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly4 {
    coeffs: Vec<F4>,
}

impl Poly4 {
    pub fn zero() -> Self {
        Poly4 { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly4 {
            coeffs: vec![F4_ONE],
        }
    }

    pub fn from_coeffs(coeffs: Vec<F4>) -> Self {
        let mut p = Poly4 { coeffs };
        p.normalize();
        p
    }

    /// x^n + 1 over GF(4).
    pub fn xn_plus_one(n: usize) -> Self {
        let mut coeffs = vec![F4_ZERO; n + 1];
        coeffs[0] = F4_ONE;
        coeffs[n] = F4_ONE;
        Poly4 { coeffs }
    }

    fn normalize(&mut self) {
        while self.coeffs.last() == Some(&F4_ZERO) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeff(&self, i: usize) -> F4 {
        self.coeffs.get(i).copied().unwrap_or(F4_ZERO)
    }

    pub fn coeffs(&self) -> &[F4] {
        &self.coeffs
    }

    pub fn add(&self, other: &Poly4) -> Poly4 {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| self.coeff(i).add(other.coeff(i)))
            .collect();
        Poly4::from_coeffs(coeffs)
    }

    pub fn mul(&self, other: &Poly4) -> Poly4 {
        if self.is_zero() || other.is_zero() {
            return Poly4::zero();
        }
        let mut coeffs = vec![F4_ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add(a.mul(b));
            }
        }
        Poly4::from_coeffs(coeffs)
    }

    /// Long division: `self = q * b + r` with `deg r < deg b`.
    pub fn divmod(&self, b: &Poly4) -> Result<(Poly4, Poly4)> {
        let db = b.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = b.coeffs[db].inv();
        let mut r = self.coeffs.clone();
        let mut q = vec![F4_ZERO; self.coeffs.len().saturating_sub(db)];
        while r.len() > db {
            let dr = r.len() - 1;
            let factor = r[dr].mul(lead_inv);
            if !factor.is_zero() {
                q[dr - db] = factor;
                for (i, &bc) in b.coeffs.iter().enumerate() {
                    r[dr - db + i] = r[dr - db + i].add(factor.mul(bc));
                }
            }
            r.pop();
            while r.last() == Some(&F4_ZERO) {
                r.pop();
            }
        }
        Ok((Poly4::from_coeffs(q), Poly4::from_coeffs(r)))
    }

    pub fn rem(&self, b: &Poly4) -> Result<Poly4> {
        Ok(self.divmod(b)?.1)
    }
}

impl fmt::Display for Poly4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for Poly4 {
    type Err = Error;

    /// Comma-separated coefficients from {0, 1, w, W}, ascending.
    fn from_str(s: &str) -> Result<Poly4> {
        let mut coeffs = Vec::new();
        for item in s.split(',') {
            coeffs.push(match item.trim() {
                "0" => F4_ZERO,
                "1" => F4_ONE,
                "w" => F4_W,
                "W" => F4_W2,
                other => {
                    return Err(Error::PolyParse {
                        literal: s.to_string(),
                        reason: format!("bad GF(4) coefficient {other:?}"),
                    })
                }
            });
        }
        Ok(Poly4::from_coeffs(coeffs))
    }
}

/// A cyclic code over GF(4), given by a generator dividing x^n + 1.
#[derive(Debug, Clone)]
pub struct CyclicCode4 {
    n: usize,
    g: Poly4,
    k: usize,
}

impl CyclicCode4 {
    pub fn from_generator(n: usize, g: Poly4) -> Result<Self> {
        let dg = g.degree().ok_or(Error::ZeroPolynomial)?;
        if dg > n {
            return Err(Error::LengthMismatch {
                expected: n,
                got: dg,
            });
        }
        if !Poly4::xn_plus_one(n).rem(&g)?.is_zero() {
            return Err(Error::NotADivisor {
                n,
                g: g.to_string(),
            });
        }
        Ok(CyclicCode4 { n, k: n - dg, g })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dimension(&self) -> usize {
        self.k
    }

    pub fn generator(&self) -> &Poly4 {
        &self.g
    }

    /// Membership: v(x) is a codeword iff it reduces to 0 mod g.
    pub fn contains(&self, v: &Poly4) -> Result<bool> {
        if v.degree().is_some_and(|d| d >= self.n) {
            return Err(Error::LengthMismatch {
                expected: self.n,
                got: v.degree().unwrap() + 1,
            });
        }
        Ok(v.rem(&self.g)?.is_zero())
    }
}

/// All nonzero length-n GF(4) vectors (as polynomials of degree < n)
/// whose support lies in at most `b` cyclically consecutive positions,
/// with the first and last position of the window nonzero. No
/// duplicates; deterministic order.
pub fn enumerate_bursts4(n: usize, b: usize) -> Result<Vec<Poly4>> {
    enumerate_bursts4_with(n, b, true)
}

/// Burst enumeration with the wraparound behaviour explicit; `wrap =
/// false` restricts windows to [start, start+width) within 0..n.
pub fn enumerate_bursts4_with(n: usize, b: usize, wrap: bool) -> Result<Vec<Poly4>> {
    if b == 0 || b >= n {
        return Err(Error::BurstWidthOutOfRange { n, b });
    }
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for width in 1..=b {
        for start in 0..n {
            if !wrap && start + width > n {
                continue;
            }
            // interior patterns: width-2 free coefficients
            let interior = 4usize.pow(width.saturating_sub(2) as u32);
            let ends: &[F4] = &[F4_ONE, F4_W, F4_W2];
            for &first in ends {
                let lasts: &[F4] = if width == 1 { &[F4_ONE] } else { ends };
                for &last in lasts {
                    for mid in 0..interior {
                        let mut coeffs = vec![F4_ZERO; n];
                        coeffs[start] = first;
                        if width > 1 {
                            coeffs[(start + width - 1) % n] = last;
                        }
                        let mut m = mid;
                        for off in 1..width.saturating_sub(1) {
                            coeffs[(start + off) % n] = F4_ALL[m % 4];
                            m /= 4;
                        }
                        let p = Poly4::from_coeffs(coeffs);
                        if seen.insert(p.clone()) {
                            out.push(p);
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// True iff no nonzero codeword is a sum of two bursts of width <= b
/// (the single-burst case is included via the zero summand).
pub fn burst_sum_free(code: &CyclicCode4, b: usize) -> Result<bool> {
    burst_sum_free_with(code, b, true)
}

pub fn burst_sum_free_with(code: &CyclicCode4, b: usize, wrap: bool) -> Result<bool> {
    let mut bursts = enumerate_bursts4_with(code.n(), b, wrap)?;
    bursts.push(Poly4::zero());
    // w1 + w2 is a nonzero codeword iff two distinct bursts share a
    // residue mod g, so compare residues pairwise
    let mut seen: HashSet<Poly4> = HashSet::with_capacity(bursts.len());
    for w in &bursts {
        if !seen.insert(w.rem(code.generator())?) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g1() -> Poly4 {
        "1,W,0,w,0,W,1".parse().unwrap()
    }

    #[test]
    fn field_axioms_exhaustive() {
        for a in F4_ALL {
            assert_eq!(a.add(a), F4_ZERO);
            assert_eq!(a.mul(F4_ONE), a);
            assert_eq!(a.mul(F4_ZERO), F4_ZERO);
            if !a.is_zero() {
                assert_eq!(a.mul(a.inv()), F4_ONE);
            }
            for b in F4_ALL {
                assert_eq!(a.add(b), b.add(a));
                assert_eq!(a.mul(b), b.mul(a));
                for c in F4_ALL {
                    assert_eq!(a.mul(b.add(c)), a.mul(b).add(a.mul(c)));
                    assert_eq!(a.mul(b).mul(c), a.mul(b.mul(c)));
                }
            }
        }
        assert_eq!(F4_W.mul(F4_W), F4_W2);
        assert_eq!(F4_W.mul(F4_W2), F4_ONE);
    }

    #[test]
    fn g1_divides_x13_plus_one() {
        let (q, r) = Poly4::xn_plus_one(13).divmod(&g1()).unwrap();
        assert!(r.is_zero());
        assert_eq!(q.mul(&g1()), Poly4::xn_plus_one(13));
    }

    #[test]
    fn divmod_trivial_cases() {
        let g = g1();
        let (q, r) = g.divmod(&g).unwrap();
        assert_eq!(q, Poly4::one());
        assert!(r.is_zero());

        let f = "1,1".parse::<Poly4>().unwrap().mul(&g);
        let (q, r) = f.divmod(&g).unwrap();
        assert_eq!(q, "1,1".parse().unwrap());
        assert!(r.is_zero());

        assert!(g.divmod(&Poly4::zero()).is_err());
    }

    #[test]
    fn burst_counts() {
        assert_eq!(enumerate_bursts4(13, 1).unwrap().len(), 39);
        let b3 = enumerate_bursts4(13, 3).unwrap();
        assert_eq!(b3.len(), 624);
        // every output fits in a width-3 cyclic window
        for v in &b3 {
            let support: Vec<usize> = (0..13).filter(|&i| !v.coeff(i).is_zero()).collect();
            let fits = (0..13).any(|s| support.iter().all(|&i| (i + 13 - s) % 13 < 3));
            assert!(fits);
        }
        assert!(enumerate_bursts4(13, 0).is_err());
        assert!(enumerate_bursts4(13, 13).is_err());
    }

    #[test]
    fn code13_is_burst_sum_free_at_3() {
        let code = CyclicCode4::from_generator(13, g1()).unwrap();
        assert_eq!(code.dimension(), 7);
        assert!(burst_sum_free(&code, 3).unwrap());
        // the generator itself sits inside a width-7 window
        assert!(!burst_sum_free(&code, 7).unwrap());
    }

    #[test]
    fn monotone_in_b() {
        let code = CyclicCode4::from_generator(13, g1()).unwrap();
        let mut previous = true;
        for b in 1..7 {
            let now = burst_sum_free(&code, b).unwrap();
            assert!(previous || !now);
            previous = now;
        }
    }

    #[test]
    fn zero_code_is_burst_sum_free() {
        let code = CyclicCode4::from_generator(5, Poly4::xn_plus_one(5)).unwrap();
        assert_eq!(code.dimension(), 0);
        for b in 1..5 {
            assert!(burst_sum_free(&code, b).unwrap());
        }
    }

    #[test]
    fn syndrome_route_matches_pairwise_sums() {
        // direct pairwise-sum membership check against the residue set route
        let code = CyclicCode4::from_generator(13, g1()).unwrap();
        for b in [2usize, 3, 4, 7] {
            let mut bursts = enumerate_bursts4(13, b).unwrap();
            bursts.push(Poly4::zero());
            let mut direct = true;
            'search: for (i, w1) in bursts.iter().enumerate() {
                for w2 in &bursts[i + 1..] {
                    if code.contains(&w1.add(w2)).unwrap() {
                        direct = false;
                        break 'search;
                    }
                }
            }
            assert_eq!(direct, burst_sum_free(&code, b).unwrap(), "b = {b}");
        }
    }
}
