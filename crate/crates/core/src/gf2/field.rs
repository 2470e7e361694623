//! The extension field GF(2^m) and minimal polynomials of its elements.
//!
//! Elements are m-bit values; the field is presented as GF(2)[x] modulo a
//! primitive polynomial, so the class of x generates the multiplicative
//! group and discrete-log tables make multiplication a table lookup.

use crate::error::{Error, Result};
use crate::gf2::Poly2;

/// GF(2^m) presented by a primitive modulus.
#[derive(Debug, Clone)]
pub struct Gf2mField {
    m: usize,
    modulus: Poly2,
    alog: Vec<u64>, // alog[i] = x^i
    log: Vec<u32>,  // inverse of alog on nonzero elements
}

impl Gf2mField {
    /// Builds the field from a primitive polynomial of degree m. The
    /// construction itself certifies primitivity: the powers of x must
    /// run through all 2^m - 1 nonzero elements before returning to 1.
    pub fn new(modulus: Poly2) -> Result<Self> {
        let m = modulus.degree().ok_or(Error::ZeroPolynomial)?;
        if m == 0 {
            return Err(Error::ConstantPolynomial);
        }
        if m > 32 {
            return Err(Error::PreconditionFailed(format!(
                "extension degree {m} beyond desk scale"
            )));
        }
        let order = (1usize << m) - 1;
        let reduction = {
            // modulus with the leading term dropped, as an m-bit mask
            let mut bits = 0u64;
            for e in modulus.exponents() {
                if e < m {
                    bits |= 1 << e;
                }
            }
            bits
        };
        let mut alog = vec![0u64; order];
        let mut log = vec![0u32; 1 << m];
        let mut r = 1u64;
        for (i, slot) in alog.iter_mut().enumerate() {
            if r == 1 && i > 0 {
                return Err(Error::NotPrimitive(modulus.to_string()));
            }
            *slot = r;
            log[r as usize] = i as u32;
            r <<= 1;
            if r >> m & 1 == 1 {
                r ^= reduction | (1 << m);
            }
        }
        // closing the cycle: x^order must be 1
        if r != 1 {
            return Err(Error::NotPrimitive(modulus.to_string()));
        }
        Ok(Gf2mField {
            m,
            modulus,
            alog,
            log,
        })
    }

    /// The field with the canonical primitive modulus of degree m.
    pub fn with_degree(m: usize) -> Result<Self> {
        Self::new(crate::gf2::find_primitive(m))
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn modulus(&self) -> &Poly2 {
        &self.modulus
    }

    /// 2^m - 1, the order of the multiplicative group.
    pub fn group_order(&self) -> usize {
        self.alog.len()
    }

    /// x^e for the generator x.
    pub fn generator_pow(&self, e: usize) -> u64 {
        self.alog[e % self.alog.len()]
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        a ^ b
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        if a == 0 || b == 0 {
            0
        } else {
            let i = self.log[a as usize] as usize + self.log[b as usize] as usize;
            self.alog[i % self.alog.len()]
        }
    }

    /// Evaluates a binary polynomial at a field element.
    pub fn eval_poly2(&self, p: &Poly2, at: u64) -> u64 {
        let mut acc = 0u64;
        let mut power = 1u64;
        if let Some(d) = p.degree() {
            for i in 0..=d {
                if p.coeff(i) {
                    acc ^= power;
                }
                power = self.mul(power, at);
            }
        }
        acc
    }
}

/// Partition of {0..n-1} into orbits of multiplication by 2 mod n, each
/// listed in orbit order starting from its least element; the list is
/// sorted by that leader. Requires odd n.
pub fn cyclotomic_cosets(n: usize) -> Result<Vec<Vec<usize>>> {
    if n % 2 == 0 {
        return Err(Error::EvenModulus(n));
    }
    let mut seen = vec![false; n];
    let mut cosets = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut orbit = Vec::new();
        let mut j = start;
        loop {
            seen[j] = true;
            orbit.push(j);
            j = (2 * j) % n;
            if j == start {
                break;
            }
        }
        cosets.push(orbit);
    }
    Ok(cosets)
}

/// The minimal polynomial of gamma^j over GF(2), for j ranging over one
/// cyclotomic coset mod n = 2^m - 1 and gamma the field generator:
/// the product of (x + gamma^j) has all its coefficients in {0, 1}.
pub fn minimal_polynomial(field: &Gf2mField, coset: &[usize], n: usize) -> Result<Poly2> {
    if n != field.group_order() {
        return Err(Error::FieldLengthMismatch {
            m: field.m(),
            expected: field.group_order(),
            got: n,
        });
    }
    let members: std::collections::BTreeSet<usize> = coset.iter().map(|&j| j % n).collect();
    if members.len() != coset.len() || coset.is_empty() {
        return Err(Error::NotACoset(coset.to_vec()));
    }
    for &j in &members {
        if !members.contains(&((2 * j) % n)) {
            return Err(Error::NotACoset(coset.to_vec()));
        }
    }
    // product of linear factors, coefficients in GF(2^m) ascending
    let mut coeffs: Vec<u64> = vec![1];
    for &j in &members {
        let root = field.generator_pow(j);
        let mut next = vec![0u64; coeffs.len() + 1];
        for (i, &c) in coeffs.iter().enumerate() {
            next[i + 1] ^= c;
            next[i] ^= field.mul(root, c);
        }
        coeffs = next;
    }
    let mut out = Poly2::zero();
    for (i, &c) in coeffs.iter().enumerate() {
        match c {
            0 => {}
            1 => out = &out + &Poly2::monomial(i),
            _ => unreachable!("conjugate-closed products are binary"),
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coset_of(cosets: &[Vec<usize>], leader: usize) -> &Vec<usize> {
        cosets.iter().find(|c| c[0] == leader).unwrap()
    }

    #[test]
    fn cosets_mod_15() {
        let cs = cyclotomic_cosets(15).unwrap();
        assert_eq!(coset_of(&cs, 0), &vec![0]);
        assert_eq!(coset_of(&cs, 1), &vec![1, 2, 4, 8]);
        assert_eq!(coset_of(&cs, 3), &vec![3, 6, 12, 9]);
        assert_eq!(coset_of(&cs, 5), &vec![5, 10]);
        assert_eq!(coset_of(&cs, 7), &vec![7, 14, 13, 11]);
        let mut all: Vec<usize> = cs.into_iter().flatten().collect();
        all.sort_unstable();
        assert_eq!(all, (0..15).collect::<Vec<_>>());
    }

    #[test]
    fn cosets_mod_7() {
        let cs = cyclotomic_cosets(7).unwrap();
        assert_eq!(coset_of(&cs, 1), &vec![1, 2, 4]);
        assert_eq!(coset_of(&cs, 3), &vec![3, 6, 5]);
        assert!(cyclotomic_cosets(8).is_err());
    }

    #[test]
    fn gf16_tables() {
        let f = Gf2mField::with_degree(4).unwrap();
        assert_eq!(f.group_order(), 15);
        // x^4 = x + 1 under 1+x+x^4
        assert_eq!(f.generator_pow(4), 0b0011);
        assert_eq!(f.mul(f.generator_pow(7), f.generator_pow(8)), 1);
        assert_eq!(f.mul(0, 5), 0);
    }

    #[test]
    fn reject_non_primitive_modulus() {
        // irreducible with exponent 5
        assert!(Gf2mField::new("11111".parse().unwrap()).is_err());
        // reducible
        assert!(Gf2mField::new("101".parse().unwrap()).is_err());
    }

    #[test]
    fn minimal_polynomials_mod_15() {
        let f = Gf2mField::with_degree(4).unwrap();
        let cs = cyclotomic_cosets(15).unwrap();
        let mp = |leader: usize| {
            minimal_polynomial(&f, coset_of(&cs, leader), 15).unwrap()
        };
        assert_eq!(mp(1), "11001".parse().unwrap());
        assert_eq!(mp(5), "111".parse().unwrap());
        assert_eq!(mp(0), "11".parse().unwrap());
        // each output is irreducible and vanishes exactly on its coset
        for leader in [0usize, 1, 3, 5, 7] {
            let p = mp(leader);
            assert!(p.is_irreducible().unwrap());
            for j in 0..15 {
                let is_root = f.eval_poly2(&p, f.generator_pow(j)) == 0;
                assert_eq!(is_root, coset_of(&cs, leader).contains(&j));
            }
        }
    }

    #[test]
    fn reject_non_coset() {
        let f = Gf2mField::with_degree(4).unwrap();
        assert!(minimal_polynomial(&f, &[1, 2], 15).is_err());
        assert!(minimal_polynomial(&f, &[1, 2, 4, 8], 7).is_err());
    }
}
