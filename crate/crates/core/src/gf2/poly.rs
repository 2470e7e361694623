//! Polynomials over GF(2) with exact arithmetic.
//!
//! Coefficients are packed into 64-bit words, bit `i` of word `i / 64`
//! holding the coefficient of x^i. The zero polynomial has no degree;
//! `degree()` returns `None` for it rather than a sentinel integer.
//!
//! Two text forms are accepted everywhere a polynomial is parsed:
//!
//! * an ascending coefficient bitstring, e.g. `"1001111"` for
//!   1 + x^3 + x^4 + x^5 + x^6;
//! * a comma-separated exponent list, e.g. `"0,3,4,5,6"` for the same
//!   polynomial.
//!
//! The bitstring is the canonical output form.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::gf2::bits::{BitMat, BitVec};

const WORD_BITS: usize = 64;

/// A polynomial over GF(2), coefficients ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly2 {
    // no trailing zero words
    words: Vec<u64>,
}

impl Poly2 {
    pub fn zero() -> Self {
        Poly2 { words: Vec::new() }
    }

    pub fn one() -> Self {
        Poly2 { words: vec![1] }
    }

    /// The monomial x^d.
    pub fn monomial(d: usize) -> Self {
        let mut p = Poly2 {
            words: vec![0; d / WORD_BITS + 1],
        };
        p.words[d / WORD_BITS] = 1u64 << (d % WORD_BITS);
        p
    }

    /// x^n + 1.
    pub fn xn_plus_one(n: usize) -> Self {
        let mut p = Self::monomial(n);
        p.words[0] ^= 1;
        p.normalize();
        p
    }

    pub(crate) fn from_words(words: Vec<u64>) -> Self {
        let mut p = Poly2 { words };
        p.normalize();
        p
    }

    /// Builds a polynomial from the exponents of its nonzero terms.
    pub fn from_exponents(exps: &[usize]) -> Self {
        let mut p = Poly2::zero();
        for &e in exps {
            p.flip(e);
        }
        p
    }

    /// Interprets bit `i` of `v` as the coefficient of x^i.
    pub fn from_int(v: u64) -> Self {
        Poly2::from_words(vec![v])
    }

    fn normalize(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.words == [1]
    }

    /// Degree of the polynomial; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        let last = *self.words.last()?;
        Some((self.words.len() - 1) * WORD_BITS + (63 - last.leading_zeros() as usize))
    }

    #[inline]
    pub fn coeff(&self, i: usize) -> bool {
        self.words
            .get(i / WORD_BITS)
            .is_some_and(|w| (w >> (i % WORD_BITS)) & 1 == 1)
    }

    fn flip(&mut self, i: usize) {
        if i / WORD_BITS >= self.words.len() {
            self.words.resize(i / WORD_BITS + 1, 0);
        }
        self.words[i / WORD_BITS] ^= 1u64 << (i % WORD_BITS);
        self.normalize();
    }

    /// Exponents of the nonzero terms, ascending.
    pub fn exponents(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (wi, &w) in self.words.iter().enumerate() {
            let mut bits = w;
            while bits != 0 {
                out.push(wi * WORD_BITS + bits.trailing_zeros() as usize);
                bits &= bits - 1;
            }
        }
        out
    }

    /// Number of nonzero terms.
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// self += other * x^shift, in place.
    fn xor_shifted(&mut self, other: &Poly2, shift: usize) {
        let word_shift = shift / WORD_BITS;
        let bit_shift = shift % WORD_BITS;
        let needed = other.words.len() + word_shift + 1;
        if self.words.len() < needed {
            self.words.resize(needed, 0);
        }
        for (i, &w) in other.words.iter().enumerate() {
            self.words[i + word_shift] ^= w << bit_shift;
            if bit_shift != 0 {
                self.words[i + word_shift + 1] ^= w >> (WORD_BITS - bit_shift);
            }
        }
        self.normalize();
    }

    /// Quotient and remainder: `self = q * b + r` with `deg r < deg b`.
    pub fn divmod(&self, b: &Poly2) -> Result<(Poly2, Poly2)> {
        let db = b.degree().ok_or(Error::DivisionByZero)?;
        let mut r = self.clone();
        let mut q = Poly2::zero();
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let shift = dr - db;
            q.flip(shift);
            r.xor_shifted(b, shift);
        }
        Ok((q, r))
    }

    pub fn rem(&self, b: &Poly2) -> Result<Poly2> {
        Ok(self.divmod(b)?.1)
    }

    /// True iff `self` divides `other` exactly.
    pub fn divides(&self, other: &Poly2) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(other.rem(self)?.is_zero())
    }

    /// Greatest common divisor; `gcd(f, 0) = f`. Errors if both inputs
    /// are zero.
    pub fn gcd(&self, other: &Poly2) -> Result<Poly2> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a)
    }

    /// Formal derivative: the coefficient of x^(2i+1) moves to x^(2i);
    /// even-exponent terms vanish in characteristic 2.
    pub fn derivative(&self) -> Poly2 {
        let mut d = Poly2::zero();
        for e in self.exponents() {
            if e % 2 == 1 {
                d.flip(e - 1);
            }
        }
        d
    }

    /// Reciprocal polynomial f*(x) = x^deg(f) f(1/x): the coefficient
    /// sequence reversed. Errors on the zero polynomial.
    pub fn reciprocal(&self) -> Result<Poly2> {
        let d = self.degree().ok_or(Error::ZeroPolynomial)?;
        let mut r = Poly2::zero();
        for e in self.exponents() {
            r.flip(d - e);
        }
        Ok(r)
    }

    pub fn is_self_reciprocal(&self) -> bool {
        self.reciprocal().map(|r| r == *self).unwrap_or(false)
    }

    /// The exponent (order) of f: the least s with f(x) | x^s + 1.
    /// Requires a nonzero constant term and degree >= 1.
    pub fn exponent(&self) -> Result<u64> {
        let d = self.degree().ok_or(Error::ZeroPolynomial)?;
        if d == 0 {
            return Err(Error::ConstantPolynomial);
        }
        if !self.coeff(0) {
            return Err(Error::ZeroConstantTerm);
        }
        // multiplicative order of x in GF(2)[x]/(f)
        let mut r = Poly2::monomial(1).rem(self)?;
        let mut s: u64 = 1;
        let bound = 1u64
            .checked_shl(d as u32)
            .expect("exponent computation limited to degree < 64");
        while !r.is_one() {
            r = r.mul_mod(&Poly2::monomial(1), self)?;
            s += 1;
            assert!(s <= bound, "order of x mod f exceeded group bound");
        }
        Ok(s)
    }

    /// self * other mod m.
    pub fn mul_mod(&self, other: &Poly2, m: &Poly2) -> Result<Poly2> {
        (self * other).rem(m)
    }

    /// True iff the polynomial has no repeated irreducible factor.
    pub fn is_squarefree(&self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.degree() == Some(0) {
            return Ok(true);
        }
        let d = self.derivative();
        if d.is_zero() {
            // a nonzero polynomial with zero derivative is a square
            return Ok(false);
        }
        Ok(self.gcd(&d)?.is_one())
    }

    /// True iff the polynomial has no nontrivial factor. Errors on
    /// constant input.
    pub fn is_irreducible(&self) -> Result<bool> {
        let d = self.degree().ok_or(Error::ZeroPolynomial)?;
        match d {
            0 => Err(Error::ConstantPolynomial),
            1 => Ok(true),
            _ => {
                if !self.coeff(0) {
                    // divisible by x
                    return Ok(false);
                }
                if !self.is_squarefree()? {
                    return Ok(false);
                }
                Ok(berlekamp_subalgebra_dim(self) == 1)
            }
        }
    }

    /// True iff irreducible of degree m with exponent 2^m - 1.
    pub fn is_primitive(&self) -> Result<bool> {
        let d = self.degree().ok_or(Error::ZeroPolynomial)?;
        if d == 0 {
            return Err(Error::ConstantPolynomial);
        }
        if !self.coeff(0) {
            return Ok(false);
        }
        if !self.is_irreducible()? {
            return Ok(false);
        }
        Ok(self.exponent()? == (1u64 << d) - 1)
    }

    /// Irreducible factors with multiplicity, sorted. The product of the
    /// returned factors equals the input exactly.
    pub fn factor(&self) -> Result<Vec<Poly2>> {
        let d = self.degree().ok_or(Error::ZeroPolynomial)?;
        if d == 0 {
            return Err(Error::ConstantPolynomial);
        }
        let mut factors = Vec::new();
        let mut f = self.clone();
        let x = Poly2::monomial(1);
        while !f.coeff(0) {
            factors.push(x.clone());
            f = f.divmod(&x)?.0;
        }
        if f.degree() != Some(0) {
            square_free_parts(&f, 1, &mut |part, multiplicity| {
                for irred in berlekamp_split(part) {
                    for _ in 0..multiplicity {
                        factors.push(irred.clone());
                    }
                }
            })?;
        }
        factors.sort();
        Ok(factors)
    }
}

/// Square-free decomposition in characteristic 2: calls `emit(g, m)` for
/// each square-free part g appearing with multiplicity m. Requires a
/// nonzero constant term.
fn square_free_parts(
    f: &Poly2,
    mult: u64,
    emit: &mut impl FnMut(&Poly2, u64),
) -> Result<()> {
    let deriv = f.derivative();
    if deriv.is_zero() {
        // f is a perfect square: halve every exponent and double multiplicity
        let mut root = Poly2::zero();
        for e in f.exponents() {
            root.flip(e / 2);
        }
        return square_free_parts(&root, mult * 2, emit);
    }
    let mut c = f.gcd(&deriv)?;
    let mut w = f.divmod(&c)?.0;
    let mut i = 1u64;
    while w.degree() != Some(0) {
        let y = w.gcd(&c)?;
        let part = w.divmod(&y)?.0;
        if part.degree().unwrap_or(0) > 0 {
            emit(&part, mult * i);
        }
        c = c.divmod(&y)?.0;
        w = y;
        i += 1;
    }
    if c.degree() != Some(0) {
        square_free_parts(&c, mult, emit)?;
    }
    Ok(())
}

/// Dimension of { v : v^2 = v (mod f) }, which equals the number of
/// distinct irreducible factors of f.
fn berlekamp_subalgebra_dim(f: &Poly2) -> usize {
    berlekamp_nullspace(f).num_rows()
}

/// Basis of the subalgebra { v : v^2 = v (mod f) } as vectors of
/// coefficients 0..deg(f).
fn berlekamp_nullspace(f: &Poly2) -> BitMat {
    let n = f.degree().expect("nonzero polynomial");
    // row i of Q is x^{2i} mod f; v is fixed by squaring iff v (Q - I) = 0
    let mut rows = Vec::with_capacity(n);
    let mut r = Poly2::one();
    let xsq = Poly2::monomial(2);
    for i in 0..n {
        let mut row = BitVec::from_poly(&r, n).expect("residue fits");
        row.set(i, row.get(i) ^ true);
        rows.push(row);
        r = r.mul_mod(&xsq, f).expect("f nonzero");
    }
    // left nullspace of (Q - I) = nullspace of its transpose
    BitMat::new(rows).expect("uniform rows").transpose().nullspace()
}

/// Splits a square-free polynomial into its irreducible factors
/// (deterministic Berlekamp elimination).
fn berlekamp_split(f: &Poly2) -> Vec<Poly2> {
    debug_assert!(f.is_squarefree().unwrap());
    let null = berlekamp_nullspace(f);
    let r = null.num_rows();
    let mut factors = vec![f.clone()];
    if r == 1 {
        return factors;
    }
    'outer: for v in null.rows() {
        let vp = v.to_poly();
        if vp.degree().map_or(true, |d| d == 0) {
            continue; // constants do not split anything
        }
        let mut next = Vec::with_capacity(factors.len());
        for u in &factors {
            if u.degree() == Some(1) {
                next.push(u.clone());
                continue;
            }
            let reduced = vp.rem(u).expect("u nonzero");
            let g0 = u.gcd(&reduced).expect("not both zero");
            if g0.degree().map_or(true, |d| d == 0 || d == u.degree().unwrap()) {
                next.push(u.clone());
                continue;
            }
            let g1 = u.divmod(&g0).expect("g0 nonzero").0;
            next.push(g0);
            next.push(g1);
        }
        factors = next;
        if factors.len() == r {
            break 'outer;
        }
    }
    assert_eq!(factors.len(), r, "Berlekamp basis must fully split");
    factors
}

/// The primitive polynomial of degree m with the smallest integer
/// encoding (bit i = coefficient of x^i). Deterministic, so every
/// construction that consumes it is reproducible bit for bit.
pub fn find_primitive(m: usize) -> Poly2 {
    assert!((1..=24).contains(&m), "degree out of desk-scale range");
    for middle in 0u64..(1u64 << (m - 1)) {
        let encoded = 1 | (middle << 1) | (1u64 << m);
        let candidate = Poly2::from_int(encoded);
        if candidate.is_primitive().expect("non-constant candidate") {
            return candidate;
        }
    }
    unreachable!("a primitive polynomial of degree {m} exists");
}

impl Add for &Poly2 {
    type Output = Poly2;
    fn add(self, rhs: &Poly2) -> Poly2 {
        let (long, short) = if self.words.len() >= rhs.words.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut words = long.words.clone();
        for (i, w) in short.words.iter().enumerate() {
            words[i] ^= w;
        }
        Poly2::from_words(words)
    }
}

impl Add for Poly2 {
    type Output = Poly2;
    fn add(self, rhs: Poly2) -> Poly2 {
        &self + &rhs
    }
}

impl Mul for &Poly2 {
    type Output = Poly2;
    fn mul(self, rhs: &Poly2) -> Poly2 {
        if self.is_zero() || rhs.is_zero() {
            return Poly2::zero();
        }
        let mut out = Poly2::zero();
        for e in self.exponents() {
            out.xor_shifted(rhs, e);
        }
        out
    }
}

impl Mul for Poly2 {
    type Output = Poly2;
    fn mul(self, rhs: Poly2) -> Poly2 {
        &self * &rhs
    }
}

impl Ord for Poly2 {
    /// Orders by degree, then by integer encoding; gives factor lists and
    /// search scans a canonical order.
    fn cmp(&self, other: &Self) -> Ordering {
        self.words
            .len()
            .cmp(&other.words.len())
            .then_with(|| self.words.iter().rev().cmp(other.words.iter().rev()))
    }
}

impl PartialOrd for Poly2 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Poly2 {
    /// Canonical form: ascending coefficient bitstring ("0" when zero).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.degree() {
            None => f.write_str("0"),
            Some(d) => {
                for i in 0..=d {
                    f.write_str(if self.coeff(i) { "1" } else { "0" })?;
                }
                Ok(())
            }
        }
    }
}

impl FromStr for Poly2 {
    type Err = Error;

    /// Accepts an ascending coefficient bitstring ("1001111") or a
    /// comma-separated exponent list ("0,3,4,5,6"). A comma-free string
    /// of 0s and 1s is always read as a bitstring.
    fn from_str(s: &str) -> Result<Poly2> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::PolyParse {
                literal: s.to_string(),
                reason: "empty literal".to_string(),
            });
        }
        if !s.contains(',') && s.chars().all(|c| c == '0' || c == '1') {
            let mut p = Poly2::zero();
            for (i, ch) in s.chars().enumerate() {
                if ch == '1' {
                    p.flip(i);
                }
            }
            return Ok(p);
        }
        let mut p = Poly2::zero();
        for item in s.split(',') {
            let e: usize = item.trim().parse().map_err(|_| Error::PolyParse {
                literal: s.to_string(),
                reason: format!("bad exponent {item:?}"),
            })?;
            if p.coeff(e) {
                return Err(Error::PolyParse {
                    literal: s.to_string(),
                    reason: format!("exponent {e} repeated"),
                });
            }
            p.flip(e);
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Poly2 {
        s.parse().unwrap()
    }

    #[test]
    fn parse_both_grammars() {
        assert_eq!(p("1001111"), p("0,3,4,5,6"));
        assert_eq!(p("1001111").to_string(), "1001111");
        assert_eq!(p("0").degree(), None);
        assert_eq!(p("3"), Poly2::monomial(3));
        assert!("".parse::<Poly2>().is_err());
        assert!("1,1".parse::<Poly2>().is_err());
    }

    #[test]
    fn add_examples() {
        // characteristic 2: f + f = 0
        let f = p("11");
        assert!((&f + &f).is_zero());
        assert_eq!(&f + &Poly2::zero(), f);
        // (1+x^3) + (x+x^3) = 1+x
        assert_eq!(&p("1001") + &p("0101"), p("11"));
    }

    #[test]
    fn mul_examples() {
        // (1+x+x^3)(1+x^2+x^4+x^5+x^6) = 1+x+x^2+x^4+x^5+x^8+x^9
        assert_eq!(&p("1101") * &p("1010111"), p("1110110011"));
        let f = p("1101");
        assert_eq!(&f * &Poly2::one(), f);
        // (1+x+x^2)(1+x+x^4) = 1+x^3+x^4+x^5+x^6
        assert_eq!(&p("111") * &p("11001"), p("1001111"));
    }

    #[test]
    fn divmod_examples() {
        let g = p("1001111");
        let (q, r) = Poly2::xn_plus_one(15).divmod(&g).unwrap();
        assert!(r.is_zero());
        assert_eq!(&q * &g, Poly2::xn_plus_one(15));

        let (q, r) = g.divmod(&g).unwrap();
        assert!(q.is_one() && r.is_zero());

        let (q, r) = p("11").divmod(&Poly2::monomial(2)).unwrap();
        assert!(q.is_zero());
        assert_eq!(r, p("11"));

        assert_eq!(
            p("11").divmod(&Poly2::zero()),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn gcd_examples() {
        let f = p("1011");
        assert_eq!(f.gcd(&Poly2::zero()).unwrap(), f);
        assert!(p("1011").gcd(&p("1101")).unwrap().is_one());
        let common = p("11");
        let a = &common * &p("1011");
        let b = &common * &p("1101");
        assert_eq!(a.gcd(&b).unwrap(), common);
        assert!(Poly2::zero().gcd(&Poly2::zero()).is_err());
    }

    #[test]
    fn reciprocal_examples() {
        assert_eq!(p("1101").reciprocal().unwrap(), p("1011"));
        assert_eq!(p("11").reciprocal().unwrap(), p("11"));
        let f = p("110101");
        assert_eq!(f.reciprocal().unwrap().reciprocal().unwrap(), f);
        assert!(Poly2::zero().reciprocal().is_err());
        assert!(p("11").is_self_reciprocal());
        assert!(!p("1101").is_self_reciprocal());
    }

    #[test]
    fn exponent_examples() {
        assert_eq!(p("11").exponent().unwrap(), 1);
        assert_eq!(p("1101").exponent().unwrap(), 7);
        assert_eq!(p("11111").exponent().unwrap(), 5);
        assert!(Poly2::one().exponent().is_err());
        assert!(p("01").exponent().is_err()); // x has zero constant term
    }

    #[test]
    fn irreducible_examples() {
        assert!(p("11001").is_irreducible().unwrap());
        assert!(!p("101").is_irreducible().unwrap()); // (1+x)^2
        assert!(p("1010111").is_irreducible().unwrap());
        assert!(Poly2::one().is_irreducible().is_err());
        assert!(p("01").is_irreducible().unwrap()); // x itself
        assert!(!p("011").is_irreducible().unwrap()); // x(1+x)
    }

    #[test]
    fn primitive_examples() {
        assert!(p("11001").is_primitive().unwrap());
        // irreducible but exponent 5, not 15
        assert!(p("11111").is_irreducible().unwrap());
        assert!(!p("11111").is_primitive().unwrap());
        assert!(!p("101").is_primitive().unwrap());
    }

    #[test]
    fn squarefree_examples() {
        assert!(!p("101").is_squarefree().unwrap());
        assert!(Poly2::xn_plus_one(15).is_squarefree().unwrap());
        assert!(p("1101").is_squarefree().unwrap());
        assert!(!(&p("1101") * &p("1101")).is_squarefree().unwrap());
    }

    #[test]
    fn factor_x7_and_x15() {
        let f7 = Poly2::xn_plus_one(7).factor().unwrap();
        assert_eq!(f7, vec![p("11"), p("1101"), p("1011")]);
        let f15 = Poly2::xn_plus_one(15).factor().unwrap();
        assert_eq!(
            f15,
            vec![p("11"), p("111"), p("11001"), p("10011"), p("11111")]
        );
        for (name, factors) in [(7usize, &f7), (15, &f15)] {
            let prod = factors
                .iter()
                .fold(Poly2::one(), |acc, q| &acc * q);
            assert_eq!(prod, Poly2::xn_plus_one(name));
            for q in factors {
                assert!(q.is_irreducible().unwrap());
            }
        }
    }

    #[test]
    fn factor_theorem_product() {
        let g = p("1110110011");
        assert_eq!(g.factor().unwrap(), vec![p("1101"), p("1010111")]);
    }

    #[test]
    fn factor_with_multiplicity() {
        let f = &(&p("11") * &p("11")) * &p("111");
        let mut factors = f.factor().unwrap();
        factors.sort();
        assert_eq!(factors, vec![p("11"), p("11"), p("111")]);
        // powers of x come out too
        let g = &Poly2::monomial(2) * &p("111");
        assert_eq!(g.factor().unwrap(), vec![p("01"), p("01"), p("111")]);
    }

    #[test]
    fn find_primitive_examples() {
        assert_eq!(find_primitive(3), p("1101"));
        assert_eq!(find_primitive(4), p("11001"));
        assert_eq!(find_primitive(1), p("11"));
        for m in 1..=8 {
            assert!(find_primitive(m).is_primitive().unwrap());
        }
    }
}
