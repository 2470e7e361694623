//! Binary cyclic codes and burst-error machinery.
//!
//! A cyclic code of odd length n is generated by a divisor g(x) of
//! x^n + 1 (odd lengths keep x^n + 1 square-free, which every
//! construction here relies on). The module provides burst enumeration,
//! exhaustive burst-correcting-ability verification by syndrome
//! distinctness, duality and weak self-duality tests, and a
//! syndrome-table burst decoder.
//!
//! Bursts wrap around cyclically: position n-1 is adjacent to position 0.
//! The `_with` variants expose a no-wraparound mode for comparison runs;
//! everything else defaults to wrapping.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf2::{BitMat, BitVec, Poly2};

/// A binary cyclic code `[n, k]` with generator g and parity polynomial
/// h, where g(x) h(x) = x^n + 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicCode {
    n: usize,
    g: Poly2,
    h: Poly2,
    k: usize,
}

/// JSON form of a cyclic code: `{"n": 15, "g": "1001111"}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CodeDescriptor {
    #[serde(default = "CodeDescriptor::schema_tag")]
    pub schema: String,
    pub n: usize,
    pub g: String,
}

impl CodeDescriptor {
    fn schema_tag() -> String {
        "burstq/code/v1".to_string()
    }
}

impl CyclicCode {
    /// Builds the `[n, n - deg g]` cyclic code generated by `g`.
    /// Errors if n is even or g does not divide x^n + 1.
    pub fn from_generator(n: usize, g: Poly2) -> Result<Self> {
        if n % 2 == 0 {
            return Err(Error::EvenLength(n));
        }
        let dg = g.degree().ok_or(Error::ZeroPolynomial)?;
        if dg > n {
            return Err(Error::LengthMismatch {
                expected: n,
                got: dg,
            });
        }
        let (h, r) = Poly2::xn_plus_one(n).divmod(&g)?;
        if !r.is_zero() {
            return Err(Error::NotADivisor {
                n,
                g: g.to_string(),
            });
        }
        Ok(CyclicCode {
            n,
            k: n - dg,
            g,
            h,
        })
    }

    pub fn from_descriptor(d: &CodeDescriptor) -> Result<Self> {
        Self::from_generator(d.n, d.g.parse()?)
    }

    pub fn descriptor(&self) -> CodeDescriptor {
        CodeDescriptor {
            schema: CodeDescriptor::schema_tag(),
            n: self.n,
            g: self.g.to_string(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Code dimension k = n - deg g.
    pub fn dimension(&self) -> usize {
        self.k
    }

    /// Degree of the generator polynomial (= n - k). Kept distinct from
    /// `dimension` because some degree criteria are stated on this value.
    pub fn generator_degree(&self) -> usize {
        self.n - self.k
    }

    pub fn generator(&self) -> &Poly2 {
        &self.g
    }

    /// The parity polynomial h with g h = x^n + 1.
    pub fn parity_poly(&self) -> &Poly2 {
        &self.h
    }

    /// Syndrome of a length-n vector: its residue mod g. Codewords map
    /// to zero; vectors in the same coset share a syndrome.
    pub fn syndrome(&self, v: &BitVec) -> Result<Poly2> {
        if v.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                got: v.len(),
            });
        }
        v.to_poly().rem(&self.g)
    }

    /// Membership test: v(x) must be a multiple of g(x).
    pub fn contains(&self, v: &BitVec) -> Result<bool> {
        Ok(self.syndrome(v)?.is_zero())
    }

    /// All 2^k codewords, in message order (desk scale only).
    pub fn codewords(&self) -> Vec<BitVec> {
        assert!(self.k <= 26, "codeword enumeration beyond desk scale");
        let mut out = Vec::with_capacity(1 << self.k);
        for msg in 0u64..(1 << self.k) {
            let c = &Poly2::from_int(msg) * &self.g;
            out.push(BitVec::from_poly(&c, self.n).expect("deg < n"));
        }
        out
    }

    /// Generator matrix: the k cyclic shifts x^i g(x), 0 <= i < k.
    pub fn generator_matrix(&self) -> BitMat {
        let rows = (0..self.k)
            .map(|i| {
                let shifted = &Poly2::monomial(i) * &self.g;
                BitVec::from_poly(&shifted, self.n).expect("deg < n")
            })
            .collect();
        BitMat::new(rows).expect("uniform length")
    }

    /// Parity-check matrix: the generator matrix of the dual code, whose
    /// rows are cyclic shifts of the reciprocal of h.
    pub fn parity_check_matrix(&self) -> BitMat {
        self.dual().generator_matrix()
    }

    /// The dual code, generated by the reciprocal of the parity
    /// polynomial.
    pub fn dual(&self) -> CyclicCode {
        let hstar = self.h.reciprocal().expect("h is nonzero");
        CyclicCode::from_generator(self.n, hstar).expect("h* divides x^n + 1")
    }

    /// Weak self-duality: the dual code is contained in this one.
    ///
    /// Decided by the polynomial test (g divides the dual generator,
    /// equivalently g g* divides x^n + 1) and cross-checked by row
    /// membership of the parity-check matrix; the routes must agree.
    pub fn is_weakly_self_dual(&self) -> bool {
        if 2 * self.k < self.n {
            return false;
        }
        let hstar = self.h.reciprocal().expect("h nonzero");
        let poly_route = hstar.rem(&self.g).expect("g nonzero").is_zero();
        let gstar = self.g.reciprocal().expect("g nonzero");
        let product_route = (&self.g * &gstar)
            .divides(&Poly2::xn_plus_one(self.n))
            .expect("nonzero product");
        let matrix_route = self
            .parity_check_matrix()
            .rows()
            .iter()
            .all(|row| self.contains(row).expect("row length n"));
        assert_eq!(poly_route, product_route, "divisibility routes disagree");
        assert_eq!(poly_route, matrix_route, "matrix route disagrees");
        poly_route
    }

    /// The sufficient factor criterion for weak self-duality: no
    /// irreducible factor of g is self-reciprocal or paired with its
    /// reciprocal among the factors.
    pub fn wsd_by_factor_criterion(&self) -> Result<bool> {
        if self.g.is_one() {
            // the whole space; no factors to test
            return Ok(true);
        }
        let factors = self.g.factor()?;
        for (i, f) in factors.iter().enumerate() {
            let fstar = f.reciprocal()?;
            if fstar == *f {
                return Ok(false);
            }
            if factors
                .iter()
                .enumerate()
                .any(|(j, other)| j != i && *other == fstar)
            {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// A burst pattern: a window of `width <= b` cyclically consecutive
/// positions starting at `start`, with the first and last window
/// positions nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Burst {
    n: usize,
    start: usize,
    pattern: Vec<bool>,
}

impl Burst {
    pub fn new(n: usize, start: usize, pattern: Vec<bool>) -> Result<Self> {
        if pattern.is_empty() || pattern.len() > n {
            return Err(Error::BurstWidthOutOfRange {
                n,
                b: pattern.len(),
            });
        }
        if !pattern[0] || !pattern[pattern.len() - 1] {
            return Err(Error::PreconditionFailed(
                "burst pattern must start and end with 1".to_string(),
            ));
        }
        Ok(Burst { n, start, pattern })
    }

    pub fn width(&self) -> usize {
        self.pattern.len()
    }

    pub fn to_bitvec(&self) -> BitVec {
        let mut v = BitVec::zero(self.n);
        for (off, &bit) in self.pattern.iter().enumerate() {
            if bit {
                v.set((self.start + off) % self.n, true);
            }
        }
        v
    }
}

/// All nonzero cyclic bursts of width at most b, without duplicates;
/// there are exactly n 2^(b-1) of them. Requires 1 <= b < n/2.
pub fn enumerate_bursts(n: usize, b: usize) -> Result<Vec<BitVec>> {
    if b == 0 || 2 * b >= n {
        return Err(Error::BurstWidthOutOfRange { n, b });
    }
    Ok(enumerate_bursts_with(n, b, true))
}

/// Burst enumeration with explicit wraparound control and no width
/// restriction other than b < n. With `wrap = false` the window may not
/// cross the end of the vector. Duplicates are removed; diagnostic use.
pub fn enumerate_bursts_with(n: usize, b: usize, wrap: bool) -> Vec<BitVec> {
    assert!(b >= 1 && b < n);
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for width in 1..=b {
        for start in 0..n {
            if !wrap && start + width > n {
                continue;
            }
            let interior = 1usize << width.saturating_sub(2);
            for mid in 0..interior {
                let mut pattern = vec![false; width];
                pattern[0] = true;
                pattern[width - 1] = true;
                for off in 1..width.saturating_sub(1) {
                    pattern[off] = (mid >> (off - 1)) & 1 == 1;
                }
                let v = Burst::new(n, start, pattern).expect("valid pattern").to_bitvec();
                if seen.insert(v.clone()) {
                    out.push(v);
                }
            }
        }
    }
    out
}

/// True iff v can be written as w1 + w2 with w1, w2 bursts of width <= b
/// or zero (so single bursts and the zero vector qualify).
pub fn is_sum_of_bursts(v: &BitVec, b: usize) -> Result<bool> {
    let n = v.len();
    if b == 0 || b >= n {
        return Err(Error::BurstWidthOutOfRange { n, b });
    }
    let mut set: std::collections::HashSet<BitVec> =
        enumerate_bursts_with(n, b, true).into_iter().collect();
    set.insert(BitVec::zero(n));
    Ok(set.iter().any(|w| set.contains(&v.xor(w))))
}

/// True iff every two different elements of F (implicitly extended by
/// the zero vector) lie in different cosets of the code, i.e. all
/// syndromes are pairwise distinct.
pub fn has_correcting_ability(code: &CyclicCode, errors: &[BitVec]) -> Result<bool> {
    let mut seen: std::collections::HashSet<Poly2> =
        std::collections::HashSet::with_capacity(errors.len() + 1);
    seen.insert(Poly2::zero()); // the zero vector's syndrome
    for e in errors {
        if e.is_zero() {
            continue;
        }
        if !seen.insert(code.syndrome(e)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Exhaustive burst-correcting-ability check: all bursts of width <= b
/// plus the zero vector must have pairwise distinct syndromes.
/// Requires b < n/2 so a burst cannot be confused with its complement
/// window.
pub fn burst_ability(code: &CyclicCode, b: usize) -> Result<bool> {
    let bursts = enumerate_bursts(code.n(), b)?;
    has_correcting_ability(code, &bursts)
}

/// The largest b (with 2b < n) for which `burst_ability` holds; 0 when
/// even single-position bursts collide.
pub fn max_burst_ability(code: &CyclicCode) -> usize {
    let mut best = 0;
    let mut b = 1;
    while 2 * b < code.n() {
        match burst_ability(code, b) {
            Ok(true) => best = b,
            _ => break, // ability is monotone decreasing in b
        }
        b += 1;
    }
    best
}

/// Degree criterion: if deg g >= n/2 + b the code is guaranteed to have
/// burst-correcting ability b. Returns the criterion value only; the
/// guarantee is checked against the exhaustive route in tests.
pub fn burstdeg_guarantee(code: &CyclicCode, b: usize) -> bool {
    2 * code.generator_degree() >= code.n() + 2 * b
}

/// Syndrome-table burst decoder for a code with verified ability b.
pub struct BurstDecoder {
    code: CyclicCode,
    table: HashMap<Poly2, BitVec>,
}

impl BurstDecoder {
    /// Builds the syndrome table over all n 2^(b-1) bursts plus zero.
    /// Errors if two table entries collide, i.e. the code does not have
    /// burst-correcting ability b.
    pub fn new(code: &CyclicCode, b: usize) -> Result<Self> {
        let mut table = HashMap::new();
        table.insert(Poly2::zero(), BitVec::zero(code.n()));
        for burst in enumerate_bursts(code.n(), b)? {
            let s = code.syndrome(&burst)?;
            if table.insert(s, burst).is_some() {
                return Err(Error::AbilityCheckFailed {
                    which: format!("[{}, {}] code at burst width {b}", code.n(), code.dimension()),
                });
            }
        }
        Ok(BurstDecoder {
            code: code.clone(),
            table,
        })
    }

    /// Returns the unique burst (or zero) matching the received word's
    /// syndrome, or None when the syndrome is outside the table. The
    /// corrected word is `received + error`.
    pub fn decode(&self, received: &BitVec) -> Result<Option<BitVec>> {
        let s = self.code.syndrome(received)?;
        Ok(self.table.get(&s).cloned())
    }
}

/// One-shot decode: builds the table and decodes a single word.
pub fn decode_burst(code: &CyclicCode, received: &BitVec, b: usize) -> Result<Option<BitVec>> {
    BurstDecoder::new(code, b)?.decode(received)
}
