//! Superposition codes over cosets of a classical cyclic code.
//!
//! A `CssCode` holds a base code C0 and coset representatives a_i; the
//! basis states are the unnormalized sums over cosets, |x_i> =
//! sum_{c in C0} |c + a_i>. Construction happens two ways:
//!
//! * `css_construct` — from a nested pair C2^perp subset of C1 with the
//!   required X/Z correcting abilities, one representative per coset of
//!   C2^perp inside C1;
//! * `greedy_reps` — representative-by-representative, accepting any
//!   vector whose coset avoids every already-reachable error coset.
//!
//! Representatives are deterministic: coset representatives are the
//! minimum-weight (then smallest-encoding) members, and the greedy scan
//! runs from the all-one vector downward, which reproduces the printed
//! length-15 construction exactly.

use serde::{Deserialize, Serialize};

use crate::cyclic::{has_correcting_ability, CyclicCode};
use crate::error::{Error, Result};
use crate::gf2::{BitVec, Poly2};
use crate::quantum::bursts::QuantumBurstModel;
use crate::quantum::pauli::SparseState;

/// A coset-superposition code: base code plus coset representatives.
#[derive(Debug, Clone)]
pub struct CssCode {
    base: CyclicCode,
    reps: Vec<BitVec>,
}

/// JSON form: `{"kind":"css","n":15,"base_g":"1100111001","reps":[...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CssDescriptor {
    #[serde(default = "CssDescriptor::schema_tag")]
    pub schema: String,
    pub kind: String,
    pub n: usize,
    pub base_g: String,
    pub reps: Vec<String>,
}

impl CssDescriptor {
    fn schema_tag() -> String {
        "burstq/css/v1".to_string()
    }
}

impl CssCode {
    /// Assembles a code from its parts. Lengths are validated here;
    /// whether the representatives actually lie in distinct cosets is
    /// the verifiers' business, so deliberately broken codes can be
    /// built and fed to them.
    pub fn new(base: CyclicCode, reps: Vec<BitVec>) -> Result<Self> {
        for r in &reps {
            if r.len() != base.n() {
                return Err(Error::LengthMismatch {
                    expected: base.n(),
                    got: r.len(),
                });
            }
        }
        Ok(CssCode { base, reps })
    }

    pub fn n(&self) -> usize {
        self.base.n()
    }

    pub fn base(&self) -> &CyclicCode {
        &self.base
    }

    pub fn reps(&self) -> &[BitVec] {
        &self.reps
    }

    /// Number of basis states (the code dimension is this count).
    pub fn basis_size(&self) -> usize {
        self.reps.len()
    }

    /// The unnormalized basis state sum_{c in base} |c + a_i>.
    pub fn basis_state(&self, i: usize) -> SparseState {
        let rep = self.reps[i].to_mask();
        let entries = self
            .base
            .codewords()
            .iter()
            .map(|c| (c.to_mask() ^ rep, 1i64))
            .collect();
        SparseState::from_entries(self.n(), entries)
    }

    pub fn descriptor(&self) -> CssDescriptor {
        CssDescriptor {
            schema: CssDescriptor::schema_tag(),
            kind: "css".to_string(),
            n: self.n(),
            base_g: self.base.generator().to_string(),
            reps: self.reps.iter().map(BitVec::to_bitstring).collect(),
        }
    }

    pub fn from_descriptor(d: &CssDescriptor) -> Result<Self> {
        if d.kind != "css" {
            return Err(Error::PreconditionFailed(format!(
                "descriptor kind {:?} is not a css code",
                d.kind
            )));
        }
        let base = CyclicCode::from_generator(d.n, d.base_g.parse()?)?;
        let reps = d
            .reps
            .iter()
            .map(|s| BitVec::from_bitstring(s))
            .collect::<Result<Vec<_>>>()?;
        for r in &reps {
            if r.len() != d.n {
                return Err(Error::LengthMismatch {
                    expected: d.n,
                    got: r.len(),
                });
            }
        }
        CssCode::new(base, reps)
    }
}

/// Nested-pair construction: with C2^perp inside C1, C1 correcting the
/// X projections and C2 the Z projections, the cosets of C2^perp in C1
/// carry a code with 2^(k1 + k2 - n) basis states.
pub fn css_construct(
    c1: &CyclicCode,
    c2: &CyclicCode,
    model: &QuantumBurstModel,
) -> Result<CssCode> {
    if c1.n() != c2.n() || c1.n() != model.n() {
        return Err(Error::LengthMismatch {
            expected: c1.n(),
            got: c2.n().max(model.n()),
        });
    }
    let base = c2.dual();
    // nesting: every shift of the base generator must lie in C1
    let base_gen = BitVec::from_poly(base.generator(), base.n())?;
    if !c1.contains(&base_gen)? {
        return Err(Error::NestingViolated);
    }
    if !has_correcting_ability(c1, model.ex())? {
        return Err(Error::AbilityCheckFailed {
            which: format!("[{},{}] code against the X projections", c1.n(), c1.dimension()),
        });
    }
    if !has_correcting_ability(c2, model.ez())? {
        return Err(Error::AbilityCheckFailed {
            which: format!("[{},{}] code against the Z projections", c2.n(), c2.dimension()),
        });
    }
    let k1 = c1.dimension();
    let k2 = c2.dimension();
    assert!(k1 + k2 >= c1.n(), "nesting forces k1 + k2 >= n");
    let expected = 1usize << (k1 + k2 - c1.n());

    // bucket the codewords of C1 by their coset of the base code and
    // keep the minimum-weight (then smallest) member of each coset
    let mut best: std::collections::HashMap<Poly2, BitVec> = std::collections::HashMap::new();
    for word in c1.codewords() {
        let key = base.syndrome(&word)?;
        match best.entry(key) {
            std::collections::hash_map::Entry::Occupied(mut e) => {
                if (word.weight(), &word) < (e.get().weight(), e.get()) {
                    *e.get_mut() = word;
                }
            }
            std::collections::hash_map::Entry::Vacant(e) => {
                e.insert(word);
            }
        }
    }
    let mut reps: Vec<BitVec> = best.into_values().collect();
    reps.sort_by_key(|r| (r.weight(), r.clone()));
    assert_eq!(reps.len(), expected, "coset count must match dimensions");
    CssCode::new(base, reps)
}

/// Greedy representative search. Starting from a_1 = 0, candidates are
/// scanned from the all-one vector downward (by descending integer
/// encoding) and accepted when the candidate's coset differs from every
/// coset reachable from a chosen representative by a sum of two X
/// projections. Errors with `GreedyExhausted` when the scan runs out,
/// which cannot happen while target * 2^k * |{a + a'}| <= 2^n.
pub fn greedy_reps(
    code: &CyclicCode,
    model: &QuantumBurstModel,
    target: usize,
) -> Result<Vec<BitVec>> {
    let n = code.n();
    assert!(n <= 26, "greedy scan beyond desk scale");
    if model.n() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            got: model.n(),
        });
    }
    if !has_correcting_ability(code, model.ex())? {
        return Err(Error::AbilityCheckFailed {
            which: format!(
                "[{},{}] code against the X projections",
                n,
                code.dimension()
            ),
        });
    }
    if !has_correcting_ability(&code.dual(), model.ez())? {
        return Err(Error::AbilityCheckFailed {
            which: format!(
                "[{},{}] dual code against the Z projections",
                n,
                code.dual().dimension()
            ),
        });
    }

    // D = all sums of two X projections (projections include zero)
    let mut sums: std::collections::BTreeSet<BitVec> = std::collections::BTreeSet::new();
    for (i, a) in model.ex().iter().enumerate() {
        for b in &model.ex()[i..] {
            sums.insert(a.xor(b));
        }
    }

    let mut reps: Vec<BitVec> = vec![BitVec::zero(n)];
    let mut forbidden: std::collections::HashSet<Poly2> = std::collections::HashSet::new();
    for d in &sums {
        forbidden.insert(code.syndrome(d)?);
    }
    if target == 0 {
        return Ok(Vec::new());
    }
    let mut scan: i64 = (1i64 << n) - 1;
    while reps.len() < target {
        let mut candidate = None;
        while scan >= 0 {
            let v = bitvec_from_mask(n, scan as u64);
            scan -= 1;
            if !forbidden.contains(&code.syndrome(&v)?) {
                candidate = Some(v);
                break;
            }
        }
        let Some(v) = candidate else {
            return Err(Error::GreedyExhausted {
                found: reps.len(),
                target,
            });
        };
        for d in &sums {
            forbidden.insert(code.syndrome(&v.xor(d))?);
        }
        reps.push(v);
    }
    reps.truncate(target);

    // re-check the defining property of the chosen representatives
    for (i, a) in reps.iter().enumerate() {
        for b in reps.iter().skip(i + 1) {
            for d in &sums {
                assert!(
                    !code.contains(&a.xor(b).xor(d)).expect("length n"),
                    "greedy invariant violated"
                );
            }
        }
    }
    Ok(reps)
}

fn bitvec_from_mask(n: usize, mask: u64) -> BitVec {
    let mut v = BitVec::zero(n);
    for i in 0..n {
        if (mask >> i) & 1 == 1 {
            v.set(i, true);
        }
    }
    v
}

/// The two-basis-state length-15 code: superpositions over the cosets
/// of the [15,6] code generated by 1 + x + x^4 + x^5 + x^6 + x^9, with
/// representatives 0 and the all-one vector.
pub fn build_15_code() -> CssCode {
    let base = CyclicCode::from_generator(15, "1100111001".parse().expect("literal"))
        .expect("divides x^15 + 1");
    CssCode::new(base, vec![BitVec::zero(15), BitVec::all_one(15)]).expect("lengths match")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quantum::bursts::quantum_bursts;

    #[test]
    fn build_15_shape() {
        let code = build_15_code();
        assert_eq!(code.basis_size(), 2);
        assert_eq!(code.base().dimension(), 6);
        assert_eq!(
            code.base().generator(),
            &"1100111001".parse::<Poly2>().unwrap()
        );
        let s0 = code.basis_state(0);
        assert_eq!(s0.terms(), 64);
        assert_eq!(s0.amplitude(0), 1);
        let s1 = code.basis_state(1);
        assert_eq!(s1.amplitude((1 << 15) - 1), 1);
        assert_eq!(s0.inner(&s1), 0);
    }

    #[test]
    fn greedy_reproduces_the_printed_construction() {
        let base = build_15_code().base().clone();
        let model = quantum_bursts(15, 3).unwrap();
        let reps = greedy_reps(&base, &model, 2).unwrap();
        assert_eq!(reps[0], BitVec::zero(15));
        assert_eq!(reps[1], BitVec::all_one(15));
        assert_eq!(greedy_reps(&base, &model, 1).unwrap(), vec![BitVec::zero(15)]);
    }

    #[test]
    fn greedy_rejects_codes_without_ability() {
        // the [7,4] Hamming code is perfect: its cosets are exactly the
        // weight <= 1 leaders, so nothing survives two unit bursts
        let hamming = CyclicCode::from_generator(7, "1101".parse().unwrap()).unwrap();
        let model = quantum_bursts(7, 1).unwrap();
        let result = greedy_reps(&hamming, &model, 2);
        assert!(matches!(result, Err(Error::GreedyExhausted { found: 1, .. })));
    }

    #[test]
    fn css_from_the_21_code() {
        let c = CyclicCode::from_generator(21, "1110110011".parse().unwrap()).unwrap();
        let model = quantum_bursts(21, 4).unwrap();
        let code = css_construct(&c, &c, &model).unwrap();
        assert_eq!(code.basis_size(), 8);
        assert_eq!(code.base().dimension(), 9);
        assert_eq!(code.reps()[0], BitVec::zero(21));
        // representatives are pairwise non-congruent mod the base
        for (i, a) in code.reps().iter().enumerate() {
            for b in code.reps().iter().skip(i + 1) {
                assert!(!code.base().contains(&a.xor(b)).unwrap());
            }
        }
    }

    #[test]
    fn css_rejects_whole_space() {
        let whole = CyclicCode::from_generator(15, Poly2::one()).unwrap();
        let model = quantum_bursts(15, 3).unwrap();
        assert!(matches!(
            css_construct(&whole, &whole, &model),
            Err(Error::AbilityCheckFailed { .. })
        ));
    }

    #[test]
    fn css_rejects_broken_nesting() {
        // [15,9] is not weakly self-dual, so its dual is not inside it
        let c = CyclicCode::from_generator(15, "1001111".parse().unwrap()).unwrap();
        let model = quantum_bursts(15, 3).unwrap();
        assert!(matches!(
            css_construct(&c, &c, &model),
            Err(Error::NestingViolated)
        ));
    }

    #[test]
    fn descriptor_round_trip() {
        let code = build_15_code();
        let json = serde_json::to_string(&code.descriptor()).unwrap();
        let back = CssCode::from_descriptor(&serde_json::from_str(&json).unwrap()).unwrap();
        assert_eq!(back.reps(), code.reps());
        assert_eq!(back.base().generator(), code.base().generator());
    }
}
