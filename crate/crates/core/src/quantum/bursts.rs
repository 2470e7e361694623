//! Quantum burst error models.
//!
//! A width-b quantum burst is an error (+/-) X_alpha Z_beta whose joint
//! support supp(alpha) u supp(beta) lies inside one cyclic window of at
//! most b positions: contiguous qubits decohering together. The model
//! enumerates every such (alpha, beta) != (0, 0) exactly, along with the
//! X and Z projection sets used by the classical ability checks.
//!
//! A looser variant placing alpha and beta in independent windows is
//! available for comparison; the joint-window model is the default and
//! the one all verification runs use.

use crate::cyclic::enumerate_bursts;
use crate::error::{Error, Result};
use crate::gf2::BitVec;
use crate::quantum::pauli::PauliError;

/// The enumerated error set for length n and maximum burst width b.
#[derive(Debug, Clone)]
pub struct QuantumBurstModel {
    n: usize,
    b: usize,
    error_pairs: Vec<(BitVec, BitVec)>,
    ex: Vec<BitVec>,
    ez: Vec<BitVec>,
}

impl QuantumBurstModel {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn b(&self) -> usize {
        self.b
    }

    /// The deduplicated error pairs (alpha, beta), identity excluded.
    pub fn error_pairs(&self) -> &[(BitVec, BitVec)] {
        &self.error_pairs
    }

    /// X projections: every alpha occurring in the model, plus zero.
    pub fn ex(&self) -> &[BitVec] {
        &self.ex
    }

    /// Z projections: every beta occurring in the model, plus zero.
    pub fn ez(&self) -> &[BitVec] {
        &self.ez
    }

    /// Exact number of errors, identity excluded.
    pub fn exact_count(&self) -> u64 {
        self.error_pairs.len() as u64
    }

    /// The errors as signed Pauli operators (all with sign +1; the
    /// verification conditions are sign-independent).
    pub fn pauli_errors(&self) -> Vec<PauliError> {
        self.error_pairs
            .iter()
            .map(|(a, b)| PauliError::new(1, a.clone(), b.clone()).expect("equal lengths"))
            .collect()
    }

    /// A model with no errors at all; identity-only verification runs.
    pub fn identity_only(n: usize) -> Self {
        QuantumBurstModel {
            n,
            b: 0,
            error_pairs: Vec::new(),
            ex: vec![BitVec::zero(n)],
            ez: vec![BitVec::zero(n)],
        }
    }
}

/// A closed-form count for the width-b model, reported alongside the
/// exact enumeration for comparison. It matches the enumeration only at
/// b = 2; the exact count (3 n 4^(b-1)) is authoritative.
pub fn closed_form_count(n: usize, b: usize) -> u64 {
    3 * 4u64.pow(b as u32 - 1) * (n as u64 - b as u64 + 2)
}

/// Exact enumeration of all quantum bursts of width <= b on n qubits:
/// pairs (alpha, beta) != (0, 0) with joint support inside one cyclic
/// window of width <= b. Requires 1 <= b < n/2.
pub fn quantum_bursts(n: usize, b: usize) -> Result<QuantumBurstModel> {
    if b == 0 || 2 * b >= n {
        return Err(Error::BurstWidthOutOfRange { n, b });
    }
    let mut seen = std::collections::HashSet::new();
    let mut error_pairs = Vec::new();
    for start in 0..n {
        // each window position holds one of I, X, Z, Y encoded in 2 bits
        for assignment in 1u64..(1 << (2 * b)) {
            let mut alpha = BitVec::zero(n);
            let mut beta = BitVec::zero(n);
            for off in 0..b {
                let digit = (assignment >> (2 * off)) & 3;
                let pos = (start + off) % n;
                if digit & 1 == 1 {
                    alpha.set(pos, true);
                }
                if digit & 2 == 2 {
                    beta.set(pos, true);
                }
            }
            let pair = (alpha, beta);
            if seen.insert(pair.clone()) {
                error_pairs.push(pair);
            }
        }
    }
    Ok(finish_model(n, b, error_pairs))
}

/// The looser model: alpha and beta are each a burst of width <= b (or
/// zero) in windows chosen independently. Excluded from verification
/// runs; exists so the two readings can be compared.
pub fn quantum_bursts_independent(n: usize, b: usize) -> Result<QuantumBurstModel> {
    if b == 0 || 2 * b >= n {
        return Err(Error::BurstWidthOutOfRange { n, b });
    }
    let mut singles = vec![BitVec::zero(n)];
    singles.extend(enumerate_bursts(n, b)?);
    let mut error_pairs = Vec::new();
    for alpha in &singles {
        for beta in &singles {
            if alpha.is_zero() && beta.is_zero() {
                continue;
            }
            error_pairs.push((alpha.clone(), beta.clone()));
        }
    }
    Ok(finish_model(n, b, error_pairs))
}

fn finish_model(n: usize, b: usize, error_pairs: Vec<(BitVec, BitVec)>) -> QuantumBurstModel {
    let mut xs: std::collections::BTreeSet<BitVec> = std::collections::BTreeSet::new();
    let mut zs: std::collections::BTreeSet<BitVec> = std::collections::BTreeSet::new();
    xs.insert(BitVec::zero(n));
    zs.insert(BitVec::zero(n));
    for (a, z) in &error_pairs {
        xs.insert(a.clone());
        zs.insert(z.clone());
    }
    QuantumBurstModel {
        n,
        b,
        error_pairs,
        ex: xs.into_iter().collect(),
        ez: zs.into_iter().collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn width_one_is_three_per_position() {
        let m = quantum_bursts(15, 1).unwrap();
        assert_eq!(m.exact_count(), 45);
        // the closed form gives 3(n+1) = 48 here; enumeration wins
        assert_eq!(closed_form_count(15, 1), 48);
    }

    #[test]
    fn exact_count_formula() {
        for (n, b) in [(15usize, 1usize), (15, 3), (13, 3), (21, 4), (11, 2)] {
            let m = quantum_bursts(n, b).unwrap();
            assert_eq!(m.exact_count(), 3 * (n as u64) * 4u64.pow(b as u32 - 1));
        }
        // the closed form agrees only at b = 2
        assert_eq!(closed_form_count(11, 2), quantum_bursts(11, 2).unwrap().exact_count());
        assert_ne!(closed_form_count(15, 3), quantum_bursts(15, 3).unwrap().exact_count());
    }

    #[test]
    fn joint_window_contains_mixed_pair() {
        let m = quantum_bursts(15, 3).unwrap();
        let alpha = BitVec::from_support(15, &[3, 4]);
        let beta = BitVec::from_support(15, &[5]);
        assert!(m.error_pairs().contains(&(alpha, beta)));
    }

    #[test]
    fn projections_are_bursts_plus_zero() {
        for (n, b) in [(15usize, 3usize), (21, 4), (13, 3)] {
            let m = quantum_bursts(n, b).unwrap();
            let mut expected: std::collections::BTreeSet<BitVec> =
                enumerate_bursts(n, b).unwrap().into_iter().collect();
            expected.insert(BitVec::zero(n));
            let ex: std::collections::BTreeSet<BitVec> = m.ex().iter().cloned().collect();
            let ez: std::collections::BTreeSet<BitVec> = m.ez().iter().cloned().collect();
            assert_eq!(ex, expected);
            assert_eq!(ez, expected);
            assert_eq!(m.ex().len(), (n << (b - 1)) + 1);
        }
    }

    #[test]
    fn independent_model_is_larger() {
        let joint = quantum_bursts(15, 3).unwrap();
        let free = quantum_bursts_independent(15, 3).unwrap();
        assert_eq!(free.exact_count(), 61 * 61 - 1);
        assert!(free.exact_count() > joint.exact_count());
        // same projections either way
        assert_eq!(joint.ex(), free.ex());
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(quantum_bursts(15, 0).is_err());
        assert!(quantum_bursts(15, 8).is_err());
    }
}
