//! Signed Pauli errors in symplectic form and exact sparse states.
//!
//! An error is (+/-) X_alpha Z_beta for binary vectors alpha, beta of
//! length n. On a basis state |v>, Z_beta acts first, contributing the
//! phase (-1)^(v . beta), then X_alpha flips v to v + alpha. Reordering
//! the two parts costs exactly (-1)^(alpha . beta), which is how adjoints
//! and products are tracked.
//!
//! States keep unnormalized integer amplitudes, so every inner product
//! below is an exact integer equality.

use crate::error::{Error, Result};
use crate::gf2::BitVec;

/// A signed Pauli error (+/-) X_alpha Z_beta.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PauliError {
    sign: i8,
    alpha: BitVec,
    beta: BitVec,
}

impl PauliError {
    pub fn new(sign: i8, alpha: BitVec, beta: BitVec) -> Result<Self> {
        assert!(sign == 1 || sign == -1, "sign must be +1 or -1");
        if alpha.len() != beta.len() {
            return Err(Error::LengthMismatch {
                expected: alpha.len(),
                got: beta.len(),
            });
        }
        Ok(PauliError { sign, alpha, beta })
    }

    pub fn identity(n: usize) -> Self {
        PauliError {
            sign: 1,
            alpha: BitVec::zero(n),
            beta: BitVec::zero(n),
        }
    }

    pub fn n(&self) -> usize {
        self.alpha.len()
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn alpha(&self) -> &BitVec {
        &self.alpha
    }

    pub fn beta(&self) -> &BitVec {
        &self.beta
    }

    /// The adjoint: (X_a Z_b)^dag = Z_b X_a = (-1)^(a.b) X_a Z_b.
    pub fn dagger(&self) -> PauliError {
        let flip = if self.alpha.dot(&self.beta) { -1 } else { 1 };
        PauliError {
            sign: self.sign * flip,
            alpha: self.alpha.clone(),
            beta: self.beta.clone(),
        }
    }

    /// Operator product `self * other` (other acts on the state first):
    /// X_a Z_b X_a' Z_b' = (-1)^(b.a') X_(a+a') Z_(b+b').
    pub fn compose(&self, other: &PauliError) -> Result<PauliError> {
        if self.n() != other.n() {
            return Err(Error::LengthMismatch {
                expected: self.n(),
                got: other.n(),
            });
        }
        let flip = if self.beta.dot(&other.alpha) { -1 } else { 1 };
        Ok(PauliError {
            sign: self.sign * other.sign * flip,
            alpha: self.alpha.xor(&other.alpha),
            beta: self.beta.xor(&other.beta),
        })
    }
}

/// An unnormalized state with exact integer amplitudes, stored as a map
/// from n-bit basis index to amplitude (sorted by index, zero-amplitude
/// entries never stored).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseState {
    n: usize,
    amps: Vec<(u64, i64)>,
}

impl SparseState {
    /// The basis state |index>.
    pub fn basis(n: usize, index: u64) -> Self {
        assert!(n <= 63, "basis index must fit in a machine word");
        assert!(index < 1 << n);
        SparseState {
            n,
            amps: vec![(index, 1)],
        }
    }

    /// Builds a state from (index, amplitude) entries, combining
    /// duplicate indices and dropping zeros.
    pub fn from_entries(n: usize, mut entries: Vec<(u64, i64)>) -> Self {
        entries.sort_unstable_by_key(|&(idx, _)| idx);
        let mut amps: Vec<(u64, i64)> = Vec::with_capacity(entries.len());
        for (idx, a) in entries {
            match amps.last_mut() {
                Some((last, acc)) if *last == idx => *acc += a,
                _ => amps.push((idx, a)),
            }
        }
        amps.retain(|&(_, a)| a != 0);
        SparseState { n, amps }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> usize {
        self.amps.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, i64)> + '_ {
        self.amps.iter().copied()
    }

    pub fn amplitude(&self, index: u64) -> i64 {
        match self.amps.binary_search_by_key(&index, |&(i, _)| i) {
            Ok(pos) => self.amps[pos].1,
            Err(_) => 0,
        }
    }

    /// Exact inner product <self | other> (real integer amplitudes).
    pub fn inner(&self, other: &SparseState) -> i64 {
        assert_eq!(self.n, other.n, "state length mismatch");
        let mut total = 0i64;
        let (mut i, mut j) = (0usize, 0usize);
        while i < self.amps.len() && j < other.amps.len() {
            match self.amps[i].0.cmp(&other.amps[j].0) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    total += self.amps[i].1 * other.amps[j].1;
                    i += 1;
                    j += 1;
                }
            }
        }
        total
    }
}

/// Applies (+/-) X_alpha Z_beta: the amplitude at v moves to v + alpha
/// with phase sign * (-1)^(v . beta).
pub fn apply_error(state: &SparseState, err: &PauliError) -> Result<SparseState> {
    if err.n() != state.n() {
        return Err(Error::LengthMismatch {
            expected: state.n(),
            got: err.n(),
        });
    }
    let alpha = err.alpha().to_mask();
    let beta = err.beta().to_mask();
    let entries = state
        .iter()
        .map(|(v, a)| {
            let phase = if (v & beta).count_ones() % 2 == 1 { -1 } else { 1 };
            (v ^ alpha, a * phase * err.sign() as i64)
        })
        .collect();
    Ok(SparseState::from_entries(state.n(), entries))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bv(s: &str) -> BitVec {
        BitVec::from_bitstring(s).unwrap()
    }

    #[test]
    fn bit_flip_and_phase() {
        let zero = SparseState::basis(3, 0b000);
        let x0 = PauliError::new(1, bv("100"), bv("000")).unwrap();
        let flipped = apply_error(&zero, &x0).unwrap();
        assert_eq!(flipped, SparseState::basis(3, 0b001));

        let z0 = PauliError::new(1, bv("000"), bv("100")).unwrap();
        let phased = apply_error(&flipped, &z0).unwrap();
        assert_eq!(phased.amplitude(0b001), -1);
    }

    #[test]
    fn reorder_phase_law() {
        // X_a Z_b = (-1)^(a.b) Z_b X_a on arbitrary states
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let n = 6;
            let alpha = BitVec::from_support(
                n,
                &(0..n).filter(|_| rng.gen_bool(0.5)).collect::<Vec<_>>(),
            );
            let beta = BitVec::from_support(
                n,
                &(0..n).filter(|_| rng.gen_bool(0.5)).collect::<Vec<_>>(),
            );
            let state = SparseState::from_entries(
                n,
                (0..8)
                    .map(|_| (rng.gen_range(0..1 << n), rng.gen_range(-3i64..=3)))
                    .collect(),
            );
            let x = PauliError::new(1, alpha.clone(), BitVec::zero(n)).unwrap();
            let z = PauliError::new(1, BitVec::zero(n), beta.clone()).unwrap();
            // X then Z versus Z then X
            let zx = apply_error(&apply_error(&state, &x).unwrap(), &z).unwrap();
            let xz = apply_error(&apply_error(&state, &z).unwrap(), &x).unwrap();
            let parity = alpha.dot(&beta);
            for (idx, amp) in zx.iter() {
                let expected = if parity { -amp } else { amp };
                assert_eq!(xz.amplitude(idx), expected);
            }
        }
    }

    #[test]
    fn compose_matches_sequential_application() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let n = 6;
        for _ in 0..200 {
            let rand_vec = |rng: &mut rand_chacha::ChaCha8Rng| {
                BitVec::from_support(
                    n,
                    &(0..n).filter(|_| rng.gen_bool(0.5)).collect::<Vec<_>>(),
                )
            };
            let e1 = PauliError::new(
                if rng.gen_bool(0.5) { 1 } else { -1 },
                rand_vec(&mut rng),
                rand_vec(&mut rng),
            )
            .unwrap();
            let e2 = PauliError::new(
                if rng.gen_bool(0.5) { 1 } else { -1 },
                rand_vec(&mut rng),
                rand_vec(&mut rng),
            )
            .unwrap();
            let state = SparseState::from_entries(
                n,
                (0..8)
                    .map(|_| (rng.gen_range(0..1 << n), rng.gen_range(-3i64..=3)))
                    .collect(),
            );
            let sequential =
                apply_error(&apply_error(&state, &e2).unwrap(), &e1).unwrap();
            let composed = apply_error(&state, &e1.compose(&e2).unwrap()).unwrap();
            assert_eq!(sequential, composed);
        }
    }

    #[test]
    fn dagger_inverts() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(13);
        let n = 5;
        for _ in 0..100 {
            let rand_vec = |rng: &mut rand_chacha::ChaCha8Rng| {
                BitVec::from_support(
                    n,
                    &(0..n).filter(|_| rng.gen_bool(0.5)).collect::<Vec<_>>(),
                )
            };
            let e = PauliError::new(1, rand_vec(&mut rng), rand_vec(&mut rng)).unwrap();
            let both = e.dagger().compose(&e).unwrap();
            let state = SparseState::basis(n, rng.gen_range(0..1 << n));
            assert_eq!(apply_error(&state, &both).unwrap(), state);
        }
    }

    #[test]
    fn inner_products() {
        let a = SparseState::from_entries(3, vec![(0, 1), (3, 2), (5, -1)]);
        let b = SparseState::from_entries(3, vec![(3, 4), (5, 1), (6, 9)]);
        assert_eq!(a.inner(&b), 8 - 1);
        assert_eq!(a.inner(&a), 1 + 4 + 1);
        // zero amplitudes are dropped
        let c = SparseState::from_entries(3, vec![(1, 5), (1, -5)]);
        assert_eq!(c.terms(), 0);
    }
}
