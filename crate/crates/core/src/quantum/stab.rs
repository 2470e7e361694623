//! Stabilizer matrices in binary symplectic form, and the
//! shifted-parity-check construction from a weakly self-dual cyclic
//! code.
//!
//! A stabilizer row (alpha_i | beta_i) stands for the operator
//! X_alpha_i Z_beta_i. The rows must be totally singular — every
//! operator squares to the identity and all pairs commute — which is
//! exactly alpha_i . beta_i = 0 and alpha_i . beta_j + alpha_j . beta_i
//! = 0 for all i, j. The stabilized space has dimension 2^(n - rank).

use serde::{Deserialize, Serialize};

use crate::cyclic::{burst_ability, CyclicCode};
use crate::error::{Error, Result};
use crate::gf2::{symplectic_product, BitMat, BitVec};
use crate::quantum::bursts::QuantumBurstModel;

/// A list of commuting Pauli generators in (alpha | beta) form.
#[derive(Debug, Clone)]
pub struct StabilizerMatrix {
    n: usize,
    rows: Vec<(BitVec, BitVec)>,
}

/// JSON form: `{"kind":"stabilizer","n":21,"rows":[{"alpha":..,"beta":..}]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StabDescriptor {
    #[serde(default = "StabDescriptor::schema_tag")]
    pub schema: String,
    pub kind: String,
    pub n: usize,
    pub rows: Vec<StabRow>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StabRow {
    pub alpha: String,
    pub beta: String,
}

impl StabDescriptor {
    fn schema_tag() -> String {
        "burstq/stab/v1".to_string()
    }
}

impl StabilizerMatrix {
    /// Validates lengths and total singularity.
    pub fn new(n: usize, rows: Vec<(BitVec, BitVec)>) -> Result<Self> {
        for (a, b) in &rows {
            if a.len() != n || b.len() != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    got: a.len().max(b.len()),
                });
            }
        }
        for i in 0..rows.len() {
            if rows[i].0.dot(&rows[i].1) {
                return Err(Error::NotTotallySingular(i, i));
            }
            for j in (i + 1)..rows.len() {
                if symplectic_product(&rows[i], &rows[j]) {
                    return Err(Error::NotTotallySingular(i, j));
                }
            }
        }
        Ok(StabilizerMatrix { n, rows })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[(BitVec, BitVec)] {
        &self.rows
    }

    /// The rows as a (rows x 2n) binary matrix.
    pub fn as_bitmat(&self) -> BitMat {
        BitMat::new(
            self.rows
                .iter()
                .map(|(a, b)| a.concat(b))
                .collect(),
        )
        .expect("uniform 2n rows")
    }

    /// Rank of the (rows x 2n) matrix over GF(2). The stabilized space
    /// has dimension 2^(n - rank), so dependent rows cost nothing but
    /// add nothing.
    pub fn rank(&self) -> usize {
        self.as_bitmat().rank()
    }

    pub fn descriptor(&self) -> StabDescriptor {
        StabDescriptor {
            schema: StabDescriptor::schema_tag(),
            kind: "stabilizer".to_string(),
            n: self.n,
            rows: self
                .rows
                .iter()
                .map(|(a, b)| StabRow {
                    alpha: a.to_bitstring(),
                    beta: b.to_bitstring(),
                })
                .collect(),
        }
    }

    pub fn from_descriptor(d: &StabDescriptor) -> Result<Self> {
        if d.kind != "stabilizer" {
            return Err(Error::PreconditionFailed(format!(
                "descriptor kind {:?} is not a stabilizer",
                d.kind
            )));
        }
        let rows = d
            .rows
            .iter()
            .map(|r| {
                Ok((
                    BitVec::from_bitstring(&r.alpha)?,
                    BitVec::from_bitstring(&r.beta)?,
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        StabilizerMatrix::new(d.n, rows)
    }
}

/// Builds the stabilizer [H + H>b | H + H>(2b+1)] from the parity-check
/// matrix H of a weakly self-dual cyclic code with verified
/// burst-correcting ability 3b + 1, where `>m` cyclically shifts the
/// columns m to the right.
pub fn stab_from_cyclic(code: &CyclicCode, b: usize) -> Result<StabilizerMatrix> {
    if !code.is_weakly_self_dual() {
        return Err(Error::PreconditionFailed(format!(
            "[{},{}] code is not weakly self-dual",
            code.n(),
            code.dimension()
        )));
    }
    if !burst_ability(code, 3 * b + 1)? {
        return Err(Error::AbilityCheckFailed {
            which: format!(
                "[{},{}] code at burst width {}",
                code.n(),
                code.dimension(),
                3 * b + 1
            ),
        });
    }
    let h = code.parity_check_matrix();
    let alpha_part = h.xor(&h.shift_columns(b))?;
    let beta_part = h.xor(&h.shift_columns(2 * b + 1))?;
    let rows = alpha_part
        .rows()
        .iter()
        .cloned()
        .zip(beta_part.rows().iter().cloned())
        .collect();
    StabilizerMatrix::new(code.n(), rows)
}

/// Outcome of a stabilizer error-correction check.
#[derive(Debug, Clone, Serialize)]
pub struct StabReport {
    pub schema: String,
    pub passed: bool,
    pub rank: usize,
    pub pairs_checked: u64,
    pub violation: Option<StabViolation>,
}

#[derive(Debug, Clone, Serialize)]
pub struct StabViolation {
    /// Indices into [identity] + error list.
    pub left: usize,
    pub right: usize,
    pub alpha: String,
    pub beta: String,
}

/// Checks every pair of model errors (plus identity) against the
/// stabilizer: the difference (alpha, beta) must either lie in the row
/// space of the stabilizer (the errors act identically on the code
/// space) or anticommute with some row, making the syndrome
/// G (beta | alpha)^T nonzero.
pub fn stab_verify(g: &StabilizerMatrix, model: &QuantumBurstModel) -> Result<StabReport> {
    if model.n() != g.n() {
        return Err(Error::LengthMismatch {
            expected: g.n(),
            got: model.n(),
        });
    }
    let mat = g.as_bitmat();
    let mut errors = vec![(BitVec::zero(g.n()), BitVec::zero(g.n()))];
    errors.extend(model.error_pairs().iter().cloned());
    let mut pairs_checked = 0u64;
    for i in 0..errors.len() {
        for j in i..errors.len() {
            pairs_checked += 1;
            let diff = (errors[i].0.xor(&errors[j].0), errors[i].1.xor(&errors[j].1));
            if diff.0.is_zero() && diff.1.is_zero() {
                continue;
            }
            let detected = g.rows().iter().any(|row| symplectic_product(row, &diff));
            if detected {
                continue;
            }
            if !mat.row_space_contains(&diff.0.concat(&diff.1)) {
                return Ok(StabReport {
                    schema: "burstq/verify-stab/v1".to_string(),
                    passed: false,
                    rank: g.rank(),
                    pairs_checked,
                    violation: Some(StabViolation {
                        left: i,
                        right: j,
                        alpha: diff.0.to_bitstring(),
                        beta: diff.1.to_bitstring(),
                    }),
                });
            }
        }
    }
    Ok(StabReport {
        schema: "burstq/verify-stab/v1".to_string(),
        passed: true,
        rank: g.rank(),
        pairs_checked,
        violation: None,
    })
}
