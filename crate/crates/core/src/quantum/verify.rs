//! Symbolic and dense verification of coset-superposition codes.
//!
//! `dense_verify` is the brute-force oracle: it materializes every basis
//! state as an exact integer vector, applies e^dag e' for every ordered
//! pair of model errors (plus identity) and checks the two Gram
//! conditions — off-diagonal entries vanish, diagonal entries agree —
//! by integer equality.
//!
//! `symbolic_verify` checks the same code through the coset conditions
//! that make the construction work: representative differences stay
//! clear of error-sum cosets, X-projection sums avoid the base code,
//! and Z-projection sums avoid its dual. The two verifiers are
//! independent routes and are cross-checked against each other in the
//! test suite.

use serde::Serialize;

use crate::cyclic::CyclicCode;
use crate::error::{Error, Result};
use crate::gf2::Poly2;
use crate::quantum::bursts::QuantumBurstModel;
use crate::quantum::css::CssCode;
use crate::quantum::pauli::{apply_error, PauliError};

/// Outcome of a dense Gram-condition run.
#[derive(Debug, Clone, Serialize)]
pub struct DenseReport {
    pub schema: String,
    pub passed: bool,
    pub basis_states: usize,
    pub error_count: usize,
    pub pairs_checked: u64,
    pub violation: Option<DenseViolation>,
}

/// First failing pair, in scan order.
#[derive(Debug, Clone, Serialize)]
pub struct DenseViolation {
    /// Indices into [identity] + error list for the pair (e, e').
    pub left: usize,
    pub right: usize,
    /// Basis-state indices of the offending Gram entry.
    pub row: usize,
    pub col: usize,
    pub value: i64,
    pub expected: i64,
    pub condition: String,
}

/// Exhaustive state-vector check of the two Gram conditions over all
/// ordered pairs from the model's errors plus identity. Exact integer
/// arithmetic; requires n <= 21 and a base code with at most 2^10
/// codewords.
pub fn dense_verify(code: &CssCode, model: &QuantumBurstModel) -> Result<DenseReport> {
    if code.n() > 21 {
        return Err(Error::DenseScale(format!("n = {} exceeds 21", code.n())));
    }
    if code.base().dimension() > 10 {
        return Err(Error::DenseScale(format!(
            "base code has 2^{} codewords",
            code.base().dimension()
        )));
    }
    if model.n() != code.n() {
        return Err(Error::LengthMismatch {
            expected: code.n(),
            got: model.n(),
        });
    }
    let states: Vec<_> = (0..code.basis_size()).map(|i| code.basis_state(i)).collect();
    let mut errors = vec![PauliError::identity(code.n())];
    errors.extend(model.pauli_errors());

    let mut pairs_checked = 0u64;
    for (li, e) in errors.iter().enumerate() {
        for (ri, e_prime) in errors.iter().enumerate() {
            let composite = e.dagger().compose(e_prime)?;
            pairs_checked += 1;
            let mut reference: Option<i64> = None;
            for (j, state_j) in states.iter().enumerate() {
                let moved = apply_error(state_j, &composite)?;
                for (i, state_i) in states.iter().enumerate() {
                    let value = state_i.inner(&moved);
                    if i != j && value != 0 {
                        return Ok(report(
                            &states,
                            &errors,
                            pairs_checked,
                            Some(DenseViolation {
                                left: li,
                                right: ri,
                                row: i,
                                col: j,
                                value,
                                expected: 0,
                                condition: "off-diagonal".to_string(),
                            }),
                        ));
                    }
                    if i == j {
                        match reference {
                            None => reference = Some(value),
                            Some(expected) if value != expected => {
                                return Ok(report(
                                    &states,
                                    &errors,
                                    pairs_checked,
                                    Some(DenseViolation {
                                        left: li,
                                        right: ri,
                                        row: i,
                                        col: j,
                                        value,
                                        expected,
                                        condition: "diagonal".to_string(),
                                    }),
                                ));
                            }
                            Some(_) => {}
                        }
                    }
                }
            }
        }
    }
    Ok(report(&states, &errors, pairs_checked, None))
}

fn report(
    states: &[crate::quantum::pauli::SparseState],
    errors: &[PauliError],
    pairs_checked: u64,
    violation: Option<DenseViolation>,
) -> DenseReport {
    DenseReport {
        schema: "burstq/verify-dense/v1".to_string(),
        passed: violation.is_none(),
        basis_states: states.len(),
        error_count: errors.len() - 1,
        pairs_checked,
        violation,
    }
}

/// One clause of the symbolic check.
#[derive(Debug, Clone, Serialize)]
pub struct ClauseReport {
    pub passed: bool,
    pub checks: u64,
    pub counterexample: Option<String>,
}

/// Outcome of the coset-condition check, clause by clause.
#[derive(Debug, Clone, Serialize)]
pub struct SymbolicReport {
    pub schema: String,
    pub passed: bool,
    /// Representative differences avoid every sum of two X projections.
    pub rep_cosets: ClauseReport,
    /// Distinct X projections lie in distinct cosets of the base code.
    pub x_projections: ClauseReport,
    /// Distinct Z projections lie in distinct cosets of the dual code.
    pub z_projections: ClauseReport,
}

/// Coset-condition verification of a superposition code against a burst
/// model. Checks, in order: (i) a_i + a_j + alpha + alpha' is never a
/// base codeword for i != j; (ii) alpha + alpha' is never a nonzero
/// base codeword; (iii) beta + beta' is never a nonzero codeword of the
/// dual of the base.
pub fn symbolic_verify(code: &CssCode, model: &QuantumBurstModel) -> Result<SymbolicReport> {
    if model.n() != code.n() {
        return Err(Error::LengthMismatch {
            expected: code.n(),
            got: model.n(),
        });
    }
    let base = code.base();
    let dual = base.dual();

    // residues mod the base generator are additive, so precompute them
    let ex_res: Vec<Poly2> = code_syndromes(base, model.ex())?;
    let rep_res: Vec<Poly2> = code_syndromes(base, code.reps())?;

    let mut rep_cosets = ClauseReport {
        passed: true,
        checks: 0,
        counterexample: None,
    };
    'outer: for i in 0..rep_res.len() {
        for j in (i + 1)..rep_res.len() {
            let diff = &rep_res[i] + &rep_res[j];
            for (ai, a) in ex_res.iter().enumerate() {
                for (bi, b) in ex_res.iter().enumerate() {
                    rep_cosets.checks += 1;
                    if (&(&diff + a) + b).is_zero() {
                        rep_cosets.passed = false;
                        rep_cosets.counterexample = Some(format!(
                            "reps {i},{j} with X projections {} and {}",
                            model.ex()[ai],
                            model.ex()[bi]
                        ));
                        break 'outer;
                    }
                }
            }
        }
    }

    let x_projections = distinct_coset_clause(base, model.ex(), &ex_res);
    let ez_res = code_syndromes(&dual, model.ez())?;
    let z_projections = distinct_coset_clause(&dual, model.ez(), &ez_res);

    Ok(SymbolicReport {
        schema: "burstq/verify-symbolic/v1".to_string(),
        passed: rep_cosets.passed && x_projections.passed && z_projections.passed,
        rep_cosets,
        x_projections,
        z_projections,
    })
}

fn code_syndromes(code: &CyclicCode, vectors: &[crate::gf2::BitVec]) -> Result<Vec<Poly2>> {
    vectors.iter().map(|v| code.syndrome(v)).collect()
}

fn distinct_coset_clause(
    _code: &CyclicCode,
    vectors: &[crate::gf2::BitVec],
    residues: &[Poly2],
) -> ClauseReport {
    let mut seen: std::collections::HashMap<&Poly2, usize> = std::collections::HashMap::new();
    let mut clause = ClauseReport {
        passed: true,
        checks: vectors.len() as u64,
        counterexample: None,
    };
    for (i, r) in residues.iter().enumerate() {
        if let Some(&first) = seen.get(r) {
            clause.passed = false;
            clause.counterexample = Some(format!(
                "{} and {} share a coset",
                vectors[first], vectors[i]
            ));
            break;
        }
        seen.insert(r, i);
    }
    clause
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::BitVec;
    use crate::quantum::bursts::{quantum_bursts, QuantumBurstModel};
    use crate::quantum::css::{build_15_code, CssCode};

    #[test]
    fn identity_only_passes_valid_codes() {
        let code = build_15_code();
        let model = QuantumBurstModel::identity_only(15);
        let dense = dense_verify(&code, &model).unwrap();
        assert!(dense.passed);
        assert_eq!(dense.pairs_checked, 1);
        assert!(symbolic_verify(&code, &model).unwrap().passed);
    }

    #[test]
    fn same_coset_reps_fail_both_verifiers() {
        let base = build_15_code().base().clone();
        let codeword = BitVec::from_poly(base.generator(), 15).unwrap();
        let broken = CssCode::new(base, vec![BitVec::zero(15), codeword]).unwrap();
        let model = QuantumBurstModel::identity_only(15);
        let dense = dense_verify(&broken, &model).unwrap();
        assert!(!dense.passed);
        let v = dense.violation.unwrap();
        assert_eq!(v.condition, "off-diagonal");
        assert_eq!((v.left, v.right), (0, 0));
        assert!(!symbolic_verify(&broken, &model).unwrap().passed);
    }

    #[test]
    fn dense_scale_guard() {
        let base = crate::cyclic::CyclicCode::from_generator(23, "11".parse().unwrap());
        // 23 is odd but x^23+1 has 1+x as a factor; n = 23 > 21 triggers the guard
        let base = base.unwrap();
        let code = CssCode::new(base, vec![BitVec::zero(23)]).unwrap();
        let model = QuantumBurstModel::identity_only(23);
        assert!(matches!(
            dense_verify(&code, &model),
            Err(Error::DenseScale(_))
        ));
    }

    #[test]
    fn verifiers_agree_on_small_codes() {
        // weight-1 model against superpositions over the [15,4] dual of
        // the Hamming-type [15,11] code
        let hamming = crate::cyclic::CyclicCode::from_generator(15, "11001".parse().unwrap())
            .unwrap();
        let base = hamming.dual();
        let model = quantum_bursts(15, 1).unwrap();
        let reps = crate::quantum::css::greedy_reps(&base, &model, 2).unwrap();
        let code = CssCode::new(base, reps).unwrap();
        let dense = dense_verify(&code, &model).unwrap();
        let symbolic = symbolic_verify(&code, &model).unwrap();
        assert!(dense.passed);
        assert!(symbolic.passed);
    }
}
