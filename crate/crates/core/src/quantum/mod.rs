//! Quantum burst-error models, code constructions, and verifiers.

mod bounds;
mod bursts;
mod css;
mod pauli;
mod stab;
mod verify;

pub use bounds::{
    bounds_report, coset_dimension_report, gv_bound, hamming_bound, BoundsReport,
    CosetDimensionReport,
};
pub use bursts::{
    closed_form_count, quantum_bursts, quantum_bursts_independent, QuantumBurstModel,
};
pub use css::{build_15_code, css_construct, greedy_reps, CssCode, CssDescriptor};
pub use pauli::{apply_error, PauliError, SparseState};
pub use stab::{
    stab_from_cyclic, stab_verify, StabDescriptor, StabRow, StabReport, StabViolation,
    StabilizerMatrix,
};
pub use verify::{
    dense_verify, symbolic_verify, ClauseReport, DenseReport, DenseViolation, SymbolicReport,
};
