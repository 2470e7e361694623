//! Burst-error-correcting cyclic codes and the quantum codes built from
//! them.
//!
//! The crate constructs binary cyclic codes with verified burst-correcting
//! ability (Fire-type products, weakly self-dual BCH codes, a fixed
//! [21,12] code), a GF(4) cyclic code check for the length-13 case, and
//! four quantum code construction schemes (nested-code superpositions,
//! the self-dual special case, a greedy coset search, and a
//! shifted-parity-check stabilizer). Every claimed ability is re-verified
//! by exhaustive syndrome enumeration, and quantum codes are checked both
//! symbolically (coset conditions) and densely (exact integer state
//! vectors), so all results are exact: no floating point anywhere.
//!
//! Modules:
//!
//! * [`gf2`] — GF(2) polynomials, GF(2^m), bit vectors and matrices.
//! * [`gf4`] — GF(4) arithmetic and the length-13 burst check.
//! * [`cyclic`] — binary cyclic codes, burst enumeration, ability
//!   verification, a syndrome-table burst decoder.
//! * [`families`] — code constructions with verification transcripts.
//! * [`quantum`] — burst error models, code constructions, symbolic and
//!   dense verifiers, dimension bounds.

pub mod cyclic;
pub mod error;
pub mod families;
pub mod gf2;
pub mod gf4;
pub mod quantum;

pub use error::{Error, Result};
