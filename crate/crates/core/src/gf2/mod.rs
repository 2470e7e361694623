//! Exact arithmetic over GF(2): polynomials, extension fields GF(2^m),
//! and bit vectors/matrices.

mod bits;
mod field;
mod poly;

pub use bits::{symplectic_product, BitMat, BitVec};
pub use field::{cyclotomic_cosets, minimal_polynomial, Gf2mField};
pub use poly::{find_primitive, Poly2};
