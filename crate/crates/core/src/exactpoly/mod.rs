//! Exact rational scalars, multivariate polynomials over named variable
//! blocks, and binary forms in `(z0, z1)`.

mod binary;
mod mpoly;
mod ring;
mod scalar;
pub(crate) mod upoly;

pub use binary::{bf_compose, bf_distinct_roots, bf_gcd, bf_substitute_gl2, BinaryForm};
pub use mpoly::{content_primitive, poly_divides, MPoly};
pub use ring::{Block, Monomial, Ring, Var};
pub use scalar::{parse_scalar, Scalar};
