//! Exact Cayley-Chow forms of rational curves in projective space.
//!
//! A degree-`d` parametrization `f = (f0, ..., fn)` of a curve in `P^n`
//! determines the biform `Res(⟨f, u⟩, ⟨f, v⟩)` in two covectors `u, v`. It
//! depends only on `u∧v`, vanishes exactly on the codimension-2 planes
//! meeting the curve, and transforms covariantly under reparametrization
//! and projective change of coordinates.

pub mod cayley;
pub mod degeneration;
pub mod error;
pub mod exactpoly;
pub mod io;
pub(crate) mod linalg;
pub mod oracle;
pub mod resultant;

pub use cayley::{
    act_gl2, act_gln, cayley_biform, eval_biform, implicitize_plane_curve, incident, normalize,
    plucker_rewrite, CayleyBiform, CurveMap, Gl2, Plane, PluckerRep,
};
pub use degeneration::{
    boundary_factor_check, family_biform, join_family, limit_direction, proportional,
    DegenerationFamily,
};
pub use error::{Error, Result};
pub use exactpoly::{BinaryForm, MPoly, Ring, Scalar};
pub use oracle::{base_locus_free, in_u, incident_oracle, map_degree, ParamSampler, UReport};
