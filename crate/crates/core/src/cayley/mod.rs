//! Cayley biforms of parametrized curves: construction through the
//! resultant of two contractions, evaluation and incidence, group actions,
//! Plücker rewriting and plane-curve implicitization.

mod biform;
mod curve;
mod implicit;
mod plucker;

pub use biform::{cayley_biform, eval_biform, incident, normalize, BiTerm, CayleyBiform, Plane};
pub(crate) use biform::biform_of_components;
pub use curve::{act_gl2, act_gln, gl2_det, gl2_from_ints, CurveMap, Gl2};
pub use implicit::implicitize_plane_curve;
pub use plucker::{plucker_rewrite, PluckerRep};
