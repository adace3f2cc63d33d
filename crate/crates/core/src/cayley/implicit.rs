use super::biform::cayley_biform;
use super::curve::CurveMap;
use super::plucker::plucker_rewrite;
use crate::error::{Error, Result};
use crate::exactpoly::{content_primitive, MPoly, Ring};
use crate::oracle::{in_u, ParamSampler};

/// Implicit equation of a plane curve parametrized birationally.
///
/// The kernel of `u∧v` in `P^2` is the point `u × v`, so substituting
/// `p12 ↦ x0, p02 ↦ -x1, p01 ↦ x2` into the Plücker form of the Chow form
/// yields the defining polynomial of the image.
pub fn implicitize_plane_curve(f: &CurveMap, sampler: &mut ParamSampler) -> Result<MPoly> {
    if f.n() != 2 {
        return Err(Error::Dimension(format!(
            "implicitization needs a plane curve, got P^{}",
            f.n()
        )));
    }
    let report = in_u(f, sampler)?;
    if !report.in_u {
        return Err(Error::NotInU(
            serde_json::to_string(&report).expect("report serializes"),
        ));
    }
    let rep = plucker_rewrite(&cayley_biform(f))?;
    let xs = Ring::points(2);
    let x = |i| MPoly::var(&xs, i);
    // slots of Ring::plucker(2): p01, p02, p12
    let images = [x(2), -x(1), x(0)];
    let eq = rep.poly().substitute(&xs, &images);
    Ok(content_primitive(&eq)?.1)
}
