//! Resultant-free checks on parametrizations: base points, incidence with
//! codimension-2 planes via GCDs of contractions, and the degree of the map
//! onto its image.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cayley::{CurveMap, Plane};
use crate::error::{Error, Result};
use crate::exactpoly::{bf_distinct_roots, bf_gcd, BinaryForm, Scalar};

/// Bound on numerator and denominator of sampled parameters.
pub const SAMPLE_BOUND: i64 = 20;
/// Independent parameter samples per degree estimate.
pub const SAMPLE_TRIALS: usize = 3;
const RETRIES: usize = 8;
/// Cap on samples drawn while looking for reduced fibers.
const MAX_DRAWS: usize = 64;

/// Seeded stream of projective parameters `(a : b)` with `a, b` uniform in
/// `[-20, 20]`, not both zero.
#[derive(Clone, Debug)]
pub struct ParamSampler {
    seed: u64,
    rng: ChaCha8Rng,
}

impl ParamSampler {
    pub fn new(seed: u64) -> Self {
        ParamSampler {
            seed,
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn next_param(&mut self) -> (Scalar, Scalar) {
        loop {
            let a = self.rng.gen_range(-SAMPLE_BOUND..=SAMPLE_BOUND);
            let b = self.rng.gen_range(-SAMPLE_BOUND..=SAMPLE_BOUND);
            if a != 0 || b != 0 {
                return (Scalar::from_integer(a.into()), Scalar::from_integer(b.into()));
            }
        }
    }
}

/// GCD of all nonzero forms; `None` if every form vanishes.
fn gcd_all<'a>(forms: impl IntoIterator<Item = &'a BinaryForm>) -> Result<Option<BinaryForm>> {
    let mut acc: Option<BinaryForm> = None;
    for f in forms {
        if f.is_zero() {
            continue;
        }
        acc = Some(match acc {
            None => bf_gcd(f, f)?,
            Some(g) => bf_gcd(&g, f)?,
        });
    }
    Ok(acc)
}

/// No common root among the components.
pub fn base_locus_free(f: &CurveMap) -> bool {
    gcd_all(f.components())
        .expect("numeric components")
        .is_some_and(|g| g.degree() == 0)
}

/// Whether the curve meets the plane, decided by a common root of
/// `⟨f, u⟩` and `⟨f, v⟩`.
///
/// A contraction that vanishes identically means the curve lies in that
/// hyperplane; the answer is then whether the other contraction has a root,
/// which holds for every `d >= 1` (and trivially when both vanish).
pub fn incident_oracle(f: &CurveMap, plane: &Plane) -> Result<bool> {
    if plane.n() != f.n() {
        return Err(Error::Dimension(format!("plane in P^{} vs curve in P^{}", plane.n(), f.n())));
    }
    if !base_locus_free(f) {
        return Err(Error::BaseLocus);
    }
    let h1 = f.contract(plane.u())?;
    let h2 = f.contract(plane.v())?;
    if h1.is_zero() || h2.is_zero() {
        return Ok(true);
    }
    Ok(bf_gcd(&h1, &h2)?.degree() >= 1)
}

/// Number of distinct parameters over the image point `f(a : b)`.
pub fn fiber_size(f: &CurveMap, a: &Scalar, b: &Scalar) -> Result<usize> {
    Ok(fiber(f, a, b)?.1)
}

/// Degree of the fiber GCD and its number of distinct roots.
fn fiber(f: &CurveMap, a: &Scalar, b: &Scalar) -> Result<(usize, usize)> {
    let p = f.point_at(a, b);
    if p.iter().all(Zero::is_zero) {
        return Err(Error::BaseLocus);
    }
    let comps = f.components();
    let mut minors = Vec::new();
    for i in 0..comps.len() {
        for j in i + 1..comps.len() {
            // fi(z) Pj - fj(z) Pi
            let m = comps[i]
                .scale_scalar(&p[j])
                .add(&comps[j].scale_scalar(&-p[i].clone()))?;
            minors.push(m);
        }
    }
    let g = gcd_all(&minors)?.ok_or(Error::BaseLocus)?;
    Ok((g.degree(), bf_distinct_roots(&g)?))
}

/// Generic fiber cardinality: the minimum fiber size over
/// [`SAMPLE_TRIALS`] sampled parameters with reduced fibers.
///
/// A fiber GCD with a repeated root marks a ramified (or cuspidal) sample,
/// where counting distinct roots would undercount; such samples are
/// rejected. Over the remaining samples only multiple points of the image
/// can inflate the count, which the minimum removes.
pub fn map_degree(f: &CurveMap, sampler: &mut ParamSampler) -> Result<usize> {
    if !base_locus_free(f) {
        return Err(Error::BaseLocus);
    }
    let mut best = usize::MAX;
    let mut accepted = 0;
    for _ in 0..MAX_DRAWS {
        let (a, b) = sampler.next_param();
        let (deg, distinct) = fiber(f, &a, &b)?;
        if deg != distinct {
            continue;
        }
        best = best.min(distinct);
        accepted += 1;
        if accepted == SAMPLE_TRIALS {
            return Ok(best);
        }
    }
    Err(Error::Sampling(format!(
        "only {accepted} of {MAX_DRAWS} sampled fibers were reduced"
    )))
}

/// Membership report for the good locus: base-point free and birational
/// onto the image.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UReport {
    pub base_free: bool,
    pub map_degree: Option<usize>,
    pub image_degree: Option<usize>,
    #[serde(rename = "in_U")]
    pub in_u: bool,
}

pub fn in_u(f: &CurveMap, sampler: &mut ParamSampler) -> Result<UReport> {
    if !base_locus_free(f) {
        return Ok(UReport {
            base_free: false,
            map_degree: None,
            image_degree: None,
            in_u: false,
        });
    }
    let d = f.d();
    for _ in 0..RETRIES {
        let e = map_degree(f, sampler)?;
        if e > 0 && d.is_multiple_of(e) {
            return Ok(UReport {
                base_free: true,
                map_degree: Some(e),
                image_degree: Some(d / e),
                in_u: e == 1,
            });
        }
    }
    Err(Error::Sampling(format!(
        "no sampled fiber size divides the degree {d}"
    )))
}
