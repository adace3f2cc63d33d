//! Joining two rational curves through a common point into a one-parameter
//! family of rational curves, and reading off the limit of its Chow forms.
//!
//! With `f(1, 0) = g(0, 1) = (1, ..., 1)`, the family
//! `F_eps(z)_i = f_i(z) · g_i(eps z0, z1)` has degree `d1 + d2`. As `eps → 0`
//! the curves `F_eps` tend to the union of the images of `f` and `g`, so the
//! lowest nonvanishing `eps`-order of the family's biform should be
//! proportional to the product of the two component biforms.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::cayley::{act_gl2, act_gln, biform_of_components, normalize, CayleyBiform, CurveMap, Gl2};
use crate::error::{Error, Result};
use crate::exactpoly::{BinaryForm, MPoly, Ring, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegenerationFamily {
    f: CurveMap,
    g: CurveMap,
    components: Vec<BinaryForm>,
}

impl DegenerationFamily {
    pub fn f(&self) -> &CurveMap {
        &self.f
    }

    pub fn g(&self) -> &CurveMap {
        &self.g
    }

    pub fn n(&self) -> usize {
        self.f.n()
    }

    pub fn degree(&self) -> usize {
        self.f.d() + self.g.d()
    }

    /// Components over the ring `Q[eps]`.
    pub fn components(&self) -> &[BinaryForm] {
        &self.components
    }

    /// The curve map at a fixed value of `eps`.
    pub fn at_eps(&self, value: &Scalar) -> Result<CurveMap> {
        let scalars = Ring::scalars();
        let comps = self
            .components
            .iter()
            .map(|c| {
                let cs = c
                    .coeffs()
                    .iter()
                    .map(|p| MPoly::constant(&scalars, p.eval(std::slice::from_ref(value))))
                    .collect();
                BinaryForm::new(&scalars, cs)
            })
            .collect();
        CurveMap::new(comps)
    }
}

fn attachment_errors(label: &str, point: &[Scalar]) -> Vec<String> {
    point
        .iter()
        .enumerate()
        .filter(|(_, x)| !x.is_one())
        .map(|(i, x)| {
            if x.is_zero() {
                format!("{label}: attachment coordinate {i} is zero")
            } else {
                format!("{label}: attachment coordinate {i} is {x}, expected 1")
            }
        })
        .collect()
}

/// `g_i(eps z0, z1)` over `Q[eps]`.
fn squeeze(g: &BinaryForm) -> BinaryForm {
    let ring = Ring::eps();
    let eps = MPoly::var(&ring, 0);
    let d = g.degree();
    let cs = g
        .coeffs()
        .iter()
        .enumerate()
        .map(|(j, c)| {
            let c = c.constant_value().expect("numeric component");
            eps.pow((d - j) as u32).scale(&c)
        })
        .collect();
    BinaryForm::new(&ring, cs)
}

/// Builds the joining family; requires `f(1, 0) = g(0, 1) = (1, ..., 1)`.
pub fn join_family(f: &CurveMap, g: &CurveMap) -> Result<DegenerationFamily> {
    if f.n() != g.n() {
        return Err(Error::Dimension(format!("P^{} vs P^{}", f.n(), g.n())));
    }
    let one = Scalar::one();
    let zero = Scalar::zero();
    let mut errs = attachment_errors("f(1,0)", &f.point_at(&one, &zero));
    errs.extend(attachment_errors("g(0,1)", &g.point_at(&zero, &one)));
    if !errs.is_empty() {
        return Err(Error::Attachment(errs.join("; ")));
    }
    let ring = Ring::eps();
    let components = f
        .components()
        .iter()
        .zip(g.components())
        .map(|(fi, gi)| {
            let fi = fi.embed(&ring).expect("scalars embed");
            fi.mul(&squeeze(gi))
        })
        .collect();
    Ok(DegenerationFamily {
        f: f.clone(),
        g: g.clone(),
        components,
    })
}

/// Biform of the family with `eps` kept symbolic.
pub fn family_biform(family: &DegenerationFamily) -> CayleyBiform {
    biform_of_components(family.n(), &family.components, true)
}

/// Normalized lowest-order coefficient in `eps`: the projective limit of
/// `eps ↦ C(eps)` as `eps → 0`.
pub fn limit_direction(c: &CayleyBiform) -> Result<CayleyBiform> {
    if c.is_zero() {
        return Err(Error::DegenerateCayleyForm);
    }
    let orders = c.eps_orders()?;
    let (_, lowest) = orders
        .iter()
        .find(|(_, part)| !part.is_zero())
        .expect("nonzero biform has a nonzero order");
    normalize(lowest)
}

/// `a ∝ b`, by cross-multiplying with the leading coefficients.
pub fn proportional(a: &CayleyBiform, b: &CayleyBiform) -> Result<bool> {
    if a.n() != b.n() || a.d() != b.d() {
        return Err(Error::Dimension(format!(
            "({}, {}) vs ({}, {})",
            a.n(),
            a.d(),
            b.n(),
            b.d()
        )));
    }
    match (a.poly().leading(), b.poly().leading()) {
        (None, None) => Err(Error::BothZero),
        (None, _) | (_, None) => Ok(false),
        (Some((_, la)), Some((_, lb))) => Ok(a.poly().scale(lb) == b.poly().scale(la)),
    }
}

/// Whether `limit` is proportional to the product of `parts`.
pub fn boundary_factor_check(limit: &CayleyBiform, parts: &[CayleyBiform]) -> Result<bool> {
    let total: usize = parts.iter().map(CayleyBiform::d).sum();
    if total != limit.d() {
        return Err(Error::DegreeMismatch(limit.d(), total));
    }
    let (first, rest) = parts
        .split_first()
        .ok_or_else(|| Error::Dimension("no component biforms".into()))?;
    let mut product = first.clone();
    for p in rest {
        product = product.mul(p)?;
    }
    proportional(limit, &product)
}

/// Which end of `P^1` the attachment point is moved to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Endpoint {
    /// `(1 : 0)`, used for the first curve.
    Start,
    /// `(0 : 1)`, used for the second curve.
    End,
}

/// A reparametrization sending `Start`/`End` to `param`.
fn moving_matrix(param: &(Scalar, Scalar), end: Endpoint) -> Gl2 {
    let (a, c) = param.clone();
    let (o, z) = (Scalar::one(), Scalar::zero());
    match end {
        // first column is the image of (1, 0)
        Endpoint::Start if !a.is_zero() => [[a, z.clone()], [c, o]],
        Endpoint::Start => [[a, o], [c, z]],
        // second column is the image of (0, 1)
        Endpoint::End if !c.is_zero() => [[o, a], [z, c]],
        Endpoint::End => [[z, a], [o, c]],
    }
}

/// Moves a shared point `f(zf) ∝ g(zg)` with no zero coordinate to
/// `A = (1, ..., 1)` at `f(1, 0)` and `g(0, 1)`, using a common diagonal
/// change of coordinates and reparametrizations of each curve.
pub fn normalize_attachment(
    f: &CurveMap,
    g: &CurveMap,
    zf: &(Scalar, Scalar),
    zg: &(Scalar, Scalar),
) -> Result<(CurveMap, CurveMap)> {
    for (label, c) in [("f", f), ("g", g)] {
        if let Some(i) = c.components().iter().position(BinaryForm::is_zero) {
            return Err(Error::Attachment(format!(
                "{label} lies in the coordinate hyperplane x{i} = 0"
            )));
        }
    }
    if f.n() != g.n() {
        return Err(Error::Dimension(format!("P^{} vs P^{}", f.n(), g.n())));
    }
    let p = f.point_at(&zf.0, &zf.1);
    let q = g.point_at(&zg.0, &zg.1);
    if let Some(i) = p.iter().position(Zero::is_zero) {
        return Err(Error::Attachment(format!(
            "attachment coordinate {i} is zero at the chosen point"
        )));
    }
    let same = (0..p.len()).all(|i| (0..p.len()).all(|j| &p[i] * &q[j] == &p[j] * &q[i]));
    if !same {
        return Err(Error::Attachment("the chosen points of f and g differ".into()));
    }
    let m = p.len();
    let diag: Vec<Vec<Scalar>> = (0..m)
        .map(|i| {
            (0..m)
                .map(|j| if i == j { p[i].recip() } else { Scalar::zero() })
                .collect()
        })
        .collect();
    let f2 = act_gln(&act_gl2(f, &moving_matrix(zf, Endpoint::Start))?, &diag)?;
    let g2 = act_gln(&act_gl2(g, &moving_matrix(zg, Endpoint::End))?, &diag)?;
    let lambda = &q[0] / &p[0];
    let g2 = g2.scaled(&lambda.recip())?;
    Ok((f2, g2))
}

fn projective_key(p: &[Scalar]) -> Option<Vec<Scalar>> {
    let k = p.iter().position(|x| !x.is_zero())?;
    Some(p.iter().map(|x| x / &p[k]).collect())
}

/// Searches integer parameters in `[-bound, bound]^2` for a point shared by
/// both curves with every coordinate nonzero.
pub fn find_common_point(
    f: &CurveMap,
    g: &CurveMap,
    bound: i64,
) -> Option<((Scalar, Scalar), (Scalar, Scalar))> {
    let params: Vec<(Scalar, Scalar)> = (-bound..=bound)
        .flat_map(|a| (-bound..=bound).map(move |b| (a, b)))
        .filter(|&(a, b)| (a, b) != (0, 0) && num_integer::gcd(a, b) == 1)
        .map(|(a, b)| (Scalar::from_integer(a.into()), Scalar::from_integer(b.into())))
        .collect();
    let mut seen: BTreeMap<Vec<Scalar>, (Scalar, Scalar)> = BTreeMap::new();
    for z in &params {
        let p = f.point_at(&z.0, &z.1);
        if p.iter().any(Zero::is_zero) {
            continue;
        }
        if let Some(key) = projective_key(&p) {
            seen.entry(key).or_insert_with(|| z.clone());
        }
    }
    params.iter().find_map(|w| {
        let key = projective_key(&g.point_at(&w.0, &w.1))?;
        seen.get(&key).map(|z| (z.clone(), w.clone()))
    })
}
