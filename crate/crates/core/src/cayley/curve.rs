use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactpoly::{bf_compose, bf_substitute_gl2, BinaryForm, Ring, Scalar};
use crate::linalg;

/// `2 x 2` rational matrix, row-major.
pub type Gl2 = [[Scalar; 2]; 2];

/// Degree-`d` parametrization `z ↦ (f0(z), ..., fn(z))` of a curve in `P^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveMap {
    components: Vec<BinaryForm>,
}

impl CurveMap {
    /// Components must be numeric, share a degree `d >= 1`, number at
    /// least two, and not all vanish.
    pub fn new(components: Vec<BinaryForm>) -> Result<Self> {
        if components.len() < 2 {
            return Err(Error::InvalidCurve("need at least two components".into()));
        }
        let d = components[0].degree();
        if d == 0 {
            return Err(Error::InvalidCurve("degree must be at least 1".into()));
        }
        if let Some(c) = components.iter().find(|c| c.degree() != d) {
            return Err(Error::DegreeMismatch(d, c.degree()));
        }
        if !components.iter().all(BinaryForm::is_numeric) {
            return Err(Error::NotScalar);
        }
        if components.iter().all(BinaryForm::is_zero) {
            return Err(Error::InvalidCurve("all components vanish".into()));
        }
        let ring = Ring::scalars();
        let components = components
            .into_iter()
            .map(|c| c.embed(&ring))
            .collect::<Result<Vec<_>>>()?;
        Ok(CurveMap { components })
    }

    /// Row `i` lists the coefficients of `fi` against `z0^(d-j) z1^j`.
    pub fn from_rows(rows: &[Vec<Scalar>]) -> Result<Self> {
        CurveMap::new(rows.iter().map(|r| BinaryForm::from_scalars(r)).collect())
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Result<Self> {
        CurveMap::new(rows.iter().map(|r| BinaryForm::from_ints(r)).collect())
    }

    /// Ambient projective dimension.
    pub fn n(&self) -> usize {
        self.components.len() - 1
    }

    pub fn d(&self) -> usize {
        self.components[0].degree()
    }

    pub fn components(&self) -> &[BinaryForm] {
        &self.components
    }

    pub fn rows(&self) -> Vec<Vec<Scalar>> {
        self.components
            .iter()
            .map(|c| c.scalar_coeffs().expect("numeric components"))
            .collect()
    }

    /// `f(z0, z1)` as an affine vector.
    pub fn point_at(&self, z0: &Scalar, z1: &Scalar) -> Vec<Scalar> {
        self.components
            .iter()
            .map(|c| c.eval(z0, z1).constant_value().expect("numeric components"))
            .collect()
    }

    pub fn scaled(&self, lambda: &Scalar) -> Result<CurveMap> {
        CurveMap::new(self.components.iter().map(|c| c.scale_scalar(lambda)).collect())
    }

    /// `self ∘ (phi0, phi1)`, componentwise.
    pub fn compose(&self, phi0: &BinaryForm, phi1: &BinaryForm) -> Result<CurveMap> {
        if phi0.degree() != phi1.degree() {
            return Err(Error::DegreeMismatch(phi0.degree(), phi1.degree()));
        }
        let ring = Ring::scalars();
        let (p0, p1) = (phi0.embed(&ring)?, phi1.embed(&ring)?);
        CurveMap::new(self.components.iter().map(|c| bf_compose(c, &p0, &p1)).collect())
    }

    /// `⟨f, w⟩ = Σ wi fi` for a numeric covector `w`.
    pub fn contract(&self, w: &[Scalar]) -> Result<BinaryForm> {
        if w.len() != self.components.len() {
            return Err(Error::Dimension(format!(
                "covector of length {} against P^{}",
                w.len(),
                self.n()
            )));
        }
        let mut acc = BinaryForm::zero(&Ring::scalars(), self.d());
        for (wi, fi) in w.iter().zip(&self.components) {
            if !wi.is_zero() {
                acc = acc.add(&fi.scale_scalar(wi))?;
            }
        }
        Ok(acc)
    }
}

pub fn gl2_det(a: &Gl2) -> Scalar {
    &a[0][0] * &a[1][1] - &a[0][1] * &a[1][0]
}

pub fn gl2_from_ints(m: [[i64; 2]; 2]) -> Gl2 {
    let s = |x: i64| BigRational::from_integer(x.into());
    [[s(m[0][0]), s(m[0][1])], [s(m[1][0]), s(m[1][1])]]
}

/// Reparametrization: each component becomes `fi(a z0 + b z1, c z0 + d z1)`.
pub fn act_gl2(f: &CurveMap, a: &Gl2) -> Result<CurveMap> {
    if gl2_det(a).is_zero() {
        return Err(Error::SingularMatrix);
    }
    CurveMap::new(f.components.iter().map(|c| bf_substitute_gl2(c, a)).collect())
}

/// `(Bf)_i = Σ_j B_ij f_j`.
pub fn act_gln(f: &CurveMap, b: &[Vec<Scalar>]) -> Result<CurveMap> {
    let m = f.components.len();
    if b.len() != m || b.iter().any(|r| r.len() != m) {
        return Err(Error::Dimension(format!("expected a {m}x{m} matrix")));
    }
    if linalg::det(b).is_zero() {
        return Err(Error::SingularMatrix);
    }
    let comps = b
        .iter()
        .map(|row| f.contract(row))
        .collect::<Result<Vec<_>>>()?;
    CurveMap::new(comps)
}
