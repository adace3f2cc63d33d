use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::{One, Zero};

use super::curve::CurveMap;
use crate::error::{Error, Result};
use crate::exactpoly::{content_primitive, BinaryForm, Block, MPoly, Ring, Scalar, Var};
use crate::linalg;
use crate::resultant::resultant;

/// Bidegree-`(d, d)` form in two covectors `u, v` of `P^n`, optionally with
/// coefficients polynomial in `eps`. Backed by a polynomial over
/// `u0..un, v0..vn[, eps]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CayleyBiform {
    n: usize,
    d: usize,
    poly: MPoly,
}

/// One coefficient-table entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiTerm {
    pub alpha: Vec<u32>,
    pub beta: Vec<u32>,
    pub eps: u32,
    pub coeff: Scalar,
}

impl CayleyBiform {
    /// Wraps `poly`, checking the ring layout and that every term has
    /// degree `d` in `u` and `d` in `v`.
    pub fn from_poly(n: usize, d: usize, poly: MPoly) -> Result<Self> {
        let ring = poly.ring();
        let with_eps = ring.has_block(Block::Eps);
        if **ring != *Ring::chow(n, with_eps) {
            return Err(Error::RingMismatch);
        }
        let (us, vs) = (ring.block_slots(Block::U), ring.block_slots(Block::V));
        for (m, _) in poly.terms() {
            let (a, b) = (m.degree_in(&us), m.degree_in(&vs));
            if a as usize != d || b as usize != d {
                return Err(Error::Dimension(format!(
                    "term of bidegree ({a}, {b}) in a ({d}, {d}) biform"
                )));
            }
        }
        Ok(CayleyBiform { n, d, poly })
    }

    pub fn zero(n: usize, d: usize, with_eps: bool) -> Self {
        CayleyBiform {
            n,
            d,
            poly: MPoly::zero(&Ring::chow(n, with_eps)),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn poly(&self) -> &MPoly {
        &self.poly
    }

    pub fn has_eps(&self) -> bool {
        self.poly.ring().has_block(Block::Eps)
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    /// Coefficient table in descending graded-lex order.
    pub fn terms(&self) -> Vec<BiTerm> {
        let k = self.n + 1;
        self.poly
            .terms()
            .rev()
            .map(|(m, c)| {
                let e = m.exponents();
                BiTerm {
                    alpha: e[..k].to_vec(),
                    beta: e[k..2 * k].to_vec(),
                    eps: e.get(2 * k).copied().unwrap_or(0),
                    coeff: c.clone(),
                }
            })
            .collect()
    }

    fn with_poly(&self, poly: MPoly) -> CayleyBiform {
        CayleyBiform {
            n: self.n,
            d: self.d,
            poly,
        }
    }

    fn uv_vars(&self) -> (Vec<MPoly>, Vec<MPoly>) {
        let ring = self.poly.ring();
        let k = self.n + 1;
        (
            (0..k).map(|i| MPoly::var(ring, i)).collect(),
            (0..k).map(|i| MPoly::var(ring, k + i)).collect(),
        )
    }

    fn images(&self, u: Vec<MPoly>, v: Vec<MPoly>) -> Vec<MPoly> {
        let mut img = u;
        img.extend(v);
        if self.has_eps() {
            img.push(MPoly::var(self.poly.ring(), 2 * (self.n + 1)));
        }
        img
    }

    /// `Ca(v, u)`.
    pub fn swapped(&self) -> CayleyBiform {
        let (u, v) = self.uv_vars();
        let img = self.images(v, u);
        self.with_poly(self.poly.substitute(self.poly.ring(), &img))
    }

    /// `Ca(u, v + λu)` over the ring extended by an auxiliary `lambda`,
    /// together with `Ca` itself embedded in that ring.
    pub fn sheared(&self) -> (MPoly, MPoly) {
        let ext: Arc<Ring> = self.poly.ring().extended(Var::new("lambda", Block::Aux));
        let k = self.n + 1;
        let lambda = MPoly::var(&ext, ext.arity() - 1);
        let u: Vec<MPoly> = (0..k).map(|i| MPoly::var(&ext, i)).collect();
        let v: Vec<MPoly> = (0..k)
            .map(|i| &MPoly::var(&ext, k + i) + &(&lambda * &u[i]))
            .collect();
        let mut img = u;
        img.extend(v);
        if self.has_eps() {
            img.push(MPoly::var(&ext, 2 * k));
        }
        let embedded = self.poly.embed(&ext).expect("extension keeps every variable");
        (self.poly.substitute(&ext, &img), embedded)
    }

    /// `Σ ui ∂/∂vi` annihilates `Ca` iff `Ca(u, v + λu) = Ca(u, v)` for all λ.
    pub fn is_shear_invariant(&self) -> bool {
        let k = self.n + 1;
        let mut acc = MPoly::zero(self.poly.ring());
        for i in 0..k {
            let ui = MPoly::var(self.poly.ring(), i);
            acc = &acc + &(&ui * &self.poly.derivative(k + i));
        }
        acc.is_zero()
    }

    /// `Ca(v, u) = (-1)^(d^2) Ca(u, v)`.
    pub fn has_swap_symmetry(&self) -> bool {
        let s = self.swapped();
        if self.d % 2 == 1 {
            s.poly == -&self.poly
        } else {
            s.poly == self.poly
        }
    }

    /// `Ca(Bᵀu, Bᵀv)`.
    pub fn pull_back(&self, b: &[Vec<Scalar>]) -> Result<CayleyBiform> {
        let k = self.n + 1;
        if b.len() != k || b.iter().any(|r| r.len() != k) {
            return Err(Error::Dimension(format!("expected a {k}x{k} matrix")));
        }
        let (u, v) = self.uv_vars();
        let lin = |x: &[MPoly], j: usize| {
            (0..k).fold(MPoly::zero(self.poly.ring()), |acc, i| {
                &acc + &x[i].scale(&b[i][j])
            })
        };
        let bu: Vec<MPoly> = (0..k).map(|j| lin(&u, j)).collect();
        let bv: Vec<MPoly> = (0..k).map(|j| lin(&v, j)).collect();
        let img = self.images(bu, bv);
        Ok(self.with_poly(self.poly.substitute(self.poly.ring(), &img)))
    }

    pub fn scale(&self, c: &Scalar) -> CayleyBiform {
        self.with_poly(self.poly.scale(c))
    }

    /// Product of biforms; bidegrees add.
    pub fn mul(&self, other: &CayleyBiform) -> Result<CayleyBiform> {
        if self.n != other.n {
            return Err(Error::Dimension(format!("P^{} vs P^{}", self.n, other.n)));
        }
        if self.poly.ring() != other.poly.ring() {
            return Err(Error::RingMismatch);
        }
        Ok(CayleyBiform {
            n: self.n,
            d: self.d + other.d,
            poly: &self.poly * &other.poly,
        })
    }

    /// Substitutes a value for `eps`, dropping it from the ring.
    pub fn at_eps(&self, value: &Scalar) -> Result<CayleyBiform> {
        if !self.has_eps() {
            return Ok(self.clone());
        }
        let slot = 2 * (self.n + 1);
        let spec = self.poly.specialize(&[(slot, value.clone())]);
        self.drop_eps(&spec)
    }

    fn drop_eps(&self, p: &MPoly) -> Result<CayleyBiform> {
        let target = Ring::chow(self.n, false);
        let k = self.n + 1;
        let mut img: Vec<MPoly> = (0..2 * k).map(|i| MPoly::var(&target, i)).collect();
        img.push(MPoly::zero(&target));
        CayleyBiform::from_poly(self.n, self.d, p.substitute(&target, &img))
    }

    /// `Ca = Σ_k eps^k C_k`, each `C_k` returned without `eps`.
    pub fn eps_orders(&self) -> Result<BTreeMap<u32, CayleyBiform>> {
        if !self.has_eps() {
            return Ok(BTreeMap::from([(0, self.clone())]));
        }
        let slot = 2 * (self.n + 1);
        self.poly
            .collect_in(slot)
            .into_iter()
            .map(|(k, part)| Ok((k, self.drop_eps(&part)?)))
            .collect()
    }

    /// Substitutes numeric covectors; leaves `eps` symbolic if present.
    pub fn eval_uv(&self, u: &[Scalar], v: &[Scalar]) -> Result<MPoly> {
        let k = self.n + 1;
        if u.len() != k || v.len() != k {
            return Err(Error::Dimension(format!(
                "covectors of length {}, {} in P^{}",
                u.len(),
                v.len(),
                self.n
            )));
        }
        let values: Vec<(usize, Scalar)> = u
            .iter()
            .chain(v)
            .cloned()
            .enumerate()
            .collect();
        Ok(self.poly.specialize(&values))
    }
}

/// Codimension-2 plane `{x : ⟨x, u⟩ = ⟨x, v⟩ = 0}` cut out by two
/// independent covectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Plane {
    u: Vec<Scalar>,
    v: Vec<Scalar>,
}

impl Plane {
    pub fn new(u: Vec<Scalar>, v: Vec<Scalar>) -> Result<Self> {
        if u.len() != v.len() || u.len() < 2 {
            return Err(Error::Dimension(format!(
                "covectors of lengths {} and {}",
                u.len(),
                v.len()
            )));
        }
        if !linalg::independent(&u, &v) {
            return Err(Error::DependentCovectors);
        }
        Ok(Plane { u, v })
    }

    pub fn from_ints(u: &[i64], v: &[i64]) -> Result<Self> {
        let s = |x: &[i64]| x.iter().map(|&c| Scalar::from_integer(c.into())).collect();
        Plane::new(s(u), s(v))
    }

    /// A plane through `point`, obtained by projecting the seed covectors
    /// `r, s` onto the annihilator of `point`.
    pub fn through_point(point: &[Scalar], r: &[Scalar], s: &[Scalar]) -> Result<Self> {
        let k = point
            .iter()
            .position(|x| !x.is_zero())
            .ok_or_else(|| Error::Dimension("zero point".into()))?;
        let project = |w: &[Scalar]| {
            let dot: Scalar = w.iter().zip(point).map(|(a, b)| a * b).sum();
            let mut out = w.to_vec();
            out[k] -= dot / &point[k];
            out
        };
        Plane::new(project(r), project(s))
    }

    pub fn u(&self) -> &[Scalar] {
        &self.u
    }

    pub fn v(&self) -> &[Scalar] {
        &self.v
    }

    pub fn n(&self) -> usize {
        self.u.len() - 1
    }

    /// Whether the point lies on the plane.
    pub fn contains(&self, x: &[Scalar]) -> bool {
        let dot = |w: &[Scalar]| -> Scalar { w.iter().zip(x).map(|(a, b)| a * b).sum() };
        dot(&self.u).is_zero() && dot(&self.v).is_zero()
    }
}

/// Builds `Res(Σ ui Fi, Σ vi Fi)` for components with coefficients in the
/// scalars or in `eps`.
pub(crate) fn biform_of_components(n: usize, comps: &[BinaryForm], with_eps: bool) -> CayleyBiform {
    let ring = Ring::chow(n, with_eps);
    let k = n + 1;
    let d = comps[0].degree();
    let mut h1 = BinaryForm::zero(&ring, d);
    let mut h2 = BinaryForm::zero(&ring, d);
    for (i, c) in comps.iter().enumerate() {
        let c = c.embed(&ring).expect("component ring embeds in the Chow ring");
        h1 = h1.add(&c.scale(&MPoly::var(&ring, i))).expect("equal degrees");
        h2 = h2.add(&c.scale(&MPoly::var(&ring, k + i))).expect("equal degrees");
    }
    let poly = resultant(&h1, &h2).expect("degree >= 1 forms of equal degree");
    CayleyBiform { n, d, poly }
}

/// The Cayley biform `Res(⟨f, u⟩, ⟨f, v⟩)` of a parametrized curve. Zero
/// exactly when the components share a root.
pub fn cayley_biform(f: &CurveMap) -> CayleyBiform {
    biform_of_components(f.n(), f.components(), false)
}

pub fn eval_biform(ca: &CayleyBiform, u: &[Scalar], v: &[Scalar]) -> Result<Scalar> {
    ca.eval_uv(u, v)?.constant_value().ok_or(Error::NotScalar)
}

/// Whether the plane meets the curve, read off from the vanishing of the
/// biform at the plane's covectors.
pub fn incident(ca: &CayleyBiform, plane: &Plane) -> Result<bool> {
    if ca.is_zero() {
        return Err(Error::DegenerateCayleyForm);
    }
    Ok(eval_biform(ca, plane.u(), plane.v())?.is_zero())
}

/// Integer, coefficient-coprime representative with positive leading term.
pub fn normalize(ca: &CayleyBiform) -> Result<CayleyBiform> {
    let (_, prim) = content_primitive(&ca.poly).map_err(|_| Error::DegenerateCayleyForm)?;
    Ok(ca.with_poly(prim))
}

impl CayleyBiform {
    pub fn is_normalized(&self) -> bool {
        match content_primitive(&self.poly) {
            Ok((c, _)) => c.is_one(),
            Err(_) => false,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(x: i64) -> Scalar {
        Scalar::from_integer(x.into())
    }

    fn conic() -> CurveMap {
        CurveMap::from_int_rows(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]).unwrap()
    }

    fn p(ring: &Arc<Ring>, n: usize, i: usize, j: usize) -> MPoly {
        let k = n + 1;
        let (ui, uj) = (MPoly::var(ring, i), MPoly::var(ring, j));
        let (vi, vj) = (MPoly::var(ring, k + i), MPoly::var(ring, k + j));
        &(&ui * &vj) - &(&uj * &vi)
    }

    #[test]
    fn line_biform() {
        let f = CurveMap::from_int_rows(&[&[1, 0], &[0, 1], &[0, 0]]).unwrap();
        let ca = cayley_biform(&f);
        let r = Ring::chow(2, false);
        assert_eq!(ca.poly(), &p(&r, 2, 0, 1));
    }

    #[test]
    fn conic_biform() {
        let ca = cayley_biform(&conic());
        let r = Ring::chow(2, false);
        let want = &(&p(&r, 2, 0, 2) * &p(&r, 2, 0, 2)) - &(&p(&r, 2, 0, 1) * &p(&r, 2, 1, 2));
        assert_eq!(ca.poly(), &want);
        assert!(ca.is_shear_invariant());
        assert!(ca.has_swap_symmetry());
    }

    #[test]
    fn base_point_gives_zero() {
        let f = CurveMap::from_int_rows(&[&[1, 0, 0], &[0, 1, 0], &[0, 1, 0]]).unwrap();
        assert!(cayley_biform(&f).is_zero());
        assert_eq!(
            incident(&cayley_biform(&f), &Plane::from_ints(&[1, 0, 0], &[0, 1, 0]).unwrap()),
            Err(Error::DegenerateCayleyForm)
        );
    }

    #[test]
    fn evaluation() {
        let line = cayley_biform(&CurveMap::from_int_rows(&[&[1, 0], &[0, 1], &[0, 0]]).unwrap());
        assert_eq!(eval_biform(&line, &[s(1), s(0), s(0)], &[s(0), s(1), s(0)]).unwrap(), s(1));
        let w = [s(3), s(-1), s(2)];
        assert_eq!(eval_biform(&line, &w, &w).unwrap(), s(0));
        // plane {x1 = x2 = 0} is the point e0 = f(1, 0) on the conic
        let ca = cayley_biform(&conic());
        assert_eq!(eval_biform(&ca, &[s(0), s(0), s(1)], &[s(0), s(1), s(0)]).unwrap(), s(0));
        assert!(eval_biform(&ca, &[s(1)], &[s(0)]).is_err());
    }

    #[test]
    fn incidence_examples() {
        let line = cayley_biform(&CurveMap::from_int_rows(&[&[1, 0], &[0, 1], &[0, 0]]).unwrap());
        assert!(incident(&line, &Plane::from_ints(&[0, 0, 1], &[1, 1, 0]).unwrap()).unwrap());
        let ca = cayley_biform(&conic());
        assert!(incident(&ca, &Plane::from_ints(&[0, 3, -1], &[0, 1, 5]).unwrap()).unwrap());
        // the point (1, 0, 1) misses x0 x2 = x1^2
        assert!(!incident(&ca, &Plane::from_ints(&[0, 1, 0], &[1, 0, -1]).unwrap()).unwrap());
    }

    #[test]
    fn normalization() {
        let r = Ring::chow(2, false);
        let p01 = p(&r, 2, 0, 1);
        let six = CayleyBiform::from_poly(2, 1, p01.scale(&s(6))).unwrap();
        assert_eq!(normalize(&six).unwrap().poly(), &p01);
        let neg = CayleyBiform::from_poly(2, 1, -&p01).unwrap();
        assert_eq!(normalize(&neg).unwrap().poly(), &p01);
        let two_thirds = Scalar::new(2.into(), 3.into());
        let conic = cayley_biform(&conic());
        let scaled = conic.scale(&two_thirds);
        assert_eq!(normalize(&scaled).unwrap(), conic);
        assert!(normalize(&CayleyBiform::zero(2, 1, false)).is_err());
    }

    #[test]
    fn bidegree_checked() {
        let r = Ring::chow(1, false);
        let bad = MPoly::var(&r, 0);
        assert!(CayleyBiform::from_poly(1, 1, bad).is_err());
    }

    #[test]
    fn planes() {
        assert_eq!(Plane::from_ints(&[1, 0, 0], &[2, 0, 0]), Err(Error::DependentCovectors));
        let pt = [s(1), s(2), s(3)];
        let pl = Plane::through_point(&pt, &[s(0), s(1), s(0)], &[s(0), s(0), s(1)]).unwrap();
        assert!(pl.contains(&pt));
    }
}
