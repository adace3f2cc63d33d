use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::mpoly::MPoly;
use super::ring::Ring;
use super::scalar::Scalar;
use super::upoly;
use crate::error::{Error, Result};

/// Homogeneous form of degree `d` in `(z0, z1)`. `coeffs[j]` multiplies
/// `z0^(d-j) z1^j`; coefficients live in a common polynomial ring so the
/// same code handles numeric and symbolic forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryForm {
    ring: Arc<Ring>,
    coeffs: Vec<MPoly>,
}

impl BinaryForm {
    pub fn new(ring: &Arc<Ring>, coeffs: Vec<MPoly>) -> Self {
        assert!(!coeffs.is_empty(), "a binary form needs at least one coefficient");
        for c in &coeffs {
            assert!(c.ring() == ring, "coefficient outside the form's ring");
        }
        BinaryForm {
            ring: ring.clone(),
            coeffs,
        }
    }

    pub fn zero(ring: &Arc<Ring>, degree: usize) -> Self {
        BinaryForm::new(ring, vec![MPoly::zero(ring); degree + 1])
    }

    /// A numeric form over the variable-free ring.
    pub fn from_scalars(coeffs: &[Scalar]) -> Self {
        let ring = Ring::scalars();
        let cs = coeffs
            .iter()
            .map(|c| MPoly::constant(&ring, c.clone()))
            .collect();
        BinaryForm::new(&ring, cs)
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        let cs: Vec<Scalar> = coeffs
            .iter()
            .map(|&c| BigRational::from_integer(c.into()))
            .collect();
        BinaryForm::from_scalars(&cs)
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[MPoly] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(MPoly::is_zero)
    }

    pub fn is_numeric(&self) -> bool {
        self.coeffs.iter().all(MPoly::is_constant)
    }

    pub fn scalar_coeffs(&self) -> Result<Vec<Scalar>> {
        self.coeffs
            .iter()
            .map(|c| c.constant_value().ok_or(Error::NotScalar))
            .collect()
    }

    pub fn embed(&self, target: &Arc<Ring>) -> Result<BinaryForm> {
        let cs = self
            .coeffs
            .iter()
            .map(|c| c.embed(target))
            .collect::<Result<Vec<_>>>()?;
        Ok(BinaryForm::new(target, cs))
    }

    pub fn map_coeffs(&self, target: &Arc<Ring>, f: impl Fn(&MPoly) -> MPoly) -> BinaryForm {
        BinaryForm::new(target, self.coeffs.iter().map(f).collect())
    }

    pub fn scale(&self, c: &MPoly) -> BinaryForm {
        self.map_coeffs(&self.ring, |x| x * c)
    }

    pub fn scale_scalar(&self, c: &Scalar) -> BinaryForm {
        self.map_coeffs(&self.ring, |x| x.scale(c))
    }

    pub fn add(&self, other: &BinaryForm) -> Result<BinaryForm> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        let cs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(BinaryForm::new(&self.ring, cs))
    }

    pub fn mul(&self, other: &BinaryForm) -> BinaryForm {
        let mut cs = vec![MPoly::zero(&self.ring); self.degree() + other.degree() + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    cs[i + j] = &cs[i + j] + &(a * b);
                }
            }
        }
        BinaryForm::new(&self.ring, cs)
    }

    pub fn pow(&self, e: u32) -> BinaryForm {
        let mut acc = BinaryForm::new(&self.ring, vec![MPoly::one(&self.ring)]);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Value at the point `(z0, z1)`.
    pub fn eval(&self, z0: &Scalar, z1: &Scalar) -> MPoly {
        let d = self.degree();
        let mut acc = MPoly::zero(&self.ring);
        for (j, c) in self.coeffs.iter().enumerate() {
            let w = num_traits::pow(z0.clone(), d - j) * num_traits::pow(z1.clone(), j);
            acc = &acc + &c.scale(&w);
        }
        acc
    }

    /// `a z0 + b z1` with coefficients in `ring`.
    pub fn linear(ring: &Arc<Ring>, a: MPoly, b: MPoly) -> BinaryForm {
        BinaryForm::new(ring, vec![a, b])
    }

    /// Multiplicities of the roots `(0:1)` and `(1:0)`, i.e. the exponents of
    /// `z0` and `z1` dividing the form. `None` for the zero form.
    fn monomial_factor(&self) -> Option<(usize, usize)> {
        let first = self.coeffs.iter().position(|c| !c.is_zero())?;
        let last = self.coeffs.iter().rposition(|c| !c.is_zero())?;
        Some((self.degree() - last, first))
    }
}

/// `h(a z0 + b z1, c z0 + d z1)` for `m = [[a, b], [c, d]]`.
pub fn bf_substitute_gl2(h: &BinaryForm, m: &[[Scalar; 2]; 2]) -> BinaryForm {
    let ring = h.ring();
    let k = |s: &Scalar| MPoly::constant(ring, s.clone());
    let first = BinaryForm::linear(ring, k(&m[0][0]), k(&m[0][1]));
    let second = BinaryForm::linear(ring, k(&m[1][0]), k(&m[1][1]));
    bf_compose(h, &first, &second)
}

/// `h(phi0, phi1)`; both substitutes must share a degree.
pub fn bf_compose(h: &BinaryForm, phi0: &BinaryForm, phi1: &BinaryForm) -> BinaryForm {
    assert_eq!(phi0.degree(), phi1.degree(), "substitutes must share a degree");
    let d = h.degree();
    let e = phi0.degree();
    let ring = h.ring();
    let pow0: Vec<BinaryForm> = powers(phi0, d);
    let pow1: Vec<BinaryForm> = powers(phi1, d);
    let mut acc = BinaryForm::zero(ring, d * e);
    for (j, c) in h.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let term = pow0[d - j].mul(&pow1[j]).scale(c);
        acc = acc.add(&term).expect("degrees agree");
    }
    acc
}

fn powers(base: &BinaryForm, up_to: usize) -> Vec<BinaryForm> {
    let mut out = vec![BinaryForm::new(base.ring(), vec![MPoly::one(base.ring())])];
    for k in 1..=up_to {
        let next = out[k - 1].mul(base);
        out.push(next);
    }
    out
}

/// Dehomogenizes at `z1 = 1` after stripping the `z0`/`z1` power factors;
/// the result has nonzero constant term and degree equal to the stripped
/// form's degree.
fn stripped_univariate(h: &[Scalar], z0_pow: usize, z1_pow: usize) -> upoly::UPoly {
    let d = h.len() - 1;
    // coefficient of z0^k after stripping is h[d - z0_pow - k], k ascending
    let core = &h[z1_pow..=d - z0_pow];
    let mut rev: Vec<Scalar> = core.to_vec();
    rev.reverse();
    upoly::from_scalars(&rev)
}

/// Primitive GCD of two numeric binary forms.
///
/// Common `z0^a z1^b` factors are split off first; the rest goes through the
/// univariate subresultant GCD at `z1 = 1`, then gets rehomogenized. The
/// output has coprime integer coefficients and its first nonzero
/// coefficient (highest power of `z0`) is positive.
pub fn bf_gcd(a: &BinaryForm, b: &BinaryForm) -> Result<BinaryForm> {
    let ac = a.scalar_coeffs()?;
    let bc = b.scalar_coeffs()?;
    let (fa, fb) = (a.monomial_factor(), b.monomial_factor());
    let (g, z0_pow, z1_pow) = match (fa, fb) {
        (None, None) => return Err(Error::GcdOfZeroForms),
        (Some((x, y)), None) => (stripped_univariate(&ac, x, y), x, y),
        (None, Some((x, y))) => (stripped_univariate(&bc, x, y), x, y),
        (Some((xa, ya)), Some((xb, yb))) => {
            let ua = stripped_univariate(&ac, xa, ya);
            let ub = stripped_univariate(&bc, xb, yb);
            (upoly::gcd(&ua, &ub), xa.min(xb), ya.min(yb))
        }
    };
    let g = upoly::primitive(&g);
    let e = upoly::degree(&g).unwrap_or(0);
    let deg = z0_pow + z1_pow + e;
    let mut coeffs = vec![BigInt::zero(); deg + 1];
    for j in 0..=e {
        // z0^(e-j) z1^j of the core, shifted by z1^z1_pow
        coeffs[j + z1_pow] = g[e - j].clone();
    }
    let mut out: Vec<Scalar> = coeffs.into_iter().map(BigRational::from_integer).collect();
    if let Some(first) = out.iter().find(|c| !c.is_zero()) {
        if *first < Scalar::zero() {
            out.iter_mut().for_each(|c| *c = -c.clone());
        }
    }
    Ok(BinaryForm::from_scalars(&out))
}

/// Number of distinct projective roots of a nonzero numeric form.
pub fn bf_distinct_roots(h: &BinaryForm) -> Result<usize> {
    let hc = h.scalar_coeffs()?;
    let (z0_pow, z1_pow) = h.monomial_factor().ok_or(Error::ZeroPolynomial)?;
    let core = stripped_univariate(&hc, z0_pow, z1_pow);
    Ok(usize::from(z0_pow > 0) + usize::from(z1_pow > 0) + upoly::squarefree_degree(&core))
}

impl BinaryForm {
    /// Whether the form is a nonzero scalar multiple of `other`.
    pub fn proportional_to(&self, other: &BinaryForm) -> bool {
        if self.degree() != other.degree() || self.is_zero() || other.is_zero() {
            return false;
        }
        let k = self.coeffs.iter().position(|c| !c.is_zero()).unwrap();
        let (a, b) = (&self.coeffs[k], &other.coeffs[k]);
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .all(|(x, y)| x * b == y * a)
    }
}
