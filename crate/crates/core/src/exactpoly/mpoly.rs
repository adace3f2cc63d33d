use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::ring::{Monomial, Ring};
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept in a `BTreeMap` keyed by graded-lex monomials, so the
/// last entry is the leading term. Zero coefficients are never stored.
#[derive(Clone)]
pub struct MPoly {
    ring: Arc<Ring>,
    terms: BTreeMap<Monomial, Scalar>,
}

impl MPoly {
    pub fn zero(ring: &Arc<Ring>) -> Self {
        MPoly {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: &Arc<Ring>) -> Self {
        MPoly::constant(ring, Scalar::one())
    }

    pub fn constant(ring: &Arc<Ring>, c: Scalar) -> Self {
        let mut p = MPoly::zero(ring);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(ring.arity()), c);
        }
        p
    }

    pub fn from_int(ring: &Arc<Ring>, c: i64) -> Self {
        MPoly::constant(ring, BigRational::from_integer(c.into()))
    }

    /// The variable in `slot`.
    pub fn var(ring: &Arc<Ring>, slot: usize) -> Self {
        assert!(slot < ring.arity(), "slot {slot} out of range");
        let mut p = MPoly::zero(ring);
        p.terms
            .insert(Monomial::var(ring.arity(), slot), Scalar::one());
        p
    }

    pub fn named(ring: &Arc<Ring>, name: &str) -> Result<Self> {
        Ok(MPoly::var(ring, ring.require(name)?))
    }

    pub fn monomial(ring: &Arc<Ring>, mono: Monomial, c: Scalar) -> Self {
        assert_eq!(mono.arity(), ring.arity());
        let mut p = MPoly::zero(ring);
        if !c.is_zero() {
            p.terms.insert(mono, c);
        }
        p
    }

    pub fn from_terms(ring: &Arc<Ring>, terms: impl IntoIterator<Item = (Monomial, Scalar)>) -> Self {
        let mut p = MPoly::zero(ring);
        for (m, c) in terms {
            assert_eq!(m.arity(), ring.arity());
            p.add_term(m, c);
        }
        p
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, mono: &Monomial) -> Scalar {
        self.terms.get(mono).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn leading(&self) -> Option<(&Monomial, &Scalar)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// The value of a constant polynomial.
    pub fn constant_value(&self) -> Option<Scalar> {
        if self.is_zero() {
            return Some(Scalar::zero());
        }
        if self.is_constant() {
            self.terms.values().next().cloned()
        } else {
            None
        }
    }

    /// Slots whose variable occurs in some term.
    pub fn support(&self) -> Vec<usize> {
        let mut used = vec![false; self.ring.arity()];
        for m in self.terms.keys() {
            for (u, &e) in used.iter_mut().zip(m.exponents()) {
                *u |= e > 0;
            }
        }
        used.iter()
            .enumerate()
            .filter(|(_, &u)| u)
            .map(|(i, _)| i)
            .collect()
    }

    fn add_term(&mut self, mono: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(mono) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check_ring(&self, other: &MPoly) {
        assert!(
            Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring,
            "arithmetic between polynomials of different rings"
        );
    }

    pub fn scale(&self, c: &Scalar) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(&self.ring);
        }
        MPoly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a * c))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, mono: &Monomial, c: &Scalar) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(&self.ring);
        }
        MPoly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.mul(mono), a * c))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MPoly {
        let mut acc = MPoly::one(&self.ring);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Formal partial derivative in `slot`.
    pub fn derivative(&self, slot: usize) -> MPoly {
        let mut out = MPoly::zero(&self.ring);
        for (m, c) in &self.terms {
            let e = m.exponents()[slot];
            if e == 0 {
                continue;
            }
            let mut exps = m.exponents().to_vec();
            exps[slot] -= 1;
            out.add_term(
                Monomial::from_exponents(exps),
                c * BigRational::from_integer(e.into()),
            );
        }
        out
    }

    /// Ring homomorphism sending slot `i` to `images[i]` (all in `target`).
    pub fn substitute(&self, target: &Arc<Ring>, images: &[MPoly]) -> MPoly {
        assert_eq!(images.len(), self.ring.arity(), "one image per variable");
        // powers[i][k] = images[i]^k, grown on demand
        let mut powers: Vec<Vec<MPoly>> = images
            .iter()
            .map(|img| {
                assert!(img.ring == *target || Arc::ptr_eq(&img.ring, target));
                vec![MPoly::one(target), img.clone()]
            })
            .collect();
        let mut out = MPoly::zero(target);
        for (m, c) in &self.terms {
            let mut t = MPoly::constant(target, c.clone());
            for (slot, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let cache = &mut powers[slot];
                while cache.len() <= e as usize {
                    let next = &cache[cache.len() - 1] * &cache[1];
                    cache.push(next);
                }
                t = &t * &cache[e as usize];
            }
            for (tm, tc) in t.terms {
                out.add_term(tm, tc);
            }
        }
        out
    }

    /// Re-expresses the polynomial in `target`, matching variables by name.
    pub fn embed(&self, target: &Arc<Ring>) -> Result<MPoly> {
        let slots = self
            .ring
            .vars()
            .iter()
            .map(|v| target.require(&v.name))
            .collect::<Result<Vec<_>>>()?;
        let mut out = MPoly::zero(target);
        for (m, c) in &self.terms {
            let mut exps = vec![0; target.arity()];
            for (k, &e) in m.exponents().iter().enumerate() {
                exps[slots[k]] = e;
            }
            out.add_term(Monomial::from_exponents(exps), c.clone());
        }
        Ok(out)
    }

    /// Substitutes scalars for the listed slots, keeping the ring.
    pub fn specialize(&self, values: &[(usize, Scalar)]) -> MPoly {
        let mut out = MPoly::zero(&self.ring);
        for (m, c) in &self.terms {
            let mut exps = m.exponents().to_vec();
            let mut c = c.clone();
            for (slot, val) in values {
                let e = exps[*slot];
                if e > 0 {
                    c *= num_traits::pow(val.clone(), e as usize);
                    exps[*slot] = 0;
                }
            }
            out.add_term(Monomial::from_exponents(exps), c);
        }
        out
    }

    /// Full evaluation at a point (one value per slot).
    pub fn eval(&self, point: &[Scalar]) -> Scalar {
        assert_eq!(point.len(), self.ring.arity());
        let mut acc = Scalar::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                if e > 0 {
                    t *= num_traits::pow(x.clone(), e as usize);
                }
            }
            acc += t;
        }
        acc
    }

    /// Splits by the exponent of `slot`: `self = Σ_k slot^k · parts[k]`,
    /// with `slot` removed from each part's monomials.
    pub fn collect_in(&self, slot: usize) -> BTreeMap<u32, MPoly> {
        let mut parts: BTreeMap<u32, MPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.exponents()[slot];
            let mut exps = m.exponents().to_vec();
            exps[slot] = 0;
            parts
                .entry(e)
                .or_insert_with(|| MPoly::zero(&self.ring))
                .add_term(Monomial::from_exponents(exps), c.clone());
        }
        parts
    }
}

impl PartialEq for MPoly {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring)
            && self.terms == other.terms
    }
}

impl Eq for MPoly {}

impl<'a> Add<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        self.check_ring(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        self.check_ring(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl<'a> Mul<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        self.check_ring(rhs);
        let mut out = MPoly::zero(&self.ring);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

macro_rules! owned_binop {
    ($tr:ident, $f:ident) => {
        impl $tr<MPoly> for MPoly {
            type Output = MPoly;
            fn $f(self, rhs: MPoly) -> MPoly {
                (&self).$f(&rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -&self
    }
}

/// Exact division: `Some(q)` with `b = a·q`, or `None` when `a` does not
/// divide `b`. Each step cancels the leading term of the running remainder
/// against the leading term of `a`.
pub fn poly_divides(a: &MPoly, b: &MPoly) -> Result<Option<MPoly>> {
    let (lm, lc) = match a.leading() {
        Some((m, c)) => (m.clone(), c.clone()),
        None => return Err(Error::DivisionByZero),
    };
    a.check_ring(b);
    let mut rem = b.clone();
    let mut quot = MPoly::zero(&a.ring);
    while let Some((rm, rc)) = rem.leading() {
        if !lm.divides(rm) {
            return Ok(None);
        }
        let qm = lm.quotient_of(rm);
        let qc = rc / &lc;
        rem = &rem - &a.mul_monomial(&qm, &qc);
        quot.add_term(qm, qc);
    }
    Ok(Some(quot))
}

/// `p = c·q` with `q` integral, coefficient-coprime and with positive
/// leading coefficient.
pub fn content_primitive(p: &MPoly) -> Result<(Scalar, MPoly)> {
    let (_, lc) = p.leading().ok_or(Error::ZeroPolynomial)?;
    let mut num_gcd = BigInt::zero();
    let mut den_lcm = BigInt::one();
    for c in p.terms.values() {
        num_gcd = num_gcd.gcd(c.numer());
        den_lcm = den_lcm.lcm(c.denom());
    }
    let mut content = BigRational::new(num_gcd, den_lcm);
    if lc.is_negative() {
        content = -content;
    }
    let inv = content.recip();
    Ok((content, p.scale(&inv)))
}

fn write_scalar_abs(f: &mut fmt::Formatter<'_>, c: &Scalar) -> fmt::Result {
    let a = c.abs();
    if a.is_integer() {
        write!(f, "{}", a.numer())
    } else {
        write!(f, "{}/{}", a.numer(), a.denom())
    }
}

/// Compact single-line rendering, e.g. `x0*x2 - x1^2`, terms descending.
impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let unit = c.abs().is_one();
            let mut first = true;
            if !unit || m.is_one() {
                write_scalar_abs(f, c)?;
                first = false;
            }
            for (slot, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                write!(f, "{}", self.ring.vars()[slot].name)?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly({self})")
    }
}
