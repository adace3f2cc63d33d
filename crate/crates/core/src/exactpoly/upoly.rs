//! Dense univariate integer polynomials, coefficients in ascending powers.
//! Only what the binary-form GCD needs: pseudo-remainders, the subresultant
//! remainder sequence and squarefree degree.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::scalar::Scalar;

pub(crate) type UPoly = Vec<BigInt>;

pub(crate) fn trim(p: &mut UPoly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

pub(crate) fn degree(p: &UPoly) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

fn lc(p: &UPoly) -> &BigInt {
    &p[degree(p).expect("leading coefficient of zero polynomial")]
}

pub(crate) fn content(p: &UPoly) -> BigInt {
    p.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

/// Primitive part with positive leading coefficient.
pub(crate) fn primitive(p: &UPoly) -> UPoly {
    let mut p = p.clone();
    trim(&mut p);
    if p.is_empty() {
        return p;
    }
    let mut c = content(&p);
    if lc(&p).is_negative() {
        c = -c;
    }
    p.iter().map(|x| x / &c).collect()
}

/// Clears denominators of rational coefficients.
pub(crate) fn from_scalars(coeffs: &[Scalar]) -> UPoly {
    let den = coeffs
        .iter()
        .fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    let mut p: UPoly = coeffs
        .iter()
        .map(|c| c.numer() * (&den / c.denom()))
        .collect();
    trim(&mut p);
    p
}

pub(crate) fn derivative(p: &UPoly) -> UPoly {
    let mut d: UPoly = p
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c * BigInt::from(k))
        .collect();
    trim(&mut d);
    d
}

/// `lc(b)^(deg a - deg b + 1) · a mod b`.
fn prem(a: &UPoly, b: &UPoly) -> UPoly {
    let db = degree(b).expect("pseudo-division by zero");
    let lb = lc(b).clone();
    let mut r = a.clone();
    trim(&mut r);
    let mut steps = match degree(&r) {
        Some(da) if da >= db => da - db + 1,
        _ => return r,
    };
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c *= &lb;
        }
        let shift = dr - db;
        for (k, bk) in b.iter().enumerate() {
            r[k + shift] -= &lr * bk;
        }
        trim(&mut r);
        steps -= 1;
    }
    let f = num_traits::pow(lb, steps);
    for c in r.iter_mut() {
        *c *= &f;
    }
    r
}

/// Primitive GCD (positive leading coefficient) via the subresultant
/// remainder sequence. `gcd(0, 0)` is the empty polynomial.
pub(crate) fn gcd(a: &UPoly, b: &UPoly) -> UPoly {
    let (mut a, mut b) = (primitive(a), primitive(b));
    if degree(&a) < degree(&b) {
        std::mem::swap(&mut a, &mut b);
    }
    if b.is_empty() {
        return a;
    }
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let delta = degree(&a).unwrap() - degree(&b).unwrap();
        let r = prem(&a, &b);
        match degree(&r) {
            None => return primitive(&b),
            Some(0) => return vec![BigInt::one()],
            Some(_) => {}
        }
        let divisor = &g * num_traits::pow(h.clone(), delta);
        a = b;
        b = r.iter().map(|c| c / &divisor).collect();
        g = lc(&a).clone();
        if delta > 0 {
            let num = num_traits::pow(g.clone(), delta);
            let den = num_traits::pow(h.clone(), delta - 1);
            h = num / den;
        }
    }
}

/// Number of distinct complex roots.
pub(crate) fn squarefree_degree(p: &UPoly) -> usize {
    let d = degree(p).unwrap_or(0);
    if d == 0 {
        return 0;
    }
    let g = gcd(p, &derivative(p));
    d - degree(&g).unwrap_or(0)
}
