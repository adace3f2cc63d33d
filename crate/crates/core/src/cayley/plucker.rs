//! Rewriting a biform that only depends on `u∧v` as a polynomial in the
//! Plücker coordinates `p_ij = ui vj - uj vi`.
//!
//! For `n = 2` or `d = 1` the degree-`d` Plücker monomials are linearly
//! independent and the rewrite is unique. Otherwise the quadratic Plücker
//! relations make it unique only modulo those relations; we return the
//! solution supported on the greedily independent monomials, scanned in
//! descending graded-lex order, with all other monomials set to zero.

use std::collections::BTreeMap;
use std::sync::Arc;

use super::biform::CayleyBiform;
use crate::error::{Error, Result};
use crate::exactpoly::{Monomial, MPoly, Ring, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PluckerRep {
    n: usize,
    d: usize,
    poly: MPoly,
    canonical: bool,
}

impl PluckerRep {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// Polynomial over `p01, p02, ..., p(n-1)n`.
    pub fn poly(&self) -> &MPoly {
        &self.poly
    }

    /// True when no Plücker relation can alter the representative.
    pub fn is_canonical(&self) -> bool {
        self.canonical
    }

    /// Substitutes `p_ij ↦ ui vj - uj vi`.
    pub fn expand(&self) -> CayleyBiform {
        let target = Ring::chow(self.n, false);
        let img = plucker_images(self.n, &target);
        CayleyBiform::from_poly(self.n, self.d, self.poly.substitute(&target, &img))
            .expect("expansion has bidegree (d, d)")
    }
}

/// `ui vj - uj vi` for every `i < j`, in the slot order of `Ring::plucker`.
pub(crate) fn plucker_images(n: usize, target: &Arc<Ring>) -> Vec<MPoly> {
    let k = n + 1;
    let mut out = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            let (ui, uj) = (MPoly::var(target, i), MPoly::var(target, j));
            let (vi, vj) = (MPoly::var(target, k + i), MPoly::var(target, k + j));
            out.push(&(&ui * &vj) - &(&uj * &vi));
        }
    }
    out
}

/// All exponent vectors of total degree `d` over `vars` slots, descending
/// in graded-lex order.
fn monomials_of_degree(vars: usize, d: u32) -> Vec<Monomial> {
    fn rec(slot: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if slot + 1 == cur.len() {
            cur[slot] = left;
            out.push(Monomial::from_exponents(cur.clone()));
            return;
        }
        for e in (0..=left).rev() {
            cur[slot] = e;
            rec(slot + 1, left - e, cur, out);
        }
    }
    let mut out = Vec::new();
    if vars == 0 {
        return out;
    }
    rec(0, d, &mut vec![0; vars], &mut out);
    out
}

struct Pivot {
    image: MPoly,
    combo: MPoly,
}

/// Finds a Plücker polynomial expanding to `ca`.
///
/// Fails with [`Error::NotDecomposable`] when `ca` is not invariant under
/// `v ↦ v + λu` or lacks the `(-1)^d` swap symmetry, i.e. is not a function
/// of `u∧v`.
pub fn plucker_rewrite(ca: &CayleyBiform) -> Result<PluckerRep> {
    if ca.has_eps() {
        return Err(Error::NotScalar);
    }
    if !ca.is_shear_invariant() || !ca.has_swap_symmetry() {
        return Err(Error::NotDecomposable);
    }
    let (n, d) = (ca.n(), ca.d());
    let pring = Ring::plucker(n);
    let uv = Ring::chow(n, false);
    let images = plucker_images(n, &uv);

    // Echelon basis of the expansions, keyed by leading (u, v)-monomial.
    let mut pivots: BTreeMap<Monomial, Pivot> = BTreeMap::new();
    for mono in monomials_of_degree(pring.arity(), d as u32) {
        let p_mono = MPoly::monomial(&pring, mono, Scalar::from_integer(1.into()));
        let mut image = p_mono.substitute(&uv, &images);
        let mut combo = p_mono;
        while let Some((lead, c)) = image.leading().map(|(m, c)| (m.clone(), c.clone())) {
            match pivots.get(&lead) {
                Some(piv) => {
                    image = &image - &piv.image.scale(&c);
                    combo = &combo - &piv.combo.scale(&c);
                }
                None => {
                    let inv = c.recip();
                    pivots.insert(
                        lead,
                        Pivot {
                            image: image.scale(&inv),
                            combo: combo.scale(&inv),
                        },
                    );
                    break;
                }
            }
        }
    }

    let mut rest = ca.poly().clone();
    let mut solution = MPoly::zero(&pring);
    while let Some((lead, c)) = rest.leading().map(|(m, c)| (m.clone(), c.clone())) {
        let piv = pivots.get(&lead).ok_or(Error::NotDecomposable)?;
        rest = &rest - &piv.image.scale(&c);
        solution = &solution + &piv.combo.scale(&c);
    }
    Ok(PluckerRep {
        n,
        d,
        poly: solution,
        canonical: n == 2 || d == 1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley::{cayley_biform, CurveMap};

    fn p(ring: &Arc<Ring>, name: &str) -> MPoly {
        MPoly::named(ring, name).unwrap()
    }

    #[test]
    fn monomial_enumeration() {
        let ms = monomials_of_degree(3, 2);
        assert_eq!(ms.len(), 6);
        assert!(ms.windows(2).all(|w| w[0] > w[1]));
    }

    #[test]
    fn line_and_conic() {
        let pr = Ring::plucker(2);
        let line = CurveMap::from_int_rows(&[&[1, 0], &[0, 1], &[0, 0]]).unwrap();
        let rep = plucker_rewrite(&cayley_biform(&line)).unwrap();
        assert_eq!(rep.poly(), &p(&pr, "p01"));
        assert!(rep.is_canonical());

        let conic = CurveMap::from_int_rows(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]).unwrap();
        let ca = cayley_biform(&conic);
        let rep = plucker_rewrite(&ca).unwrap();
        let want = &(&p(&pr, "p02") * &p(&pr, "p02")) - &(&p(&pr, "p01") * &p(&pr, "p12"));
        assert_eq!(rep.poly(), &want);
        assert_eq!(rep.expand(), ca);
    }

    #[test]
    fn general_line_coordinates() {
        // a = (1, 2, -1, 3), b = (0, 1, 4, -2)
        let a = [1i64, 2, -1, 3];
        let b = [0i64, 1, 4, -2];
        let rows: Vec<Vec<i64>> = (0..4).map(|i| vec![a[i], b[i]]).collect();
        let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
        let f = CurveMap::from_int_rows(&refs).unwrap();
        let rep = plucker_rewrite(&cayley_biform(&f)).unwrap();
        let pr = Ring::plucker(3);
        let mut want = MPoly::zero(&pr);
        for i in 0..4 {
            for j in i + 1..4 {
                let c = a[i] * b[j] - a[j] * b[i];
                want = &want + &p(&pr, &format!("p{i}{j}")).scale(&Scalar::from_integer(c.into()));
            }
        }
        assert_eq!(rep.poly(), &want);
    }

    #[test]
    fn twisted_cubic_round_trip() {
        let f = CurveMap::from_int_rows(&[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]])
            .unwrap();
        let ca = cayley_biform(&f);
        let rep = plucker_rewrite(&ca).unwrap();
        assert!(!rep.is_canonical());
        assert_eq!(rep.expand(), ca);
    }

    #[test]
    fn rejects_non_decomposable() {
        let r = Ring::chow(2, false);
        // u0 v0 is not a function of u∧v
        let bad = &MPoly::var(&r, 0) * &MPoly::var(&r, 3);
        let ca = CayleyBiform::from_poly(2, 1, bad).unwrap();
        assert_eq!(plucker_rewrite(&ca), Err(Error::NotDecomposable));
    }
}
