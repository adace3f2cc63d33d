#![allow(dead_code)]

use chow_core::exactpoly::bf_gcd;
use chow_core::oracle::{in_u, ParamSampler};
use chow_core::{BinaryForm, CurveMap, Gl2, Plane, Scalar};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn int(x: i64) -> Scalar {
    Scalar::from_integer(x.into())
}

pub fn rat(n: i64, d: i64) -> Scalar {
    Scalar::new(n.into(), d.into())
}

pub fn random_ints(rng: &mut ChaCha8Rng, len: usize, bound: i64) -> Vec<i64> {
    (0..len).map(|_| rng.gen_range(-bound..=bound)).collect()
}

pub fn random_vec(rng: &mut ChaCha8Rng, len: usize, bound: i64) -> Vec<Scalar> {
    random_ints(rng, len, bound).into_iter().map(int).collect()
}

/// Random curve map with integer coefficients in `[-bound, bound]`.
pub fn random_curve(rng: &mut ChaCha8Rng, n: usize, d: usize, bound: i64) -> CurveMap {
    loop {
        let rows: Vec<Vec<Scalar>> = (0..=n).map(|_| random_vec(rng, d + 1, bound)).collect();
        if let Ok(f) = CurveMap::from_rows(&rows) {
            return f;
        }
    }
}

/// Random curve in the good locus (base-point free, birational).
pub fn random_curve_in_u(rng: &mut ChaCha8Rng, n: usize, d: usize, bound: i64) -> CurveMap {
    let mut sampler = ParamSampler::new(rng.gen());
    loop {
        let f = random_curve(rng, n, d, bound);
        if in_u(&f, &mut sampler).is_ok_and(|r| r.in_u) {
            return f;
        }
    }
}

pub fn random_plane(rng: &mut ChaCha8Rng, n: usize, bound: i64) -> Plane {
    loop {
        if let Ok(p) = Plane::new(random_vec(rng, n + 1, bound), random_vec(rng, n + 1, bound)) {
            return p;
        }
    }
}

/// Random projective parameter with entries in `[-20, 20]`.
pub fn random_param(rng: &mut ChaCha8Rng) -> (Scalar, Scalar) {
    loop {
        let (a, b) = (rng.gen_range(-20..=20i64), rng.gen_range(-20..=20i64));
        if (a, b) != (0, 0) {
            return (int(a), int(b));
        }
    }
}

/// A plane through `f(z*)` for a random parameter `z*`.
pub fn incident_plane(rng: &mut ChaCha8Rng, f: &CurveMap) -> Plane {
    let (a, b) = random_param(rng);
    let p = f.point_at(&a, &b);
    loop {
        let r = random_vec(rng, f.n() + 1, 5);
        let s = random_vec(rng, f.n() + 1, 5);
        if let Ok(pl) = Plane::through_point(&p, &r, &s) {
            assert!(pl.contains(&p));
            return pl;
        }
    }
}

pub fn random_gl2(rng: &mut ChaCha8Rng, allowed_dets: &[i64]) -> Gl2 {
    loop {
        let e = random_ints(rng, 4, 3);
        let det = e[0] * e[3] - e[1] * e[2];
        if allowed_dets.contains(&det) {
            return [[int(e[0]), int(e[1])], [int(e[2]), int(e[3])]];
        }
    }
}

pub fn random_invertible(rng: &mut ChaCha8Rng, size: usize) -> Vec<Vec<Scalar>> {
    loop {
        let m: Vec<Vec<Scalar>> = (0..size).map(|_| random_vec(rng, size, 3)).collect();
        if det(&m) != int(0) {
            return m;
        }
    }
}

pub fn det(m: &[Vec<Scalar>]) -> Scalar {
    // cofactor expansion; sizes here are at most 5
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = int(0);
    for j in 0..n {
        let minor: Vec<Vec<Scalar>> = m[1..]
            .iter()
            .map(|r| r.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, x)| x.clone()).collect())
            .collect();
        let t = &m[0][j] * det(&minor);
        if j % 2 == 0 {
            acc += t;
        } else {
            acc -= t;
        }
    }
    acc
}

/// Random pair of degree-`e` forms without a common root.
pub fn random_coprime_pair(rng: &mut ChaCha8Rng, e: usize) -> (BinaryForm, BinaryForm) {
    loop {
        let a = BinaryForm::from_ints(&random_ints(rng, e + 1, 3));
        let b = BinaryForm::from_ints(&random_ints(rng, e + 1, 3));
        if a.is_zero() || b.is_zero() {
            continue;
        }
        if bf_gcd(&a, &b).is_ok_and(|g| g.degree() == 0) {
            return (a, b);
        }
    }
}
