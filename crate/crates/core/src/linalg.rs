//! Small dense linear algebra over exact rationals.

use num_traits::{One, Zero};

use crate::exactpoly::Scalar;

/// Determinant by Gaussian elimination with exact rational pivots.
pub fn det(m: &[Vec<Scalar>]) -> Scalar {
    let n = m.len();
    assert!(m.iter().all(|r| r.len() == n), "matrix must be square");
    let mut a = m.to_vec();
    let mut det = Scalar::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return Scalar::zero();
        };
        if p != k {
            a.swap(p, k);
            det = -det;
        }
        let pivot = a[k][k].clone();
        det *= &pivot;
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &pivot;
            let (top, rest) = a.split_at_mut(i);
            for (x, y) in rest[0][k..].iter_mut().zip(&top[k][k..]) {
                *x -= &f * y;
            }
        }
    }
    det
}

/// Whether two vectors of equal length are linearly independent.
pub fn independent(u: &[Scalar], v: &[Scalar]) -> bool {
    (0..u.len()).any(|i| (i + 1..u.len()).any(|j| &u[i] * &v[j] != &u[j] * &v[i]))
}
