//! Sylvester matrices and exact resultants of two binary forms of equal
//! degree, with symbolic coefficients allowed.
//!
//! Two determinant backends are provided. [`det_bareiss`] is the generic
//! fraction-free elimination. The Laplace block split expands along the top
//! `d` rows: when the top rows only involve `u` and the bottom rows only `v`,
//! each term is a product of a pure-`u` minor and a pure-`v` minor, which is
//! both cheap and makes the bidegree visible.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactpoly::{poly_divides, BinaryForm, Block, MPoly, Ring};

/// `2d x 2d` Sylvester matrix: rows `0..d` carry shifted copies of the
/// first form's coefficients, rows `d..2d` those of the second.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SylvesterMatrix {
    d: usize,
    entries: Vec<Vec<MPoly>>,
}

impl SylvesterMatrix {
    pub fn size(&self) -> usize {
        2 * self.d
    }

    pub fn entries(&self) -> &[Vec<MPoly>] {
        &self.entries
    }

    pub fn top(&self) -> &[Vec<MPoly>] {
        &self.entries[..self.d]
    }

    pub fn bottom(&self) -> &[Vec<MPoly>] {
        &self.entries[self.d..]
    }
}

fn check_pair(h1: &BinaryForm, h2: &BinaryForm) -> Result<usize> {
    if h1.degree() != h2.degree() {
        return Err(Error::DegreeMismatch(h1.degree(), h2.degree()));
    }
    if h1.degree() == 0 {
        return Err(Error::DegreeZero);
    }
    if h1.ring() != h2.ring() {
        return Err(Error::RingMismatch);
    }
    Ok(h1.degree())
}

pub fn sylvester(h1: &BinaryForm, h2: &BinaryForm) -> Result<SylvesterMatrix> {
    let d = check_pair(h1, h2)?;
    let ring = h1.ring();
    let mut entries = Vec::with_capacity(2 * d);
    for h in [h1, h2] {
        for shift in 0..d {
            let mut row = vec![MPoly::zero(ring); 2 * d];
            for (j, c) in h.coeffs().iter().enumerate() {
                row[shift + j] = c.clone();
            }
            entries.push(row);
        }
    }
    Ok(SylvesterMatrix { d, entries })
}

/// Determinant by fraction-free Bareiss elimination. Each step divides
/// exactly by the previous pivot; a zero pivot is replaced by the first
/// lower row with a nonzero entry in that column.
pub fn det_bareiss(m: &[Vec<MPoly>]) -> MPoly {
    let n = m.len();
    assert!(n > 0, "determinant of an empty matrix");
    assert!(m.iter().all(|r| r.len() == n), "matrix must be square");
    let ring = m[0][0].ring().clone();
    let mut a: Vec<Vec<MPoly>> = m.to_vec();
    let mut negate = false;
    let mut prev = MPoly::one(&ring);
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return MPoly::zero(&ring),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = poly_divides(&prev, &num)
                    .expect("nonzero previous pivot")
                    .expect("Bareiss quotient is exact");
            }
            a[i][k] = MPoly::zero(&ring);
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Determinants of the `r x r` minors of an `r x ncols` block, keyed by the
/// bitmask of the chosen columns. Built row by row: a minor on rows `0..=k`
/// is the expansion along row `k` of minors on rows `0..k`.
fn row_block_minors(rows: &[Vec<MPoly>], ring: &Arc<Ring>) -> HashMap<u64, MPoly> {
    let ncols = rows.first().map_or(0, Vec::len);
    assert!(ncols <= 64);
    let mut level: HashMap<u64, MPoly> = HashMap::from([(0u64, MPoly::one(ring))]);
    for (k, row) in rows.iter().enumerate() {
        let mut next: HashMap<u64, MPoly> = HashMap::new();
        for (&mask, minor) in &level {
            for (j, entry) in row.iter().enumerate() {
                if entry.is_zero() || mask & (1 << j) != 0 {
                    continue;
                }
                let below = (mask & ((1u64 << j) - 1)).count_ones() as usize;
                let mut term = entry * minor;
                if (k + below) % 2 == 1 {
                    term = -term;
                }
                let slot = next
                    .entry(mask | (1 << j))
                    .or_insert_with(|| MPoly::zero(ring));
                *slot = &*slot + &term;
            }
        }
        next.retain(|_, p| !p.is_zero());
        level = next;
    }
    level
}

/// Generalized Laplace expansion of a square matrix along its first
/// `top.len()` rows.
pub fn det_laplace_blocks(top: &[Vec<MPoly>], bottom: &[Vec<MPoly>]) -> MPoly {
    let n = top.len() + bottom.len();
    assert!(n > 0 && top.iter().chain(bottom).all(|r| r.len() == n));
    let ring = top.iter().chain(bottom).next().unwrap()[0].ring().clone();
    let full: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let upper = row_block_minors(top, &ring);
    let lower = row_block_minors(bottom, &ring);
    let row_parity = top.len() * top.len().saturating_sub(1) / 2;
    // deterministic accumulation order
    let mut masks: Vec<u64> = upper.keys().copied().collect();
    masks.sort_unstable();
    let mut det = MPoly::zero(&ring);
    for mask in masks {
        let Some(lo) = lower.get(&(full & !mask)) else {
            continue;
        };
        let col_sum: usize = (0..n).filter(|&c| mask & (1 << c) != 0).sum();
        let term = &upper[&mask] * lo;
        det = if (row_parity + col_sum) % 2 == 1 {
            &det - &term
        } else {
            &det + &term
        };
    }
    det
}

/// Whether the first form avoids the `v` block and the second the `u` block.
fn is_block_split(h1: &BinaryForm, h2: &BinaryForm) -> bool {
    let ring = h1.ring();
    let u = ring.block_slots(Block::U);
    let v = ring.block_slots(Block::V);
    let avoids = |h: &BinaryForm, slots: &[usize]| {
        h.coeffs()
            .iter()
            .all(|c| c.support().iter().all(|s| !slots.contains(s)))
    };
    avoids(h1, &v) && avoids(h2, &u)
}

/// `Res(h1, h2) = det(sylvester(h1, h2))`. Uses the Laplace block split when
/// the first form carries no `v` variables and the second no `u` variables,
/// Bareiss otherwise.
pub fn resultant(h1: &BinaryForm, h2: &BinaryForm) -> Result<MPoly> {
    if is_block_split(h1, h2) {
        resultant_laplace(h1, h2)
    } else {
        resultant_bareiss(h1, h2)
    }
}

pub fn resultant_laplace(h1: &BinaryForm, h2: &BinaryForm) -> Result<MPoly> {
    let s = sylvester(h1, h2)?;
    Ok(det_laplace_blocks(s.top(), s.bottom()))
}

pub fn resultant_bareiss(h1: &BinaryForm, h2: &BinaryForm) -> Result<MPoly> {
    let s = sylvester(h1, h2)?;
    Ok(det_bareiss(s.entries()))
}
