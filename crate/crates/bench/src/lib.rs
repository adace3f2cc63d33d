//! Fixed inputs shared by the benchmarks.

use chow_core::{BinaryForm, CurveMap, MPoly, Ring};

/// Degree-`d` curve in `P^n`, `n >= d`: component `i` is `z0^(d-i) z1^i`
/// for `i <= d`; later components mix all monomials with small coefficients.
pub fn sample_curve(n: usize, d: usize) -> CurveMap {
    assert!(n >= d, "sample curves need n >= d");
    let rows: Vec<Vec<i64>> = (0..=n)
        .map(|i| {
            (0..=d)
                .map(|j| if i <= d { i64::from(i == j) } else { ((i * 7 + j * 3) % 5) as i64 - 2 })
                .collect()
        })
        .collect();
    let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
    CurveMap::from_int_rows(&refs).expect("sample rows are valid")
}

/// `⟨f, u⟩` and `⟨f, v⟩` with symbolic covectors.
pub fn contractions(f: &CurveMap) -> (BinaryForm, BinaryForm) {
    let ring = Ring::chow(f.n(), false);
    let k = f.n() + 1;
    let contract = |off: usize| {
        f.components()
            .iter()
            .enumerate()
            .fold(BinaryForm::zero(&ring, f.d()), |acc, (i, c)| {
                let c = c.embed(&ring).expect("scalars embed");
                acc.add(&c.scale(&MPoly::var(&ring, off + i))).expect("same ring")
            })
    };
    (contract(0), contract(k))
}
