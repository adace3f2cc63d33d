mod common;

use chow_core::cayley::gl2_det;
use chow_core::exactpoly::{
    bf_compose, bf_gcd, bf_substitute_gl2, content_primitive, poly_divides, Block, Monomial, Var,
};
use chow_core::oracle::map_degree;
use chow_core::resultant::{resultant, resultant_bareiss, resultant_laplace};
use chow_core::{
    act_gl2, cayley_biform, eval_biform, in_u, incident, incident_oracle, plucker_rewrite, BinaryForm,
    CurveMap, MPoly, ParamSampler, Ring, Scalar,
};
use common::*;
use num_traits::{One, Zero};
use proptest::collection::vec;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn form(max_deg: usize) -> impl Strategy<Value = Vec<i64>> {
    (1..=max_deg).prop_flat_map(|d| vec(-5i64..=5, d + 1))
}

fn nonzero_form(max_deg: usize) -> impl Strategy<Value = Vec<i64>> {
    form(max_deg).prop_filter("nonzero", |c| c.iter().any(|&x| x != 0))
}

/// Degree-exact form: nonzero coefficient of `z0^d`.
fn exact_form(d: usize) -> impl Strategy<Value = Vec<i64>> {
    vec(-5i64..=5, d + 1).prop_filter("leading", |c| c[0] != 0)
}

fn gl2() -> impl Strategy<Value = [[Scalar; 2]; 2]> {
    vec(-3i64..=3, 4)
        .prop_filter("invertible", |e| e[0] * e[3] != e[1] * e[2])
        .prop_map(|e| [[int(e[0]), int(e[1])], [int(e[2]), int(e[3])]])
}

fn matmul(a: &[[Scalar; 2]; 2], b: &[[Scalar; 2]; 2]) -> [[Scalar; 2]; 2] {
    let e = |i: usize, j: usize| &a[i][0] * &b[0][j] + &a[i][1] * &b[1][j];
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

fn numeric(p: &MPoly) -> Scalar {
    p.constant_value().expect("numeric resultant")
}

/// Resultant of dense univariate polynomials (descending coefficients,
/// nonzero leading term) through the Euclidean remainder sequence.
fn uni_resultant(a: &[Scalar], b: &[Scalar]) -> Scalar {
    let (m, n) = (a.len() - 1, b.len() - 1);
    if n == 0 {
        return (0..m).fold(Scalar::one(), |acc, _| acc * &b[0]);
    }
    // remainder of a by b
    let mut r = a.to_vec();
    while r.len() > n {
        let q = &r[0] / &b[0];
        for (i, bi) in b.iter().enumerate() {
            r[i] -= &q * bi;
        }
        r.remove(0);
    }
    while r.first().is_some_and(Zero::is_zero) {
        r.remove(0);
    }
    if r.is_empty() {
        return Scalar::zero();
    }
    let deg_r = r.len() - 1;
    let sign = if m * n % 2 == 1 { -Scalar::one() } else { Scalar::one() };
    let lc = (0..m - deg_r).fold(Scalar::one(), |acc, _| acc * &b[0]);
    sign * lc * uni_resultant(b, &r)
}

fn scalars(c: &[i64]) -> Vec<Scalar> {
    c.iter().map(|&x| int(x)).collect()
}

fn random_poly(ring: &std::sync::Arc<Ring>, terms: &[(Vec<u32>, i64)]) -> MPoly {
    MPoly::from_terms(
        ring,
        terms
            .iter()
            .map(|(e, c)| (Monomial::from_exponents(e.clone()), int(*c))),
    )
}

fn poly_strategy(vars: usize) -> impl Strategy<Value = Vec<(Vec<u32>, i64)>> {
    vec((vec(0u32..=2, vars), -5i64..=5), 1..5)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn gcd_is_multiplicative(a in nonzero_form(3), b in nonzero_form(3), c in nonzero_form(3)) {
        let (a, b, c) = (BinaryForm::from_ints(&a), BinaryForm::from_ints(&b), BinaryForm::from_ints(&c));
        let lhs = bf_gcd(&a.mul(&c), &b.mul(&c)).unwrap();
        let rhs = bf_gcd(&a, &b).unwrap().mul(&c);
        prop_assert!(lhs.proportional_to(&rhs), "{lhs:?} vs {rhs:?}");
    }

    #[test]
    fn gcd_is_normalized(a in nonzero_form(4), b in nonzero_form(4)) {
        let g = bf_gcd(&BinaryForm::from_ints(&a), &BinaryForm::from_ints(&b)).unwrap();
        let cs = g.scalar_coeffs().unwrap();
        prop_assert!(cs.iter().find(|c| !c.is_zero()).unwrap() > &Scalar::zero());
        prop_assert!(cs.iter().all(|c| c.is_integer()));
    }

    #[test]
    fn substitution_is_a_right_action(h in form(4), a in gl2(), b in gl2()) {
        let h = BinaryForm::from_ints(&h);
        let lhs = bf_substitute_gl2(&h, &matmul(&a, &b));
        let rhs = bf_substitute_gl2(&bf_substitute_gl2(&h, &a), &b);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn exact_division_recovers_quotient(a in poly_strategy(3), q in poly_strategy(3)) {
        let ring = Ring::points(2);
        let (a, q) = (random_poly(&ring, &a), random_poly(&ring, &q));
        prop_assume!(!a.is_zero() && !q.is_zero());
        prop_assert_eq!(poly_divides(&a, &(&a * &q)).unwrap(), Some(q));
    }

    #[test]
    fn primitive_part_is_idempotent(p in poly_strategy(3), k in 1i64..=7) {
        let ring = Ring::points(2);
        let p = random_poly(&ring, &p).scale(&rat(k, 3));
        prop_assume!(!p.is_zero());
        let (c, prim) = content_primitive(&p).unwrap();
        prop_assert_eq!(prim.scale(&c), p);
        let (c2, prim2) = content_primitive(&prim).unwrap();
        prop_assert!(c2.is_one());
        prop_assert_eq!(prim2, prim);
    }

    #[test]
    fn resultant_vanishes_iff_common_root(
        a in vec(-4i64..=4, 1..=4),
        b in vec(-4i64..=4, 1..=4),
        root in vec(-3i64..=3, 2),
        shared in any::<bool>(),
    ) {
        // degree-d forms built as (optional common factor) * cofactor
        let d = a.len().max(b.len());
        let pad = |c: &[i64]| { let mut v = c.to_vec(); v.resize(d, 0); v };
        prop_assume!(root != [0, 0]);
        let (mut h1, mut h2) = (BinaryForm::from_ints(&pad(&a)), BinaryForm::from_ints(&pad(&b)));
        let lin = BinaryForm::from_ints(&[root[1], -root[0]]);
        if shared {
            h1 = h1.mul(&lin);
            h2 = h2.mul(&lin);
        } else {
            h1 = h1.mul(&BinaryForm::from_ints(&[1, 1]));
            h2 = h2.mul(&BinaryForm::from_ints(&[1, -2]));
        }
        prop_assume!(!h1.is_zero() && !h2.is_zero());
        let res = numeric(&resultant(&h1, &h2).unwrap());
        let common = bf_gcd(&h1, &h2).unwrap().degree() >= 1;
        prop_assert_eq!(res.is_zero(), common);
    }

    #[test]
    fn resultant_swap_sign(d in 1usize..=4, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let h1 = BinaryForm::from_ints(&random_ints(&mut rng, d + 1, 5));
        let h2 = BinaryForm::from_ints(&random_ints(&mut rng, d + 1, 5));
        let r12 = numeric(&resultant(&h1, &h2).unwrap());
        let r21 = numeric(&resultant(&h2, &h1).unwrap());
        let sign = if d % 2 == 1 { -Scalar::one() } else { Scalar::one() };
        prop_assert_eq!(r21, sign * r12);
    }

    #[test]
    fn resultant_row_operation(d in 1usize..=3, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ring = Ring::new(vec![Var::new("lambda", Block::Aux)]);
        let lambda = MPoly::var(&ring, 0);
        let h1 = BinaryForm::from_ints(&random_ints(&mut rng, d + 1, 5)).embed(&ring).unwrap();
        let h2 = BinaryForm::from_ints(&random_ints(&mut rng, d + 1, 5)).embed(&ring).unwrap();
        let moved = h2.add(&h1.scale(&lambda)).unwrap();
        prop_assert_eq!(resultant(&h1, &moved).unwrap(), resultant(&h1, &h2).unwrap());
    }

    #[test]
    fn resultant_is_multiplicative(a in exact_form(1), b in exact_form(2), c in exact_form(3)) {
        let (fa, fb, fc) = (BinaryForm::from_ints(&a), BinaryForm::from_ints(&b), BinaryForm::from_ints(&c));
        let lhs = numeric(&resultant(&fa.mul(&fb), &fc).unwrap());
        let (sa, sb, sc) = (scalars(&a), scalars(&b), scalars(&c));
        prop_assert_eq!(lhs, uni_resultant(&sa, &sc) * uni_resultant(&sb, &sc));
    }

    #[test]
    fn sylvester_matches_remainder_sequence(a in exact_form(3), b in exact_form(3)) {
        let res = numeric(&resultant(&BinaryForm::from_ints(&a), &BinaryForm::from_ints(&b)).unwrap());
        prop_assert_eq!(res, uni_resultant(&scalars(&a), &scalars(&b)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn backends_agree(n in 1usize..=3, d in 1usize..=3, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_curve(&mut rng, n, d, 5);
        let ring = Ring::chow(n, false);
        let k = n + 1;
        let contract = |off: usize| {
            f.components().iter().enumerate().fold(BinaryForm::zero(&ring, d), |acc, (i, c)| {
                acc.add(&c.embed(&ring).unwrap().scale(&MPoly::var(&ring, off + i))).unwrap()
            })
        };
        let (h1, h2) = (contract(0), contract(k));
        prop_assert_eq!(resultant_laplace(&h1, &h2).unwrap(), resultant_bareiss(&h1, &h2).unwrap());
    }

    #[test]
    fn biform_is_bihomogeneous(n in 2usize..=3, d in 1usize..=3, seed in any::<u64>(), lam in -4i64..=4, mu in -4i64..=4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_curve(&mut rng, n, d, 5);
        let ca = cayley_biform(&f);
        let (u, v) = (random_vec(&mut rng, n + 1, 5), random_vec(&mut rng, n + 1, 5));
        let su: Vec<Scalar> = u.iter().map(|x| x * int(lam)).collect();
        let sv: Vec<Scalar> = v.iter().map(|x| x * int(mu)).collect();
        let factor = (0..d).fold(Scalar::one(), |acc, _| acc * int(lam * mu));
        prop_assert_eq!(eval_biform(&ca, &su, &sv).unwrap(), factor * eval_biform(&ca, &u, &v).unwrap());
    }

    #[test]
    fn biform_depends_on_the_plane_only(n in 2usize..=3, d in 1usize..=3, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ca = cayley_biform(&random_curve(&mut rng, n, d, 5));
        prop_assert!(ca.is_shear_invariant());
        prop_assert!(ca.has_swap_symmetry());
    }

    #[test]
    fn plucker_round_trip(n in 2usize..=3, d in 1usize..=3, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ca = cayley_biform(&random_curve(&mut rng, n, d, 5));
        prop_assume!(!ca.is_zero());
        let rep = plucker_rewrite(&ca).unwrap();
        prop_assert_eq!(rep.expand(), ca);
    }

    #[test]
    fn oracle_agrees_with_chow_form(n in 2usize..=4, d in 1usize..=3, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_curve_in_u(&mut rng, n, d, 5);
        let ca = cayley_biform(&f);
        for _ in 0..4 {
            let pl = random_plane(&mut rng, n, 3);
            prop_assert_eq!(incident(&ca, &pl).unwrap(), incident_oracle(&f, &pl).unwrap());
            let pl = incident_plane(&mut rng, &f);
            prop_assert!(incident(&ca, &pl).unwrap());
            prop_assert!(incident_oracle(&f, &pl).unwrap());
        }
    }

    #[test]
    fn map_degree_is_reparametrization_invariant(n in 2usize..=3, d in 1usize..=3, seed in any::<u64>(), a in gl2()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_curve(&mut rng, n, d, 4);
        prop_assume!(chow_core::base_locus_free(&f));
        let mut s = ParamSampler::new(seed);
        let e = map_degree(&f, &mut s).unwrap();
        prop_assert_eq!(map_degree(&act_gl2(&f, &a).unwrap(), &mut s).unwrap(), e);
        let report = in_u(&f, &mut s).unwrap();
        prop_assert_eq!(report.map_degree.unwrap() * report.image_degree.unwrap(), d);
    }

    #[test]
    fn covers_multiply_map_degree(n in 2usize..=3, d in 1usize..=2, e in 1usize..=2, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_curve(&mut rng, n, d, 4);
        prop_assume!(chow_core::base_locus_free(&g));
        let (p0, p1) = random_coprime_pair(&mut rng, e);
        let f = CurveMap::new(g.components().iter().map(|c| bf_compose(c, &p0, &p1)).collect()).unwrap();
        let mut s = ParamSampler::new(seed);
        let eg = map_degree(&g, &mut s).unwrap();
        prop_assert_eq!(map_degree(&f, &mut s).unwrap(), eg * e);
        // Ca(g∘φ) = Res(φ0, φ1)^(d^2) Ca(g)^e
        let mut power = cayley_biform(&g);
        for _ in 1..e {
            power = power.mul(&cayley_biform(&g)).unwrap();
        }
        let r = numeric(&resultant(&p0, &p1).unwrap());
        let factor = (0..d * d).fold(Scalar::one(), |acc, _| acc * &r);
        prop_assert_eq!(cayley_biform(&f), power.scale(&factor));
    }

    #[test]
    fn orbit_invariance(n in 2usize..=3, d in 1usize..=3, seed in any::<u64>(), a in gl2()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_curve(&mut rng, n, d, 5);
        let ca = cayley_biform(&f);
        prop_assume!(!ca.is_zero());
        let moved = cayley_biform(&act_gl2(&f, &a).unwrap());
        let det = gl2_det(&a);
        let factor = (0..d * d).fold(Scalar::one(), |acc, _| acc * &det);
        prop_assert_eq!(moved, ca.scale(&factor));
    }
}
