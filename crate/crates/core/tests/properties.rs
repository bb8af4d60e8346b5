use proptest::prelude::*;

use qboson_core::boxcount::{count_box_transfer, BoxSpec};
use qboson_core::fock::{wavefunction, Model};
use qboson_core::linalg::Matrix;
use qboson_core::partitions::{partitions_in_box, partitions_of};
use qboson_core::symfunc::{
    adjoint_op, gram_matrix, hl_eval, mul_h, mul_q, pieri_h_matrix, pieri_q_matrix, q_eval,
    schur_eval, GradedSector, SymFunc,
};
use qboson_core::{Coefficient, Laurent, OccupationVector, Partition, Poly, Rational};

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=9).prop_map(|(p, q)| Rational::new(p, q))
}

fn nonzero() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |r| !r.is_zero())
}

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(rational(), 0..5).prop_map(Poly::new)
}

fn partition(max_size: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1usize..=4, 0..=max_size).prop_map(|mut parts| {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts).unwrap()
    })
}

fn hl_t() -> impl Strategy<Value = Rational> {
    prop::sample::select(vec![
        Rational::zero(),
        Rational::new(1, 2),
        Rational::new(-1, 3),
        Rational::new(2, 5),
    ])
}

/// `⟨f, g⟩` for coefficient vectors in a sector with Gram matrix `g`.
fn pairing(gram: &Matrix<Rational>, f: &[Rational], g: &[Rational]) -> Rational {
    let gg = gram.apply(g);
    f.iter().zip(&gg).map(|(a, b)| a * b).sum()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn rational_field_axioms(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &a), &Rational::zero());
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.recip().unwrap(), Rational::one());
        }
    }

    #[test]
    fn poly_ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(a.add_ref(&b).add_ref(&c), a.add_ref(&b.add_ref(&c)));
        prop_assert_eq!(a.mul_ref(&b), b.mul_ref(&a));
        prop_assert_eq!(a.mul_ref(&b).mul_ref(&c), a.mul_ref(&b.mul_ref(&c)));
        prop_assert_eq!(a.mul_ref(&b.add_ref(&c)), a.mul_ref(&b).add_ref(&a.mul_ref(&c)));
        prop_assert!(a.sub_ref(&a).is_zero());
    }

    #[test]
    fn poly_evaluation_is_a_homomorphism(a in poly(), b in poly(), x in rational()) {
        prop_assert_eq!(a.mul_ref(&b).eval(&x), a.eval(&x) * b.eval(&x));
        prop_assert_eq!(a.add_ref(&b).eval(&x), a.eval(&x) + b.eval(&x));
    }

    #[test]
    fn poly_division_round_trips(a in poly(), b in poly().prop_filter("nonzero", |p| !p.is_zero())) {
        let (q, r) = a.div_rem(&b).unwrap();
        prop_assert_eq!(q.mul_ref(&b).add_ref(&r), a);
        prop_assert!(r.degree().unwrap_or(0) < b.degree().unwrap().max(1) || r.is_zero());
    }

    #[test]
    fn laurent_evaluation_is_a_homomorphism(
        a in prop::collection::vec((-3i32..=3, rational()), 0..4),
        b in prop::collection::vec((-3i32..=3, rational()), 0..4),
        u in nonzero(),
    ) {
        let (a, b) = (Laurent::from_terms(a), Laurent::from_terms(b));
        prop_assert_eq!(a.mul_ref(&b).eval(&u).unwrap(), a.eval(&u).unwrap() * b.eval(&u).unwrap());
        prop_assert_eq!(a.invert_variable().eval(&u).unwrap(), a.eval(&u.recip().unwrap()).unwrap());
    }

    #[test]
    fn conjugation_is_an_involution(l in partition(6)) {
        prop_assert_eq!(l.conjugate().conjugate(), l.clone());
        prop_assert_eq!(l.conjugate().size(), l.size());
        prop_assert_eq!(l.conjugate().len(), l.width());
    }

    #[test]
    fn occupation_round_trip(l in partition(5), extra in 0usize..3) {
        let max_site = l.width().max(1) + extra;
        let n = l.len() + extra;
        let occ = OccupationVector::from_partition(&l, max_site, n).unwrap();
        prop_assert_eq!(occ.particles(), n);
        prop_assert_eq!(occ.max_site(), max_site);
        prop_assert_eq!(occ.to_partition(), l.clone());
        prop_assert_eq!(OccupationVector::from_partition(&occ.to_partition(), max_site, n).unwrap(), occ);
    }

    #[test]
    fn schur_is_symmetric(l in partition(4), mut x in prop::collection::vec(rational(), 1..4), k in 0usize..3) {
        let before = schur_eval(&l, &x);
        let k = k % x.len();
        x.rotate_left(k);
        prop_assert_eq!(schur_eval(&l, &x), before);
    }

    #[test]
    fn h_multiplication_evaluates_multiplicatively(
        mu in partition(4),
        k in 0usize..4,
        x in prop::collection::vec(rational(), 1..4),
    ) {
        let width = mu.width() + k;
        let prod = mul_h(&SymFunc::schur(mu.clone()), k, width).unwrap();
        let h_k = schur_eval(&Partition::new(vec![k]).unwrap(), &x);
        prop_assert_eq!(prod.eval_at(&x), h_k * schur_eval(&mu, &x));
    }

    #[test]
    fn hall_littlewood_pieri_is_consistent(
        mu in partition(3),
        r in 0usize..3,
        t in hl_t(),
        x in prop::collection::vec(rational(), 1..4),
    ) {
        let width = mu.width() + r;
        let prod = mul_q(&SymFunc::hl_p(mu.clone(), t.clone()), r, width).unwrap();
        prop_assert_eq!(prod.eval_at(&x), q_eval(r, &x, &t) * hl_eval(&mu, &x, &t));
    }

    #[test]
    fn pieri_adjoints_satisfy_the_pairing(
        m in 1usize..=4,
        d in 0usize..=4,
        k in 0usize..=4,
        t in prop::sample::select(vec![Rational::zero(), Rational::new(1, 2)]),
        seed in prop::collection::vec(rational(), 40),
    ) {
        let k = k.min(m);
        let (src, dst) = (GradedSector::new(m, d), GradedSector::new(m, d + k));
        let op = if t.is_zero() {
            pieri_h_matrix(src.basis(), dst.basis(), k, m).unwrap()
        } else {
            pieri_q_matrix(src.basis(), dst.basis(), k, &t, m).unwrap()
        };
        let adj = adjoint_op(&op, &src, &dst, &t).unwrap();
        let f: Vec<Rational> = seed.iter().cycle().take(src.dim()).cloned().collect();
        let g: Vec<Rational> = seed.iter().rev().cycle().take(dst.dim()).cloned().collect();
        let lhs = pairing(&gram_matrix(&dst, &t).unwrap(), &op.apply(&f), &g);
        let rhs = pairing(&gram_matrix(&src, &t).unwrap(), &f, &adj.apply(&g));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn wavefunction_is_symmetric_in_its_arguments(
        u in prop::collection::vec(nonzero(), 1..=3),
        t in hl_t(),
        m in 1usize..=2,
    ) {
        let mut v = u.clone();
        v.reverse();
        let a = wavefunction(Model::QBoson, m, &t, &u).unwrap();
        let b = wavefunction(Model::QBoson, m, &t, &v).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn box_count_is_symmetric(a in 1usize..=3, b in 1usize..=3, c in 1usize..=3) {
        let base = count_box_transfer(&BoxSpec::new(a, b, c).unwrap());
        for (x, y, z) in [(a, c, b), (b, a, c), (b, c, a), (c, a, b), (c, b, a)] {
            prop_assert_eq!(count_box_transfer(&BoxSpec::new(x, y, z).unwrap()), base.clone());
        }
    }
}

#[test]
fn partition_enumerations_agree() {
    for rows in 0..=4 {
        for cols in 0..=4 {
            let boxed = partitions_in_box(rows, cols);
            let by_size: usize = (0..=rows * cols)
                .map(|d| partitions_of(d, cols, Some(rows)).len())
                .sum();
            assert_eq!(boxed.len(), by_size);
        }
    }
}
