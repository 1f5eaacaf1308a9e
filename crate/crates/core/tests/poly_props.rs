use forca_core::field::Field;
use forca_core::{Grading, Monomial, PolyRing, Polynomial, PrimeField, RingRef};
use proptest::prelude::*;

fn ring() -> RingRef<PrimeField> {
    PolyRing::new(PrimeField::new(7).unwrap(), &["x", "y", "z"], forca_core::MonomialOrder::DegRevLex).unwrap()
}

fn poly_strategy() -> impl Strategy<Value = Vec<(Vec<u32>, u32)>> {
    prop::collection::vec((prop::collection::vec(0u32..4, 3), 0u32..7), 0..6)
}

fn build(r: &RingRef<PrimeField>, terms: Vec<(Vec<u32>, u32)>) -> Polynomial<PrimeField> {
    Polynomial::from_terms(r, terms.into_iter().map(|(e, c)| (Monomial::from_exponents(&e), c)).collect())
}

proptest! {
    #[test]
    fn ring_axioms_over_f7(a in poly_strategy(), b in poly_strategy(), c in poly_strategy()) {
        let r = ring();
        let (a, b, c) = (build(&r, a), build(&r, b), build(&r, c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &Polynomial::one(&r), a.clone());
        // terms stay strictly descending with nonzero coefficients
        let p = &a * &b;
        for w in p.terms().windows(2) {
            prop_assert_eq!(r.order().cmp(&w[0].0, &w[1].0), std::cmp::Ordering::Greater);
        }
        prop_assert!(p.terms().iter().all(|(_, c)| *c != 0));
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in poly_strategy(), b in poly_strategy(), pt in prop::collection::vec(0u32..7, 3)) {
        let r = ring();
        let f = r.field().clone();
        let (a, b) = (build(&r, a), build(&r, b));
        let (va, vb) = (a.evaluate(&pt).unwrap(), b.evaluate(&pt).unwrap());
        prop_assert_eq!((&a + &b).evaluate(&pt).unwrap(), f.add(&va, &vb));
        prop_assert_eq!((&a * &b).evaluate(&pt).unwrap(), f.mul(&va, &vb));
    }

    #[test]
    fn leibniz_rule(a in poly_strategy(), b in poly_strategy(), v in 0usize..3) {
        let r = ring();
        let (a, b) = (build(&r, a), build(&r, b));
        let lhs = (&a * &b).partial_derivative(v);
        let rhs = &(&a.partial_derivative(v) * &b) + &(&a * &b.partial_derivative(v));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn weighted_degree_is_additive(
        ea in prop::collection::vec(0u32..4, 3),
        eb in prop::collection::vec(0u32..4, 3),
        w in prop::collection::vec(-3i64..6, 3),
        ca in 1u32..7,
        cb in 1u32..7,
    ) {
        let r = ring();
        let g = Grading::weights(&w).unwrap();
        let a = build(&r, vec![(ea, ca)]);
        let b = build(&r, vec![(eb, cb)]);
        let da = a.weighted_degree(&g).unwrap().homogeneous().unwrap();
        let db = b.weighted_degree(&g).unwrap().homogeneous().unwrap();
        let dab = (&a * &b).weighted_degree(&g).unwrap().homogeneous().unwrap();
        prop_assert_eq!(dab, vec![da[0] + db[0]]);
    }

    #[test]
    fn display_parse_round_trip(a in poly_strategy()) {
        let r = ring();
        let a = build(&r, a);
        let back = forca_core::parse::parse_polynomial(&a.to_string(), &r).unwrap();
        prop_assert_eq!(back, a);
    }
}
