mod common;

use common::*;
use forca_core::field::Field;
use forca_core::forcing::{FiberClass, ForcingSystem};
use forca_core::gb::RingPresentation;
use forca_core::{Polynomial, PrimeField};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn count_solutions(field: &PrimeField, a: &[Vec<u32>], s: &[u32], n: usize) -> usize {
    all_points(field.modulus(), n)
        .into_iter()
        .filter(|t| {
            a.iter().zip(s).all(|(row, si)| {
                let lhs = row.iter().zip(t).fold(0, |acc, (x, y)| field.add(&acc, &field.mul(x, y)));
                lhs == *si
            })
        })
        .count()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn fibers_match_enumeration_over_f5(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let r = ring_fp(5, &["x", "y"]);
        let field = r.field().clone();
        let pres = RingPresentation::polynomial_ring(r.clone());
        let rows = rng.gen_range(1..=2);
        let cols = rng.gen_range(1..=3);
        let a: Vec<Vec<Polynomial<PrimeField>>> =
            (0..rows).map(|_| (0..cols).map(|_| random_poly(&mut rng, &r, 2, 2)).collect()).collect();
        let s: Vec<Polynomial<PrimeField>> = (0..rows).map(|_| random_poly(&mut rng, &r, 2, 2)).collect();
        let fs = ForcingSystem::new(pres, a.clone(), s.clone()).unwrap();
        for p in all_points(5, 2) {
            let av: Vec<Vec<u32>> = a.iter().map(|row| row.iter().map(|e| e.evaluate(&p).unwrap()).collect()).collect();
            let sv: Vec<u32> = s.iter().map(|e| e.evaluate(&p).unwrap()).collect();
            let count = count_solutions(&field, &av, &sv, cols);
            match fs.fiber_at(&p).unwrap() {
                FiberClass::Empty => prop_assert_eq!(count, 0),
                FiberClass::Affine { dimension, particular, directions } => {
                    prop_assert_eq!(count, 5usize.pow(dimension as u32));
                    prop_assert_eq!(directions.len(), dimension);
                    let mut q = p.clone();
                    q.extend(particular);
                    prop_assert!(fs.algebra().contains_point(&q).unwrap());
                }
            }
        }
    }

    #[test]
    fn derivation_is_linear_over_base_and_leibniz(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let r = ring_fp(7, &["x", "y"]);
        let pres = RingPresentation::polynomial_ring(r.clone());
        let gens = vec![random_nonzero_poly(&mut rng, &r, 2, 2), random_nonzero_poly(&mut rng, &r, 2, 2)];
        let fs = ForcingSystem::ideal_case(pres, gens, random_poly(&mut rng, &r, 2, 2)).unwrap();
        let report = fs.build_lnd().unwrap();
        prop_assert!(report.relation_killed);
        let d = &report.derivation;
        let alg = fs.algebra().ring().clone();
        let g = random_poly(&mut rng, &alg, 3, 4);
        let h = random_poly(&mut rng, &alg, 3, 4);
        let a = random_poly(&mut rng, &r, 2, 3).embed(&alg);
        prop_assert_eq!(
            d.apply(&(&(&a * &g) + &h)).unwrap(),
            &(&a * &d.apply(&g).unwrap()) + &d.apply(&h).unwrap()
        );
        prop_assert_eq!(
            d.apply(&(&g * &h)).unwrap(),
            &(&d.apply(&g).unwrap() * &h) + &(&g * &d.apply(&h).unwrap())
        );
        prop_assert!(d.apply(&a).unwrap().is_zero());
    }

    #[test]
    fn section_iff_membership(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let r = ring_fp(7, &["x", "y", "z"]);
        let pres = RingPresentation::polynomial_ring(r.clone());
        let gens: Vec<_> = (0..rng.gen_range(1..=3)).map(|_| random_nonzero_poly(&mut rng, &r, 2, 2)).collect();
        let f = if rng.gen_bool(0.5) {
            gens.iter().fold(Polynomial::zero(&r), |acc, g| &acc + &(g * &random_poly(&mut rng, &r, 1, 2)))
        } else {
            random_poly(&mut rng, &r, 2, 3)
        };
        let fs = ForcingSystem::ideal_case(pres.clone(), gens.clone(), f.clone()).unwrap();
        let member = pres.ideal(gens.clone()).unwrap().contains(&f).unwrap();
        match fs.has_section().unwrap() {
            Some(t) => {
                prop_assert!(member);
                let h = gens.iter().zip(&t).fold(f.clone(), |acc, (g, ti)| &acc + &(g * ti));
                prop_assert!(h.is_zero());
            }
            None => prop_assert!(!member),
        }
    }
}
