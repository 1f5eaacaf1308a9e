mod common;

use common::*;
use forca_core::field::Field;
use forca_core::forcing::ForcingSystem;
use forca_core::gb::{PresentationRef, RingPresentation};
use forca_core::linalg::{evaluate_matrix, rank, AffineSolutions};
use forca_core::singular::{case4_system, classify_point, jacobian, ring_dimension, CaseTag, Verdict};
use forca_core::{EngineConfig, MonomialOrder, Polynomial, PrimeField};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn base(rng: &mut ChaCha8Rng) -> PresentationRef<PrimeField> {
    let f5 = PrimeField::new(5).unwrap();
    let cfg = EngineConfig::default();
    if rng.gen_bool(0.5) {
        RingPresentation::parse(f5, &["x", "y"], &[] as &[&str], MonomialOrder::DegRevLex, cfg).unwrap()
    } else {
        RingPresentation::parse(f5, &["x", "y", "z"], &["x + x^2 + y^2 + z^2"], MonomialOrder::DegRevLex, cfg).unwrap()
    }
}

fn points_of(fs: &ForcingSystem<PrimeField>) -> Vec<Vec<u32>> {
    all_points(5, fs.algebra().nvars()).into_iter().filter(|q| fs.algebra().contains_point(q).unwrap()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn verdict_agrees_with_minor_rank(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let r = base(&mut rng);
        let ring = r.ring().clone();
        let n = rng.gen_range(1..=2);
        let gens: Vec<Polynomial<PrimeField>> = (0..n).map(|_| random_poly(&mut rng, &ring, 2, 2)).collect();
        let f = random_poly(&mut rng, &ring, 2, 2);
        let fs = ForcingSystem::ideal_case(r.clone(), gens, f).unwrap();
        let dim_r = ring_dimension(&r).unwrap();
        let field = r.field().clone();
        let j = jacobian(&fs);
        for q in points_of(&fs) {
            let c = classify_point(&fs, &q, Some(dim_r), None).unwrap();
            let oracle = rank_by_minors(&field, &evaluate_matrix(&j, &q).unwrap());
            prop_assert_eq!(c.rank, Some(oracle));
            prop_assert_eq!(c.verdict == Verdict::Nonsingular, oracle == c.codim, "{:?} at {:?}", c, q);
            if matches!(c.case, CaseTag::Case1Smooth | CaseTag::Case1Singular) {
                prop_assert_eq!(c.verdict == Verdict::Nonsingular, c.base_rank == c.base_codim);
            }
        }
    }

    #[test]
    fn case4_solutions_are_singular(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let r = ring_fp(5, &["x", "y"]);
        let pres = RingPresentation::polynomial_ring(r.clone());
        let n = rng.gen_range(1..=3);
        // generators and f vanishing at the origin
        let gens: Vec<_> = (0..n).map(|_| {
            let g = random_poly(&mut rng, &r, 3, 3);
            &g - &Polynomial::constant(&r, g.evaluate(&[0, 0]).unwrap())
        }).collect();
        let f = random_poly(&mut rng, &r, 3, 3);
        let f = &f - &Polynomial::constant(&r, f.evaluate(&[0, 0]).unwrap());
        let fs = ForcingSystem::ideal_case(pres, gens, f).unwrap();
        let sys = case4_system(&fs, &[0, 0]).unwrap();
        let field = PrimeField::new(5).unwrap();
        let solves = |t: &[u32]| {
            sys.matrix.iter().zip(&sys.rhs).all(|(row, rhs)| {
                row.iter().zip(t).fold(0, |acc, (a, b)| field.add(&acc, &field.mul(a, b))) == *rhs
            })
        };
        let mut count = 0;
        for t in all_points(5, n) {
            let mut q = vec![0, 0];
            q.extend(&t);
            let c = classify_point(&fs, &q, Some(2), None).unwrap();
            if solves(&t) {
                count += 1;
                prop_assert_eq!(c.case, CaseTag::Case4Singular);
                prop_assert_eq!(c.verdict, Verdict::Singular);
            } else {
                prop_assert_ne!(c.case, CaseTag::Case4Singular);
            }
        }
        match &sys.solutions {
            AffineSolutions::Affine { directions, .. } => prop_assert_eq!(5usize.pow(directions.len() as u32), count),
            AffineSolutions::Empty => prop_assert_eq!(count, 0),
        }
    }

    #[test]
    fn classification_ignores_generator_labels(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let r = base(&mut rng);
        let ring = r.ring().clone();
        let gens: Vec<_> = (0..2).map(|_| random_poly(&mut rng, &ring, 2, 2)).collect();
        let f = random_poly(&mut rng, &ring, 2, 2);
        let fs = ForcingSystem::ideal_case(r.clone(), gens.clone(), f.clone()).unwrap();
        let swapped = ForcingSystem::ideal_case(r.clone(), vec![gens[1].clone(), gens[0].clone()], f).unwrap();
        let m = r.nvars();
        for q in points_of(&fs) {
            let mut q2 = q.clone();
            q2.swap(m, m + 1);
            let a = classify_point(&fs, &q, None, None).unwrap();
            let b = classify_point(&swapped, &q2, None, None).unwrap();
            prop_assert_eq!(a, b);
        }
    }

    #[test]
    fn elimination_rank_matches_minors(rows in 1usize..=6, cols in 1usize..=8, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let field = PrimeField::new(5).unwrap();
        let sparse = rng.gen_bool(0.5);
        let m: Vec<Vec<u32>> = (0..rows)
            .map(|_| (0..cols).map(|_| if sparse && rng.gen_bool(0.6) { 0 } else { rng.gen_range(0..5) }).collect())
            .collect();
        prop_assert_eq!(rank(&field, &m), rank_by_minors(&field, &m));
    }
}
