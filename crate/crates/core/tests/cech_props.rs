mod common;

use common::*;
use forca_core::cech::{pairs, CechCocycle, Coboundary};
use forca_core::gb::{PresentationRef, RingPresentation};
use forca_core::{EngineConfig, MonomialOrder, PrimeField};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn base(rng: &mut ChaCha8Rng) -> PresentationRef<PrimeField> {
    let rels: &[&str] = match rng.gen_range(0..3) {
        0 => &[],
        1 => &["x*w + y*z"],
        _ => &["x^2 + y^3 + z^5"],
    };
    RingPresentation::parse(
        PrimeField::new(7).unwrap(),
        &["x", "y", "z", "w"],
        rels,
        MonomialOrder::DegRevLex,
        EngineConfig::default(),
    )
    .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn coboundaries_are_cocycles_and_round_trip(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let r = base(&mut rng);
        let ring = r.ring().clone();
        let n = rng.gen_range(2..=3);
        let m = rng.gen_range(1..=2);
        let names = ["x", "y", "z"];
        let gens: Vec<_> = (0..n).map(|i| r.poly(names[i]).unwrap()).collect();
        let t: Vec<_> = (0..n).map(|_| random_poly(&mut rng, &ring, 2, 2)).collect();
        let c = CechCocycle::coboundary(r.clone(), gens.clone(), m, &t).unwrap();
        prop_assert!(c.check_cocycle().unwrap().holds());
        let w = match c.is_coboundary().unwrap() {
            Coboundary::Witness(w) => w,
            Coboundary::NotCoboundary => return Err(TestCaseError::fail("coboundary not recognised")),
        };
        let back = CechCocycle::coboundary(r.clone(), gens, m, &w).unwrap();
        for (a, b) in back.numerators().iter().zip(c.numerators()) {
            prop_assert!(r.is_zero(&(a - b)).unwrap());
        }
    }

    #[test]
    fn restriction_commutes_with_forcing(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let r = base(&mut rng);
        let ring = r.ring().clone();
        let gens = vec![r.poly("x").unwrap(), r.poly("y").unwrap(), r.poly("z").unwrap()];
        let t: Vec<_> = (0..3).map(|_| random_poly(&mut rng, &ring, 2, 2)).collect();
        let c = CechCocycle::coboundary(r.clone(), gens, 1, &t).unwrap();
        let extra = vec![random_nonzero_poly(&mut rng, &ring, 2, 2)];
        let restricted = match c.restrict(extra.clone()) {
            Ok(c) => c,
            Err(forca_core::Error::Precondition(_)) => return Ok(()),
            Err(e) => return Err(TestCaseError::fail(e.to_string())),
        };
        let direct = restricted.to_forcing().unwrap();
        let full = c.to_forcing().unwrap();
        let target = restricted.base().clone();
        for (row_a, row_b) in direct.matrix().iter().zip(full.matrix()) {
            for (a, b) in row_a.iter().zip(row_b) {
                prop_assert!(target.is_zero(&(a - b)).unwrap());
            }
        }
        for (a, b) in direct.vector().iter().zip(full.vector()) {
            prop_assert!(target.is_zero(&(a - b)).unwrap());
        }
    }

    #[test]
    fn two_generator_classes_follow_membership(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let r = ring_fp(7, &["x", "y", "z"]);
        let pres = RingPresentation::polynomial_ring(r.clone());
        let m = rng.gen_range(1..=2);
        let gens = vec![pres.poly("x").unwrap(), pres.poly("y").unwrap()];
        let b = random_poly(&mut rng, &r, 3, 3);
        let c = CechCocycle::new(pres.clone(), gens.clone(), m, vec![b.clone()]).unwrap();
        let ideal = pres.ideal(gens.iter().map(|g| g.pow(m)).collect()).unwrap();
        prop_assert_eq!(c.is_coboundary().unwrap().witness().is_some(), ideal.contains(&b).unwrap());
    }

    #[test]
    fn localization_certifies_every_chart(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let r = base(&mut rng);
        let ring = r.ring().clone();
        let gens = vec![r.poly("x").unwrap(), r.poly("y").unwrap(), r.poly("z").unwrap()];
        let t: Vec<_> = (0..3).map(|_| random_poly(&mut rng, &ring, 1, 2)).collect();
        let c = CechCocycle::coboundary(r.clone(), gens, 1, &t).unwrap();
        let i = rng.gen_range(0..3);
        prop_assert_eq!(c.localize(i).unwrap().substitutions.len(), 2);
        let (a, b) = pairs(3)[rng.gen_range(0..3)];
        prop_assert!(c.transition_holds(a, b).unwrap());
    }
}
