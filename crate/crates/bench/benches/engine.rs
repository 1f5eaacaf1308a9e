use criterion::{black_box, criterion_group, criterion_main, Criterion};
use forca_bench::{prime, rationals};
use forca_core::cech::CechCocycle;
use forca_core::charp::frobenius_member;
use forca_core::forcing::ForcingSystem;
use forca_core::gb::RingPresentation;
use forca_core::singular::classify_point;

fn groebner(c: &mut Criterion) {
    let r = rationals(&["x", "y", "z"], &[]);
    let gens: Vec<_> = ["x^5*y - z^7", "y^4 - x*z^3", "z^5 - x^2*y^3"].iter().map(|s| r.poly(s).unwrap()).collect();
    c.bench_function("gb/binomial-3var-QQ", |b| {
        b.iter(|| r.ideal(black_box(gens.clone())).unwrap().groebner().unwrap().len())
    });

    let r7 = prime(7, &["x", "y", "z", "w"], &[]);
    let gens: Vec<_> = ["x^2 + y*z + 3", "y^2 - x*w", "z^3 + x*y*w - 1", "w^2 + 2*x"].iter().map(|s| r7.poly(s).unwrap()).collect();
    c.bench_function("gb/dense-4var-F7", |b| {
        b.iter(|| r7.ideal(black_box(gens.clone())).unwrap().groebner().unwrap().len())
    });
}

fn torsor(c: &mut Criterion) {
    let r = rationals(&["x", "y", "u", "v", "z"], &["x*v + y*u + z^2 - z"]);
    let p = |s: &str| r.poly(s).unwrap();
    let class = CechCocycle::new(r.clone(), vec![p("x"), p("y"), p("z")], 1, vec![p("z - 1"), p("-u"), p("v")]).unwrap();
    c.bench_function("cech/check-and-force", |b| {
        b.iter(|| {
            assert!(class.check_cocycle().unwrap().holds());
            let fs = class.to_forcing().unwrap();
            let alg = fs.algebra();
            alg.ideal(vec![alg.poly("x").unwrap(), alg.poly("y").unwrap(), alg.poly("z").unwrap()]).unwrap().is_unit().unwrap()
        })
    });
    c.bench_function("cech/elimination", |b| {
        let fs = class.to_forcing().unwrap();
        let alg = fs.algebra();
        let ambient = RingPresentation::polynomial_ring(alg.ring().clone());
        let vars: Vec<usize> = ["z", "u", "v"].iter().map(|n| alg.ring().var_index(n).unwrap()).collect();
        b.iter(|| ambient.ideal(alg.relations().to_vec()).unwrap().eliminate(black_box(&vars)).unwrap().groebner().unwrap().len())
    });
}

fn positive_characteristic(c: &mut Criterion) {
    let r = prime(2, &["X", "Y", "Z"], &["X^2 + Y^3 + Z^5"]);
    let ideal = r.ideal(vec![r.poly("Y").unwrap(), r.poly("Z").unwrap()]).unwrap();
    let x = r.poly("X").unwrap();
    c.bench_function("charp/frobenius-e3", |b| b.iter(|| frobenius_member(black_box(&x), &ideal, 3).unwrap()));

    let r7 = prime(7, &["x", "y", "z"], &["x + x^2 + y^2 + z^2"]);
    let fs = ForcingSystem::ideal_case(r7.clone(), vec![r7.poly("x^2").unwrap(), r7.poly("y^2").unwrap()], r7.poly("x").unwrap())
        .unwrap();
    c.bench_function("singular/classify-49", |b| {
        b.iter(|| {
            (0..7u32)
                .flat_map(|u| (0..7u32).map(move |v| [0, 0, 0, u, v]))
                .filter(|q| classify_point(&fs, q, None, None).unwrap().verdict.as_str() == "singular")
                .count()
        })
    });
}

criterion_group!(benches, groebner, torsor, positive_characteristic);
criterion_main!(benches);
