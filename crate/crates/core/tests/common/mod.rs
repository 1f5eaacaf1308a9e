//! Oracles shared by the integration tests. None of them call the
//! Gröbner engine; they only use polynomial arithmetic.
#![allow(dead_code)]

use forca_core::field::Field;
use forca_core::{Monomial, PolyRing, Polynomial, PrimeField, RingRef};
use rand::Rng;

pub fn f7() -> PrimeField {
    PrimeField::new(7).unwrap()
}

pub fn ring_fp(p: u64, names: &[&str]) -> RingRef<PrimeField> {
    PolyRing::new(PrimeField::new(p).unwrap(), names, forca_core::MonomialOrder::DegRevLex).unwrap()
}

pub fn random_monomial<R: Rng>(rng: &mut R, nvars: usize, max_deg: u32) -> Monomial {
    let deg = rng.gen_range(0..=max_deg);
    let mut exps = vec![0u32; nvars];
    for _ in 0..deg {
        exps[rng.gen_range(0..nvars)] += 1;
    }
    Monomial::from_exponents(&exps)
}

/// Random polynomial over `F_p` with at most `max_terms` terms.
pub fn random_poly<R: Rng>(
    rng: &mut R,
    ring: &RingRef<PrimeField>,
    max_deg: u32,
    max_terms: usize,
) -> Polynomial<PrimeField> {
    let p = ring.field().modulus();
    let n = rng.gen_range(1..=max_terms);
    let terms = (0..n)
        .map(|_| (random_monomial(rng, ring.nvars(), max_deg), rng.gen_range(1..p)))
        .collect();
    Polynomial::from_terms(ring, terms)
}

pub fn random_nonzero_poly<R: Rng>(
    rng: &mut R,
    ring: &RingRef<PrimeField>,
    max_deg: u32,
    max_terms: usize,
) -> Polynomial<PrimeField> {
    loop {
        let f = random_poly(rng, ring, max_deg, max_terms);
        if !f.is_zero() {
            return f;
        }
    }
}

/// Full reduction of `f` by `g` (remainder only), term by term.
pub fn oracle_reduce<F: Field>(f: &Polynomial<F>, g: &[Polynomial<F>]) -> Polynomial<F> {
    let field = f.field().clone();
    let mut p = f.clone();
    let mut rem = Polynomial::zero(f.ring());
    while let Some((m, c)) = p.lead_term().cloned() {
        let divisor = g.iter().filter(|h| !h.is_zero()).find(|h| h.lead_monomial().unwrap().divides(&m));
        match divisor {
            Some(h) => {
                let (hm, hc) = h.lead_term().unwrap();
                let q = field.div(&c, hc).unwrap();
                let shift = m.div(hm).unwrap();
                p = &p - &h.mul_term(&q, &shift);
            }
            None => {
                let lt = Polynomial::monomial(f.ring(), m, c);
                rem = &rem + &lt;
                p = &p - &lt;
            }
        }
    }
    rem
}

pub fn oracle_spoly<F: Field>(f: &Polynomial<F>, g: &Polynomial<F>) -> Polynomial<F> {
    let field = f.field().clone();
    let (fm, fc) = f.lead_term().unwrap();
    let (gm, gc) = g.lead_term().unwrap();
    let l = fm.lcm(gm);
    let a = f.mul_term(&field.inv(fc).unwrap(), &l.div(fm).unwrap());
    let b = g.mul_term(&field.inv(gc).unwrap(), &l.div(gm).unwrap());
    &a - &b
}

/// Buchberger without any criterion, followed by reduction to the unique
/// reduced basis, sorted by ascending leading monomial.
pub fn naive_reduced_groebner<F: Field>(gens: &[Polynomial<F>]) -> Vec<Polynomial<F>> {
    let mut g: Vec<Polynomial<F>> = gens.iter().filter(|p| !p.is_zero()).cloned().collect();
    let mut i = 0;
    while i < g.len() {
        for j in 0..i {
            let r = oracle_reduce(&oracle_spoly(&g[j], &g[i]), &g);
            if !r.is_zero() {
                g.push(r);
            }
        }
        i += 1;
    }
    // minimal basis
    let mut minimal: Vec<Polynomial<F>> = Vec::new();
    for (k, p) in g.iter().enumerate() {
        let lm = p.lead_monomial().unwrap();
        let redundant = g.iter().enumerate().any(|(l, q)| {
            let qm = q.lead_monomial().unwrap();
            l != k && qm.divides(lm) && (qm != lm || l < k)
        });
        if !redundant {
            minimal.push(p.monic());
        }
    }
    let mut reduced: Vec<Polynomial<F>> = (0..minimal.len())
        .map(|k| {
            let others: Vec<_> = minimal.iter().enumerate().filter(|&(l, _)| l != k).map(|(_, q)| q.clone()).collect();
            oracle_reduce(&minimal[k], &others).monic()
        })
        .collect();
    reduced.sort_by(|a, b| {
        let order = a.ring().order();
        order.cmp(a.lead_monomial().unwrap(), b.lead_monomial().unwrap())
    });
    reduced
}

/// Largest set of variables containing the support of no leading monomial,
/// by enumerating all subsets.
pub fn brute_force_dimension<F: Field>(basis: &[Polynomial<F>], nvars: usize) -> usize {
    let supports: Vec<Vec<usize>> = basis
        .iter()
        .map(|g| {
            let m = g.lead_monomial().unwrap();
            (0..nvars).filter(|&v| m.exponent(v) > 0).collect()
        })
        .collect();
    (0u32..(1 << nvars))
        .filter(|&set| supports.iter().all(|s| s.iter().any(|&v| set & (1 << v) == 0)))
        .map(|set| set.count_ones() as usize)
        .max()
        .unwrap()
}

/// Rank of a matrix over a field as the largest size of a nonzero minor,
/// minors evaluated by the Leibniz formula.
pub fn rank_by_minors<F: Field>(field: &F, m: &[Vec<F::Elem>]) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    for k in (1..=rows.min(cols)).rev() {
        for rs in subsets(rows, k) {
            for cs in subsets(cols, k) {
                if !field.is_zero(&leibniz_det(field, m, &rs, &cs)) {
                    return k;
                }
            }
        }
    }
    0
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..(1 << n))
        .filter(|s| s.count_ones() as usize == k)
        .map(|s| (0..n).filter(|&i| s & (1 << i) != 0).collect())
        .collect()
}

fn leibniz_det<F: Field>(field: &F, m: &[Vec<F::Elem>], rs: &[usize], cs: &[usize]) -> F::Elem {
    let k = rs.len();
    let mut total = field.zero();
    let mut perm: Vec<usize> = (0..k).collect();
    loop {
        let inversions = (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).filter(|&(i, j)| perm[i] > perm[j]).count();
        let mut term = field.one();
        for i in 0..k {
            term = field.mul(&term, &m[rs[i]][cs[perm[i]]]);
        }
        total = if inversions % 2 == 0 { field.add(&total, &term) } else { field.sub(&total, &term) };
        if !next_permutation(&mut perm) {
            return total;
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// All points of `F_p^n`.
pub fn all_points(p: u32, n: usize) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out.into_iter().flat_map(|v| (0..p).map(move |a| [v.clone(), vec![a]].concat())).collect();
    }
    out
}
