//! Buchberger's algorithm with optional cofactor tracking.
//!
//! The engine works on [`Polynomial`] values whose monomials may carry a
//! free-module component, so the same code computes Gröbner bases of ideals
//! and of submodules of `R^m` (position-over-term order).
//!
//! With tracking enabled every basis element carries a representation
//! `g = sum_i rep[i] * input[i]` in terms of the first `rep.len()` inputs,
//! valid modulo a fixed ideal `J` whose reduced basis is supplied as the
//! modulus. The remaining inputs (the generators of `J` itself) carry no
//! representation.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::gb::EngineConfig;
use crate::monomial::Monomial;
use crate::poly::Polynomial;

pub(crate) type Rep<F> = Vec<Polynomial<F>>;

/// One input generator, with its representation when tracking.
pub(crate) struct Input<F: Field> {
    pub poly: Polynomial<F>,
    pub rep: Option<Rep<F>>,
}

pub(crate) struct Basis<F: Field> {
    pub polys: Vec<Polynomial<F>>,
    pub reps: Option<Vec<Rep<F>>>,
}

pub(crate) struct Engine<'a, F: Field> {
    pub config: &'a EngineConfig,
    /// Rank-one input: enables the coprime-leading-monomial criterion.
    pub ideal_case: bool,
    /// Reduced basis used to shrink representations.
    pub modulus: &'a [Polynomial<F>],
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
struct Pair {
    degree: u64,
    i: usize,
    j: usize,
}

impl<F: Field> Engine<'_, F> {
    pub fn groebner(&self, inputs: Vec<Input<F>>) -> Result<Basis<F>> {
        let tracking = inputs.iter().any(|g| g.rep.is_some());
        let rep_len = inputs.iter().find_map(|g| g.rep.as_ref().map(Vec::len)).unwrap_or(0);

        let mut polys: Vec<Polynomial<F>> = Vec::new();
        let mut reps: Vec<Rep<F>> = Vec::new();
        for g in inputs {
            if g.poly.is_zero() {
                continue;
            }
            let rep = match g.rep {
                Some(r) => r,
                None if tracking => zero_rep(&g.poly, rep_len),
                None => Vec::new(),
            };
            let (p, r) = self.normalize(g.poly, rep);
            if let Some(d) = p.total_degree() {
                if d > self.config.max_degree {
                    return Err(Error::Aborted(format!(
                        "input degree {d} exceeds the cap {}",
                        self.config.max_degree
                    )));
                }
            }
            polys.push(p);
            reps.push(r);
        }

        if let Some(k) = polys.iter().position(|p| self.is_unit(p)) {
            return Ok(self.unit_basis(polys.swap_remove(k), reps.swap_remove(k), tracking));
        }

        let mut pairs: BTreeSet<Pair> = BTreeSet::new();
        for j in 0..polys.len() {
            for i in 0..j {
                if let Some(p) = self.make_pair(&polys, i, j) {
                    pairs.insert(p);
                }
            }
        }

        let mut processed = 0usize;
        while let Some(pair) = pairs.pop_first() {
            processed += 1;
            if processed > self.config.max_pairs {
                return Err(Error::Aborted(format!(
                    "more than {} S-pairs",
                    self.config.max_pairs
                )));
            }
            if pair.degree > self.config.max_degree {
                return Err(Error::Aborted(format!(
                    "S-pair degree {} exceeds the cap {}",
                    pair.degree, self.config.max_degree
                )));
            }
            let (gi, gj) = (&polys[pair.i], &polys[pair.j]);
            let (mi, mj) = (gi.lead_monomial().unwrap(), gj.lead_monomial().unwrap());
            if self.ideal_case && mi.is_coprime(mj) {
                continue;
            }
            let lcm = mi.lcm(mj);
            if self.chain_criterion(&polys, &pairs, pair.i, pair.j, &lcm) {
                continue;
            }

            let (s, s_rep) = self.s_polynomial(&polys, &reps, pair.i, pair.j, &lcm, tracking);
            let (r, r_rep) = self.reduce(&s, s_rep, &polys, &reps, tracking);
            if r.is_zero() {
                continue;
            }
            let (r, r_rep) = self.normalize(r, r_rep);
            if self.is_unit(&r) {
                return Ok(self.unit_basis(r, r_rep, tracking));
            }
            polys.push(r);
            reps.push(r_rep);
            if polys.len() > self.config.max_basis {
                return Err(Error::Aborted(format!(
                    "basis exceeded {} elements",
                    self.config.max_basis
                )));
            }
            let j = polys.len() - 1;
            for i in 0..j {
                if let Some(p) = self.make_pair(&polys, i, j) {
                    pairs.insert(p);
                }
            }
        }

        Ok(self.reduce_basis(polys, reps, tracking))
    }

    fn is_unit(&self, p: &Polynomial<F>) -> bool {
        self.ideal_case && p.lead_monomial().is_some_and(Monomial::is_one)
    }

    fn unit_basis(&self, p: Polynomial<F>, rep: Rep<F>, tracking: bool) -> Basis<F> {
        Basis { polys: vec![p], reps: tracking.then(|| vec![rep]) }
    }

    fn make_pair(&self, polys: &[Polynomial<F>], i: usize, j: usize) -> Option<Pair> {
        let mi = polys[i].lead_monomial()?;
        let mj = polys[j].lead_monomial()?;
        (mi.component() == mj.component()).then(|| Pair { degree: mi.lcm(mj).degree(), i, j })
    }

    /// Buchberger's chain criterion: some other leading monomial divides
    /// the lcm and both of its pairs with `i` and `j` are already treated.
    fn chain_criterion(
        &self,
        polys: &[Polynomial<F>],
        pending: &BTreeSet<Pair>,
        i: usize,
        j: usize,
        lcm: &Monomial,
    ) -> bool {
        let is_pending = |a: usize, b: usize| {
            let (a, b) = if a < b { (a, b) } else { (b, a) };
            let degree = polys[a].lead_monomial().unwrap().lcm(polys[b].lead_monomial().unwrap()).degree();
            pending.contains(&Pair { degree, i: a, j: b })
        };
        polys.iter().enumerate().any(|(k, g)| {
            k != i
                && k != j
                && g.lead_monomial().unwrap().divides(lcm)
                && !is_pending(i, k)
                && !is_pending(j, k)
        })
    }

    fn s_polynomial(
        &self,
        polys: &[Polynomial<F>],
        reps: &[Rep<F>],
        i: usize,
        j: usize,
        lcm: &Monomial,
        tracking: bool,
    ) -> (Polynomial<F>, Rep<F>) {
        let field = polys[i].field();
        let one = field.one();
        let minus_one = field.neg(&one);
        let qi = lcm.div(polys[i].lead_monomial().unwrap()).unwrap();
        let qj = lcm.div(polys[j].lead_monomial().unwrap()).unwrap();
        let zero = Polynomial::zero(polys[i].ring());
        let s = zero.add_scaled(&one, &qi, &polys[i]).add_scaled(&minus_one, &qj, &polys[j]);
        let rep = if tracking {
            reps[i]
                .iter()
                .zip(&reps[j])
                .map(|(a, b)| zero.add_scaled(&one, &qi, a).add_scaled(&minus_one, &qj, b))
                .collect()
        } else {
            Vec::new()
        };
        (s, rep)
    }

    /// Full reduction of `f` by `polys`. The returned representation is
    /// `rep - sum(c * q * reps[k])` over all reduction steps `c*q*polys[k]`.
    pub fn reduce(
        &self,
        f: &Polynomial<F>,
        mut rep: Rep<F>,
        polys: &[Polynomial<F>],
        reps: &[Rep<F>],
        tracking: bool,
    ) -> (Polynomial<F>, Rep<F>) {
        let field = f.field().clone();
        let mut p = f.clone();
        let mut rest: Vec<(Monomial, F::Elem)> = Vec::new();
        while let Some((m, c)) = p.lead_term().cloned() {
            let divisor = polys
                .iter()
                .position(|g| g.lead_monomial().is_some_and(|lm| lm.divides(&m)));
            match divisor {
                Some(k) => {
                    let g = &polys[k];
                    let q = m.div(g.lead_monomial().unwrap()).unwrap();
                    let coeff = field.div(&c, g.lead_coeff().unwrap()).unwrap();
                    let neg = field.neg(&coeff);
                    p = p.add_scaled(&neg, &q, g);
                    if tracking {
                        for (a, b) in rep.iter_mut().zip(&reps[k]) {
                            *a = a.add_scaled(&neg, &q, b);
                        }
                    }
                }
                None => {
                    let mut terms = p.into_terms();
                    let lead = terms.remove(0);
                    rest.push(lead);
                    p = Polynomial::from_sorted_terms(f.ring(), terms);
                }
            }
        }
        if tracking {
            rep = self.shrink(rep);
        }
        (Polynomial::from_sorted_terms(f.ring(), rest), rep)
    }

    fn shrink(&self, rep: Rep<F>) -> Rep<F> {
        if self.modulus.is_empty() {
            return rep;
        }
        rep.into_iter().map(|a| normal_form(&a, self.modulus)).collect()
    }

    fn normalize(&self, p: Polynomial<F>, rep: Rep<F>) -> (Polynomial<F>, Rep<F>) {
        let field = p.field().clone();
        let lc = p.lead_coeff().expect("nonzero polynomial").clone();
        if field.is_one(&lc) {
            return (p, rep);
        }
        let inv = field.inv(&lc).unwrap();
        (p.scale(&inv), rep.iter().map(|a| a.scale(&inv)).collect())
    }

    /// Minimalizes, interreduces and sorts ascending by leading monomial.
    fn reduce_basis(&self, polys: Vec<Polynomial<F>>, reps: Vec<Rep<F>>, tracking: bool) -> Basis<F> {
        let mut keep: Vec<usize> = Vec::new();
        for (i, g) in polys.iter().enumerate() {
            let m = g.lead_monomial().unwrap();
            let redundant = polys.iter().enumerate().any(|(k, h)| {
                let hm = h.lead_monomial().unwrap();
                k != i && hm.divides(m) && (hm != m || k < i)
            });
            if !redundant {
                keep.push(i);
            }
        }
        let mut minimal: Vec<Polynomial<F>> = keep.iter().map(|&i| polys[i].clone()).collect();
        let mut min_reps: Vec<Rep<F>> =
            if tracking { keep.iter().map(|&i| reps[i].clone()).collect() } else { Vec::new() };

        for i in 0..minimal.len() {
            let g = minimal[i].clone();
            let others: Vec<Polynomial<F>> =
                minimal.iter().enumerate().filter(|&(k, _)| k != i).map(|(_, h)| h.clone()).collect();
            let other_reps: Vec<Rep<F>> = if tracking {
                min_reps.iter().enumerate().filter(|&(k, _)| k != i).map(|(_, r)| r.clone()).collect()
            } else {
                Vec::new()
            };
            let rep = if tracking { min_reps[i].clone() } else { Vec::new() };
            let (r, r_rep) = self.reduce(&g, rep, &others, &other_reps, tracking);
            let (r, r_rep) = self.normalize(r, r_rep);
            minimal[i] = r;
            if tracking {
                min_reps[i] = r_rep;
            }
        }

        let order = minimal.first().map(|g| g.ring().order());
        let mut idx: Vec<usize> = (0..minimal.len()).collect();
        if let Some(order) = order {
            idx.sort_by(|&a, &b| {
                order.cmp(minimal[a].lead_monomial().unwrap(), minimal[b].lead_monomial().unwrap())
            });
        }
        Basis {
            polys: idx.iter().map(|&i| minimal[i].clone()).collect(),
            reps: tracking.then(|| idx.iter().map(|&i| min_reps[i].clone()).collect()),
        }
    }
}

fn zero_rep<F: Field>(like: &Polynomial<F>, len: usize) -> Rep<F> {
    vec![Polynomial::zero(like.ring()); len]
}

/// Remainder of `f` on division by `basis` (full reduction, no tracking).
pub fn normal_form<F: Field>(f: &Polynomial<F>, basis: &[Polynomial<F>]) -> Polynomial<F> {
    let config = EngineConfig::default();
    let engine = Engine { config: &config, ideal_case: true, modulus: &[] };
    engine.reduce(f, Vec::new(), basis, &[], false).0
}

/// The S-polynomial of two basis elements with matching components.
pub fn s_polynomial<F: Field>(f: &Polynomial<F>, g: &Polynomial<F>) -> Option<Polynomial<F>> {
    let (mf, cf) = f.lead_term()?;
    let (mg, cg) = g.lead_term()?;
    if mf.component() != mg.component() {
        return None;
    }
    let field = f.field();
    let lcm = mf.lcm(mg);
    let zero = Polynomial::zero(f.ring());
    let a = field.inv(cf).unwrap();
    let b = field.neg(&field.inv(cg).unwrap());
    Some(
        zero.add_scaled(&a, &lcm.div(mf).unwrap(), f)
            .add_scaled(&b, &lcm.div(mg).unwrap(), g),
    )
}

/// True when every S-polynomial of `basis` reduces to zero.
pub fn is_groebner_basis<F: Field>(basis: &[Polynomial<F>]) -> bool {
    for j in 0..basis.len() {
        for i in 0..j {
            if let Some(s) = s_polynomial(&basis[i], &basis[j]) {
                if !normal_form(&s, basis).is_zero() {
                    return false;
                }
            }
        }
    }
    true
}
