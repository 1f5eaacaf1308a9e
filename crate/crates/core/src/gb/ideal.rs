use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::gb::engine::{Engine, Input, Rep};
use crate::gb::ring::unit_rep;
use crate::gb::{normal_form, PresentationRef, RingPresentation};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{same_ring, PolyRing, Polynomial};

/// An ideal of `R`, given by generators.
///
/// Bases are computed over the ambient polynomial ring with the defining
/// relations of `R` adjoined, and cached.
pub struct IdealHandle<F: Field> {
    pres: PresentationRef<F>,
    gens: Vec<Polynomial<F>>,
    basis: OnceLock<Result<Vec<Polynomial<F>>>>,
    tracked: OnceLock<Result<(Vec<Polynomial<F>>, Vec<Rep<F>>)>>,
}

impl<F: Field> Clone for IdealHandle<F> {
    fn clone(&self) -> Self {
        IdealHandle {
            pres: self.pres.clone(),
            gens: self.gens.clone(),
            basis: self.basis.clone(),
            tracked: self.tracked.clone(),
        }
    }
}

impl<F: Field> std::fmt::Debug for IdealHandle<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let gens: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        write!(f, "({}) in {:?}", gens.join(", "), self.pres)
    }
}

/// Result of an ideal-membership query.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Membership<F: Field> {
    pub is_member: bool,
    pub witness: Option<MemberWitness<F>>,
}

/// `f = sum coefficients[i] * gens[i] + sum relation_coefficients[k] * relations[k]`
/// holds exactly in the ambient polynomial ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MemberWitness<F: Field> {
    pub coefficients: Vec<Polynomial<F>>,
    pub relation_coefficients: Vec<Polynomial<F>>,
}

impl<F: Field> MemberWitness<F> {
    pub fn verify(&self, f: &Polynomial<F>, ideal: &IdealHandle<F>) -> bool {
        let mut acc = Polynomial::zero(f.ring());
        for (a, g) in self.coefficients.iter().zip(ideal.gens()) {
            acc = &acc + &(a * g);
        }
        for (c, g) in self.relation_coefficients.iter().zip(ideal.presentation().relations()) {
            acc = &acc + &(c * g);
        }
        self.coefficients.len() == ideal.gens().len() && acc == *f
    }
}

impl<F: Field> IdealHandle<F> {
    pub fn new(pres: PresentationRef<F>, gens: Vec<Polynomial<F>>) -> Result<Self> {
        for g in &gens {
            pres.check(g)?;
        }
        Ok(IdealHandle { pres, gens, basis: OnceLock::new(), tracked: OnceLock::new() })
    }

    pub fn presentation(&self) -> &PresentationRef<F> {
        &self.pres
    }

    pub fn gens(&self) -> &[Polynomial<F>] {
        &self.gens
    }

    fn engine<'a>(&'a self, modulus: &'a [Polynomial<F>]) -> Engine<'a, F> {
        Engine { config: self.pres.config(), ideal_case: true, modulus }
    }

    /// Reduced Gröbner basis of `I + J` in the ambient ring.
    pub fn groebner(&self) -> Result<&[Polynomial<F>]> {
        self.basis
            .get_or_init(|| {
                let mut inputs: Vec<Input<F>> =
                    self.gens.iter().map(|g| Input { poly: g.clone(), rep: None }).collect();
                inputs.extend(self.pres.basis()?.iter().map(|g| Input { poly: g.clone(), rep: None }));
                self.engine(&[]).groebner(inputs).map(|b| b.polys)
            })
            .as_ref()
            .map(Vec::as_slice)
            .map_err(Clone::clone)
    }

    pub fn normal_form(&self, f: &Polynomial<F>) -> Result<Polynomial<F>> {
        self.pres.check(f)?;
        Ok(normal_form(f, self.groebner()?))
    }

    pub fn contains(&self, f: &Polynomial<F>) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Membership with a division record when `f` is a member.
    pub fn member(&self, f: &Polynomial<F>) -> Result<Membership<F>> {
        if !self.contains(f)? {
            return Ok(Membership { is_member: false, witness: None });
        }
        let (polys, reps) = self
            .tracked
            .get_or_init(|| {
                let n = self.gens.len();
                let ring = self.pres.ring();
                let modulus = self.pres.basis()?;
                let mut inputs: Vec<Input<F>> = self
                    .gens
                    .iter()
                    .enumerate()
                    .map(|(i, g)| Input { poly: g.clone(), rep: Some(unit_rep(ring, n, i)) })
                    .collect();
                inputs.extend(modulus.iter().map(|g| Input { poly: g.clone(), rep: None }));
                let b = self.engine(modulus).groebner(inputs)?;
                Ok((b.polys, b.reps.unwrap_or_default()))
            })
            .as_ref()
            .map_err(Clone::clone)?;
        let modulus = self.pres.basis()?;
        let zero = vec![Polynomial::zero(self.pres.ring()); self.gens.len()];
        let (rem, rep) = self.engine(modulus).reduce(f, zero, polys, reps, true);
        debug_assert!(rem.is_zero());
        let coefficients: Vec<Polynomial<F>> =
            rep.iter().map(|a| normal_form(&a.neg(), modulus)).collect();
        let mut residual = f.clone();
        for (a, g) in coefficients.iter().zip(&self.gens) {
            residual = &residual - &(a * g);
        }
        let relation_coefficients = self.pres.relation_cofactors(&residual)?.ok_or_else(|| {
            Error::Aborted("division record does not close modulo the relations".into())
        })?;
        Ok(Membership {
            is_member: true,
            witness: Some(MemberWitness { coefficients, relation_coefficients }),
        })
    }

    pub fn is_unit(&self) -> Result<bool> {
        let b = self.groebner()?;
        Ok(b.len() == 1 && b[0].lead_monomial().is_some_and(Monomial::is_one))
    }

    /// Rabinowitsch test: `f` is in the radical iff `1 in I + (1 - y f)`.
    pub fn radical_member(&self, f: &Polynomial<F>) -> Result<bool> {
        self.pres.check(f)?;
        let y = self.pres.ring().fresh_name("y");
        let ext = self.pres.extend(&[y], MonomialOrder::DegRevLex)?;
        let ring = ext.ring();
        let yv = ext.var(ring.nvars() - 1);
        let mut gens: Vec<Polynomial<F>> = self.gens.iter().map(|g| g.embed(ring)).collect();
        gens.push(&Polynomial::one(ring) - &(&yv * &f.embed(ring)));
        ext.ideal(gens)?.is_unit()
    }

    /// `(I : f) = { g : g f in I }`, via `I ∩ (f)` computed by elimination.
    pub fn quotient(&self, f: &Polynomial<F>) -> Result<IdealHandle<F>> {
        self.pres.check(f)?;
        if self.pres.is_zero(f)? {
            return Err(Error::Precondition("ideal quotient by zero".into()));
        }
        let base = self.pres.ring();
        let t = base.fresh_name("t");
        let mut names = vec![t];
        names.extend(base.names().iter().cloned());
        let ring = PolyRing::new(base.field().clone(), &names, MonomialOrder::Block(1))?;
        let shift: Vec<usize> = (1..=base.nvars()).collect();
        let tv = Polynomial::var(&ring, 0);
        let one_minus_t = &Polynomial::one(&ring) - &tv;
        let mut inputs: Vec<Input<F>> = self
            .gens
            .iter()
            .chain(self.pres.basis()?)
            .map(|g| Input { poly: &tv * &g.map_vars(&ring, &shift), rep: None })
            .collect();
        inputs.push(Input { poly: &one_minus_t * &f.map_vars(&ring, &shift), rep: None });
        let basis = self.engine(&[]).groebner(inputs)?.polys;

        let back: Vec<usize> = std::iter::once(0).chain(0..base.nvars()).collect();
        let mut gens = Vec::new();
        for h in basis.iter().filter(|h| !h.uses_var(0)) {
            let h = h.map_vars(base, &back);
            let g = h.exact_div(f).ok_or_else(|| {
                Error::Aborted("intersection element not divisible by the quotient element".into())
            })?;
            gens.push(g);
        }
        IdealHandle::new(self.pres.clone(), gens)
    }

    /// Whether every generator of `other` lies in this ideal.
    pub fn contains_ideal(&self, other: &IdealHandle<F>) -> Result<bool> {
        for g in other.gens.iter().chain(other.pres.relations()) {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn same_ideal(&self, other: &IdealHandle<F>) -> Result<bool> {
        Ok(self.contains_ideal(other)? && other.contains_ideal(self)?)
    }

    /// Krull dimension of `R / I`: the size of a largest set of variables
    /// containing the support of no leading monomial.
    pub fn krull_dim(&self) -> Result<usize> {
        if self.is_unit()? {
            return Err(Error::UnitIdeal);
        }
        let supports: Vec<u64> = self
            .groebner()?
            .iter()
            .map(|g| support_mask(g.lead_monomial().unwrap()))
            .collect();
        let n = self.pres.nvars();
        let mut best = 0;
        extend_independent(&supports, n, 0, 0, 0, &mut best);
        Ok(best)
    }

    /// `I ∩ K[remaining variables]`, as an ideal of the polynomial ring in
    /// the variables not listed in `vars` (kept in their original order).
    pub fn eliminate(&self, vars: &[usize]) -> Result<IdealHandle<F>> {
        let base = self.pres.ring();
        let n = base.nvars();
        if let Some(&v) = vars.iter().find(|&&v| v >= n) {
            return Err(Error::DimensionMismatch(format!("variable index {v} out of range")));
        }
        let keep: Vec<usize> = (0..n).filter(|v| !vars.contains(v)).collect();
        let elim: Vec<usize> = (0..n).filter(|v| vars.contains(v)).collect();
        let k = elim.len();

        let order: Vec<usize> = elim.iter().chain(&keep).copied().collect();
        let names: Vec<&String> = order.iter().map(|&v| &base.names()[v]).collect();
        let ring = PolyRing::new(base.field().clone(), &names, MonomialOrder::Block(k))?;
        let mut to_elim = vec![0; n];
        for (pos, &v) in order.iter().enumerate() {
            to_elim[v] = pos;
        }
        let inputs: Vec<Input<F>> = self
            .gens
            .iter()
            .chain(self.pres.basis()?)
            .map(|g| Input { poly: g.map_vars(&ring, &to_elim), rep: None })
            .collect();
        let basis = self.engine(&[]).groebner(inputs)?.polys;

        let target_order = match base.order() {
            MonomialOrder::Block(_) => MonomialOrder::DegRevLex,
            o => o,
        };
        let keep_names: Vec<&String> = keep.iter().map(|&v| &base.names()[v]).collect();
        let target = PolyRing::new(base.field().clone(), &keep_names, target_order)?;
        let mut back = vec![0; n];
        for (j, _) in keep.iter().enumerate() {
            back[k + j] = j;
        }
        let gens: Vec<Polynomial<F>> = basis
            .iter()
            .filter(|g| (0..k).all(|v| !g.uses_var(v)))
            .map(|g| g.map_vars(&target, &back))
            .collect();
        let pres = RingPresentation::new(target, Vec::new(), *self.pres.config())?;
        IdealHandle::new(pres, gens)
    }
}

fn support_mask(m: &Monomial) -> u64 {
    m.exponents()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .fold(0u64, |acc, (v, _)| acc | (1 << v))
}

fn extend_independent(supports: &[u64], n: usize, next: usize, set: u64, size: usize, best: &mut usize) {
    *best = (*best).max(size);
    if size + (n - next) <= *best {
        return;
    }
    for v in next..n {
        let candidate = set | (1 << v);
        if supports.iter().all(|&s| s & !candidate != 0) {
            extend_independent(supports, n, v + 1, candidate, size + 1, best);
        }
    }
}

/// `f1, f2` is a regular pair in the domain `R`: `f1 != 0` and
/// `((f1) : f2) = (f1)`, both inclusions checked by membership.
pub fn is_regular_pair<F: Field>(
    f1: &Polynomial<F>,
    f2: &Polynomial<F>,
    pres: &PresentationRef<F>,
) -> Result<bool> {
    if !same_ring(f1.ring(), pres.ring()) || !same_ring(f2.ring(), pres.ring()) {
        return Err(Error::RingMismatch);
    }
    if pres.is_zero(f1)? || pres.is_zero(f2)? {
        return Ok(false);
    }
    let principal = pres.ideal(vec![f1.clone()])?;
    let quotient = principal.quotient(f2)?;
    Ok(principal.contains_ideal(&quotient)? && quotient.contains_ideal(&principal)?)
}
