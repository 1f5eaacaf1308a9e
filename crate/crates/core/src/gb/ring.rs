use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::gb::engine::{Engine, Input, Rep};
use crate::gb::{EngineConfig, IdealHandle};
use crate::monomial::MonomialOrder;
use crate::parse::parse_polynomial;
use crate::poly::{same_ring, PolyRing, Polynomial, RingRef};

/// `R = K[x_1, ..., x_m] / (g_1, ..., g_k)`.
///
/// The reduced Gröbner basis of the defining ideal is computed on first use
/// and cached.
pub struct RingPresentation<F: Field> {
    ring: RingRef<F>,
    relations: Vec<Polynomial<F>>,
    config: EngineConfig,
    basis: OnceLock<Result<Vec<Polynomial<F>>>>,
    tracked: OnceLock<Result<(Vec<Polynomial<F>>, Vec<Rep<F>>)>>,
}

pub type PresentationRef<F> = Arc<RingPresentation<F>>;

impl<F: Field> std::fmt::Debug for RingPresentation<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}[{}]", self.ring.field().name(), self.ring.names().join(","))?;
        if !self.relations.is_empty() {
            let rels: Vec<String> = self.relations.iter().map(|g| g.to_string()).collect();
            write!(f, "/({})", rels.join(", "))?;
        }
        Ok(())
    }
}

impl<F: Field> RingPresentation<F> {
    pub fn new(
        ring: RingRef<F>,
        relations: Vec<Polynomial<F>>,
        config: EngineConfig,
    ) -> Result<PresentationRef<F>> {
        if relations.iter().any(|g| !same_ring(g.ring(), &ring)) {
            return Err(Error::RingMismatch);
        }
        let relations = relations.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(Arc::new(RingPresentation {
            ring,
            relations,
            config,
            basis: OnceLock::new(),
            tracked: OnceLock::new(),
        }))
    }

    pub fn polynomial_ring(ring: RingRef<F>) -> PresentationRef<F> {
        Self::new(ring, Vec::new(), EngineConfig::default()).expect("no relations")
    }

    /// Builds the ring from variable names and relation strings.
    pub fn parse<S: AsRef<str>>(
        field: F,
        names: &[S],
        relations: &[S],
        order: MonomialOrder,
        config: EngineConfig,
    ) -> Result<PresentationRef<F>> {
        let ring = PolyRing::new(field, names, order)?;
        let rels = relations
            .iter()
            .map(|r| parse_polynomial(r.as_ref(), &ring))
            .collect::<Result<Vec<_>>>()?;
        Self::new(ring, rels, config)
    }

    pub fn ring(&self) -> &RingRef<F> {
        &self.ring
    }

    pub fn field(&self) -> &F {
        self.ring.field()
    }

    pub fn characteristic(&self) -> u64 {
        self.ring.field().characteristic()
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    pub fn relations(&self) -> &[Polynomial<F>] {
        &self.relations
    }

    pub fn config(&self) -> &EngineConfig {
        &self.config
    }

    pub fn is_polynomial_ring(&self) -> bool {
        self.relations.is_empty()
    }

    pub fn poly(&self, text: &str) -> Result<Polynomial<F>> {
        parse_polynomial(text, &self.ring)
    }

    pub fn var(&self, index: usize) -> Polynomial<F> {
        Polynomial::var(&self.ring, index)
    }

    pub fn var_by_name(&self, name: &str) -> Result<Polynomial<F>> {
        self.ring
            .var_index(name)
            .map(|i| self.var(i))
            .ok_or_else(|| Error::UnknownVariable { name: name.to_string(), pos: 0 })
    }

    pub fn ideal(self: &Arc<Self>, gens: Vec<Polynomial<F>>) -> Result<IdealHandle<F>> {
        IdealHandle::new(self.clone(), gens)
    }

    /// Reduced Gröbner basis of the defining ideal.
    pub fn basis(&self) -> Result<&[Polynomial<F>]> {
        self.basis
            .get_or_init(|| {
                let engine = Engine { config: &self.config, ideal_case: true, modulus: &[] };
                let inputs =
                    self.relations.iter().map(|g| Input { poly: g.clone(), rep: None }).collect();
                engine.groebner(inputs).map(|b| b.polys)
            })
            .as_ref()
            .map(Vec::as_slice)
            .map_err(Clone::clone)
    }

    /// Normal form modulo the defining ideal.
    pub fn reduce(&self, f: &Polynomial<F>) -> Result<Polynomial<F>> {
        self.check(f)?;
        Ok(crate::gb::normal_form(f, self.basis()?))
    }

    /// Whether `f` is zero in `R`.
    pub fn is_zero(&self, f: &Polynomial<F>) -> Result<bool> {
        Ok(self.reduce(f)?.is_zero())
    }

    pub fn check(&self, f: &Polynomial<F>) -> Result<()> {
        if same_ring(f.ring(), &self.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    /// Coefficients `c` with `r = sum c_k * relations[k]` exactly in the
    /// ambient ring, or `None` when `r` is not in the defining ideal.
    pub fn relation_cofactors(&self, r: &Polynomial<F>) -> Result<Option<Vec<Polynomial<F>>>> {
        self.check(r)?;
        let n = self.relations.len();
        if r.is_zero() {
            return Ok(Some(vec![Polynomial::zero(&self.ring); n]));
        }
        let (polys, reps) = self
            .tracked
            .get_or_init(|| {
                let engine = Engine { config: &self.config, ideal_case: true, modulus: &[] };
                let inputs = self
                    .relations
                    .iter()
                    .enumerate()
                    .map(|(i, g)| Input { poly: g.clone(), rep: Some(unit_rep(&self.ring, n, i)) })
                    .collect();
                engine.groebner(inputs).map(|b| (b.polys, b.reps.unwrap_or_default()))
            })
            .as_ref()
            .map_err(Clone::clone)?;
        let engine = Engine { config: &self.config, ideal_case: true, modulus: &[] };
        let zero = vec![Polynomial::zero(&self.ring); n];
        let (rem, rep) = engine.reduce(r, zero, polys, reps, true);
        Ok(rem.is_zero().then(|| rep.iter().map(Polynomial::neg).collect()))
    }

    /// Whether a rational point lies on `Spec R`.
    pub fn contains_point(&self, point: &[F::Elem]) -> Result<bool> {
        for g in &self.relations {
            if !self.field().is_zero(&g.evaluate(point)?) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `R / (extra)` over the same variables.
    pub fn with_relations(&self, extra: Vec<Polynomial<F>>) -> Result<PresentationRef<F>> {
        let mut rels = self.relations.clone();
        rels.extend(extra);
        Self::new(self.ring.clone(), rels, self.config)
    }

    /// `R[new variables]`, with the relations carried over.
    pub fn extend<S: AsRef<str>>(&self, names: &[S], order: MonomialOrder) -> Result<PresentationRef<F>> {
        let ring = self.ring.extend(names, order)?;
        let rels = self.relations.iter().map(|g| g.embed(&ring)).collect();
        Self::new(ring, rels, self.config)
    }

    pub fn with_config(&self, config: EngineConfig) -> PresentationRef<F> {
        Self::new(self.ring.clone(), self.relations.clone(), config).expect("same ring")
    }
}

pub(crate) fn unit_rep<F: Field>(ring: &RingRef<F>, len: usize, i: usize) -> Rep<F> {
    (0..len)
        .map(|k| if k == i { Polynomial::one(ring) } else { Polynomial::zero(ring) })
        .collect()
}
