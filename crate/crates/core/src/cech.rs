//! Čech 1-cocycles on `U = D(f_1, ..., f_n)` with a common exponent `m`.
//!
//! A cocycle is stored through its numerators `b_ij`, `i < j`, representing
//! `b_ij / (f_i^m f_j^m)`. Pairs are kept in lexicographic order, and the
//! forcing row for `(i, j)` is `f_j^m T_i - f_i^m T_j = b_ij`.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::forcing::ForcingSystem;
use crate::gb::{solve_linear_over_ring, LinearSolution, PresentationRef, RingPresentation};
use crate::monomial::MonomialOrder;
use crate::poly::Polynomial;

/// `(i, j)` with `i < j`, 0-based, in lexicographic order.
pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

#[derive(Clone, Debug)]
pub struct CechCocycle<F: Field> {
    base: PresentationRef<F>,
    gens: Vec<Polynomial<F>>,
    m: u32,
    numerators: Vec<Polynomial<F>>,
}

/// Result of the cocycle test. Triples are 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CocycleCheck<F: Field> {
    Holds,
    Fails { triple: (usize, usize, usize), residue: Polynomial<F> },
}

impl<F: Field> CocycleCheck<F> {
    pub fn holds(&self) -> bool {
        matches!(self, CocycleCheck::Holds)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Coboundary<F: Field> {
    /// `t` with `f_j^m t_i - f_i^m t_j = b_ij` in `R` for all `i < j`.
    Witness(Vec<Polynomial<F>>),
    NotCoboundary,
}

impl<F: Field> Coboundary<F> {
    pub fn witness(&self) -> Option<&[Polynomial<F>]> {
        match self {
            Coboundary::Witness(t) => Some(t),
            Coboundary::NotCoboundary => None,
        }
    }
}

impl<F: Field> CechCocycle<F> {
    /// `numerators` lists `b_ij` in the order of [`pairs`].
    pub fn new(
        base: PresentationRef<F>,
        gens: Vec<Polynomial<F>>,
        m: u32,
        numerators: Vec<Polynomial<F>>,
    ) -> Result<Self> {
        let n = gens.len();
        if n < 2 {
            return Err(Error::DimensionMismatch("a cocycle needs at least two generators".into()));
        }
        if m == 0 {
            return Err(Error::Precondition("exponent m must be at least 1".into()));
        }
        if numerators.len() != n * (n - 1) / 2 {
            return Err(Error::DimensionMismatch(format!(
                "{n} generators need {} numerators, got {}",
                n * (n - 1) / 2,
                numerators.len()
            )));
        }
        for p in gens.iter().chain(&numerators) {
            base.check(p)?;
        }
        Ok(CechCocycle { base, gens, m, numerators })
    }

    /// The coboundary of `t`: `b_ij = f_j^m t_i - f_i^m t_j`.
    pub fn coboundary(
        base: PresentationRef<F>,
        gens: Vec<Polynomial<F>>,
        m: u32,
        t: &[Polynomial<F>],
    ) -> Result<Self> {
        if t.len() != gens.len() {
            return Err(Error::DimensionMismatch("one entry of t per generator".into()));
        }
        let powers: Vec<_> = gens.iter().map(|f| f.pow(m)).collect();
        let nums = pairs(gens.len())
            .into_iter()
            .map(|(i, j)| &(&powers[j] * &t[i]) - &(&powers[i] * &t[j]))
            .collect();
        Self::new(base, gens, m, nums)
    }

    pub fn base(&self) -> &PresentationRef<F> {
        &self.base
    }

    pub fn generators(&self) -> &[Polynomial<F>] {
        &self.gens
    }

    pub fn exponent(&self) -> u32 {
        self.m
    }

    pub fn numerators(&self) -> &[Polynomial<F>] {
        &self.numerators
    }

    /// `b_ij`, with `b_ji = -b_ij` and `b_ii = 0`.
    pub fn numerator(&self, i: usize, j: usize) -> Polynomial<F> {
        let n = self.gens.len();
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self.numerators[pair_index(n, i, j)].clone(),
            std::cmp::Ordering::Greater => self.numerators[pair_index(n, j, i)].neg(),
            std::cmp::Ordering::Equal => Polynomial::zero(self.base.ring()),
        }
    }

    fn powers(&self) -> Vec<Polynomial<F>> {
        self.gens.iter().map(|f| f.pow(self.m)).collect()
    }

    /// `b_ij f_k^m - b_ik f_j^m + b_jk f_i^m = 0` in `R` for all `i < j < k`.
    pub fn check_cocycle(&self) -> Result<CocycleCheck<F>> {
        let n = self.gens.len();
        let p = self.powers();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let sum = &(&(&self.numerator(i, j) * &p[k]) - &(&self.numerator(i, k) * &p[j]))
                        + &(&self.numerator(j, k) * &p[i]);
                    let residue = self.base.reduce(&sum)?;
                    if !residue.is_zero() {
                        return Ok(CocycleCheck::Fails { triple: (i + 1, j + 1, k + 1), residue });
                    }
                }
            }
        }
        Ok(CocycleCheck::Holds)
    }

    fn require_cocycle(&self) -> Result<()> {
        match self.check_cocycle()? {
            CocycleCheck::Holds => Ok(()),
            CocycleCheck::Fails { triple: (i, j, k), .. } => Err(Error::CocycleFails(i, j, k)),
        }
    }

    fn system(&self) -> (Vec<Vec<Polynomial<F>>>, Vec<Polynomial<F>>) {
        let n = self.gens.len();
        let p = self.powers();
        let zero = Polynomial::zero(self.base.ring());
        let rows = pairs(n)
            .into_iter()
            .map(|(i, j)| {
                let mut row = vec![zero.clone(); n];
                row[i] = p[j].clone();
                row[j] = p[i].neg();
                row
            })
            .collect();
        (rows, self.numerators.clone())
    }

    /// The forcing system whose spectrum is the torsor of the class.
    pub fn to_forcing(&self) -> Result<ForcingSystem<F>> {
        self.require_cocycle()?;
        let (a, s) = self.system();
        ForcingSystem::new(self.base.clone(), a, s)
    }

    pub fn is_coboundary(&self) -> Result<Coboundary<F>> {
        self.require_cocycle()?;
        let (a, s) = self.system();
        Ok(match solve_linear_over_ring(&a, &s, &self.base)? {
            LinearSolution::Solution(t) => Coboundary::Witness(t),
            LinearSolution::NoSolution => Coboundary::NotCoboundary,
        })
    }

    /// The class on `R / (extra)`: generators and numerators reduced modulo
    /// the enlarged ideal.
    pub fn restrict(&self, extra: Vec<Polynomial<F>>) -> Result<Self> {
        let base = self.base.with_relations(extra)?;
        let gens = self.gens.iter().map(|f| base.reduce(f)).collect::<Result<_>>()?;
        let nums = self.numerators.iter().map(|b| base.reduce(b)).collect::<Result<_>>()?;
        let c = Self::new(base, gens, self.m, nums)?;
        c.require_cocycle()?;
        Ok(c)
    }

    /// Certifies `B_{f_i} = R_{f_i}[T_i]` for the forcing algebra of the class
    /// (`i` is 0-based).
    pub fn localize(&self, i: usize) -> Result<Localization<F>> {
        let n = self.gens.len();
        if i >= n {
            return Err(Error::DimensionMismatch(format!("no generator with index {}", i + 1)));
        }
        let forcing = self.to_forcing()?;
        let alg_ring = forcing.algebra().ring();
        let y_name = alg_ring.fresh_name(&format!("y{}", i + 1));
        let ring = alg_ring.extend(&[y_name.as_str()], MonomialOrder::DegRevLex)?;
        let y = Polynomial::var(&ring, ring.nvars() - 1);
        let lift = |p: &Polynomial<F>| p.embed(&ring);
        let fi = lift(&self.gens[i]);
        let mut rels: Vec<Polynomial<F>> = self.base.relations().iter().map(lift).collect();
        rels.push(&(&y * &fi) - &Polynomial::one(&ring));
        let local = RingPresentation::new(ring.clone(), rels, *self.base.config())?;

        let ti = Polynomial::var(&ring, forcing.t_var(i));
        let ym = y.pow(self.m);
        let mut images: Vec<Polynomial<F>> = (0..ring.nvars()).map(|v| Polynomial::var(&ring, v)).collect();
        let mut substitutions = Vec::new();
        for j in (0..n).filter(|&j| j != i) {
            let fjm = lift(&self.gens[j]).pow(self.m);
            // row (i,j) solved for T_j; for j < i the row is (j,i) and b_ji = -b_ij
            let tj = &ym * &(&(&fjm * &ti) - &lift(&self.numerator(i, j)));
            images[forcing.t_var(j)] = tj.clone();
            substitutions.push((j, tj));
        }
        let mut residual_ok = true;
        for rel in forcing.forcing_relations() {
            let r = lift(rel).substitute(&images)?;
            if !local.is_zero(&r)? {
                residual_ok = false;
            }
        }
        if !residual_ok {
            return Err(Error::Precondition(format!(
                "forcing relations do not reduce to 0 on D(f_{})",
                i + 1
            )));
        }
        Ok(Localization { index: i, inverse: y_name, presentation: local, substitutions })
    }

    /// `y_i^m T_i - y_j^m T_j = b_ij y_i^m y_j^m` in `B[y_i, y_j]` with
    /// `y_i f_i = y_j f_j = 1` (0-based indices, `i != j`).
    pub fn transition_holds(&self, i: usize, j: usize) -> Result<bool> {
        let n = self.gens.len();
        if i >= n || j >= n || i == j {
            return Err(Error::DimensionMismatch("transition needs two distinct generators".into()));
        }
        let forcing = self.to_forcing()?;
        let alg = forcing.algebra();
        let names =
            [alg.ring().fresh_name(&format!("y{}", i + 1)), alg.ring().fresh_name(&format!("y{}", j + 1))];
        let ext = alg.extend(&names, MonomialOrder::DegRevLex)?;
        let ring = ext.ring().clone();
        let k = ring.nvars();
        let (yi, yj) = (Polynomial::var(&ring, k - 2), Polynomial::var(&ring, k - 1));
        let one = Polynomial::one(&ring);
        let local = ext.with_relations(vec![
            &(&yi * &self.gens[i].embed(&ring)) - &one,
            &(&yj * &self.gens[j].embed(&ring)) - &one,
        ])?;
        let (yim, yjm) = (yi.pow(self.m), yj.pow(self.m));
        let wi = &yim * &Polynomial::var(&ring, forcing.t_var(i));
        let wj = &yjm * &Polynomial::var(&ring, forcing.t_var(j));
        let rhs = &(&self.numerator(i, j).embed(&ring) * &yim) * &yjm;
        local.is_zero(&(&(&wi - &wj) - &rhs))
    }
}

/// `B_{f_i}` as a polynomial ring in `T_i` over `R_{f_i}`.
#[derive(Clone, Debug)]
pub struct Localization<F: Field> {
    /// 0-based index of the inverted generator.
    pub index: usize,
    /// Name of the adjoined inverse of `f_i`.
    pub inverse: String,
    /// `R[T, y] / (J, y f_i - 1)`, where the substitutions are checked.
    pub presentation: PresentationRef<F>,
    /// `(j, T_j)` expressed through `T_i` and `y`.
    pub substitutions: Vec<(usize, Polynomial<F>)>,
}
