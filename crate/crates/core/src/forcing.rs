//! Forcing algebras `B = R[T_1, ..., T_n] / (A T - s)`.
//!
//! In the ideal case (`A = (f_1 ... f_n)`, `s = (-f)`) the single relation is
//! `f_1 T_1 + ... + f_n T_n + f = 0`, and `B` has an `R`-section iff
//! `f ∈ (f_1, ..., f_n)`.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::gb::{
    is_regular_pair, normal_form, solve_linear_over_ring, IdealHandle, LinearSolution,
    PresentationRef, RingPresentation,
};
use crate::linalg::{evaluate_matrix, solve_affine, AffineSolutions};
use crate::monomial::MonomialOrder;
use crate::poly::{PolyRing, Polynomial};

/// Matrix forcing data over `R` together with the presentation of `B`.
#[derive(Clone, Debug)]
pub struct ForcingSystem<F: Field> {
    base: PresentationRef<F>,
    matrix: Vec<Vec<Polynomial<F>>>,
    vector: Vec<Polynomial<F>>,
    relations: Vec<Polynomial<F>>,
    algebra: PresentationRef<F>,
}

/// The fiber of `Spec B -> Spec R` over a rational point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FiberClass<E> {
    Empty,
    Affine { dimension: usize, particular: Vec<E>, directions: Vec<Vec<E>> },
}

impl<E> FiberClass<E> {
    pub fn dimension(&self) -> Option<usize> {
        match self {
            FiberClass::Empty => None,
            FiberClass::Affine { dimension, .. } => Some(*dimension),
        }
    }
}

impl<F: Field> ForcingSystem<F> {
    pub fn new(
        base: PresentationRef<F>,
        matrix: Vec<Vec<Polynomial<F>>>,
        vector: Vec<Polynomial<F>>,
    ) -> Result<Self> {
        let m = matrix.len();
        if m == 0 {
            return Err(Error::DimensionMismatch("forcing system needs at least one row".into()));
        }
        if vector.len() != m {
            return Err(Error::DimensionMismatch(format!(
                "{m} rows but {} right-hand entries",
                vector.len()
            )));
        }
        let n = matrix[0].len();
        if n == 0 || matrix.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch("rows must share a positive length".into()));
        }
        for p in matrix.iter().flatten().chain(&vector) {
            base.check(p)?;
        }

        let ring = base.ring();
        let t_names: Vec<String> = (1..=n).map(|i| ring.fresh_name(&format!("T{i}"))).collect();
        let order = match ring.order() {
            MonomialOrder::Block(_) => MonomialOrder::DegRevLex,
            o => o,
        };
        let ext = base.extend(&t_names, order)?;
        let ering = ext.ring().clone();
        let offset = ring.nvars();
        let mut rows = Vec::with_capacity(m);
        for (row, si) in matrix.iter().zip(&vector) {
            let mut rel = si.embed(&ering).neg();
            for (j, a) in row.iter().enumerate() {
                rel = &rel + &(&a.embed(&ering) * &Polynomial::var(&ering, offset + j));
            }
            rows.push(rel);
        }
        let algebra = ext.with_relations(rows.clone())?;
        Ok(ForcingSystem { base, matrix, vector, relations: rows, algebra })
    }

    /// `f_1 T_1 + ... + f_n T_n + f = 0`.
    pub fn ideal_case(base: PresentationRef<F>, gens: Vec<Polynomial<F>>, f: Polynomial<F>) -> Result<Self> {
        Self::new(base, vec![gens], vec![f.neg()])
    }

    pub fn base(&self) -> &PresentationRef<F> {
        &self.base
    }

    pub fn matrix(&self) -> &[Vec<Polynomial<F>>] {
        &self.matrix
    }

    pub fn vector(&self) -> &[Polynomial<F>] {
        &self.vector
    }

    /// Presentation of `B` over the base variables followed by `T_1..T_n`.
    pub fn algebra(&self) -> &PresentationRef<F> {
        &self.algebra
    }

    pub fn rows(&self) -> usize {
        self.matrix.len()
    }

    pub fn cols(&self) -> usize {
        self.matrix[0].len()
    }

    pub fn is_ideal_case(&self) -> bool {
        self.matrix.len() == 1
    }

    /// Index of `T_j` (0-based `j`) in the algebra's ring.
    pub fn t_var(&self, j: usize) -> usize {
        self.base.nvars() + j
    }

    /// The forcing relations `(A T - s)_i` in the ambient ring of `B`.
    pub fn forcing_relations(&self) -> &[Polynomial<F>] {
        &self.relations
    }

    fn require_ideal_case(&self) -> Result<()> {
        if self.is_ideal_case() {
            Ok(())
        } else {
            Err(Error::Unsupported("operation needs the ideal case (a single forcing row)".into()))
        }
    }

    /// `(f_1, ..., f_n)` in the ideal case.
    pub fn generators(&self) -> Result<&[Polynomial<F>]> {
        self.require_ideal_case()?;
        Ok(&self.matrix[0])
    }

    /// The element `f` forced into the ideal, in the ideal case.
    pub fn forced_element(&self) -> Result<Polynomial<F>> {
        self.require_ideal_case()?;
        Ok(self.vector[0].neg())
    }

    pub fn forcing_ideal(&self) -> Result<IdealHandle<F>> {
        self.base.ideal(self.generators()?.to_vec())
    }

    /// Exact classification of `{t : A(P) t = s(P)}`.
    pub fn fiber_at(&self, point: &[F::Elem]) -> Result<FiberClass<F::Elem>> {
        if point.len() != self.base.nvars() {
            return Err(Error::DimensionMismatch("point has the wrong number of coordinates".into()));
        }
        if !self.base.contains_point(point)? {
            return Err(Error::Precondition("point does not lie on Spec R".into()));
        }
        let field = self.base.field();
        let a = evaluate_matrix(&self.matrix, point)?;
        let s: Vec<F::Elem> = self.vector.iter().map(|p| p.evaluate(point)).collect::<Result<_>>()?;
        Ok(match solve_affine(field, &a, &s, self.cols())? {
            AffineSolutions::Empty => FiberClass::Empty,
            AffineSolutions::Affine { particular, directions } => {
                FiberClass::Affine { dimension: directions.len(), particular, directions }
            }
        })
    }

    /// An `R`-section `T_j -> t_j`, if one exists.
    pub fn has_section(&self) -> Result<Option<Vec<Polynomial<F>>>> {
        Ok(match solve_linear_over_ring(&self.matrix, &self.vector, &self.base)? {
            LinearSolution::Solution(t) => Some(t),
            LinearSolution::NoSolution => None,
        })
    }

    /// Surjectivity of `Spec B -> Spec R`, decided as `f ∈ rad(f_1, ..., f_n)`.
    pub fn is_surjective_over_base(&self) -> Result<bool> {
        self.forcing_ideal()?.radical_member(&self.forced_element()?)
    }

    /// Checks the `(A^1, +)`-coaction `T_1 -> T_1 + f_2 W`,
    /// `T_2 -> T_2 - f_1 W` preserves the forcing relation in `B[W]`.
    pub fn verify_coaction(&self) -> Result<bool> {
        let (f1, f2) = self.two_generators()?;
        let w = self.algebra.ring().fresh_name("W");
        let ext = self.algebra.extend(&[w], MonomialOrder::DegRevLex)?;
        let ring = ext.ring().clone();
        let wv = Polynomial::var(&ring, ring.nvars() - 1);
        let mut images: Vec<Polynomial<F>> =
            (0..self.algebra.nvars()).map(|i| Polynomial::var(&ring, i)).collect();
        let (t1, t2) = (self.t_var(0), self.t_var(1));
        images[t1] = &images[t1] + &(&f2.embed(&ring) * &wv);
        images[t2] = &images[t2] - &(&f1.embed(&ring) * &wv);
        let h = self.forcing_relations()[0].substitute(&images)?;
        ext.is_zero(&h)
    }

    fn two_generators(&self) -> Result<(Polynomial<F>, Polynomial<F>)> {
        match self.generators()? {
            [f1, f2] => Ok((f1.clone(), f2.clone())),
            g => Err(Error::Unsupported(format!("needs exactly two generators, got {}", g.len()))),
        }
    }

    /// Builds `D = f_2 ∂/∂T_1 - f_1 ∂/∂T_2` and checks that it kills the
    /// forcing relation.
    pub fn build_lnd(&self) -> Result<LndReport<F>> {
        let (f1, f2) = self.two_generators()?;
        let mut warnings = Vec::new();
        let regular = is_regular_pair(&f1, &f2, &self.base)?;
        if !regular {
            warnings.push(format!("({f1}, {f2}) is not a regular pair; the kernel of D may exceed R"));
        }
        let p = self.base.characteristic();
        if p > 0 {
            warnings.push(format!(
                "characteristic {p}: the kernel of D need not be R; only nilpotency is certified"
            ));
        }
        let ring = self.algebra.ring();
        let derivation = Derivation {
            algebra: self.algebra.clone(),
            base_vars: self.base.nvars(),
            t1: self.t_var(0),
            t2: self.t_var(1),
            image_t1: f2.embed(ring),
            image_t2: f1.embed(ring).neg(),
        };
        let relation_image = derivation.apply(&self.forcing_relations()[0])?;
        let relation_killed = self.algebra.is_zero(&relation_image)?;
        Ok(LndReport { derivation, relation_killed, regular_pair: regular, warnings })
    }
}

/// Outcome of [`ForcingSystem::build_lnd`].
#[derive(Clone, Debug)]
pub struct LndReport<F: Field> {
    pub derivation: Derivation<F>,
    /// `D(forcing relation)` reduces to 0 in `B`.
    pub relation_killed: bool,
    pub regular_pair: bool,
    pub warnings: Vec<String>,
}

/// `D(T_1) = f_2`, `D(T_2) = -f_1`, `D = 0` on `R`.
#[derive(Clone, Debug)]
pub struct Derivation<F: Field> {
    algebra: PresentationRef<F>,
    base_vars: usize,
    t1: usize,
    t2: usize,
    image_t1: Polynomial<F>,
    image_t2: Polynomial<F>,
}

impl<F: Field> Derivation<F> {
    pub fn algebra(&self) -> &PresentationRef<F> {
        &self.algebra
    }

    pub fn image_t1(&self) -> &Polynomial<F> {
        &self.image_t1
    }

    pub fn image_t2(&self) -> &Polynomial<F> {
        &self.image_t2
    }

    /// `D(g)` on an ambient representative of `g ∈ B`.
    pub fn apply(&self, g: &Polynomial<F>) -> Result<Polynomial<F>> {
        self.algebra.check(g)?;
        let a = &self.image_t1 * &g.partial_derivative(self.t1);
        let b = &self.image_t2 * &g.partial_derivative(self.t2);
        Ok(&a + &b)
    }

    /// Smallest `n >= 1` with `D^n(g) = 0` in `B`.
    ///
    /// `D` lowers the `T`-degree of every term by one, so `D^(d+1)` vanishes
    /// on representatives of `T`-degree `d`.
    pub fn nilpotency_index(&self, g: &Polynomial<F>) -> Result<usize> {
        let bound = g.degree_in(&[self.t1, self.t2]) as usize + 1;
        let mut current = g.clone();
        for n in 1..=bound {
            current = self.apply(&current)?;
            if self.algebra.is_zero(&current)? {
                return Ok(n);
            }
        }
        unreachable!("D^(d+1) kills every representative of T-degree d")
    }

    /// Whether `g` is congruent in `B` to an element of `R`, decided by the
    /// normal form for an order eliminating `T_1, T_2`.
    pub fn is_congruent_to_base(&self, g: &Polynomial<F>) -> Result<bool> {
        self.algebra.check(g)?;
        let ring = self.algebra.ring();
        let n = ring.nvars();
        let t_first: Vec<usize> = (0..n)
            .map(|v| if v < self.base_vars { v + 2 } else { v - self.base_vars })
            .collect();
        let mut names = vec![String::new(); n];
        for (v, &pos) in t_first.iter().enumerate() {
            names[pos] = ring.names()[v].clone();
        }
        let elim_ring = PolyRing::new(ring.field().clone(), &names, MonomialOrder::Block(2))?;
        let rels = self.algebra.relations().iter().map(|r| r.map_vars(&elim_ring, &t_first)).collect();
        let pres = RingPresentation::new(elim_ring.clone(), rels, *self.algebra.config())?;
        let nf = normal_form(&g.map_vars(&elim_ring, &t_first), pres.basis()?);
        Ok(!nf.uses_var(0) && !nf.uses_var(1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::gb::EngineConfig;

    fn qring(names: &[&str], rels: &[&str]) -> PresentationRef<Rationals> {
        RingPresentation::parse(Rationals, names, rels, MonomialOrder::DegRevLex, EngineConfig::default())
            .unwrap()
    }

    fn ideal_system(
        r: &PresentationRef<Rationals>,
        gens: &[&str],
        f: &str,
    ) -> ForcingSystem<Rationals> {
        let gens = gens.iter().map(|g| r.poly(g).unwrap()).collect();
        ForcingSystem::ideal_case(r.clone(), gens, r.poly(f).unwrap()).unwrap()
    }

    #[test]
    fn monomial_family_presentation() {
        let r = qring(&["x", "y"], &[]);
        let b = ideal_system(&r, &["x^2", "y^3"], "x*y");
        assert_eq!(b.forcing_relations()[0].to_string(), "y^3*T2 + x^2*T1 + x*y");
        assert_eq!(b.algebra().ring().names(), &["x", "y", "T1", "T2"]);
    }

    #[test]
    fn unit_matrix_eliminates_t() {
        let r = qring(&["x", "y"], &[]);
        let b = ForcingSystem::new(r.clone(), vec![vec![r.poly("1").unwrap()]], vec![r.poly("-x*y").unwrap()])
            .unwrap();
        let section = b.has_section().unwrap().unwrap();
        assert_eq!(section[0].to_string(), "-x*y");
        let elim = b.algebra().ideal(Vec::new()).unwrap().eliminate(&[2]).unwrap();
        assert!(elim.gens().is_empty());
    }

    #[test]
    fn fibers_of_monomial_family() {
        let f5 = PrimeField::new(5).unwrap();
        let r = RingPresentation::parse(f5, &["x", "y"], &[], MonomialOrder::DegRevLex, EngineConfig::default())
            .unwrap();
        let gens = vec![r.poly("x^2").unwrap(), r.poly("y^3").unwrap()];
        let b = ForcingSystem::ideal_case(r.clone(), gens.clone(), r.poly("x*y").unwrap()).unwrap();
        assert_eq!(b.fiber_at(&[0, 0]).unwrap().dimension(), Some(2));
        assert_eq!(b.fiber_at(&[1, 1]).unwrap().dimension(), Some(1));
        let b1 = ForcingSystem::ideal_case(r.clone(), gens, r.poly("1").unwrap()).unwrap();
        assert_eq!(b1.fiber_at(&[0, 0]).unwrap(), FiberClass::Empty);
    }

    #[test]
    fn point_off_the_base_is_rejected() {
        let r = qring(&["x", "y"], &["x - y"]);
        let b = ideal_system(&r, &["x"], "y");
        let one = Rationals.from_i64(1);
        let zero = Rationals.from_i64(0);
        assert!(matches!(b.fiber_at(&[one, zero]), Err(Error::Precondition(_))));
    }

    #[test]
    fn sections() {
        let r = qring(&["x", "y"], &[]);
        let b = ideal_system(&r, &["x", "y"], "x");
        let t = b.has_section().unwrap().unwrap();
        assert_eq!(t[0].to_string(), "-1");
        assert!(t[1].is_zero());
        let zero = ideal_system(&r, &["x", "y"], "0");
        assert!(zero.has_section().unwrap().unwrap().iter().all(Polynomial::is_zero));
        let e8 = qring(&["X", "Y", "Z"], &["X^2 + Y^3 + Z^5"]);
        assert!(ideal_system(&e8, &["Y", "Z"], "X").has_section().unwrap().is_none());
    }

    #[test]
    fn surjectivity() {
        let r = qring(&["x", "y", "z"], &[]);
        assert!(ideal_system(&r, &["x^2"], "x").is_surjective_over_base().unwrap());
        assert!(!ideal_system(&r, &["x", "y"], "z").is_surjective_over_base().unwrap());
        let two_rows = ForcingSystem::new(
            r.clone(),
            vec![vec![r.poly("x").unwrap()], vec![r.poly("y").unwrap()]],
            vec![r.poly("0").unwrap(), r.poly("0").unwrap()],
        )
        .unwrap();
        assert!(matches!(two_rows.is_surjective_over_base(), Err(Error::Unsupported(_))));
    }

    #[test]
    fn derivation_on_plane() {
        let r = qring(&["x", "y"], &[]);
        let b = ideal_system(&r, &["x", "y"], "x^3 + y");
        let report = b.build_lnd().unwrap();
        assert!(report.relation_killed);
        assert!(report.regular_pair);
        assert!(report.warnings.is_empty());
        let d = &report.derivation;
        let alg = b.algebra();
        assert_eq!(d.apply(&alg.poly("T1").unwrap()).unwrap().to_string(), "y");
        assert_eq!(d.apply(&alg.poly("T2").unwrap()).unwrap().to_string(), "-x");
        assert!(d.apply(&alg.poly("x^2*y + 7").unwrap()).unwrap().is_zero());
        assert_eq!(d.apply(&alg.poly("T1*T2").unwrap()).unwrap(), alg.poly("y*T2 - x*T1").unwrap());
        assert_eq!(d.nilpotency_index(&alg.poly("x").unwrap()).unwrap(), 1);
        assert_eq!(d.nilpotency_index(&alg.poly("T1").unwrap()).unwrap(), 2);
        assert_eq!(d.nilpotency_index(&alg.poly("T1^3").unwrap()).unwrap(), 4);
    }

    #[test]
    fn kernel_samples() {
        let r = qring(&["x", "y"], &[]);
        let b = ideal_system(&r, &["x", "y"], "1");
        let d = b.build_lnd().unwrap().derivation;
        let alg = b.algebra();
        // x T1 + y T2 = -1 is in the kernel and congruent to a constant.
        let g = alg.poly("x*T1 + y*T2").unwrap();
        assert!(alg.is_zero(&d.apply(&g).unwrap()).unwrap());
        assert!(d.is_congruent_to_base(&g).unwrap());
        assert!(!d.is_congruent_to_base(&alg.poly("T1").unwrap()).unwrap());
    }

    #[test]
    fn coaction() {
        let r = qring(&["x", "y"], &[]);
        assert!(ideal_system(&r, &["x", "y"], "x*y + 1").verify_coaction().unwrap());
        assert!(ideal_system(&r, &["x^2", "y^3"], "x*y").verify_coaction().unwrap());
        assert!(ideal_system(&r, &["0", "0"], "x").verify_coaction().unwrap());
        assert!(ideal_system(&r, &["x"], "y").verify_coaction().is_err());
    }

    #[test]
    fn char_p_warning() {
        let f7 = PrimeField::new(7).unwrap();
        let r = RingPresentation::parse(f7, &["x", "y"], &[], MonomialOrder::DegRevLex, EngineConfig::default())
            .unwrap();
        let b = ForcingSystem::ideal_case(
            r.clone(),
            vec![r.poly("x").unwrap(), r.poly("y").unwrap()],
            r.poly("1").unwrap(),
        )
        .unwrap();
        let report = b.build_lnd().unwrap();
        assert_eq!(report.warnings.len(), 1);
    }
}
