//! Sparse multivariate polynomials.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::monomial::{Monomial, MonomialOrder};

/// A polynomial ring `K[x_1, ..., x_n]` with a fixed monomial order.
///
/// Variables are identified by index; names are only used for parsing and
/// printing.
#[derive(Debug, PartialEq, Eq)]
pub struct PolyRing<F: Field> {
    field: F,
    names: Vec<String>,
    order: MonomialOrder,
}

pub type RingRef<F> = Arc<PolyRing<F>>;

impl<F: Field> PolyRing<F> {
    pub fn new<S: AsRef<str>>(field: F, names: &[S], order: MonomialOrder) -> Result<RingRef<F>> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        let mut seen = HashSet::new();
        for n in &names {
            let valid = n.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                && n.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !valid {
                return Err(Error::Config(format!("invalid variable name `{n}`")));
            }
            if !seen.insert(n.as_str()) {
                return Err(Error::Config(format!("duplicate variable `{n}`")));
            }
        }
        if let MonomialOrder::Block(k) = order {
            if k > names.len() {
                return Err(Error::Config(format!(
                    "block size {k} exceeds the {} variables",
                    names.len()
                )));
            }
        }
        Ok(Arc::new(PolyRing { field, names, order }))
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Same variables and field under another order.
    pub fn with_order(&self, order: MonomialOrder) -> Result<RingRef<F>> {
        PolyRing::new(self.field.clone(), &self.names, order)
    }

    /// Appends variables after the existing ones.
    pub fn extend<S: AsRef<str>>(&self, extra: &[S], order: MonomialOrder) -> Result<RingRef<F>> {
        let mut names = self.names.clone();
        names.extend(extra.iter().map(|s| s.as_ref().to_string()));
        PolyRing::new(self.field.clone(), &names, order)
    }

    /// A name not yet used in this ring, derived from `base`.
    pub fn fresh_name(&self, base: &str) -> String {
        if self.var_index(base).is_none() {
            return base.to_string();
        }
        (1..)
            .map(|i| format!("{base}_{i}"))
            .find(|n| self.var_index(n).is_none())
            .expect("unbounded search")
    }
}

pub fn same_ring<F: Field>(a: &RingRef<F>, b: &RingRef<F>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// A polynomial with terms sorted descending by the ring's monomial order.
/// No stored coefficient is zero.
#[derive(Clone)]
pub struct Polynomial<F: Field> {
    ring: RingRef<F>,
    terms: Vec<(Monomial, F::Elem)>,
}

impl<F: Field> PartialEq for Polynomial<F> {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl<F: Field> Eq for Polynomial<F> {}

impl<F: Field> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl<F: Field> Polynomial<F> {
    pub fn zero(ring: &RingRef<F>) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn one(ring: &RingRef<F>) -> Self {
        Self::constant(ring, ring.field.one())
    }

    pub fn constant(ring: &RingRef<F>, c: F::Elem) -> Self {
        Self::monomial(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn from_i64(ring: &RingRef<F>, n: i64) -> Self {
        Self::constant(ring, ring.field.from_i64(n))
    }

    pub fn var(ring: &RingRef<F>, index: usize) -> Self {
        Self::monomial(ring, Monomial::var(ring.nvars(), index), ring.field.one())
    }

    pub fn monomial(ring: &RingRef<F>, m: Monomial, c: F::Elem) -> Self {
        debug_assert_eq!(m.nvars(), ring.nvars());
        if ring.field.is_zero(&c) {
            Self::zero(ring)
        } else {
            Polynomial { ring: ring.clone(), terms: vec![(m, c)] }
        }
    }

    /// Builds the canonical form from arbitrary terms: sorts, merges equal
    /// monomials and drops zeros.
    pub fn from_terms(ring: &RingRef<F>, mut terms: Vec<(Monomial, F::Elem)>) -> Self {
        let order = ring.order;
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let field = &ring.field;
        let mut out: Vec<(Monomial, F::Elem)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = field.add(lc, &c),
                _ => {
                    if let Some((_, lc)) = out.last() {
                        if field.is_zero(lc) {
                            out.pop();
                        }
                    }
                    out.push((m, c));
                }
            }
        }
        if out.last().is_some_and(|(_, c)| field.is_zero(c)) {
            out.pop();
        }
        Polynomial { ring: ring.clone(), terms: out }
    }

    pub(crate) fn from_sorted_terms(ring: &RingRef<F>, terms: Vec<(Monomial, F::Elem)>) -> Self {
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &RingRef<F> {
        &self.ring
    }

    pub fn field(&self) -> &F {
        &self.ring.field
    }

    pub fn terms(&self) -> &[(Monomial, F::Elem)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, F::Elem)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// The constant coefficient when the polynomial is constant.
    pub fn as_constant(&self) -> Option<F::Elem> {
        match self.terms.as_slice() {
            [] => Some(self.field().zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn lead_term(&self) -> Option<&(Monomial, F::Elem)> {
        self.terms.first()
    }

    pub fn lead_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn lead_coeff(&self) -> Option<&F::Elem> {
        self.terms.first().map(|(_, c)| c)
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// Largest total degree in the given variables.
    pub fn degree_in(&self, vars: &[usize]) -> u64 {
        self.terms
            .iter()
            .map(|(m, _)| vars.iter().map(|&v| m.exponent(v) as u64).sum())
            .max()
            .unwrap_or(0)
    }

    pub fn uses_var(&self, var: usize) -> bool {
        self.terms.iter().any(|(m, _)| m.exponent(var) > 0)
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.add_scaled(&self.field().one(), &Monomial::one(self.ring.nvars()), other))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let minus_one = self.field().neg(&self.field().one());
        Ok(self.add_scaled(&minus_one, &Monomial::one(self.ring.nvars()), other))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub fn neg(&self) -> Self {
        let field = self.field();
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), field.neg(c))).collect(),
        }
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let field = self.field();
        if field.is_zero(c) {
            return Self::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), field.mul(a, c))).collect(),
        }
    }

    /// `c * m * self`. Multiplication by a monomial preserves the order.
    pub fn mul_term(&self, c: &F::Elem, m: &Monomial) -> Self {
        let field = self.field();
        if field.is_zero(c) {
            return Self::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(t, a)| (t.mul(m), field.mul(a, c))).collect(),
        }
    }

    /// `self + c * m * other`, merging the sorted term lists.
    pub fn add_scaled(&self, c: &F::Elem, m: &Monomial, other: &Self) -> Self {
        let field = self.field();
        let order = self.ring.order;
        if field.is_zero(c) || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other.terms.iter().map(|(t, k)| (t.mul(m), field.mul(k, c))).peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some(_)) => out.push(b.next().unwrap()),
                (Some((ma, _)), Some((mb, _))) => match order.cmp(ma, mb) {
                    Ordering::Greater => out.push(a.next().unwrap().clone()),
                    Ordering::Less => out.push(b.next().unwrap()),
                    Ordering::Equal => {
                        let (ma, ca) = a.next().unwrap();
                        let (_, cb) = b.next().unwrap();
                        let s = field.add(ca, &cb);
                        if !field.is_zero(&s) {
                            out.push((ma.clone(), s));
                        }
                    }
                },
            }
        }
        Polynomial { ring: self.ring.clone(), terms: out }
    }

    pub(crate) fn mul_unchecked(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.ring);
        }
        // Accumulate row by row so each partial sum stays sorted.
        let (small, large) =
            if self.len() <= other.len() { (self, other) } else { (other, self) };
        let mut acc = Self::zero(&self.ring);
        for (m, c) in &small.terms {
            acc = acc.add_scaled(c, m, large);
        }
        acc
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.ring);
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        acc
    }

    /// `self / divisor` when the division is exact in the polynomial ring.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        let (dm, dc) = divisor.lead_term()?;
        let field = self.field();
        let dinv = field.inv(dc).unwrap();
        let mut rem = self.clone();
        let mut quotient = Vec::new();
        while let Some((m, c)) = rem.lead_term().cloned() {
            let q = m.div(dm)?;
            let coeff = field.mul(&c, &dinv);
            rem = rem.add_scaled(&field.neg(&coeff), &q, divisor);
            quotient.push((q, coeff));
        }
        Some(Self::from_sorted_terms(&self.ring, quotient))
    }

    /// Scales so the leading coefficient is 1.
    pub fn monic(&self) -> Self {
        match self.lead_coeff() {
            None => self.clone(),
            Some(c) => {
                let inv = self.field().inv(c).expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    /// Evaluates at a point assigning a field element to every variable.
    pub fn evaluate(&self, point: &[F::Elem]) -> Result<F::Elem> {
        if point.len() != self.ring.nvars() {
            return Err(Error::DimensionMismatch(format!(
                "point has {} coordinates, ring has {} variables",
                point.len(),
                self.ring.nvars()
            )));
        }
        let field = self.field();
        let mut acc = field.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    t = field.mul(&t, &field.pow(&point[v], e as u64));
                }
            }
            acc = field.add(&acc, &t);
        }
        Ok(acc)
    }

    pub fn partial_derivative(&self, var: usize) -> Self {
        let field = self.field();
        let mut terms = Vec::new();
        for (m, c) in &self.terms {
            let e = m.exponent(var);
            if e == 0 {
                continue;
            }
            let coeff = field.mul(c, &field.from_i64(e as i64));
            if field.is_zero(&coeff) {
                continue;
            }
            let mut exps = m.exponents().to_vec();
            exps[var] -= 1;
            terms.push((Monomial::from_exponents(&exps).with_component(m.component()), coeff));
        }
        // Lowering one exponent can reorder terms under degrevlex ties.
        Self::from_terms(&self.ring, terms)
    }

    /// Ring homomorphism sending variable `i` to `images[i]`.
    pub fn substitute(&self, images: &[Polynomial<F>]) -> Result<Polynomial<F>> {
        if images.len() != self.ring.nvars() {
            return Err(Error::DimensionMismatch(format!(
                "{} images for {} variables",
                images.len(),
                self.ring.nvars()
            )));
        }
        let target = match images.first() {
            Some(p) => p.ring.clone(),
            None => return Ok(self.clone()),
        };
        if images.iter().any(|p| !same_ring(&p.ring, &target)) {
            return Err(Error::RingMismatch);
        }
        let mut cache: Vec<Vec<Polynomial<F>>> = vec![Vec::new(); images.len()];
        let mut acc = Polynomial::zero(&target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(&target, c.clone());
            for (v, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let powers = &mut cache[v];
                if powers.is_empty() {
                    powers.push(Polynomial::one(&target));
                }
                while powers.len() <= e as usize {
                    let next = powers.last().unwrap().mul_unchecked(&images[v]);
                    powers.push(next);
                }
                t = t.mul_unchecked(&powers[e as usize]);
            }
            acc = acc.checked_add(&t)?;
        }
        Ok(acc)
    }

    /// Moves the polynomial into `target`, sending variable `i` to
    /// variable `map[i]`. Used to embed into rings with extra variables or a
    /// different order.
    pub fn map_vars(&self, target: &RingRef<F>, map: &[usize]) -> Polynomial<F> {
        debug_assert_eq!(map.len(), self.ring.nvars());
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.remap(map, target.nvars()), c.clone()))
            .collect();
        Polynomial::from_terms(target, terms)
    }

    /// Embeds into a ring whose first variables coincide with this ring's.
    pub fn embed(&self, target: &RingRef<F>) -> Polynomial<F> {
        let map: Vec<usize> = (0..self.ring.nvars()).collect();
        self.map_vars(target, &map)
    }

    /// Moves into a ring that shares variable names, matching by name.
    /// Variables that do not occur may be missing from the target.
    pub fn to_ring_by_name(&self, target: &RingRef<F>) -> Result<Polynomial<F>> {
        let mut map = Vec::with_capacity(self.ring.nvars());
        for (i, name) in self.ring.names().iter().enumerate() {
            match target.var_index(name) {
                Some(j) => map.push(Some(j)),
                None if !self.uses_var(i) => map.push(None),
                None => return Err(Error::UnknownVariable { name: name.clone(), pos: 0 }),
            }
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut exps = vec![0u32; target.nvars()];
                for (i, &e) in m.exponents().iter().enumerate() {
                    if let Some(j) = map[i] {
                        exps[j] += e;
                    }
                }
                (Monomial::from_exponents(&exps), c.clone())
            })
            .collect();
        Ok(Polynomial::from_terms(target, terms))
    }

    /// The common weighted degree of all terms, if there is one.
    pub fn weighted_degree(&self, grading: &Grading) -> Result<WeightedDegree> {
        grading.check(self.ring.nvars())?;
        let mut degrees = self.terms.iter().map(|(m, _)| grading.degree_of(m));
        let first = degrees.next().ok_or(Error::ZeroPolynomial)?;
        if degrees.all(|d| d == first) {
            Ok(WeightedDegree::Homogeneous(first))
        } else {
            Ok(WeightedDegree::Inhomogeneous)
        }
    }

    pub(crate) fn with_component(&self, comp: u32) -> Polynomial<F> {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone().with_component(comp), c.clone())).collect(),
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl<F: Field> std::ops::$trait<&Polynomial<F>> for &Polynomial<F> {
            type Output = Polynomial<F>;
            fn $method(self, rhs: &Polynomial<F>) -> Polynomial<F> {
                self.$checked(rhs).expect("operands from the same ring")
            }
        }
        impl<F: Field> std::ops::$trait<Polynomial<F>> for Polynomial<F> {
            type Output = Polynomial<F>;
            fn $method(self, rhs: Polynomial<F>) -> Polynomial<F> {
                (&self).$checked(&rhs).expect("operands from the same ring")
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl<F: Field> std::ops::Neg for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        Polynomial::neg(self)
    }
}

/// The binary operations of [`arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// Checked arithmetic; fails when the operands live in different rings.
pub fn arith<F: Field>(op: ArithOp, f: &Polynomial<F>, g: &Polynomial<F>) -> Result<Polynomial<F>> {
    match op {
        ArithOp::Add => f.checked_add(g),
        ArithOp::Sub => f.checked_sub(g),
        ArithOp::Mul => f.checked_mul(g),
    }
}

/// Integer degree vectors per variable, of common length `r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grading {
    degrees: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WeightedDegree {
    Homogeneous(Vec<i64>),
    Inhomogeneous,
}

impl WeightedDegree {
    pub fn homogeneous(self) -> Result<Vec<i64>> {
        match self {
            WeightedDegree::Homogeneous(d) => Ok(d),
            WeightedDegree::Inhomogeneous => Err(Error::Inhomogeneous),
        }
    }
}

impl Grading {
    pub fn new(degrees: Vec<Vec<i64>>) -> Result<Self> {
        let r = degrees.first().map_or(0, Vec::len);
        if r == 0 || degrees.iter().any(|d| d.len() != r) {
            return Err(Error::Config("degree vectors must share one nonzero length".into()));
        }
        Ok(Grading { degrees })
    }

    /// Ordinary `Z`-grading with one weight per variable.
    pub fn weights(weights: &[i64]) -> Result<Self> {
        Self::new(weights.iter().map(|&w| vec![w]).collect())
    }

    pub fn rank(&self) -> usize {
        self.degrees[0].len()
    }

    pub fn degrees(&self) -> &[Vec<i64>] {
        &self.degrees
    }

    fn check(&self, nvars: usize) -> Result<()> {
        if self.degrees.len() != nvars {
            return Err(Error::DimensionMismatch(format!(
                "grading has {} degree vectors for {nvars} variables",
                self.degrees.len()
            )));
        }
        Ok(())
    }

    pub fn degree_of(&self, m: &Monomial) -> Vec<i64> {
        let mut d = vec![0i64; self.rank()];
        for (v, &e) in m.exponents().iter().enumerate() {
            for (acc, w) in d.iter_mut().zip(&self.degrees[v]) {
                *acc += w * e as i64;
            }
        }
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    fn ring_q(names: &[&str]) -> RingRef<Rationals> {
        PolyRing::new(Rationals, names, MonomialOrder::DegRevLex).unwrap()
    }

    #[test]
    fn binomial_identity() {
        let r = ring_q(&["x", "y"]);
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let lhs = &(&x + &y) * &(&x - &y);
        let rhs = &(&x * &x) - &(&y * &y);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn add_zero_is_identity() {
        let r = ring_q(&["x", "y"]);
        let f = &Polynomial::var(&r, 0) + &Polynomial::from_i64(&r, 3);
        assert_eq!(&f + &Polynomial::zero(&r), f);
    }

    #[test]
    fn mixed_rings_are_rejected() {
        let r = ring_q(&["x", "y"]);
        let s = ring_q(&["x", "z"]);
        let e = Polynomial::var(&r, 0).checked_add(&Polynomial::var(&s, 0));
        assert_eq!(e, Err(Error::RingMismatch));
    }

    #[test]
    fn evaluate_over_f7() {
        let f7 = PrimeField::new(7).unwrap();
        let r = PolyRing::new(f7, &["x", "y"], MonomialOrder::DegRevLex).unwrap();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let f = &(&(&x * &x) * &y) + &Polynomial::from_i64(&r, 3);
        // 2^2 * 5 + 3 = 23 = 2 mod 7
        assert_eq!(f.evaluate(&[2, 5]).unwrap(), (2 * 2 * 5 + 3) % 7);
        assert_eq!(Polynomial::zero(&r).evaluate(&[1, 1]).unwrap(), 0);
        assert_eq!(Polynomial::one(&r).evaluate(&[0, 0]).unwrap(), 1);
    }

    #[test]
    fn derivative_of_constant_is_zero() {
        let r = ring_q(&["x"]);
        assert!(Polynomial::from_i64(&r, 5).partial_derivative(0).is_zero());
    }

    #[test]
    fn substitute_composes() {
        let r = ring_q(&["x", "y"]);
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let f = &x * &y;
        // x -> x + y, y -> x - y
        let g = f.substitute(&[&x + &y, &x - &y]).unwrap();
        assert_eq!(g, &(&x * &x) - &(&y * &y));
    }

    #[test]
    fn pow_zero_is_one() {
        let r = ring_q(&["x"]);
        assert_eq!(Polynomial::var(&r, 0).pow(0), Polynomial::one(&r));
        assert_eq!(Polynomial::zero(&r).pow(0), Polynomial::one(&r));
    }

    #[test]
    fn inhomogeneous_detection() {
        let r = ring_q(&["x", "y"]);
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let g = Grading::weights(&[1, 1]).unwrap();
        assert_eq!((&x + &(&y * &y)).weighted_degree(&g).unwrap(), WeightedDegree::Inhomogeneous);
        assert_eq!(Polynomial::zero(&r).weighted_degree(&g), Err(Error::ZeroPolynomial));
    }
}
