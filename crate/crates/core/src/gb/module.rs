//! Linear systems over `R`: module membership in a free module.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::gb::engine::{Engine, Input};
use crate::gb::ring::unit_rep;
use crate::gb::{normal_form, PresentationRef};
use crate::poly::Polynomial;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinearSolution<F: Field> {
    /// `t` with `A t = s` in `R`, entries reduced modulo the relations.
    Solution(Vec<Polynomial<F>>),
    /// Certified: `s` is not in the column module of `A` over `R`.
    NoSolution,
}

impl<F: Field> LinearSolution<F> {
    pub fn solution(&self) -> Option<&[Polynomial<F>]> {
        match self {
            LinearSolution::Solution(t) => Some(t),
            LinearSolution::NoSolution => None,
        }
    }
}

/// Solves `A t = s` over `R = K[x]/J`.
///
/// The columns of `A` and the vectors `g e_i` (`g` in a basis of `J`) span
/// a submodule of the ambient free module; its Gröbner basis under a
/// position-over-term order decides whether `s` lies in it, and the division
/// record expresses `s` through the columns.
pub fn solve_linear_over_ring<F: Field>(
    a: &[Vec<Polynomial<F>>],
    s: &[Polynomial<F>],
    pres: &PresentationRef<F>,
) -> Result<LinearSolution<F>> {
    let rows = a.len();
    if s.len() != rows {
        return Err(Error::DimensionMismatch(format!(
            "matrix has {rows} rows, right side has {} entries",
            s.len()
        )));
    }
    let cols = a.first().map_or(0, Vec::len);
    if a.iter().any(|row| row.len() != cols) {
        return Err(Error::DimensionMismatch("ragged matrix".into()));
    }
    for f in a.iter().flatten().chain(s) {
        pres.check(f)?;
    }
    let ring = pres.ring();
    let modulus = pres.basis()?;

    let vector = |entries: &mut dyn Iterator<Item = &Polynomial<F>>| {
        entries
            .enumerate()
            .fold(Polynomial::zero(ring), |acc, (i, p)| &acc + &p.with_component(i as u32))
    };

    let mut inputs: Vec<Input<F>> = (0..cols)
        .map(|j| Input {
            poly: vector(&mut a.iter().map(|row| &row[j])),
            rep: Some(unit_rep(ring, cols, j)),
        })
        .collect();
    for g in modulus {
        for i in 0..rows {
            inputs.push(Input { poly: g.with_component(i as u32), rep: None });
        }
    }
    let engine = Engine { config: pres.config(), ideal_case: rows <= 1, modulus };
    let basis = engine.groebner(inputs)?;
    let reps = basis.reps.unwrap_or_else(|| vec![Vec::new(); basis.polys.len()]);

    let target = vector(&mut s.iter());
    let zero = vec![Polynomial::zero(ring); cols];
    let (rem, rep) = engine.reduce(&target, zero, &basis.polys, &reps, cols > 0);
    if !rem.is_zero() {
        return Ok(LinearSolution::NoSolution);
    }
    let t: Vec<Polynomial<F>> = if cols > 0 {
        rep.iter().map(|r| normal_form(&r.neg(), modulus)).collect()
    } else {
        Vec::new()
    };
    Ok(LinearSolution::Solution(t))
}

/// Whether `A t - s` vanishes in `R` row by row.
pub fn check_solution<F: Field>(
    a: &[Vec<Polynomial<F>>],
    s: &[Polynomial<F>],
    t: &[Polynomial<F>],
    pres: &PresentationRef<F>,
) -> Result<bool> {
    for (row, si) in a.iter().zip(s) {
        let mut acc = si.neg();
        for (aij, tj) in row.iter().zip(t) {
            acc = &acc + &(aij * tj);
        }
        if !pres.is_zero(&acc)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::gb::{EngineConfig, RingPresentation};
    use crate::monomial::MonomialOrder;

    fn qring(names: &[&str], rels: &[&str]) -> PresentationRef<Rationals> {
        RingPresentation::parse(Rationals, names, rels, MonomialOrder::DegRevLex, EngineConfig::default())
            .unwrap()
    }

    fn mat(r: &PresentationRef<Rationals>, rows: &[&[&str]]) -> Vec<Vec<Polynomial<Rationals>>> {
        rows.iter().map(|row| row.iter().map(|e| r.poly(e).unwrap()).collect()).collect()
    }

    fn vecp(r: &PresentationRef<Rationals>, v: &[&str]) -> Vec<Polynomial<Rationals>> {
        v.iter().map(|e| r.poly(e).unwrap()).collect()
    }

    #[test]
    fn identity_system() {
        let r = qring(&["x", "y"], &[]);
        let a = mat(&r, &[&["1", "0"], &["0", "1"]]);
        let s = vecp(&r, &["x^2 + y", "x*y - 3"]);
        let sol = solve_linear_over_ring(&a, &s, &r).unwrap();
        assert_eq!(sol.solution().unwrap(), s.as_slice());
    }

    #[test]
    fn one_not_in_maximal_ideal() {
        let r = qring(&["x", "y"], &[]);
        let a = mat(&r, &[&["x", "y"]]);
        let s = vecp(&r, &["1"]);
        assert_eq!(solve_linear_over_ring(&a, &s, &r).unwrap(), LinearSolution::NoSolution);
    }

    #[test]
    fn zero_right_side_gives_zero_solution() {
        let r = qring(&["x", "y", "z"], &[]);
        let a = mat(&r, &[&["y", "-x", "0"], &["z", "0", "-x"], &["0", "z", "-y"]]);
        let s = vecp(&r, &["0", "0", "0"]);
        let sol = solve_linear_over_ring(&a, &s, &r).unwrap();
        assert!(sol.solution().unwrap().iter().all(Polynomial::is_zero));
    }

    #[test]
    fn solution_over_quotient() {
        let r = qring(&["X", "Y", "Z", "U", "V", "W"], &["U*X + V*Y + W*Z"]);
        let a = mat(&r, &[&["Y", "-X", "0"], &["Z", "0", "-X"], &["0", "Z", "-Y"]]);
        // coboundary of t = (U, V, W)
        let s = vecp(&r, &["Y*U - X*V", "Z*U - X*W", "Z*V - Y*W"]);
        let t = solve_linear_over_ring(&a, &s, &r).unwrap();
        assert!(check_solution(&a, &s, t.solution().unwrap(), &r).unwrap());
    }

    #[test]
    fn shape_errors() {
        let r = qring(&["x"], &[]);
        let a = mat(&r, &[&["x"]]);
        assert!(solve_linear_over_ring(&a, &[], &r).is_err());
    }
}
