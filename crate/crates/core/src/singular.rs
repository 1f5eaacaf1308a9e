//! Jacobian matrices of forcing algebras and point-wise singularity
//! classification.
//!
//! For `B = R[T_1..T_n]/(h)` with `R = K[x_1..x_m]/(g_1..g_k)` and
//! `h = f_1 T_1 + ... + f_n T_n + f`, the Jacobian has the rows
//! `(∂g_l/∂x | 0)` followed by `(∂h/∂x | f_1 .. f_n)`.
//!
//! Singularity means failure of the rank criterion at a rational point over
//! the coefficient field; the classification cases assume an algebraically
//! closed field, and reports carry that caveat.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::forcing::ForcingSystem;
use crate::gb::{IdealHandle, PresentationRef};
use crate::linalg::{evaluate_matrix, minors, rank, solve_affine, AffineSolutions};
use crate::poly::Polynomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CaseTag {
    Case1Smooth,
    Case1Singular,
    Case2Empty,
    Case3Singular,
    Case4Singular,
    RankTest,
}

impl CaseTag {
    pub fn as_str(self) -> &'static str {
        match self {
            CaseTag::Case1Smooth => "case1-smooth",
            CaseTag::Case1Singular => "case1-singular",
            CaseTag::Case2Empty => "case2-empty",
            CaseTag::Case3Singular => "case3-singular",
            CaseTag::Case4Singular => "case4-singular",
            CaseTag::RankTest => "rank-test",
        }
    }
}

impl std::fmt::Display for CaseTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Nonsingular,
    Singular,
    EmptyFiber,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Nonsingular => "nonsingular",
            Verdict::Singular => "singular",
            Verdict::EmptyFiber => "empty-fiber",
        }
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointClassification {
    pub case: CaseTag,
    /// Rank of the full Jacobian at `Q`; `None` for an empty fiber.
    pub rank: Option<usize>,
    /// `(m + n) - dim B`.
    pub codim: usize,
    /// Rank of the base block at `P` and `m - dim R`.
    pub base_rank: usize,
    pub base_codim: usize,
    pub verdict: Verdict,
}

/// Point-wise result on `Spec R` alone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaseClassification {
    pub rank: usize,
    pub codim: usize,
    pub nonsingular: bool,
}

/// Jacobian of the presentation of `B`: base relations first, then the
/// forcing relations, differentiated by every variable of `B`.
pub fn jacobian<F: Field>(fs: &ForcingSystem<F>) -> Vec<Vec<Polynomial<F>>> {
    let alg = fs.algebra();
    let ring = alg.ring();
    let n = alg.nvars();
    fs.base()
        .relations()
        .iter()
        .map(|g| g.embed(ring))
        .chain(fs.forcing_relations().iter().cloned())
        .map(|g| (0..n).map(|v| g.partial_derivative(v)).collect())
        .collect()
}

/// Jacobian of the relations of `R` by its variables.
pub fn base_jacobian<F: Field>(pres: &PresentationRef<F>) -> Vec<Vec<Polynomial<F>>> {
    pres.relations()
        .iter()
        .map(|g| (0..pres.nvars()).map(|v| g.partial_derivative(v)).collect())
        .collect()
}

/// Krull dimension of `R` itself.
pub fn ring_dimension<F: Field>(pres: &PresentationRef<F>) -> Result<usize> {
    IdealHandle::new(pres.clone(), Vec::new())?.krull_dim()
}

/// Rank criterion at a rational point of `Spec R`.
pub fn classify_base_point<F: Field>(
    pres: &PresentationRef<F>,
    point: &[F::Elem],
    dim: Option<usize>,
) -> Result<BaseClassification> {
    if point.len() != pres.nvars() {
        return Err(Error::DimensionMismatch("point has the wrong number of coordinates".into()));
    }
    if !pres.contains_point(point)? {
        return Err(Error::Precondition("point does not lie on Spec R".into()));
    }
    let dim = match dim {
        Some(d) => d,
        None => ring_dimension(pres)?,
    };
    let codim = pres
        .nvars()
        .checked_sub(dim)
        .ok_or_else(|| Error::Precondition("dimension exceeds the number of variables".into()))?;
    let r = rank(pres.field(), &evaluate_matrix(&base_jacobian(pres), point)?);
    Ok(BaseClassification { rank: r, codim, nonsingular: r == codim })
}

fn require_ideal_case<F: Field>(fs: &ForcingSystem<F>) -> Result<()> {
    if fs.is_ideal_case() {
        Ok(())
    } else {
        Err(Error::Unsupported("classification needs a single forcing equation".into()))
    }
}

/// `dim B = dim R + n - 1`, valid when `R` and `B` are domains and the
/// forcing equation is nonzero.
pub fn default_algebra_dimension<F: Field>(fs: &ForcingSystem<F>, dim_r: usize) -> Result<usize> {
    (dim_r + fs.cols())
        .checked_sub(1)
        .ok_or_else(|| Error::Precondition("empty forcing equation".into()))
}

/// Classifies `Q = (P, t)` on `Spec B`.
///
/// `dim_r` and `dim_b` default to the Krull dimension of `R` and to
/// `dim R + n - 1`.
pub fn classify_point<F: Field>(
    fs: &ForcingSystem<F>,
    q: &[F::Elem],
    dim_r: Option<usize>,
    dim_b: Option<usize>,
) -> Result<PointClassification> {
    require_ideal_case(fs)?;
    let alg = fs.algebra();
    let field = alg.field();
    let m = fs.base().nvars();
    if q.len() != alg.nvars() {
        return Err(Error::DimensionMismatch("point has the wrong number of coordinates".into()));
    }
    let p = &q[..m];
    let base = classify_base_point(fs.base(), p, dim_r)?;
    let dim_r = m - base.codim;
    let dim_b = match dim_b {
        Some(d) => d,
        None => default_algebra_dimension(fs, dim_r)?,
    };
    let codim = alg
        .nvars()
        .checked_sub(dim_b)
        .ok_or_else(|| Error::Precondition("dim B exceeds the number of variables".into()))?;

    let gens = fs.generators()?;
    let f = fs.forced_element()?;
    let gens_vanish = gens
        .iter()
        .map(|g| g.evaluate(p))
        .collect::<Result<Vec<_>>>()?
        .iter()
        .all(|v| field.is_zero(v));
    let f_vanishes = field.is_zero(&f.evaluate(p)?);

    let mut out = PointClassification {
        case: CaseTag::RankTest,
        rank: None,
        codim,
        base_rank: base.rank,
        base_codim: base.codim,
        verdict: Verdict::Singular,
    };
    if gens_vanish && !f_vanishes {
        out.case = CaseTag::Case2Empty;
        out.verdict = Verdict::EmptyFiber;
        return Ok(out);
    }
    if !alg.contains_point(q)? {
        return Err(Error::Precondition("point does not lie on Spec B".into()));
    }
    let jq = evaluate_matrix(&jacobian(fs), q)?;
    let r = rank(field, &jq);
    out.rank = Some(r);

    if !gens_vanish {
        (out.case, out.verdict) = if base.nonsingular {
            (CaseTag::Case1Smooth, Verdict::Nonsingular)
        } else {
            (CaseTag::Case1Singular, Verdict::Singular)
        };
    } else if !base.nonsingular {
        out.case = CaseTag::Case3Singular;
    } else {
        let h = &fs.forcing_relations()[0];
        let h_partials_vanish = (0..m)
            .map(|v| h.partial_derivative(v).evaluate(q))
            .collect::<Result<Vec<_>>>()?
            .iter()
            .all(|e| field.is_zero(e));
        if h_partials_vanish {
            out.case = CaseTag::Case4Singular;
        } else {
            out.verdict = if r == codim { Verdict::Nonsingular } else { Verdict::Singular };
        }
    }
    Ok(out)
}

/// The linear system whose solutions `t` make every `x`-partial of `h`
/// vanish at `(P, t)`: `Σ_i t_i ∂f_i/∂x_j(P) = -∂f/∂x_j(P)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Case4System<E> {
    /// Row `j` holds `∂f_i/∂x_j(P)` for `i = 1..n`.
    pub matrix: Vec<Vec<E>>,
    pub rhs: Vec<E>,
    pub solutions: AffineSolutions<E>,
}

pub fn case4_system<F: Field>(fs: &ForcingSystem<F>, p: &[F::Elem]) -> Result<Case4System<F::Elem>> {
    require_ideal_case(fs)?;
    let field = fs.base().field();
    let m = fs.base().nvars();
    if p.len() != m {
        return Err(Error::DimensionMismatch("point has the wrong number of coordinates".into()));
    }
    let gens = fs.generators()?;
    let f = fs.forced_element()?;
    for g in gens.iter().chain(std::iter::once(&f)) {
        if !field.is_zero(&g.evaluate(p)?) {
            return Err(Error::Precondition(format!("{g} does not vanish at the point")));
        }
    }
    let matrix: Vec<Vec<F::Elem>> = (0..m)
        .map(|j| gens.iter().map(|g| g.partial_derivative(j).evaluate(p)).collect())
        .collect::<Result<_>>()?;
    let rhs: Vec<F::Elem> =
        (0..m).map(|j| f.partial_derivative(j).evaluate(p).map(|e| field.neg(&e))).collect::<Result<_>>()?;
    let solutions = solve_affine(field, &matrix, &rhs, gens.len())?;
    Ok(Case4System { matrix, rhs, solutions })
}

/// Relations of `B` plus all `codim x codim` minors of the Jacobian.
pub fn singular_locus_ideal<F: Field>(fs: &ForcingSystem<F>, codim: usize) -> Result<IdealHandle<F>> {
    let j = jacobian(fs);
    let cols = fs.algebra().nvars();
    if codim > j.len().min(cols) {
        return Err(Error::Precondition(format!(
            "codimension {codim} exceeds the Jacobian size {}x{cols}",
            j.len()
        )));
    }
    let alg = fs.algebra();
    let gens: Vec<Polynomial<F>> = minors(&j, codim, alg.ring()).into_iter().filter(|p| !p.is_zero()).collect();
    IdealHandle::new(alg.clone(), gens)
}
