//! Dispatch of a job document to the engine.

use std::collections::BTreeMap;

use forca_core::cech::{pairs, CechCocycle, Coboundary, CocycleCheck};
use forca_core::charp::{class_degree, frobenius_member, LevelOutcome};
use forca_core::field::Field;
use forca_core::forcing::{FiberClass, ForcingSystem};
use forca_core::gb::{check_solution, is_groebner_basis, PresentationRef, RingPresentation};
use forca_core::singular::{
    classify_base_point, classify_point, default_algebra_dimension, jacobian, ring_dimension,
    singular_locus_ideal, CaseTag,
};
use forca_core::{EngineConfig, Error, Grading, MonomialOrder, Polynomial, PrimeField, Rationals, RingRef};
use serde::de::DeserializeOwned;
use serde_json::{json, Value};

use crate::document::*;
use crate::report::{EngineInfo, Report};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum JobError {
    /// The document does not match the schema.
    Schema(String),
    /// Well-formed document with unusable data (syntax, unknown variable,
    /// violated precondition).
    Input(String),
    /// A resource cap was hit.
    Resource(String),
    /// A witness failed re-verification.
    Verification(String),
}

impl JobError {
    pub fn exit_code(&self) -> u8 {
        match self {
            JobError::Schema(_) | JobError::Input(_) => 2,
            JobError::Resource(_) => 3,
            JobError::Verification(_) => 4,
        }
    }
}

impl std::fmt::Display for JobError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            JobError::Schema(m) => write!(f, "schema error: {m}"),
            JobError::Input(m) => write!(f, "input error: {m}"),
            JobError::Resource(m) => write!(f, "resource limit: {m}"),
            JobError::Verification(m) => write!(f, "witness verification failed: {m}"),
        }
    }
}

impl From<Error> for JobError {
    fn from(e: Error) -> Self {
        match e {
            Error::Aborted(m) => JobError::Resource(m),
            other => JobError::Input(other.to_string()),
        }
    }
}

type JobResult<T> = std::result::Result<T, JobError>;

/// Command-line overrides of the document's ring block and engine caps.
#[derive(Clone, Debug, Default)]
pub struct RunOptions {
    pub order: Option<MonomialOrder>,
    pub max_pairs: Option<usize>,
    pub characteristic: Option<u64>,
    pub emax: Option<u32>,
}

pub fn parse_document(text: &str) -> JobResult<JobDocument> {
    serde_json::from_str(text).map_err(|e| JobError::Schema(e.to_string()))
}

pub fn run_job(doc: &JobDocument, opts: &RunOptions) -> JobResult<Report> {
    if doc.task == Task::Corpus {
        return Err(JobError::Schema("`corpus` takes a directory, not a document".into()));
    }
    let characteristic = opts.characteristic.unwrap_or(doc.ring.characteristic);
    let order = match (opts.order, &doc.ring.order) {
        (Some(o), _) => o,
        (None, Some(s)) => s.parse().map_err(|e: Error| JobError::Schema(e.to_string()))?,
        (None, None) => MonomialOrder::DegRevLex,
    };
    let mut config = EngineConfig::default();
    if let Some(n) = opts.max_pairs {
        config.max_pairs = n;
    }
    let (field_name, (result, warnings)) = if characteristic == 0 {
        ("QQ".to_string(), run_with(Rationals, doc, order, config, opts)?)
    } else {
        let field = PrimeField::new(characteristic).map_err(|e| JobError::Schema(e.to_string()))?;
        (field.name(), run_with(field, doc, order, config, opts)?)
    };
    Ok(Report {
        task: doc.task.as_str().into(),
        name: doc.name.clone(),
        section: doc.section.clone(),
        engine: EngineInfo {
            field: field_name,
            characteristic,
            order: order.to_string(),
            max_pairs: config.max_pairs,
            max_basis: config.max_basis,
            max_degree: config.max_degree,
        },
        result,
        warnings,
    })
}

/// Keys of `expect` missing from, or different in, the report's result.
pub fn expectation_mismatches(doc: &JobDocument, report: &Report) -> Vec<String> {
    let Some(expect) = &doc.expect else {
        return Vec::new();
    };
    expect
        .iter()
        .filter_map(|(k, want)| match report.result.get(k) {
            Some(got) if got == want => None,
            Some(got) => Some(format!("{k}: expected {want}, got {got}")),
            None => Some(format!("{k}: missing from result")),
        })
        .collect()
}

fn payload<T: DeserializeOwned>(v: &Value) -> JobResult<T> {
    if v.is_null() {
        return Err(JobError::Schema("missing `input` block".into()));
    }
    serde_json::from_value(v.clone()).map_err(|e| JobError::Schema(format!("input: {e}")))
}

struct Job<'a, F: Field> {
    doc: &'a JobDocument,
    pres: PresentationRef<F>,
    opts: &'a RunOptions,
    warnings: Vec<String>,
}

fn run_with<F: Field>(
    field: F,
    doc: &JobDocument,
    order: MonomialOrder,
    config: EngineConfig,
    opts: &RunOptions,
) -> JobResult<(Value, Vec<String>)> {
    let pres = RingPresentation::parse(field, &doc.ring.variables, &doc.ring.relations, order, config)?;
    let mut job = Job { doc, pres, opts, warnings: Vec::new() };
    let result = match doc.task {
        Task::Gb => job.gb()?,
        Task::Member => job.member()?,
        Task::Radical => job.radical()?,
        Task::Fiber => job.fiber()?,
        Task::Section => job.section()?,
        Task::CocycleCheck => job.cocycle_check()?,
        Task::CechToForcing => job.cech_to_forcing()?,
        Task::Coboundary => job.coboundary()?,
        Task::Localize => job.localize()?,
        Task::Jacobian => job.jacobian()?,
        Task::Classify => job.classify()?,
        Task::Locus => job.locus()?,
        Task::Frobenius => job.frobenius()?,
        Task::Degree => job.degree()?,
        Task::Derivation => job.derivation()?,
        Task::Corpus => unreachable!("rejected in run_job"),
    };
    Ok((result, job.warnings))
}

fn strings<F: Field>(ps: &[Polynomial<F>]) -> Vec<String> {
    ps.iter().map(ToString::to_string).collect()
}

fn polys<F: Field>(pres: &PresentationRef<F>, texts: &[String]) -> JobResult<Vec<Polynomial<F>>> {
    texts.iter().map(|t| pres.poly(t).map_err(JobError::from)).collect()
}

fn point<F: Field>(ring: &RingRef<F>, coords: &[Scalar]) -> JobResult<Vec<F::Elem>> {
    if coords.len() != ring.nvars() {
        return Err(JobError::Input(format!(
            "point has {} coordinates, the ring has {} variables",
            coords.len(),
            ring.nvars()
        )));
    }
    coords
        .iter()
        .map(|c| match c {
            Scalar::Int(n) => Ok(ring.field().from_i64(*n)),
            Scalar::Text(t) => forca_core::parse::parse_polynomial(t, ring)?
                .as_constant()
                .ok_or_else(|| JobError::Input(format!("coordinate `{t}` is not a constant"))),
        })
        .collect()
}

fn elems<F: Field>(field: &F, v: &[F::Elem]) -> Vec<String> {
    v.iter().map(|e| field.format(e)).collect()
}

fn forcing_system<F: Field>(pres: &PresentationRef<F>, input: ForcingInput) -> JobResult<ForcingSystem<F>> {
    match input {
        ForcingInput { generators: Some(g), element: Some(f), matrix: None, vector: None } => {
            Ok(ForcingSystem::ideal_case(pres.clone(), polys(pres, &g)?, pres.poly(&f)?)?)
        }
        ForcingInput { generators: None, element: None, matrix: Some(a), vector: Some(s) } => {
            let a = a.iter().map(|row| polys(pres, row)).collect::<JobResult<Vec<_>>>()?;
            Ok(ForcingSystem::new(pres.clone(), a, polys(pres, &s)?)?)
        }
        _ => Err(JobError::Schema(
            "forcing data needs either `generators` and `element`, or `matrix` and `vector`".into(),
        )),
    }
}

fn cocycle<F: Field>(pres: &PresentationRef<F>, input: &CocycleInput) -> JobResult<CechCocycle<F>> {
    let gens = polys(pres, &input.generators)?;
    let n = gens.len();
    let mut nums: BTreeMap<(usize, usize), Polynomial<F>> = BTreeMap::new();
    for (key, text) in &input.numerators {
        let parsed: Option<(usize, usize)> = key
            .split_once(',')
            .and_then(|(i, j)| Some((i.trim().parse().ok()?, j.trim().parse().ok()?)));
        match parsed {
            Some((i, j)) if 1 <= i && i < j && j <= n => {
                nums.insert((i - 1, j - 1), pres.poly(text)?);
            }
            _ => return Err(JobError::Schema(format!("numerator key `{key}` is not a pair i,j with 1 <= i < j <= {n}"))),
        }
    }
    let numerators = pairs(n)
        .into_iter()
        .map(|ij| nums.remove(&ij).unwrap_or_else(|| Polynomial::zero(pres.ring())))
        .collect();
    let c = CechCocycle::new(pres.clone(), gens, input.m, numerators)?;
    if input.restrict.is_empty() {
        Ok(c)
    } else {
        Ok(c.restrict(polys(pres, &input.restrict)?)?)
    }
}

fn verified(ok: bool, what: &str) -> JobResult<()> {
    if ok {
        Ok(())
    } else {
        Err(JobError::Verification(what.into()))
    }
}

impl<F: Field> Job<'_, F> {
    fn input<T: DeserializeOwned>(&self) -> JobResult<T> {
        payload(&self.doc.input)
    }

    fn gb(&mut self) -> JobResult<Value> {
        let input: GbInput = self.input()?;
        let ideal = self.pres.ideal(polys(&self.pres, &input.generators)?)?;
        if input.eliminate.is_empty() {
            let basis = ideal.groebner()?.to_vec();
            verified(is_groebner_basis(&basis), "basis fails the S-pair test")?;
            let unit = ideal.is_unit()?;
            let dimension = if unit { Value::Null } else { json!(ideal.krull_dim()?) };
            return Ok(json!({ "basis": strings(&basis), "unit": unit, "dimension": dimension }));
        }
        let ring = self.pres.ring();
        let vars = input
            .eliminate
            .iter()
            .map(|n| ring.var_index(n).ok_or_else(|| JobError::Input(format!("unknown variable `{n}`"))))
            .collect::<JobResult<Vec<_>>>()?;
        let elim = ideal.eliminate(&vars)?;
        let basis = elim.groebner()?.to_vec();
        Ok(json!({
            "basis": strings(&basis),
            "variables": elim.presentation().ring().names(),
            "zero": basis.is_empty(),
        }))
    }

    fn member(&mut self) -> JobResult<Value> {
        let input: MemberInput = self.input()?;
        let ideal = self.pres.ideal(polys(&self.pres, &input.ideal)?)?;
        let f = self.pres.poly(&input.element)?;
        let m = ideal.member(&f)?;
        let normal_form = ideal.normal_form(&f)?.to_string();
        let witness = match &m.witness {
            Some(w) => {
                verified(w.verify(&f, &ideal), "membership witness does not recombine")?;
                json!({
                    "coefficients": strings(&w.coefficients),
                    "relation_coefficients": strings(&w.relation_coefficients),
                })
            }
            None => Value::Null,
        };
        Ok(json!({ "verdict": m.is_member, "normal_form": normal_form, "witness": witness }))
    }

    fn radical(&mut self) -> JobResult<Value> {
        let input: MemberInput = self.input()?;
        let ideal = self.pres.ideal(polys(&self.pres, &input.ideal)?)?;
        let f = self.pres.poly(&input.element)?;
        Ok(json!({ "verdict": ideal.radical_member(&f)? }))
    }

    fn fiber(&mut self) -> JobResult<Value> {
        let input: FiberInput = self.input()?;
        let fs = forcing_system(&self.pres, input.forcing())?;
        let p = point(self.pres.ring(), &input.point)?;
        let field = self.pres.field();
        Ok(match fs.fiber_at(&p)? {
            FiberClass::Empty => json!({ "class": "empty", "dimension": Value::Null }),
            FiberClass::Affine { dimension, particular, directions } => {
                let q: Vec<F::Elem> = p.iter().chain(&particular).cloned().collect();
                verified(fs.algebra().contains_point(&q)?, "particular solution is not on the fiber")?;
                json!({
                    "class": "affine",
                    "dimension": dimension,
                    "particular": elems(field, &particular),
                    "directions": directions.iter().map(|d| elems(field, d)).collect::<Vec<_>>(),
                })
            }
        })
    }

    fn section(&mut self) -> JobResult<Value> {
        let input: SectionInput = self.input()?;
        let fs = forcing_system(&self.pres, input.forcing())?;
        let section = fs.has_section()?;
        if let Some(t) = &section {
            verified(check_solution(fs.matrix(), fs.vector(), t, &self.pres)?, "section does not solve A t = s")?;
        }
        let surjective = if fs.is_ideal_case() { json!(fs.is_surjective_over_base()?) } else { Value::Null };
        Ok(json!({
            "verdict": section.is_some(),
            "section": section.as_deref().map(strings),
            "surjective": surjective,
        }))
    }

    fn cocycle_check(&mut self) -> JobResult<Value> {
        let input: CocycleInput = self.input()?;
        let c = cocycle(&self.pres, &input)?;
        Ok(match c.check_cocycle()? {
            CocycleCheck::Holds => json!({ "verdict": true, "failing_triple": Value::Null }),
            CocycleCheck::Fails { triple: (i, j, k), residue } => json!({
                "verdict": false,
                "failing_triple": [i, j, k],
                "residue": residue.to_string(),
            }),
        })
    }

    fn cech_to_forcing(&mut self) -> JobResult<Value> {
        let input: CocycleInput = self.input()?;
        let fs = cocycle(&self.pres, &input)?.to_forcing()?;
        Ok(json!({
            "matrix": fs.matrix().iter().map(|r| strings(r)).collect::<Vec<_>>(),
            "vector": strings(fs.vector()),
            "relations": strings(fs.forcing_relations()),
            "variables": fs.algebra().ring().names(),
        }))
    }

    fn coboundary(&mut self) -> JobResult<Value> {
        let input: CocycleInput = self.input()?;
        let c = cocycle(&self.pres, &input)?;
        let numerators = strings(c.numerators());
        Ok(match c.is_coboundary()? {
            Coboundary::Witness(t) => {
                let back = CechCocycle::coboundary(c.base().clone(), c.generators().to_vec(), c.exponent(), &t)?;
                for (a, b) in back.numerators().iter().zip(c.numerators()) {
                    verified(c.base().is_zero(&(a - b))?, "coboundary witness does not reproduce the class")?;
                }
                json!({ "verdict": true, "witness": strings(&t), "numerators": numerators })
            }
            Coboundary::NotCoboundary => json!({ "verdict": false, "witness": Value::Null, "numerators": numerators }),
        })
    }

    fn localize(&mut self) -> JobResult<Value> {
        let input: CocycleInput = self.input()?;
        let c = cocycle(&self.pres, &input)?;
        let n = c.generators().len();
        let i = match input.index {
            Some(i) if (1..=n).contains(&i) => i - 1,
            _ => return Err(JobError::Schema(format!("`index` must be between 1 and {n}"))),
        };
        let loc = c.localize(i)?;
        let names = loc.presentation.ring().names().to_vec();
        let forcing = c.to_forcing()?;
        let substitutions: BTreeMap<String, String> = loc
            .substitutions
            .iter()
            .map(|(j, p)| (names[forcing.t_var(*j)].clone(), p.to_string()))
            .collect();
        let mut transitions = Vec::new();
        for j in (0..n).filter(|&j| j != i) {
            let holds = c.transition_holds(i, j)?;
            verified(holds, "transition identity fails")?;
            transitions.push(json!({ "pair": [i + 1, j + 1], "holds": holds }));
        }
        Ok(json!({
            "verdict": true,
            "inverse": loc.inverse,
            "substitutions": substitutions,
            "transitions": transitions,
        }))
    }

    fn jacobian(&mut self) -> JobResult<Value> {
        let input: JacobianInput = self.input()?;
        let fs = forcing_system(&self.pres, input.forcing())?;
        Ok(json!({
            "variables": fs.algebra().ring().names(),
            "rows": jacobian(&fs).iter().map(|r| strings(r)).collect::<Vec<_>>(),
        }))
    }

    fn classify(&mut self) -> JobResult<Value> {
        let input: ClassifyInput = self.input()?;
        let fs = forcing_system(&self.pres, input.forcing())?;
        let pts: Vec<Vec<Scalar>> = match (&input.point, &input.points) {
            (Some(p), None) => vec![p.clone()],
            (None, Some(ps)) => ps.clone(),
            (None, None) if input.base_point.is_some() => Vec::new(),
            _ => return Err(JobError::Schema("give exactly one of `point` and `points`".into())),
        };
        let field = self.pres.field();
        let ring = fs.algebra().ring();
        let dim_r = match input.dim_base {
            Some(d) => d,
            None => ring_dimension(&self.pres)?,
        };
        let mut classifications = Vec::new();
        let mut counts: BTreeMap<String, usize> = BTreeMap::new();
        let mut case4 = false;
        for coords in &pts {
            let q = point(ring, coords)?;
            let c = classify_point(&fs, &q, Some(dim_r), input.dim_algebra)?;
            case4 |= c.case == CaseTag::Case4Singular;
            *counts.entry(c.verdict.to_string()).or_default() += 1;
            classifications.push(json!({
                "point": elems(field, &q),
                "case": c.case.as_str(),
                "rank": c.rank,
                "codim": c.codim,
                "base_rank": c.base_rank,
                "base_codim": c.base_codim,
                "verdict": c.verdict.as_str(),
            }));
        }
        let base = match &input.base_point {
            Some(coords) => {
                let p = point(self.pres.ring(), coords)?;
                let b = classify_base_point(&self.pres, &p, Some(dim_r))?;
                json!({ "point": elems(field, &p), "rank": b.rank, "codim": b.codim, "nonsingular": b.nonsingular })
            }
            None => Value::Null,
        };
        self.warnings.push(
            "cases (1)-(4) assume an algebraically closed field; verdicts here are rank tests at rational points"
                .into(),
        );
        if input.dim_algebra.is_none() {
            self.warnings.push(format!(
                "dim B taken as dim R + n - 1 = {} (assumes R and B are domains and h != 0)",
                default_algebra_dimension(&fs, dim_r)?
            ));
        }
        if case4 {
            self.warnings.push(
                "case 4 uses the right side -df/dx_j(P), the condition that all x-partials of h vanish".into(),
            );
        }
        let mut out = json!({ "classifications": classifications, "verdict_counts": counts });
        if pts.len() == 1 {
            out["verdict"] = classifications[0]["verdict"].clone();
            out["case"] = classifications[0]["case"].clone();
        }
        out["base"] = base;
        Ok(out)
    }

    fn locus(&mut self) -> JobResult<Value> {
        let input: LocusInput = self.input()?;
        let fs = forcing_system(&self.pres, input.forcing())?;
        let codim = match input.codim {
            Some(c) => c,
            None => {
                let dim_b = default_algebra_dimension(&fs, ring_dimension(&self.pres)?)?;
                fs.algebra().nvars().checked_sub(dim_b).ok_or_else(|| JobError::Input("dim B too large".into()))?
            }
        };
        let locus = singular_locus_ideal(&fs, codim)?;
        let unit = locus.is_unit()?;
        let ring = fs.algebra().ring();
        let field = self.pres.field();
        let mut points = Vec::new();
        for coords in &input.points {
            let q = point(ring, coords)?;
            let on_b = fs.algebra().contains_point(&q)?;
            let mut in_locus = on_b;
            for g in locus.gens() {
                in_locus &= field.is_zero(&g.evaluate(&q)?);
            }
            points.push(json!({ "point": elems(field, &q), "on_spec_b": on_b, "in_locus": in_locus }));
        }
        Ok(json!({
            "codim": codim,
            "minors": locus.gens().len(),
            "unit": unit,
            "points": points,
        }))
    }

    fn frobenius(&mut self) -> JobResult<Value> {
        let input: FrobeniusInput = self.input()?;
        let ideal = self.pres.ideal(polys(&self.pres, &input.ideal)?)?;
        let f = self.pres.poly(&input.element)?;
        let e_max = self.opts.emax.or(input.emax).unwrap_or(5);
        let report = frobenius_member(&f, &ideal, e_max)?;
        verified(report.is_monotone(), "membership is true at some q and false at a larger q")?;
        let levels: Vec<Value> = report
            .levels
            .iter()
            .map(|l| match &l.outcome {
                LevelOutcome::Member(w) => json!({
                    "e": l.e, "q": l.q, "member": true,
                    "witness": strings(&w.coefficients),
                    "relation_coefficients": strings(&w.relation_coefficients),
                }),
                LevelOutcome::NotMember => json!({ "e": l.e, "q": l.q, "member": false }),
                LevelOutcome::Aborted(m) => json!({ "e": l.e, "q": l.q, "member": Value::Null, "aborted": m }),
            })
            .collect();
        self.warnings.push("only multiplier z = 1 is searched; this is not a tight closure decision".into());
        Ok(json!({
            "p": report.p,
            "levels": levels,
            "first_inclusion": report.first_inclusion(),
            "verdict": report.first_inclusion().is_some(),
        }))
    }

    fn degree(&mut self) -> JobResult<Value> {
        let input: DegreeInput = self.input()?;
        let grading = match &input.weights {
            Value::Array(items) if items.iter().all(Value::is_i64) => {
                Grading::weights(&items.iter().filter_map(Value::as_i64).collect::<Vec<_>>())?
            }
            w => {
                let degrees: Vec<Vec<i64>> = serde_json::from_value(w.clone())
                    .map_err(|e| JobError::Schema(format!("weights: {e}")))?;
                Grading::new(degrees)?
            }
        };
        let mut out = json!({});
        match (&input.element, &input.f1, &input.f2) {
            (Some(f), Some(f1), Some(f2)) => {
                let p = |t: &String| self.pres.poly(t);
                out["degree"] = json!(class_degree(&p(f)?, &p(f1)?, &p(f2)?, &grading)?);
            }
            (None, None, None) => {}
            _ => return Err(JobError::Schema("a class degree needs `element`, `f1` and `f2`".into())),
        }
        if !input.polynomials.is_empty() {
            let degrees = polys(&self.pres, &input.polynomials)?
                .iter()
                .map(|p| p.weighted_degree(&grading).and_then(|d| d.homogeneous()))
                .collect::<forca_core::Result<Vec<_>>>()?;
            out["degrees"] = json!(degrees);
        }
        if out.as_object().is_some_and(|m| m.is_empty()) {
            return Err(JobError::Schema("nothing to grade: give `element`/`f1`/`f2` or `polynomials`".into()));
        }
        Ok(out)
    }

    fn derivation(&mut self) -> JobResult<Value> {
        let input: DerivationInput = self.input()?;
        let fs = forcing_system(&self.pres, input.forcing())?;
        let report = fs.build_lnd()?;
        let d = &report.derivation;
        let alg = fs.algebra();
        let nilpotency = polys(alg, &input.nilpotency)?
            .iter()
            .map(|g| d.nilpotency_index(g))
            .collect::<forca_core::Result<Vec<_>>>()?;
        let mut kernel = Vec::new();
        for g in polys(alg, &input.kernel)? {
            let image = alg.reduce(&d.apply(&g)?)?;
            kernel.push(json!({
                "element": g.to_string(),
                "image": image.to_string(),
                "in_base": d.is_congruent_to_base(&g)?,
            }));
        }
        self.warnings.extend(report.warnings.iter().cloned());
        Ok(json!({
            "verdict": report.relation_killed,
            "image_t1": d.image_t1().to_string(),
            "image_t2": d.image_t2().to_string(),
            "regular_pair": report.regular_pair,
            "coaction": fs.verify_coaction()?,
            "nilpotency": nilpotency,
            "kernel": kernel,
        }))
    }
}
