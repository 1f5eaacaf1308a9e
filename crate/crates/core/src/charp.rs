//! Frobenius powers in positive characteristic.
//!
//! Only witnesses with multiplier `z = 1` are searched: a report can show
//! `f^q ∈ I^[q]` (a Frobenius inclusion), never tight-closure membership.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::gb::{IdealHandle, MemberWitness};
use crate::poly::{Grading, Polynomial};

/// `e` with `q = p^e`, if there is one.
fn log_p(q: u64, p: u64) -> Option<u32> {
    let mut e = 0;
    let mut x = q;
    while x > 1 {
        if x % p != 0 {
            return None;
        }
        x /= p;
        e += 1;
    }
    (x == 1).then_some(e)
}

fn require_char<F: Field>(ideal: &IdealHandle<F>) -> Result<u64> {
    match ideal.presentation().characteristic() {
        0 => Err(Error::Precondition("Frobenius powers need positive characteristic".into())),
        p => Ok(p),
    }
}

/// `I^[q] = (f_1^q, ..., f_n^q)` for `q` a power of the characteristic.
pub fn bracket_ideal<F: Field>(ideal: &IdealHandle<F>, q: u64) -> Result<IdealHandle<F>> {
    let p = require_char(ideal)?;
    if q == 0 || log_p(q, p).is_none() {
        return Err(Error::Precondition(format!("{q} is not a power of the characteristic {p}")));
    }
    let q = u32::try_from(q).map_err(|_| Error::Aborted(format!("exponent {q} too large")))?;
    IdealHandle::new(ideal.presentation().clone(), ideal.gens().iter().map(|g| g.pow(q)).collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LevelOutcome<F: Field> {
    /// `f^q = Σ a_i f_i^q` modulo the relations, with the division record.
    Member(MemberWitness<F>),
    NotMember,
    /// A resource cap was hit at this level.
    Aborted(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusLevel<F: Field> {
    pub e: u32,
    pub q: u64,
    pub outcome: LevelOutcome<F>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusReport<F: Field> {
    pub p: u64,
    pub levels: Vec<FrobeniusLevel<F>>,
}

impl<F: Field> FrobeniusReport<F> {
    /// The smallest `q` with a witness.
    pub fn first_inclusion(&self) -> Option<u64> {
        self.levels.iter().find(|l| matches!(l.outcome, LevelOutcome::Member(_))).map(|l| l.q)
    }

    /// No level answers "not a member" after a level with a witness.
    pub fn is_monotone(&self) -> bool {
        let mut seen = false;
        for l in &self.levels {
            match l.outcome {
                LevelOutcome::Member(_) => seen = true,
                LevelOutcome::NotMember if seen => return false,
                _ => {}
            }
        }
        true
    }
}

/// Tests `f^q ∈ I^[q]` for `q = p, p^2, ..., p^e_max`.
///
/// Witnesses are checked against `I^[q]` before they are reported; a cap hit
/// at one level is recorded there and does not stop later levels.
pub fn frobenius_member<F: Field>(
    f: &Polynomial<F>,
    ideal: &IdealHandle<F>,
    e_max: u32,
) -> Result<FrobeniusReport<F>> {
    let p = require_char(ideal)?;
    ideal.presentation().check(f)?;
    if e_max == 0 {
        return Err(Error::Precondition("e_max must be at least 1".into()));
    }
    let mut levels = Vec::with_capacity(e_max as usize);
    let mut fq = f.clone();
    let mut q = 1u64;
    for e in 1..=e_max {
        q = q
            .checked_mul(p)
            .filter(|&q| q <= u32::MAX as u64)
            .ok_or_else(|| Error::Aborted(format!("p^{e} overflows the exponent range")))?;
        fq = fq.pow(p as u32);
        let outcome = match bracket_ideal(ideal, q).and_then(|b| Ok((b.member(&fq)?, b))) {
            Ok((m, b)) => match m.witness {
                Some(w) if m.is_member => {
                    if !w.verify(&fq, &b) {
                        return Err(Error::Aborted(format!("witness at q = {q} does not verify")));
                    }
                    LevelOutcome::Member(w)
                }
                _ => LevelOutcome::NotMember,
            },
            Err(Error::Aborted(msg)) => LevelOutcome::Aborted(msg),
            Err(e) => return Err(e),
        };
        levels.push(FrobeniusLevel { e, q, outcome });
    }
    Ok(FrobeniusReport { p, levels })
}

/// Degree of the class `f / (f_1 f_2)`.
pub fn class_degree<F: Field>(
    f: &Polynomial<F>,
    f1: &Polynomial<F>,
    f2: &Polynomial<F>,
    grading: &Grading,
) -> Result<Vec<i64>> {
    let d = f.weighted_degree(grading)?.homogeneous()?;
    let d1 = f1.weighted_degree(grading)?.homogeneous()?;
    let d2 = f2.weighted_degree(grading)?.homogeneous()?;
    Ok(d.iter().zip(&d1).zip(&d2).map(|((a, b), c)| a - b - c).collect())
}
