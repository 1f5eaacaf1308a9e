//! Gröbner bases and the decision procedures built on them.
//!
//! Quotient rings `K[x]/J` are never handled by residue arithmetic: every
//! computation adjoins the generators of `J` in the ambient polynomial ring.

mod engine;
mod ideal;
mod module;
mod ring;

pub use engine::{is_groebner_basis, normal_form, s_polynomial};
pub use ideal::{is_regular_pair, IdealHandle, MemberWitness, Membership};
pub use module::{check_solution, solve_linear_over_ring, LinearSolution};
pub use ring::{PresentationRef, RingPresentation};


/// Resource caps for Gröbner computations. Exceeding any of them yields
/// [`crate::Error::Aborted`], never a mathematical verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EngineConfig {
    /// S-pairs examined per basis computation.
    pub max_pairs: usize,
    /// Elements in an intermediate basis.
    pub max_basis: usize,
    /// Total degree of inputs and S-pair lcms.
    pub max_degree: u64,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig { max_pairs: 100_000, max_basis: 20_000, max_degree: 10_000 }
    }
}
