//! Exact computer algebra for forcing algebras.
//!
//! The crate is layered bottom-up:
//!
//! * [`field`], [`monomial`], [`poly`], [`parse`]: sparse multivariate
//!   polynomials over the rationals and prime fields.
//! * [`gb`]: Buchberger's algorithm for ideals and submodules of free
//!   modules, and the decision procedures built on it.
//! * [`forcing`], [`cech`], [`singular`], [`charp`]: forcing algebras,
//!   Čech cocycles on `D(f_1, ..., f_n)`, Jacobian classification and
//!   Frobenius-power witnesses.

pub mod cech;
pub mod charp;
pub mod error;
pub mod field;
pub mod forcing;
pub mod gb;
pub mod linalg;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod singular;

pub use error::{Error, Result};
pub use field::{Field, PrimeField, Rationals};
pub use gb::{EngineConfig, IdealHandle, RingPresentation};
pub use monomial::{Monomial, MonomialOrder};
pub use poly::{Grading, PolyRing, Polynomial, RingRef};
