//! Computer algebra over prime fields: sparse multivariate polynomials,
//! Gröbner bases under grevlex, zero-dimensional quotients and factor-degree
//! patterns of univariate polynomials.

pub mod field;
pub mod groebner;
pub mod monomial;
pub mod poly;
pub mod unipoly;

pub use field::{is_prime, PrimeField, DEFAULT_PRIME};
pub use groebner::{buchberger, buchberger_with_limits, GbLimits, GroebnerBasis, QuotientDim};
pub use monomial::{Monomial, MAX_VARS};
pub use poly::{ring_vars, MultiPoly, Term};
pub use unipoly::{degree_pattern, UniPoly};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FfError {
    #[error("{0} is not an odd prime below 2^31")]
    BadModulus(u64),
    #[error("{0} variables exceed the supported maximum")]
    TooManyVariables(usize),
    #[error("polynomials belong to different rings")]
    RingMismatch,
    #[error("no generators given")]
    EmptyInput,
    #[error("ideal is positive-dimensional")]
    PositiveDimensional,
    #[error("polynomial is not squarefree")]
    SquarefreeFailure,
    #[error("polynomial has degree zero")]
    ConstantPolynomial,
    #[error("Gröbner computation exceeded its budget")]
    BudgetExceeded,
    #[error("parse error: {0}")]
    Parse(String),
}
