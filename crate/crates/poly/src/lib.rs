//! Exact sparse multivariate Laurent polynomials over `Z[i]`.
//!
//! Variables come in two banks (generic weights, deformation parameters) that
//! never mix. Exponents of `x_j` and of the shared `t` are stored in half
//! units so that half-integer weights stay integral.

mod gaussian;
mod monomial;
mod poly;
mod var;

pub use gaussian::{
    exact_quotient, format_gaussian, gi, gi_i, is_unit, rational_inverse, to_rational, GaussianInt,
    GaussianRational,
};
pub use monomial::Monomial;
pub use poly::{product, LaurentPoly};
pub use var::{Bank, Var};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("arithmetic between the generic and deformation banks")]
    CrossBank,
    #[error("substitution image of {0} must be a unit monomial")]
    NonUnitImage(Var),
    #[error("no value assigned to {0}")]
    Unassigned(Var),
    #[error("{0} is zero but occurs with a negative exponent")]
    DivisionByZero(Var),
}
