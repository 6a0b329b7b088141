//! Biorthogonal polynomials for weight families whose consecutive moment
//! quotients are Moebius maps of the parameter.
//!
//! - [`numeric`]: exact/float scalars, polynomials, rational functions, roots
//! - [`family`]: moment-quotient families, moments, nodes, validity predicates
//! - [`biorth`]: the three constructions (mixed basis, generalized divided
//!   differences, moment-matrix null space) and zero location
//! - [`ode`]: the weight's differential equation, Frobenius series,
//!   hypergeometric classification, quadrature and residual checks

pub mod biorth;
pub mod error;
pub mod family;
pub mod numeric;
pub mod ode;

pub use error::{Error, Result};
pub use numeric::{Polynomial, Rational, RationalFunction, Scalar};
