//! Field-generic scalars, polynomials, rational functions, linear algebra
//! and root finding shared by the rest of the crate.

pub mod linalg;
pub mod poly;
pub mod rational_function;
pub mod roots;
pub mod scalar;

pub use poly::Polynomial;
pub use rational_function::RationalFunction;
pub use roots::{poly_roots, Root, RootSet, RootValue, DEFAULT_ROOT_TOL};
pub use scalar::{factorial, falling_factorial, parse_rational, pochhammer, Rational, Scalar};
