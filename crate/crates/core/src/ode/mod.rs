//! The differential equation satisfied by a polynomial-MQF weight, its
//! Frobenius series and hypergeometric classification, plus the numeric
//! checks (pFq and Bessel evaluation, quadrature, residuals) that close the
//! loop back to the moments.

mod bessel;
mod frobenius;
mod hyper;
mod linear;
mod pfq;
mod quadrature;
mod residual;
mod verify;

pub use bessel::{bessel_i, bessel_i_direct, bessel_weight};
pub use frobenius::{
    frak_pq, frobenius_ode, indicial_polynomial, indicial_roots, indicial_roots_reduced, select_theta,
    series_coefficients, to_falling_factorial_basis, FrobeniusOde, LinearInMu, ThetaGate,
};
pub use hyper::{hypergeometric_form, HypergeometricForm, Param};
pub use linear::{linear_closed_form, linear_ode, power_weight_params, ClosedForm, LinearCoeffs, LinearOde, PowerWeight};
pub use pfq::{eval_pfq, eval_pfq_real, pfq_terms, PfqControl, PfqValue};
pub use quadrature::{gauss_legendre, integrate, QuadOptions, QuadResult};
pub use residual::{ode_residual, ResidualReport};
pub use verify::{verify_moment_quotient, weight_function, QuotientCheck};
