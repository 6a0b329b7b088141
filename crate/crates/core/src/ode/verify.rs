//! Closes the loop from a closed-form weight back to the moment quotients.

use serde::Serialize;

use super::frobenius::{frobenius_ode, indicial_roots, select_theta, ThetaGate};
use super::hyper::hypergeometric_form;
use super::pfq::PfqControl;
use super::quadrature::{integrate, QuadOptions};
use crate::error::{Error, Result};
use crate::family::{MqfFamily, WeightForm};
use crate::numeric::{Scalar, Rational};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct QuotientCheck {
    pub n: usize,
    /// `m_{n+1} / m_n` by quadrature.
    pub quadrature: f64,
    /// `(alpha_n + beta_n mu) / (gamma_n + delta_n mu)`.
    pub family: f64,
    pub rel_error: f64,
}

/// The weight at parameter `mu` as a float function on the support.
pub fn weight_function<F: Scalar>(family: &MqfFamily<F>, mu: f64) -> Result<Box<dyn Fn(f64) -> f64>> {
    match &family.weight_form {
        Some(WeightForm::Power { exponent }) => {
            let ev = |p: &crate::numeric::Polynomial<Rational>| p.map(|c| c.to_f64()).eval(&mu);
            let den = ev(exponent.denominator());
            if den == 0.0 {
                return Err(Error::PoleAt(mu.to_string()));
            }
            let e = ev(exponent.numerator()) / den;
            Ok(Box::new(move |x: f64| x.powf(e)))
        }
        Some(WeightForm::Hypergeometric) => {
            let fam = family.map(|c| c.to_f64());
            let ode = frobenius_ode(&fam, &mu)?;
            let roots = indicial_roots(&ode)?;
            let theta = select_theta(&roots, ode.s, ThetaGate::AtLeastOrder)
                .or_else(|| select_theta(&roots, ode.s, ThetaGate::AnyReal))
                .ok_or_else(|| Error::UnsupportedWeight("no real indicial root".into()))?;
            let form = hypergeometric_form(&ode, &theta)?;
            let ctl = PfqControl::default();
            Ok(Box::new(move |x: f64| form.eval(x, &ctl).unwrap_or(f64::NAN)))
        }
        Some(WeightForm::Bessel) => {
            Err(Error::UnsupportedWeight("Bessel-type weights grow like exp(sqrt x); their moments diverge".into()))
        }
        None => Err(Error::UnsupportedWeight("family has no closed-form weight".into())),
    }
}

/// Quadrature moments `m_0..m_{n_max}` and their consecutive quotients
/// against the family's Moebius factors, `n < n_max`.
pub fn verify_moment_quotient<F: Scalar>(
    family: &MqfFamily<F>,
    n_max: usize,
    mu: f64,
    opts: &QuadOptions,
) -> Result<Vec<QuotientCheck>> {
    let w = weight_function(family, mu)?;
    let fam = family.map(|c| c.to_f64());
    let moments = (0..=n_max)
        .map(|n| integrate(|x| x.powi(n as i32) * w(x), family.support, opts).map(|r| r.value))
        .collect::<Result<Vec<_>>>()?;
    (0..n_max)
        .map(|n| {
            let quadrature = moments[n + 1] / moments[n];
            let family = fam.coefficients(n)?.quotient(&mu)?;
            let rel_error = (quadrature - family).abs() / family.abs().max(f64::MIN_POSITIVE);
            Ok(QuotientCheck { n, quadrature, family, rel_error })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{Polynomial, RationalFunction};

    #[test]
    fn jacobi_quotients() {
        let fam = MqfFamily::<Rational>::jacobi();
        let checks = verify_moment_quotient(&fam, 5, 1.5, &QuadOptions::default()).unwrap();
        assert_eq!(checks.len(), 5);
        assert!(checks.iter().all(|c| c.rel_error < 1e-10), "{checks:?}");
        let c0 = &verify_moment_quotient(&fam, 1, 2.0, &QuadOptions::default()).unwrap()[0];
        assert!((c0.quadrature - 2.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn bessel_and_bare_families_are_unsupported() {
        let fam = MqfFamily::<Rational>::jacobi().with_weight_form(WeightForm::Bessel);
        assert!(matches!(verify_moment_quotient(&fam, 2, 1.0, &QuadOptions::default()), Err(Error::UnsupportedWeight(_))));
        let mut bare = MqfFamily::<Rational>::jacobi();
        bare.weight_form = None;
        assert!(matches!(weight_function(&bare, 1.0), Err(Error::UnsupportedWeight(_))));
    }

    #[test]
    fn wrong_exponent_is_detected() {
        // x^{mu} instead of x^{mu - 1}
        let exponent = RationalFunction::from_poly(Polynomial::x());
        let fam = MqfFamily::<Rational>::jacobi().with_weight_form(WeightForm::Power { exponent });
        let checks = verify_moment_quotient(&fam, 3, 2.0, &QuadOptions::default()).unwrap();
        assert!(checks.iter().all(|c| c.rel_error > 1e-3));
    }
}
