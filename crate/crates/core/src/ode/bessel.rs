use statrs::function::gamma::{gamma, ln_gamma};

use super::pfq::{eval_pfq_real, PfqControl};
use crate::error::Result;

/// `I_tau(z) = (z/2)^tau / Gamma(tau + 1) * 0F1(; tau + 1; z^2 / 4)`.
pub fn bessel_i(tau: f64, z: f64) -> Result<f64> {
    let series = eval_pfq_real(&[], &[tau + 1.0], z * z / 4.0, &PfqControl::default())?;
    Ok((z / 2.0).powf(tau) / gamma(tau + 1.0) * series)
}

/// Independent check: `sum_k (z/2)^{2k + tau} / (k! Gamma(k + tau + 1))`
/// summed term by term in log space for `terms` terms.
pub fn bessel_i_direct(tau: f64, z: f64, terms: usize) -> f64 {
    if z == 0.0 {
        return if tau == 0.0 { 1.0 } else { 0.0 };
    }
    let lz = (z / 2.0).ln();
    (0..terms)
        .map(|k| {
            let k = k as f64;
            ((2.0 * k + tau) * lz - ln_gamma(k + 1.0) - ln_gamma(k + tau + 1.0)).exp()
        })
        .sum()
}

/// `x^mu I_{mu + 1}(x)`.
pub fn bessel_weight(x: f64, mu_tilde: f64) -> Result<f64> {
    if x == 0.0 {
        return Ok(0.0);
    }
    Ok(x.powf(mu_tilde) * bessel_i(mu_tilde + 1.0, x)?)
}
