use serde::Serialize;

use super::MqfFamily;
use crate::numeric::Scalar;

/// Predicates needed by the closed-form divided-difference construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidityReport {
    pub n: usize,
    /// `beta_l != 0` for `l = 0..=n`.
    pub beta_nonzero: Vec<bool>,
    /// The nodes `lambda_0..lambda_n` are pairwise distinct.
    pub lambda_distinct: bool,
    /// `cross_condition[l][k]`: `alpha_l delta_k - beta_l gamma_k != 0`,
    /// `l = 0..=n`, `k < n`.
    pub cross_condition: Vec<Vec<bool>>,
    /// `moment_nonzero[l][j]`: `m_j(lambda_l)` is finite and nonzero, `j <= l`.
    pub moment_nonzero: Vec<Vec<bool>>,
    pub theorem3_applicable: bool,
}

pub(super) fn check<F: Scalar>(family: &MqfFamily<F>, n: usize) -> ValidityReport {
    if n == 0 {
        return ValidityReport {
            n,
            beta_nonzero: Vec::new(),
            lambda_distinct: true,
            cross_condition: Vec::new(),
            moment_nonzero: Vec::new(),
            theorem3_applicable: true,
        };
    }
    let coeffs: Vec<_> = (0..=n).map(|l| family.coefficients(l).ok()).collect();
    let beta_nonzero: Vec<bool> = coeffs
        .iter()
        .map(|c| c.as_ref().is_some_and(|q| !q.beta.is_negligible(q.alpha.magnitude().max(1.0))))
        .collect();

    let lambdas: Vec<Option<F>> = (0..=n)
        .map(|l| if beta_nonzero[l] { family.lambda_node(l).ok() } else { None })
        .collect();

    let mut lambda_distinct = lambdas.iter().all(Option::is_some);
    if lambda_distinct {
        'outer: for i in 0..=n {
            for j in i + 1..=n {
                let (a, b) = (lambdas[i].as_ref().unwrap(), lambdas[j].as_ref().unwrap());
                let diff = a.clone() - b.clone();
                if diff.is_negligible(a.magnitude() + b.magnitude()) {
                    lambda_distinct = false;
                    break 'outer;
                }
            }
        }
    }

    let cross_condition: Vec<Vec<bool>> = (0..=n)
        .map(|l| {
            (0..n)
                .map(|k| match (&coeffs[l], &coeffs[k]) {
                    (Some(ql), Some(qk)) => {
                        let v = ql.alpha.clone() * qk.delta.clone() - ql.beta.clone() * qk.gamma.clone();
                        let scale = ql.alpha.magnitude() * qk.delta.magnitude() + ql.beta.magnitude() * qk.gamma.magnitude();
                        !v.is_negligible(scale)
                    }
                    _ => false,
                })
                .collect()
        })
        .collect();

    let moment_nonzero: Vec<Vec<bool>> = (0..=n)
        .map(|l| match &lambdas[l] {
            Some(lam) => match family.moments(l, lam) {
                Ok(ms) => {
                    let scale = ms.iter().map(|m| m.magnitude()).fold(1.0, f64::max);
                    ms.iter().map(|m| !m.is_negligible(scale) && m.magnitude().is_finite()).collect()
                }
                Err(_) => vec![false; l + 1],
            },
            None => vec![false; l + 1],
        })
        .collect();

    let theorem3_applicable = beta_nonzero.iter().all(|b| *b)
        && lambda_distinct
        && cross_condition.iter().flatten().all(|b| *b)
        && moment_nonzero.iter().flatten().all(|b| *b);

    ValidityReport { n, beta_nonzero, lambda_distinct, cross_condition, moment_nonzero, theorem3_applicable }
}
