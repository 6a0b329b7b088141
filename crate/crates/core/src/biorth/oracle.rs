use super::{check_distinct, BiorthResult, Normalization, Path};
use crate::error::{Error, Result};
use crate::family::MqfFamily;
use crate::numeric::{linalg, Scalar};

/// Coefficient of `x^n` in each `B_k`: `prod_{j<k} beta_j prod_{k<=j<n} delta_j`.
/// Since the target is monic, `sum_k f_k lead_k = 1` pins the expansion scale.
pub fn leading_weights<F: Scalar>(family: &MqfFamily<F>, n: usize) -> Result<Vec<F>> {
    let coeffs = (0..n).map(|k| family.coefficients(k)).collect::<Result<Vec<_>>>()?;
    let mut suffix = vec![F::one(); n + 1];
    for k in (0..n).rev() {
        suffix[k] = suffix[k + 1].clone() * coeffs[k].delta.clone();
    }
    let mut prefix = F::one();
    let mut out = Vec::with_capacity(n + 1);
    for k in 0..=n {
        out.push(prefix.clone() * suffix[k].clone());
        if k < n {
            prefix = prefix * coeffs[k].beta.clone();
        }
    }
    Ok(out)
}

/// Null vector of `M[l][k] = m_k(mu_l)`, `l < n`, `k <= n`.
pub fn oracle_nullspace<F: Scalar>(
    family: &MqfFamily<F>,
    mu: &[F],
    normalization: Normalization,
) -> Result<BiorthResult<F>> {
    check_distinct(mu)?;
    let n = mu.len();
    let rows = mu.iter().map(|m| family.moments(n, m)).collect::<Result<Vec<_>>>()?;
    let null = linalg::nullspace(rows, n + 1);
    if null.len() != 1 {
        return Err(Error::NullSpaceDimension(null.len()));
    }
    let mut res = BiorthResult::new(null.into_iter().next().unwrap(), Path::Oracle);
    match normalization {
        Normalization::LeadingOne => res.to_leading_one()?,
        Normalization::Expansion => {
            let lead = leading_weights(family, n)?;
            let c = res.f.iter().zip(&lead).fold(F::zero(), |acc, (a, b)| acc + a.clone() * b.clone());
            let scale = res.f.iter().zip(&lead).map(|(a, b)| a.magnitude() * b.magnitude()).sum::<f64>();
            if c.is_negligible(scale) {
                res.warnings.push("mixed basis cannot reach the monic target; using leading-one scaling".into());
                res.to_leading_one()?;
            } else {
                res.rescale(&c);
            }
        }
    }
    Ok(res)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::Rational;

    fn q(p: i64, d: i64) -> Rational {
        Rational::from_ratio(p, d)
    }

    #[test]
    fn jacobi_null_vectors() {
        let fam = MqfFamily::<Rational>::jacobi();
        let r = oracle_nullspace(&fam, &[q(1, 1)], Normalization::LeadingOne).unwrap();
        assert_eq!(r.f, vec![q(-1, 2), q(1, 1)]);
        let r = oracle_nullspace(&fam, &[q(1, 1), q(2, 1)], Normalization::LeadingOne).unwrap();
        assert_eq!(r.f, vec![q(1, 6), q(-1, 1), q(1, 1)]);
        let r = oracle_nullspace(&fam, &[q(1, 1), q(2, 1)], Normalization::Expansion).unwrap();
        assert_eq!(r.f, vec![q(1, 1), q(-6, 1), q(6, 1)]);
        let r = oracle_nullspace(&fam, &[], Normalization::Expansion).unwrap();
        assert_eq!(r.f, vec![q(1, 1)]);
    }

    #[test]
    fn rank_deficiency() {
        // m_k = 0 for k >= 1 leaves a two-dimensional null space at n = 2
        let z = vec![q(0, 1)];
        let fam = MqfFamily::polynomial("flat", z.clone(), z, vec![q(1, 1)], vec![q(0, 1)]);
        let err = oracle_nullspace(&fam, &[q(1, 1), q(2, 1)], Normalization::LeadingOne);
        assert_eq!(err, Err(Error::NullSpaceDimension(2)));
    }
}
