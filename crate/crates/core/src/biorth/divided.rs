//! The node-value route. Dividing the mixed-basis identity by
//! `prod_{j<n} h_j(x)` gives `qtilde(x) = sum_k f_k m_k(x)`; since
//! `m_k(lambda_l) = 0` for `l < k`, sampling at the nodes yields a
//! lower-triangular system for `f`.

use super::{check_distinct, BiorthResult, Path};
use crate::error::{Error, Result};
use crate::family::MqfFamily;
use crate::numeric::Scalar;

/// `lambda_0..lambda_n`.
pub fn lambda_nodes<F: Scalar>(family: &MqfFamily<F>, n: usize) -> Result<Vec<F>> {
    (0..=n).map(|j| family.lambda_node(j)).collect()
}

/// `qtilde(x) = prod_k (x - mu_k) / prod_{j<n} h_j(x)` evaluated directly.
pub fn qtilde_direct<F: Scalar>(family: &MqfFamily<F>, mu: &[F], x: &F) -> Result<F> {
    let num = mu.iter().fold(F::one(), |acc, m| acc * (x.clone() - m.clone()));
    let mut den = F::one();
    for j in 0..mu.len() {
        let (_, h) = family.gh_factors(j)?;
        let v = h.eval(x);
        if v.is_negligible(h.max_abs_coeff() * x.magnitude().max(1.0)) {
            return Err(Error::PoleAt(x.to_string()));
        }
        den = den * v;
    }
    Ok(num / den)
}

/// Closed-form node values
/// `qtilde_l = prod_k (alpha_l + beta_l mu_k) / prod_{k<n} (alpha_l delta_k - beta_l gamma_k)`,
/// which equal `qtilde(lambda_l)` exactly: the `(-1/beta_l)^n` factors of
/// numerator and denominator cancel.
pub fn qtilde_values<F: Scalar>(family: &MqfFamily<F>, mu: &[F]) -> Result<Vec<F>> {
    let n = mu.len();
    let coeffs = (0..=n).map(|k| family.coefficients(k)).collect::<Result<Vec<_>>>()?;
    (0..=n)
        .map(|l| {
            family.lambda_node(l)?;
            let ql = &coeffs[l];
            let num = mu.iter().fold(F::one(), |acc, m| acc * (ql.alpha.clone() + ql.beta.clone() * m.clone()));
            let mut den = F::one();
            for (k, qk) in coeffs.iter().enumerate().take(n) {
                let v = ql.alpha.clone() * qk.delta.clone() - ql.beta.clone() * qk.gamma.clone();
                let scale = ql.alpha.magnitude() * qk.delta.magnitude() + ql.beta.magnitude() * qk.gamma.magnitude();
                if v.is_negligible(scale) {
                    return Err(Error::SingularNode(l, k));
                }
                den = den * v;
            }
            Ok(num / den)
        })
        .collect()
}

/// `ratio_j(lambda_l) = g_j(lambda_l) / h_j(lambda_l)`; `None` at a pole.
fn ratio_at<F: Scalar>(family: &MqfFamily<F>, j: usize, x: &F) -> Result<Option<F>> {
    let (g, h) = family.gh_factors(j)?;
    let hv = h.eval(x);
    if hv.is_negligible(h.max_abs_coeff() * x.magnitude().max(1.0)) {
        return Ok(None);
    }
    Ok(Some(g.eval(x) / hv))
}

/// Lower triangle of `T[l][k] = m_k(lambda_l)`, rows `l = 0..=n` of length
/// `l + 1`. Entries above the diagonal vanish through the factor
/// `g_l(lambda_l) = 0`.
pub fn triangular_system<F: Scalar>(family: &MqfFamily<F>, n: usize) -> Result<Vec<Vec<F>>> {
    let lambda = lambda_nodes(family, n)?;
    let mut rows = Vec::with_capacity(n + 1);
    for (l, lam) in lambda.iter().enumerate() {
        let mut row = Vec::with_capacity(l + 1);
        let mut acc = F::one();
        row.push(acc.clone());
        for j in 0..l {
            let r = ratio_at(family, j, lam)?.ok_or(Error::SingularPivot(l))?;
            acc = acc * r;
            row.push(acc.clone());
        }
        let scale = row.iter().map(|v| v.magnitude()).fold(1.0, f64::max);
        if acc.is_negligible(scale) || !acc.magnitude().is_finite() {
            return Err(Error::SingularPivot(l));
        }
        rows.push(row);
    }
    Ok(rows)
}

/// Forward substitution on `qtilde_l = sum_{k<=l} f_k m_k(lambda_l)`.
pub fn divided_difference_solve<F: Scalar>(family: &MqfFamily<F>, qtilde: &[F]) -> Result<Vec<F>> {
    let n = qtilde.len().checked_sub(1).ok_or(Error::ZeroPolynomial)?;
    let t = triangular_system(family, n)?;
    let mut f: Vec<F> = Vec::with_capacity(n + 1);
    for (l, row) in t.iter().enumerate() {
        let mut acc = qtilde[l].clone();
        for (k, fk) in f.iter().enumerate() {
            acc = acc - row[k].clone() * fk.clone();
        }
        f.push(acc / row[l].clone());
    }
    Ok(f)
}

/// What divides the `k`-th difference level in the recursive tableau.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Reading {
    /// `g_{k-1}(lambda_t) / h_{k-1}(lambda_t)`, the consecutive moment
    /// quotient. Agrees with forward substitution.
    Ratio,
    /// `m_{k-1}(lambda_t)` taken literally as a moment. Kept so tests can show
    /// where it departs from the triangular system.
    Moment,
}

/// Recursive generalized divided differences:
/// `r^0_t = qtilde_t`,
/// `r^k_t = (r^{k-1}_t - r^{k-1}_{k-1}) / d_{k-1}(lambda_t)` for `t >= k`,
/// and `f_k = r^k_k`.
pub fn generalized_divided_differences<F: Scalar>(
    family: &MqfFamily<F>,
    qtilde: &[F],
    reading: Reading,
) -> Result<Vec<F>> {
    let n = qtilde.len().checked_sub(1).ok_or(Error::ZeroPolynomial)?;
    let lambda = lambda_nodes(family, n)?;
    let mut level = qtilde.to_vec();
    let mut f = vec![level[0].clone()];
    for k in 1..=n {
        let prev = level[k - 1].clone();
        let mut next = vec![F::zero(); n + 1];
        for t in k..=n {
            let d = match reading {
                Reading::Ratio => ratio_at(family, k - 1, &lambda[t])?.ok_or(Error::SingularPivot(t))?,
                Reading::Moment => family.moment(k - 1, &lambda[t]).map_err(|_| Error::SingularPivot(t))?,
            };
            if d.is_negligible(1.0) {
                return Err(Error::SingularPivot(t));
            }
            next[t] = (level[t].clone() - prev.clone()) / d;
        }
        f.push(next[k].clone());
        level = next;
    }
    Ok(f)
}

/// `f` from the closed-form node values and forward substitution.
pub fn divided_difference_path<F: Scalar>(family: &MqfFamily<F>, mu: &[F]) -> Result<BiorthResult<F>> {
    check_distinct(mu)?;
    let qtilde = qtilde_values(family, mu)?;
    let f = divided_difference_solve(family, &qtilde)?;
    let mut res = BiorthResult::new(f, Path::DividedDifference);
    res.lambda = Some(lambda_nodes(family, mu.len())?);
    res.qtilde = Some(qtilde);
    Ok(res)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::biorth::expand_in_mixed_basis;
    use crate::numeric::Rational;

    fn q(p: i64, d: i64) -> Rational {
        Rational::from_ratio(p, d)
    }

    fn triangular_family() -> MqfFamily<Rational> {
        let i = |v: &[i64]| v.iter().map(|&x| q(x, 1)).collect::<Vec<_>>();
        MqfFamily::polynomial("t3", i(&[1, -1]), i(&[1, 0]), i(&[1, 0]), i(&[3, -1]))
    }

    #[test]
    fn qtilde_examples() {
        let fam = triangular_family();
        let qt = qtilde_values(&fam, &[q(5, 1)]).unwrap();
        assert_eq!(qt[0], q(3, 1));
        assert_eq!(qtilde_direct(&fam, &[q(5, 1)], &q(-1, 1)).unwrap(), q(3, 1));
        assert_eq!(qtilde_values(&fam, &[]).unwrap(), vec![q(1, 1)]);
        let jac = MqfFamily::<Rational>::jacobi();
        assert_eq!(qtilde_values(&jac, &[q(1, 1), q(2, 1)]), Err(Error::SingularNode(1, 0)));
    }

    #[test]
    fn closed_form_matches_direct() {
        let fam = triangular_family();
        let mu = [q(5, 1), q(-2, 3), q(7, 4), q(11, 1)];
        let qt = qtilde_values(&fam, &mu).unwrap();
        for (l, v) in qt.iter().enumerate() {
            let lam = fam.lambda_node(l).unwrap();
            assert_eq!(*v, qtilde_direct(&fam, &mu, &lam).unwrap());
        }
    }

    #[test]
    fn forward_substitution_matches_mixed_basis() {
        let fam = triangular_family();
        let mu = [q(5, 1)];
        let dd = divided_difference_path(&fam, &mu).unwrap();
        assert_eq!(dd.f, expand_in_mixed_basis(&fam, &mu).unwrap().f);
        assert_eq!(divided_difference_solve(&fam, &[q(9, 2)]).unwrap(), vec![q(9, 2)]);
        let zeros = vec![q(0, 1); 4];
        assert!(divided_difference_solve(&fam, &zeros).unwrap().iter().all(|v| *v == q(0, 1)));
    }

    #[test]
    fn recursive_tableau_readings() {
        let fam = triangular_family();
        let mu = [q(5, 1), q(1, 2), q(-3, 1), q(2, 7)];
        let qt = qtilde_values(&fam, &mu).unwrap();
        let forward = divided_difference_solve(&fam, &qt).unwrap();
        assert_eq!(generalized_divided_differences(&fam, &qt, Reading::Ratio).unwrap(), forward);
        let literal = generalized_divided_differences(&fam, &qt, Reading::Moment).unwrap();
        assert_eq!(literal[0], forward[0]);
        assert_ne!(literal[1], forward[1]);
    }

    #[test]
    fn jacobi_pivot_is_singular() {
        let jac = MqfFamily::<Rational>::jacobi();
        assert_eq!(triangular_system(&jac, 2), Err(Error::SingularPivot(1)));
    }
}
