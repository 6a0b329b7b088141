use super::{check_distinct, BiorthResult, Path};
use crate::error::{Error, Result};
use crate::family::MqfFamily;
use crate::numeric::{linalg, Polynomial, Scalar};

/// `B_0..B_n` in the power basis.
#[derive(Clone, Debug, PartialEq)]
pub struct MixedBasis<F> {
    pub n: usize,
    pub basis: Vec<Polynomial<F>>,
}

pub fn mixed_basis<F: Scalar>(family: &MqfFamily<F>, n: usize) -> Result<MixedBasis<F>> {
    let factors = (0..n).map(|k| family.gh_factors(k)).collect::<Result<Vec<_>>>()?;
    // suffix[k] = prod_{k<=j<n} h_j
    let mut suffix = vec![Polynomial::one(); n + 1];
    for k in (0..n).rev() {
        suffix[k] = &suffix[k + 1] * &factors[k].1;
    }
    let mut prefix = Polynomial::one();
    let mut basis = Vec::with_capacity(n + 1);
    for k in 0..=n {
        basis.push(&prefix * &suffix[k]);
        if k < n {
            prefix = &prefix * &factors[k].0;
        }
    }
    Ok(MixedBasis { n, basis })
}

/// `prod_k (x - mu_k)`.
pub fn target_polynomial<F: Scalar>(mu: &[F]) -> Polynomial<F> {
    Polynomial::from_roots(mu)
}

/// Solves `prod (x - mu_k) = sum_k f_k B_k(x)` by matching power-basis
/// coefficients.
pub fn expand_in_mixed_basis<F: Scalar>(family: &MqfFamily<F>, mu: &[F]) -> Result<BiorthResult<F>> {
    check_distinct(mu)?;
    let n = mu.len();
    let mb = mixed_basis(family, n)?;
    let target = target_polynomial(mu);
    let a: Vec<Vec<F>> = (0..=n).map(|i| mb.basis.iter().map(|b| b.coeff(i)).collect()).collect();
    let rhs: Vec<F> = (0..=n).map(|i| target.coeff(i)).collect();
    let f = linalg::solve(a, rhs).ok_or(Error::SingularBasis)?;
    Ok(BiorthResult::new(f, Path::MixedBasis))
}
