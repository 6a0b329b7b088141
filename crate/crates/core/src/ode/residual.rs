use super::frobenius::FrobeniusOde;
use crate::numeric::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub struct ResidualReport<F> {
    /// Coefficient of `x^{theta + m}` in `L[x^theta sum y_n x^n]`, `m = 0..=K`.
    pub coefficients: Vec<F>,
    /// Largest `M` with coefficients `0..=M` all zero; `None` if the first
    /// one already fails.
    pub vanishes_through: Option<usize>,
    pub first_nonzero: Option<usize>,
    pub max_violation: f64,
}

/// Applies `sum_l (p_l - q_l x) x^l D^l` to the truncated series. Since
/// `x^l D^l x^t = ff(t, l) x^t`, the coefficient at order `theta + m` is
/// `Phat(theta + m) y_m - Qhat(theta + m - 1) y_{m-1}`. `k` is capped at
/// `y.len()`, the first order the truncation itself can spoil.
pub fn ode_residual<F: Scalar>(ode: &FrobeniusOde<F>, theta: &F, y: &[F], k: usize) -> ResidualReport<F> {
    let (p_hat, q_hat) = (ode.p_hat(), ode.q_hat());
    let at = |i: usize| y.get(i).cloned().unwrap_or_else(F::zero);
    let k = k.min(y.len());
    let mut coefficients = Vec::with_capacity(k + 1);
    for m in 0..=k {
        let t = theta.clone() + F::from_int(m as i64);
        let mut c = p_hat.eval(&t) * at(m);
        if m > 0 {
            c = c - q_hat.eval(&(t - F::one())) * at(m - 1);
        }
        coefficients.push(c);
    }
    let scale = y.iter().map(|v| v.magnitude()).fold(1.0, f64::max)
        * ode.p.iter().chain(&ode.q).map(|v| v.magnitude()).fold(1.0, f64::max);
    let first_nonzero = coefficients.iter().position(|c| !c.is_negligible(scale));
    let vanishes_through = match first_nonzero {
        Some(0) => None,
        Some(i) => Some(i - 1),
        None => Some(k),
    };
    let max_violation = coefficients.iter().map(|c| c.magnitude()).fold(0.0, f64::max);
    ResidualReport { coefficients, vanishes_through, first_nonzero, max_violation }
}
