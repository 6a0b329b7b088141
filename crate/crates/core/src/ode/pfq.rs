//! Generalized hypergeometric series
//! `pFq(u; l; z) = sum_n prod (u_i)_n / prod (l_j)_n z^n / n!`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numeric::Scalar;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PfqControl {
    /// Stop once `|term| <= tail_tol |sum|` and terms are shrinking.
    pub tail_tol: f64,
    pub max_terms: usize,
}

impl Default for PfqControl {
    fn default() -> Self {
        Self { tail_tol: 1e-16, max_terms: 512 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PfqValue {
    pub value: Complex64,
    /// Number of terms summed, including `n = 0`.
    pub terms: usize,
    /// Magnitude of the last term added, a truncation indicator.
    pub last_term: f64,
}

fn is_nonpositive_integer(z: Complex64) -> bool {
    z.im.abs() <= 1e-12 && z.re <= 1e-12 && (z.re - z.re.round()).abs() <= 1e-12
}

pub fn eval_pfq(upper: &[Complex64], lower: &[Complex64], z: Complex64, control: &PfqControl) -> Result<PfqValue> {
    if let Some(bad) = lower.iter().find(|l| is_nonpositive_integer(**l)) {
        return Err(Error::InvalidLowerParameter(bad.to_string()));
    }
    let growing = upper.len() > lower.len() + 1 || (upper.len() == lower.len() + 1 && z.norm() > 1.0);
    let onset = upper.iter().chain(lower).map(|c| c.norm()).fold(0.0, f64::max).ceil() as usize + 2;
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    let mut n = 0usize;
    while n + 1 < control.max_terms {
        let nf = n as f64;
        let mut ratio = z / (nf + 1.0);
        for u in upper {
            ratio *= u + nf;
        }
        for l in lower {
            ratio /= l + nf;
        }
        term *= ratio;
        n += 1;
        if term == Complex64::new(0.0, 0.0) {
            return Ok(PfqValue { value: sum, terms: n, last_term: 0.0 });
        }
        if growing && n >= onset && ratio.norm() >= 1.0 {
            return Err(Error::Divergence(n));
        }
        sum += term;
        if !sum.is_finite() {
            return Err(Error::Divergence(n));
        }
        if term.norm() <= control.tail_tol * sum.norm() && ratio.norm() < 1.0 {
            break;
        }
    }
    Ok(PfqValue { value: sum, terms: n + 1, last_term: term.norm() })
}

/// Real-parameter convenience wrapper.
pub fn eval_pfq_real(upper: &[f64], lower: &[f64], z: f64, control: &PfqControl) -> Result<f64> {
    let c = |v: &[f64]| v.iter().map(|x| Complex64::new(*x, 0.0)).collect::<Vec<_>>();
    Ok(eval_pfq(&c(upper), &c(lower), Complex64::new(z, 0.0), control)?.value.re)
}

/// Terms `t_0..t_n` in any field, `t_0 = 1`.
pub fn pfq_terms<F: Scalar>(upper: &[F], lower: &[F], z: &F, n: usize) -> Result<Vec<F>> {
    for l in lower {
        if l.is_integer() && l.compare(&F::zero()).is_some_and(|o| o.is_le()) {
            return Err(Error::InvalidLowerParameter(l.to_string()));
        }
    }
    let mut out = vec![F::one()];
    for k in 0..n {
        let kf = F::from_int(k as i64);
        let mut t = out[k].clone() * z.clone() / F::from_int(k as i64 + 1);
        for u in upper {
            t = t * (u.clone() + kf.clone());
        }
        for l in lower {
            t = t / (l.clone() + kf.clone());
        }
        out.push(t);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::Rational;

    #[test]
    fn elementary_values() {
        let ctl = PfqControl::default();
        assert_eq!(eval_pfq_real(&[], &[3.5], 0.0, &ctl).unwrap(), 1.0);
        assert!((eval_pfq_real(&[1.0], &[], 0.5, &ctl).unwrap() - 2.0).abs() < 1e-15);
        assert!((eval_pfq_real(&[], &[], 1.0, &ctl).unwrap() - 1f64.exp()).abs() < 1e-15);
        // 2F1(1, 1; 2; z) = -ln(1 - z) / z
        let z = 0.3;
        let want = -(1.0 - z as f64).ln() / z;
        assert!((eval_pfq_real(&[1.0, 1.0], &[2.0], z, &ctl).unwrap() - want).abs() < 1e-14);
        // terminating: 2F1(-2, 1; 1; z) = (1 - z)^2
        assert!((eval_pfq_real(&[-2.0, 1.0], &[1.0], 3.0, &ctl).unwrap() - 4.0).abs() < 1e-14);
    }

    #[test]
    fn invalid_and_divergent() {
        let ctl = PfqControl::default();
        assert!(matches!(eval_pfq_real(&[], &[-2.0], 1.0, &ctl), Err(Error::InvalidLowerParameter(_))));
        assert!(matches!(eval_pfq_real(&[1.0, 1.0], &[], 0.5, &ctl), Err(Error::Divergence(_))));
        assert!(matches!(eval_pfq_real(&[1.0], &[], 2.0, &ctl), Err(Error::Divergence(_))));
        let q = |p, d| Rational::from_ratio(p, d);
        assert!(matches!(pfq_terms(&[], &[q(0, 1)], &q(1, 1), 3), Err(Error::InvalidLowerParameter(_))));
    }

    #[test]
    fn complex_conjugate_parameters_give_real_sums() {
        let ctl = PfqControl::default();
        let u = [Complex64::new(0.5, 1.5), Complex64::new(0.5, -1.5)];
        let v = eval_pfq(&u, &[Complex64::new(2.0, 0.0)], Complex64::new(0.4, 0.0), &ctl).unwrap();
        assert!(v.value.im.abs() <= 1e-10 * v.value.re.abs());
    }

    #[test]
    fn exact_terms() {
        let q = |p, d| Rational::from_ratio(p, d);
        let t = pfq_terms(&[q(1, 2)], &[q(3, 1)], &q(2, 1), 3).unwrap();
        // (1/2)_n / (3)_n * 2^n / n!
        assert_eq!(t, vec![q(1, 1), q(1, 3), q(1, 8), q(1, 24)]);
    }
}
