//! Classification of the Frobenius solution as
//! `x^theta s1F(s2-1)(-zeta; 1 - eta; nu x)`.

use num_complex::Complex64;

use super::frobenius::FrobeniusOde;
use super::pfq::{eval_pfq, pfq_terms, PfqControl};
use crate::error::{Error, Result};
use crate::numeric::{poly_roots, Polynomial, RootValue, Scalar, DEFAULT_ROOT_TOL};

/// A series parameter: exact when the underlying root was, else complex.
pub type Param<F> = RootValue<F>;

#[derive(Clone, Debug, PartialEq)]
pub struct HypergeometricForm<F> {
    pub theta: F,
    /// `-zeta_j` for the roots `zeta_j` of `Q`.
    pub upper: Vec<Param<F>>,
    /// `1 - eta_j` for the roots of `P` other than the forced zero.
    pub lower: Vec<Param<F>>,
    /// `q_* / p_*`; zero when `Q` vanishes identically.
    pub nu: F,
    pub s1: usize,
    pub s2: usize,
}

/// Roots with multiplicity. Linear factors are solved in the field itself so
/// symbolic scalars work; higher degrees go through the root finder.
fn roots_of<F: Scalar>(p: &Polynomial<F>) -> Result<Vec<RootValue<F>>> {
    match p.degree() {
        None | Some(0) => Ok(Vec::new()),
        Some(1) => Ok(vec![RootValue::Exact(-(p.coeff(0) / p.coeff(1)))]),
        Some(_) => Ok(poly_roots(p, DEFAULT_ROOT_TOL)?.expanded()),
    }
}

fn map_param<F: Scalar>(r: &RootValue<F>, f: impl Fn(F) -> F, g: impl Fn(Complex64) -> Complex64) -> Param<F> {
    match r {
        RootValue::Exact(v) => RootValue::Exact(f(v.clone())),
        RootValue::Approx(z) => RootValue::Approx(g(*z)),
    }
}

fn nonpositive_integer<F: Scalar>(p: &Param<F>) -> bool {
    match p {
        RootValue::Exact(v) => v.is_integer() && v.compare(&F::zero()).is_some_and(|o| o.is_le()),
        RootValue::Approx(z) => z.im.abs() <= 1e-10 && z.re <= 1e-10 && (z.re - z.re.round()).abs() <= 1e-10,
    }
}

pub fn hypergeometric_form<F: Scalar>(ode: &FrobeniusOde<F>, theta: &F) -> Result<HypergeometricForm<F>> {
    let (big_p, big_q) = ode.recurrence_polys(theta);
    let scale = big_p.coeffs().iter().map(|c| c.magnitude()).fold(1.0, f64::max);
    if big_p.is_zero() || !big_p.coeff(0).is_negligible(scale) {
        return Err(Error::ThetaNotIndicial);
    }
    // drop the forced root eta = 0
    let reduced = Polynomial::new(big_p.coeffs()[1..].to_vec());
    let p_star = big_p.leading().cloned().expect("nonzero P");
    let lower: Vec<Param<F>> = roots_of(&reduced)?
        .iter()
        .map(|eta| map_param(eta, |v| F::one() - v, |z| Complex64::new(1.0, 0.0) - z))
        .collect();
    if let Some(bad) = lower.iter().find(|l| nonpositive_integer(*l)) {
        let shown = match bad {
            RootValue::Exact(v) => v.to_string(),
            RootValue::Approx(z) => z.to_string(),
        };
        return Err(Error::NonpositiveLowerParameter(shown));
    }
    let (upper, nu, s1) = if big_q.is_zero() {
        (Vec::new(), F::zero(), 0)
    } else {
        let upper = roots_of(&big_q)?.iter().map(|z| map_param(z, |v| -v, |c| -c)).collect();
        let q_star = big_q.leading().cloned().expect("nonzero Q");
        (upper, q_star / p_star, big_q.degree().unwrap_or(0))
    };
    Ok(HypergeometricForm { theta: theta.clone(), upper, lower, nu, s1, s2: big_p.degree().unwrap_or(0) })
}

impl<F: Scalar> HypergeometricForm<F> {
    /// `"0F1"` and the like, with the actual parameter counts.
    pub fn label(&self) -> String {
        format!("{}F{}", self.upper.len(), self.lower.len())
    }

    pub fn all_exact(&self) -> bool {
        self.upper.iter().chain(&self.lower).all(|p| matches!(p, RootValue::Exact(_)))
    }

    /// Series coefficients `nu^n prod (u)_n / (prod (l)_n n!)` in the field,
    /// available when every parameter is exact.
    pub fn coefficients(&self, n: usize) -> Result<Vec<F>> {
        let exact = |v: &[Param<F>]| -> Option<Vec<F>> { v.iter().map(|p| p.exact().cloned()).collect() };
        let (Some(u), Some(l)) = (exact(&self.upper), exact(&self.lower)) else {
            return Err(Error::NotRepresentable("irrational hypergeometric parameters".into()));
        };
        pfq_terms(&u, &l, &self.nu, n)
    }

    /// The same coefficients in complex floating point.
    pub fn coefficients_complex(&self, n: usize) -> Vec<Complex64> {
        let nu = self.nu.to_f64();
        let mut out = vec![Complex64::new(1.0, 0.0)];
        for k in 0..n {
            let kf = k as f64;
            let mut t = out[k] * nu / (kf + 1.0);
            for u in &self.upper {
                t *= u.as_complex() + kf;
            }
            for l in &self.lower {
                t /= l.as_complex() + kf;
            }
            out.push(t);
        }
        out
    }

    /// `x^theta pFq(upper; lower; nu x)` for `x > 0`.
    pub fn eval(&self, x: f64, control: &PfqControl) -> Result<f64> {
        let u: Vec<Complex64> = self.upper.iter().map(RootValue::as_complex).collect();
        let l: Vec<Complex64> = self.lower.iter().map(RootValue::as_complex).collect();
        let v = eval_pfq(&u, &l, Complex64::new(self.nu.to_f64() * x, 0.0), control)?.value;
        if v.im.abs() > 1e-10 * v.re.abs().max(1.0) {
            return Err(Error::NotRepresentable(format!("complex weight value {v}")));
        }
        Ok(x.powf(self.theta.to_f64()) * v.re)
    }
}
