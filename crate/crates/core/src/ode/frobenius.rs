//! Order-`s` equation `sum_l (p_l - q_l x) x^l y^(l) = 0` of a polynomial MQF
//! and its Frobenius series `x^theta sum y_n x^n`.
//!
//! With `x^l D^l x^t = t(t-1)...(t-l+1) x^t`, write
//! `Phat(t) = sum p_l ff(t, l)` and `Qhat(t) = sum q_l ff(t, l)`. Then
//! `P(x) = Phat(x + theta)`, `Q(x) = Qhat(x + theta)`, the indicial equation
//! is `P(0) = 0`, and `y_n = Q(n-1) / P(n) * y_{n-1}`.

use crate::error::{Error, Result};
use crate::family::MqfFamily;
use crate::numeric::{factorial, poly_roots, Polynomial, RootSet, RootValue, Scalar, DEFAULT_ROOT_TOL};

/// `constant + slope * mu`.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearInMu<F> {
    pub constant: F,
    pub slope: F,
}

impl<F: Scalar> LinearInMu<F> {
    pub fn eval(&self, mu: &F) -> F {
        self.constant.clone() + self.slope.clone() * mu.clone()
    }
}

fn get<F: Scalar>(v: &[F], i: usize) -> F {
    v.get(i).cloned().unwrap_or_else(F::zero)
}

/// `frak_p_j = sum_l P_{l+j} / l!` and `frak_q_j = sum_l (l+j+1) Q_{l+j} / l!`
/// with `P_l = a_l + b_l mu`, `Q_l = c_l + d_l mu`.
pub fn frak_pq<F: Scalar>(a: &[F], b: &[F], c: &[F], d: &[F], j: usize) -> (LinearInMu<F>, LinearInMu<F>) {
    let len = [a.len(), b.len(), c.len(), d.len()].into_iter().max().unwrap_or(0);
    let mut p = LinearInMu { constant: F::zero(), slope: F::zero() };
    let mut q = p.clone();
    for l in 0..len.saturating_sub(j) {
        let inv = F::one() / factorial::<F>(l);
        let w = F::from_int((l + j + 1) as i64) * inv.clone();
        p.constant = p.constant + get(a, l + j) * inv.clone();
        p.slope = p.slope + get(b, l + j) * inv;
        q.constant = q.constant + get(c, l + j) * w.clone();
        q.slope = q.slope + get(d, l + j) * w;
    }
    (p, q)
}

#[derive(Clone, Debug, PartialEq)]
pub struct FrobeniusOde<F> {
    pub s: usize,
    pub p: Vec<F>,
    pub q: Vec<F>,
}

/// `prod_{i<l} (x - i)`.
fn falling_poly<F: Scalar>(l: usize) -> Polynomial<F> {
    (0..l).fold(Polynomial::one(), |acc, i| &acc * &Polynomial::linear(F::from_int(-(i as i64)), F::one()))
}

/// Coefficients `c_l` with `p(x) = sum c_l x(x-1)...(x-l+1)`.
pub fn to_falling_factorial_basis<F: Scalar>(p: &Polynomial<F>) -> Vec<F> {
    let Some(deg) = p.degree() else { return Vec::new() };
    let mut rest = p.clone();
    let mut out = vec![F::zero(); deg + 1];
    for l in (0..=deg).rev() {
        let c = rest.coeff(l);
        if !c.is_zero() {
            rest = &rest - &falling_poly::<F>(l).scale(&c);
        }
        out[l] = c;
    }
    out
}

impl<F: Scalar> FrobeniusOde<F> {
    pub fn new(p: Vec<F>, q: Vec<F>) -> Self {
        let s = p.len().max(q.len()).saturating_sub(1);
        let mut p = p;
        let mut q = q;
        p.resize(s + 1, F::zero());
        q.resize(s + 1, F::zero());
        Self { s, p, q }
    }

    /// The equation whose recurrence polynomials are `big_p` and `big_q` at
    /// exponent `theta`.
    pub fn from_recurrence_polys(big_p: &Polynomial<F>, big_q: &Polynomial<F>, theta: &F) -> Self {
        let minus = -theta.clone();
        let p = to_falling_factorial_basis(&big_p.shift(&minus));
        let q = to_falling_factorial_basis(&big_q.shift(&minus));
        Self::new(p, q)
    }

    /// `Phat(t) = sum p_l ff(t, l)`.
    pub fn p_hat(&self) -> Polynomial<F> {
        self.p.iter().enumerate().fold(Polynomial::zero(), |acc, (l, c)| &acc + &falling_poly::<F>(l).scale(c))
    }

    pub fn q_hat(&self) -> Polynomial<F> {
        self.q.iter().enumerate().fold(Polynomial::zero(), |acc, (l, c)| &acc + &falling_poly::<F>(l).scale(c))
    }

    /// `(P, Q)` at exponent `theta`.
    pub fn recurrence_polys(&self, theta: &F) -> (Polynomial<F>, Polynomial<F>) {
        (self.p_hat().shift(theta), self.q_hat().shift(theta))
    }

    pub fn map<G: Scalar>(&self, f: impl Fn(&F) -> G) -> FrobeniusOde<G> {
        FrobeniusOde { s: self.s, p: self.p.iter().map(&f).collect(), q: self.q.iter().map(&f).collect() }
    }
}

/// `p_j = frak_p_j(mu) / (j!)^2`, `q_j = frak_q_j(mu) / (j! (j+1)!)`.
pub fn frobenius_ode<F: Scalar>(family: &MqfFamily<F>, mu: &F) -> Result<FrobeniusOde<F>> {
    let [a, b, c, d] = family
        .coefficient_lists()
        .ok_or_else(|| Error::Config("the ODE needs a polynomial family".into()))?;
    let s = family.degree().unwrap_or(0);
    let mut p = Vec::with_capacity(s + 1);
    let mut q = Vec::with_capacity(s + 1);
    for j in 0..=s {
        let (fp, fq) = frak_pq(a, b, c, d, j);
        let jf = factorial::<F>(j);
        p.push(fp.eval(mu) / (jf.clone() * jf.clone()));
        q.push(fq.eval(mu) / (jf * factorial::<F>(j + 1)));
    }
    Ok(FrobeniusOde { s, p, q })
}

/// `sum_l (-1)^l p_l (-theta)_l`, which equals `Phat(theta)`.
pub fn indicial_polynomial<F: Scalar>(ode: &FrobeniusOde<F>) -> Polynomial<F> {
    ode.p_hat()
}

/// Indicial roots with multiplicity; [`Error::LeadingZero`] when `p_s = 0`.
pub fn indicial_roots<F: Scalar>(ode: &FrobeniusOde<F>) -> Result<RootSet<F>> {
    let poly = indicial_polynomial(ode);
    let scale = ode.p.iter().map(|v| v.magnitude()).fold(0.0, f64::max).max(1.0);
    if ode.p[ode.s].is_negligible(scale) {
        return Err(Error::LeadingZero { order: ode.s, reduced: poly.degree().unwrap_or(0) });
    }
    poly_roots(&poly, DEFAULT_ROOT_TOL)
}

/// Roots of the indicial polynomial whatever its actual degree.
pub fn indicial_roots_reduced<F: Scalar>(ode: &FrobeniusOde<F>) -> Result<RootSet<F>> {
    poly_roots(&indicial_polynomial(ode), DEFAULT_ROOT_TOL)
}

/// Admissibility gate for the Frobenius exponent.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ThetaGate {
    /// `theta >= s`, enough vanishing derivatives at the origin.
    AtLeastOrder,
    /// `theta >= 1`.
    AtLeastOne,
    /// Any real root.
    AnyReal,
}

/// The largest real indicial root passing `gate`.
pub fn select_theta<F: Scalar>(roots: &RootSet<F>, s: usize, gate: ThetaGate) -> Option<F> {
    let bound = match gate {
        ThetaGate::AtLeastOrder => Some(s as f64),
        ThetaGate::AtLeastOne => Some(1.0),
        ThetaGate::AnyReal => None,
    };
    roots
        .roots
        .iter()
        .filter_map(|r| match &r.value {
            RootValue::Exact(v) => Some(v.clone()),
            v @ RootValue::Approx(_) => v.to_scalar(),
        })
        .filter(|t| bound.is_none_or(|b| t.to_f64() >= b - 1e-12))
        .max_by(|x, y| x.to_f64().total_cmp(&y.to_f64()))
}

/// `y_0 = 1`, `y_n = Q(n-1) / P(n) * y_{n-1}` for `n <= big_n`.
pub fn series_coefficients<F: Scalar>(ode: &FrobeniusOde<F>, theta: &F, big_n: usize) -> Result<Vec<F>> {
    let (big_p, big_q) = ode.recurrence_polys(theta);
    let mut y = vec![F::one()];
    for n in 1..=big_n {
        let nf = F::from_int(n as i64);
        let den = big_p.eval(&nf);
        let scale = big_p.coeffs().iter().map(|c| c.magnitude()).sum::<f64>() * (n as f64).powi(ode.s as i32).max(1.0);
        if den.is_negligible(scale) {
            return Err(Error::Resonance(n));
        }
        let num = big_q.eval(&F::from_int(n as i64 - 1));
        let prev = y[n - 1].clone();
        y.push(num / den * prev);
    }
    Ok(y)
}
