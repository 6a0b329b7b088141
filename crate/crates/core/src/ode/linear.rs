//! First-order case: `alpha_n = a_0 - n a_1` and likewise for `b, c, d`.
//! The weight then solves `x (s0 - s1 x) y' + (r0 - r1 x) y = 0`.

use crate::error::{Error, Result};
use crate::family::MqfFamily;
use crate::numeric::{Polynomial, RationalFunction, Scalar};

#[derive(Clone, Debug, PartialEq)]
pub struct LinearCoeffs<F> {
    pub a: [F; 2],
    pub b: [F; 2],
    pub c: [F; 2],
    pub d: [F; 2],
}

impl<F: Scalar> LinearCoeffs<F> {
    pub fn new(a: [F; 2], b: [F; 2], c: [F; 2], d: [F; 2]) -> Self {
        Self { a, b, c, d }
    }

    /// Reads the first two coefficients of a polynomial family; fails when a
    /// higher one is nonzero.
    pub fn from_family(family: &MqfFamily<F>) -> Result<Self> {
        let lists = family
            .coefficient_lists()
            .ok_or_else(|| Error::Config("linear ODE needs a polynomial family".into()))?;
        if family.degree().unwrap_or(0) > 1 {
            return Err(Error::Config("linear ODE needs coefficient lists of length at most 2".into()));
        }
        let pair = |v: &[F]| [v.first().cloned().unwrap_or_else(F::zero), v.get(1).cloned().unwrap_or_else(F::zero)];
        Ok(Self::new(pair(lists[0]), pair(lists[1]), pair(lists[2]), pair(lists[3])))
    }

    pub fn map<G: Scalar>(&self, f: impl Fn(&F) -> G) -> LinearCoeffs<G> {
        let m = |v: &[F; 2]| [f(&v[0]), f(&v[1])];
        LinearCoeffs::new(m(&self.a), m(&self.b), m(&self.c), m(&self.d))
    }
}

/// `x (sigma0 - sigma1 x) y' + (rho0 - rho1 x) y = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearOde<F> {
    pub sigma0: F,
    pub sigma1: F,
    pub rho0: F,
    pub rho1: F,
}

pub fn linear_ode<F: Scalar>(k: &LinearCoeffs<F>, mu: &F) -> LinearOde<F> {
    let p0 = k.a[0].clone() + mu.clone() * k.b[0].clone();
    let p1 = k.a[1].clone() + mu.clone() * k.b[1].clone();
    let q0 = k.c[0].clone() + mu.clone() * k.d[0].clone();
    let q1 = k.c[1].clone() + mu.clone() * k.d[1].clone();
    LinearOde { sigma0: p1.clone(), sigma1: q1.clone(), rho0: p0 + p1, rho1: q0 + q1.clone() + q1 }
}

/// `y = x^{e1} (sigma0 - sigma1 x)^{e2} exp(exp_rate x)`.
///
/// `exp_rate` is zero unless `sigma1 = 0`, where the equation becomes
/// `sigma0 x y' = (rho1 x - rho0) y` and the second factor turns exponential.
#[derive(Clone, Debug, PartialEq)]
pub struct ClosedForm<F> {
    pub e1: F,
    pub e2: F,
    pub exp_rate: F,
}

impl ClosedForm<f64> {
    pub fn eval(&self, ode: &LinearOde<f64>, x: f64) -> f64 {
        x.powf(self.e1) * (ode.sigma0 - ode.sigma1 * x).powf(self.e2) * (self.exp_rate * x).exp()
    }
}

pub fn linear_closed_form<F: Scalar>(ode: &LinearOde<F>) -> Result<ClosedForm<F>> {
    if ode.sigma0.is_negligible(ode.rho0.magnitude().max(1.0)) {
        return Err(Error::SigmaZero);
    }
    let e1 = -(ode.rho0.clone() / ode.sigma0.clone());
    if ode.sigma1.is_negligible(ode.sigma0.magnitude()) {
        let exp_rate = ode.rho1.clone() / ode.sigma0.clone();
        return Ok(ClosedForm { e1, e2: F::zero(), exp_rate });
    }
    let e2 = ode.rho0.clone() / ode.sigma0.clone() - ode.rho1.clone() / ode.sigma1.clone();
    Ok(ClosedForm { e1, e2, exp_rate: F::zero() })
}

/// Coefficients that make the weight a pure power `x^{nu(mu)}`.
#[derive(Clone, Debug, PartialEq)]
pub struct PowerWeight<F> {
    pub c: [F; 2],
    pub d: [F; 2],
    pub nu: RationalFunction<F>,
}

/// `c_1 = k a_1, d_1 = k b_1, c_0 = (a_0 - a_1) k, d_0 = (b_0 - b_1) k` and
/// `nu(mu) = -1 - (a_0 + mu b_0) / (a_1 + mu b_1)`.
pub fn power_weight_params<F: Scalar>(a: [F; 2], b: [F; 2], kappa: F) -> Result<PowerWeight<F>> {
    if kappa.is_negligible(1.0) {
        return Err(Error::KappaZero);
    }
    let cross = a[1].clone() * b[0].clone() - a[0].clone() * b[1].clone();
    let scale = a[1].magnitude() * b[0].magnitude() + a[0].magnitude() * b[1].magnitude();
    if cross.is_negligible(scale) {
        return Err(Error::DegenerateAB);
    }
    let c = [(a[0].clone() - a[1].clone()) * kappa.clone(), a[1].clone() * kappa.clone()];
    let d = [(b[0].clone() - b[1].clone()) * kappa.clone(), b[1].clone() * kappa];
    let num = Polynomial::linear(-(a[0].clone() + a[1].clone()), -(b[0].clone() + b[1].clone()));
    let den = Polynomial::linear(a[1].clone(), b[1].clone());
    let nu = RationalFunction::new(num, den)?;
    Ok(PowerWeight { c, d, nu })
}

#[cfg(test)]
mod tests {
    use num_traits::{One, Zero};
    use super::*;
    use crate::numeric::Rational;

    type Rf = RationalFunction<Rational>;

    fn q(p: i64) -> Rational {
        Rational::from_int(p)
    }

    fn k(v: [i64; 8]) -> LinearCoeffs<Rational> {
        LinearCoeffs::new([q(v[0]), q(v[1])], [q(v[2]), q(v[3])], [q(v[4]), q(v[5])], [q(v[6]), q(v[7])])
    }

    fn symbolic(c: &LinearCoeffs<Rational>) -> LinearCoeffs<Rf> {
        c.map(|v| Rf::constant(v.clone()))
    }

    #[test]
    fn jacobi_equation_and_solution() {
        let jac = k([0, -1, 1, 0, 1, -1, 1, 0]);
        let mu = Rf::variable();
        let ode = linear_ode(&symbolic(&jac), &mu);
        let mu_minus_one = mu.clone() - Rf::one();
        assert_eq!(ode.sigma0, -Rf::one());
        assert_eq!(ode.sigma1, -Rf::one());
        assert_eq!(ode.rho0, mu_minus_one);
        assert_eq!(ode.rho1, mu_minus_one);
        let cf = linear_closed_form(&ode).unwrap();
        assert_eq!(cf.e1, mu_minus_one);
        assert_eq!(cf.e2, Rf::zero());
    }

    #[test]
    fn reciprocal_exponent_example() {
        let fam = k([1, 0, 0, -1, 1, 0, 1, -1]);
        let mu = Rf::variable();
        let cf = linear_closed_form(&linear_ode(&symbolic(&fam), &mu)).unwrap();
        // x^{1/mu - 1}: the consistent reading of this family
        assert_eq!(cf.e1, Rf::one() / mu - Rf::one());
        assert_eq!(cf.e2, Rf::zero());
    }

    #[test]
    fn degenerate_cases() {
        let ode = LinearOde { sigma0: q(0), sigma1: q(1), rho0: q(1), rho1: q(0) };
        assert_eq!(linear_closed_form(&ode), Err(Error::SigmaZero));
        let ode = LinearOde { sigma0: q(2), sigma1: q(5), rho0: q(0), rho1: q(3) };
        assert_eq!(linear_closed_form(&ode).unwrap().e1, q(0));
        let flat = k([1, 2, 3, 4, 5, 0, 7, 0]);
        let ode = linear_ode(&flat, &q(1));
        assert_eq!(ode.sigma1, q(0));
        let cf = linear_closed_form(&ode).unwrap();
        assert_eq!(cf.e2, q(0));
        assert_eq!(cf.exp_rate, ode.rho1 / ode.sigma0);
    }

    #[test]
    fn sigma1_zero_solution_satisfies_equation() {
        let ode = LinearOde { sigma0: 2.0, sigma1: 0.0, rho0: -3.0, rho1: 0.5 };
        let cf = linear_closed_form(&ode).unwrap();
        for x in [0.3, 1.0, 2.5] {
            let h = 1e-6;
            let dy = (cf.eval(&ode, x + h) - cf.eval(&ode, x - h)) / (2.0 * h);
            let r = x * (ode.sigma0 - ode.sigma1 * x) * dy + (ode.rho0 - ode.rho1 * x) * cf.eval(&ode, x);
            assert!(r.abs() < 1e-6 * cf.eval(&ode, x).abs().max(1.0), "{r}");
        }
    }

    #[test]
    fn power_weight_recovers_jacobi() {
        let pw = power_weight_params([q(0), q(-1)], [q(1), q(0)], q(1)).unwrap();
        assert_eq!(pw.c, [q(1), q(-1)]);
        assert_eq!(pw.d, [q(1), q(0)]);
        let want = Rf::new(Polynomial::linear(q(-1), q(1)), Polynomial::constant(q(1))).unwrap();
        assert_eq!(pw.nu, want);
        assert_eq!(power_weight_params([q(1), q(2)], [q(2), q(4)], q(1)), Err(Error::DegenerateAB));
        assert_eq!(power_weight_params([q(0), q(-1)], [q(1), q(0)], q(0)), Err(Error::KappaZero));
    }

    #[test]
    fn power_weight_symbolic_rows() {
        // generic a, b, kappa as independent rationals; every row of the
        // parameterization checked against the closed-form solver
        let (a0, a1, b0, b1, kap) = (q(3), q(-2), q(5), q(7), Rational::from_ratio(3, 4));
        let pw = power_weight_params([a0.clone(), a1.clone()], [b0.clone(), b1.clone()], kap.clone()).unwrap();
        assert_eq!(pw.c[1], kap.clone() * a1.clone());
        assert_eq!(pw.d[1], kap.clone() * b1.clone());
        assert_eq!(pw.c[0], (a0.clone() - a1.clone()) * kap.clone());
        assert_eq!(pw.d[0], (b0.clone() - b1.clone()) * kap);
        let coeffs = LinearCoeffs::new([a0, a1], [b0, b1], pw.c.clone(), pw.d.clone());
        let mu = Rf::variable();
        let sym = coeffs.map(|v| Rf::constant(v.clone()));
        let cf = linear_closed_form(&linear_ode(&sym, &mu)).unwrap();
        assert_eq!(cf.e1, pw.nu);
        assert_eq!(cf.e2, Rf::zero());
    }
}
