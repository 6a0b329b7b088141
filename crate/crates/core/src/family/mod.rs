//! Moebius-quotient families: weights whose moments satisfy
//! `m_{n+1}(mu) = (alpha_n + beta_n mu) / (gamma_n + delta_n mu) * m_n(mu)`
//! with `m_0 = 1`.

mod config;
mod validity;

pub use config::{FamilyConfig, WeightFormConfig};
pub use validity::ValidityReport;

use crate::error::{Error, Result};
use crate::numeric::linalg;
use crate::numeric::{pochhammer, Polynomial, Rational, RationalFunction, Scalar};

/// `(alpha_n, beta_n, gamma_n, delta_n)` for one index.
#[derive(Clone, Debug, PartialEq)]
pub struct Quadruple<F> {
    pub alpha: F,
    pub beta: F,
    pub gamma: F,
    pub delta: F,
}

impl<F: Scalar> Quadruple<F> {
    pub fn new(alpha: F, beta: F, gamma: F, delta: F) -> Self {
        Self { alpha, beta, gamma, delta }
    }

    /// The Moebius factor `(alpha + beta mu) / (gamma + delta mu)`.
    pub fn quotient(&self, mu: &F) -> Result<F> {
        let num = self.alpha.clone() + self.beta.clone() * mu.clone();
        let den = self.gamma.clone() + self.delta.clone() * mu.clone();
        let scale = self.gamma.magnitude() + self.delta.magnitude() * mu.magnitude();
        if den.is_negligible(scale) {
            return Err(Error::PoleAt(mu.to_string()));
        }
        Ok(num / den)
    }

    pub fn map<G: Scalar>(&self, f: impl Fn(&F) -> G) -> Quadruple<G> {
        Quadruple::new(f(&self.alpha), f(&self.beta), f(&self.gamma), f(&self.delta))
    }
}

/// How `alpha_n, ..., delta_n` are generated.
#[derive(Clone, Debug, PartialEq)]
pub enum FamilyKind<F> {
    /// `alpha_n = sum_l a_l (-n)_l`, likewise for `b, c, d`. With at most two
    /// coefficients this is the linear form `alpha_n = a_0 - n a_1`.
    Polynomial { a: Vec<F>, b: Vec<F>, c: Vec<F>, d: Vec<F> },
    /// Explicit quadruples for `n = 0..len`.
    Table(Vec<Quadruple<F>>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Support {
    /// `(0, 1)`
    UnitInterval,
    /// `(0, inf)`
    HalfLine,
}

impl Support {
    pub fn bounds(self) -> (f64, f64) {
        match self {
            Support::UnitInterval => (0.0, 1.0),
            Support::HalfLine => (0.0, f64::INFINITY),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Support::UnitInterval => "(0,1)",
            Support::HalfLine => "(0,inf)",
        }
    }
}

/// Closed-form weight metadata used only by quadrature checks.
#[derive(Clone, Debug, PartialEq)]
pub enum WeightForm {
    /// `x^{e(mu)}` with `e` a rational function of `mu`.
    Power { exponent: RationalFunction<Rational> },
    /// `x^theta pFq(...; nu x)` derived from the family's own ODE.
    Hypergeometric,
    /// The modified-Bessel weight; its moments on the half line diverge.
    Bessel,
}

#[derive(Clone, Debug, PartialEq)]
pub struct MqfFamily<F> {
    pub name: String,
    pub kind: FamilyKind<F>,
    pub support: Support,
    pub weight_form: Option<WeightForm>,
}

fn trim<F: Scalar>(mut v: Vec<F>) -> Vec<F> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

impl<F: Scalar> MqfFamily<F> {
    /// Family with coefficient lists in the `(-n)_l` basis.
    pub fn polynomial(name: impl Into<String>, a: Vec<F>, b: Vec<F>, c: Vec<F>, d: Vec<F>) -> Self {
        Self {
            name: name.into(),
            kind: FamilyKind::Polynomial { a, b, c, d },
            support: Support::HalfLine,
            weight_form: None,
        }
    }

    pub fn table(name: impl Into<String>, rows: Vec<Quadruple<F>>) -> Self {
        Self { name: name.into(), kind: FamilyKind::Table(rows), support: Support::HalfLine, weight_form: None }
    }

    /// Builds a table by sampling `rule` for `n = 0..=n_max`.
    pub fn from_rule(name: impl Into<String>, n_max: usize, rule: impl Fn(usize) -> Quadruple<F>) -> Self {
        Self::table(name, (0..=n_max).map(rule).collect())
    }

    /// `alpha_n = n, beta_n = 1, gamma_n = n + 1, delta_n = 1`; weight
    /// `x^{mu-1}` on `(0,1)`.
    pub fn jacobi() -> Self {
        let i = |v| F::from_int(v);
        let mut fam = Self::polynomial(
            "jacobi",
            vec![i(0), i(-1)],
            vec![i(1), i(0)],
            vec![i(1), i(-1)],
            vec![i(1), i(0)],
        );
        fam.support = Support::UnitInterval;
        fam.weight_form = Some(WeightForm::Power {
            exponent: RationalFunction::from_poly(Polynomial::linear(Rational::from_int(-1), Rational::from_int(1))),
        });
        fam
    }

    pub fn with_support(mut self, support: Support) -> Self {
        self.support = support;
        self
    }

    pub fn with_weight_form(mut self, wf: WeightForm) -> Self {
        self.weight_form = Some(wf);
        self
    }

    /// Number of available indices for table families.
    pub fn table_len(&self) -> Option<usize> {
        match &self.kind {
            FamilyKind::Table(rows) => Some(rows.len()),
            FamilyKind::Polynomial { .. } => None,
        }
    }

    /// `s = max(deg a, deg b, deg c, deg d)` for polynomial families.
    pub fn degree(&self) -> Option<usize> {
        match &self.kind {
            FamilyKind::Polynomial { a, b, c, d } => Some(
                [a, b, c, d]
                    .iter()
                    .map(|v| trim((*v).clone()).len().saturating_sub(1))
                    .max()
                    .unwrap_or(0),
            ),
            FamilyKind::Table(_) => None,
        }
    }

    /// The coefficient lists `(a, b, c, d)` of a polynomial family.
    pub fn coefficient_lists(&self) -> Option<[&[F]; 4]> {
        match &self.kind {
            FamilyKind::Polynomial { a, b, c, d } => Some([a, b, c, d]),
            FamilyKind::Table(_) => None,
        }
    }

    pub fn coefficients(&self, n: usize) -> Result<Quadruple<F>> {
        match &self.kind {
            FamilyKind::Polynomial { a, b, c, d } => {
                let nf = F::from_int(-(n as i64));
                let basis: Vec<F> = (0..[a, b, c, d].iter().map(|v| v.len()).max().unwrap_or(0))
                    .map(|l| pochhammer(&nf, l))
                    .collect();
                let expand = |v: &[F]| {
                    v.iter().zip(&basis).fold(F::zero(), |acc, (coef, bl)| acc + coef.clone() * bl.clone())
                };
                Ok(Quadruple::new(expand(a), expand(b), expand(c), expand(d)))
            }
            FamilyKind::Table(rows) => rows
                .get(n)
                .cloned()
                .ok_or(Error::OutOfRange { index: n, len: rows.len() }),
        }
    }

    /// `m_n(mu) = prod_{l<n} (alpha_l + beta_l mu) / (gamma_l + delta_l mu)`.
    pub fn moment(&self, n: usize, mu: &F) -> Result<F> {
        let mut acc = F::one();
        for l in 0..n {
            acc = acc * self.coefficients(l)?.quotient(mu)?;
        }
        Ok(acc)
    }

    /// `m_0 .. m_n` at `mu`, sharing the running product.
    pub fn moments(&self, n: usize, mu: &F) -> Result<Vec<F>> {
        let mut out = Vec::with_capacity(n + 1);
        let mut acc = F::one();
        out.push(acc.clone());
        for l in 0..n {
            acc = acc * self.coefficients(l)?.quotient(mu)?;
            out.push(acc.clone());
        }
        Ok(out)
    }

    /// `m_n` as a rational function of `mu`, common factors cancelled in
    /// exact modes.
    pub fn moment_rational(&self, n: usize) -> Result<RationalFunction<F>> {
        let mut acc = RationalFunction::constant(F::one());
        for l in 0..n {
            let (g, h) = self.gh_factors(l)?;
            let factor = RationalFunction::new(g, h)?;
            acc = acc * factor;
        }
        Ok(acc)
    }

    /// `lambda_j = -alpha_j / beta_j`, the zero of `g_j`.
    pub fn lambda_node(&self, j: usize) -> Result<F> {
        let q = self.coefficients(j)?;
        if q.beta.is_negligible(q.alpha.magnitude().max(1.0)) {
            return Err(Error::BetaZero(j));
        }
        Ok(-q.alpha / q.beta)
    }

    /// `g_k(x) = alpha_k + beta_k x` and `h_k(x) = gamma_k + delta_k x`.
    pub fn gh_factors(&self, k: usize) -> Result<(Polynomial<F>, Polynomial<F>)> {
        let q = self.coefficients(k)?;
        Ok((Polynomial::linear(q.alpha, q.beta), Polynomial::linear(q.gamma, q.delta)))
    }

    /// `det [m_j(mu_l)]` for `l, j < n` where `n = mu.len()`.
    pub fn existence_determinant(&self, mu: &[F]) -> Result<F> {
        let n = mu.len();
        let rows = mu
            .iter()
            .map(|m| self.moments(n.saturating_sub(1), m).map(|mut v| {
                v.truncate(n);
                v
            }))
            .collect::<Result<Vec<_>>>()?;
        Ok(linalg::determinant(rows))
    }

    pub fn validity_check(&self, n: usize) -> ValidityReport {
        validity::check(self, n)
    }

    /// Converts every coefficient into another arithmetic mode.
    pub fn map<G: Scalar>(&self, f: impl Fn(&F) -> G) -> MqfFamily<G> {
        let kind = match &self.kind {
            FamilyKind::Polynomial { a, b, c, d } => FamilyKind::Polynomial {
                a: a.iter().map(&f).collect(),
                b: b.iter().map(&f).collect(),
                c: c.iter().map(&f).collect(),
                d: d.iter().map(&f).collect(),
            },
            FamilyKind::Table(rows) => FamilyKind::Table(rows.iter().map(|q| q.map(&f)).collect()),
        };
        MqfFamily { name: self.name.clone(), kind, support: self.support, weight_form: self.weight_form.clone() }
    }
}

impl MqfFamily<Rational> {
    pub fn to_mode<G: Scalar>(&self) -> MqfFamily<G> {
        self.map(G::from_rational)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, d: i64) -> Rational {
        Rational::from_ratio(p, d)
    }

    fn qs(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| q(x, 1)).collect()
    }

    fn triangular_family() -> MqfFamily<Rational> {
        MqfFamily::polynomial("t3", qs(&[1, -1]), qs(&[1, 0]), qs(&[1, 0]), qs(&[3, -1]))
    }

    #[test]
    fn jacobi_coefficients() {
        let fam = MqfFamily::<Rational>::jacobi();
        let c = fam.coefficients(4).unwrap();
        assert_eq!(c, Quadruple::new(q(4, 1), q(1, 1), q(5, 1), q(1, 1)));
        let t3 = triangular_family().coefficients(2).unwrap();
        assert_eq!(t3, Quadruple::new(q(3, 1), q(1, 1), q(1, 1), q(5, 1)));
    }

    #[test]
    fn jacobi_moments() {
        let fam = MqfFamily::<Rational>::jacobi();
        assert_eq!(fam.moment(2, &q(1, 1)).unwrap(), q(1, 3));
        assert_eq!(fam.moment(2, &q(2, 1)).unwrap(), q(1, 2));
        assert_eq!(fam.moment(0, &q(-7, 3)).unwrap(), q(1, 1));
        assert_eq!(fam.moment(3, &q(-2, 1)), Err(Error::PoleAt("-2".into())));
    }

    #[test]
    fn jacobi_moment_rational_telescopes() {
        let fam = MqfFamily::<Rational>::jacobi();
        let m3 = fam.moment_rational(3).unwrap();
        let want = RationalFunction::new(Polynomial::x(), Polynomial::linear(q(3, 1), q(1, 1))).unwrap();
        assert_eq!(m3, want);
        for mu in [q(1, 1), q(2, 1), q(5, 1)] {
            assert_eq!(m3.eval(&mu).unwrap(), mu.clone() / (mu + q(3, 1)));
        }
        assert_eq!(fam.moment_rational(0).unwrap(), RationalFunction::constant(q(1, 1)));
        let m1 = fam.moment_rational(1).unwrap();
        assert_eq!(m1, RationalFunction::new(Polynomial::x(), Polynomial::linear(q(1, 1), q(1, 1))).unwrap());
    }

    #[test]
    fn lambda_nodes() {
        let fam = MqfFamily::<Rational>::jacobi();
        assert_eq!(fam.lambda_node(0).unwrap(), q(0, 1));
        assert_eq!(fam.lambda_node(3).unwrap(), q(-3, 1));
        let rows = vec![
            Quadruple::new(q(1, 1), q(1, 1), q(1, 1), q(0, 1)),
            Quadruple::new(q(1, 1), q(2, 1), q(1, 1), q(0, 1)),
            Quadruple::new(q(1, 1), q(0, 1), q(1, 1), q(0, 1)),
        ];
        let fam = MqfFamily::table("beta-gap", rows);
        assert_eq!(fam.lambda_node(2), Err(Error::BetaZero(2)));
        assert_eq!(fam.lambda_node(3), Err(Error::OutOfRange { index: 3, len: 3 }));
    }

    #[test]
    fn gh_factor_examples() {
        let fam = MqfFamily::<Rational>::jacobi();
        let (g, h) = fam.gh_factors(0).unwrap();
        assert_eq!(g, Polynomial::x());
        assert_eq!(h, Polynomial::linear(q(1, 1), q(1, 1)));
        let (g, h) = fam.gh_factors(1).unwrap();
        assert_eq!(g, Polynomial::linear(q(1, 1), q(1, 1)));
        assert_eq!(h, Polynomial::linear(q(2, 1), q(1, 1)));
        let fam = MqfFamily::polynomial("const-h", qs(&[2, -3]), qs(&[1]), qs(&[1]), qs(&[0]));
        let (g, h) = fam.gh_factors(5).unwrap();
        assert_eq!(g, Polynomial::linear(q(17, 1), q(1, 1)));
        assert_eq!(h, Polynomial::constant(q(1, 1)));
    }

    #[test]
    fn existence_determinant_examples() {
        let fam = MqfFamily::<Rational>::jacobi();
        assert_eq!(fam.existence_determinant(&[q(1, 1), q(2, 1)]).unwrap(), q(1, 6));
        assert_eq!(fam.existence_determinant(&[q(7, 2)]).unwrap(), q(1, 1));
        assert_eq!(fam.existence_determinant(&[q(3, 1), q(3, 1)]).unwrap(), q(0, 1));
        assert_eq!(fam.existence_determinant(&[]).unwrap(), q(1, 1));
    }

    #[test]
    fn rule_family_matches_polynomial() {
        let rule = MqfFamily::from_rule("rule", 10, |n| {
            let n = n as i64;
            Quadruple::new(q(1 + n, 1), q(1, 1), q(1, 1), q(3 + n, 1))
        });
        let poly = triangular_family();
        for n in 0..=10 {
            assert_eq!(rule.coefficients(n).unwrap(), poly.coefficients(n).unwrap());
        }
        assert_eq!(rule.moment(6, &q(2, 7)).unwrap(), poly.moment(6, &q(2, 7)).unwrap());
    }

    #[test]
    fn float_family_agrees() {
        let fam = MqfFamily::<Rational>::jacobi().to_mode::<f64>();
        assert!((fam.moment(2, &1.0).unwrap() - 1.0 / 3.0).abs() < 1e-15);
        assert!(fam.moment(1, &-1.0).is_err());
    }
}
