//! Dense univariate polynomials, lowest degree first.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use super::scalar::Scalar;

/// `coeffs[k]` multiplies `x^k`. Trailing zeros are never stored, so the
/// zero polynomial is the empty list.
#[derive(Clone, Debug, PartialEq)]
pub struct Polynomial<F> {
    coeffs: Vec<F>,
}

impl<F: Scalar> Polynomial<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    pub fn constant(c: F) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Self::new(vec![F::zero(), F::one()])
    }

    /// `c0 + c1 x`.
    pub fn linear(c0: F, c1: F) -> Self {
        Self::new(vec![c0, c1])
    }

    /// `prod (x - r)` over the given roots; the empty product is 1.
    pub fn from_roots(roots: &[F]) -> Self {
        roots
            .iter()
            .fold(Self::one(), |acc, r| &acc * &Self::linear(-r.clone(), F::one()))
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<F> {
        self.coeffs
    }

    /// Coefficient of `x^k`, zero beyond the stored range.
    pub fn coeff(&self, k: usize) -> F {
        self.coeffs.get(k).cloned().unwrap_or_else(F::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&F> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &F) -> F {
        self.coeffs
            .iter()
            .rev()
            .fold(F::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + c.to_f64())
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.clone() * F::from_int(k as i64))
                .collect(),
        )
    }

    /// Divides by the leading coefficient. The zero polynomial stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(lead) => {
                let inv = F::one() / lead.clone();
                let mut out = self.scale(&inv);
                if let Some(last) = out.coeffs.last_mut() {
                    *last = F::one();
                }
                out
            }
            None => Self::zero(),
        }
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let lead = divisor.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![F::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = rem[k + dd].clone() / lead.clone();
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].clone() - c.clone() * dc.clone();
            }
            // exact cancellation of the eliminated term, also in float mode
            rem[k + dd] = F::zero();
            quot[k] = c;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    /// Monic greatest common divisor. Meaningful in exact modes; float
    /// callers should not rely on it.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Largest coefficient magnitude, used as a residual scale.
    pub fn max_abs_coeff(&self) -> f64 {
        self.coeffs.iter().map(|c| c.magnitude()).fold(0.0, f64::max)
    }

    /// `p(x + shift)`.
    pub fn shift(&self, shift: &F) -> Self {
        let step = Self::linear(shift.clone(), F::one());
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| &(&acc * &step) + &Self::constant(c.clone()))
    }

    pub fn map<G: Scalar>(&self, f: impl Fn(&F) -> G) -> Polynomial<G> {
        Polynomial::new(self.coeffs.iter().map(f).collect())
    }
}

impl<F: Scalar> Add for &Polynomial<F> {
    type Output = Polynomial<F>;

    fn add(self, rhs: Self) -> Polynomial<F> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<F: Scalar> Sub for &Polynomial<F> {
    type Output = Polynomial<F>;

    fn sub(self, rhs: Self) -> Polynomial<F> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl<F: Scalar> Mul for &Polynomial<F> {
    type Output = Polynomial<F>;

    fn mul(self, rhs: Self) -> Polynomial<F> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![F::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Polynomial::new(out)
    }
}

impl<F: Scalar> Neg for &Polynomial<F> {
    type Output = Polynomial<F>;

    fn neg(self) -> Polynomial<F> {
        Polynomial::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<F: Scalar> $tr for Polynomial<F> {
            type Output = Polynomial<F>;

            fn $m(self, rhs: Self) -> Polynomial<F> {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<F: Scalar> Neg for Polynomial<F> {
    type Output = Polynomial<F>;

    fn neg(self) -> Polynomial<F> {
        -&self
    }
}

impl<F: Scalar> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})x")?,
                _ => write!(f, "({c})x^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::scalar::Rational;

    fn q(p: i64, d: i64) -> Rational {
        Rational::from_ratio(p, d)
    }

    fn poly(c: &[(i64, i64)]) -> Polynomial<Rational> {
        Polynomial::new(c.iter().map(|&(p, d)| q(p, d)).collect())
    }

    #[test]
    fn normalization_trims() {
        let p = poly(&[(1, 1), (0, 1), (0, 1)]);
        assert_eq!(p.degree(), Some(0));
        assert!(poly(&[(0, 1)]).is_zero());
        assert_eq!(Polynomial::<Rational>::zero().degree(), None);
    }

    #[test]
    fn product_degree_adds() {
        let p = poly(&[(1, 2), (3, 1), (-1, 5)]);
        let r = poly(&[(2, 1), (0, 1), (0, 1), (7, 3)]);
        assert_eq!((&p * &r).degree(), Some(5));
    }

    #[test]
    fn div_rem_reconstructs() {
        let p = poly(&[(1, 1), (2, 1), (3, 1), (4, 1), (5, 1)]);
        let d = poly(&[(-1, 3), (0, 1), (2, 1)]);
        let (quot, rem) = p.div_rem(&d);
        assert!(rem.degree().unwrap_or(0) < 2);
        assert_eq!(&(&quot * &d) + &rem, p);
    }

    #[test]
    fn gcd_of_shared_factor() {
        let a = Polynomial::from_roots(&[q(1, 1), q(2, 1), q(-1, 2)]);
        let b = Polynomial::from_roots(&[q(2, 1), q(-1, 2), q(5, 1)]);
        assert_eq!(a.gcd(&b), Polynomial::from_roots(&[q(2, 1), q(-1, 2)]));
    }

    #[test]
    fn shift_matches_evaluation() {
        let p = poly(&[(1, 1), (-3, 1), (0, 1), (2, 1)]);
        let s = p.shift(&q(5, 2));
        for x in [q(0, 1), q(1, 3), q(-7, 2)] {
            assert_eq!(s.eval(&x), p.eval(&(x.clone() + q(5, 2))));
        }
    }
}
