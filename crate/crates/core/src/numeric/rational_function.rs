//! Quotients of polynomials in normalized form.
//!
//! The denominator is monic, and in exact modes numerator and denominator are
//! coprime. With `F = Rational` the type is itself a field, which lets the
//! same generic code run with `mu` kept as a symbol.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::poly::Polynomial;
use super::scalar::{Rational, Scalar};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct RationalFunction<F> {
    num: Polynomial<F>,
    den: Polynomial<F>,
}

impl<F: Scalar> RationalFunction<F> {
    pub fn new(num: Polynomial<F>, den: Polynomial<F>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self { num, den }.normalize())
    }

    pub fn from_poly(p: Polynomial<F>) -> Self {
        Self { num: p, den: Polynomial::one() }
    }

    pub fn constant(c: F) -> Self {
        Self::from_poly(Polynomial::constant(c))
    }

    /// The identity function, i.e. the variable itself.
    pub fn variable() -> Self {
        Self::from_poly(Polynomial::x())
    }

    pub fn numerator(&self) -> &Polynomial<F> {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial<F> {
        &self.den
    }

    /// Cancels common factors (exact modes) and makes the denominator monic.
    pub fn normalize(self) -> Self {
        let Self { mut num, mut den } = self;
        if num.is_zero() {
            return Self { num, den: Polynomial::one() };
        }
        if F::EXACT {
            let g = num.gcd(&den);
            if g.degree().unwrap_or(0) > 0 {
                num = num.div_rem(&g).0;
                den = den.div_rem(&g).0;
            }
        }
        let lead = den.leading().expect("nonzero denominator").clone();
        if !lead.is_one() {
            let inv = F::one() / lead;
            num = num.scale(&inv);
            den = den.monic();
        }
        Self { num, den }
    }

    /// Evaluates at `x`, distinguishing poles from removable singularities.
    pub fn eval(&self, x: &F) -> Result<F> {
        let d = self.den.eval(x);
        let n = self.num.eval(x);
        if d.is_negligible(self.den.max_abs_coeff().max(1.0)) {
            if F::EXACT && n.is_zero() {
                return Err(Error::RemovableSingularity(x.to_string()));
            }
            return Err(Error::PoleAt(x.to_string()));
        }
        Ok(n / d)
    }

    pub fn is_constant(&self) -> bool {
        self.num.degree().unwrap_or(0) == 0 && self.den.degree() == Some(0)
    }

    pub fn recip(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }
}

impl<F: Scalar> fmt::Display for RationalFunction<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.degree() == Some(0) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "[{}]/[{}]", self.num, self.den)
        }
    }
}

impl<F: Scalar> Add for RationalFunction<F> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        if self.den == rhs.den {
            return Self { num: &self.num + &rhs.num, den: self.den }.normalize();
        }
        Self {
            num: &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            den: &self.den * &rhs.den,
        }
        .normalize()
    }
}

impl<F: Scalar> Sub for RationalFunction<F> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<F: Scalar> Mul for RationalFunction<F> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        Self { num: &self.num * &rhs.num, den: &self.den * &rhs.den }.normalize()
    }
}

impl<F: Scalar> Div for RationalFunction<F> {
    type Output = Self;

    /// Panics on division by the zero function, like integer division.
    fn div(self, rhs: Self) -> Self {
        assert!(!rhs.num.is_zero(), "division by zero rational function");
        Self { num: &self.num * &rhs.den, den: &self.den * &rhs.num }.normalize()
    }
}

impl<F: Scalar> Neg for RationalFunction<F> {
    type Output = Self;

    fn neg(self) -> Self {
        Self { num: -self.num, den: self.den }
    }
}

impl<F: Scalar> Zero for RationalFunction<F> {
    fn zero() -> Self {
        Self::from_poly(Polynomial::zero())
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl<F: Scalar> One for RationalFunction<F> {
    fn one() -> Self {
        Self::constant(F::one())
    }
}

/// Symbolic field `Q(mu)`.
impl Scalar for RationalFunction<Rational> {
    const EXACT: bool = true;

    fn from_int(n: i64) -> Self {
        Self::constant(Rational::from_int(n))
    }

    fn from_ratio(p: i64, q: i64) -> Self {
        Self::constant(Rational::from_ratio(p, q))
    }

    fn to_f64(&self) -> f64 {
        self.to_rational().map_or(f64::NAN, |r| r.to_f64())
    }

    fn from_f64(_x: f64) -> Option<Self> {
        None
    }

    fn from_rational(r: &Rational) -> Self {
        Self::constant(r.clone())
    }

    fn to_rational(&self) -> Option<Rational> {
        if self.is_constant() {
            Some(self.num.coeff(0))
        } else {
            None
        }
    }

    fn is_negligible(&self, _scale: f64) -> bool {
        self.num.is_zero()
    }

    fn magnitude(&self) -> f64 {
        if self.num.is_zero() {
            0.0
        } else {
            self.to_rational().map_or(1.0, |r| r.to_f64().abs())
        }
    }

    fn compare(&self, other: &Self) -> Option<Ordering> {
        Some(self.to_rational()?.cmp(&other.to_rational()?))
    }

    fn is_integer(&self) -> bool {
        self.to_rational().is_some_and(|r| r.is_integer())
    }
}
