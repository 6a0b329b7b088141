//! The field abstraction every computation is generic over.
//!
//! Two concrete modes exist: [`Rational`] (arbitrary precision, always in
//! lowest terms) and `f64`. A computation is monomorphised over one of them,
//! so mixing modes is a type error rather than a runtime condition.

use std::cmp::Ordering;
use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar.
pub type Rational = BigRational;

/// Relative threshold below which float quantities count as zero.
pub const FLOAT_ZERO_TOL: f64 = 1e-12;

pub trait Scalar:
    Clone
    + Debug
    + Display
    + PartialEq
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    /// True for modes where `==` is mathematical equality.
    const EXACT: bool;

    fn from_int(n: i64) -> Self;

    /// `p/q`; panics when `q == 0`.
    fn from_ratio(p: i64, q: i64) -> Self;

    /// Best float approximation; NaN when the value has none.
    fn to_f64(&self) -> f64;

    /// Conversion of a float into this mode. Exact modes refuse.
    fn from_f64(x: f64) -> Option<Self>;

    /// Conversion of an exact rational into this mode.
    fn from_rational(r: &Rational) -> Self;

    /// The value as an exact rational, when it is one.
    fn to_rational(&self) -> Option<Rational>;

    /// Zero test: exact equality in exact modes, `|x| <= 1e-12 * scale` for floats.
    fn is_negligible(&self, scale: f64) -> bool;

    /// Magnitude used for pivoting and tolerances.
    fn magnitude(&self) -> f64 {
        self.to_f64().abs()
    }

    fn compare(&self, other: &Self) -> Option<Ordering>;

    fn is_integer(&self) -> bool;
}

impl Scalar for Rational {
    const EXACT: bool = true;

    fn from_int(n: i64) -> Self {
        Rational::from_integer(BigInt::from(n))
    }

    fn from_ratio(p: i64, q: i64) -> Self {
        assert!(q != 0, "zero denominator");
        Rational::new(BigInt::from(p), BigInt::from(q))
    }

    fn to_f64(&self) -> f64 {
        rational_to_f64(self)
    }

    fn from_f64(_x: f64) -> Option<Self> {
        None
    }

    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }

    fn to_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }

    fn is_negligible(&self, _scale: f64) -> bool {
        self.is_zero()
    }

    fn compare(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }

    fn is_integer(&self) -> bool {
        Rational::is_integer(self)
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn from_int(n: i64) -> Self {
        n as f64
    }

    fn from_ratio(p: i64, q: i64) -> Self {
        assert!(q != 0, "zero denominator");
        p as f64 / q as f64
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn from_f64(x: f64) -> Option<Self> {
        Some(x)
    }

    fn from_rational(r: &Rational) -> Self {
        rational_to_f64(r)
    }

    fn to_rational(&self) -> Option<Rational> {
        Rational::from_float(*self)
    }

    fn is_negligible(&self, scale: f64) -> bool {
        self.abs() <= FLOAT_ZERO_TOL * scale.max(f64::MIN_POSITIVE)
    }

    fn compare(&self, other: &Self) -> Option<Ordering> {
        self.partial_cmp(other)
    }

    fn is_integer(&self) -> bool {
        self.fract() == 0.0
    }
}

/// Correctly scaled conversion that survives numerators and denominators
/// beyond the f64 range.
pub fn rational_to_f64(r: &Rational) -> f64 {
    if let (Some(n), Some(d)) = (r.numer().to_f64(), r.denom().to_f64()) {
        if n.is_finite() && d.is_finite() {
            return n / d;
        }
    }
    let nb = r.numer().bits() as i64;
    let db = r.denom().bits() as i64;
    let shift = nb - db - 60;
    let scaled = if shift >= 0 {
        r.numer().abs() / (r.denom() << (shift as usize))
    } else {
        (r.numer().abs() << ((-shift) as usize)) / r.denom()
    };
    let mant = scaled.to_f64().unwrap_or(f64::NAN);
    let v = mant * 2f64.powi(shift as i32);
    if r.is_negative() {
        -v
    } else {
        v
    }
}

/// Parses `"p/q"`, integers, and finite decimals such as `"-0.25"` into an
/// exact rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    if t.is_empty() {
        return Err(Error::Config("empty rational".into()));
    }
    if let Some((int, frac)) = t.split_once('.') {
        if t.contains('/') || frac.contains(['e', 'E']) {
            return Err(Error::Config(format!("cannot parse rational {s:?}")));
        }
        let neg = int.starts_with('-');
        let int_digits = int.trim_start_matches(['-', '+']);
        let digits = format!("{int_digits}{frac}");
        let n = BigInt::from_str(if digits.is_empty() { "0" } else { &digits })
            .map_err(|_| Error::Config(format!("cannot parse rational {s:?}")))?;
        let d = num_traits::pow(BigInt::from(10), frac.len());
        let r = Rational::new(n, d);
        return Ok(if neg { -r } else { r });
    }
    if let Some((p, q)) = t.split_once('/') {
        let p = BigInt::from_str(p.trim())
            .map_err(|_| Error::Config(format!("cannot parse rational {s:?}")))?;
        let q = BigInt::from_str(q.trim())
            .map_err(|_| Error::Config(format!("cannot parse rational {s:?}")))?;
        if q.is_zero() {
            return Err(Error::Config(format!("zero denominator in {s:?}")));
        }
        return Ok(Rational::new(p, q));
    }
    let n = BigInt::from_str(t).map_err(|_| Error::Config(format!("cannot parse rational {s:?}")))?;
    Ok(Rational::from_integer(n))
}

/// Rising factorial `a (a+1) ... (a+n-1)`; `n = 0` gives 1.
pub fn pochhammer<F: Scalar>(a: &F, n: usize) -> F {
    let mut acc = F::one();
    for k in 0..n {
        acc = acc * (a.clone() + F::from_int(k as i64));
    }
    acc
}

/// Falling factorial `a (a-1) ... (a-n+1)`, i.e. `(-1)^n (-a)_n`.
pub fn falling_factorial<F: Scalar>(a: &F, n: usize) -> F {
    let mut acc = F::one();
    for k in 0..n {
        acc = acc * (a.clone() - F::from_int(k as i64));
    }
    acc
}

pub fn factorial<F: Scalar>(n: usize) -> F {
    (1..=n).fold(F::one(), |acc, k| acc * F::from_int(k as i64))
}
