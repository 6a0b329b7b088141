use serde::Serialize;

use crate::error::{Error, Result};
use crate::family::Support;
use crate::numeric::{poly_roots, Polynomial, Scalar, DEFAULT_ROOT_TOL};

/// Imaginary parts below this count as real.
const REAL_TOL: f64 = 1e-10;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ZeroLocationReport {
    /// `(re, im)` of each distinct root, ascending by real part.
    pub roots: Vec<(f64, f64)>,
    pub multiplicities: Vec<usize>,
    pub all_real: bool,
    pub all_simple: bool,
    pub inside_support: bool,
    pub pass: bool,
    pub residual: f64,
}

/// Are all zeros of `p` real, simple and strictly inside `support`?
pub fn zero_location_check<F: Scalar>(p: &Polynomial<F>, support: Support) -> Result<ZeroLocationReport> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let set = poly_roots(p, DEFAULT_ROOT_TOL)?;
    let (lo, hi) = support.bounds();
    let roots: Vec<(f64, f64)> = set.roots.iter().map(|r| r.value.as_complex()).map(|z| (z.re, z.im)).collect();
    let multiplicities: Vec<usize> = set.roots.iter().map(|r| r.multiplicity).collect();
    let all_real = roots.iter().all(|(_, im)| im.abs() <= REAL_TOL);
    let all_simple = multiplicities.iter().all(|m| *m == 1);
    let inside_support = roots.iter().all(|(re, im)| im.abs() <= REAL_TOL && *re > lo && *re < hi);
    Ok(ZeroLocationReport {
        pass: all_real && all_simple && inside_support,
        roots,
        multiplicities,
        all_real,
        all_simple,
        inside_support,
        residual: set.residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::Rational;

    fn poly(c: &[i64]) -> Polynomial<Rational> {
        Polynomial::new(c.iter().map(|&v| Rational::from_int(v)).collect())
    }

    #[test]
    fn examples() {
        let r = zero_location_check(&poly(&[1, -6, 6]), Support::UnitInterval).unwrap();
        assert!(r.pass);
        assert!((r.roots[0].0 - 0.211_324_865_405_187_1).abs() < 1e-10);
        assert!((r.roots[1].0 - 0.788_675_134_594_812_9).abs() < 1e-10);
        assert!(zero_location_check(&poly(&[-1, 2]), Support::UnitInterval).unwrap().pass);
        let c = zero_location_check(&poly(&[1, 0, 1]), Support::UnitInterval).unwrap();
        assert!(!c.all_real && !c.pass);
        let d = zero_location_check(&poly(&[1, -2, 1]).scale(&Rational::from_int(3)), Support::HalfLine).unwrap();
        assert!(!d.all_simple);
        assert!(!zero_location_check(&poly(&[2, -1]), Support::UnitInterval).unwrap().pass);
        assert!(zero_location_check(&poly(&[2, -1]), Support::HalfLine).unwrap().pass);
    }
}
