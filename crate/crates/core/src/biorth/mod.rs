//! Biorthogonal polynomials `p_n(x; mu_1..mu_n) = sum f_k x^k` with
//! `sum_k f_k m_k(mu_l) = 0` for every `l`.
//!
//! Three constructions are provided and cross-checked:
//! - [`expand_in_mixed_basis`]: expand `prod (x - mu_k)` in the basis
//!   `B_k = prod_{j<k} g_j prod_{k<=j<n} h_j`;
//! - [`divided_difference_path`]: the same coefficients from the node values
//!   of `qtilde(x) = prod (x - mu_k) / prod h_j(x)` through a lower-triangular
//!   system in the moments;
//! - [`oracle_nullspace`]: the null vector of `[m_k(mu_l)]`.

mod divided;
mod mixed;
mod oracle;
mod zeros;

pub use divided::{
    divided_difference_path, divided_difference_solve, generalized_divided_differences, lambda_nodes,
    qtilde_direct, qtilde_values, triangular_system, Reading,
};
pub use mixed::{expand_in_mixed_basis, mixed_basis, target_polynomial, MixedBasis};
pub use oracle::{leading_weights, oracle_nullspace};
pub use zeros::{zero_location_check, ZeroLocationReport};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::family::MqfFamily;
use crate::numeric::{Polynomial, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Path {
    MixedBasis,
    DividedDifference,
    Oracle,
}

impl Path {
    pub fn label(self) -> &'static str {
        match self {
            Path::MixedBasis => "mixed-basis",
            Path::DividedDifference => "divided-difference",
            Path::Oracle => "oracle",
        }
    }
}

impl std::fmt::Display for Path {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.label())
    }
}

/// How the free scalar of `p_n` is fixed.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Normalization {
    /// The coefficients induced by the monic target `prod (x - mu_k)`.
    #[default]
    Expansion,
    /// Highest nonzero coefficient equal to one.
    LeadingOne,
}

#[derive(Clone, Debug, PartialEq)]
pub struct BiorthResult<F> {
    pub f: Vec<F>,
    pub p: Polynomial<F>,
    pub qtilde: Option<Vec<F>>,
    pub lambda: Option<Vec<F>>,
    pub path: Path,
    /// Paths tried before `path`, with the error that rejected each.
    pub fallbacks: Vec<(Path, Error)>,
    pub warnings: Vec<String>,
}

impl<F: Scalar> BiorthResult<F> {
    pub(crate) fn new(f: Vec<F>, path: Path) -> Self {
        let p = Polynomial::new(f.clone());
        Self { f, p, qtilde: None, lambda: None, path, fallbacks: Vec::new(), warnings: Vec::new() }
    }

    pub(crate) fn rescale(&mut self, c: &F) {
        for v in &mut self.f {
            *v = v.clone() / c.clone();
        }
        self.p = Polynomial::new(self.f.clone());
    }

    /// Rescales so the highest nonzero coefficient is one.
    pub fn to_leading_one(&mut self) -> Result<()> {
        let lead = self.p.leading().cloned().ok_or(Error::ZeroPolynomial)?;
        self.rescale(&lead);
        Ok(())
    }
}

/// Relative orthogonality residual accepted from float constructions.
pub const FLOAT_RESIDUAL_TOL: f64 = 1e-10;

pub(crate) fn check_distinct<F: Scalar>(mu: &[F]) -> Result<()> {
    for i in 0..mu.len() {
        for j in i + 1..mu.len() {
            let d = mu[i].clone() - mu[j].clone();
            if d.is_negligible(mu[i].magnitude() + mu[j].magnitude()) {
                return Err(Error::DegenerateMu);
            }
        }
    }
    Ok(())
}

/// Fails with [`Error::NoExistence`] when `det [m_j(mu_l)]` vanishes.
///
/// Exact modes test for zero. In float mode the matrix is Vandermonde-like
/// and its determinant is legitimately tiny for clustered `mu`, so only a
/// determinant below rounding level relative to the Hadamard bound counts.
pub fn check_existence<F: Scalar>(family: &MqfFamily<F>, mu: &[F]) -> Result<()> {
    let det = family.existence_determinant(mu)?;
    if F::EXACT {
        return if det.is_zero() { Err(Error::NoExistence) } else { Ok(()) };
    }
    let mut bound = 1.0;
    for m in mu {
        let row = family.moments(mu.len().saturating_sub(1), m)?;
        bound *= row.iter().take(mu.len()).map(|v| v.magnitude().powi(2)).sum::<f64>().sqrt();
    }
    let ratio = det.magnitude() / bound;
    if !ratio.is_finite() || ratio <= f64::EPSILON.powi(mu.len().max(1) as i32) {
        return Err(Error::NoExistence);
    }
    Ok(())
}

fn recoverable(e: &Error) -> bool {
    matches!(
        e,
        Error::SingularNode(..)
            | Error::SingularPivot(_)
            | Error::BetaZero(_)
            | Error::SingularBasis
            | Error::PoleAt(_)
            | Error::ZeroPolynomial
            | Error::LostAccuracy(_)
    )
}

fn run_path<F: Scalar>(family: &MqfFamily<F>, mu: &[F], path: Path) -> Result<BiorthResult<F>> {
    let res = match path {
        Path::DividedDifference => divided_difference_path(family, mu)?,
        Path::MixedBasis => expand_in_mixed_basis(family, mu)?,
        Path::Oracle => oracle_nullspace(family, mu, Normalization::Expansion)?,
    };
    if res.p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    // The triangular system amplifies rounding roughly geometrically in n, so
    // float results of that path are checked a posteriori.
    if !F::EXACT && path == Path::DividedDifference {
        let worst = relative_residuals(family, mu, &res.f)?.into_iter().fold(0.0, f64::max);
        if !(worst <= FLOAT_RESIDUAL_TOL) {
            return Err(Error::LostAccuracy(format!("{worst:e}")));
        }
    }
    Ok(res)
}

/// Builds `p_n` along `path`, falling back divided-difference -> mixed-basis
/// -> oracle when a construction hits a singular node, pivot or basis, or in
/// float mode when the divided-difference result misses
/// [`FLOAT_RESIDUAL_TOL`].
pub fn biorthogonal_poly<F: Scalar>(
    family: &MqfFamily<F>,
    mu: &[F],
    path: Path,
    normalization: Normalization,
) -> Result<BiorthResult<F>> {
    check_distinct(mu)?;
    check_existence(family, mu)?;
    let chain: &[Path] = match path {
        Path::DividedDifference => &[Path::DividedDifference, Path::MixedBasis, Path::Oracle],
        Path::MixedBasis => &[Path::MixedBasis, Path::Oracle],
        Path::Oracle => &[Path::Oracle],
    };
    let mut fallbacks = Vec::new();
    for &candidate in chain {
        match run_path(family, mu, candidate) {
            Ok(mut res) => {
                for (p, e) in &fallbacks {
                    res.warnings.push(format!("{p} path failed ({e}); fell back to {candidate}"));
                }
                res.fallbacks = fallbacks;
                if normalization == Normalization::LeadingOne {
                    res.to_leading_one()?;
                }
                return Ok(res);
            }
            Err(e) if recoverable(&e) && candidate != Path::Oracle => fallbacks.push((candidate, e)),
            Err(e) => return Err(e),
        }
    }
    unreachable!("the oracle terminates every chain")
}

/// `sum_k f_k m_k(mu_l)` for each `l`.
pub fn orthogonality_residuals<F: Scalar>(family: &MqfFamily<F>, mu: &[F], f: &[F]) -> Result<Vec<F>> {
    let n = f.len().saturating_sub(1);
    mu.iter()
        .map(|m| {
            let ms = family.moments(n, m)?;
            Ok(f.iter().zip(&ms).fold(F::zero(), |acc, (a, b)| acc + a.clone() * b.clone()))
        })
        .collect()
}

/// Residuals divided by `sum_k |f_k m_k(mu_l)|`, as floats.
pub fn relative_residuals<F: Scalar>(family: &MqfFamily<F>, mu: &[F], f: &[F]) -> Result<Vec<f64>> {
    let n = f.len().saturating_sub(1);
    mu.iter()
        .map(|m| {
            let ms = family.moments(n, m)?;
            let mut sum = F::zero();
            let mut scale = 0.0;
            for (a, b) in f.iter().zip(&ms) {
                let t = a.clone() * b.clone();
                scale += t.magnitude();
                sum = sum + t;
            }
            Ok(if scale == 0.0 { 0.0 } else { sum.magnitude() / scale })
        })
        .collect()
}
