//! Polynomial roots.
//!
//! Floats go through Aberth-Ehrlich simultaneous iteration. In exact mode
//! rational roots are first located from float approximations of the
//! square-free part, certified by exact division, and split off; whatever is
//! left is reported as [`RootSet::remainder`] and solved approximately.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::poly::Polynomial;
use super::scalar::{Rational, Scalar};
use crate::error::{Error, Result};

pub const DEFAULT_ROOT_TOL: f64 = 1e-12;
pub const MAX_ROOT_ITERATIONS: usize = 500;

#[derive(Clone, Debug, PartialEq)]
pub enum RootValue<F> {
    Exact(F),
    Approx(Complex64),
}

impl<F: Scalar> RootValue<F> {
    pub fn as_complex(&self) -> Complex64 {
        match self {
            RootValue::Exact(v) => Complex64::new(v.to_f64(), 0.0),
            RootValue::Approx(z) => *z,
        }
    }

    pub fn exact(&self) -> Option<&F> {
        match self {
            RootValue::Exact(v) => Some(v),
            RootValue::Approx(_) => None,
        }
    }

    /// Real roots in the scalar type: exact ones directly, approximate real
    /// ones only when the mode accepts floats.
    pub fn to_scalar(&self) -> Option<F> {
        match self {
            RootValue::Exact(v) => Some(v.clone()),
            RootValue::Approx(z) if z.im == 0.0 => F::from_f64(z.re),
            RootValue::Approx(_) => None,
        }
    }

    pub fn is_real(&self) -> bool {
        matches!(self, RootValue::Exact(_)) || self.as_complex().im == 0.0
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Root<F> {
    pub value: RootValue<F>,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RootSet<F> {
    pub roots: Vec<Root<F>>,
    /// `max |p(r)| / max |coefficient|` over the reported roots.
    pub residual: f64,
    /// Factor whose roots could not be extracted exactly (constant when all
    /// roots are exact, or in float mode the input itself).
    pub remainder: Polynomial<F>,
}

impl<F: Scalar> RootSet<F> {
    pub fn total_multiplicity(&self) -> usize {
        self.roots.iter().map(|r| r.multiplicity).sum()
    }

    /// Roots repeated according to multiplicity.
    pub fn expanded(&self) -> Vec<RootValue<F>> {
        self.roots
            .iter()
            .flat_map(|r| std::iter::repeat_n(r.value.clone(), r.multiplicity))
            .collect()
    }

    pub fn all_exact(&self) -> bool {
        self.roots.iter().all(|r| matches!(r.value, RootValue::Exact(_)))
    }
}

/// All roots of `p` with multiplicities. Constant input yields an empty set.
pub fn poly_roots<F: Scalar>(p: &Polynomial<F>, tol: f64) -> Result<RootSet<F>> {
    if p.degree().unwrap_or(0) == 0 {
        return Ok(RootSet { roots: Vec::new(), residual: 0.0, remainder: p.clone() });
    }
    let (mut roots, remainder) = if F::EXACT {
        let rat: Option<Vec<Rational>> = p.coeffs().iter().map(|c| c.to_rational()).collect();
        let rat = rat.ok_or_else(|| Error::NotRepresentable(p.to_string()))?;
        let (exact, rest) = exact_rational_roots(&Polynomial::new(rat), tol)?;
        let roots = exact
            .into_iter()
            .map(|(r, m)| Root { value: RootValue::Exact(F::from_rational(&r)), multiplicity: m })
            .collect::<Vec<_>>();
        (roots, rest.map(|c| F::from_rational(c)))
    } else {
        (Vec::new(), p.clone())
    };
    if remainder.degree().unwrap_or(0) > 0 {
        let coeffs: Vec<f64> = remainder.coeffs().iter().map(|c| c.to_f64()).collect();
        for (z, m) in float_roots(&coeffs, tol)? {
            roots.push(Root { value: RootValue::Approx(z), multiplicity: m });
        }
    }
    sort_roots(&mut roots);
    let scale = p.max_abs_coeff().max(f64::MIN_POSITIVE);
    let residual = roots
        .iter()
        .map(|r| p.eval_complex(r.value.as_complex()).norm() / scale)
        .fold(0.0, f64::max);
    Ok(RootSet { roots, residual, remainder })
}

fn sort_roots<F: Scalar>(roots: &mut [Root<F>]) {
    roots.sort_by(|a, b| {
        let (za, zb) = (a.value.as_complex(), b.value.as_complex());
        za.re.total_cmp(&zb.re).then(za.im.total_cmp(&zb.im))
    });
}

/// Float roots of `sum coeffs[k] x^k` with multiplicities from clustering.
pub fn float_roots(coeffs: &[f64], tol: f64) -> Result<Vec<(Complex64, usize)>> {
    let mut c: Vec<f64> = coeffs.to_vec();
    while c.last().is_some_and(|v| *v == 0.0) {
        c.pop();
    }
    let mut out = Vec::new();
    let zeros = c.iter().take_while(|v| **v == 0.0).count();
    if zeros > 0 {
        out.push((Complex64::new(0.0, 0.0), zeros));
        c.drain(..zeros);
    }
    if c.len() > 1 {
        let approx = aberth(&c, MAX_ROOT_ITERATIONS)?;
        out.extend(cluster(approx, tol));
    }
    Ok(out)
}

/// Aberth-Ehrlich iteration on a polynomial with nonzero constant term.
pub fn aberth(coeffs: &[f64], max_iter: usize) -> Result<Vec<Complex64>> {
    let n = coeffs.len() - 1;
    let lead = coeffs[n];
    let a: Vec<f64> = coeffs.iter().map(|v| v / lead).collect();
    let abs: Vec<f64> = a.iter().map(|v| v.abs()).collect();
    let deriv: Vec<f64> = (1..=n).map(|k| a[k] * k as f64).collect();
    let eval = |c: &[f64], z: Complex64| {
        c.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, v| acc * z + v)
    };
    let noise = |z: Complex64| {
        let r = z.norm();
        let s = abs.iter().rev().fold(0.0, |acc, v| acc * r + v);
        4.0 * (n as f64 + 1.0) * f64::EPSILON * s
    };

    let radius = a[0].abs().powf(1.0 / n as f64).max(1e-3);
    let center = -a[n - 1] / n as f64;
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let ang = 2.0 * std::f64::consts::PI * k as f64 / n as f64 + 0.4;
            Complex64::new(center, 0.0) + Complex64::from_polar(radius, ang)
        })
        .collect();
    let mut done = vec![false; n];
    // steps taken inside the rounding-noise band; a few more polish the root
    // when |p'| is small and the band is wide
    let mut in_noise = vec![0usize; n];

    for _ in 0..max_iter {
        for i in 0..n {
            if done[i] {
                continue;
            }
            let pz = eval(&a, z[i]);
            if pz.norm() <= noise(z[i]) {
                in_noise[i] += 1;
                if in_noise[i] > 3 || pz.norm() == 0.0 {
                    done[i] = true;
                    continue;
                }
            }
            let dz = eval(&deriv, z[i]);
            let ratio = if dz.norm() == 0.0 { Complex64::new(1e-8, 1e-8) } else { pz / dz };
            let sum: Complex64 = (0..n)
                .filter(|&j| j != i)
                .map(|j| {
                    let d = z[i] - z[j];
                    if d.norm() == 0.0 {
                        Complex64::new(0.0, 0.0)
                    } else {
                        d.inv()
                    }
                })
                .sum();
            let w = ratio / (Complex64::new(1.0, 0.0) - ratio * sum);
            z[i] -= w;
            if w.norm() <= 2.0 * f64::EPSILON * z[i].norm() {
                done[i] = true;
            }
        }
        if done.iter().all(|d| *d) {
            return Ok(z);
        }
    }
    Err(Error::NonConvergence(max_iter))
}

/// Merges approximations of a multiple root, snaps near-real values onto the
/// axis, and makes complex pairs exact conjugates.
fn cluster(mut z: Vec<Complex64>, tol: f64) -> Vec<(Complex64, usize)> {
    let radius = (tol.sqrt() * 10.0).max(1e-6);
    z.sort_by(|a, b| a.re.total_cmp(&b.re));
    let mut groups: Vec<(Complex64, usize)> = Vec::new();
    let mut used = vec![false; z.len()];
    for i in 0..z.len() {
        if used[i] {
            continue;
        }
        used[i] = true;
        let mut members = vec![z[i]];
        for j in i + 1..z.len() {
            if !used[j] && (z[j] - z[i]).norm() <= radius * (1.0 + z[i].norm()) {
                used[j] = true;
                members.push(z[j]);
            }
        }
        let mean = members.iter().sum::<Complex64>() / members.len() as f64;
        groups.push((mean, members.len()));
    }
    for g in groups.iter_mut() {
        if g.0.im.abs() <= radius * (1.0 + g.0.re.abs()) {
            g.0.im = 0.0;
        }
    }
    let mut paired = vec![false; groups.len()];
    for i in 0..groups.len() {
        if paired[i] || groups[i].0.im <= 0.0 {
            continue;
        }
        let best = (0..groups.len())
            .filter(|&j| !paired[j] && groups[j].0.im < 0.0 && groups[j].1 == groups[i].1)
            .min_by(|&a, &b| {
                let da = (groups[a].0 - groups[i].0.conj()).norm();
                let db = (groups[b].0 - groups[i].0.conj()).norm();
                da.total_cmp(&db)
            });
        if let Some(j) = best {
            let avg = (groups[i].0 + groups[j].0.conj()) / 2.0;
            groups[i].0 = avg;
            groups[j].0 = avg.conj();
            paired[i] = true;
            paired[j] = true;
        }
    }
    groups
}

/// Splits off every rational root of `p`, returning `(root, multiplicity)`
/// pairs and the cofactor.
pub fn exact_rational_roots(
    p: &Polynomial<Rational>,
    tol: f64,
) -> Result<(Vec<(Rational, usize)>, Polynomial<Rational>)> {
    let mut rest = p.clone();
    let mut found: Vec<(Rational, usize)> = Vec::new();

    let zero_mult = rest.coeffs().iter().take_while(|c| c.is_zero()).count();
    if zero_mult > 0 {
        found.push((Rational::zero(), zero_mult));
        rest = Polynomial::new(rest.coeffs()[zero_mult..].to_vec());
    }
    if rest.degree().unwrap_or(0) == 0 {
        return Ok((found, rest));
    }

    let squarefree = {
        let g = rest.gcd(&rest.derivative());
        if g.degree().unwrap_or(0) > 0 {
            rest.div_rem(&g).0
        } else {
            rest.clone()
        }
    };
    let int_poly = primitive_integer(&squarefree);
    let lead = int_poly.last().cloned().unwrap_or_else(BigInt::one).abs();
    let fcoeffs: Vec<f64> = squarefree.coeffs().iter().map(Scalar::to_f64).collect();
    let approx = float_roots(&fcoeffs, tol)?;

    for (z, _) in approx {
        if z.im != 0.0 || !z.re.is_finite() {
            continue;
        }
        for cand in rational_candidates(z.re, &lead) {
            if found.iter().any(|(r, _)| *r == cand) {
                continue;
            }
            let mut mult = 0;
            let factor = Polynomial::linear(-cand.clone(), Rational::one());
            loop {
                if rest.degree().unwrap_or(0) == 0 {
                    break;
                }
                let (quot, rem) = rest.div_rem(&factor);
                if !rem.is_zero() {
                    break;
                }
                rest = quot;
                mult += 1;
            }
            if mult > 0 {
                found.push((cand, mult));
                break;
            }
        }
    }
    found.sort_by(|a, b| a.0.cmp(&b.0));
    Ok((found, rest))
}

/// Integer coefficients of `c * p` with content removed.
fn primitive_integer(p: &Polynomial<Rational>) -> Vec<BigInt> {
    let lcm = p.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p.coeffs().iter().map(|c| (c * Rational::from_integer(lcm.clone())).to_integer()).collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if content.is_zero() {
        return ints;
    }
    ints.into_iter().map(|c| c / &content).collect()
}

/// Candidate rationals near `x`: the lattice point `round(lead x)/lead`
/// (root denominators divide the leading coefficient) and the continued
/// fraction convergents of `x` with denominators up to `lead`.
fn rational_candidates(x: f64, lead: &BigInt) -> Vec<Rational> {
    let mut out = Vec::new();
    if let Some(l) = lead.to_f64() {
        let scaled = (x * l).round();
        if scaled.is_finite() && scaled.abs() < 9.0e15 {
            out.push(Rational::new(BigInt::from(scaled as i64), lead.clone()));
        }
    }
    let (mut h0, mut h1) = (BigInt::zero(), BigInt::one());
    let (mut k0, mut k1) = (BigInt::one(), BigInt::zero());
    let mut v = x;
    for _ in 0..40 {
        let a = v.floor();
        if !a.is_finite() || a.abs() > 9.0e15 {
            break;
        }
        let ai = BigInt::from(a as i64);
        let h2 = &ai * &h1 + &h0;
        let k2 = &ai * &k1 + &k0;
        if &k2 > lead && !k1.is_zero() {
            break;
        }
        out.push(Rational::new(h2.clone(), k2.clone()));
        h0 = std::mem::replace(&mut h1, h2);
        k0 = std::mem::replace(&mut k1, k2);
        let frac = v - a;
        if frac.abs() < 1e-300 {
            break;
        }
        v = 1.0 / frac;
    }
    out
}
