//! Globally adaptive composite Gauss-Legendre quadrature on `(0,1)` and
//! `(0,inf)`, the latter through `x = t / (1 - t)`.

use crate::error::{Error, Result};
use crate::family::Support;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadOptions {
    pub rel_tol: f64,
    pub max_nodes: usize,
    pub order: usize,
}

impl Default for QuadOptions {
    fn default() -> Self {
        Self { rel_tol: 1e-11, max_nodes: 1 << 16, order: 20 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadResult {
    pub value: f64,
    pub error: f64,
    pub nodes: usize,
}

/// Nodes and weights on `[-1, 1]`, by Newton iteration on `P_n`.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut x = vec![0.0; n];
    let mut w = vec![0.0; n];
    for i in 0..n.div_ceil(2) {
        let mut z = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, z);
            for k in 2..=n {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * z * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            if n == 1 {
                p0 = 1.0;
                p1 = z;
            }
            dp = n as f64 * (z * p1 - p0) / (z * z - 1.0);
            let dz = p1 / dp;
            z -= dz;
            if dz.abs() < 1e-16 {
                break;
            }
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = 2.0 / ((1.0 - z * z) * dp * dp);
        w[n - 1 - i] = w[i];
    }
    (x, w)
}

struct Rule {
    x: Vec<f64>,
    w: Vec<f64>,
}

impl Rule {
    fn apply(&self, f: &dyn Fn(f64) -> f64, a: f64, b: f64) -> Result<f64> {
        let (c, h) = ((a + b) / 2.0, (b - a) / 2.0);
        let mut s = 0.0;
        for (xi, wi) in self.x.iter().zip(&self.w) {
            let v = f(c + h * xi);
            if !v.is_finite() {
                return Err(Error::QuadratureFailure(format!("integrand not finite at {}", c + h * xi)));
            }
            s += wi * v;
        }
        Ok(s * h)
    }
}

struct Panel {
    a: f64,
    b: f64,
    halves: [f64; 2],
    err: f64,
}

fn panel(rule: &Rule, f: &dyn Fn(f64) -> f64, a: f64, b: f64, whole: f64) -> Result<Panel> {
    let m = (a + b) / 2.0;
    let halves = [rule.apply(f, a, m)?, rule.apply(f, m, b)?];
    Ok(Panel { a, b, halves, err: (halves[0] + halves[1] - whole).abs() })
}

fn adapt(f: &dyn Fn(f64) -> f64, opts: &QuadOptions) -> Result<QuadResult> {
    let (x, w) = gauss_legendre(opts.order);
    let rule = Rule { x, w };
    let whole = rule.apply(f, 0.0, 1.0)?;
    let mut panels = vec![panel(&rule, f, 0.0, 1.0, whole)?];
    let mut nodes = 3 * opts.order;
    loop {
        let value: f64 = panels.iter().map(|p| p.halves[0] + p.halves[1]).sum();
        let error: f64 = panels.iter().map(|p| p.err).sum();
        if error <= opts.rel_tol * value.abs() || error == 0.0 {
            return Ok(QuadResult { value, error, nodes });
        }
        if nodes + 4 * opts.order > opts.max_nodes {
            return Err(Error::QuadratureFailure(format!(
                "node budget {} exhausted (estimate {value:e}, error {error:e})",
                opts.max_nodes
            )));
        }
        let worst = panels
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.err.total_cmp(&b.1.err))
            .map(|(i, _)| i)
            .expect("at least one panel");
        let p = panels.swap_remove(worst);
        let m = (p.a + p.b) / 2.0;
        if m <= p.a || m >= p.b {
            return Err(Error::QuadratureFailure("panel width underflow".into()));
        }
        panels.push(panel(&rule, f, p.a, m, p.halves[0])?);
        panels.push(panel(&rule, f, m, p.b, p.halves[1])?);
        nodes += 4 * opts.order;
    }
}

pub fn integrate(f: impl Fn(f64) -> f64, support: Support, opts: &QuadOptions) -> Result<QuadResult> {
    match support {
        Support::UnitInterval => adapt(&f, opts),
        Support::HalfLine => {
            let g = |t: f64| {
                let s = 1.0 - t;
                f(t / s) / (s * s)
            };
            adapt(&g, opts)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nodes_integrate_polynomials_exactly() {
        let (x, w) = gauss_legendre(20);
        assert!((w.iter().sum::<f64>() - 2.0).abs() < 1e-14);
        let i38: f64 = x.iter().zip(&w).map(|(x, w)| w * x.powi(38)).sum();
        assert!((i38 - 2.0 / 39.0).abs() < 1e-14);
        let (x1, w1) = gauss_legendre(1);
        assert_eq!((x1[0], w1[0]), (0.0, 2.0));
    }

    #[test]
    fn power_moments() {
        let opts = QuadOptions::default();
        let r = integrate(|x| x * x, Support::UnitInterval, &opts).unwrap();
        assert!((r.value - 1.0 / 3.0).abs() < 1e-15);
        // endpoint singularity
        let r = integrate(|x: f64| x.powf(-0.5), Support::UnitInterval, &opts).unwrap();
        assert!((r.value - 2.0).abs() < 1e-10, "{r:?}");
        assert!(r.nodes <= opts.max_nodes);
    }

    #[test]
    fn half_line() {
        let opts = QuadOptions::default();
        let r = integrate(|x: f64| x * (-x).exp(), Support::HalfLine, &opts).unwrap();
        assert!((r.value - 1.0).abs() < 1e-10);
        let r = integrate(|x: f64| 1.0 / (1.0 + x * x), Support::HalfLine, &opts).unwrap();
        assert!((r.value - std::f64::consts::FRAC_PI_2).abs() < 1e-10);
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let opts = QuadOptions { max_nodes: 200, ..Default::default() };
        let r = integrate(|x: f64| x.powf(-0.9), Support::UnitInterval, &opts);
        assert!(matches!(r, Err(Error::QuadratureFailure(_))));
    }
}
