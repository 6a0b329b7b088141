//! `biorth verify`: seeded random invariant checks on one family.

use std::collections::BTreeMap;

use biorth_core::biorth::{
    biorthogonal_poly, divided_difference_path, expand_in_mixed_basis, oracle_nullspace, orthogonality_residuals,
    relative_residuals, triangular_system, Normalization, Path, FLOAT_RESIDUAL_TOL,
};
use biorth_core::family::{MqfFamily, WeightForm};
use biorth_core::ode::{
    frobenius_ode, indicial_roots, ode_residual, select_theta, series_coefficients, verify_moment_quotient,
    QuadOptions, ThetaGate,
};
use biorth_core::{Error, Rational, Scalar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

const TRIALS: usize = 3;
const SERIES_ORDER: usize = 16;
const QUOTIENT_TOL: f64 = 1e-9;

pub(crate) fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `n` distinct positive rationals `p/q`, `p <= 40`, `q <= 8`.
pub(crate) fn random_mu(rng: &mut ChaCha8Rng, n: usize) -> Vec<Rational> {
    let mut out: Vec<Rational> = Vec::with_capacity(n);
    while out.len() < n {
        let v = Rational::from_ratio(rng.gen_range(1..=40), rng.gen_range(1..=8));
        if !out.contains(&v) {
            out.push(v);
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub check: &'static str,
    pub n: usize,
    pub mu: Vec<String>,
    pub status: Status,
    pub detail: String,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub family: String,
    pub n: usize,
    pub seed: u64,
    pub summary: Summary,
    /// `"requested->used"` path counts for the exact constructions.
    pub fallbacks: BTreeMap<String, usize>,
    pub checks: Vec<Check>,
}

struct Suite<'a> {
    family: &'a MqfFamily<Rational>,
    checks: Vec<Check>,
    fallbacks: BTreeMap<String, usize>,
}

fn strings<F: Scalar>(v: &[F]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn is_zero(v: &Rational) -> bool {
    v.is_negligible(0.0)
}

fn proportional(a: &[Rational], b: &[Rational]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let Some(i) = a.iter().position(|v| !is_zero(v)) else { return b.iter().all(|v| is_zero(v)) };
    if is_zero(&b[i]) {
        return false;
    }
    let c = b[i].clone() / a[i].clone();
    a.iter().zip(b).all(|(x, y)| x.clone() * c.clone() == *y)
}

impl Suite<'_> {
    fn record(&mut self, check: &'static str, mu: &[Rational], status: Status, detail: impl Into<String>) {
        self.checks.push(Check { check, n: mu.len(), mu: strings(mu), status, detail: detail.into() });
    }

    fn pass_if(&mut self, check: &'static str, mu: &[Rational], ok: bool, detail: impl Into<String>) {
        let status = if ok { Status::Pass } else { Status::Fail };
        self.record(check, mu, status, detail);
    }

    fn biorthogonal(&mut self, mu: &[Rational]) {
        let fam = self.family;
        let res = match biorthogonal_poly(fam, mu, Path::DividedDifference, Normalization::Expansion) {
            Ok(r) => r,
            Err(e @ (Error::NoExistence | Error::NullSpaceDimension(_))) => {
                self.record("existence", mu, Status::Skip, e.to_string());
                return;
            }
            Err(e) => {
                self.record("construction", mu, Status::Fail, e.to_string());
                return;
            }
        };
        *self.fallbacks.entry(format!("divided-difference->{}", res.path)).or_default() += 1;

        match orthogonality_residuals(fam, mu, &res.f) {
            Ok(r) => self.pass_if("orthogonality", mu, r.iter().all(is_zero), format!("path {}", res.path)),
            Err(e) => self.record("orthogonality", mu, Status::Fail, e.to_string()),
        }

        // identical expansions where both apply, proportional to the oracle
        let mixed = expand_in_mixed_basis(fam, mu);
        let oracle = oracle_nullspace(fam, mu, Normalization::Expansion);
        let dd = divided_difference_path(fam, mu);
        let mut notes = Vec::new();
        let mut ok = true;
        if let (Ok(d), Ok(m)) = (&dd, &mixed) {
            ok &= d.f == m.f;
            notes.push("divided-difference == mixed-basis");
        }
        match &oracle {
            Ok(o) => {
                ok &= proportional(&o.f, &res.f);
                notes.push("oracle proportional");
            }
            Err(e) => {
                ok = false;
                notes.push(if matches!(e, Error::NullSpaceDimension(_)) { "oracle null space not 1-d" } else { "oracle failed" });
            }
        }
        self.pass_if("path-equivalence", mu, ok, notes.join(", "));

        let mut reversed = mu.to_vec();
        reversed.reverse();
        match biorthogonal_poly(fam, &reversed, Path::DividedDifference, Normalization::Expansion) {
            Ok(r) => self.pass_if("permutation", mu, r.f == res.f, "reversed mu"),
            Err(e) => self.record("permutation", mu, Status::Fail, e.to_string()),
        }

        if fam.validity_check(mu.len()).theorem3_applicable {
            match triangular_system(fam, mu.len()) {
                Ok(rows) => {
                    let upper_zero = rows.iter().enumerate().all(|(l, row)| row[l + 1..].iter().all(is_zero));
                    let diag = rows.iter().enumerate().all(|(l, row)| !is_zero(&row[l]));
                    self.pass_if("triangularity", mu, upper_zero && diag, "m_k(lambda_l) = 0 for l < k");
                }
                Err(e) => self.record("triangularity", mu, Status::Fail, e.to_string()),
            }
        } else {
            self.record("triangularity", mu, Status::Skip, "closed-form preconditions fail");
        }

        let ffam = fam.to_mode::<f64>();
        let fmu: Vec<f64> = mu.iter().map(Scalar::to_f64).collect();
        let worst = biorthogonal_poly(&ffam, &fmu, Path::DividedDifference, Normalization::Expansion)
            .and_then(|r| relative_residuals(&ffam, &fmu, &r.f).map(|v| (r.path, v.into_iter().fold(0.0, f64::max))));
        match worst {
            Ok((p, w)) => self.pass_if("float-orthogonality", mu, w <= FLOAT_RESIDUAL_TOL, format!("path {p}, max relative residual {w:e}")),
            Err(e) => self.record("float-orthogonality", mu, Status::Fail, e.to_string()),
        }
    }

    fn quadrature(&mut self, mu: &Rational, n: usize) {
        let label = [mu.clone()];
        match &self.family.weight_form {
            Some(WeightForm::Power { .. } | WeightForm::Hypergeometric) => {
                match verify_moment_quotient(self.family, n, mu.to_f64(), &QuadOptions::default()) {
                    Ok(checks) => {
                        let worst = checks.iter().map(|c| c.rel_error).fold(0.0, f64::max);
                        self.pass_if("moment-quotient", &label, worst <= QUOTIENT_TOL, format!("max relative error {worst:e}"));
                    }
                    Err(e) => self.record("moment-quotient", &label, Status::Fail, e.to_string()),
                }
            }
            Some(WeightForm::Bessel) => {
                self.record("moment-quotient", &label, Status::Skip, "moments of the Bessel-type weight diverge")
            }
            None => self.record("moment-quotient", &label, Status::Skip, "no closed-form weight"),
        }
    }

    fn series(&mut self, mu: &Rational) {
        let label = [mu.clone()];
        let outcome = frobenius_ode(self.family, mu).and_then(|ode| {
            let roots = indicial_roots(&ode)?;
            let theta = select_theta(&roots, ode.s, ThetaGate::AtLeastOrder)
                .or_else(|| select_theta(&roots, ode.s, ThetaGate::AnyReal));
            let Some(theta) = theta else { return Ok(None) };
            let y = series_coefficients(&ode, &theta, SERIES_ORDER)?;
            Ok(Some((theta.clone(), ode_residual(&ode, &theta, &y, SERIES_ORDER + 1))))
        });
        match outcome {
            Ok(Some((theta, r))) => self.pass_if(
                "ode-residual",
                &label,
                r.vanishes_through.is_some_and(|m| m >= SERIES_ORDER),
                format!("theta {theta}, vanishes through order {:?}", r.vanishes_through),
            ),
            Ok(None) => self.record("ode-residual", &label, Status::Skip, "no real indicial root"),
            Err(e @ (Error::Resonance(_) | Error::LeadingZero { .. })) => {
                self.record("ode-residual", &label, Status::Skip, e.to_string())
            }
            Err(Error::Config(_)) => self.record("ode-residual", &label, Status::Skip, "table family has no ODE"),
            Err(e) => self.record("ode-residual", &label, Status::Fail, e.to_string()),
        }
    }
}

pub fn run(family: &MqfFamily<Rational>, n: usize, seed: u64) -> Report {
    let mut rng = rng(seed);
    let mut suite = Suite { family, checks: Vec::new(), fallbacks: BTreeMap::new() };
    for k in 1..=n {
        for _ in 0..TRIALS {
            let mu = random_mu(&mut rng, k);
            if mu.iter().any(|m| family.moments(k, m).is_err()) {
                suite.record("construction", &mu, Status::Skip, "moment pole at a sampled mu");
                continue;
            }
            suite.biorthogonal(&mu);
        }
    }
    // integrable, well-separated exponents for the quadrature check
    for _ in 0..TRIALS {
        let mu = Rational::from_ratio(rng.gen_range(4..=16), 4);
        suite.quadrature(&mu, n);
        suite.series(&mu);
    }
    let mut summary = Summary::default();
    for c in &suite.checks {
        match c.status {
            Status::Pass => summary.passed += 1,
            Status::Fail => summary.failed += 1,
            Status::Skip => summary.skipped += 1,
        }
    }
    Report { family: family.name.clone(), n, seed, summary, fallbacks: suite.fallbacks, checks: suite.checks }
}
