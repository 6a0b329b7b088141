use biorth_core::biorth::{
    biorthogonal_poly, orthogonality_residuals, BiorthResult, Normalization, Path,
};
use biorth_core::family::MqfFamily;
use biorth_core::numeric::parse_rational;
use biorth_core::ode::{
    frobenius_ode, hypergeometric_form, indicial_polynomial, indicial_roots, linear_closed_form, linear_ode,
    select_theta, series_coefficients, LinearCoeffs, ThetaGate,
};
use biorth_core::{Error, Rational, Scalar};
use serde::Serialize;
use serde_json::Value;

use crate::args::{GateArg, NormalizationArg, Output, PathArg, RunConfig};
use crate::emit::{self, cell, root, val, vals};
use crate::Failure;

pub(crate) fn path(p: PathArg) -> Path {
    match p {
        PathArg::DividedDifference => Path::DividedDifference,
        PathArg::MixedBasis => Path::MixedBasis,
        PathArg::Oracle => Path::Oracle,
    }
}

pub(crate) fn normalization(n: NormalizationArg) -> Normalization {
    match n {
        NormalizationArg::Expansion => Normalization::Expansion,
        NormalizationArg::LeadingOne => Normalization::LeadingOne,
    }
}

pub(crate) fn gate(g: GateArg) -> ThetaGate {
    match g {
        GateArg::Order => ThetaGate::AtLeastOrder,
        GateArg::One => ThetaGate::AtLeastOne,
        GateArg::Any => ThetaGate::AnyReal,
    }
}

fn gate_label(g: GateArg) -> &'static str {
    match g {
        GateArg::Order => "theta >= s",
        GateArg::One => "theta >= 1",
        GateArg::Any => "real",
    }
}

/// Parses `--mu` in the requested arithmetic. Exact mode accepts integers,
/// `p/q` and terminating decimals only.
pub(crate) fn parse_mu<F: Scalar>(raw: &[String]) -> Result<Vec<F>, Failure> {
    raw.iter()
        .map(|s| match parse_rational(s) {
            Ok(r) => Ok(F::from_rational(&r)),
            Err(_) if F::EXACT => Err(Failure::Usage(format!("--mu: {s:?} is not an exact rational"))),
            Err(_) => s
                .trim()
                .parse::<f64>()
                .ok()
                .and_then(F::from_f64)
                .ok_or_else(|| Failure::Usage(format!("--mu: cannot parse {s:?}"))),
        })
        .collect()
}

fn single_mu<F: Scalar>(cfg: &RunConfig) -> Result<F, Failure> {
    let mut mu = parse_mu::<F>(&cfg.mu)?;
    if mu.len() != 1 {
        return Err(Failure::Usage(format!("this command takes exactly one --mu value, got {}", mu.len())));
    }
    Ok(mu.remove(0))
}

fn require_json(cfg: &RunConfig) -> Result<(), Failure> {
    match cfg.output {
        Output::Json => Ok(()),
        Output::Csv => Err(Failure::Usage("csv output is available for moments, poly and sweep".into())),
    }
}

#[derive(Serialize)]
struct MomentRow {
    mu: Value,
    moments: Vec<Value>,
}

#[derive(Serialize)]
struct MomentsPayload {
    family: String,
    n: usize,
    rows: Vec<MomentRow>,
}

pub(crate) fn moments<F: Scalar>(family: &MqfFamily<Rational>, cfg: &RunConfig) -> Result<String, Failure> {
    let fam = family.to_mode::<F>();
    let mu = parse_mu::<F>(&cfg.mu)?;
    let n = cfg.n.unwrap_or(5);
    let rows = mu
        .iter()
        .map(|m| Ok(MomentRow { mu: val(m), moments: vals(&fam.moments(n, m)?) }))
        .collect::<Result<Vec<_>, Error>>()?;
    Ok(match cfg.output {
        Output::Json => emit::json(&MomentsPayload { family: fam.name.clone(), n, rows }),
        Output::Csv => {
            let mut header = vec!["mu".to_string()];
            header.extend((0..=n).map(|k| format!("m_{k}")));
            let body: Vec<Vec<String>> = rows
                .iter()
                .map(|r| std::iter::once(cell(&r.mu)).chain(r.moments.iter().map(cell)).collect())
                .collect();
            emit::csv(&header, &body)
        }
    })
}

#[derive(Serialize)]
pub(crate) struct PolyPayload {
    pub f: Vec<Value>,
    pub p: Vec<Value>,
    pub path: Path,
    pub qtilde: Option<Vec<Value>>,
    pub lambda: Option<Vec<Value>>,
    pub residuals: Vec<Value>,
    pub warnings: Vec<String>,
}

pub(crate) fn poly_payload<F: Scalar>(fam: &MqfFamily<F>, mu: &[F], res: &BiorthResult<F>) -> Result<PolyPayload, Error> {
    let residuals = orthogonality_residuals(fam, mu, &res.f)?;
    Ok(PolyPayload {
        f: vals(&res.f),
        p: vals(res.p.coeffs()),
        path: res.path,
        qtilde: res.qtilde.as_deref().map(vals),
        lambda: res.lambda.as_deref().map(vals),
        residuals: vals(&residuals),
        warnings: res.warnings.clone(),
    })
}

fn tuple_cell(mu: &[Value]) -> String {
    mu.iter().map(cell).collect::<Vec<_>>().join(";")
}

/// One CSV row per `(n, mu)`: `n, mu, path, f_0..f_width`, right-padded.
fn sweep_row(n: usize, mu: &[Value], path: &str, f: &[Value], width: usize) -> Vec<String> {
    let mut row = vec![n.to_string(), tuple_cell(mu), path.to_string()];
    row.extend(f.iter().map(cell));
    row.resize(3 + width + 1, String::new());
    row
}

fn sweep_header(width: usize) -> Vec<String> {
    let mut h = vec!["n".to_string(), "mu".to_string(), "path".to_string()];
    h.extend((0..=width).map(|k| format!("f_{k}")));
    h
}

pub(crate) fn poly<F: Scalar>(family: &MqfFamily<Rational>, cfg: &RunConfig) -> Result<String, Failure> {
    let fam = family.to_mode::<F>();
    let mu = parse_mu::<F>(&cfg.mu)?;
    if let Some(n) = cfg.n {
        if n != mu.len() {
            return Err(Failure::Usage(format!("--n {n} disagrees with {} mu values", mu.len())));
        }
    }
    let res = biorthogonal_poly(&fam, &mu, path(cfg.path), normalization(cfg.normalization))?;
    let payload = poly_payload(&fam, &mu, &res)?;
    Ok(match cfg.output {
        Output::Json => emit::json(&payload),
        Output::Csv => {
            let row = sweep_row(mu.len(), &vals(&mu), res.path.label(), &payload.f, mu.len());
            emit::csv(&sweep_header(mu.len()), &[row])
        }
    })
}

#[derive(Serialize)]
struct SweepRow {
    n: usize,
    mu: Vec<Value>,
    path: String,
    f: Vec<Value>,
}

/// Rows for `n = 0..=N`: prefixes of `--mu` when given, else seeded random
/// tuples. A failing row records `error:<Kind>` as its path and makes the
/// exit code 3.
pub(crate) fn sweep<F: Scalar>(family: &MqfFamily<Rational>, cfg: &RunConfig) -> Result<(String, bool), Failure> {
    let fam = family.to_mode::<F>();
    let tuples: Vec<Vec<F>> = if cfg.mu.is_empty() {
        let big_n = cfg.n.unwrap_or(4);
        let mut rng = crate::verify::rng(cfg.seed);
        (0..=big_n)
            .flat_map(|n| (0..2).map(move |_| n))
            .map(|n| crate::verify::random_mu(&mut rng, n).iter().map(F::from_rational).collect())
            .collect()
    } else {
        let mu = parse_mu::<F>(&cfg.mu)?;
        let big_n = cfg.n.unwrap_or(mu.len()).min(mu.len());
        (0..=big_n).map(|n| mu[..n].to_vec()).collect()
    };
    let width = tuples.iter().map(Vec::len).max().unwrap_or(0);
    let mut rows = Vec::with_capacity(tuples.len());
    let mut any_error = false;
    for mu in &tuples {
        let (path_label, f) = match biorthogonal_poly(&fam, mu, path(cfg.path), normalization(cfg.normalization)) {
            Ok(res) => (res.path.label().to_string(), vals(&res.f)),
            Err(e) => {
                any_error = true;
                (format!("error:{}", crate::error_kind(&e)), Vec::new())
            }
        };
        rows.push(SweepRow { n: mu.len(), mu: vals(mu), path: path_label, f });
    }
    let text = match cfg.output {
        Output::Json => emit::json(&rows),
        Output::Csv => {
            let body: Vec<Vec<String>> = rows.iter().map(|r| sweep_row(r.n, &r.mu, &r.path, &r.f, width)).collect();
            emit::csv(&sweep_header(width), &body)
        }
    };
    Ok((text, any_error))
}

#[derive(Serialize)]
struct LinearPayload {
    sigma0: Value,
    sigma1: Value,
    rho0: Value,
    rho1: Value,
    e1: Value,
    e2: Value,
    exp_rate: Value,
}

#[derive(Serialize)]
struct OdePayload {
    s: usize,
    p: Vec<Value>,
    q: Vec<Value>,
    indicial_polynomial: Vec<Value>,
    indicial_roots: Vec<Value>,
    linear: Option<LinearPayload>,
}

pub(crate) fn ode<F: Scalar>(family: &MqfFamily<Rational>, cfg: &RunConfig) -> Result<String, Failure> {
    require_json(cfg)?;
    let fam = family.to_mode::<F>();
    let mu = single_mu::<F>(cfg)?;
    let ode = frobenius_ode(&fam, &mu)?;
    let roots = indicial_roots(&ode)?;
    let linear = if ode.s <= 1 {
        let lin = linear_ode(&LinearCoeffs::from_family(&fam)?, &mu);
        let cf = linear_closed_form(&lin)?;
        Some(LinearPayload {
            sigma0: val(&lin.sigma0),
            sigma1: val(&lin.sigma1),
            rho0: val(&lin.rho0),
            rho1: val(&lin.rho1),
            e1: val(&cf.e1),
            e2: val(&cf.e2),
            exp_rate: val(&cf.exp_rate),
        })
    } else {
        None
    };
    Ok(emit::json(&OdePayload {
        s: ode.s,
        p: vals(&ode.p),
        q: vals(&ode.q),
        indicial_polynomial: vals(indicial_polynomial(&ode).coeffs()),
        indicial_roots: roots.expanded().iter().map(root).collect(),
        linear,
    }))
}

#[derive(Serialize)]
struct HyperPayload {
    s: usize,
    indicial_roots: Vec<Value>,
    theta: Value,
    gate: &'static str,
    form: String,
    s1: usize,
    s2: usize,
    upper: Vec<Value>,
    lower: Vec<Value>,
    nu: Value,
    series: Vec<Value>,
}

pub(crate) fn hyper<F: Scalar>(family: &MqfFamily<Rational>, cfg: &RunConfig) -> Result<String, Failure> {
    require_json(cfg)?;
    let fam = family.to_mode::<F>();
    let mu = single_mu::<F>(cfg)?;
    let ode = frobenius_ode(&fam, &mu)?;
    let roots = indicial_roots(&ode)?;
    let theta = select_theta(&roots, ode.s, gate(cfg.theta_gate))
        .ok_or_else(|| Failure::Degenerate(format!("no indicial root satisfies {}", gate_label(cfg.theta_gate))))?;
    let form = hypergeometric_form(&ode, &theta)?;
    let series = series_coefficients(&ode, &theta, 9)?;
    Ok(emit::json(&HyperPayload {
        s: ode.s,
        indicial_roots: roots.expanded().iter().map(root).collect(),
        theta: val(&theta),
        gate: gate_label(cfg.theta_gate),
        form: form.label(),
        s1: form.s1,
        s2: form.s2,
        upper: form.upper.iter().map(root).collect(),
        lower: form.lower.iter().map(root).collect(),
        nu: val(&form.nu),
        series: vals(&series),
    }))
}
