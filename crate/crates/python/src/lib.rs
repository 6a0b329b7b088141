//! Python bindings. Exact values cross the boundary as `fractions.Fraction`,
//! float-mode values as `float`.

use biorth_core::biorth::{self as construct, Normalization, Path};
use biorth_core::family::{FamilyConfig, MqfFamily};
use biorth_core::numeric::{parse_rational, RootValue};
use biorth_core::ode::{self, PfqControl, ThetaGate};
use biorth_core::{Error, Rational, Scalar};
use pyo3::exceptions::{PyTypeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyFloat, PyString};

pyo3::create_exception!(biorth, BiorthError, PyValueError, "A construction or evaluation failed.");

fn err(e: Error) -> PyErr {
    let kind = format!("{e:?}");
    let kind = kind.split(['(', ' ', '{']).next().unwrap_or("Error").to_string();
    BiorthError::new_err((kind, e.to_string()))
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mode {
    Exact,
    Float,
}

fn mode(s: &str) -> PyResult<Mode> {
    match s {
        "exact" => Ok(Mode::Exact),
        "float" => Ok(Mode::Float),
        other => Err(PyValueError::new_err(format!("mode must be 'exact' or 'float', got {other:?}"))),
    }
}

fn path_arg(s: &str) -> PyResult<Path> {
    match s {
        "divided-difference" => Ok(Path::DividedDifference),
        "mixed-basis" => Ok(Path::MixedBasis),
        "oracle" => Ok(Path::Oracle),
        other => Err(PyValueError::new_err(format!("unknown path {other:?}"))),
    }
}

fn normalization_arg(s: &str) -> PyResult<Normalization> {
    match s {
        "expansion" => Ok(Normalization::Expansion),
        "leading-one" => Ok(Normalization::LeadingOne),
        other => Err(PyValueError::new_err(format!("unknown normalization {other:?}"))),
    }
}

fn gate_arg(s: &str) -> PyResult<ThetaGate> {
    match s {
        "order" => Ok(ThetaGate::AtLeastOrder),
        "one" => Ok(ThetaGate::AtLeastOne),
        "any" => Ok(ThetaGate::AnyReal),
        other => Err(PyValueError::new_err(format!("unknown theta gate {other:?}"))),
    }
}

/// ints, strings like `"7/3"` and `Fraction`s; floats are refused so exact
/// results never inherit binary rounding.
fn to_rational(v: &Bound<'_, PyAny>) -> PyResult<Rational> {
    if v.is_instance_of::<PyFloat>() {
        return Err(PyTypeError::new_err("exact mode takes int, str or Fraction, not float"));
    }
    let text: String = if v.is_instance_of::<PyString>() { v.extract()? } else { v.str()?.extract()? };
    parse_rational(&text).map_err(err)
}

fn to_float(v: &Bound<'_, PyAny>) -> PyResult<f64> {
    if v.is_instance_of::<PyString>() {
        let s: String = v.extract()?;
        return match parse_rational(&s) {
            Ok(r) => Ok(r.to_f64()),
            Err(_) => s.trim().parse().map_err(|_| PyValueError::new_err(format!("cannot parse {s:?}"))),
        };
    }
    v.call_method0("__float__")?.extract()
}

fn fraction<'py>(py: Python<'py>, r: &Rational) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?.getattr("Fraction")?.call1((r.to_string(),))
}

fn exact_list(py: Python<'_>, v: &[Rational]) -> PyResult<Vec<Py<PyAny>>> {
    v.iter().map(|r| fraction(py, r).map(Bound::unbind)).collect()
}

fn float_list(py: Python<'_>, v: &[f64]) -> PyResult<Vec<Py<PyAny>>> {
    v.iter().map(|x| Ok(PyFloat::new(py, *x).into_any().unbind())).collect()
}

/// Exact roots as `Fraction`, approximate ones as `complex`.
fn root_value<'py, F: Scalar>(py: Python<'py>, r: &RootValue<F>, exact: impl Fn(&F) -> PyResult<Bound<'py, PyAny>>) -> PyResult<Py<PyAny>> {
    Ok(match r {
        RootValue::Exact(v) => exact(v)?.unbind(),
        RootValue::Approx(z) => pyo3::types::PyComplex::from_doubles(py, z.re, z.im).into_any().unbind(),
    })
}

/// A Moebius-quotient weight family with exact rational coefficients.
#[pyclass(name = "Family", module = "biorth", frozen)]
struct PyFamily {
    inner: MqfFamily<Rational>,
}

#[pymethods]
impl PyFamily {
    /// Family from the JSON configuration format used by the CLI.
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let inner = FamilyConfig::from_json(text).and_then(|c| c.to_family()).map_err(err)?;
        Ok(Self { inner })
    }

    #[staticmethod]
    fn load(path: &str) -> PyResult<Self> {
        let inner = FamilyConfig::load(path).and_then(|c| c.to_family()).map_err(err)?;
        Ok(Self { inner })
    }

    #[staticmethod]
    fn jacobi() -> Self {
        Self { inner: MqfFamily::jacobi() }
    }

    /// Coefficient lists in the Pochhammer basis: `alpha_n = sum a_l (-n)_l`.
    #[staticmethod]
    fn polynomial(
        name: &str,
        a: Vec<Bound<'_, PyAny>>,
        b: Vec<Bound<'_, PyAny>>,
        c: Vec<Bound<'_, PyAny>>,
        d: Vec<Bound<'_, PyAny>>,
    ) -> PyResult<Self> {
        let conv = |v: Vec<Bound<'_, PyAny>>| v.iter().map(to_rational).collect::<PyResult<Vec<_>>>();
        Ok(Self { inner: MqfFamily::polynomial(name, conv(a)?, conv(b)?, conv(c)?, conv(d)?) })
    }

    #[getter]
    fn name(&self) -> String {
        self.inner.name.clone()
    }

    /// `(alpha_n, beta_n, gamma_n, delta_n)`.
    fn coefficients<'py>(&self, py: Python<'py>, n: usize) -> PyResult<Vec<Py<PyAny>>> {
        let q = self.inner.coefficients(n).map_err(err)?;
        exact_list(py, &[q.alpha, q.beta, q.gamma, q.delta])
    }

    /// `m_0..m_n` at `mu`.
    #[pyo3(signature = (n, mu, mode = "exact"))]
    fn moments(&self, py: Python<'_>, n: usize, mu: &Bound<'_, PyAny>, mode: &str) -> PyResult<Vec<Py<PyAny>>> {
        match self::mode(mode)? {
            Mode::Exact => exact_list(py, &self.inner.moments(n, &to_rational(mu)?).map_err(err)?),
            Mode::Float => float_list(py, &self.inner.to_mode::<f64>().moments(n, &to_float(mu)?).map_err(err)?),
        }
    }

    fn __repr__(&self) -> String {
        format!("Family({:?})", self.inner.name)
    }
}

/// The polynomial orthogonal to the family's weight at every `mu`.
#[pyclass(name = "BiorthResult", module = "biorth", frozen, get_all)]
struct PyBiorthResult {
    /// Power-basis coefficients `f_0..f_n`.
    f: Vec<Py<PyAny>>,
    path: String,
    residuals: Vec<Py<PyAny>>,
    warnings: Vec<String>,
}

#[pymethods]
impl PyBiorthResult {
    fn __repr__(&self, py: Python<'_>) -> PyResult<String> {
        let f: Vec<String> = self.f.iter().map(|v| v.bind(py).str().map(|s| s.to_string())).collect::<PyResult<_>>()?;
        Ok(format!("BiorthResult(f=[{}], path={:?})", f.join(", "), self.path))
    }
}

fn build<F: Scalar>(
    fam: &MqfFamily<F>,
    mu: &[F],
    path: Path,
    norm: Normalization,
) -> PyResult<(construct::BiorthResult<F>, Vec<F>)> {
    let res = construct::biorthogonal_poly(fam, mu, path, norm).map_err(err)?;
    let residuals = construct::orthogonality_residuals(fam, mu, &res.f).map_err(err)?;
    Ok((res, residuals))
}

#[pyfunction]
#[pyo3(signature = (family, mu, path = "divided-difference", normalization = "expansion", mode = "exact"))]
fn biorthogonal_poly(
    py: Python<'_>,
    family: &PyFamily,
    mu: Vec<Bound<'_, PyAny>>,
    path: &str,
    normalization: &str,
    mode: &str,
) -> PyResult<PyBiorthResult> {
    let (path, norm) = (path_arg(path)?, normalization_arg(normalization)?);
    match self::mode(mode)? {
        Mode::Exact => {
            let mu = mu.iter().map(to_rational).collect::<PyResult<Vec<_>>>()?;
            let (res, residuals) = py.detach(|| build(&family.inner, &mu, path, norm))?;
            Ok(PyBiorthResult {
                f: exact_list(py, &res.f)?,
                path: res.path.label().into(),
                residuals: exact_list(py, &residuals)?,
                warnings: res.warnings,
            })
        }
        Mode::Float => {
            let mu = mu.iter().map(to_float).collect::<PyResult<Vec<_>>>()?;
            let fam = family.inner.to_mode::<f64>();
            let (res, residuals) = build(&fam, &mu, path, norm)?;
            Ok(PyBiorthResult {
                f: float_list(py, &res.f)?,
                path: res.path.label().into(),
                residuals: float_list(py, &residuals)?,
                warnings: res.warnings,
            })
        }
    }
}

/// `x^theta sF(s-1)(upper; lower; nu x)` for the family at one `mu`.
#[pyclass(name = "HypergeometricForm", module = "biorth", frozen)]
struct PyHyper {
    #[pyo3(get)]
    theta: Py<PyAny>,
    #[pyo3(get)]
    indicial_roots: Vec<Py<PyAny>>,
    #[pyo3(get)]
    upper: Vec<Py<PyAny>>,
    #[pyo3(get)]
    lower: Vec<Py<PyAny>>,
    #[pyo3(get)]
    nu: Py<PyAny>,
    #[pyo3(get)]
    s1: usize,
    #[pyo3(get)]
    s2: usize,
    #[pyo3(get)]
    label: String,
    /// Series coefficients `y_0..` with `y_0 = 1`.
    #[pyo3(get)]
    series: Vec<Py<PyAny>>,
    form: Option<ode::HypergeometricForm<f64>>,
}

#[pymethods]
impl PyHyper {
    /// The weight `x^theta pFq(...; nu x)` at `x > 0`.
    fn eval(&self, x: f64) -> PyResult<f64> {
        let form = self.form.as_ref().ok_or_else(|| PyValueError::new_err("form has no float evaluation"))?;
        form.eval(x, &PfqControl::default()).map_err(err)
    }

    fn __repr__(&self) -> String {
        format!("HypergeometricForm({}, s1={}, s2={})", self.label, self.s1, self.s2)
    }
}

/// Classifies the Frobenius solution of the family's equation at `mu`.
#[pyfunction]
#[pyo3(signature = (family, mu, gate = "order", terms = 10))]
fn hypergeometric(py: Python<'_>, family: &PyFamily, mu: &Bound<'_, PyAny>, gate: &str, terms: usize) -> PyResult<PyHyper> {
    let mu = to_rational(mu)?;
    let gate = gate_arg(gate)?;
    let eq = ode::frobenius_ode(&family.inner, &mu).map_err(err)?;
    let roots = ode::indicial_roots(&eq).map_err(err)?;
    let theta = ode::select_theta(&roots, eq.s, gate).ok_or_else(|| {
        BiorthError::new_err(("NoAdmissibleTheta", "no indicial root passes the theta gate".to_string()))
    })?;
    let form = ode::hypergeometric_form(&eq, &theta).map_err(err)?;
    let series = ode::series_coefficients(&eq, &theta, terms.saturating_sub(1)).map_err(err)?;
    let fr = |v: &Rational| fraction(py, v);
    let float_form = ode::frobenius_ode(&family.inner.to_mode::<f64>(), &mu.to_f64())
        .and_then(|e| ode::hypergeometric_form(&e, &theta.to_f64()))
        .ok();
    Ok(PyHyper {
        theta: fr(&theta)?.unbind(),
        indicial_roots: roots.expanded().iter().map(|r| root_value(py, r, fr)).collect::<PyResult<_>>()?,
        upper: form.upper.iter().map(|r| root_value(py, r, fr)).collect::<PyResult<_>>()?,
        lower: form.lower.iter().map(|r| root_value(py, r, fr)).collect::<PyResult<_>>()?,
        nu: fr(&form.nu)?.unbind(),
        s1: form.s1,
        s2: form.s2,
        label: form.label(),
        series: exact_list(py, &series)?,
        form: float_form,
    })
}

/// `pFq(upper; lower; z)` for real parameters and argument.
#[pyfunction]
fn eval_pfq(upper: Vec<f64>, lower: Vec<f64>, z: f64) -> PyResult<f64> {
    ode::eval_pfq_real(&upper, &lower, z, &PfqControl::default()).map_err(err)
}

/// Modified Bessel function of the first kind.
#[pyfunction]
fn bessel_i(tau: f64, z: f64) -> PyResult<f64> {
    ode::bessel_i(tau, z).map_err(err)
}

#[pymodule]
fn biorth(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("BiorthError", m.py().get_type::<BiorthError>())?;
    m.add_class::<PyFamily>()?;
    m.add_class::<PyBiorthResult>()?;
    m.add_class::<PyHyper>()?;
    m.add_function(wrap_pyfunction!(biorthogonal_poly, m)?)?;
    m.add_function(wrap_pyfunction!(hypergeometric, m)?)?;
    m.add_function(wrap_pyfunction!(eval_pfq, m)?)?;
    m.add_function(wrap_pyfunction!(bessel_i, m)?)?;
    Ok(())
}
