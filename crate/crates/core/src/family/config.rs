//! JSON family descriptions. Rationals are `"p/q"` strings.

use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{FamilyKind, MqfFamily, Quadruple, Support, WeightForm};
use crate::error::{Error, Result};
use crate::numeric::{parse_rational, Polynomial, Rational, RationalFunction};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyConfig {
    pub name: String,
    /// `"polynomial"` or `"explicit-table"`.
    pub kind: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub a: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub b: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub c: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub d: Vec<String>,
    /// `"linear-2.1"` (at most two coefficients, `alpha_n = a_0 - n a_1`) or
    /// `"pochhammer-3"` (`alpha_n = sum a_l (-n)_l`). Both evaluate the same
    /// way; the tag only constrains the list lengths.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<String>,
    /// `"(0,1)"` or `"(0,inf)"`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub support: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weight_form: Option<WeightFormConfig>,
    /// Rows `[alpha_n, beta_n, gamma_n, delta_n]` for `"explicit-table"`.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub table: Vec<[String; 4]>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
pub enum WeightFormConfig {
    /// `x^{num(mu)/den(mu)}`, coefficient lists lowest degree first.
    Power {
        exponent_num: Vec<String>,
        #[serde(default = "one_list")]
        exponent_den: Vec<String>,
    },
    Hypergeometric,
    Bessel,
}

fn one_list() -> Vec<String> {
    vec!["1".to_string()]
}

fn parse_list(name: &str, v: &[String]) -> Result<Vec<Rational>> {
    v.iter()
        .map(|s| parse_rational(s).map_err(|e| Error::Config(format!("{name}: {e}"))))
        .collect()
}

impl FamilyConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let text = std::fs::read_to_string(path.as_ref())
            .map_err(|e| Error::Config(format!("{}: {e}", path.as_ref().display())))?;
        Self::from_json(&text)
    }

    pub fn to_family(&self) -> Result<MqfFamily<Rational>> {
        let kind = match self.kind.as_str() {
            "polynomial" => {
                let lists = [("a", &self.a), ("b", &self.b), ("c", &self.c), ("d", &self.d)];
                let mut parsed = Vec::with_capacity(4);
                for (name, v) in lists {
                    if v.is_empty() {
                        return Err(Error::Config(format!("polynomial family needs a non-empty {name:?} list")));
                    }
                    parsed.push(parse_list(name, v)?);
                }
                match self.basis.as_deref() {
                    None | Some("pochhammer-3") => {}
                    Some("linear-2.1") => {
                        if parsed.iter().any(|v| v.len() > 2) {
                            return Err(Error::Config("linear-2.1 basis takes at most two coefficients".into()));
                        }
                    }
                    Some(other) => return Err(Error::Config(format!("unknown basis {other:?}"))),
                }
                let mut it = parsed.into_iter();
                FamilyKind::Polynomial {
                    a: it.next().unwrap(),
                    b: it.next().unwrap(),
                    c: it.next().unwrap(),
                    d: it.next().unwrap(),
                }
            }
            "explicit-table" => {
                if self.table.is_empty() {
                    return Err(Error::Config("explicit-table family needs a non-empty \"table\"".into()));
                }
                let rows = self
                    .table
                    .iter()
                    .map(|row| {
                        let v = parse_list("table", row)?;
                        Ok(Quadruple::new(v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone()))
                    })
                    .collect::<Result<Vec<_>>>()?;
                FamilyKind::Table(rows)
            }
            other => return Err(Error::Config(format!("unknown family kind {other:?}"))),
        };

        let weight_form = match &self.weight_form {
            None => None,
            Some(WeightFormConfig::Power { exponent_num, exponent_den }) => {
                let num = Polynomial::new(parse_list("exponent_num", exponent_num)?);
                let den = Polynomial::new(parse_list("exponent_den", exponent_den)?);
                Some(WeightForm::Power { exponent: RationalFunction::new(num, den)? })
            }
            Some(WeightFormConfig::Hypergeometric) => Some(WeightForm::Hypergeometric),
            Some(WeightFormConfig::Bessel) => Some(WeightForm::Bessel),
        };

        let support = match self.support.as_deref() {
            Some("(0,1)") => Support::UnitInterval,
            Some("(0,inf)") => Support::HalfLine,
            Some(other) => return Err(Error::Config(format!("unknown support {other:?}"))),
            None => match weight_form {
                Some(WeightForm::Power { .. }) => Support::UnitInterval,
                _ => Support::HalfLine,
            },
        };

        Ok(MqfFamily { name: self.name.clone(), kind, support, weight_form })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::Scalar;

    const JACOBI: &str = r#"{
        "name": "jacobi", "kind": "polynomial", "basis": "linear-2.1",
        "a": ["0", "-1"], "b": ["1", "0"], "c": ["1", "-1"], "d": ["1", "0"],
        "support": "(0,1)",
        "weight_form": {"type": "power", "exponent_num": ["-1", "1"]}
    }"#;

    #[test]
    fn parses_jacobi() {
        let fam = FamilyConfig::from_json(JACOBI).unwrap().to_family().unwrap();
        let reference = MqfFamily::<Rational>::jacobi();
        assert_eq!(fam.kind, reference.kind);
        assert_eq!(fam.support, Support::UnitInterval);
        assert_eq!(fam.weight_form, reference.weight_form);
    }

    #[test]
    fn explicit_table() {
        let text = r#"{"name": "t", "kind": "explicit-table",
            "table": [["1","1","1","3"], ["2","1","1","4"], ["3","1","1","5"]]}"#;
        let fam = FamilyConfig::from_json(text).unwrap().to_family().unwrap();
        assert_eq!(fam.table_len(), Some(3));
        assert_eq!(fam.coefficients(2).unwrap().delta, Rational::from_int(5));
        assert_eq!(fam.support, Support::HalfLine);
    }

    #[test]
    fn rejects_bad_configs() {
        for bad in [
            r#"{"name": "x", "kind": "polynomial", "a": ["1"], "b": ["1"], "c": ["1"]}"#,
            r#"{"name": "x", "kind": "nope"}"#,
            r#"{"name": "x", "kind": "polynomial", "a": ["1/0"], "b": ["1"], "c": ["1"], "d": ["1"]}"#,
            r#"{"name": "x", "kind": "polynomial", "basis": "linear-2.1", "a": ["1","2","3"], "b": ["1"], "c": ["1"], "d": ["1"]}"#,
            r#"{"name": "x", "kind": "polynomial", "a": ["1"], "b": ["1"], "c": ["1"], "d": ["1"], "extra": 1}"#,
            r#"{"name": "x", "kind": "explicit-table", "table": [["1","2","3"]]}"#,
            "not json",
        ] {
            let parsed = FamilyConfig::from_json(bad).and_then(|c| c.to_family());
            assert!(matches!(parsed, Err(Error::Config(_))), "{bad}");
        }
    }

    #[test]
    fn round_trips_through_json() {
        let cfg = FamilyConfig::from_json(JACOBI).unwrap();
        let text = serde_json::to_string(&cfg).unwrap();
        assert_eq!(FamilyConfig::from_json(&text).unwrap(), cfg);
    }
}
