//! JSON input documents: polynomial spaces, polytopes and point lists.

use std::collections::BTreeMap;

use num_traits::One;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::algebra::{format_rational, parse_rational, Exponent, Polynomial, Rational};
use crate::config::ComputeConfig;
use crate::error::Error;
use crate::jets::SubspaceV;
use crate::toric::LatticePolytope;

/// Input problems, each with a stable code.
#[derive(Debug, Error)]
pub enum InputError {
    #[error("malformed document: {0}")]
    Syntax(String),
    #[error("malformed rational '{0}'")]
    Rational(String),
    #[error("negative or non-integer exponent in {0}")]
    Exponent(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("duplicate monomial {0}")]
    Duplicate(String),
    #[error("linearly dependent basis: rank {rank} < {len}")]
    Dependent { rank: usize, len: usize },
    #[error("{0}")]
    Invalid(String),
}

impl InputError {
    pub fn code(&self) -> &'static str {
        match self {
            InputError::Syntax(_) => "E001",
            InputError::Rational(_) => "E002",
            InputError::Exponent(_) => "E003",
            InputError::Dimension(_) => "E004",
            InputError::Duplicate(_) => "E005",
            InputError::Dependent { .. } => "E006",
            InputError::Invalid(_) => "E007",
        }
    }
}

impl From<Error> for InputError {
    fn from(e: Error) -> Self {
        match e {
            Error::DimensionMismatch { expected, found } => {
                InputError::Dimension(format!("expected {expected} coordinates, found {found}"))
            }
            Error::DependentBasis { rank, len } => InputError::Dependent { rank, len },
            Error::DuplicateMonomial(m) => InputError::Duplicate(m),
            other => InputError::Invalid(other.to_string()),
        }
    }
}

/// Space document: `nvars` plus `monomials` or `polynomials`, and optional
/// computation settings.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceFile {
    pub nvars: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub monomials: Option<Vec<Vec<i64>>>,
    /// Each polynomial maps an exponent vector written as JSON text, such as
    /// `"[1,0]"`, to a rational `"p/q"`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub polynomials: Option<Vec<BTreeMap<String, String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub symbolic_max_dim: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub random_trials: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub very_ample_bound: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub minors_cap: Option<usize>,
}

impl SpaceFile {
    /// Settings from the document layered over `base`.
    pub fn apply(&self, base: &ComputeConfig) -> ComputeConfig {
        let mut cfg = base.clone();
        if let Some(s) = self.seed {
            cfg.seed = s;
        }
        if let Some(v) = self.symbolic_max_dim {
            cfg.symbolic_max_dim = v;
        }
        if let Some(v) = self.random_trials {
            cfg.random_trials = v;
        }
        if let Some(v) = self.very_ample_bound {
            cfg.very_ample_bound = v;
        }
        if let Some(v) = self.minors_cap {
            cfg.minors_cap = v;
        }
        cfg
    }
}

fn exponent(nvars: usize, raw: &[i64]) -> Result<Exponent, InputError> {
    if raw.len() != nvars {
        return Err(InputError::Dimension(format!(
            "exponent {raw:?} has {} entries, nvars is {nvars}",
            raw.len()
        )));
    }
    Exponent::from_signed(raw).ok_or_else(|| InputError::Exponent(format!("{raw:?}")))
}

fn exponent_key(nvars: usize, key: &str) -> Result<Exponent, InputError> {
    let value: Value = serde_json::from_str(key).map_err(|_| InputError::Syntax(format!("exponent key '{key}'")))?;
    let entries = value
        .as_array()
        .ok_or_else(|| InputError::Syntax(format!("exponent key '{key}' is not an array")))?;
    let raw = entries
        .iter()
        .map(|v| v.as_i64().ok_or_else(|| InputError::Exponent(key.to_string())))
        .collect::<Result<Vec<_>, _>>()?;
    exponent(nvars, &raw)
}

pub fn parse_space_file(text: &str) -> Result<SpaceFile, InputError> {
    serde_json::from_str(text).map_err(|e| InputError::Syntax(e.to_string()))
}

/// Validated space from a document.
pub fn parse_space(text: &str) -> Result<(SubspaceV, SpaceFile), InputError> {
    let file = parse_space_file(text)?;
    Ok((space_from_file(&file)?, file))
}

pub fn space_from_file(file: &SpaceFile) -> Result<SubspaceV, InputError> {
    let n = file.nvars;
    match (&file.monomials, &file.polynomials) {
        (Some(ms), None) => {
            let exps = ms.iter().map(|m| exponent(n, m)).collect::<Result<Vec<_>, _>>()?;
            Ok(SubspaceV::from_monomials(n, exps)?)
        }
        (None, Some(ps)) => {
            let polys = ps
                .iter()
                .map(|terms| {
                    let parsed = terms
                        .iter()
                        .map(|(k, c)| {
                            let q = parse_rational(c).ok_or_else(|| InputError::Rational(c.clone()))?;
                            Ok((exponent_key(n, k)?, q))
                        })
                        .collect::<Result<Vec<(Exponent, Rational)>, InputError>>()?;
                    Ok(Polynomial::from_terms(n, parsed)?)
                })
                .collect::<Result<Vec<_>, InputError>>()?;
            Ok(SubspaceV::new(n, polys)?)
        }
        _ => Err(InputError::Syntax(
            "exactly one of 'monomials' and 'polynomials' is required".into(),
        )),
    }
}

/// Document describing `v`; bases of unit monomials use the compact form.
pub fn serialize_space(v: &SubspaceV) -> String {
    let unit = v.basis().iter().all(|p| p.as_monomial().is_some_and(|(_, c)| c.is_one()));
    let file = match v.monomial_points().filter(|_| unit) {
        Some(ms) => SpaceFile {
            nvars: v.nvars(),
            monomials: Some(ms.iter().map(Exponent::to_signed).collect()),
            ..Default::default()
        },
        None => SpaceFile {
            nvars: v.nvars(),
            polynomials: Some(
                v.basis()
                    .iter()
                    .map(|p| {
                        p.terms()
                            .map(|(e, c)| {
                                (serde_json::to_string(&e.to_signed()).unwrap(), format_rational(c))
                            })
                            .collect()
                    })
                    .collect(),
            ),
            ..Default::default()
        },
    };
    serde_json::to_string(&file).expect("space documents serialize")
}

/// Polytope document: `{"vertices": …}`, or `{"points": …, "vertices": …}`
/// with optional `"edges"` as vertex index pairs.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolytopeFile {
    #[serde(default)]
    pub points: Option<Vec<Vec<i64>>>,
    #[serde(default)]
    pub vertices: Option<Vec<Vec<i64>>>,
    #[serde(default)]
    pub edges: Option<Vec<(usize, usize)>>,
    #[serde(default)]
    pub seed: Option<u64>,
    #[serde(default)]
    pub very_ample_bound: Option<u32>,
}

fn exponents(raw: &[Vec<i64>]) -> Result<Vec<Exponent>, InputError> {
    let n = raw
        .first()
        .map(Vec::len)
        .ok_or_else(|| InputError::Invalid("empty point list".into()))?;
    raw.iter().map(|p| exponent(n, p)).collect()
}

pub fn parse_polytope(text: &str) -> Result<(LatticePolytope, PolytopeFile), InputError> {
    let file: PolytopeFile = serde_json::from_str(text).map_err(|e| InputError::Syntax(e.to_string()))?;
    let poly = match (&file.points, &file.vertices, &file.edges) {
        (None, Some(vs), None) => LatticePolytope::from_vertices(&exponents(vs)?)?,
        (Some(ps), Some(vs), Some(es)) => LatticePolytope::explicit(exponents(ps)?, exponents(vs)?, es)?,
        (Some(ps), vs, None) => {
            let poly = LatticePolytope::from_points(&exponents(ps)?)?;
            if let Some(vs) = vs {
                let mut given = exponents(vs)?;
                given.sort();
                given.dedup();
                if given != poly.vertices {
                    return Err(InputError::Invalid(format!(
                        "supplied vertices differ from the hull vertices {:?}",
                        poly.vertices.iter().map(ToString::to_string).collect::<Vec<_>>()
                    )));
                }
            }
            poly
        }
        _ => {
            return Err(InputError::Syntax(
                "expected 'vertices', 'points', or 'points' + 'vertices' + 'edges'".into(),
            ))
        }
    };
    Ok((poly, file))
}

/// Point list: an array of points whose coordinates are integers or
/// rational strings.
pub fn parse_points(text: &str, nvars: usize) -> Result<Vec<Vec<Rational>>, InputError> {
    let value: Value = serde_json::from_str(text).map_err(|e| InputError::Syntax(e.to_string()))?;
    let rows = value
        .as_array()
        .ok_or_else(|| InputError::Syntax("point list must be an array".into()))?;
    rows.iter()
        .map(|row| {
            let coords = row
                .as_array()
                .ok_or_else(|| InputError::Syntax(format!("point {row} is not an array")))?;
            if coords.len() != nvars {
                return Err(InputError::Dimension(format!(
                    "point {row} has {} coordinates, nvars is {nvars}",
                    coords.len()
                )));
            }
            coords.iter().map(coordinate).collect()
        })
        .collect()
}

fn coordinate(v: &Value) -> Result<Rational, InputError> {
    match v {
        Value::String(s) => parse_rational(s).ok_or_else(|| InputError::Rational(s.clone())),
        Value::Number(n) => n
            .as_i64()
            .map(|i| Rational::from_integer(i.into()))
            .ok_or_else(|| InputError::Rational(n.to_string())),
        other => Err(InputError::Rational(other.to_string())),
    }
}

/// Comma-separated rational coordinates, as given to `--at`.
pub fn parse_coordinates(text: &str) -> Result<Vec<Rational>, InputError> {
    text.split(',')
        .map(|s| parse_rational(s.trim()).ok_or_else(|| InputError::Rational(s.trim().to_string())))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};

    #[test]
    fn space_examples() {
        let (v, _) = parse_space(r#"{"nvars":1, "monomials":[[0],[1],[3]]}"#).unwrap();
        assert!(v.is_monomial());
        assert_eq!(v.dim(), 3);
        let (w, _) = parse_space(r#"{"nvars":1, "polynomials":[{"[0]":"1"},{"[0]":"1","[1]":"1"}]}"#).unwrap();
        assert!(!w.is_monomial());
        let dup = parse_space(r#"{"nvars":1, "monomials":[[0],[0]]}"#).unwrap_err();
        assert_eq!(dup.code(), "E005");
    }

    #[test]
    fn error_codes_are_distinct() {
        let cases = [
            (r#"{"nvars":1, "polynomials":[{"[0]":"1/0"}]}"#, "E002"),
            (r#"{"nvars":1, "monomials":[[-1]]}"#, "E003"),
            (r#"{"nvars":2, "monomials":[[1]]}"#, "E004"),
            (r#"{"nvars":1, "polynomials":[{"[1]":"2"},{"[1]":"-4"}]}"#, "E006"),
            (r#"{"nvars":1}"#, "E001"),
            (r#"not json"#, "E001"),
        ];
        for (text, code) in cases {
            assert_eq!(parse_space(text).unwrap_err().code(), code, "{text}");
        }
    }

    #[test]
    fn round_trip() {
        for text in [
            r#"{"nvars":2,"monomials":[[0,0],[2,1],[0,3]]}"#,
            r#"{"nvars":1,"polynomials":[{"[0]":"1"},{"[0]":"-1/3","[2]":"5"}]}"#,
        ] {
            let (v, _) = parse_space(text).unwrap();
            let (back, _) = parse_space(&serialize_space(&v)).unwrap();
            assert_eq!(back, v);
        }
    }

    #[test]
    fn polytopes_and_points() {
        let (p, _) = parse_polytope(r#"{"vertices":[[0,0],[3,0],[0,1],[2,1]]}"#).unwrap();
        assert_eq!(p.points.len(), 7);
        let err = parse_polytope(r#"{"points":[[0,0],[2,0],[0,1]]}"#).unwrap_err();
        assert!(err.to_string().contains("(1,0)"));
        let pts = parse_points(r#"[["1/2", 3], [0, "-2"]]"#, 2).unwrap();
        assert_eq!(pts[0], vec![rat(1, 2), int(3)]);
        assert_eq!(parse_coordinates("1/2, -3").unwrap(), vec![rat(1, 2), int(-3)]);
        assert_eq!(parse_coordinates("x").unwrap_err().code(), "E002");
    }
}
