use std::fmt;

use serde::{Deserialize, Serialize};

use super::subspace::SubspaceV;
use crate::algebra::{format_rational, Exponent, Polynomial, Rational};
use crate::error::{Error, Result};

/// Where a jet matrix is taken: at a rational point or at the generic point.
/// Serialized as the string `"GENERIC"` or an array of `"p/q"` strings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EvalPoint {
    At(Vec<Rational>),
    Generic,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum EvalPointRepr {
    Tag(String),
    #[serde(with = "crate::algebra::serialize::rational_vec")]
    At(Vec<Rational>),
}

impl Serialize for EvalPoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            EvalPoint::Generic => EvalPointRepr::Tag("GENERIC".into()),
            EvalPoint::At(pt) => EvalPointRepr::At(pt.clone()),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for EvalPoint {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        match EvalPointRepr::deserialize(d)? {
            EvalPointRepr::Tag(t) if t == "GENERIC" => Ok(EvalPoint::Generic),
            EvalPointRepr::Tag(t) => Err(serde::de::Error::custom(format!("unknown point tag '{t}'"))),
            EvalPointRepr::At(pt) => Ok(EvalPoint::At(pt)),
        }
    }
}

impl fmt::Display for EvalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvalPoint::Generic => write!(f, "GENERIC"),
            EvalPoint::At(pt) => {
                let coords: Vec<String> = pt.iter().map(format_rational).collect();
                write!(f, "({})", coords.join(", "))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum JetEntries {
    Numeric(Vec<Vec<Rational>>),
    Symbolic(Vec<Vec<Polynomial>>),
}

/// Matrix of the Taylor map of order `n`: row `i`, column `α` holds
/// `∂^α p_i / α!`, either evaluated at a point or as a polynomial.
///
/// Columns run over `|α| ≤ n` in graded order, so the matrix of a smaller
/// order is a column prefix of this one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JetMatrix {
    pub order: u32,
    pub columns: Vec<Exponent>,
    pub entries: JetEntries,
    pub point: EvalPoint,
}

impl JetMatrix {
    pub fn nrows(&self) -> usize {
        match &self.entries {
            JetEntries::Numeric(r) => r.len(),
            JetEntries::Symbolic(r) => r.len(),
        }
    }

    pub fn ncols(&self) -> usize {
        self.columns.len()
    }

    /// The jet matrix of a lower order, obtained by dropping columns.
    pub fn truncated(&self, order: u32) -> JetMatrix {
        assert!(order <= self.order, "cannot raise the order by truncation");
        let keep = self.columns.iter().take_while(|c| c.degree() <= order).count();
        let entries = match &self.entries {
            JetEntries::Numeric(rows) => {
                JetEntries::Numeric(rows.iter().map(|r| r[..keep].to_vec()).collect())
            }
            JetEntries::Symbolic(rows) => {
                JetEntries::Symbolic(rows.iter().map(|r| r[..keep].to_vec()).collect())
            }
        };
        JetMatrix {
            order,
            columns: self.columns[..keep].to_vec(),
            entries,
            point: self.point.clone(),
        }
    }

    pub fn numeric(&self) -> Option<&[Vec<Rational>]> {
        match &self.entries {
            JetEntries::Numeric(r) => Some(r),
            JetEntries::Symbolic(_) => None,
        }
    }

    pub fn symbolic(&self) -> Option<&[Vec<Polynomial>]> {
        match &self.entries {
            JetEntries::Symbolic(r) => Some(r),
            JetEntries::Numeric(_) => None,
        }
    }
}

/// Symbolic entries `∂^α p / α!` for all basis elements and columns.
pub(crate) fn symbolic_rows(basis: &[Polynomial], columns: &[Exponent]) -> Vec<Vec<Polynomial>> {
    basis
        .iter()
        .map(|p| columns.iter().map(|a| p.taylor_coefficient(a)).collect())
        .collect()
}

/// Builds the order-`n` jet matrix of `v` at `at`.
pub fn jet_matrix(v: &SubspaceV, n: u32, at: &EvalPoint) -> Result<JetMatrix> {
    let columns = Exponent::all_up_to_degree(v.nvars(), n);
    let symbolic = symbolic_rows(v.basis(), &columns);
    let entries = match at {
        EvalPoint::Generic => JetEntries::Symbolic(symbolic),
        EvalPoint::At(pt) => {
            if pt.len() != v.nvars() {
                return Err(Error::DimensionMismatch {
                    expected: v.nvars(),
                    found: pt.len(),
                });
            }
            JetEntries::Numeric(evaluate_rows(&symbolic, pt)?)
        }
    };
    Ok(JetMatrix {
        order: n,
        columns,
        entries,
        point: at.clone(),
    })
}

pub(crate) fn evaluate_rows(rows: &[Vec<Polynomial>], pt: &[Rational]) -> Result<Vec<Vec<Rational>>> {
    rows.iter()
        .map(|r| r.iter().map(|p| p.eval(pt)).collect::<Result<Vec<_>>>())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;

    fn v1(exps: &[u32]) -> SubspaceV {
        SubspaceV::from_monomials(1, exps.iter().map(|&k| Exponent::new(vec![k])).collect()).unwrap()
    }

    fn mono(k: u32, c: i64) -> Polynomial {
        Polynomial::monomial(Exponent::new(vec![k]), int(c))
    }

    #[test]
    fn identity_at_origin() {
        let m = jet_matrix(&v1(&[0, 1, 2]), 2, &EvalPoint::At(vec![int(0)])).unwrap();
        let id: Vec<Vec<Rational>> = (0..3)
            .map(|i| (0..3).map(|j| int((i == j) as i64)).collect())
            .collect();
        assert_eq!(m.numeric().unwrap(), id.as_slice());
    }

    #[test]
    fn generic_rows() {
        let m = jet_matrix(&v1(&[0, 1, 3]), 2, &EvalPoint::Generic).unwrap();
        let rows = m.symbolic().unwrap();
        assert_eq!(rows[0], vec![mono(0, 1), Polynomial::zero(1), Polynomial::zero(1)]);
        assert_eq!(rows[1], vec![mono(1, 1), mono(0, 1), Polynomial::zero(1)]);
        assert_eq!(rows[2], vec![mono(3, 1), mono(2, 3), mono(1, 3)]);
    }

    #[test]
    fn constant_section() {
        let m = jet_matrix(&v1(&[0]), 0, &EvalPoint::At(vec![int(7)])).unwrap();
        assert_eq!(m.numeric().unwrap(), &[vec![int(1)]]);
    }

    #[test]
    fn column_count_and_prefix() {
        let v = SubspaceV::from_monomials(
            3,
            vec![Exponent::new(vec![1, 2, 0]), Exponent::new(vec![0, 0, 3])],
        )
        .unwrap();
        let m = jet_matrix(&v, 3, &EvalPoint::Generic).unwrap();
        assert_eq!(m.ncols(), 20);
        assert_eq!(m.truncated(1).ncols(), 4);
        assert_eq!(m.truncated(1), jet_matrix(&v, 1, &EvalPoint::Generic).unwrap());
        assert!(matches!(
            jet_matrix(&v, 1, &EvalPoint::At(vec![int(1)])),
            Err(Error::DimensionMismatch { .. })
        ));
    }
}
