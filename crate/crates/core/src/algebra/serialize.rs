//! Serde support. Rationals travel as `"p/q"` strings so that values of any
//! size round-trip exactly.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::exponent::Exponent;
use super::operator::DifferentialOperator;
use super::polynomial::Polynomial;
use super::rational::{format_rational, parse_rational, Rational};

/// `#[serde(with = ...)]` adapter for a single rational.
pub mod rational_str {
    use super::*;

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(q))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        parse_rational(&text).ok_or_else(|| D::Error::custom(format!("bad rational '{text}'")))
    }
}

/// `#[serde(with = ...)]` adapter for a vector of rationals.
pub mod rational_vec {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        let texts: Vec<String> = v.iter().map(format_rational).collect();
        texts.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
        let texts = Vec::<String>::deserialize(d)?;
        texts
            .iter()
            .map(|t| parse_rational(t).ok_or_else(|| D::Error::custom(format!("bad rational '{t}'"))))
            .collect()
    }
}

#[derive(Serialize, Deserialize)]
struct PolyTerm {
    exponent: Exponent,
    #[serde(with = "rational_str")]
    coefficient: Rational,
}

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    nvars: usize,
    #[serde(default, skip_deserializing)]
    text: String,
    terms: Vec<PolyTerm>,
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PolyRepr {
            nvars: self.nvars(),
            text: self.to_string(),
            terms: self
                .terms()
                .map(|(e, c)| PolyTerm {
                    exponent: e.clone(),
                    coefficient: c.clone(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = PolyRepr::deserialize(d)?;
        Polynomial::from_terms(
            repr.nvars,
            repr.terms.into_iter().map(|t| (t.exponent, t.coefficient)),
        )
        .map_err(D::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct OpTerm {
    x: Exponent,
    d: Exponent,
    #[serde(with = "rational_str")]
    coefficient: Rational,
}

#[derive(Serialize, Deserialize)]
struct OpRepr {
    nvars: usize,
    #[serde(default, skip_deserializing)]
    text: String,
    terms: Vec<OpTerm>,
}

impl Serialize for DifferentialOperator {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        OpRepr {
            nvars: self.nvars(),
            text: self.to_string(),
            terms: self
                .terms()
                .map(|(b, a, c)| OpTerm {
                    x: b.clone(),
                    d: a.clone(),
                    coefficient: c.clone(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for DifferentialOperator {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = OpRepr::deserialize(d)?;
        DifferentialOperator::from_terms(
            repr.nvars,
            repr.terms.into_iter().map(|t| (t.x, t.d, t.coefficient)),
        )
        .map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};

    #[test]
    fn polynomial_round_trip() {
        let x = Polynomial::var(2, 0);
        let y = Polynomial::var(2, 1);
        let p = &(&x * &y).scale(&rat(-3, 7)) + &Polynomial::constant(2, int(5));
        let json = serde_json::to_string(&p).unwrap();
        assert!(json.contains("\"-3/7\""));
        let back: Polynomial = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn operator_round_trip() {
        let op = &DifferentialOperator::x(1, 0) * &DifferentialOperator::d(1, 0);
        let json = serde_json::to_string(&op).unwrap();
        let back: DifferentialOperator = serde_json::from_str(&json).unwrap();
        assert_eq!(back, op);
    }
}
