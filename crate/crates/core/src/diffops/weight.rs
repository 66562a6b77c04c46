use std::collections::BTreeSet;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{DifferentialOperator, Exponent, Rational, Weight};
use crate::error::{Error, Result};
use crate::linalg::row_reduce;

/// Weight-`w` operators of order `≤ n` preserving the monomial span of `P`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WeightSpace {
    pub weight: Weight,
    pub order: u32,
    /// Term `α` stands for `x^(α + w) ∂^α`.
    pub terms: Vec<Exponent>,
    /// One row per `m ∈ P` with `m + w ∉ P`, entries `(m)_α`.
    #[serde(skip)]
    pub constraints: Vec<Vec<Rational>>,
    pub basis: Vec<DifferentialOperator>,
    /// Dimension of the subspace acting by zero on every `x^m`, `m ∈ P`.
    pub annihilator_dim: usize,
}

impl WeightSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Operator with coefficient vector `coef` over `terms`.
    pub fn operator(&self, coef: &[Rational]) -> DifferentialOperator {
        let nvars = self.weight.len();
        let mut op = DifferentialOperator::zero(nvars);
        for (alpha, c) in self.terms.iter().zip(coef) {
            if c.is_zero() {
                continue;
            }
            let beta = alpha.shifted(&self.weight).expect("term set keeps α + w ≥ 0");
            op = &op + &DifferentialOperator::term(beta, alpha.clone(), c.clone());
        }
        op
    }
}

fn eigen_row(m: &Exponent, terms: &[Exponent]) -> Vec<Rational> {
    terms
        .iter()
        .map(|a| Rational::from_integer(m.falling_factorial(a)))
        .collect()
}

fn check_input(points: &[Exponent], w: &[i64]) -> Result<usize> {
    let nvars = w.len();
    if let Some(bad) = points.iter().find(|p| p.nvars() != nvars) {
        return Err(Error::DimensionMismatch {
            expected: nvars,
            found: bad.nvars(),
        });
    }
    Ok(nvars)
}

fn term_set(nvars: usize, w: &[i64], n: u32) -> Vec<Exponent> {
    Exponent::all_up_to_degree(nvars, n)
        .into_iter()
        .filter(|a| a.shifted(w).is_some())
        .collect()
}

/// Exact solution space of the preservation constraints in weight `w`.
pub fn preserving_weight_space(points: &[Exponent], w: &[i64], n: u32) -> Result<WeightSpace> {
    let nvars = check_input(points, w)?;
    let set: BTreeSet<&Exponent> = points.iter().collect();
    let terms = term_set(nvars, w, n);
    let constraints: Vec<Vec<Rational>> = points
        .iter()
        .filter(|m| m.shifted(w).is_none_or(|t| !set.contains(&t)))
        .map(|m| eigen_row(m, &terms))
        .collect();
    let mut space = WeightSpace {
        weight: w.to_vec(),
        order: n,
        basis: Vec::new(),
        annihilator_dim: annihilator_from_terms(points, &terms),
        constraints,
        terms,
    };
    let kernel = row_reduce(&space.constraints, space.terms.len()).nullspace();
    space.basis = kernel
        .into_iter()
        .map(|mut v| {
            let lead = v.iter().find(|c| !c.is_zero()).cloned().unwrap_or_else(Rational::one);
            for c in &mut v {
                *c /= &lead;
            }
            space.operator(&v)
        })
        .collect();
    Ok(space)
}

fn annihilator_from_terms(points: &[Exponent], terms: &[Exponent]) -> usize {
    let rows: Vec<Vec<Rational>> = points.iter().map(|m| eigen_row(m, terms)).collect();
    terms.len() - row_reduce(&rows, terms.len()).rank()
}

/// Dimension of the weight-`w` slice of the order-`≤ n` annihilator of the
/// monomial span of `P`.
pub fn annihilator_weight_dim(points: &[Exponent], w: &[i64], n: u32) -> Result<usize> {
    let nvars = check_input(points, w)?;
    Ok(annihilator_from_terms(points, &term_set(nvars, w, n)))
}

/// All differences `m − m'` of points, sorted.
pub fn difference_weights(points: &[Exponent]) -> Vec<Weight> {
    let signed: Vec<Vec<i64>> = points.iter().map(Exponent::to_signed).collect();
    let set: BTreeSet<Weight> = signed
        .iter()
        .flat_map(|a| {
            signed
                .iter()
                .map(move |b| a.iter().zip(b).map(|(x, y)| x - y).collect())
        })
        .collect();
    set.into_iter().collect()
}
