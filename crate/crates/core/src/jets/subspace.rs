use std::collections::{BTreeSet, HashSet};

use crate::algebra::{Exponent, Polynomial, Rational};
use crate::error::{Error, Result};
use crate::linalg::rank_rational;

/// A finite-dimensional subspace `V ⊂ ℚ[x_1..x_n]` with an ordered basis.
///
/// When every basis element is a single monomial the exponents are kept as
/// the point set `P` of the monomial space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceV {
    nvars: usize,
    basis: Vec<Polynomial>,
    monomial_points: Option<Vec<Exponent>>,
    max_degree: u32,
}

impl SubspaceV {
    /// Validates the basis: at least one element, matching variable counts
    /// and exact linear independence.
    pub fn new(nvars: usize, basis: Vec<Polynomial>) -> Result<Self> {
        if nvars == 0 {
            return Err(Error::InvalidArgument("at least one variable is required".into()));
        }
        if basis.is_empty() {
            return Err(Error::EmptyBasis);
        }
        if let Some(p) = basis.iter().find(|p| p.nvars() != nvars) {
            return Err(Error::DimensionMismatch {
                expected: nvars,
                found: p.nvars(),
            });
        }
        let rank = rank_rational(&coefficient_rows(&basis));
        if rank < basis.len() {
            return Err(Error::DependentBasis {
                rank,
                len: basis.len(),
            });
        }
        let monomial_points = basis
            .iter()
            .map(|p| p.as_monomial().map(|(e, _)| e.clone()))
            .collect::<Option<Vec<_>>>();
        let max_degree = basis.iter().filter_map(Polynomial::degree).max().unwrap_or(0);
        Ok(SubspaceV {
            nvars,
            basis,
            monomial_points,
            max_degree,
        })
    }

    /// The span of `x^m` for `m` in `points`; duplicates are rejected.
    pub fn from_monomials(nvars: usize, points: Vec<Exponent>) -> Result<Self> {
        let mut seen = HashSet::new();
        for p in &points {
            if p.nvars() != nvars {
                return Err(Error::DimensionMismatch {
                    expected: nvars,
                    found: p.nvars(),
                });
            }
            if !seen.insert(p.clone()) {
                return Err(Error::DuplicateMonomial(p.to_string()));
            }
        }
        let basis = points
            .iter()
            .map(|e| Polynomial::monomial(e.clone(), crate::algebra::one()))
            .collect();
        SubspaceV::new(nvars, basis)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn monomial_points(&self) -> Option<&[Exponent]> {
        self.monomial_points.as_deref()
    }

    pub fn is_monomial(&self) -> bool {
        self.monomial_points.is_some()
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    /// Whether `p` lies in the span, decided by exact rank.
    pub fn contains(&self, p: &Polynomial) -> bool {
        if p.is_zero() {
            return true;
        }
        let mut all = self.basis.clone();
        all.push(p.clone());
        rank_rational(&coefficient_rows(&all)) == self.dim()
    }
}

/// Coefficient vectors of `polys` over the union of their supports.
pub fn coefficient_rows(polys: &[Polynomial]) -> Vec<Vec<Rational>> {
    let support: BTreeSet<&Exponent> = polys.iter().flat_map(|p| p.terms().map(|(e, _)| e)).collect();
    polys
        .iter()
        .map(|p| support.iter().map(|e| p.coefficient(e)).collect())
        .collect()
}
