use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::generators::Generator;
use super::span::Coordinates;
use super::weight::{difference_weights, preserving_weight_space};
use crate::algebra::{DifferentialOperator, Exponent, Polynomial, Rational};
use crate::error::{Error, Result};
use crate::jets::SubspaceV;
use crate::linalg::{row_reduce, transpose};

/// Span of the action of preserving operators inside `End(V)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EndImage {
    pub dim_v: usize,
    /// `M[i][j]` is the coordinate on `b_i` of the image of `b_j`.
    #[serde(skip)]
    pub matrices: Vec<Vec<Vec<Rational>>>,
    pub rank: usize,
}

impl EndImage {
    fn from_matrices(dim_v: usize, matrices: Vec<Vec<Vec<Rational>>>) -> Self {
        let rank = span_rank(&matrices, dim_v);
        EndImage {
            dim_v,
            matrices,
            rank,
        }
    }

    pub fn is_full(&self) -> bool {
        self.rank == self.dim_v * self.dim_v
    }

    /// Whether both images span the same subspace of `End(V)`.
    pub fn same_span(&self, other: &EndImage) -> bool {
        if self.dim_v != other.dim_v || self.rank != other.rank {
            return false;
        }
        let mut all = self.matrices.clone();
        all.extend(other.matrices.iter().cloned());
        span_rank(&all, self.dim_v) == self.rank
    }
}

fn flatten(m: &[Vec<Rational>]) -> Vec<Rational> {
    m.iter().flatten().cloned().collect()
}

fn span_rank(matrices: &[Vec<Vec<Rational>>], dim_v: usize) -> usize {
    let rows: Vec<Vec<Rational>> = matrices.iter().map(|m| flatten(m)).collect();
    row_reduce(&rows, dim_v * dim_v).rank()
}

/// Matrix of `op` on the ordered basis of `V`, or `None` if `op` does not
/// preserve `V`.
pub fn operator_matrix(op: &DifferentialOperator, v: &SubspaceV) -> Result<Option<Vec<Vec<Rational>>>> {
    operator_matrix_with(op, v, &Coordinates::new(v))
}

fn operator_matrix_with(
    op: &DifferentialOperator,
    v: &SubspaceV,
    coords: &Coordinates,
) -> Result<Option<Vec<Vec<Rational>>>> {
    let mut columns = Vec::with_capacity(v.dim());
    for b in v.basis() {
        match coords.coords(&op.apply(b)?) {
            Some(c) => columns.push(c),
            None => return Ok(None),
        }
    }
    Ok(Some(transpose(&columns)))
}

fn require_monomial(v: &SubspaceV) -> Result<&[Exponent]> {
    v.monomial_points().ok_or_else(|| {
        Error::InvalidArgument(
            "weight decomposition needs a monomial basis; use the coefficient-bounded variant".into(),
        )
    })
}

/// Image of the order-`≤ n` preserving operators in `End(V)`, assembled
/// weight by weight over `P − P`.
pub fn evaluation_image(v: &SubspaceV, n: u32) -> Result<EndImage> {
    let points = require_monomial(v)?;
    let index: BTreeMap<&Exponent, usize> = points.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let d = points.len();
    let mut matrices = Vec::new();
    for w in difference_weights(points) {
        let space = preserving_weight_space(points, &w, n)?;
        for coef in row_reduce(&space.constraints, space.terms.len()).nullspace() {
            let mut m = vec![vec![Rational::zero(); d]; d];
            for (j, p) in points.iter().enumerate() {
                let Some(i) = p.shifted(&w).and_then(|t| index.get(&t).copied()) else {
                    continue;
                };
                let c: Rational = space
                    .terms
                    .iter()
                    .zip(&coef)
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(a, c)| c * Rational::from_integer(p.falling_factorial(a)))
                    .sum();
                m[i][j] = c;
            }
            if m.iter().flatten().any(|x| !x.is_zero()) {
                matrices.push(m);
            }
        }
    }
    Ok(EndImage::from_matrices(d, matrices))
}

/// Whether the order-`≤ n` preserving operators act irreducibly, i.e. fill
/// all of `End(V)`.
pub fn check_irreducible(v: &SubspaceV, n: u32) -> Result<bool> {
    Ok(evaluation_image(v, n)?.is_full())
}

/// Image computed by solving for all operators `x^β ∂^α` with `β` drawn
/// from `betas` and `|α| ≤ n` at once. Returns the image and the dimension
/// of the preserving space among those operators.
pub fn dense_evaluation_image(
    v: &SubspaceV,
    n: u32,
    betas: &[Exponent],
) -> Result<(EndImage, usize)> {
    let nvars = v.nvars();
    let alphas = Exponent::all_up_to_degree(nvars, n);
    let unknowns: Vec<(Exponent, Exponent)> = betas
        .iter()
        .flat_map(|b| alphas.iter().map(move |a| (b.clone(), a.clone())))
        .collect();
    let coords = Coordinates::new(v);
    // Residual of each unknown on each basis element, keyed by (j, monomial).
    let mut keys: BTreeSet<(usize, Exponent)> = BTreeSet::new();
    let mut columns: Vec<BTreeMap<(usize, Exponent), Rational>> = Vec::with_capacity(unknowns.len());
    for (b, a) in &unknowns {
        let op = DifferentialOperator::term(b.clone(), a.clone(), Rational::from_integer(1.into()));
        let mut col = BTreeMap::new();
        for (j, basis) in v.basis().iter().enumerate() {
            for (e, c) in coords.residual(&op.apply(basis)?) {
                keys.insert((j, e.clone()));
                col.insert((j, e), c);
            }
        }
        columns.push(col);
    }
    let rows: Vec<Vec<Rational>> = keys
        .iter()
        .map(|k| {
            columns
                .iter()
                .map(|c| c.get(k).cloned().unwrap_or_else(Rational::zero))
                .collect()
        })
        .collect();
    let kernel = row_reduce(&rows, unknowns.len()).nullspace();
    let mut matrices = Vec::with_capacity(kernel.len());
    for vec in &kernel {
        let terms = unknowns
            .iter()
            .zip(vec)
            .filter(|(_, c)| !c.is_zero())
            .map(|((b, a), c)| (b.clone(), a.clone(), c.clone()));
        let op = DifferentialOperator::from_terms(nvars, terms)?;
        let m = operator_matrix_with(&op, v, &coords)?
            .ok_or_else(|| Error::Internal("kernel operator fails to preserve V".into()))?;
        matrices.push(m);
    }
    Ok((EndImage::from_matrices(v.dim(), matrices), kernel.len()))
}

/// Exponents `β ≥ 0` in `(P − P) + [0, n]^nvars`; every preserving operator
/// of order `≤ n` acting nontrivially has its coefficients among these.
pub fn bounding_box_betas(points: &[Exponent], n: u32) -> Vec<Exponent> {
    let nvars = points.first().map_or(0, Exponent::nvars);
    let cube: Vec<Vec<i64>> = (0..nvars).fold(vec![vec![]], |acc, _| {
        acc.into_iter()
            .flat_map(|prefix| {
                (0..=n as i64).map(move |t| {
                    let mut p = prefix.clone();
                    p.push(t);
                    p
                })
            })
            .collect()
    });
    let set: BTreeSet<Exponent> = difference_weights(points)
        .iter()
        .flat_map(|w| {
            cube.iter().filter_map(move |t| {
                let s: Vec<i64> = w.iter().zip(t).map(|(a, b)| a + b).collect();
                Exponent::from_signed(&s)
            })
        })
        .collect();
    set.into_iter().collect()
}

/// Image for an arbitrary basis, truncating operator coefficients to total
/// degree `≤ coefficient_degree`.
pub fn evaluation_image_bounded(v: &SubspaceV, n: u32, coefficient_degree: u32) -> Result<EndImage> {
    let betas = Exponent::all_up_to_degree(v.nvars(), coefficient_degree);
    Ok(dense_evaluation_image(v, n, &betas)?.0)
}

/// Per-operator outcome of [`preserve_check`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PreserveResult {
    pub label: String,
    pub preserves: bool,
    /// First basis element whose image leaves `V`.
    pub violator: Option<Polynomial>,
}

/// Whether each operator maps every basis element of `V` into `span(V)`.
pub fn preserve_check(ops: &[Generator], v: &SubspaceV) -> Result<Vec<PreserveResult>> {
    let coords = Coordinates::new(v);
    ops.iter()
        .map(|Generator { label, op }| {
            if op.nvars() != v.nvars() {
                return Err(Error::DimensionMismatch {
                    expected: v.nvars(),
                    found: op.nvars(),
                });
            }
            let mut violator = None;
            for b in v.basis() {
                if !coords.residual(&op.apply(b)?).is_empty() {
                    violator = Some(b.clone());
                    break;
                }
            }
            Ok(PreserveResult {
                label: label.clone(),
                preserves: violator.is_none(),
                violator,
            })
        })
        .collect()
}
