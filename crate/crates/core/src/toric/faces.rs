use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::lattice::{determinant, mat_vec, sub, transpose_i, unimodular_inverse, IVec};
use super::polytope::LatticePolytope;
use crate::algebra::Exponent;
use crate::error::{Error, Result};
use crate::jets::SubspaceV;

/// Basis condition at one vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexDiagnostic {
    pub vertex: Exponent,
    pub edge_count: usize,
    /// Determinant of the edge directions when there are exactly `nvars`.
    pub determinant: Option<i64>,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SmoothReport {
    pub smooth: bool,
    pub vertices: Vec<VertexDiagnostic>,
}

fn require_full(p: &LatticePolytope) -> Result<()> {
    if p.is_full_dimensional() {
        Ok(())
    } else {
        Err(Error::Degenerate(format!(
            "polytope has dimension {} in rank {}",
            p.dim, p.nvars
        )))
    }
}

/// Whether every vertex has `nvars` edges with unimodular primitive directions.
pub fn smooth_check(p: &LatticePolytope) -> Result<SmoothReport> {
    require_full(p)?;
    let vertices: Vec<VertexDiagnostic> = (0..p.vertices.len())
        .map(|i| {
            let inc = p.incident_edges(i);
            let determinant = (inc.len() == p.nvars).then(|| {
                let dirs: Vec<IVec> = inc.iter().map(|(_, d)| d.clone()).collect();
                determinant(&dirs)
            });
            VertexDiagnostic {
                vertex: p.vertices[i].clone(),
                edge_count: inc.len(),
                ok: determinant.is_some_and(|d| d.abs() == 1),
                determinant,
            }
        })
        .collect();
    Ok(SmoothReport {
        smooth: vertices.iter().all(|v| v.ok),
        vertices,
    })
}

/// Affine chart at a vertex of a smooth polytope: every lattice point `p`
/// becomes `B^{-1}(p − m)` for the edge basis `B` at `m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexChart {
    pub vertex: usize,
    /// Primitive edge directions, ordered by neighbor vertex index.
    pub basis: Vec<IVec>,
    /// Chart exponents, aligned with the polytope's `points`.
    pub exponents: Vec<Exponent>,
}

impl VertexChart {
    pub fn subspace(&self) -> Result<SubspaceV> {
        SubspaceV::from_monomials(self.basis.len(), self.exponents.clone())
    }
}

pub fn vertex_chart(p: &LatticePolytope, i: usize) -> Result<VertexChart> {
    require_full(p)?;
    let m = p
        .vertices
        .get(i)
        .ok_or_else(|| Error::InvalidArgument(format!("no vertex with index {i}")))?
        .to_signed();
    let basis: Vec<IVec> = p.incident_edges(i).into_iter().map(|(_, d)| d).collect();
    let not_smooth = |detail: String| Error::NotSmooth {
        vertex: p.vertices[i].to_string(),
        detail,
    };
    if basis.len() != p.nvars {
        return Err(not_smooth(format!("{} edges in rank {}", basis.len(), p.nvars)));
    }
    // Columns of B are the directions.
    let inv = unimodular_inverse(&transpose_i(&basis))
        .ok_or_else(|| not_smooth(format!("edge determinant {}", determinant(&basis))))?;
    let exponents = p
        .points
        .iter()
        .map(|q| {
            let c = mat_vec(&inv, &sub(&q.to_signed(), &m));
            Exponent::from_signed(&c).ok_or_else(|| not_smooth(format!("point {q} has chart coordinates {c:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(VertexChart {
        vertex: i,
        basis,
        exponents,
    })
}

/// Face spanned at vertex `vertex` by the chart directions in `directions`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Face {
    pub vertex: usize,
    pub directions: Vec<usize>,
    pub dim: usize,
    /// Indices into the polytope's `points`.
    pub points: Vec<usize>,
    /// Indices into the polytope's `vertices`.
    pub vertices: Vec<usize>,
}

impl Face {
    /// Chart coordinates that vanish on the orbit of this face.
    pub fn transverse(&self, nvars: usize) -> Vec<usize> {
        (0..nvars).filter(|j| !self.directions.contains(j)).collect()
    }

    pub fn label(&self, p: &LatticePolytope) -> String {
        let vs: Vec<String> = self.vertices.iter().map(|&i| p.vertices[i].to_string()).collect();
        match self.dim {
            0 => format!("vertex {}", vs[0]),
            1 => format!("edge {}", vs.join("-")),
            d if d == p.nvars => "interior".to_string(),
            d => format!("{d}-face {}", vs.join(" ")),
        }
    }
}

/// All faces of a smooth polytope, each listed once, at the lowest vertex
/// spanning it. Ordered by dimension, then discovery order.
pub fn faces(p: &LatticePolytope) -> Result<Vec<Face>> {
    let n = p.nvars;
    let mut seen: BTreeMap<Vec<usize>, Face> = BTreeMap::new();
    let mut order = Vec::new();
    for i in 0..p.vertices.len() {
        let chart = vertex_chart(p, i)?;
        for mask in 0u32..(1 << n) {
            let directions: Vec<usize> = (0..n).filter(|j| mask & (1 << j) != 0).collect();
            let points: Vec<usize> = (0..p.points.len())
                .filter(|&q| {
                    let c = chart.exponents[q].as_slice();
                    (0..n).all(|j| directions.contains(&j) || c[j] == 0)
                })
                .collect();
            if seen.contains_key(&points) {
                continue;
            }
            let vertices = (0..p.vertices.len())
                .filter(|&v| points.contains(&p.points.binary_search(&p.vertices[v]).unwrap()))
                .collect();
            order.push(points.clone());
            seen.insert(
                points.clone(),
                Face {
                    vertex: i,
                    dim: directions.len(),
                    directions,
                    points,
                    vertices,
                },
            );
        }
    }
    let mut out: Vec<Face> = order.into_iter().map(|k| seen.remove(&k).unwrap()).collect();
    out.sort_by_key(|f| f.dim);
    Ok(out)
}

/// Face whose vertex set is exactly `vertices`.
pub fn find_face(p: &LatticePolytope, vertices: &[Exponent]) -> Result<Face> {
    let mut wanted: Vec<usize> = vertices
        .iter()
        .map(|v| {
            p.vertex_index(v)
                .ok_or_else(|| Error::FaceNotFound(format!("{v} is not a vertex")))
        })
        .collect::<Result<_>>()?;
    wanted.sort();
    faces(p)?
        .into_iter()
        .find(|f| f.vertices == wanted)
        .ok_or_else(|| Error::FaceNotFound(format!("no face with vertices {wanted:?}")))
}
