use std::collections::BTreeSet;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use super::lattice::{content, dot, primitive, rank, sub, IVec};
use crate::algebra::Exponent;
use crate::error::{Error, Result};

/// Edge between two vertices: `vertices[b] − vertices[a] = length · direction`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub endpoints: (usize, usize),
    pub direction: IVec,
    pub length: u32,
}

/// Supporting inequality `normal · x ≤ offset` with primitive normal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Facet {
    pub normal: IVec,
    pub offset: i64,
}

/// Lattice polytope in the positive orthant together with all its lattice
/// points. Points and vertices are sorted lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticePolytope {
    pub nvars: usize,
    pub dim: usize,
    pub points: Vec<Exponent>,
    pub vertices: Vec<Exponent>,
    pub edges: Vec<Edge>,
    /// Present whenever the hull was computed here.
    pub facets: Option<Vec<Facet>>,
}

fn signed(points: &[Exponent]) -> Vec<IVec> {
    points.iter().map(Exponent::to_signed).collect()
}

fn affine_dim(points: &[IVec]) -> usize {
    match points.first() {
        None => 0,
        Some(o) => rank(&points.iter().map(|p| sub(p, o)).collect::<Vec<_>>()),
    }
}

/// Normal to the hyperplane through `pts` (exactly `d` points in `ℤ^d`),
/// for `d ≤ 3`.
fn hyperplane_normal(pts: &[&IVec]) -> IVec {
    match pts.len() {
        1 => vec![1],
        2 => {
            let u = sub(pts[1], pts[0]);
            vec![-u[1], u[0]]
        }
        3 => {
            let u = sub(pts[1], pts[0]);
            let v = sub(pts[2], pts[0]);
            vec![
                u[1] * v[2] - u[2] * v[1],
                u[2] * v[0] - u[0] * v[2],
                u[0] * v[1] - u[1] * v[0],
            ]
        }
        _ => unreachable!("hull enumeration is limited to rank ≤ 3"),
    }
}

fn facets_of(points: &[IVec], d: usize) -> Vec<Facet> {
    let mut normals: BTreeSet<IVec> = BTreeSet::new();
    for combo in points.iter().combinations(d) {
        let n = hyperplane_normal(&combo);
        if n.iter().all(|&x| x == 0) {
            continue;
        }
        let n = primitive(&n);
        normals.insert(n.iter().map(|x| -x).collect());
        normals.insert(n);
    }
    normals
        .into_iter()
        .filter_map(|n| {
            let offset = points.iter().map(|p| dot(&n, p)).max()?;
            let on: Vec<IVec> = points.iter().filter(|p| dot(&n, p) == offset).cloned().collect();
            (affine_dim(&on) == d - 1).then_some(Facet { normal: n, offset })
        })
        .collect()
}

fn active_normals(facets: &[Facet], p: &[i64]) -> Vec<IVec> {
    facets
        .iter()
        .filter(|f| dot(&f.normal, p) == f.offset)
        .map(|f| f.normal.clone())
        .collect()
}

fn make_edge(vertices: &[Exponent], a: usize, b: usize) -> Edge {
    let diff = sub(&vertices[b].to_signed(), &vertices[a].to_signed());
    let length = content(&diff).unsigned_abs() as u32;
    Edge {
        endpoints: (a, b),
        direction: primitive(&diff),
        length,
    }
}

fn to_exponents(points: impl IntoIterator<Item = IVec>) -> Result<Vec<Exponent>> {
    let mut out: Vec<Exponent> = points
        .into_iter()
        .map(|p| {
            Exponent::from_signed(&p).ok_or_else(|| {
                Error::InvalidArgument(format!("lattice point {p:?} leaves the positive orthant"))
            })
        })
        .collect::<Result<_>>()?;
    out.sort();
    out.dedup();
    Ok(out)
}

impl LatticePolytope {
    /// Convex hull of `vertices`, with every lattice point enumerated.
    pub fn from_vertices(vertices: &[Exponent]) -> Result<Self> {
        let first = vertices
            .first()
            .ok_or_else(|| Error::InvalidArgument("polytope needs at least one point".into()))?;
        let nvars = first.nvars();
        if let Some(bad) = vertices.iter().find(|v| v.nvars() != nvars) {
            return Err(Error::DimensionMismatch {
                expected: nvars,
                found: bad.nvars(),
            });
        }
        let mut input = signed(vertices);
        input.sort();
        input.dedup();
        let dim = affine_dim(&input);
        match dim {
            0 => Ok(LatticePolytope {
                nvars,
                dim,
                points: to_exponents(input.clone())?,
                vertices: to_exponents(input)?,
                edges: Vec::new(),
                facets: None,
            }),
            1 => Self::segment(nvars, &input),
            d if d == nvars && d <= 3 => Self::full_hull(nvars, &input),
            d => Err(Error::Unsupported(format!(
                "hull enumeration of a {d}-dimensional polytope in rank {nvars}; supply points, vertices and edges explicitly"
            ))),
        }
    }

    fn segment(nvars: usize, input: &[IVec]) -> Result<Self> {
        let dir = primitive(&sub(&input[1], &input[0]));
        let lo = input.iter().min_by_key(|p| dot(&dir, p)).unwrap().clone();
        let hi = input.iter().max_by_key(|p| dot(&dir, p)).unwrap().clone();
        let len = content(&sub(&hi, &lo));
        let points = to_exponents(
            (0..=len).map(|t| lo.iter().zip(&dir).map(|(a, e)| a + t * e).collect::<IVec>()),
        )?;
        let vertices = to_exponents(vec![lo, hi])?;
        let edges = vec![make_edge(&vertices, 0, 1)];
        Ok(LatticePolytope {
            nvars,
            dim: 1,
            points,
            vertices,
            edges,
            facets: None,
        })
    }

    fn full_hull(nvars: usize, input: &[IVec]) -> Result<Self> {
        let facets = facets_of(input, nvars);
        let vertex_list: Vec<IVec> = input
            .iter()
            .filter(|p| rank(&active_normals(&facets, p)) == nvars)
            .cloned()
            .collect();
        let vertices = to_exponents(vertex_list)?;
        let signed_vertices = signed(&vertices);
        let lo: IVec = (0..nvars).map(|i| signed_vertices.iter().map(|v| v[i]).min().unwrap()).collect();
        let hi: IVec = (0..nvars).map(|i| signed_vertices.iter().map(|v| v[i]).max().unwrap()).collect();
        let points = to_exponents(
            (0..nvars)
                .map(|i| lo[i]..=hi[i])
                .multi_cartesian_product()
                .filter(|p| facets.iter().all(|f| dot(&f.normal, p) <= f.offset)),
        )?;
        let mut edges = Vec::new();
        for a in 0..vertices.len() {
            for b in a + 1..vertices.len() {
                let na = active_normals(&facets, &signed_vertices[a]);
                let common: Vec<IVec> = active_normals(&facets, &signed_vertices[b])
                    .into_iter()
                    .filter(|n| na.contains(n))
                    .collect();
                if rank(&common) == nvars - 1 {
                    edges.push(make_edge(&vertices, a, b));
                }
            }
        }
        Ok(LatticePolytope {
            nvars,
            dim: nvars,
            points,
            vertices,
            edges,
            facets: Some(facets),
        })
    }

    /// Hull of an explicit lattice point list. Fails if the hull contains a
    /// lattice point absent from the list.
    pub fn from_points(points: &[Exponent]) -> Result<Self> {
        let poly = Self::from_vertices(points)?;
        let given: BTreeSet<&Exponent> = points.iter().collect();
        if let Some(missing) = poly.points.iter().find(|p| !given.contains(p)) {
            return Err(Error::NotSaturated(missing.to_string()));
        }
        Ok(poly)
    }

    /// Fully explicit data for ranks where no hull is computed. Edges are
    /// given as vertex index pairs.
    pub fn explicit(points: Vec<Exponent>, vertices: Vec<Exponent>, edges: &[(usize, usize)]) -> Result<Self> {
        let nvars = points
            .first()
            .ok_or_else(|| Error::InvalidArgument("polytope needs at least one point".into()))?
            .nvars();
        if let Some(bad) = points.iter().chain(&vertices).find(|p| p.nvars() != nvars) {
            return Err(Error::DimensionMismatch {
                expected: nvars,
                found: bad.nvars(),
            });
        }
        let mut pts = points;
        pts.sort();
        pts.dedup();
        let mut verts = vertices.clone();
        verts.sort();
        verts.dedup();
        if let Some(v) = verts.iter().find(|v| pts.binary_search(v).is_err()) {
            return Err(Error::InvalidArgument(format!("vertex {v} is not among the points")));
        }
        let mut out_edges = Vec::new();
        for &(a, b) in edges {
            let (Some(va), Some(vb)) = (vertices.get(a), vertices.get(b)) else {
                return Err(Error::InvalidArgument(format!("edge ({a}, {b}) names a missing vertex")));
            };
            let ia = verts.binary_search(va).unwrap();
            let ib = verts.binary_search(vb).unwrap();
            let (ia, ib) = (ia.min(ib), ia.max(ib));
            out_edges.push(make_edge(&verts, ia, ib));
        }
        out_edges.sort_by_key(|e| e.endpoints);
        let dim = affine_dim(&signed(&pts));
        Ok(LatticePolytope {
            nvars,
            dim,
            points: pts,
            vertices: verts,
            edges: out_edges,
            facets: None,
        })
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.dim == self.nvars
    }

    pub fn vertex_index(&self, v: &Exponent) -> Option<usize> {
        self.vertices.binary_search(v).ok()
    }

    /// Edges at vertex `i` as `(neighbor, primitive direction away from i)`,
    /// sorted by neighbor index.
    pub fn incident_edges(&self, i: usize) -> Vec<(usize, IVec)> {
        let mut out: Vec<(usize, IVec)> = self
            .edges
            .iter()
            .filter_map(|e| match e.endpoints {
                (a, b) if a == i => Some((b, e.direction.clone())),
                (a, b) if b == i => Some((a, e.direction.iter().map(|x| -x).collect())),
                _ => None,
            })
            .collect();
        out.sort_by_key(|(n, _)| *n);
        out
    }
}

/// `m · Δ`: the dilated standard simplex in `nvars` variables.
pub fn simplex(nvars: usize, m: u32) -> Result<LatticePolytope> {
    let mut vs = vec![Exponent::zero(nvars)];
    for i in 0..nvars {
        let mut e = vec![0; nvars];
        e[i] = m;
        vs.push(Exponent::new(e));
    }
    LatticePolytope::from_vertices(&vs)
}

/// Hirzebruch polytope `{(i, j) : 0 ≤ j ≤ l, i ≥ 0, i + r j ≤ k}`.
pub fn hirzebruch(r: u32, k: u32, l: u32) -> Result<LatticePolytope> {
    if (k as i64) < (l as i64) * (r as i64) {
        return Err(Error::InvalidArgument(format!(
            "need k ≥ l·r, got r = {r}, k = {k}, l = {l}"
        )));
    }
    let vs = [
        Exponent::new(vec![0, 0]),
        Exponent::new(vec![k, 0]),
        Exponent::new(vec![0, l]),
        Exponent::new(vec![k - l * r, l]),
    ];
    LatticePolytope::from_vertices(&vs)
}
