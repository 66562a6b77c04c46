use std::collections::{BTreeMap, BTreeSet, VecDeque};

use itertools::Itertools;
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::faces::{faces, smooth_check, vertex_chart, Face};
use super::lattice::{dot, primitive, reduce_to_sublattice, sub, IVec};
use super::polytope::LatticePolytope;
use crate::algebra::{Exponent, Rational};
use crate::config::ComputeConfig;
use crate::error::{Error, Result};
use crate::jets::{orbit_generic_orders, rank_exact};

/// Ranks of the evaluation matrix `[p^α]` over `|α| ≤ l` up to the first
/// `l` reaching `|P|`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertProfile {
    pub n_inj: u32,
    pub ranks: Vec<usize>,
    /// Rank of the lattice generated by differences of points.
    pub lattice_rank: usize,
}

fn int_power(base: i64, e: u32) -> BigInt {
    num_traits::pow(BigInt::from(base), e as usize)
}

fn hilbert_of(points: &[IVec]) -> HilbertProfile {
    let reduced = reduce_to_sublattice(points);
    let r = reduced.first().map_or(0, Vec::len);
    let mut ranks = Vec::new();
    let mut l = 0u32;
    loop {
        let columns = Exponent::all_up_to_degree(r, l);
        let rows: Vec<Vec<Rational>> = reduced
            .iter()
            .map(|p| {
                columns
                    .iter()
                    .map(|a| {
                        let v = p
                            .iter()
                            .zip(a.as_slice())
                            .fold(BigInt::from(1), |acc, (&b, &e)| acc * int_power(b, e));
                        Rational::from_integer(v)
                    })
                    .collect()
            })
            .collect();
        let rank = rank_exact(&rows);
        ranks.push(rank);
        if rank == points.len() {
            return HilbertProfile {
                n_inj: l,
                ranks,
                lattice_rank: r,
            };
        }
        l += 1;
    }
}

/// Generic injectivity order of the monomial span of `points`.
pub fn n_inj_hilbert(points: &[Exponent]) -> HilbertProfile {
    let signed: Vec<IVec> = points.iter().map(Exponent::to_signed).collect();
    hilbert_of(&signed)
}

fn require_smooth(p: &LatticePolytope) -> Result<()> {
    let report = smooth_check(p)?;
    match report.vertices.iter().find(|v| !v.ok) {
        None => Ok(()),
        Some(v) => Err(Error::NotSmooth {
            vertex: v.vertex.to_string(),
            detail: match v.determinant {
                Some(d) => format!("edge determinant {d}"),
                None => format!("{} edges in rank {}", v.edge_count, p.nvars),
            },
        }),
    }
}

/// Injectivity order on the orbit of `face`: the maximum over translates
/// `H` of the face lattice of `N_inj(H ∩ P) + d_H`.
pub fn n_inj_face(p: &LatticePolytope, face: &Face) -> Result<u32> {
    require_smooth(p)?;
    let chart = vertex_chart(p, face.vertex)?;
    let transverse = face.transverse(p.nvars);
    let mut slices: BTreeMap<Vec<u32>, Vec<IVec>> = BTreeMap::new();
    for c in &chart.exponents {
        let s = c.as_slice();
        let key: Vec<u32> = transverse.iter().map(|&j| s[j]).collect();
        let tangent: IVec = face.directions.iter().map(|&j| s[j] as i64).collect();
        slices.entry(key).or_default().push(tangent);
    }
    Ok(slices
        .iter()
        .map(|(key, slice)| hilbert_of(slice).n_inj + key.iter().sum::<u32>())
        .max()
        .expect("polytope has points"))
}

/// Largest chart-coordinate sum over `P` at vertex `i`.
pub fn n_inj_vertex(p: &LatticePolytope, i: usize) -> Result<u32> {
    require_smooth(p)?;
    let chart = vertex_chart(p, i)?;
    Ok(chart.exponents.iter().map(Exponent::degree).max().unwrap_or(0))
}

/// Largest injectivity order over all orbits.
pub fn n_inj_max(p: &LatticePolytope) -> Result<u32> {
    require_smooth(p)?;
    let by_vertex = (0..p.vertices.len())
        .map(|i| n_inj_vertex(p, i))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .max()
        .unwrap_or(0);
    let by_face = faces(p)?
        .iter()
        .map(|f| n_inj_face(p, f))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .max()
        .unwrap_or(0);
    if by_vertex != by_face {
        return Err(Error::Internal(format!(
            "vertex maximum {by_vertex} differs from face maximum {by_face}"
        )));
    }
    Ok(by_vertex)
}

/// Edge lengths in edge order and their minimum `s(P)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeStats {
    pub lengths: Vec<u32>,
    pub s: u32,
}

pub fn edge_stats(p: &LatticePolytope) -> Result<EdgeStats> {
    let lengths: Vec<u32> = p.edges.iter().map(|e| e.length).collect();
    let s = *lengths
        .iter()
        .min()
        .ok_or_else(|| Error::Degenerate("polytope has no edges".into()))?;
    Ok(EdgeStats { lengths, s })
}

/// Surjectivity order of a smooth polytope: its shortest edge.
pub fn n_surj_toric(p: &LatticePolytope) -> Result<u32> {
    require_smooth(p)?;
    Ok(edge_stats(p)?.s)
}

/// Surjectivity order at a generic point of one facet orbit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FacetSurj {
    pub face: String,
    pub n_surj: i64,
}

/// Minimum over codimension-one faces of the generic surjectivity order on
/// the face orbit, evaluated in the vertex chart.
pub fn n1_surj_toric(p: &LatticePolytope, cfg: &ComputeConfig) -> Result<(i64, Vec<FacetSurj>)> {
    require_smooth(p)?;
    let mut per = Vec::new();
    for f in faces(p)?.iter().filter(|f| f.dim + 1 == p.nvars) {
        let v = vertex_chart(p, f.vertex)?.subspace()?;
        let orders = orbit_generic_orders(&v, &f.transverse(p.nvars), cfg)?;
        per.push(FacetSurj {
            face: f.label(p),
            n_surj: orders.n_surj,
        });
    }
    let min = per
        .iter()
        .map(|f| f.n_surj)
        .min()
        .ok_or_else(|| Error::Degenerate("polytope has no facets".into()))?;
    Ok((min, per))
}

/// Largest number of collinear lattice points of `P`.
pub fn d_gonal(points: &[Exponent]) -> usize {
    let signed: Vec<IVec> = points.iter().map(Exponent::to_signed).collect();
    let mut best = signed.len().min(1);
    for (a, b) in signed.iter().tuple_combinations() {
        let dir = primitive(&sub(b, a));
        let count = signed
            .iter()
            .filter(|q| {
                let d = sub(q, a);
                // d ∥ dir iff all 2×2 minors vanish.
                (0..dir.len()).tuple_combinations().all(|(i, j)| d[i] * dir[j] == d[j] * dir[i])
            })
            .count();
        best = best.max(count);
    }
    best
}

/// Result of the bounded saturation scan.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SaturationReport {
    pub very_ample: bool,
    /// Search bound used, absent when smoothness settled the question.
    pub bound: Option<u32>,
    /// Vertex and cone point outside the vertex semigroup.
    pub witness: Option<(Exponent, IVec)>,
}

/// Checks that each vertex semigroup `ℕ{p − m}` contains every lattice point
/// of its cone up to the given bound.
pub fn very_ample_check(p: &LatticePolytope, bound: u32) -> Result<SaturationReport> {
    if !p.is_full_dimensional() {
        return Err(Error::Degenerate(format!(
            "polytope has dimension {} in rank {}",
            p.dim, p.nvars
        )));
    }
    if smooth_check(p)?.smooth {
        return Ok(SaturationReport {
            very_ample: true,
            bound: None,
            witness: None,
        });
    }
    let facets = p
        .facets
        .as_ref()
        .ok_or_else(|| Error::Unsupported("saturation scan needs facet inequalities".into()))?;
    let bound = bound as i64;
    for (i, m) in p.vertices.iter().enumerate() {
        let m = m.to_signed();
        let active: Vec<&IVec> = facets
            .iter()
            .filter(|f| dot(&f.normal, &m) == f.offset)
            .map(|f| &f.normal)
            .collect();
        // Positive on the cone minus its apex.
        let height: IVec = (0..p.nvars).map(|j| -active.iter().map(|n| n[j]).sum::<i64>()).collect();
        let gens: Vec<IVec> = p
            .points
            .iter()
            .map(|q| sub(&q.to_signed(), &m))
            .filter(|g| g.iter().any(|&x| x != 0))
            .collect();
        let mut semigroup: BTreeSet<IVec> = BTreeSet::new();
        let zero = vec![0i64; p.nvars];
        let mut queue = VecDeque::from([zero.clone()]);
        semigroup.insert(zero);
        while let Some(s) = queue.pop_front() {
            for g in &gens {
                let t: IVec = s.iter().zip(g).map(|(a, b)| a + b).collect();
                if dot(&height, &t) <= bound && semigroup.insert(t.clone()) {
                    queue.push_back(t);
                }
            }
        }
        // The truncated cone is the hull of the apex and the rays scaled to
        // the bound, so this box contains it.
        let rays: Vec<IVec> = p.incident_edges(i).into_iter().map(|(_, d)| d).collect();
        let (lo, hi): (IVec, IVec) = (0..p.nvars)
            .map(|j| {
                let ends = rays.iter().map(|r| {
                    let h = dot(&height, r).max(1);
                    (r[j] * bound).div_euclid(h) + if r[j] * bound > 0 { 1 } else { -1 }
                });
                let (a, b) = ends.fold((0, 0), |(a, b), x| (a.min(x), b.max(x)));
                (a, b)
            })
            .unzip();
        for t in (0..p.nvars).map(|j| lo[j]..=hi[j]).multi_cartesian_product() {
            let in_cone = active.iter().all(|n| dot(n, &t) <= 0);
            if in_cone && dot(&height, &t) <= bound && !semigroup.contains(&t) {
                return Ok(SaturationReport {
                    very_ample: false,
                    bound: Some(bound as u32),
                    witness: Some((p.vertices[i].clone(), t)),
                });
            }
        }
    }
    Ok(SaturationReport {
        very_ample: true,
        bound: Some(bound as u32),
        witness: None,
    })
}
