use serde::{Deserialize, Serialize};

use super::report::{Source, VerifyReport};
use super::sample::RationalSampler;
use crate::algebra::{Exponent, Rational};
use crate::config::ComputeConfig;
use crate::diffops::{check_irreducible, hirzebruch_generators, preserve_check, sl_generators, Generator};
use crate::error::{Error, Result};
use crate::jets::{generic_n_inj, n_inj_at, n_surj_at, weierstrass_minors, EvalPoint, SubspaceV};
use crate::toric::{
    faces, hirzebruch, n1_surj_toric, n_inj_face, n_inj_hilbert, n_inj_max, n_inj_vertex,
    n_surj_toric, simplex, vertex_chart, LatticePolytope,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Family {
    Veronese { n: usize, m: u32 },
    Hirzebruch { r: u32, k: u32, l: u32 },
}

/// A worked family: its polytope, its monomial space in the chart at the
/// origin and closed-form expectations.
#[derive(Clone, Debug)]
pub struct FamilySpec {
    pub family: Family,
    pub space: SubspaceV,
    pub polytope: LatticePolytope,
    pub expected: Expected,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expected {
    pub points: usize,
    pub n_inj_generic: u32,
    pub n_inj_max: u32,
    pub n_surj: u32,
    pub n1_surj: i64,
}

impl FamilySpec {
    pub fn new(family: Family) -> Result<Self> {
        let (polytope, expected) = match family {
            Family::Veronese { n, m } => {
                if n < 1 || m < 1 {
                    return Err(Error::InvalidArgument("need n ≥ 1 and m ≥ 1".into()));
                }
                let points = (1..=n).fold(1usize, |acc, i| acc * (m as usize + i) / i);
                (
                    simplex(n, m)?,
                    Expected {
                        points,
                        n_inj_generic: m,
                        n_inj_max: m,
                        n_surj: m,
                        n1_surj: m as i64,
                    },
                )
            }
            Family::Hirzebruch { r, k, l } => {
                if r < 1 || l < 1 || k <= l * r {
                    return Err(Error::InvalidArgument(format!(
                        "need r ≥ 1, l ≥ 1 and k > l·r for a four-vertex polytope, got r = {r}, k = {k}, l = {l}"
                    )));
                }
                let points = ((l + 1) * (k + 1) - r * l * (l + 1) / 2) as usize;
                let s = l.min(k - l * r);
                (
                    hirzebruch(r, k, l)?,
                    Expected {
                        points,
                        n_inj_generic: k,
                        n_inj_max: k + l,
                        n_surj: s,
                        n1_surj: s as i64,
                    },
                )
            }
        };
        let space = SubspaceV::from_monomials(polytope.nvars, polytope.points.clone())?;
        Ok(FamilySpec {
            family,
            space,
            polytope,
            expected,
        })
    }

    pub fn generators(&self) -> Result<Vec<Generator>> {
        match self.family {
            Family::Veronese { n, m } => Ok(sl_generators(n, m)),
            Family::Hirzebruch { r, k, l } => hirzebruch_generators(r, k, l),
        }
    }

    pub fn name(&self) -> String {
        match self.family {
            Family::Veronese { n, m } => format!("veronese n={n} m={m}"),
            Family::Hirzebruch { r, k, l } => format!("hirzebruch r={r} k={k} l={l}"),
        }
    }
}

fn shared_checks(spec: &FamilySpec, cfg: &ComputeConfig, report: &mut VerifyReport) -> Result<()> {
    let e = &spec.expected;
    let p = &spec.polytope;
    report.check("lattice points", e.points, p.points.len(), Source::Definition);
    report.check("N_inj (Hilbert)", e.n_inj_generic, n_inj_hilbert(&p.points).n_inj, Source::Formula);
    report.check("N_inj (generic jet rank)", e.n_inj_generic, generic_n_inj(&spec.space, cfg)?, Source::Formula);
    report.check("n_inj max over orbits", e.n_inj_max, n_inj_max(p)?, Source::Formula);
    report.check("n_surj (shortest edge)", e.n_surj, n_surj_toric(p)?, Source::Formula);
    report.check("n1_surj (facet orbits)", e.n1_surj, n1_surj_toric(p, cfg)?.0, Source::Formula);
    for g in preserve_check(&spec.generators()?, &spec.space)? {
        report.check(format!("generator {} preserves V", g.label), true, g.preserves, Source::Formula);
    }
    Ok(())
}

/// Known-answer suite for the degree-`≤ m` polynomials in `n` variables.
pub fn verify_veronese(n: usize, m: u32, cfg: &ComputeConfig) -> Result<VerifyReport> {
    let spec = FamilySpec::new(Family::Veronese { n, m })?;
    let mut report = VerifyReport::new(spec.name());
    shared_checks(&spec, cfg, &mut report)?;
    let mut sampler = RationalSampler::new(cfg.seed);
    for t in 0..cfg.sample_points {
        let pt = sampler.point(n, &[]);
        let at = n_inj_at(&spec.space, &EvalPoint::At(pt.clone()), cfg)?;
        report.check(format!("n_inj at sample {t}"), m, at.n_inj, Source::Formula);
        report.check(format!("n_surj at sample {t}"), m as i64, n_surj_at(&spec.space, &pt)?, Source::Formula);
    }
    report.check("irreducible at order m", true, check_irreducible(&spec.space, m)?, Source::Formula);
    Ok(report)
}

fn point_text(pt: &[Rational]) -> String {
    EvalPoint::At(pt.to_vec()).to_string()
}

/// Scan of one vertex chart: sampled points per orbit stratum, compared to
/// the face formula and, when the minor list is complete, to the minors.
fn chart_scan(
    spec: &FamilySpec,
    vertex: usize,
    cfg: &ComputeConfig,
    sampler: &mut RationalSampler,
    report: &mut VerifyReport,
) -> Result<()> {
    let p = &spec.polytope;
    let chart = vertex_chart(p, vertex)?;
    let v = chart.subspace()?;
    let generic = spec.expected.n_inj_generic;
    let minors = weierstrass_minors(&v, cfg)?;
    let here = p.vertices[vertex].to_string();
    if minors.truncated {
        report.note(format!(
            "chart at {here}: {} of {} maximal minors enumerated; minor checks skipped",
            cfg.minors_cap, minors.total
        ));
    }
    // Orbits visible in this chart are those of faces through the vertex.
    for face in faces(p)?.into_iter().filter(|f| f.vertices.contains(&vertex)) {
        let zeros: Vec<usize> = (0..p.nvars)
            .filter(|&j| face.points.iter().all(|&q| chart.exponents[q].as_slice()[j] == 0))
            .collect();
        let expected = n_inj_face(p, &face)?;
        let samples = if zeros.len() == p.nvars { 1 } else { 2 };
        for _ in 0..samples {
            let pt = sampler.point(p.nvars, &zeros);
            let r = n_inj_at(&v, &EvalPoint::At(pt.clone()), cfg)?;
            let label = format!("chart {here}, {} point {}", face.label(p), point_text(&pt));
            report.check(format!("{label}: n_inj"), expected, r.n_inj, Source::Oracle);
            report.check(
                format!("{label}: Weierstrass order"),
                expected as i64 - generic as i64 - 1,
                r.weierstrass_order,
                Source::Definition,
            );
            if !minors.truncated {
                report.check(
                    format!("{label}: all minors vanish"),
                    expected > generic,
                    minors.vanish_at(&pt)?,
                    Source::Oracle,
                );
            }
        }
    }
    Ok(())
}

/// Reference labeling of per-vertex and per-edge injectivity orders, in
/// the order `V1 = (k,0), V2 = (0,0), V3 = (0,l), V4 = (k−lr,l)` and edges
/// `E1 = V1V2, E2 = V2V3, E3 = V3V4, E4 = V4V1`, with `true` meaning `k+l`.
const REFERENCE_VERTEX_HIGH: [bool; 4] = [false, true, true, false];
const REFERENCE_EDGE_HIGH: [bool; 4] = [false, true, false, false];

/// Known-answer suite for the Hirzebruch polytope with parameters `(r, k, l)`.
pub fn verify_hirzebruch(r: u32, k: u32, l: u32, cfg: &ComputeConfig) -> Result<VerifyReport> {
    let spec = FamilySpec::new(Family::Hirzebruch { r, k, l })?;
    let mut report = VerifyReport::new(spec.name());
    shared_checks(&spec, cfg, &mut report)?;
    let p = &spec.polytope;
    let named = [
        Exponent::new(vec![k, 0]),
        Exponent::new(vec![0, 0]),
        Exponent::new(vec![0, l]),
        Exponent::new(vec![k - l * r, l]),
    ];
    let index: Vec<usize> = named.iter().map(|v| p.vertex_index(v).unwrap()).collect();
    let value = |high: bool| if high { k + l } else { k };

    let mut by_vertex = Vec::new();
    for (t, &i) in index.iter().enumerate() {
        let formula = n_inj_vertex(p, i)?;
        let chart = vertex_chart(p, i)?.subspace()?;
        let origin = EvalPoint::At(vec![Rational::from_integer(0.into()); 2]);
        let oracle = n_inj_at(&chart, &origin, cfg)?.n_inj;
        report.check(format!("V{} = {}: vertex formula vs jet oracle", t + 1, named[t]), oracle, formula, Source::Oracle);
        if formula != value(REFERENCE_VERTEX_HIGH[t]) {
            report.note(format!(
                "V{} = {}: computed n_inj {formula}, reference labeling lists {}",
                t + 1,
                named[t],
                value(REFERENCE_VERTEX_HIGH[t])
            ));
        }
        by_vertex.push(formula);
    }
    let mut sorted = by_vertex.clone();
    sorted.sort();
    let mut multiset = vec![k, k, k + l, k + l];
    multiset.sort();
    report.check("per-vertex multiset", format!("{multiset:?}"), format!("{sorted:?}"), Source::Formula);

    let all_faces = faces(p)?;
    for t in 0..4 {
        let ends = [index[t], index[(t + 1) % 4]];
        let mut want = ends.to_vec();
        want.sort();
        let face = all_faces
            .iter()
            .find(|f| f.dim == 1 && f.vertices == want)
            .ok_or_else(|| Error::FaceNotFound(format!("edge E{}", t + 1)))?;
        let formula = n_inj_face(p, face)?;
        if formula != value(REFERENCE_EDGE_HIGH[t]) {
            report.note(format!(
                "E{} = {}: computed n_inj {formula}, reference labeling lists {}",
                t + 1,
                face.label(p),
                value(REFERENCE_EDGE_HIGH[t])
            ));
        }
    }

    let mut sampler = RationalSampler::new(cfg.seed);
    chart_scan(&spec, index[1], cfg, &mut sampler, &mut report)?;
    chart_scan(&spec, index[2], cfg, &mut sampler, &mut report)?;
    report.note(format!(
        "the orbit with n_inj = k + l = {} has Weierstrass order l - 1 = {}: it lies in W_{} but not in W_{}",
        k + l,
        l - 1,
        l - 1,
        l
    ));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_families_pass() {
        let cfg = ComputeConfig::default();
        let v = verify_veronese(1, 2, &cfg).unwrap();
        assert!(v.pass, "{v}");
        let h = verify_hirzebruch(1, 3, 1, &cfg).unwrap();
        assert!(h.pass, "{h}");
        assert!(h.notes.iter().any(|n| n.starts_with("V2 = (0,0)")));
    }

    #[test]
    fn parameter_domain() {
        let cfg = ComputeConfig::default();
        assert!(verify_hirzebruch(1, 1, 1, &cfg).is_err());
        assert!(verify_veronese(0, 1, &cfg).is_err());
    }
}
