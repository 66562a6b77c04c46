use serde::{Deserialize, Serialize};

use super::faces::{faces, smooth_check};
use super::orders::{
    d_gonal, edge_stats, n1_surj_toric, n_inj_face, n_inj_hilbert, n_inj_max, n_surj_toric,
    very_ample_check, FacetSurj,
};
use super::polytope::LatticePolytope;
use crate::config::ComputeConfig;
use crate::error::Result;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceOrder {
    pub face: String,
    pub dim: usize,
    pub n_inj: u32,
}

/// Toric invariants of a polytope. Orbit-wise entries need smoothness and
/// are absent otherwise.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ToricReport {
    pub points: usize,
    pub smooth: bool,
    pub very_ample: bool,
    pub edge_lengths: Vec<u32>,
    pub s: u32,
    pub d_gonal: usize,
    pub n_inj_generic: u32,
    pub n_inj_by_face: Option<Vec<FaceOrder>>,
    pub n_inj_max: Option<u32>,
    pub n_surj: Option<u32>,
    pub n1_surj: Option<i64>,
    pub n1_surj_by_facet: Option<Vec<FacetSurj>>,
}

pub fn toric_report(p: &LatticePolytope, cfg: &ComputeConfig) -> Result<ToricReport> {
    let smooth = smooth_check(p)?.smooth;
    let stats = edge_stats(p)?;
    let mut report = ToricReport {
        points: p.points.len(),
        smooth,
        very_ample: very_ample_check(p, cfg.very_ample_bound)?.very_ample,
        edge_lengths: stats.lengths,
        s: stats.s,
        d_gonal: d_gonal(&p.points),
        n_inj_generic: n_inj_hilbert(&p.points).n_inj,
        n_inj_by_face: None,
        n_inj_max: None,
        n_surj: None,
        n1_surj: None,
        n1_surj_by_facet: None,
    };
    if smooth {
        let by_face = faces(p)?
            .iter()
            .map(|f| {
                Ok(FaceOrder {
                    face: f.label(p),
                    dim: f.dim,
                    n_inj: n_inj_face(p, f)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let (n1, per) = n1_surj_toric(p, cfg)?;
        report.n_inj_by_face = Some(by_face);
        report.n_inj_max = Some(n_inj_max(p)?);
        report.n_surj = Some(n_surj_toric(p)?);
        report.n1_surj = Some(n1);
        report.n1_surj_by_facet = Some(per);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::toric::polytope::{hirzebruch, simplex};

    #[test]
    fn report_chain() {
        let cfg = ComputeConfig::default();
        for p in [simplex(2, 3).unwrap(), hirzebruch(1, 3, 1).unwrap(), simplex(3, 2).unwrap()] {
            let r = toric_report(&p, &cfg).unwrap();
            assert!(r.smooth && r.very_ample);
            let (s, n1, max) = (r.n_surj.unwrap() as i64, r.n1_surj.unwrap(), r.n_inj_max.unwrap());
            assert!(s <= n1 && n1 <= r.n_inj_generic as i64 && r.n_inj_generic <= max);
            assert!(r.d_gonal as u32 - 1 <= r.n_inj_generic);
        }
    }
}
