use serde::{Deserialize, Serialize};

use super::matrix::{jet_matrix, symbolic_rows, EvalPoint};
use super::rank::{generic_rank, rank_exact, RankMethod};
use super::subspace::SubspaceV;
use crate::algebra::{binomial_count, Exponent, Rational};
use crate::config::ComputeConfig;
use crate::error::{Error, Result};
use num_traits::Zero;

/// Injectivity and surjectivity data of the Taylor map of `V` at one point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderReport {
    pub point: EvalPoint,
    /// Smallest `n` with an injective order-`n` Taylor map.
    pub n_inj: u32,
    /// Largest `n` through which every Taylor map of order `≤ n` is
    /// surjective; −1 when all of `V` vanishes at the point.
    pub n_surj: i64,
    /// Orders `i ≥ 1` with `r_i > r_{i-1}`.
    pub gap_sequence: Vec<u32>,
    /// Ranks `r_0, …, r_{n_inj}`.
    pub rank_profile: Vec<usize>,
    /// `n_inj − N_inj − 1`: the largest `j` with `n_inj > N_inj + j`,
    /// −1 off the Weierstrass locus.
    pub weierstrass_order: i64,
    /// Rank method of the generic profile (exact methods only at points).
    pub method: RankMethod,
}

pub(crate) struct Profile {
    pub ranks: Vec<usize>,
    pub method: RankMethod,
}

impl Profile {
    fn n_inj(&self) -> u32 {
        (self.ranks.len() - 1) as u32
    }

    fn n_surj(&self, nvars: usize) -> i64 {
        let mut last = -1;
        for (n, &r) in self.ranks.iter().enumerate() {
            if r == binomial_count(n as u32, nvars) {
                last = n as i64;
            } else {
                break;
            }
        }
        last
    }

    fn gaps(&self) -> Vec<u32> {
        self.ranks
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[1] > w[0])
            .map(|(i, _)| i as u32 + 1)
            .collect()
    }
}

/// Rank profile at a rational point, up to the first injective order.
pub(crate) fn point_profile(v: &SubspaceV, pt: &[Rational]) -> Result<Profile> {
    let top = jet_matrix(v, v.max_degree(), &EvalPoint::At(pt.to_vec()))?;
    let mut ranks = Vec::new();
    for n in 0..=v.max_degree() {
        let r = rank_exact(top.truncated(n).numeric().expect("numeric jets"));
        ranks.push(r);
        if r == v.dim() {
            return Ok(Profile {
                ranks,
                method: RankMethod::Symbolic,
            });
        }
    }
    Err(Error::Internal(format!(
        "Taylor map never becomes injective up to order {} at a rational point",
        v.max_degree()
    )))
}

/// Rank profile at the generic point.
pub(crate) fn generic_profile(
    v: &SubspaceV,
    zero_vars: &[usize],
    cfg: &ComputeConfig,
) -> Result<Profile> {
    let columns = Exponent::all_up_to_degree(v.nvars(), v.max_degree());
    let mut rows = symbolic_rows(v.basis(), &columns);
    for &z in zero_vars {
        for entry in rows.iter_mut().flatten() {
            *entry = entry.substitute(z, &Rational::zero());
        }
    }
    let mut ranks = Vec::new();
    let mut all_exact = true;
    let mut trials = 0;
    let mut symbolic = true;
    for n in 0..=v.max_degree() {
        let keep = binomial_count(n, v.nvars());
        let prefix: Vec<Vec<_>> = rows.iter().map(|r| r[..keep].to_vec()).collect();
        let g = generic_rank(&prefix, cfg, n as u64);
        if let RankMethod::Randomized { trials: t, certified } = g.method {
            symbolic = false;
            trials = trials.max(t);
            all_exact &= certified;
        }
        ranks.push(g.rank);
        if g.rank == v.dim() {
            let method = if symbolic {
                RankMethod::Symbolic
            } else {
                RankMethod::Randomized {
                    trials,
                    certified: all_exact,
                }
            };
            return Ok(Profile { ranks, method });
        }
    }
    Err(Error::Internal(format!(
        "Taylor map never becomes injective on the stratum up to order {}",
        v.max_degree()
    )))
}

fn report(v: &SubspaceV, point: EvalPoint, profile: Profile, generic_n_inj: u32) -> OrderReport {
    let n_inj = profile.n_inj();
    OrderReport {
        point,
        n_inj,
        n_surj: profile.n_surj(v.nvars()),
        gap_sequence: profile.gaps(),
        weierstrass_order: n_inj as i64 - generic_n_inj as i64 - 1,
        method: profile.method,
        rank_profile: profile.ranks,
    }
}

/// Injectivity order of `v` at `at`; the generic variant yields `N_inj`.
pub fn n_inj_at(v: &SubspaceV, at: &EvalPoint, cfg: &ComputeConfig) -> Result<OrderReport> {
    let generic = generic_profile(v, &[], cfg)?;
    let generic_n_inj = generic.n_inj();
    match at {
        EvalPoint::Generic => Ok(report(v, EvalPoint::Generic, generic, generic_n_inj)),
        EvalPoint::At(pt) => {
            let profile = point_profile(v, pt)?;
            Ok(report(v, at.clone(), profile, generic_n_inj))
        }
    }
}

/// Generic injectivity order `N_inj`.
pub fn generic_n_inj(v: &SubspaceV, cfg: &ComputeConfig) -> Result<u32> {
    Ok(generic_profile(v, &[], cfg)?.n_inj())
}

/// Jet order at a rational point: the largest `n` such that every Taylor
/// map of order `≤ n` is surjective, −1 if already order 0 fails.
pub fn n_surj_at(v: &SubspaceV, pt: &[Rational]) -> Result<i64> {
    if pt.len() != v.nvars() {
        return Err(Error::DimensionMismatch {
            expected: v.nvars(),
            found: pt.len(),
        });
    }
    let mut n = 0u32;
    loop {
        let cols = binomial_count(n, v.nvars());
        if cols > v.dim() {
            return Ok(n as i64 - 1);
        }
        let m = jet_matrix(v, n, &EvalPoint::At(pt.to_vec()))?;
        if rank_exact(m.numeric().expect("numeric jets")) < cols {
            return Ok(n as i64 - 1);
        }
        n += 1;
    }
}

/// Order reports at each point, measured against the generic order.
pub fn weierstrass_scan(
    v: &SubspaceV,
    points: &[Vec<Rational>],
    cfg: &ComputeConfig,
) -> Result<Vec<OrderReport>> {
    let generic_n_inj = generic_n_inj(v, cfg)?;
    points
        .iter()
        .map(|pt| {
            if pt.len() != v.nvars() {
                return Err(Error::DimensionMismatch {
                    expected: v.nvars(),
                    found: pt.len(),
                });
            }
            let profile = point_profile(v, pt)?;
            Ok(report(v, EvalPoint::At(pt.clone()), profile, generic_n_inj))
        })
        .collect()
}

/// Orders at a generic point of the locus where the coordinates in
/// `zero_vars` vanish and all others are free.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitOrders {
    pub zero_vars: Vec<usize>,
    pub n_inj: u32,
    pub n_surj: i64,
    pub rank_profile: Vec<usize>,
    pub method: RankMethod,
}

/// Generic orders on a coordinate stratum `{u_i = 0, i ∈ zero_vars}`.
pub fn orbit_generic_orders(
    v: &SubspaceV,
    zero_vars: &[usize],
    cfg: &ComputeConfig,
) -> Result<OrbitOrders> {
    if let Some(&bad) = zero_vars.iter().find(|&&i| i >= v.nvars()) {
        return Err(Error::InvalidArgument(format!(
            "coordinate {bad} out of range for {} variables",
            v.nvars()
        )));
    }
    let profile = generic_profile(v, zero_vars, cfg)?;
    Ok(OrbitOrders {
        zero_vars: zero_vars.to_vec(),
        n_inj: profile.n_inj(),
        n_surj: profile.n_surj(v.nvars()),
        method: profile.method,
        rank_profile: profile.ranks,
    })
}
