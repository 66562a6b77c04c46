use itertools::Itertools;
use serde::{Deserialize, Serialize};

use super::matrix::symbolic_rows;
use super::orders::generic_n_inj;
use super::subspace::SubspaceV;
use crate::algebra::{binomial_count, Exponent, Polynomial, Rational};
use crate::config::ComputeConfig;
use crate::error::Result;
use crate::linalg::determinant_polynomial;

/// Nonzero maximal minors of the symbolic jet matrix at order `N_inj`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MinorsReport {
    pub order: u32,
    /// Column subsets paired with their minor, in lexicographic subset order.
    pub minors: Vec<(Vec<usize>, Polynomial)>,
    /// Number of column subsets of size `dim V`.
    pub total: u128,
    /// Set when enumeration stopped at the configured cap.
    pub truncated: bool,
}

impl MinorsReport {
    pub fn polynomials(&self) -> Vec<&Polynomial> {
        self.minors.iter().map(|(_, p)| p).collect()
    }

    /// Whether every listed minor vanishes at `pt`. With `truncated` set this
    /// only bounds the locus from above.
    pub fn vanish_at(&self, pt: &[Rational]) -> Result<bool> {
        for (_, p) in &self.minors {
            if !num_traits::Zero::is_zero(&p.eval(pt)?) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn choose(n: u128, k: u128) -> u128 {
    let k = k.min(n - k.min(n));
    (0..k).fold(1u128, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

/// Maximal minors whose common zero locus is the Weierstrass locus of `v`
/// in the affine chart.
pub fn weierstrass_minors(v: &SubspaceV, cfg: &ComputeConfig) -> Result<MinorsReport> {
    let order = generic_n_inj(v, cfg)?;
    let columns = Exponent::all_up_to_degree(v.nvars(), order);
    debug_assert_eq!(columns.len(), binomial_count(order, v.nvars()));
    let rows = symbolic_rows(v.basis(), &columns);
    let dim = v.dim();
    let total = choose(columns.len() as u128, dim as u128);
    let mut minors = Vec::new();
    let mut truncated = false;
    for (seen, subset) in (0..columns.len()).combinations(dim).enumerate() {
        if seen == cfg.minors_cap {
            truncated = true;
            break;
        }
        let sub: Vec<Vec<Polynomial>> = rows
            .iter()
            .map(|r| subset.iter().map(|&c| r[c].clone()).collect())
            .collect();
        let det = determinant_polynomial(&sub, v.nvars());
        if !det.is_zero() {
            minors.push((subset, det));
        }
    }
    Ok(MinorsReport {
        order,
        minors,
        total,
        truncated,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};
    use crate::jets::{n_inj_at, EvalPoint};

    fn v1(exps: &[u32]) -> SubspaceV {
        SubspaceV::from_monomials(1, exps.iter().map(|&k| Exponent::new(vec![k])).collect()).unwrap()
    }

    #[test]
    fn cubic_minor() {
        let r = weierstrass_minors(&v1(&[0, 1, 3]), &ComputeConfig::default()).unwrap();
        assert_eq!(r.order, 2);
        assert_eq!(r.total, 1);
        assert!(!r.truncated);
        let x = Polynomial::var(1, 0);
        assert_eq!(r.polynomials(), vec![&x.scale(&int(3))]);
        assert!(r.vanish_at(&[int(0)]).unwrap());
        assert!(!r.vanish_at(&[rat(1, 5)]).unwrap());
    }

    #[test]
    fn cap_truncates() {
        let cfg = ComputeConfig {
            minors_cap: 2,
            ..ComputeConfig::default()
        };
        let v = SubspaceV::from_monomials(
            2,
            vec![Exponent::new(vec![0, 0]), Exponent::new(vec![2, 0])],
        )
        .unwrap();
        let r = weierstrass_minors(&v, &cfg).unwrap();
        assert!(r.truncated);
        assert_eq!(r.total, 3);
        assert_eq!(r.minors.len(), 1);
    }

    #[test]
    fn locus_matches_orders() {
        let cfg = ComputeConfig::default();
        let v = v1(&[0, 2, 3]);
        let r = weierstrass_minors(&v, &cfg).unwrap();
        for c in -3..=3 {
            let pt = vec![int(c)];
            let jump = n_inj_at(&v, &EvalPoint::At(pt.clone()), &cfg).unwrap().weierstrass_order >= 0;
            assert_eq!(r.vanish_at(&pt).unwrap(), jump, "at {c}");
        }
    }
}
