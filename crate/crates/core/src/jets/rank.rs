use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::matrix::evaluate_rows;
use crate::algebra::{int, Polynomial, Rational};
use crate::config::ComputeConfig;
use crate::linalg::{rank_polynomial, rank_rational};

/// Exact rank of a rational matrix by fraction-free elimination.
pub fn rank_exact(m: &[Vec<Rational>]) -> usize {
    rank_rational(m)
}

/// How a generic rank was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum RankMethod {
    /// Fraction-free elimination over the polynomial ring; always exact.
    Symbolic,
    /// Maximum over random integer evaluations. A lower bound, exact when
    /// `certified` (the bound reached `min(rows, cols)`).
    Randomized { trials: usize, certified: bool },
}

impl RankMethod {
    pub fn is_exact(&self) -> bool {
        match self {
            RankMethod::Symbolic => true,
            RankMethod::Randomized { certified, .. } => *certified,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenericRank {
    pub rank: usize,
    pub method: RankMethod,
}

/// Rank of a polynomial matrix over the fraction field.
///
/// `salt` decorrelates the random points of different calls sharing the
/// same seed.
pub fn generic_rank(m: &[Vec<Polynomial>], cfg: &ComputeConfig, salt: u64) -> GenericRank {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let bound = rows.min(cols);
    if bound == 0 {
        return GenericRank {
            rank: 0,
            method: RankMethod::Symbolic,
        };
    }
    if rows <= cfg.symbolic_max_dim && cols <= cfg.symbolic_max_dim {
        return GenericRank {
            rank: rank_polynomial(m),
            method: RankMethod::Symbolic,
        };
    }
    let nvars = m[0][0].nvars();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ salt.wrapping_mul(0x9E37_79B9_7F4A_7C15));
    let mut best = 0;
    let mut trials = 0;
    for t in 0..cfg.random_trials.max(1) {
        trials += 1;
        let range: i64 = 16 << t.min(40);
        let pt: Vec<Rational> = (0..nvars).map(|_| int(rng.gen_range(-range..=range))).collect();
        let values = evaluate_rows(m, &pt).expect("entries share the variable count");
        best = best.max(rank_rational(&values));
        if best == bound {
            break;
        }
    }
    GenericRank {
        rank: best,
        method: RankMethod::Randomized {
            trials,
            certified: best == bound,
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Exponent;
    use crate::jets::{jet_matrix, EvalPoint, SubspaceV};

    fn v1(exps: &[u32]) -> SubspaceV {
        SubspaceV::from_monomials(1, exps.iter().map(|&k| Exponent::new(vec![k])).collect()).unwrap()
    }

    #[test]
    fn symbolic_examples() {
        let cfg = ComputeConfig::default();
        let m = jet_matrix(&v1(&[0, 1, 3]), 2, &EvalPoint::Generic).unwrap();
        let r = generic_rank(m.symbolic().unwrap(), &cfg, 0);
        assert_eq!(r, GenericRank { rank: 3, method: RankMethod::Symbolic });

        let x = Polynomial::var(1, 0);
        let row = vec![vec![x.clone(), &x * &x]];
        assert_eq!(generic_rank(&row, &cfg, 0).rank, 1);

        let m = jet_matrix(&v1(&[0, 1, 2]), 1, &EvalPoint::Generic).unwrap();
        assert_eq!(generic_rank(m.symbolic().unwrap(), &cfg, 0).rank, 2);
    }

    #[test]
    fn randomized_path_agrees() {
        let cfg = ComputeConfig {
            symbolic_max_dim: 0,
            ..ComputeConfig::default()
        };
        let m = jet_matrix(&v1(&[0, 1, 3]), 2, &EvalPoint::Generic).unwrap();
        let r = generic_rank(m.symbolic().unwrap(), &cfg, 0);
        assert_eq!(r.rank, 3);
        assert!(r.method.is_exact());
        // {1, x, x³} at order 1: rank 2 of a 3×2 matrix, certified by the bound
        let m1 = m.truncated(1);
        assert_eq!(generic_rank(m1.symbolic().unwrap(), &cfg, 0).rank, 2);
    }
}
