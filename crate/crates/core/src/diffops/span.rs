use std::collections::BTreeMap;

use num_traits::Zero;

use crate::algebra::{Exponent, Polynomial, Rational};
use crate::jets::SubspaceV;
use crate::linalg::row_reduce;

/// Membership and coordinates with respect to the ordered basis of `V`.
pub(crate) struct Coordinates {
    monomials: Vec<Exponent>,
    /// Reduced rows of the coefficient matrix, each expressed also through
    /// the original basis: `reduced[i] = Σ_j change[i][j] b_j`.
    reduced: Vec<Vec<Rational>>,
    change: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
    dim: usize,
}

impl Coordinates {
    pub fn new(v: &SubspaceV) -> Self {
        let mut monomials: Vec<Exponent> = v
            .basis()
            .iter()
            .flat_map(|p| p.terms().map(|(e, _)| e.clone()))
            .collect();
        monomials.sort();
        monomials.dedup();
        let index: BTreeMap<Exponent, usize> =
            monomials.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
        let dim = v.dim();
        let width = monomials.len() + dim;
        let rows: Vec<Vec<Rational>> = v
            .basis()
            .iter()
            .enumerate()
            .map(|(j, p)| {
                let mut row = vec![Rational::zero(); width];
                for (e, c) in p.terms() {
                    row[index[e]] = c.clone();
                }
                row[monomials.len() + j] = Rational::from_integer(1.into());
                row
            })
            .collect();
        let rref = row_reduce(&rows, width);
        debug_assert!(rref.pivots.iter().all(|&p| p < monomials.len()));
        let (reduced, change) = rref
            .rows
            .into_iter()
            .map(|mut r| {
                let tail = r.split_off(monomials.len());
                (r, tail)
            })
            .unzip();
        Coordinates {
            monomials,
            reduced,
            change,
            pivots: rref.pivots,
            dim,
        }
    }

    /// Part of `p` outside `span(V)` after eliminating pivot monomials.
    pub fn residual(&self, p: &Polynomial) -> BTreeMap<Exponent, Rational> {
        let mut rest: BTreeMap<Exponent, Rational> =
            p.terms().map(|(e, c)| (e.clone(), c.clone())).collect();
        for (row, &piv) in self.reduced.iter().zip(&self.pivots) {
            let Some(c) = rest.get(&self.monomials[piv]).cloned() else {
                continue;
            };
            for (j, entry) in row.iter().enumerate() {
                if entry.is_zero() {
                    continue;
                }
                let slot = rest.entry(self.monomials[j].clone()).or_insert_with(Rational::zero);
                *slot -= &c * entry;
            }
            rest.retain(|_, x| !x.is_zero());
        }
        rest
    }

    /// Coordinates of `p` in the basis of `V`, or `None` if `p ∉ V`.
    pub fn coords(&self, p: &Polynomial) -> Option<Vec<Rational>> {
        if !self.residual(p).is_empty() {
            return None;
        }
        let mut out = vec![Rational::zero(); self.dim];
        for (i, &piv) in self.pivots.iter().enumerate() {
            let c = p.coefficient(&self.monomials[piv]);
            if c.is_zero() {
                continue;
            }
            for (j, t) in self.change[i].iter().enumerate() {
                out[j] += &c * t;
            }
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};

    #[test]
    fn coordinates_in_mixed_basis() {
        let x = Polynomial::var(1, 0);
        let one = Polynomial::one(1);
        let v = SubspaceV::new(1, vec![&one + &x, &one - &x]).unwrap();
        let c = Coordinates::new(&v);
        assert_eq!(c.coords(&x), Some(vec![rat(1, 2), rat(-1, 2)]));
        assert_eq!(c.coords(&one.scale(&int(4))), Some(vec![int(2), int(2)]));
        assert_eq!(c.coords(&(&x * &x)), None);
        let r = c.residual(&(&(&x * &x) + &x));
        assert_eq!(r.len(), 1);
    }
}
