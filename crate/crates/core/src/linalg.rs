//! Exact linear algebra over ℚ and over ℚ[x_1..x_n].
//!
//! Ranks are computed with fraction-free (Bareiss) elimination: every
//! intermediate entry is a minor of the input, so divisions are exact and no
//! fractions appear. Kernels use rational row reduction.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::algebra::{Polynomial, Rational};

/// Entries of an integral domain on which Bareiss elimination runs.
trait BareissEntry: Clone {
    fn is_zero(&self) -> bool;
    fn one_like(&self) -> Self;
    fn zero_like(&self) -> Self;
    /// `(a·b − c·d) / e`, the division being exact.
    fn cross(a: &Self, b: &Self, c: &Self, d: &Self, e: &Self) -> Self;
}

impl BareissEntry for BigInt {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn one_like(&self) -> Self {
        BigInt::one()
    }
    fn zero_like(&self) -> Self {
        BigInt::zero()
    }
    fn cross(a: &Self, b: &Self, c: &Self, d: &Self, e: &Self) -> Self {
        (a * b - c * d) / e
    }
}

impl BareissEntry for Polynomial {
    fn is_zero(&self) -> bool {
        Polynomial::is_zero(self)
    }
    fn one_like(&self) -> Self {
        Polynomial::one(self.nvars())
    }
    fn zero_like(&self) -> Self {
        Polynomial::zero(self.nvars())
    }
    fn cross(a: &Self, b: &Self, c: &Self, d: &Self, e: &Self) -> Self {
        let num = &(a * b) - &(c * d);
        num.div_exact(e)
            .expect("Bareiss division is exact over an integral domain")
    }
}

/// Runs Bareiss elimination in place; returns the rank and the number of row
/// swaps. After the call the first `rank` rows are in echelon form and the
/// last pivot is the determinant (up to sign) of the leading square block.
fn bareiss<T: BareissEntry>(a: &mut [Vec<T>]) -> (usize, usize, Option<T>) {
    let nrows = a.len();
    let ncols = a.first().map_or(0, Vec::len);
    let mut prev: Option<T> = None;
    let mut rank = 0;
    let mut swaps = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(p) = (rank..nrows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        if p != rank {
            a.swap(p, rank);
            swaps += 1;
        }
        let one = a[rank][col].one_like();
        let divisor = prev.clone().unwrap_or(one);
        let (top, rest) = a.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        for row in rest.iter_mut() {
            let lead_zero = row[col].is_zero();
            for j in col + 1..ncols {
                if row[j].is_zero() && (lead_zero || pivot_row[j].is_zero()) {
                    continue;
                }
                row[j] = T::cross(&pivot_row[col], &row[j], &row[col], &pivot_row[j], &divisor);
            }
            row[col] = row[col].zero_like();
        }
        prev = Some(a[rank][col].clone());
        rank += 1;
    }
    (rank, swaps, prev)
}

/// Multiplies each row by the lcm of its denominators.
pub fn integer_rows(rows: &[Vec<Rational>]) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|row| {
            let l = row
                .iter()
                .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
            row.iter()
                .map(|r| r.numer() * (&l / r.denom()))
                .collect()
        })
        .collect()
}

pub fn rank_integer(mut rows: Vec<Vec<BigInt>>) -> usize {
    // eliminate along the shorter side
    if rows.len() > rows.first().map_or(0, Vec::len) {
        rows = transpose(&rows);
    }
    bareiss(&mut rows).0
}

/// Exact rank of a rational matrix.
pub fn rank_rational(rows: &[Vec<Rational>]) -> usize {
    rank_integer(integer_rows(rows))
}

/// Rank over the fraction field ℚ(x_1..x_n).
pub fn rank_polynomial(rows: &[Vec<Polynomial>]) -> usize {
    let mut rows = if rows.len() > rows.first().map_or(0, Vec::len) {
        transpose(rows)
    } else {
        rows.to_vec()
    };
    bareiss(&mut rows).0
}

/// Determinant of a square polynomial matrix.
pub fn determinant_polynomial(m: &[Vec<Polynomial>], nvars: usize) -> Polynomial {
    let n = m.len();
    if n == 0 {
        return Polynomial::one(nvars);
    }
    assert!(m.iter().all(|r| r.len() == n), "determinant of a non-square matrix");
    let mut a = m.to_vec();
    let (rank, swaps, last) = bareiss(&mut a);
    if rank < n {
        return Polynomial::zero(nvars);
    }
    let det = last.expect("full rank implies a pivot");
    if swaps % 2 == 1 {
        -&det
    } else {
        det
    }
}

pub fn transpose<T: Clone>(rows: &[Vec<T>]) -> Vec<Vec<T>> {
    let ncols = rows.first().map_or(0, Vec::len);
    (0..ncols)
        .map(|j| rows.iter().map(|r| r[j].clone()).collect())
        .collect()
}

/// Reduced row echelon form of a rational matrix.
#[derive(Clone, Debug)]
pub struct Rref {
    pub rows: Vec<Vec<Rational>>,
    pub pivots: Vec<usize>,
    pub ncols: usize,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Basis of `{v : A v = 0}`, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        let mut is_pivot = vec![false; self.ncols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ncols)
            .filter(|&j| !is_pivot[j])
            .map(|free| {
                let mut v = vec![Rational::zero(); self.ncols];
                v[free] = Rational::one();
                for (row, &p) in self.rows.iter().zip(&self.pivots) {
                    v[p] = -row[free].clone();
                }
                v
            })
            .collect()
    }
}

/// Gauss–Jordan elimination that only touches nonzero entries, which keeps
/// block-sparse constraint systems cheap.
pub fn row_reduce(rows: &[Vec<Rational>], ncols: usize) -> Rref {
    let mut a: Vec<Vec<Rational>> = rows
        .iter()
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .cloned()
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(p, r);
        let inv = Rational::one() / &a[r][col];
        let support: Vec<usize> = (col..ncols).filter(|&j| !a[r][j].is_zero()).collect();
        for &j in &support {
            a[r][j] = &a[r][j] * &inv;
        }
        for i in 0..a.len() {
            if i == r || a[i][col].is_zero() {
                continue;
            }
            let factor = a[i][col].clone();
            for &j in &support {
                let delta = &factor * &a[r][j];
                a[i][j] -= delta;
            }
        }
        pivots.push(col);
        r += 1;
        if r == a.len() {
            break;
        }
    }
    a.truncate(r);
    Rref {
        rows: a,
        pivots,
        ncols,
    }
}

/// Basis of the right kernel of `rows` (each of length `ncols`).
pub fn nullspace(rows: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    row_reduce(rows, ncols).nullspace()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat, Exponent};

    fn q(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
    }

    #[test]
    fn small_ranks() {
        assert_eq!(rank_rational(&q(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])), 3);
        assert_eq!(rank_rational(&q(&[&[0; 5], &[0; 5]])), 0);
        assert_eq!(rank_rational(&q(&[&[1, 2], &[2, 4], &[3, 5]])), 2);
        assert_eq!(rank_rational(&[]), 0);
        let half = vec![vec![rat(1, 2), rat(1, 3)], vec![rat(3, 2), int(1)]];
        assert_eq!(rank_rational(&half), 1);
    }

    #[test]
    fn rank_skips_zero_columns() {
        assert_eq!(rank_rational(&q(&[&[0, 1, 2], &[0, 2, 4], &[0, 0, 1]])), 2);
    }

    #[test]
    fn nullspace_examples() {
        let a = q(&[&[1, 1, 0], &[0, 0, 1]]);
        let ns = nullspace(&a, 3);
        assert_eq!(ns, vec![vec![int(-1), int(1), int(0)]]);
        assert_eq!(nullspace(&[], 2).len(), 2);
    }

    #[test]
    fn polynomial_rank_and_det() {
        let x = Polynomial::var(1, 0);
        let c = |k: i64| Polynomial::constant(1, int(k));
        let mono = |k: u32, s: i64| Polynomial::monomial(Exponent::new(vec![k]), int(s));
        // jet matrix of {1, x, x³} at order 2
        let m = vec![
            vec![c(1), c(0), c(0)],
            vec![x.clone(), c(1), c(0)],
            vec![mono(3, 1), mono(2, 3), mono(1, 3)],
        ];
        assert_eq!(rank_polynomial(&m), 3);
        assert_eq!(determinant_polynomial(&m, 1), mono(1, 3));
        assert_eq!(rank_polynomial(&[vec![x.clone(), mono(2, 1)]]), 1);
        let swapped = vec![vec![c(0), c(1)], vec![c(1), c(0)]];
        assert_eq!(determinant_polynomial(&swapped, 1), c(-1));
    }
}
