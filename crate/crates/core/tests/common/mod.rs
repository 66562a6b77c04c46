//! Independent oracles for integration tests. Nothing here calls into the
//! library's linear algebra or operator code.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

pub fn qr(n: i64, d: i64) -> Q {
    Q::new(n.into(), d.into())
}

/// Rank by textbook Gaussian elimination with partial pivoting on the first
/// nonzero entry.
pub fn rank(mut rows: Vec<Vec<Q>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        for i in r + 1..rows.len() {
            if rows[i][c].is_zero() {
                continue;
            }
            let f = &rows[i][c] / &rows[r][c];
            for j in c..ncols {
                let d = &f * &rows[r][j];
                rows[i][j] -= d;
            }
        }
        r += 1;
    }
    r
}

pub fn binom(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    (0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - i) / BigInt::from(i + 1))
}

pub fn falling(m: u32, a: u32) -> BigInt {
    (0..a).fold(BigInt::one(), |acc, i| {
        if i >= m {
            BigInt::zero()
        } else {
            acc * BigInt::from(m - i)
        }
    })
}

pub fn pow(x: &Q, e: u32) -> Q {
    (0..e).fold(Q::one(), |acc, _| acc * x)
}

/// Multi-indices of total degree `≤ n` in `nvars` variables, in any order.
pub fn multi_indices(nvars: usize, n: u32) -> Vec<Vec<u32>> {
    if nvars == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 0..=n {
        for mut rest in multi_indices(nvars - 1, n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Taylor coefficient `∂^α x^m / α!` at `a`, i.e. `C(m, α) a^(m − α)`.
pub fn taylor_entry(m: &[u32], alpha: &[u32], a: &[Q]) -> Q {
    m.iter().zip(alpha).zip(a).fold(Q::one(), |acc, ((&mi, &ai), x)| {
        if ai > mi {
            Q::zero()
        } else {
            acc * Q::from_integer(binom(mi, ai)) * pow(x, mi - ai)
        }
    })
}

/// Rank of the order-`n` jet matrix of the monomials `points` at `a`.
pub fn jet_rank(points: &[Vec<u32>], a: &[Q], n: u32) -> usize {
    let cols = multi_indices(a.len(), n);
    rank(
        points
            .iter()
            .map(|m| cols.iter().map(|al| taylor_entry(m, al, a)).collect())
            .collect(),
    )
}

/// Least `n` with injective order-`n` Taylor map at `a`.
pub fn n_inj_oracle(points: &[Vec<u32>], a: &[Q]) -> u32 {
    (0..).find(|&n| jet_rank(points, a, n) == points.len()).unwrap()
}

/// Largest `n` with every order `≤ n` surjective at `a`, −1 if none.
pub fn n_surj_oracle(points: &[Vec<u32>], a: &[Q]) -> i64 {
    let mut n = 0u32;
    loop {
        let cols = multi_indices(a.len(), n).len();
        if cols > points.len() || jet_rank(points, a, n) < cols {
            return n as i64 - 1;
        }
        n += 1;
    }
}

/// Image of `x^m` under `x^β ∂^α`: coefficient and exponent, if nonzero.
pub fn act(beta: &[u32], alpha: &[u32], m: &[u32]) -> Option<(BigInt, Vec<u32>)> {
    let c = m.iter().zip(alpha).fold(BigInt::one(), |acc, (&mi, &ai)| acc * falling(mi, ai));
    if c.is_zero() {
        return None;
    }
    let t = m.iter().zip(alpha).zip(beta).map(|((&mi, &ai), &bi)| mi - ai + bi).collect();
    Some((c, t))
}

/// Dimension of the image in `End(V)` of order-`≤ n` operators preserving
/// the monomial span of `points`, over coefficients `x^β` with
/// `β ≤ max(P) + n` coordinatewise. Computed as `rank[C; E] − rank C`.
pub fn brute_image_rank(points: &[Vec<u32>], n: u32) -> usize {
    let nvars = points[0].len();
    let top: Vec<u32> = (0..nvars).map(|i| points.iter().map(|p| p[i]).max().unwrap() + n).collect();
    let betas: Vec<Vec<u32>> = multi_indices(nvars, top.iter().sum())
        .into_iter()
        .filter(|b| b.iter().zip(&top).all(|(x, t)| x <= t))
        .collect();
    let alphas = multi_indices(nvars, n);
    let unknowns: Vec<(Vec<u32>, Vec<u32>)> = betas
        .iter()
        .flat_map(|b| alphas.iter().map(move |a| (b.clone(), a.clone())))
        .collect();
    let inside: BTreeSet<&Vec<u32>> = points.iter().collect();
    let mut outside: BTreeMap<(usize, Vec<u32>), Vec<Q>> = BTreeMap::new();
    let mut entries: BTreeMap<(usize, usize), Vec<Q>> = BTreeMap::new();
    let index: BTreeMap<&Vec<u32>, usize> = points.iter().enumerate().map(|(i, p)| (p, i)).collect();
    for (u, (b, a)) in unknowns.iter().enumerate() {
        for (j, m) in points.iter().enumerate() {
            if let Some((c, t)) = act(b, a, m) {
                let row = if inside.contains(&t) {
                    entries.entry((index[&t], j)).or_insert_with(|| vec![Q::zero(); unknowns.len()])
                } else {
                    outside.entry((j, t)).or_insert_with(|| vec![Q::zero(); unknowns.len()])
                };
                row[u] += Q::from_integer(c);
            }
        }
    }
    let c_rows: Vec<Vec<Q>> = outside.into_values().collect();
    let mut all = c_rows.clone();
    all.extend(entries.into_values());
    let rc = if c_rows.is_empty() { 0 } else { rank(c_rows) };
    rank(all) - rc
}

/// Whether `x^β ∂^α` sums in `terms` map every monomial of `points` into
/// their span, by direct action.
pub fn preserves(terms: &[(Vec<u32>, Vec<u32>, Q)], points: &[Vec<u32>]) -> bool {
    let inside: BTreeSet<&Vec<u32>> = points.iter().collect();
    points.iter().all(|m| {
        let mut image: BTreeMap<Vec<u32>, Q> = BTreeMap::new();
        for (b, a, c) in terms {
            if let Some((k, t)) = act(b, a, m) {
                *image.entry(t).or_insert_with(Q::zero) += c * Q::from_integer(k);
            }
        }
        image.iter().all(|(t, c)| c.is_zero() || inside.contains(t))
    })
}

/// Maximum number of points of `points` on one line.
pub fn collinear_max(points: &[Vec<i64>]) -> usize {
    let mut best = points.len().min(1);
    for a in points {
        for b in points {
            if a == b {
                continue;
            }
            let d: Vec<i64> = a.iter().zip(b).map(|(x, y)| y - x).collect();
            let count = points
                .iter()
                .filter(|p| {
                    let e: Vec<i64> = a.iter().zip(*p).map(|(x, y)| y - x).collect();
                    (0..d.len()).all(|i| (0..d.len()).all(|j| e[i] * d[j] == e[j] * d[i]))
                })
                .count();
            best = best.max(count);
        }
    }
    best
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Nonzero rational with small numerator and denominator.
pub fn random_nonzero(rng: &mut ChaCha8Rng) -> Q {
    loop {
        let n = rng.gen_range(-12i64..=12);
        if n != 0 {
            return qr(n, rng.gen_range(1i64..=7));
        }
    }
}

/// Random set of distinct lattice points in `[0, side]^nvars`; the size is
/// capped by the number of available points.
pub fn random_points(rng: &mut ChaCha8Rng, nvars: usize, side: u32, min: usize, max: usize) -> Vec<Vec<u32>> {
    let available = (side as usize + 1).pow(nvars as u32);
    let size = rng.gen_range(min..=max).min(available);
    let mut set = BTreeSet::new();
    while set.len() < size {
        set.insert((0..nvars).map(|_| rng.gen_range(0..=side)).collect::<Vec<u32>>());
    }
    set.into_iter().collect()
}

