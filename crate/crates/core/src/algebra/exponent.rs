use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

/// Multi-index of non-negative exponents, one entry per variable.
///
/// The derived ordering is lexicographic on the entries and is the monomial
/// order used for polynomial division. Jet-matrix columns use
/// [`Exponent::graded_cmp`] instead.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
#[serde(transparent)]
pub struct Exponent(Vec<u32>);

impl Exponent {
    pub fn new(entries: Vec<u32>) -> Self {
        Exponent(entries)
    }

    pub fn zero(nvars: usize) -> Self {
        Exponent(vec![0; nvars])
    }

    /// The exponent of the `i`-th variable.
    pub fn unit(nvars: usize, i: usize) -> Self {
        let mut v = vec![0; nvars];
        v[i] = 1;
        Exponent(v)
    }

    /// Converts signed entries, failing on any negative one.
    pub fn from_signed(entries: &[i64]) -> Option<Self> {
        entries
            .iter()
            .map(|&e| u32::try_from(e).ok())
            .collect::<Option<Vec<_>>>()
            .map(Exponent)
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn to_signed(&self) -> Vec<i64> {
        self.0.iter().map(|&e| e as i64).collect()
    }

    /// Total degree `|α|`.
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn add(&self, other: &Exponent) -> Exponent {
        debug_assert_eq!(self.nvars(), other.nvars());
        Exponent(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn checked_sub(&self, other: &Exponent) -> Option<Exponent> {
        debug_assert_eq!(self.nvars(), other.nvars());
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Exponent)
    }

    /// Componentwise `self ≤ other`.
    pub fn le(&self, other: &Exponent) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `self + shift` when every entry stays non-negative.
    pub fn shifted(&self, shift: &[i64]) -> Option<Exponent> {
        debug_assert_eq!(self.nvars(), shift.len());
        self.0
            .iter()
            .zip(shift)
            .map(|(&a, &s)| u32::try_from(a as i64 + s).ok())
            .collect::<Option<Vec<_>>>()
            .map(Exponent)
    }

    /// Falling factorial `(self)_α = Π m_i (m_i - 1) ⋯ (m_i - α_i + 1)`,
    /// zero unless `α ≤ self`.
    pub fn falling_factorial(&self, alpha: &Exponent) -> BigInt {
        let mut acc = BigInt::one();
        for (&m, &a) in self.0.iter().zip(&alpha.0) {
            if a > m {
                return BigInt::from(0);
            }
            for t in 0..a {
                acc *= m - t;
            }
        }
        acc
    }

    /// `α! = Π α_i!`.
    pub fn factorial(&self) -> BigInt {
        let mut acc = BigInt::one();
        for &a in &self.0 {
            for t in 2..=a {
                acc *= t;
            }
        }
        acc
    }

    /// Multi-binomial `C(self, α) = Π C(m_i, α_i)`.
    pub fn binomial(&self, alpha: &Exponent) -> BigInt {
        self.falling_factorial(alpha) / alpha.factorial()
    }

    /// Total degree first, then larger leading entries first
    /// (`1, x, y, x², xy, y², …`).
    pub fn graded_cmp(&self, other: &Exponent) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }

    /// All exponents of total degree exactly `d`, in graded order.
    pub fn all_of_degree(nvars: usize, d: u32) -> Vec<Exponent> {
        fn fill(prefix: &mut Vec<u32>, left: usize, d: u32, out: &mut Vec<Exponent>) {
            if left == 1 {
                prefix.push(d);
                out.push(Exponent(prefix.clone()));
                prefix.pop();
                return;
            }
            for first in (0..=d).rev() {
                prefix.push(first);
                fill(prefix, left - 1, d - first, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if nvars == 0 {
            if d == 0 {
                out.push(Exponent(Vec::new()));
            }
            return out;
        }
        fill(&mut Vec::with_capacity(nvars), nvars, d, &mut out);
        out
    }

    /// All exponents with `|α| ≤ n`, in graded order; `C(n + nvars, nvars)` of them.
    pub fn all_up_to_degree(nvars: usize, n: u32) -> Vec<Exponent> {
        (0..=n)
            .flat_map(|d| Exponent::all_of_degree(nvars, d))
            .collect()
    }

    /// Every exponent `β ≤ self` componentwise.
    pub fn divisors(&self) -> Vec<Exponent> {
        let mut out = vec![Vec::with_capacity(self.nvars())];
        for &m in &self.0 {
            out = out
                .into_iter()
                .flat_map(|p| {
                    (0..=m).map(move |e| {
                        let mut q = p.clone();
                        q.push(e);
                        q
                    })
                })
                .collect();
        }
        out.into_iter().map(Exponent).collect()
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// `C(n + k, k)` as a plain integer, used for jet column counts.
pub fn binomial_count(n: u32, k: usize) -> usize {
    let mut acc: u128 = 1;
    for i in 1..=k as u128 {
        acc = acc * (n as u128 + i) / i;
    }
    acc as usize
}
