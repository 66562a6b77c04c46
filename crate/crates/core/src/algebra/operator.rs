use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::exponent::Exponent;
use super::polynomial::{write_coefficient, write_monomial, Polynomial};
use super::rational::Rational;
use crate::error::{Error, Result};

/// Element of the Weyl algebra `ℚ[x_1..x_n, ∂_1..∂_n]`, stored normally
/// ordered: the key `(β, α)` is the term `x^β ∂^α`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DifferentialOperator {
    nvars: usize,
    terms: BTreeMap<(Exponent, Exponent), Rational>,
}

/// Weight `β − α` of a term `x^β ∂^α`.
pub type Weight = Vec<i64>;

fn term_weight(beta: &Exponent, alpha: &Exponent) -> Weight {
    beta.as_slice()
        .iter()
        .zip(alpha.as_slice())
        .map(|(&b, &a)| b as i64 - a as i64)
        .collect()
}

impl DifferentialOperator {
    pub fn zero(nvars: usize) -> Self {
        DifferentialOperator {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn identity(nvars: usize) -> Self {
        Self::scalar(nvars, Rational::one())
    }

    pub fn scalar(nvars: usize, c: Rational) -> Self {
        Self::term(Exponent::zero(nvars), Exponent::zero(nvars), c)
    }

    /// `c · x^β ∂^α`.
    pub fn term(beta: Exponent, alpha: Exponent, c: Rational) -> Self {
        assert_eq!(beta.nvars(), alpha.nvars(), "exponent lengths differ");
        let mut op = Self::zero(beta.nvars());
        op.add_term(beta, alpha, c);
        op
    }

    /// Multiplication by `x_i`.
    pub fn x(nvars: usize, i: usize) -> Self {
        Self::term(Exponent::unit(nvars, i), Exponent::zero(nvars), Rational::one())
    }

    /// The derivation `∂_i`.
    pub fn d(nvars: usize, i: usize) -> Self {
        Self::term(Exponent::zero(nvars), Exponent::unit(nvars, i), Rational::one())
    }

    /// Multiplication by a polynomial, an operator of order 0.
    pub fn multiplication(p: &Polynomial) -> Self {
        let mut op = Self::zero(p.nvars());
        for (e, c) in p.terms() {
            op.add_term(e.clone(), Exponent::zero(p.nvars()), c.clone());
        }
        op
    }

    pub fn from_terms<I>(nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Exponent, Exponent, Rational)>,
    {
        let mut op = Self::zero(nvars);
        for (b, a, c) in terms {
            for e in [&b, &a] {
                if e.nvars() != nvars {
                    return Err(Error::DimensionMismatch {
                        expected: nvars,
                        found: e.nvars(),
                    });
                }
            }
            op.add_term(b, a, c);
        }
        Ok(op)
    }

    fn add_term(&mut self, beta: Exponent, alpha: Exponent, c: Rational) {
        if c.is_zero() {
            return;
        }
        let key = (beta, alpha);
        let entry = self.terms.entry(key.clone()).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Terms as `(β, α, coefficient)` of `x^β ∂^α`.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &Exponent, &Rational)> {
        self.terms.iter().map(|((b, a), c)| (b, a, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest `|α|` over the support; −1 for the zero operator.
    pub fn order(&self) -> i64 {
        self.terms
            .keys()
            .map(|(_, a)| a.degree() as i64)
            .max()
            .unwrap_or(-1)
    }

    pub fn scale(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return Self::zero(self.nvars);
        }
        DifferentialOperator {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(k, c)| (k.clone(), c * s)).collect(),
        }
    }

    /// `D · p`, using `x^β ∂^α · x^m = (m)_α x^{m − α + β}`.
    pub fn apply(&self, p: &Polynomial) -> Result<Polynomial> {
        if p.nvars() != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                found: p.nvars(),
            });
        }
        let mut out = Polynomial::zero(self.nvars);
        for ((beta, alpha), c) in &self.terms {
            for (m, a) in p.terms() {
                if let Some(rest) = m.checked_sub(alpha) {
                    let ff = BigRational::from_integer(m.falling_factorial(alpha));
                    out.add_term(rest.add(beta), c * a * ff);
                }
            }
        }
        Ok(out)
    }

    /// Normally ordered product `self ∘ other`, via
    /// `∂^α ∘ x^γ = Σ_{δ ≤ α, δ ≤ γ} C(α, δ) (γ)_δ x^{γ−δ} ∂^{α−δ}`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if other.nvars != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                found: other.nvars,
            });
        }
        let mut out = Self::zero(self.nvars);
        for ((b1, a1), c1) in &self.terms {
            for ((b2, a2), c2) in &other.terms {
                let c12 = c1 * c2;
                for delta in a1.divisors() {
                    if !delta.le(b2) {
                        continue;
                    }
                    let weight = a1.binomial(&delta) * b2.falling_factorial(&delta);
                    let beta = b1.add(&b2.checked_sub(&delta).expect("δ ≤ γ"));
                    let alpha = a1.checked_sub(&delta).expect("δ ≤ α").add(a2);
                    out.add_term(beta, alpha, &c12 * BigRational::from_integer(weight));
                }
            }
        }
        Ok(out)
    }

    /// `self^k` under composition.
    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::identity(self.nvars), |acc, _| &acc * self)
    }

    /// Splits into weight-homogeneous components keyed by `β − α`.
    pub fn weight_split(&self) -> BTreeMap<Weight, DifferentialOperator> {
        let mut out: BTreeMap<Weight, DifferentialOperator> = BTreeMap::new();
        for ((b, a), c) in &self.terms {
            out.entry(term_weight(b, a))
                .or_insert_with(|| Self::zero(self.nvars))
                .terms
                .insert((b.clone(), a.clone()), c.clone());
        }
        out
    }

    /// The common weight of all terms, if there is one.
    pub fn weight(&self) -> Option<Weight> {
        let mut weights = self.terms.keys().map(|(b, a)| term_weight(b, a));
        let first = weights.next()?;
        weights.all(|w| w == first).then_some(first)
    }

    pub fn is_weight_homogeneous(&self) -> bool {
        self.is_zero() || self.weight().is_some()
    }
}

impl Add for &DifferentialOperator {
    type Output = DifferentialOperator;
    fn add(self, rhs: &DifferentialOperator) -> DifferentialOperator {
        assert_eq!(self.nvars, rhs.nvars, "operator variable counts differ");
        let mut out = self.clone();
        for ((b, a), c) in &rhs.terms {
            out.add_term(b.clone(), a.clone(), c.clone());
        }
        out
    }
}

impl Sub for &DifferentialOperator {
    type Output = DifferentialOperator;
    fn sub(self, rhs: &DifferentialOperator) -> DifferentialOperator {
        self + &(-rhs)
    }
}

impl Neg for &DifferentialOperator {
    type Output = DifferentialOperator;
    fn neg(self) -> DifferentialOperator {
        self.scale(&-Rational::one())
    }
}

/// Composition. Panics on mismatched variable counts; see
/// [`DifferentialOperator::compose`] for the fallible form.
impl Mul for &DifferentialOperator {
    type Output = DifferentialOperator;
    fn mul(self, rhs: &DifferentialOperator) -> DifferentialOperator {
        self.compose(rhs).expect("operator variable counts differ")
    }
}

impl Add for DifferentialOperator {
    type Output = DifferentialOperator;
    fn add(self, rhs: DifferentialOperator) -> DifferentialOperator {
        &self + &rhs
    }
}

impl Sub for DifferentialOperator {
    type Output = DifferentialOperator;
    fn sub(self, rhs: DifferentialOperator) -> DifferentialOperator {
        &self - &rhs
    }
}

impl Mul for DifferentialOperator {
    type Output = DifferentialOperator;
    fn mul(self, rhs: DifferentialOperator) -> DifferentialOperator {
        &self * &rhs
    }
}

impl Neg for DifferentialOperator {
    type Output = DifferentialOperator;
    fn neg(self) -> DifferentialOperator {
        -&self
    }
}

impl fmt::Display for DifferentialOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        // highest order first, then by the x-part
        terms.sort_by(|(k1, _), (k2, _)| {
            k2.1.graded_cmp(&k1.1).then_with(|| k2.0.graded_cmp(&k1.0))
        });
        for (i, ((b, a), c)) in terms.into_iter().enumerate() {
            let bare = b.degree() == 0 && a.degree() == 0;
            write_coefficient(f, c, i == 0, bare)?;
            write_monomial(f, self.nvars, b, "")?;
            if b.degree() > 0 && a.degree() > 0 {
                write!(f, "*")?;
            }
            write_monomial(f, self.nvars, a, "d")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::int;

    fn e1(k: u32) -> Exponent {
        Exponent::new(vec![k])
    }

    fn xpow(k: u32) -> Polynomial {
        Polynomial::monomial(e1(k), int(1))
    }

    #[test]
    fn euler_operator_eigenvalue() {
        let euler = DifferentialOperator::term(e1(1), e1(1), int(1));
        assert_eq!(euler.apply(&xpow(2)).unwrap(), xpow(2).scale(&int(2)));
    }

    #[test]
    fn sl2_lowering_kills_top_monomial() {
        // (−x²∂ + 2x) · x² = 0
        let op = &DifferentialOperator::term(e1(2), e1(1), int(-1))
            + &DifferentialOperator::term(e1(1), e1(0), int(2));
        assert!(op.apply(&xpow(2)).unwrap().is_zero());
    }

    #[test]
    fn second_derivative() {
        let d2 = DifferentialOperator::term(e1(0), e1(2), int(1));
        assert_eq!(d2.apply(&xpow(3)).unwrap(), xpow(1).scale(&int(6)));
    }

    #[test]
    fn canonical_commutation() {
        let d = DifferentialOperator::d(1, 0);
        let x = DifferentialOperator::x(1, 0);
        let expected = &(&x * &d) + &DifferentialOperator::identity(1);
        assert_eq!(&d * &x, expected);
    }

    #[test]
    fn euler_squared() {
        let euler = DifferentialOperator::term(e1(1), e1(1), int(1));
        let expected = &DifferentialOperator::term(e1(2), e1(2), int(1)) + &euler;
        assert_eq!(&euler * &euler, expected);
        assert_eq!(euler.pow(2), expected);
    }

    #[test]
    fn identity_is_neutral() {
        let d = &DifferentialOperator::term(e1(3), e1(2), int(5)) + &DifferentialOperator::d(1, 0);
        let id = DifferentialOperator::identity(1);
        assert_eq!(&id * &d, d);
        assert_eq!(&d * &id, d);
    }

    #[test]
    fn weight_split_examples() {
        let two = |b: [u32; 2], a: [u32; 2]| {
            DifferentialOperator::term(Exponent::new(b.to_vec()), Exponent::new(a.to_vec()), int(1))
        };
        let euler2 = &two([1, 0], [1, 0]) + &two([0, 1], [0, 1]);
        let split = euler2.weight_split();
        assert_eq!(split.len(), 1);
        assert_eq!(split[&vec![0, 0]], euler2);

        let op = &DifferentialOperator::d(1, 0) + &DifferentialOperator::term(e1(2), e1(0), int(1));
        let split = op.weight_split();
        assert_eq!(split[&vec![-1]], DifferentialOperator::d(1, 0));
        assert_eq!(split[&vec![2]], DifferentialOperator::term(e1(2), e1(0), int(1)));

        let op = &DifferentialOperator::term(e1(1), e1(2), int(1))
            + &DifferentialOperator::term(e1(2), e1(1), int(1));
        let split = op.weight_split();
        assert_eq!(split.keys().cloned().collect::<Vec<_>>(), vec![vec![-1], vec![1]]);
        assert!(!op.is_weight_homogeneous());
    }

    #[test]
    fn order_and_display() {
        assert_eq!(DifferentialOperator::zero(2).order(), -1);
        assert_eq!(DifferentialOperator::identity(2).order(), 0);
        let op = &DifferentialOperator::term(e1(2), e1(1), int(-1))
            + &DifferentialOperator::term(e1(1), e1(0), int(2));
        assert_eq!(op.order(), 1);
        assert_eq!(op.to_string(), "-x^2*dx + 2*x");
    }
}
