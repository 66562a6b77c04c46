use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::exponent::Exponent;
use super::rational::{format_rational, Rational};
use crate::error::{Error, Result};

/// Sparse multivariate polynomial over ℚ. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Exponent, Rational>,
}

/// Display name of variable `i` in an `nvars`-variable ring.
pub fn var_name(nvars: usize, i: usize) -> String {
    if nvars <= 3 {
        ["x", "y", "z"][i].to_string()
    } else {
        format!("x{}", i + 1)
    }
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::monomial(Exponent::zero(nvars), c)
    }

    pub fn monomial(exp: Exponent, c: Rational) -> Self {
        let nvars = exp.nvars();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Polynomial { nvars, terms }
    }

    /// The variable `x_i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        Self::monomial(Exponent::unit(nvars, i), Rational::one())
    }

    /// Sums the given terms; exponents must all have `nvars` entries.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Exponent, Rational)>,
    {
        let mut p = Polynomial::zero(nvars);
        for (e, c) in terms {
            if e.nvars() != nvars {
                return Err(Error::DimensionMismatch {
                    expected: nvars,
                    found: e.nvars(),
                });
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    pub(crate) fn add_term(&mut self, e: Exponent, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; `None` stands for the degree −∞ of the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Exponent::degree).max()
    }

    pub fn coefficient(&self, e: &Exponent) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    /// The single term when the polynomial is `c·x^m` with `c ≠ 0`.
    pub fn as_monomial(&self) -> Option<(&Exponent, &Rational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    /// Lex-largest term.
    pub fn leading_term(&self) -> Option<(&Exponent, &Rational)> {
        self.terms.iter().next_back()
    }

    fn check_point(&self, pt: &[Rational]) -> Result<()> {
        if pt.len() != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                found: pt.len(),
            });
        }
        Ok(())
    }

    pub fn eval(&self, pt: &[Rational]) -> Result<Rational> {
        self.check_point(pt)?;
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in pt.iter().zip(e.as_slice()) {
                if k > 0 {
                    t *= num_traits::pow(x.clone(), k as usize);
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Substitutes `x_var = value`, keeping the variable count.
    pub fn substitute(&self, var: usize, value: &Rational) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars);
        for (e, c) in &self.terms {
            let k = e.as_slice()[var];
            let mut entries = e.as_slice().to_vec();
            entries[var] = 0;
            let c = if k == 0 {
                c.clone()
            } else {
                c * num_traits::pow(value.clone(), k as usize)
            };
            out.add_term(Exponent::new(entries), c);
        }
        out
    }

    /// `∂^α p`.
    pub fn derivative(&self, alpha: &Exponent) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in &self.terms {
            if let Some(rest) = m.checked_sub(alpha) {
                let f = BigRational::from_integer(m.falling_factorial(alpha));
                out.add_term(rest, c * f);
            }
        }
        out
    }

    /// `∂^α p / α!`, the coefficient of the α-th Taylor monomial.
    pub fn taylor_coefficient(&self, alpha: &Exponent) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in &self.terms {
            if let Some(rest) = m.checked_sub(alpha) {
                let f = BigRational::from_integer(m.binomial(alpha));
                out.add_term(rest, c * f);
            }
        }
        out
    }

    pub fn scale(&self, s: &Rational) -> Polynomial {
        if s.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * s)).collect(),
        }
    }

    /// Quotient `self / divisor` when the division is exact, `None` otherwise.
    pub fn div_exact(&self, divisor: &Polynomial) -> Option<Polynomial> {
        let (lead_e, lead_c) = divisor.leading_term()?;
        if let Some((e, c)) = divisor.as_monomial() {
            let mut q = Polynomial::zero(self.nvars);
            for (m, a) in &self.terms {
                q.terms.insert(m.checked_sub(e)?, a / c);
            }
            return Some(q);
        }
        let mut rem = self.clone();
        let mut quot = Polynomial::zero(self.nvars);
        while let Some((re, rc)) = rem.leading_term() {
            let qe = re.checked_sub(lead_e)?;
            let qc = rc / lead_c;
            let step = Polynomial::monomial(qe.clone(), qc.clone());
            rem = &rem - &(&step * divisor);
            quot.add_term(qe, qc);
        }
        Some(quot)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "polynomial variable counts differ");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "polynomial variable counts differ");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "polynomial variable counts differ");
        let mut out = Polynomial::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1.add(e2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

/// Writes `x^a*y^b`; empty for the constant monomial.
pub(crate) fn write_monomial(
    f: &mut fmt::Formatter<'_>,
    nvars: usize,
    e: &Exponent,
    prefix: &str,
) -> fmt::Result {
    let mut first = true;
    for (i, &k) in e.as_slice().iter().enumerate() {
        if k == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        write!(f, "{prefix}{}", var_name(nvars, i))?;
        if k > 1 {
            write!(f, "^{k}")?;
        }
    }
    Ok(())
}

/// Writes a signed coefficient in front of a (possibly empty) monomial.
pub(crate) fn write_coefficient(
    f: &mut fmt::Formatter<'_>,
    c: &Rational,
    first: bool,
    bare: bool,
) -> fmt::Result {
    let abs = c.abs();
    if first {
        if c.is_negative() {
            write!(f, "-")?;
        }
    } else if c.is_negative() {
        write!(f, " - ")?;
    } else {
        write!(f, " + ")?;
    }
    if bare {
        write!(f, "{}", format_rational(&abs))
    } else if !abs.is_one() {
        write!(f, "{}*", format_rational(&abs))
    } else {
        Ok(())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| b.0.graded_cmp(a.0));
        for (i, (e, c)) in terms.into_iter().enumerate() {
            let bare = e.degree() == 0;
            write_coefficient(f, c, i == 0, bare)?;
            write_monomial(f, self.nvars, e, "")?;
        }
        Ok(())
    }
}
