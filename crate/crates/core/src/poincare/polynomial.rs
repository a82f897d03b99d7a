use std::fmt;
use std::str::FromStr;

use super::coeff::Coeff;
use crate::error::{Error, Result};

/// A polynomial in `q` with nonnegative coefficients, `coeffs[k]` the
/// coefficient of `q^k`, never carrying a trailing zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QPolynomial<C> {
    coeffs: Vec<C>,
}

impl<C: Coeff> QPolynomial<C> {
    pub fn zero() -> Self {
        QPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0)
    }

    /// `q^degree`.
    pub fn monomial(degree: usize) -> Self {
        let mut coeffs = vec![C::zero(); degree + 1];
        coeffs[degree] = C::one();
        QPolynomial { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        QPolynomial { coeffs }
    }

    /// `[k]_q = 1 + q + ⋯ + q^{k−1}`.
    pub fn q_integer(k: usize) -> Self {
        QPolynomial {
            coeffs: vec![C::one(); k],
        }
    }

    /// `[k]_q! = [1]_q [2]_q ⋯ [k]_q`.
    pub fn q_factorial(k: usize) -> Result<Self> {
        (1..=k).try_fold(Self::one(), |acc, i| acc.checked_mul(&Self::q_integer(i)))
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, degree: usize) -> C {
        self.coeffs.get(degree).cloned().unwrap_or_else(C::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Adds `c q^degree` in place.
    pub fn add_term(&mut self, degree: usize, c: C) -> Result<()> {
        if c.is_zero() {
            return Ok(());
        }
        if self.coeffs.len() <= degree {
            self.coeffs.resize(degree + 1, C::zero());
        }
        self.coeffs[degree] = self.coeffs[degree].checked_add(&c).ok_or(Error::Overflow)?;
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        for (k, c) in other.coeffs.iter().enumerate() {
            out.add_term(k, c.clone())?;
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero());
        }
        let mut coeffs = vec![C::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                let term = a.checked_mul(b).ok_or(Error::Overflow)?;
                coeffs[i + j] = coeffs[i + j].checked_add(&term).ok_or(Error::Overflow)?;
            }
        }
        Ok(Self::from_coeffs(coeffs))
    }

    /// Multiplication by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![C::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        QPolynomial { coeffs }
    }

    /// Exact quotient by `divisor`; errors if the division leaves a remainder
    /// or the quotient would need a negative coefficient.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let lead = divisor
            .coeffs
            .last()
            .ok_or_else(|| Error::Domain("division by the zero polynomial".into()))?;
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let inexact = || Error::Inconsistent("polynomial division is not exact".into());
        let db = divisor.coeffs.len() - 1;
        if self.coeffs.len() - 1 < db {
            return Err(inexact());
        }
        let mut rem = self.coeffs.clone();
        let mut quotient = vec![C::zero(); rem.len() - db];
        for i in (0..quotient.len()).rev() {
            let (c, r) = rem[i + db].div_rem(lead);
            if !r.is_zero() {
                return Err(inexact());
            }
            for (k, b) in divisor.coeffs.iter().enumerate() {
                let t = c.checked_mul(b).ok_or(Error::Overflow)?;
                rem[i + k] = rem[i + k].checked_sub(&t).ok_or_else(inexact)?;
            }
            quotient[i] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(inexact());
        }
        Ok(Self::from_coeffs(quotient))
    }

    /// Value at `q = 1`, the sum of the coefficients.
    pub fn eval_one(&self) -> Result<C> {
        self.coeffs
            .iter()
            .try_fold(C::zero(), |acc, c| acc.checked_add(c))
            .ok_or(Error::Overflow)
    }

    /// Converts coefficient type, e.g. `u64` to `BigUint`.
    pub fn convert<D: Coeff>(&self) -> Result<QPolynomial<D>> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| D::from_str_radix(&c.to_string(), 10).map_err(|_| Error::Overflow))
            .collect::<Result<Vec<D>>>()?;
        Ok(QPolynomial { coeffs })
    }
}

impl<C: Coeff> Default for QPolynomial<C> {
    fn default() -> Self {
        Self::zero()
    }
}

/// `c0 + c1*q + c2*q^2`, zero terms omitted, unit coefficients dropped on
/// positive powers; the zero polynomial prints as `0`.
impl<C: Coeff> fmt::Display for QPolynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (k, c.is_one()) {
                (0, _) => write!(f, "{c}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{c}*q")?,
                (_, true) => write!(f, "q^{k}")?,
                (_, false) => write!(f, "{c}*q^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl<C: Coeff> FromStr for QPolynomial<C> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |t: &str| Error::Domain(format!("cannot parse polynomial term {t:?}"));
        let mut out = Self::zero();
        if s.trim() == "0" {
            return Ok(out);
        }
        for term in s.split('+').map(str::trim) {
            let (coeff, power) = match term.split_once('q') {
                None => (term, None),
                Some((c, p)) => (c.strip_suffix('*').unwrap_or(c), Some(p)),
            };
            let c = if coeff.is_empty() {
                if power.is_none() {
                    return Err(bad(term));
                }
                C::one()
            } else {
                C::from_str_radix(coeff, 10).map_err(|_| bad(term))?
            };
            let degree = match power {
                None => 0,
                Some("") => 1,
                Some(p) => p
                    .strip_prefix('^')
                    .and_then(|p| p.parse::<usize>().ok())
                    .ok_or_else(|| bad(term))?,
            };
            out.add_term(degree, c)?;
        }
        Ok(Self::from_coeffs(out.coeffs))
    }
}
