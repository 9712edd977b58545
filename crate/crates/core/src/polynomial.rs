//! Dense univariate polynomials with arbitrary-precision integer coefficients.
//!
//! Every generating function in the crate (neighborhood polynomials,
//! periphery polynomials, domination polynomials) lives in this type.
//! Coefficients are stored in ascending degree order and kept canonical:
//! there is never a trailing zero, and the zero polynomial has no
//! coefficients at all.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<BigInt>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    /// `x^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        Self { coeffs }
    }

    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = Self { coeffs };
        p.trim();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `(1+x)^k`, built from the multiplicative recurrence
    /// `C(k, i+1) = C(k, i) * (k - i) / (i + 1)`.
    pub fn binomial_power(k: usize) -> Self {
        let mut coeffs = Vec::with_capacity(k + 1);
        let mut c = BigInt::one();
        coeffs.push(c.clone());
        for i in 0..k {
            c = c * BigInt::from(k - i) / BigInt::from(i + 1);
            coeffs.push(c.clone());
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `x^k` (zero past the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Horner evaluation.
    pub fn evaluate(&self, t: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * t + c)
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// Multiplies by `(1+x)^k` in place using `k` shift-and-add passes.
    ///
    /// Cheaper than a full product when `k` is small relative to the degree.
    pub fn mul_binomial_power(&mut self, k: usize) {
        if self.is_zero() {
            return;
        }
        for _ in 0..k {
            self.coeffs.push(BigInt::zero());
            for i in (1..self.coeffs.len()).rev() {
                let (lo, hi) = self.coeffs.split_at_mut(i);
                hi[0] += &lo[i - 1];
            }
        }
    }

    /// Adds `x^k * other` into `self`.
    pub fn add_shifted(&mut self, other: &Polynomial, k: usize) {
        if other.is_zero() {
            return;
        }
        let needed = other.coeffs.len() + k;
        if self.coeffs.len() < needed {
            self.coeffs.resize(needed, BigInt::zero());
        }
        for (slot, c) in self.coeffs[k..].iter_mut().zip(&other.coeffs) {
            *slot += c;
        }
        self.trim();
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }
}

impl From<Vec<BigInt>> for Polynomial {
    fn from(coeffs: Vec<BigInt>) -> Self {
        Self::from_coeffs(coeffs)
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        self.add_shifted(rhs, 0);
    }
}

impl SubAssign<&Polynomial> for Polynomial {
    fn sub_assign(&mut self, rhs: &Polynomial) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (slot, c) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *slot -= c;
        }
        self.trim();
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Polynomial {
    type Output = Polynomial;

    fn add(mut self, rhs: Polynomial) -> Polynomial {
        self += &rhs;
        self
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;

    fn sub(mut self, rhs: Polynomial) -> Polynomial {
        self -= &rhs;
        self
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::from_coeffs(coeffs)
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

/// Renders `c0 + c1*x + c2*x^2 + ...`, ascending, zero terms omitted.
/// Negative coefficients are written with a minus sign in place of the plus.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            match (first, c.is_negative()) {
                (true, false) => write!(f, "{magnitude}")?,
                (true, true) => write!(f, "-{magnitude}")?,
                (false, false) => write!(f, " + {magnitude}")?,
                (false, true) => write!(f, " - {magnitude}")?,
            }
            match k {
                0 => {}
                1 => f.write_str("*x")?,
                _ => write!(f, "*x^{k}")?,
            }
            first = false;
        }
        Ok(())
    }
}
