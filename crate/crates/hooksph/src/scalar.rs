//! Exact scalars: arbitrary-precision rationals and polynomials in the
//! coupling parameter kappa with rational coefficients.

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::Error;

/// Exact rational scalar used throughout the crate.
pub type Rational = num_rational::BigRational;

/// Shorthand for the rational n/d. Panics when d == 0; use
/// [`parse_rational`] for untrusted input.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// The integer n as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses "a/b" or "a" with arbitrary-precision integers. A zero denominator
/// is reported as an error, never a panic.
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    Rational::from_str(s.trim()).map_err(|e| Error::Parse(e.to_string()))
}

/// Minimal commutative ring interface shared by [`Rational`] and
/// [`KappaPoly`], so symmetric function kernels can run over either.
pub trait Ring: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }
    fn is_zero(&self) -> bool {
        *self == Self::zero()
    }
    fn from_int(n: i64) -> Self;
}

impl Ring for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn from_int(n: i64) -> Self {
        int(n)
    }
}

/// Polynomial in kappa with rational coefficients, stored densely in
/// ascending degree with trailing zeros trimmed. The empty coefficient
/// vector is the canonical zero.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct KappaPoly {
    coeffs: Vec<Rational>,
}

impl KappaPoly {
    pub fn zero() -> Self {
        KappaPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        KappaPoly::constant(<Rational as Ring>::one())
    }

    /// The monomial kappa itself.
    pub fn kappa() -> Self {
        KappaPoly::from_coeffs(vec![<Rational as Ring>::zero(), <Rational as Ring>::one()])
    }

    pub fn constant(c: Rational) -> Self {
        KappaPoly::from_coeffs(vec![c])
    }

    /// c0 + c1 * kappa.
    pub fn linear(c0: Rational, c1: Rational) -> Self {
        KappaPoly::from_coeffs(vec![c0, c1])
    }

    /// Builds from ascending coefficients, trimming trailing zeros so equal
    /// polynomials compare equal structurally.
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().map_or(false, |c| Zero::is_zero(c)) {
            coeffs.pop();
        }
        KappaPoly { coeffs }
    }

    /// Ascending coefficients with trailing zeros trimmed; empty means zero.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of kappa^i, zero beyond the stored length.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(|| Zero::zero())
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + rhs.coeff(i));
        }
        KappaPoly::from_coeffs(out)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        KappaPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return KappaPoly::zero();
        }
        let mut out = vec![<Rational as Ring>::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if Zero::is_zero(a) {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        KappaPoly::from_coeffs(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        KappaPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut out = KappaPoly::one();
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Exact evaluation at a rational kappa, by Horner's rule.
    pub fn eval(&self, kappa: &Rational) -> Rational {
        let mut acc: Rational = Zero::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * kappa + c;
        }
        acc
    }
}

impl From<Rational> for KappaPoly {
    fn from(c: Rational) -> Self {
        KappaPoly::constant(c)
    }
}

impl Ring for KappaPoly {
    fn zero() -> Self {
        KappaPoly::zero()
    }
    fn one() -> Self {
        KappaPoly::one()
    }
    fn add(&self, rhs: &Self) -> Self {
        KappaPoly::add(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        KappaPoly::mul(self, rhs)
    }
    fn neg(&self) -> Self {
        KappaPoly::neg(self)
    }
    fn sub(&self, rhs: &Self) -> Self {
        KappaPoly::sub(self, rhs)
    }
    fn is_zero(&self) -> bool {
        KappaPoly::is_zero(self)
    }
    fn from_int(n: i64) -> Self {
        KappaPoly::constant(int(n))
    }
}

impl fmt::Debug for KappaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "KappaPoly({})", self)
    }
}

// Human-readable form like "1 - 2*k + 5/6*k^2"; the JSON interface carries
// the coefficient strings instead.
impl fmt::Display for KappaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if Zero::is_zero(c) {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit = One::is_one(&mag);
            match (i, unit) {
                (0, _) => write!(f, "{}", mag)?,
                (1, true) => write!(f, "k")?,
                (1, false) => write!(f, "{}*k", mag)?,
                (_, true) => write!(f, "k^{}", i)?,
                (_, false) => write!(f, "{}*k^{}", mag, i)?,
            }
        }
        Ok(())
    }
}
