//! Scalar fields the tensor pipeline runs over.
//!
//! Everything in this crate is generic over [`Scalar`]. The default field is
//! [`Rational`], an arbitrary-precision exact rational; every predicate is then
//! an exact zero test. [`Approx`] is a binary64 stand-in used only for dense
//! parameter scans, where zero tests go through an explicit tolerance.

use alloc::string::{String, ToString};
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

/// Exact rational in canonical form (positive denominator, reduced).
pub type Rational = num_rational::BigRational;

/// Field operations the geometry needs.
///
/// Division by zero is a logic error; callers gate divisors with
/// [`Scalar::is_zero`] first.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn to_f64(&self) -> f64;

    fn is_nonzero(&self) -> bool {
        !self.is_zero()
    }
}

impl Scalar for Rational {
    fn zero() -> Self {
        Zero::zero()
    }

    fn one() -> Self {
        num_traits::One::one()
    }

    fn from_i64(n: i64) -> Self {
        Rational::from_integer(BigInt::from(n))
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

/// Shorthand for an exact `p/q`. Panics when `q == 0`.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Shorthand for an exact integer.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// A binary64 value carrying the tolerance used by its zero test.
///
/// Arithmetic propagates the larger of the two operand tolerances, so a
/// quantity derived from scan parameters inherits the scan tolerance while
/// literal constants (tolerance 0) stay neutral.
#[derive(Clone, Copy, Debug)]
pub struct Approx {
    pub value: f64,
    pub tol: f64,
}

impl Approx {
    pub const DEFAULT_TOL: f64 = 1e-9;

    pub fn new(value: f64, tol: f64) -> Self {
        Self { value, tol }
    }

    fn join(self, rhs: Self, value: f64) -> Self {
        Self { value, tol: self.tol.max(rhs.tol) }
    }
}

impl PartialEq for Approx {
    fn eq(&self, other: &Self) -> bool {
        libm_abs(self.value - other.value) <= self.tol.max(other.tol)
    }
}

impl fmt::Display for Approx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.value, f)
    }
}

fn libm_abs(x: f64) -> f64 {
    if x < 0.0 {
        -x
    } else {
        x
    }
}

impl Add for Approx {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.join(rhs, self.value + rhs.value)
    }
}

impl Sub for Approx {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.join(rhs, self.value - rhs.value)
    }
}

impl Mul for Approx {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.join(rhs, self.value * rhs.value)
    }
}

impl Div for Approx {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        self.join(rhs, self.value / rhs.value)
    }
}

impl Neg for Approx {
    type Output = Self;
    fn neg(self) -> Self {
        Self { value: -self.value, tol: self.tol }
    }
}

impl Scalar for Approx {
    fn zero() -> Self {
        Self::new(0.0, 0.0)
    }

    fn one() -> Self {
        Self::new(1.0, 0.0)
    }

    fn from_i64(n: i64) -> Self {
        Self::new(n as f64, 0.0)
    }

    fn is_zero(&self) -> bool {
        libm_abs(self.value) <= self.tol
    }

    fn to_f64(&self) -> f64 {
        self.value
    }
}

/// Error from [`parse_rational`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiteralError {
    pub literal: String,
    pub reason: &'static str,
}

impl fmt::Display for LiteralError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid rational literal {:?}: {}", self.literal, self.reason)
    }
}

impl core::error::Error for LiteralError {}

/// Parses a rational literal: a decimal integer (`"3"`, `"-7"`) or `"p/q"`
/// with `q > 0` (`"2/5"`, `"-1/3"`). The result is canonical.
pub fn parse_rational(literal: &str) -> Result<Rational, LiteralError> {
    let err = |reason| LiteralError { literal: literal.to_string(), reason };
    let parse_int = |s: &str, signed: bool| -> Result<BigInt, LiteralError> {
        let digits = if signed { s.strip_prefix('-').unwrap_or(s) } else { s };
        if digits.is_empty() || !digits.bytes().all(|c| c.is_ascii_digit()) {
            return Err(err("expected decimal digits"));
        }
        BigInt::from_str(s).map_err(|_| err("expected decimal digits"))
    };
    match literal.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(literal, true)?)),
        Some((p, q)) => {
            let numer = parse_int(p, true)?;
            let denom = parse_int(q, false)?;
            if denom.is_zero() {
                return Err(err("zero denominator"));
            }
            Ok(Rational::new(numer, denom))
        }
    }
}

/// Formats a rational as `"p"` or `"p/q"` (canonical, `q > 0`).
pub fn format_rational(value: &Rational) -> String {
    value.to_string()
}

/// Decimal rendering of a rational, exact when the expansion terminates
/// within `max_digits` fractional digits, otherwise rounded toward zero.
pub fn decimal_string(value: &Rational, max_digits: usize) -> String {
    let negative = value.is_negative();
    let abs = value.abs();
    let whole = abs.to_integer();
    let mut rem = abs.numer() - &whole * abs.denom();
    let denom = abs.denom().clone();
    let mut fraction = String::new();
    let ten = BigInt::from(10);
    for _ in 0..max_digits {
        if rem.is_zero() {
            break;
        }
        rem *= &ten;
        let digit = &rem / &denom;
        rem -= &digit * &denom;
        fraction.push_str(&digit.to_string());
    }
    let fraction = fraction.trim_end_matches('0');
    let mut out = String::new();
    if negative && !(whole.is_zero() && fraction.is_empty()) {
        out.push('-');
    }
    out.push_str(&whole.to_string());
    if !fraction.is_empty() {
        out.push('.');
        out.push_str(fraction);
    }
    out
}
