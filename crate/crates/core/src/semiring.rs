//! Exact max-plus scalars.
//!
//! The tropical semiring is `ℝ ∪ {−∞}` with `⊕ = max` and `⊙ = +`. Finite
//! values are arbitrary-precision rationals so every tie test is decidable.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use thiserror::Error;

/// Exact rational number, always in reduced form with a positive denominator.
pub type Rational = BigRational;

/// Shorthand for an integer-valued [`Rational`].
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `num / den`. Panics on a zero denominator.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// An element of the max-plus semiring: `−∞` or a finite rational.
///
/// The derived ordering places `Bottom` below every finite value, which is
/// exactly the order used by `⊕`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TropScalar {
    Bottom,
    Finite(Rational),
}

impl TropScalar {
    pub fn bottom() -> Self {
        TropScalar::Bottom
    }

    /// The multiplicative unit, the number `0`.
    pub fn unit() -> Self {
        TropScalar::Finite(Rational::zero())
    }

    pub fn int(n: i64) -> Self {
        TropScalar::Finite(rat(n))
    }

    pub fn is_bottom(&self) -> bool {
        matches!(self, TropScalar::Bottom)
    }

    pub fn as_finite(&self) -> Option<&Rational> {
        match self {
            TropScalar::Bottom => None,
            TropScalar::Finite(r) => Some(r),
        }
    }

    /// Tropical addition, `max(self, other)`.
    pub fn oplus(&self, other: &TropScalar) -> TropScalar {
        if self >= other {
            self.clone()
        } else {
            other.clone()
        }
    }

    /// Tropical multiplication, ordinary `+` with `−∞` absorbing.
    pub fn odot(&self, other: &TropScalar) -> TropScalar {
        match (self, other) {
            (TropScalar::Finite(a), TropScalar::Finite(b)) => TropScalar::Finite(a + b),
            _ => TropScalar::Bottom,
        }
    }

    /// Tropical power `self^⊙n`, i.e. `n · self`.
    pub fn pow(&self, n: u32) -> TropScalar {
        match self {
            TropScalar::Finite(a) => TropScalar::Finite(a * rat(i64::from(n))),
            TropScalar::Bottom if n == 0 => TropScalar::unit(),
            TropScalar::Bottom => TropScalar::Bottom,
        }
    }

    /// `a⁺ = a ⊕ 0`. Always finite and non-negative.
    pub fn nonneg_part(&self) -> TropScalar {
        TropScalar::Finite(self.nonneg_value())
    }

    /// Same as [`TropScalar::nonneg_part`] but unwrapped.
    pub fn nonneg_value(&self) -> Rational {
        match self {
            TropScalar::Finite(a) if a.is_positive() => a.clone(),
            _ => Rational::zero(),
        }
    }
}

impl From<Rational> for TropScalar {
    fn from(r: Rational) -> Self {
        TropScalar::Finite(r)
    }
}

impl From<i64> for TropScalar {
    fn from(n: i64) -> Self {
        TropScalar::int(n)
    }
}

pub fn t_add(a: &TropScalar, b: &TropScalar) -> TropScalar {
    a.oplus(b)
}

pub fn t_mul(a: &TropScalar, b: &TropScalar) -> TropScalar {
    a.odot(b)
}

pub fn t_pow(a: &TropScalar, n: u32) -> TropScalar {
    a.pow(n)
}

pub fn nonneg_part(a: &TropScalar) -> TropScalar {
    a.nonneg_part()
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarParseError {
    #[error("empty scalar")]
    Empty,
    #[error("invalid scalar `{0}`")]
    Invalid(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
}

fn all_digits(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit())
}

/// Parses `[+-]digits` or `[+-]digits/digits` with a nonzero denominator.
pub fn parse_rational(text: &str) -> Result<Rational, ScalarParseError> {
    let s = text.trim();
    if s.is_empty() {
        return Err(ScalarParseError::Empty);
    }
    let (negative, body) = match s.as_bytes()[0] {
        b'-' => (true, &s[1..]),
        b'+' => (false, &s[1..]),
        _ => (false, s),
    };
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (body, None),
    };
    if !all_digits(num) || den.is_some_and(|d| !all_digits(d)) {
        return Err(ScalarParseError::Invalid(s.to_string()));
    }
    let invalid = |_| ScalarParseError::Invalid(s.to_string());
    let mut numer: BigInt = num.parse().map_err(invalid)?;
    if negative {
        numer = -numer;
    }
    let denom: BigInt = match den {
        Some(d) => d.parse().map_err(invalid)?,
        None => BigInt::from(1),
    };
    if denom.is_zero() {
        return Err(ScalarParseError::ZeroDenominator(s.to_string()));
    }
    Ok(Rational::new(numer, denom))
}

impl FromStr for TropScalar {
    type Err = ScalarParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.trim() == "-inf" {
            Ok(TropScalar::Bottom)
        } else {
            parse_rational(s).map(TropScalar::Finite)
        }
    }
}

impl fmt::Display for TropScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TropScalar::Bottom => f.write_str("-inf"),
            TropScalar::Finite(r) => write!(f, "{r}"),
        }
    }
}
