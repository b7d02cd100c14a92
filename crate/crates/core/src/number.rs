//! Scalar types accepted by the decision procedures.
//!
//! Decisions are written once, generically, and run either on `f64` (fast,
//! used by the Monte Carlo engine) or on [`BigRational`] (exact, used when
//! a witness has to be checked to the last bit).

use std::fmt::{Debug, Display};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, One, Pow, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// `(sqrt(5) - 1) / 2`, the positive root of `w^2 + w = 1`.
pub const OMEGA: f64 = 0.618_033_988_749_894_9;

/// A probability-valued scalar.
pub trait Prob: Num + Clone + PartialOrd + Debug + Display + Send + Sync {
    fn half() -> Self {
        Self::one() / (Self::one() + Self::one())
    }

    /// `self <= OMEGA`, decided exactly for exact types.
    fn at_most_golden(&self) -> bool;

    fn as_f64(&self) -> f64;

    /// Parse a decimal (`0.625`, `1e-3`) or a ratio (`5/8`).
    fn parse_prob(s: &str) -> Result<Self>;
}

impl Prob for f64 {
    fn half() -> Self {
        0.5
    }

    fn at_most_golden(&self) -> bool {
        *self <= OMEGA
    }

    fn as_f64(&self) -> f64 {
        *self
    }

    fn parse_prob(s: &str) -> Result<Self> {
        let s = s.trim();
        match s.split_once('/') {
            Some((num, den)) => {
                let num: f64 = num.trim().parse().map_err(|_| Error::Parse(s.into()))?;
                let den: f64 = den.trim().parse().map_err(|_| Error::Parse(s.into()))?;
                if den == 0.0 {
                    return Err(Error::Parse(s.into()));
                }
                Ok(num / den)
            }
            None => s.parse().map_err(|_| Error::Parse(s.into())),
        }
    }
}

impl Prob for BigRational {
    fn at_most_golden(&self) -> bool {
        // For x >= 0, x <= w iff x + x^2 <= 1.
        self.is_negative() || self + self * self <= BigRational::one()
    }

    fn as_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn parse_prob(s: &str) -> Result<Self> {
        parse_rational(s)
    }
}

/// Parse `p/q`, an integer, or a decimal literal with optional exponent into
/// an exact rational. Decimals are read in base ten, so `0.1` is exactly 1/10.
pub fn parse_rational(input: &str) -> Result<BigRational> {
    let s = input.trim();
    let bad = || Error::Parse(input.to_string());
    if s.is_empty() {
        return Err(bad());
    }
    if let Some((num, den)) = s.split_once('/') {
        let num = BigInt::from_str(num.trim()).map_err(|_| bad())?;
        let den = BigInt::from_str(den.trim()).map_err(|_| bad())?;
        if den.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(num, den));
    }

    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(pos) => {
            let exp: i32 = s[pos + 1..].parse().map_err(|_| bad())?;
            (&s[..pos], exp)
        }
        None => (s, 0),
    };
    let (negative, digits) = match mantissa.as_bytes().first() {
        Some(b'-') => (true, &mantissa[1..]),
        Some(b'+') => (false, &mantissa[1..]),
        _ => (false, mantissa),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    if !int_part
        .bytes()
        .chain(frac_part.bytes())
        .all(|b| b.is_ascii_digit())
    {
        return Err(bad());
    }
    let all_digits = format!("{int_part}{frac_part}");
    let mut value = BigRational::from_integer(BigInt::from_str(&all_digits).map_err(|_| bad())?);
    let scale = exponent - frac_part.len() as i32;
    let ten = BigRational::from_integer(BigInt::from(10));
    if scale >= 0 {
        value *= Pow::pow(&ten, scale as u32);
    } else {
        value /= Pow::pow(&ten, (-scale) as u32);
    }
    Ok(if negative { -value } else { value })
}

/// The exact rational value of a finite `f64`.
pub fn rational_from_f64(x: f64) -> Option<BigRational> {
    BigRational::from_float(x)
}

/// Canonical text for a rational: `p/q`, or just `p` for integers.
pub fn format_rational(r: &BigRational) -> String {
    r.to_string()
}
