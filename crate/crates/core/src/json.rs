//! Fixed-precision JSON numbers.
//!
//! Floats are written with 17 significant digits, which round-trips every
//! `f64` and keeps textual output stable across runs and platforms.

use serde::{Serialize, Serializer};
use serde_json::value::RawValue;

/// `x` with 17 significant digits, positional where that stays short.
pub fn sig17(x: f64) -> String {
    if !x.is_finite() {
        return "null".into();
    }
    if x == 0.0 {
        return "0.0".into();
    }
    let exp = x.abs().log10().floor() as i32;
    if (-5..=16).contains(&exp) {
        let decimals = (16 - exp).max(1) as usize;
        let s = format!("{x:.decimals$}");
        // log10 can be off by one near powers of ten; the digit count then
        // differs by one, which is harmless.
        s
    } else {
        format!("{x:.16e}")
    }
}

/// `serialize_with` adapter emitting [`sig17`] as a raw JSON number.
pub fn serialize_f64<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
    let raw = RawValue::from_string(sig17(*x)).map_err(serde::ser::Error::custom)?;
    raw.serialize(s)
}
