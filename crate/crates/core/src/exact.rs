//! Exact integer and rational helpers.
//!
//! Every quantity in this crate is an `i128` or a [`Rational`] over `i128`.
//! Arithmetic that could leave that width goes through the checked helpers
//! here and surfaces [`Error::Overflow`] instead of wrapping.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub type Rational = Ratio<i128>;

pub fn int(value: i128) -> Rational {
    Rational::from_integer(value)
}

pub fn frac(numer: i128, denom: i128) -> Rational {
    Rational::new(numer, denom)
}

pub fn add(a: &Rational, b: &Rational) -> Result<Rational> {
    a.checked_add(b).ok_or(Error::Overflow)
}

pub fn sub(a: &Rational, b: &Rational) -> Result<Rational> {
    a.checked_sub(b).ok_or(Error::Overflow)
}

pub fn mul(a: &Rational, b: &Rational) -> Result<Rational> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

pub fn div(a: &Rational, b: &Rational) -> Result<Rational> {
    if b.is_zero() {
        return Err(Error::Overflow);
    }
    a.checked_div(b).ok_or(Error::Overflow)
}

pub fn square(a: &Rational) -> Result<Rational> {
    mul(a, a)
}

pub fn imul(a: i128, b: i128) -> Result<i128> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

pub fn iadd(a: i128, b: i128) -> Result<i128> {
    a.checked_add(b).ok_or(Error::Overflow)
}

pub fn isub(a: i128, b: i128) -> Result<i128> {
    a.checked_sub(b).ok_or(Error::Overflow)
}

pub fn dot(a: &[i128; 3], b: &[i128; 3]) -> Result<i128> {
    let mut acc = 0i128;
    for i in 0..3 {
        acc = iadd(acc, imul(a[i], b[i])?)?;
    }
    Ok(acc)
}

pub fn cross(a: &[i128; 3], b: &[i128; 3]) -> Result<[i128; 3]> {
    Ok([
        isub(imul(a[1], b[2])?, imul(a[2], b[1])?)?,
        isub(imul(a[2], b[0])?, imul(a[0], b[2])?)?,
        isub(imul(a[0], b[1])?, imul(a[1], b[0])?)?,
    ])
}

pub fn widen(v: &[i64; 3]) -> [i128; 3] {
    [v[0] as i128, v[1] as i128, v[2] as i128]
}

pub fn floor_int(q: &Rational) -> i128 {
    q.numer().div_floor(q.denom())
}

pub fn ceil_int(q: &Rational) -> i128 {
    q.numer().div_ceil(q.denom())
}

/// Extended Euclid: returns `(g, x, y)` with `a*x + b*y = g = gcd(a, b) >= 0`.
pub fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1i128, 0i128);
    let (mut old_t, mut t) = (0i128, 1i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    if old_r < 0 {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

/// Bézout coefficients for three integers: `g = gcd(v) = coeffs . v`.
pub fn ext_gcd3(v: &[i128; 3]) -> Result<(i128, [i128; 3])> {
    let (g01, x, y) = ext_gcd(v[0], v[1]);
    let (g, u, w) = ext_gcd(g01, v[2]);
    let coeffs = [imul(x, u)?, imul(y, u)?, w];
    debug_assert_eq!(dot(&coeffs, v).ok(), Some(g));
    Ok((g, coeffs))
}

pub fn gcd3(v: &[i128; 3]) -> i128 {
    v[0].gcd(&v[1]).gcd(&v[2])
}

/// Parses `"p/q"`, an integer, or a decimal string such as `"7.1"` or
/// `"-0.25"` into an exact rational.
pub fn parse_rational(input: &str) -> Result<Rational> {
    let s = input.trim();
    let bad = || Error::ParseRational(input.to_string());
    if s.is_empty() {
        return Err(bad());
    }
    if let Some((p, q)) = s.split_once('/') {
        let p: i128 = p.trim().parse().map_err(|_| bad())?;
        let q: i128 = q.trim().parse().map_err(|_| bad())?;
        if q == 0 {
            return Err(bad());
        }
        return Ok(frac(p, q));
    }
    let (negative, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    let (whole, fraction) = body.split_once('.').unwrap_or((body, ""));
    if whole.is_empty() && fraction.is_empty() {
        return Err(bad());
    }
    if !whole.chars().chain(fraction.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let digits = format!("{whole}{fraction}");
    let numer: i128 = if digits.is_empty() {
        0
    } else {
        digits.parse().map_err(|_| bad())?
    };
    let scale = u32::try_from(fraction.len())
        .ok()
        .and_then(|e| 10i128.checked_pow(e))
        .ok_or_else(bad)?;
    let q = frac(numer, scale);
    Ok(if negative { -q } else { q })
}

/// Formats `q` with exactly `places` digits after the decimal point,
/// rounding half to even.
pub fn to_decimal_string(q: &Rational, places: u32) -> String {
    let scale = 10i128.pow(places);
    let scaled = *q * int(scale);
    let (numer, denom) = (scaled.numer(), scaled.denom());
    let (mut whole, rem) = numer.div_mod_floor(denom);
    let twice = rem * 2;
    if twice > *denom || (twice == *denom && whole.is_odd()) {
        whole += 1;
    }
    let negative = whole < 0;
    let abs = whole.abs();
    let int_part = abs / scale;
    let frac_part = abs % scale;
    let sign = if negative { "-" } else { "" };
    if places == 0 {
        format!("{sign}{int_part}")
    } else {
        format!(
            "{sign}{int_part}.{frac_part:0width$}",
            width = places as usize
        )
    }
}

pub fn to_f64(q: &Rational) -> f64 {
    q.numer().to_f64().unwrap_or(f64::NAN) / q.denom().to_f64().unwrap_or(f64::NAN)
}

pub fn is_nonnegative(q: &Rational) -> bool {
    !q.is_negative()
}

/// A rational that serializes as the exact string `"p/q"` (or `"p"` for
/// integers).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fraction(pub Rational);

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl FromStr for Fraction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_rational(s).map(Fraction)
    }
}

impl From<Rational> for Fraction {
    fn from(q: Rational) -> Self {
        Fraction(q)
    }
}

impl Serialize for Fraction {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Fraction {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
