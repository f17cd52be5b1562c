//! Exact rational and complex-rational scalars.
//!
//! Every coefficient in this crate is an exact rational; nothing in the
//! algebraic layer ever rounds. Decimal strings such as `"0.0005"` parse
//! exactly as fractions (here 1/2000).

use num_bigint::{BigInt, Sign};
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always reduced, denominator > 0.
pub type Rat = BigRational;

/// Complex number with exact rational real and imaginary parts.
pub type CRat = Complex<Rat>;

pub fn rat_i64(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn crat(re: Rat, im: Rat) -> CRat {
    Complex::new(re, im)
}

pub fn crat_i64(re: i64, im: i64) -> CRat {
    Complex::new(rat_i64(re), rat_i64(im))
}

/// The imaginary unit.
pub fn imag_unit() -> CRat {
    Complex::new(Rat::zero(), Rat::one())
}

/// Parse a decimal or rational literal exactly.
///
/// Accepts optional sign, decimal point and scientific exponent
/// (`"-1.25e-3"`), or an explicit fraction `"p/q"`.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::BadDecimal(s.into()));
    }
    if let Some((num, den)) = s.split_once('/') {
        let n = parse_decimal(num)?;
        let d = parse_decimal(den)?;
        if d.is_zero() {
            return Err(Error::BadDecimal(s.into()));
        }
        return Ok(n / d);
    }
    parse_decimal(s)
}

fn parse_decimal(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = || Error::BadDecimal(s.into());
    let (mantissa, exp10) = match s.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<i64>().map_err(|_| bad())?),
        None => (s, 0),
    };
    let (sign, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = match digits.split_once('.') {
        Some((i, f)) => (i, f),
        None => (digits, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    if !int_part.bytes().all(|b| b.is_ascii_digit()) || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let mut num: BigInt = if int_part.is_empty() {
        BigInt::zero()
    } else {
        int_part.parse().map_err(|_| bad())?
    };
    for b in frac_part.bytes() {
        num = num * 10 + (b - b'0');
    }
    if sign < 0 {
        num = -num;
    }
    let shift = exp10 - frac_part.len() as i64;
    let ten = BigInt::from(10);
    let rat = if shift >= 0 {
        Rat::from_integer(num * ten.pow(shift as u32))
    } else {
        Rat::new(num, ten.pow((-shift) as u32))
    };
    Ok(rat)
}

/// Render exactly: finite decimal when the denominator is of the form
/// 2^a * 5^b, otherwise `"p/q"`. Re-parsing recovers the value bit-exactly.
pub fn format_rat(r: &Rat) -> String {
    if r.is_integer() {
        return r.numer().to_string();
    }
    let den = r.denom();
    let (two, five) = (BigInt::from(2), BigInt::from(5));
    let mut d = den.clone();
    let mut a = 0u32;
    let mut b = 0u32;
    while (&d % &two).is_zero() {
        d /= &two;
        a += 1;
    }
    while (&d % &five).is_zero() {
        d /= &five;
        b += 1;
    }
    if !d.is_one() {
        return format!("{}/{}", r.numer(), r.denom());
    }
    // scale to 10^k with k = max(a, b)
    let k = a.max(b);
    let scale = two.pow(k - a) * five.pow(k - b);
    let scaled = r.numer() * scale;
    let neg = scaled.sign() == Sign::Minus;
    let digits = scaled.magnitude().to_string();
    let k = k as usize;
    let (int_digits, frac_digits) = if digits.len() > k {
        (digits[..digits.len() - k].to_string(), digits[digits.len() - k..].to_string())
    } else {
        ("0".to_string(), format!("{:0>width$}", digits, width = k))
    };
    format!("{}{}.{}", if neg { "-" } else { "" }, int_digits, frac_digits)
}

/// Lossy conversion for reporting; safe for values far outside f64 range.
pub fn rat_to_f64(r: &Rat) -> f64 {
    if let Some(v) = r.to_f64() {
        if v.is_finite() {
            return v;
        }
    }
    // scale both parts down so the larger fits comfortably
    let nb = r.numer().bits() as i64;
    let db = r.denom().bits() as i64;
    let shift = (nb.max(db) - 900).max(0) as u64;
    let n = (r.numer() >> shift).to_f64().unwrap_or(f64::NAN);
    let d = (r.denom() >> shift).to_f64().unwrap_or(f64::NAN);
    n / d
}

/// Exact conversion of an f64 (finite) into a rational.
pub fn rat_from_f64(x: f64) -> Option<Rat> {
    Rat::from_float(x)
}

pub fn sign_of(r: &Rat) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}
