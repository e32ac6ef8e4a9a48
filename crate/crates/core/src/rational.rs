//! Thin helpers around `BigRational`.

use alloc::string::{String, ToString};
use num_bigint::BigInt;
use num_rational::BigRational;
#[allow(unused_imports)]
use num_traits::Float;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::Error;

pub type Rational = BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn frac(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Parses `7`, `-3`, `+2` or `p/q`.
pub fn parse(text: &str) -> Result<Rational, Error> {
    let t = text.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (t, None),
    };
    let parse_int = |s: &str| -> Result<BigInt, Error> {
        let s = s.strip_prefix('+').unwrap_or(s);
        let digits = s.strip_prefix('-').unwrap_or(s);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::parse(text, "expected an integer or p/q rational"));
        }
        s.parse::<BigInt>().map_err(|_| Error::parse(text, "integer out of range"))
    };
    let n = parse_int(num)?;
    let d = match den {
        Some(d) => parse_int(d)?,
        None => BigInt::one(),
    };
    if d.is_zero() {
        return Err(Error::parse(text, "zero denominator"));
    }
    Ok(Rational::new(n, d))
}

/// Compact rendering: integers without a denominator.
pub fn show(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        alloc::format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn is_integral(r: &Rational) -> bool {
    r.is_integer()
}

/// Best rational approximation with denominator at most `max_den`, via continued fractions.
/// Returns `None` unless the approximation is within `tol` of `x`.
pub fn approximate(x: f64, max_den: i64, tol: f64) -> Option<Rational> {
    if !x.is_finite() || x.abs() > 1e15 {
        return None;
    }
    let (mut h0, mut h1) = (0i128, 1i128);
    let (mut k0, mut k1) = (1i128, 0i128);
    let mut rem = x;
    for _ in 0..64 {
        let a = rem.floor();
        let ai = a as i128;
        let h2 = ai * h1 + h0;
        let k2 = ai * k1 + k0;
        if k2 > max_den as i128 {
            break;
        }
        h0 = h1;
        h1 = h2;
        k0 = k1;
        k1 = k2;
        let approx = h1 as f64 / k1 as f64;
        if (approx - x).abs() <= tol {
            return Some(Rational::new(BigInt::from(h1), BigInt::from(k1)));
        }
        let frac_part = rem - a;
        if frac_part.abs() < 1e-300 {
            break;
        }
        rem = 1.0 / frac_part;
    }
    None
}

/// Sign of a rational as -1, 0 or 1.
pub fn signum(r: &Rational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_integers_and_fractions() {
        assert_eq!(parse("12").unwrap(), int(12));
        assert_eq!(parse(" -3 ").unwrap(), int(-3));
        assert_eq!(parse("6/4").unwrap(), frac(3, 2));
        assert!(parse("1/0").is_err());
        assert!(parse("x").is_err());
        assert!(parse("1.5").is_err());
    }

    #[test]
    fn approximates_simple_fractions() {
        assert_eq!(approximate(0.5, 100, 1e-12), Some(frac(1, 2)));
        assert_eq!(approximate(-7.0, 100, 1e-12), Some(int(-7)));
        assert_eq!(approximate(1.0 / 3.0, 100, 1e-12), Some(frac(1, 3)));
        assert_eq!(approximate(core::f64::consts::SQRT_2, 1000, 1e-12), None);
    }
}
