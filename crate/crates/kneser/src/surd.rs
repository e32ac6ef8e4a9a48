//! Display hints of the form `p/q` or `(p ± sqrt(r))/q`.
//!
//! These are guesses for readability only. Values the core verified exactly are shown
//! from the core's closed form instead.

use kneser_core::rational;

const MAX_DEN: i64 = 12;
const MAX_RADICAND: i64 = 200;
const MAX_NUM: i64 = 200;
const HINT_TOL: f64 = 1e-9;

fn is_square(r: i64) -> bool {
    let s = (r as f64).sqrt().round() as i64;
    s * s == r
}

/// Smallest-denominator form within `1e-9` of `x`, if any.
pub fn hint(x: f64) -> Option<String> {
    if !x.is_finite() {
        return None;
    }
    if let Some(r) = rational::approximate(x, MAX_DEN, HINT_TOL) {
        return Some(rational::show(&r));
    }
    for q in 1..=MAX_DEN {
        for r in 2..=MAX_RADICAND {
            if is_square(r) {
                continue;
            }
            let root = (r as f64).sqrt();
            for sign in [1.0, -1.0] {
                let p = (x * q as f64 - sign * root).round();
                if p.abs() > MAX_NUM as f64 {
                    continue;
                }
                let value = (p + sign * root) / q as f64;
                if (value - x).abs() <= HINT_TOL * x.abs().max(1.0) {
                    return Some(format_surd(p as i64, sign < 0.0, r, q));
                }
            }
        }
    }
    None
}

fn format_surd(p: i64, minus: bool, r: i64, q: i64) -> String {
    let op = if minus { '-' } else { '+' };
    let body = match (p, minus) {
        (0, false) => format!("sqrt({r})"),
        (0, true) => format!("-sqrt({r})"),
        _ => format!("{p}{op}sqrt({r})"),
    };
    if q == 1 {
        body
    } else if p == 0 && !minus {
        format!("sqrt({r})/{q}")
    } else {
        format!("({body})/{q}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_and_surds() {
        assert_eq!(hint(0.5).as_deref(), Some("1/2"));
        assert_eq!(hint(-3.0).as_deref(), Some("-3"));
        assert_eq!(hint(1.0 + 3f64.sqrt()).as_deref(), Some("1+sqrt(3)"));
        assert_eq!(hint((1.0 - 5f64.sqrt()) / 2.0).as_deref(), Some("(1-sqrt(5))/2"));
        assert_eq!(hint(-(6f64.sqrt())).as_deref(), Some("-sqrt(6)"));
        assert_eq!(hint(std::f64::consts::PI), None);
    }
}
