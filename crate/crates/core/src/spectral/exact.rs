//! Recognition of rational and quadratic eigenvalues, verified exactly against `p_{d+1}`.

use alloc::vec;
use alloc::vec::Vec;
use num_traits::{Signed, Zero};

use crate::poly::Poly;
use crate::rational::{self, Rational};

/// An eigenvalue known in closed form.
#[derive(Debug, Clone, PartialEq)]
pub enum ExactEigenvalue {
    Rational(Rational),
    /// One root of `x^2 - trace x + norm`; the other root is eigenvalue `partner`.
    Quadratic { trace: Rational, norm: Rational, partner: usize },
}

impl ExactEigenvalue {
    /// The defining factor: `x - r` or `x^2 - trace x + norm`.
    pub fn factor(&self) -> Poly<Rational> {
        match self {
            ExactEigenvalue::Rational(r) => Poly::linear(r.clone()),
            ExactEigenvalue::Quadratic { trace, norm, .. } => {
                Poly::new(vec![norm.clone(), -trace.clone(), rational::int(1)])
            }
        }
    }
}

const MAX_DENOMINATOR: i64 = 1_000_000;

/// Recognizes each `theta[i]` as a rational root, or pairs two of them as conjugate quadratic roots.
pub(crate) fn recognize(characteristic: &Poly<Rational>, theta: &[f64]) -> Vec<Option<ExactEigenvalue>> {
    let mut out: Vec<Option<ExactEigenvalue>> = vec![None; theta.len()];
    for (i, &t) in theta.iter().enumerate() {
        let tol = 1e-9 * t.abs().max(1.0);
        if let Some(r) = rational::approximate(t, MAX_DENOMINATOR, tol) {
            if characteristic.eval(&r).is_zero() {
                out[i] = Some(ExactEigenvalue::Rational(r));
            }
        }
    }
    for i in 0..theta.len() {
        if out[i].is_some() {
            continue;
        }
        for j in i + 1..theta.len() {
            if out[j].is_some() {
                continue;
            }
            let s = theta[i] + theta[j];
            let p = theta[i] * theta[j];
            let Some(trace) = rational::approximate(s, MAX_DENOMINATOR, 1e-8 * s.abs().max(1.0)) else {
                continue;
            };
            let Some(norm) = rational::approximate(p, MAX_DENOMINATOR, 1e-8 * p.abs().max(1.0)) else {
                continue;
            };
            let disc = &trace * &trace - rational::int(4) * &norm;
            if !disc.is_positive() {
                continue;
            }
            let factor = Poly::new(vec![norm.clone(), -trace.clone(), rational::int(1)]);
            let (_, rem) = characteristic.div_rem(&factor);
            if rem.is_zero() {
                out[i] = Some(ExactEigenvalue::Quadratic { trace: trace.clone(), norm: norm.clone(), partner: j });
                out[j] = Some(ExactEigenvalue::Quadratic { trace, norm, partner: i });
                break;
            }
        }
    }
    out
}
