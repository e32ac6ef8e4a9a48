//! Root isolation for three-term recurrences.
//!
//! With positive off-diagonal products the sequence `p_0, ..., p_{d+1}` is a Sturm sequence:
//! the number of sign changes at `x` equals the number of zeros of `p_{d+1}` above `x`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use num_complex::Complex64;
use num_traits::Zero;

use crate::poly::Poly;
use crate::Error;

/// `(x - a_i) p_i = b_{i-1} p_{i-1} + c_{i+1} p_{i+1}` for `0 <= i < len`.
#[derive(Debug, Clone)]
pub(crate) struct Recurrence {
    pub a: Vec<f64>,
    /// `b_0 .. b_{len-2}`.
    pub b: Vec<f64>,
    /// `c_1 .. c_len`.
    pub c: Vec<f64>,
}

/// A root with the width of its final bracketing interval.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Bracketed {
    pub value: f64,
    pub width: f64,
}

impl Recurrence {
    pub fn len(&self) -> usize {
        self.a.len()
    }

    /// Truncation to the first `len` rows: zeros of `p_len` (for any positive `c_len`).
    pub fn leading(&self, len: usize) -> Recurrence {
        let mut c = self.c[..len].to_vec();
        c[len - 1] = 1.0;
        Recurrence { a: self.a[..len].to_vec(), b: self.b[..len - 1].to_vec(), c }
    }

    pub fn is_sturm(&self) -> bool {
        self.b.iter().all(|v| *v > 0.0) && self.c.iter().all(|v| *v > 0.0)
    }

    /// Number of sign changes in `p_0(x), ..., p_len(x)`, exact zeros skipped.
    pub fn sign_changes(&self, x: f64) -> usize {
        let (mut prev, mut cur) = (0.0f64, 1.0f64);
        let mut last_positive = true;
        let mut count = 0;
        for i in 0..self.len() {
            let back = if i == 0 { 0.0 } else { self.b[i - 1] * prev };
            let mut next = ((x - self.a[i]) * cur - back) / self.c[i];
            if next != 0.0 {
                let positive = next > 0.0;
                if positive != last_positive {
                    count += 1;
                }
                last_positive = positive;
            }
            // rescaling both retained terms by a positive factor leaves every later sign unchanged
            let mag = next.abs().max(cur.abs());
            if mag > 1e100 || (mag < 1e-100 && mag > 0.0) {
                next /= mag;
                cur /= mag;
            }
            prev = cur;
            cur = next;
        }
        count
    }

    /// Gershgorin radius of the associated tridiagonal matrix.
    pub fn radius(&self) -> f64 {
        let n = self.len();
        (0..n)
            .map(|i| {
                let lower = if i > 0 { self.c[i - 1].abs() } else { 0.0 };
                let upper = if i + 1 < n { self.b[i].abs() } else { 0.0 };
                lower + self.a[i].abs() + upper
            })
            .fold(0.0, f64::max)
    }

    /// All zeros of `p_len`, strictly decreasing, each refined to `width_factor * max(1, radius)`.
    pub fn bisect_all(&self, width_factor: f64) -> Result<Vec<Bracketed>, Error> {
        debug_assert!(self.is_sturm());
        let n = self.len();
        let radius = self.radius();
        let lo0 = -radius - 1.0;
        let hi0 = radius + 1.0;
        if self.sign_changes(lo0) != n || self.sign_changes(hi0) != 0 {
            return Err(Error::RootIsolation(format!(
                "sign-change counts {} and {} on [{lo0}, {hi0}], expected {n} and 0",
                self.sign_changes(lo0),
                self.sign_changes(hi0)
            )));
        }
        let target = width_factor * radius.max(1.0);
        let mut roots = Vec::with_capacity(n);
        for j in 0..n {
            // the j-th largest zero: more than j zeros above lo, at most j above hi
            let (mut lo, mut hi) = (lo0, hi0);
            while hi - lo > target {
                let mid = 0.5 * (lo + hi);
                if mid <= lo || mid >= hi {
                    break;
                }
                if self.sign_changes(mid) > j {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            roots.push(Bracketed { value: 0.5 * (lo + hi), width: hi - lo });
        }
        for w in roots.windows(2) {
            if w[0].value <= w[1].value {
                return Err(Error::RootIsolation(format!(
                    "zeros {} and {} not separated",
                    w[0].value, w[1].value
                )));
            }
        }
        Ok(roots)
    }

    /// Monic characteristic polynomial of the tridiagonal matrix, in floating point.
    pub fn monic_characteristic(&self) -> Poly<f64> {
        let mut prev = Poly::zero();
        let mut cur = Poly::one();
        for i in 0..self.len() {
            let shifted = &Poly::linear(self.a[i]) * &cur;
            let back = if i == 0 { Poly::zero() } else { prev.scale(&(self.b[i - 1] * self.c[i - 1])) };
            let next = &shifted - &back;
            prev = cur;
            cur = next;
        }
        cur
    }

    /// Equivalent recurrence with unit `c` and `b'_{i} = b_i c_{i+1}` (monic determinants).
    pub fn monic(&self) -> Recurrence {
        let b = (0..self.b.len()).map(|i| self.b[i] * self.c[i]).collect();
        Recurrence { a: self.a.clone(), b, c: vec![1.0; self.len()] }
    }
}

/// All roots of a real polynomial by Aberth–Ehrlich iteration. Returns them unsorted.
pub(crate) fn polynomial_roots(poly: &Poly<f64>) -> Vec<Complex64> {
    let Some(deg) = poly.degree() else {
        return Vec::new();
    };
    if deg == 0 {
        return Vec::new();
    }
    let coeffs = poly.coeffs();
    let lead = coeffs[deg];
    let monic: Vec<f64> = coeffs.iter().map(|c| c / lead).collect();
    let radius = 1.0 + monic[..deg].iter().map(|c| c.abs()).fold(0.0, f64::max);
    let mut z: Vec<Complex64> = (0..deg)
        .map(|k| {
            let angle = 2.0 * core::f64::consts::PI * (k as f64 + 0.25) / deg as f64 + 0.4;
            Complex64::from_polar(radius * 0.5, angle)
        })
        .collect();
    let eval = |x: Complex64| -> (Complex64, Complex64) {
        let mut p = Complex64::zero();
        let mut dp = Complex64::zero();
        for c in monic.iter().rev() {
            dp = dp * x + p;
            p = p * x + Complex64::new(*c, 0.0);
        }
        (p, dp)
    };
    for _ in 0..500 {
        let mut biggest = 0.0f64;
        for i in 0..deg {
            let (p, dp) = eval(z[i]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let repulsion: Complex64 = (0..deg)
                .filter(|&j| j != i)
                .map(|j| Complex64::new(1.0, 0.0) / (z[i] - z[j]))
                .sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if step.is_finite() {
                z[i] -= step;
                biggest = biggest.max(step.norm() / z[i].norm().max(1.0));
            }
        }
        if biggest < 1e-15 {
            break;
        }
    }
    z
}

/// Refines a real root approximation by bisection when `f` changes sign around it.
pub(crate) fn polish_by_bisection(f: impl Fn(f64) -> f64, guess: f64) -> f64 {
    let scale = guess.abs().max(1.0);
    let mut delta = 1e-10 * scale;
    for _ in 0..8 {
        let (mut lo, mut hi) = (guess - delta, guess + delta);
        let (flo, fhi) = (f(lo), f(hi));
        if flo == 0.0 {
            return lo;
        }
        if fhi == 0.0 {
            return hi;
        }
        if flo.signum() != fhi.signum() {
            let lo_positive = flo > 0.0;
            for _ in 0..200 {
                let mid = 0.5 * (lo + hi);
                if mid <= lo || mid >= hi {
                    break;
                }
                let fm = f(mid);
                if fm == 0.0 {
                    return mid;
                }
                if (fm > 0.0) == lo_positive {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            return 0.5 * (lo + hi);
        }
        delta *= 10.0;
    }
    guess
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coxeter() -> Recurrence {
        Recurrence {
            a: vec![0.0, 0.0, 0.0, 1.0, 1.0],
            b: vec![3.0, 2.0, 2.0, 1.0],
            c: vec![1.0, 1.0, 1.0, 2.0, 1.0],
        }
    }

    #[test]
    fn counts_and_bisects() {
        let r = coxeter();
        assert_eq!(r.sign_changes(10.0), 0);
        assert_eq!(r.sign_changes(-10.0), 5);
        assert_eq!(r.sign_changes(2.5), 1);
        let roots = r.bisect_all(1e-13).unwrap();
        let expected = [3.0, 2.0, -1.0 + 2f64.sqrt(), -1.0, -1.0 - 2f64.sqrt()];
        for (got, want) in roots.iter().zip(expected) {
            assert!((got.value - want).abs() < 1e-11, "{} vs {}", got.value, want);
        }
    }

    #[test]
    fn aberth_matches_known_roots() {
        let p = Poly::from_roots([5.0, 3.0, -2.0].iter());
        let mut roots: Vec<f64> = polynomial_roots(&p).iter().map(|z| z.re).collect();
        roots.sort_by(|a, b| b.partial_cmp(a).unwrap());
        for (got, want) in roots.iter().zip([5.0, 3.0, -2.0]) {
            assert!((got - want).abs() < 1e-10);
        }
    }
}
