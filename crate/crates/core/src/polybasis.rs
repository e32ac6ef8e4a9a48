//! Polynomials in `A` written on the distance basis `{A_s}`, and the traces they induce.
//!
//! A polynomial `f` of degree at most `d` acts on the Bose–Mesner algebra as
//! `f(A) = Σ_s coeff_s A_s`; since `A_s = p_s(A)` the coefficients come from dividing `f`
//! successively by `p_d, p_{d-1}, ..., p_0`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
#[allow(unused_imports)]
use num_traits::Float;
use num_traits::Zero;

use crate::poly::Poly;
use crate::rational::{self, Rational};
use crate::spectral::DistancePolynomials;
use crate::verdict::{Verdict, Witness};
use crate::{Analysis, Error};

/// A polynomial given either exactly or with floating-point coefficients.
#[derive(Debug, Clone, PartialEq)]
pub enum Polynomial {
    Exact(Poly<Rational>),
    Float(Poly<f64>),
}

impl Polynomial {
    pub fn degree(&self) -> Option<usize> {
        match self {
            Polynomial::Exact(p) => p.degree(),
            Polynomial::Float(p) => p.degree(),
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Polynomial::Exact(_))
    }

    pub fn to_f64(&self) -> Poly<f64> {
        match self {
            Polynomial::Exact(p) => p.to_f64(),
            Polynomial::Float(p) => p.clone(),
        }
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.to_f64().eval(&x)
    }
}

/// `Π_{j ∈ set} (x - θ_j)`, exact whenever each eigenvalue involved is rational or comes
/// with its quadratic conjugate.
pub fn root_product(analysis: &Analysis, set: &[usize]) -> Polynomial {
    match analysis.exact_root_product(set) {
        Some(p) => Polynomial::Exact(p),
        None => {
            let roots: Vec<f64> = set.iter().map(|&j| analysis.theta(j)).collect();
            Polynomial::Float(Poly::from_roots(roots.iter()))
        }
    }
}

/// `f(A) = Σ_s coeffs[s] A_s`.
#[derive(Debug, Clone, PartialEq)]
pub struct DistanceBasisExpansion {
    pub coeffs: Vec<f64>,
    /// Present when `f` had rational coefficients.
    pub exact: Option<Vec<Rational>>,
    pub degree: usize,
}

impl DistanceBasisExpansion {
    /// `f(θ_i) = Σ_s coeffs[s] P_{is}` for every `i`.
    pub fn evaluation_consistency(&self, f: &Polynomial, analysis: &Analysis) -> Verdict {
        let float = f.to_f64();
        let d = analysis.diameter();
        let tol = analysis.tolerance.with_floor(1e-8);
        let ws = (0..=d)
            .map(|i| {
                let t = analysis.theta(i);
                let mut sum = 0.0;
                let mut scale = float.abs_eval(t);
                for (s, c) in self.coeffs.iter().enumerate() {
                    let term = c * analysis.p.get(i, s);
                    sum += term;
                    scale += term.abs();
                }
                Witness::scaled(format!("f(theta_{i}) = sum_s coeff_s P[{i}][s]"), float.eval(&t), sum, scale, &tol)
            })
            .collect();
        Verdict::all(ws)
    }
}

/// Coefficients of `f` on `p_0, ..., p_d` by iterated division, exactly.
pub fn expand_exact(f: &Poly<Rational>, polys: &DistancePolynomials, d: usize) -> Result<Vec<Rational>, Error> {
    let deg = f.degree().unwrap_or(0);
    if deg > d {
        return Err(Error::precondition(format!("degree {deg} exceeds the diameter {d}")));
    }
    let mut rest = f.clone();
    let mut coeffs = vec![Rational::zero(); d + 1];
    for s in (0..=deg).rev() {
        let (q, r) = rest.div_rem(polys.get(s));
        coeffs[s] = q.coeff(0);
        rest = r;
    }
    Ok(coeffs)
}

/// Floating-point version of [`expand_exact`].
pub fn expand_float(f: &Poly<f64>, polys: &DistancePolynomials, d: usize) -> Result<Vec<f64>, Error> {
    let deg = f.degree().unwrap_or(0);
    if deg > d {
        return Err(Error::precondition(format!("degree {deg} exceeds the diameter {d}")));
    }
    let basis = polys.to_f64();
    let mut rest: Vec<f64> = f.coeffs().to_vec();
    rest.resize(deg + 1, 0.0);
    let mut coeffs = vec![0.0; d + 1];
    for s in (0..=deg).rev() {
        let p = basis[s].coeffs();
        let c = rest[s] / p[s];
        for (t, pt) in p.iter().enumerate() {
            rest[t] -= c * pt;
        }
        rest[s] = 0.0;
        coeffs[s] = c;
    }
    Ok(coeffs)
}

/// Expands `f` (degree at most `d`) on the distance basis of the analysed array.
pub fn expand_in_distance_basis(f: &Polynomial, analysis: &Analysis) -> Result<DistanceBasisExpansion, Error> {
    let d = analysis.diameter();
    let polys = &analysis.spectrum.polynomials;
    let degree = f.degree().unwrap_or(0);
    let expansion = match f {
        Polynomial::Exact(p) => {
            let exact = expand_exact(p, polys, d)?;
            DistanceBasisExpansion {
                coeffs: exact.iter().map(rational::to_f64).collect(),
                exact: Some(exact),
                degree,
            }
        }
        Polynomial::Float(p) => DistanceBasisExpansion { coeffs: expand_float(p, polys, d)?, exact: None, degree },
    };
    Ok(expansion)
}

/// `tr(A_i f(A))` with its two routes.
#[derive(Debug, Clone, PartialEq)]
pub struct TracePairing {
    /// `n k_i coeff_i`.
    pub value: f64,
    /// `Σ_l m_l P_{li} f(θ_l)`.
    pub spectral: f64,
    pub witness: Witness,
}

/// `tr(A_i f(A)) = n k_i coeff_i`, cross-checked against `Σ_l m_l P_{li} f(θ_l)`.
pub fn trace_pairing(i: usize, f: &Polynomial, analysis: &Analysis) -> Result<TracePairing, Error> {
    let d = analysis.diameter();
    if i > d {
        return Err(Error::precondition(format!("index {i} exceeds the diameter {d}")));
    }
    let expansion = expand_in_distance_basis(f, analysis)?;
    let arr = &analysis.array;
    let value = arr.n() * arr.k(i) * expansion.coeffs[i];
    let float = f.to_f64();
    let (spectral, _) = analysis.spectral_sum(|l, t| analysis.p.get(l, i) * float.eval(&t));
    // rounding in f(θ_l) is relative to the size of its terms, not to f(θ_l) itself
    let (_, scale) = analysis.spectral_sum(|l, t| analysis.p.get(l, i) * float.abs_eval(t));
    let scale = scale.max(value.abs());
    let witness = Witness::scaled(format!("tr(A_{i} f(A)) routes"), value, spectral, scale, &analysis.tolerance);
    if !witness.holds() {
        return Err(Error::consistency(witness.label.clone(), witness.residual(), witness.bound));
    }
    Ok(TracePairing { value, spectral, witness })
}

/// `α_i = tr(A_i Π_{j∉H}(A - θ_j I)) / tr(A_r A^r)` with `r = d + 1 - |H|`.
#[derive(Debug, Clone, PartialEq)]
pub struct AlphaCoefficients {
    pub h: Vec<usize>,
    pub r: usize,
    /// `α_0, ..., α_r`; `α_r = 1`.
    pub alpha: Vec<f64>,
    pub exact: Option<Vec<Rational>>,
    /// First index of the window `[|H| - 1, r]` outside of which `α_i` vanishes when the
    /// entries `P_{hd}`, `h ∈ H`, coincide.
    pub window_start: usize,
    /// `α_i = 0` for `i` below the window.
    pub vanishing: Verdict,
    /// Agreement between the division route and the spectral route.
    pub routes: Verdict,
    /// `Σ α_i p_i / k_i` vanishes at each `θ_j`, `j ∉ H`.
    pub zeros: Verdict,
}

fn complement(h: &[usize], d: usize) -> Vec<usize> {
    (0..=d).filter(|j| !h.contains(j)).collect()
}

/// Normalized trace coefficients of `Π_{j∉H}(A - θ_j I)`.
pub fn alpha_coefficients(h: &[usize], analysis: &Analysis) -> Result<AlphaCoefficients, Error> {
    let d = analysis.diameter();
    let mut h: Vec<usize> = h.to_vec();
    h.sort_unstable();
    h.dedup();
    if h.is_empty() || h.iter().any(|&x| x > d) {
        return Err(Error::precondition(format!("index set must be a nonempty subset of 0..={d}")));
    }
    let rest = complement(&h, d);
    let r = rest.len();
    let arr = &analysis.array;
    let tol = &analysis.tolerance;
    let f = root_product(analysis, &rest);
    let expansion = expand_in_distance_basis(&f, analysis)?;

    let c_prod = arr.c_product(r);
    let norm = rational::to_f64(&c_prod) * arr.k(r);
    let exact = expansion.exact.as_ref().map(|coeffs| {
        let denom = &c_prod * arr.k_exact(r);
        (0..=r).map(|i| &coeffs[i] * arr.k_exact(i) / &denom).collect::<Vec<_>>()
    });

    let n = arr.n();
    let mut alpha = Vec::with_capacity(r + 1);
    let mut scales = Vec::with_capacity(r + 1);
    let mut route_ws = Vec::new();
    for i in 0..=r {
        // f(θ_l) as a plain product, so that it is exactly zero for l ∉ H
        let (sum, scale) = analysis.spectral_sum(|l, t| {
            let value: f64 = rest.iter().map(|&j| if j == l { 0.0 } else { t - analysis.theta(j) }).product();
            analysis.p.get(l, i) * value
        });
        let spectral = sum / (n * norm);
        let scale = scale / (n * norm);
        let division = arr.k(i) * expansion.coeffs[i] / norm;
        route_ws.push(Witness::scaled(format!("alpha_{i} routes"), division, spectral, scale.max(1.0), tol));
        let value = match &exact {
            Some(e) => rational::to_f64(&e[i]),
            None => spectral,
        };
        alpha.push(value);
        scales.push(scale.max(value.abs()));
    }
    if exact.is_none() {
        alpha[r] = 1.0;
    }

    let window_start = h.len() - 1;
    let vanishing = Verdict::all(
        (0..window_start.min(r))
            .map(|i| Witness::scaled(format!("alpha_{i} = 0"), alpha[i], 0.0, scales[i].max(1.0), tol))
            .collect(),
    );

    let polys: Vec<Poly<f64>> = analysis.spectrum.polynomials.to_f64();
    let zeros = Verdict::all(
        rest.iter()
            .map(|&j| {
                let t = analysis.theta(j);
                let (mut sum, mut scale) = (0.0, 0.0);
                for (i, a) in alpha.iter().enumerate() {
                    let term = a / arr.k(i) * polys[i].eval(&t);
                    sum += term;
                    scale += (a / arr.k(i)).abs() * polys[i].abs_eval(t);
                }
                Witness::scaled(format!("sum alpha_i p_i(theta_{j}) / k_i = 0"), sum, 0.0, scale, &tol.with_floor(1e-8))
            })
            .collect(),
    );

    Ok(AlphaCoefficients { h, r, alpha, exact, window_start, vanishing, routes: Verdict::all(route_ws), zeros })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn coxeter() -> Analysis {
        Analysis::parse("{3,2,2,1;1,1,1,2}").unwrap()
    }

    #[test]
    fn basis_elements_expand_to_unit_vectors() {
        let an = coxeter();
        for e in 0..=4 {
            let f = Polynomial::Exact(an.spectrum.polynomials.get(e).clone());
            let ex = expand_in_distance_basis(&f, &an).unwrap();
            let exact = ex.exact.unwrap();
            for (s, c) in exact.iter().enumerate() {
                assert_eq!(c, &int(if s == e { 1 } else { 0 }));
            }
        }
    }

    #[test]
    fn degree_above_diameter_is_rejected() {
        let an = Analysis::parse("{4;1}").unwrap();
        let f = Polynomial::Exact(Poly::monomial(2, int(1)));
        assert!(expand_in_distance_basis(&f, &an).is_err());
    }

    #[test]
    fn coxeter_product_misses_a0() {
        let an = coxeter();
        let f = root_product(&an, &[0, 2, 4]);
        assert!(f.is_exact());
        let ex = expand_in_distance_basis(&f, &an).unwrap();
        assert_eq!(ex.exact.as_ref().unwrap()[0], int(0));
        assert!(ex.evaluation_consistency(&f, &an).holds);
    }

    #[test]
    fn trace_of_distance_d_against_powers() {
        let an = coxeter();
        let d = 4;
        for h in 0..d {
            let t = trace_pairing(d, &Polynomial::Exact(Poly::monomial(h, int(1))), &an).unwrap();
            assert_eq!(t.value, 0.0);
        }
        let t = trace_pairing(d, &Polynomial::Exact(Poly::monomial(d, int(1))), &an).unwrap();
        // n b_0 b_1 b_2 b_3 = 28 * 12
        assert_eq!(t.value, 336.0);
        let one = trace_pairing(0, &Polynomial::Exact(Poly::one()), &an).unwrap();
        assert_eq!(one.value, 28.0);
    }

    #[test]
    fn coxeter_z_from_alpha() {
        let an = coxeter();
        let a = alpha_coefficients(&[1, 3], &an).unwrap();
        assert_eq!(a.r, 3);
        assert_eq!(a.alpha[3], 1.0);
        assert!(a.vanishing.holds && a.routes.holds && a.zeros.holds);
        assert!((a.alpha[1] + 0.5).abs() < 1e-12);
    }
}
