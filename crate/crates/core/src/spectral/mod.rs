//! Distance polynomials, eigenvalues, multiplicities and the eigenmatrices `P` and `Q`.

mod exact;
pub(crate) mod sturm;

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
#[allow(unused_imports)]
use num_traits::Float;
use num_traits::One;

pub use exact::ExactEigenvalue;

use crate::arrays::{GeneralizedArray, IntersectionArray};
use crate::poly::Poly;
use crate::rational::{self, Rational};
use crate::verdict::{Verdict, Witness};
use crate::{Error, Tolerance};
use sturm::Recurrence;

/// Bisection stops once brackets are narrower than this multiple of `max(1, k)`.
pub const BISECTION_WIDTH: f64 = 1e-13;

/// `p_{-1} = 0`, `p_0 = 1`, `(x - a_i) p_i = b_{i-1} p_{i-1} + c_{i+1} p_{i+1}` for `0 <= i <= d`.
#[derive(Debug, Clone, PartialEq)]
pub struct DistancePolynomials {
    polys: Vec<Poly<Rational>>,
    c_last: Rational,
}

impl DistancePolynomials {
    /// With `c_{d+1} = 1`.
    pub fn new(arr: &IntersectionArray) -> Self {
        Self::with_last(arr, Rational::one())
    }

    pub fn with_last(arr: &IntersectionArray, c_last: Rational) -> Self {
        let d = arr.diameter();
        let mut polys: Vec<Poly<Rational>> = vec![Poly::one()];
        let mut prev = Poly::zero();
        for i in 0..=d {
            let cur = &polys[i];
            let shifted = &Poly::linear(arr.a_exact(i).clone()) * cur;
            let back = if i == 0 { Poly::zero() } else { prev.scale(&arr.b_exact(i - 1)) };
            let c_next = if i == d { c_last.clone() } else { arr.c_exact(i + 1) };
            let next = (&shifted - &back).scale(&(Rational::one() / c_next));
            prev = cur.clone();
            polys.push(next);
        }
        DistancePolynomials { polys, c_last }
    }

    /// `p_i` for `0 <= i <= d+1`.
    pub fn get(&self, i: usize) -> &Poly<Rational> {
        &self.polys[i]
    }

    pub fn all(&self) -> &[Poly<Rational>] {
        &self.polys
    }

    /// `p_{d+1}`, whose zeros are the eigenvalues.
    pub fn characteristic(&self) -> &Poly<Rational> {
        self.polys.last().expect("at least p_0 and p_1")
    }

    pub fn c_last(&self) -> &Rational {
        &self.c_last
    }

    pub fn to_f64(&self) -> Vec<Poly<f64>> {
        self.polys.iter().map(Poly::to_f64).collect()
    }
}

pub(crate) fn recurrence(arr: &IntersectionArray, c_last: f64) -> Recurrence {
    let d = arr.diameter();
    let mut c: Vec<f64> = (1..=d).map(|i| arr.c(i)).collect();
    c.push(c_last);
    Recurrence {
        a: (0..=d).map(|i| arr.a(i)).collect(),
        b: (0..d).map(|i| arr.b(i)).collect(),
        c,
    }
}

fn generalized_recurrence(arr: &GeneralizedArray) -> Recurrence {
    let d = arr.diameter();
    let mut c: Vec<f64> = (1..=d).map(|i| arr.c(i)).collect();
    c.push(1.0);
    Recurrence {
        a: (0..=d).map(|i| arr.a(i)).collect(),
        b: (0..d).map(|i| arr.b(i)).collect(),
        c,
    }
}

/// Eigenvalues of the array, strictly decreasing, with `θ_0 = k` exactly.
pub fn eigenvalues(arr: &IntersectionArray) -> Result<Vec<f64>, Error> {
    Ok(eigenvalues_bracketed(arr, 1.0)?.0)
}

/// Eigenvalues computed with an arbitrary positive `c_{d+1}`.
pub fn eigenvalues_with_last(arr: &IntersectionArray, c_last: f64) -> Result<Vec<f64>, Error> {
    Ok(eigenvalues_bracketed(arr, c_last)?.0)
}

fn eigenvalues_bracketed(arr: &IntersectionArray, c_last: f64) -> Result<(Vec<f64>, Vec<f64>), Error> {
    let rec = recurrence(arr, c_last);
    let roots = rec.bisect_all(BISECTION_WIDTH)?;
    let k = arr.valency();
    let mut theta: Vec<f64> = roots.iter().map(|r| r.value).collect();
    let widths = roots.iter().map(|r| r.width).collect();
    // all-ones is an eigenvector of L with eigenvalue k, and it is the Perron vector
    if (theta[0] - k).abs() > 1e-9 * k.max(1.0) {
        return Err(Error::RootIsolation(format!("largest zero {} differs from k = {k}", theta[0])));
    }
    theta[0] = k;
    Ok((theta, widths))
}

/// Eigenvalues of a generalized array (real entries of either sign), sorted decreasing.
///
/// Uses Sturm bisection whenever the off-diagonal products `b_i c_{i+1}` are all positive,
/// and otherwise the roots of the characteristic polynomial (all of which must be real).
pub fn generalized_eigenvalues(arr: &GeneralizedArray) -> Result<Vec<f64>, Error> {
    let rec = generalized_recurrence(arr);
    tridiagonal_eigenvalues(&rec)
}

/// Eigenvalues of a tridiagonal matrix given by diagonal, super- and sub-diagonal.
pub fn tridiagonal_spectrum(diag: &[f64], upper: &[f64], lower: &[f64]) -> Result<Vec<f64>, Error> {
    let n = diag.len();
    if n == 0 || upper.len() + 1 != n || lower.len() + 1 != n {
        return Err(Error::precondition("tridiagonal bands have inconsistent lengths"));
    }
    let mut c = lower.to_vec();
    c.push(1.0);
    let rec = Recurrence { a: diag.to_vec(), b: upper.to_vec(), c };
    tridiagonal_eigenvalues(&rec)
}

fn tridiagonal_eigenvalues(rec: &Recurrence) -> Result<Vec<f64>, Error> {
    if rec.is_sturm() {
        return Ok(rec.bisect_all(BISECTION_WIDTH)?.iter().map(|r| r.value).collect());
    }
    let monic = rec.monic();
    if monic.is_sturm() {
        return Ok(monic.bisect_all(BISECTION_WIDTH)?.iter().map(|r| r.value).collect());
    }
    let characteristic = monic.monic_characteristic();
    let roots = sturm::polynomial_roots(&characteristic);
    let max_imaginary = roots
        .iter()
        .map(|z| z.im.abs() / z.re.abs().max(1.0))
        .fold(0.0, f64::max);
    if max_imaginary > 1e-7 {
        return Err(Error::NonRealEigenvalues { max_imaginary });
    }
    let mut values: Vec<f64> = roots
        .iter()
        .map(|z| sturm::polish_by_bisection(|x| characteristic.eval(&x), z.re))
        .collect();
    values.sort_by(|a, b| b.total_cmp(a));
    Ok(values)
}

/// Zeros of `p_i` (`1 <= i <= d+1`), strictly decreasing.
pub fn polynomial_zeros(arr: &IntersectionArray, i: usize) -> Result<Vec<f64>, Error> {
    let d = arr.diameter();
    if i == 0 || i > d + 1 {
        return Err(Error::precondition(format!("p_{i} has no zeros to isolate (1 <= i <= {})", d + 1)));
    }
    let rec = recurrence(arr, 1.0).leading(i);
    Ok(rec.bisect_all(BISECTION_WIDTH)?.iter().map(|r| r.value).collect())
}

/// Eigenvalues with multiplicities and provenance.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralData {
    /// `θ_0 > θ_1 > ... > θ_d`.
    pub eigenvalues: Vec<f64>,
    pub multiplicities: Vec<f64>,
    /// Width of the final bisection bracket of each eigenvalue.
    pub interval_widths: Vec<f64>,
    /// Closed forms for eigenvalues that are rational or quadratic irrationalities.
    pub exact: Vec<Option<ExactEigenvalue>>,
    pub polynomials: DistancePolynomials,
    /// Largest relative gap between the two multiplicity formulas.
    pub multiplicity_route_deviation: f64,
}

/// Which eigenmatrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EigenmatrixKind {
    P,
    Q,
}

/// A `(d+1) x (d+1)` eigenmatrix with a note on how its entries were obtained.
#[derive(Debug, Clone, PartialEq)]
pub struct Eigenmatrix {
    pub kind: EigenmatrixKind,
    size: usize,
    entries: Vec<f64>,
    pub route: &'static str,
    /// Largest deviation of the cross-check route, relative to its admissible bound.
    pub cross_check_ratio: f64,
}

impl Eigenmatrix {
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.size + j]
    }

    pub fn row(&self, i: usize) -> Vec<f64> {
        self.entries[i * self.size..(i + 1) * self.size].to_vec()
    }

    pub fn column(&self, j: usize) -> Vec<f64> {
        (0..self.size).map(|i| self.get(i, j)).collect()
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        (0..self.size).map(|i| self.row(i)).collect()
    }
}

/// `P_{ij} = k_j u_j(θ_i)` from the standard sequence, cross-checked against `p_j(θ_i)`
/// evaluated from the exact coefficients.
pub fn eigenmatrix_p(
    arr: &IntersectionArray,
    polys: &DistancePolynomials,
    theta: &[f64],
) -> Result<Eigenmatrix, Error> {
    let d = arr.diameter();
    let size = d + 1;
    let float_polys = polys.to_f64();
    let mut entries = vec![0.0; size * size];
    let mut worst = 0.0f64;
    for (i, &t) in theta.iter().enumerate() {
        let u = standard_sequence(arr, t);
        for j in 0..size {
            let via_u = if i == 0 { arr.k(j) } else { arr.k(j) * u[j] };
            let via_poly = float_polys[j].eval(&t);
            let bound = (1e-9 * arr.k(j).max(1.0)).max(64.0 * f64::EPSILON * float_polys[j].abs_eval(t));
            let dev = (via_u - via_poly).abs();
            if dev > bound {
                return Err(Error::consistency(format!("P[{i}][{j}] routes"), dev, bound));
            }
            worst = worst.max(dev / bound);
            entries[i * size + j] = via_u;
        }
    }
    Ok(Eigenmatrix {
        kind: EigenmatrixKind::P,
        size,
        entries,
        route: "k_j u_j(theta_i) from the standard sequence; checked against exact p_j coefficients",
        cross_check_ratio: worst,
    })
}

/// `u_0 = 1`, `u_1 = θ/k`, `c_j u_{j-1} + a_j u_j + b_j u_{j+1} = θ u_j`.
pub fn standard_sequence(arr: &IntersectionArray, theta: f64) -> Vec<f64> {
    let d = arr.diameter();
    let mut u = Vec::with_capacity(d + 1);
    u.push(1.0);
    if d >= 1 {
        u.push(theta / arr.valency());
    }
    for j in 1..d {
        let next = ((theta - arr.a(j)) * u[j] - arr.c(j) * u[j - 1]) / arr.b(j);
        u.push(next);
    }
    u
}

/// `m_i = n / Σ_j P_{ij}^2 / k_j`, cross-checked against
/// `m_i = n b_0 ... b_{d-1} / (P_{id} Π_{j≠i} (θ_i - θ_j))` and `Σ m_i = n`. Returns the
/// multiplicities and the largest relative gap between the two formulas.
///
/// The second formula divides by `P_{id}`, which the recurrence can produce with heavy
/// cancellation, so its admissible gap grows with a running error estimate of `P_{id}`.
pub fn multiplicities(
    arr: &IntersectionArray,
    theta: &[f64],
    widths: &[f64],
    p: &Eigenmatrix,
    tol: &Tolerance,
) -> Result<(Vec<f64>, f64), Error> {
    let d = arr.diameter();
    let n = arr.n();
    let numerator = n * rational::to_f64(&arr.b_product());
    let mut m = Vec::with_capacity(d + 1);
    let mut worst = 0.0f64;
    for i in 0..=d {
        let pid = p.get(i, d);
        if pid == 0.0 {
            return Err(Error::consistency(format!("P[{i}][{d}] vanishes"), 0.0, 0.0));
        }
        let norm: f64 = (0..=d).map(|j| p.get(i, j).powi(2) / arr.k(j)).sum();
        let mi = n / norm;
        let prod: f64 = (0..=d).filter(|&j| j != i).map(|j| theta[i] - theta[j]).product();
        let alt = numerator / (pid * prod);
        let rel = (mi - alt).abs() / mi.abs().max(alt.abs());
        let conditioning = product_route_error(arr, theta, widths, pid, i);
        worst = worst.max(rel);
        if !(mi > 0.0) || rel > tol.rel.max(1e-9).max(conditioning) {
            return Err(Error::consistency(format!("multiplicity m{i} ({mi} vs {alt})"), rel, tol.rel.max(conditioning)));
        }
        m.push(mi);
    }
    let total: f64 = m.iter().sum();
    if !tol.eq(total, n) {
        return Err(Error::consistency("sum of multiplicities", (total - n).abs(), tol.bound(n)));
    }
    Ok((m, worst))
}

/// Relative error estimate of `P_{id} Π_{j≠i} (θ_i - θ_j)`.
pub(crate) fn product_route_error(arr: &IntersectionArray, theta: &[f64], widths: &[f64], pid: f64, i: usize) -> f64 {
    let d = arr.diameter();
    let width = widths.get(i).copied().unwrap_or(0.0);
    // perturbation of each recurrence step: rounding plus the eigenvalue bracket
    let step = f64::EPSILON + width / theta[i].abs().max(1.0);
    let gap = (0..=d).filter(|&j| j != i).map(|j| (theta[i] - theta[j]).abs()).fold(f64::INFINITY, f64::min);
    4.0 * (d + 1) as f64 * (step * last_entry_magnitude(arr, theta[i]) / pid.abs() + width / gap)
}

/// `k_d |u|_d` for the standard sequence run with absolute values; bounds the size of the
/// terms that cancel in `P_{id}`.
fn last_entry_magnitude(arr: &IntersectionArray, theta: f64) -> f64 {
    let d = arr.diameter();
    let (mut prev, mut cur) = (1.0, theta.abs() / arr.valency());
    for j in 1..d {
        let next = ((theta.abs() + arr.a(j)) * cur + arr.c(j) * prev) / arr.b(j);
        prev = cur;
        cur = next;
    }
    arr.k(d) * cur
}

/// `Q_{ij} = m_j P_{ji} / k_i`.
pub fn eigenmatrix_q(arr: &IntersectionArray, m: &[f64], p: &Eigenmatrix) -> Eigenmatrix {
    let size = p.size();
    let mut entries = vec![0.0; size * size];
    for i in 0..size {
        for j in 0..size {
            entries[i * size + j] = m[j] * p.get(j, i) / arr.k(i);
        }
    }
    Eigenmatrix {
        kind: EigenmatrixKind::Q,
        size,
        entries,
        route: "k_i Q_ij = m_j P_ji",
        cross_check_ratio: 0.0,
    }
}

/// Sign-change counts of every row and column of `P` (entries within tolerance of zero skipped).
#[derive(Debug, Clone, PartialEq)]
pub struct SignChanges {
    pub rows: Vec<usize>,
    pub columns: Vec<usize>,
}

impl SignChanges {
    /// Row `i` and column `i` both have exactly `i` sign changes.
    pub fn passes(&self) -> bool {
        self.rows.iter().enumerate().all(|(i, &r)| r == i) && self.columns.iter().enumerate().all(|(i, &c)| c == i)
    }
}

pub fn sign_changes_check(p: &Eigenmatrix, valencies: &[f64], tol: &Tolerance) -> SignChanges {
    let size = p.size();
    let count = |values: &mut dyn Iterator<Item = (f64, f64)>| -> usize {
        let mut last: Option<bool> = None;
        let mut changes = 0;
        for (v, scale) in values {
            if tol.is_zero(v, scale) {
                continue;
            }
            let positive = v > 0.0;
            if last.is_some_and(|l| l != positive) {
                changes += 1;
            }
            last = Some(positive);
        }
        changes
    };
    let rows = (0..size)
        .map(|i| count(&mut (0..size).map(|j| (p.get(i, j), valencies[j]))))
        .collect();
    let columns = (0..size)
        .map(|j| count(&mut (0..size).map(|i| (p.get(i, j), valencies[j]))))
        .collect();
    SignChanges { rows, columns }
}

/// The full spectral analysis of one intersection array.
#[derive(Debug, Clone, PartialEq)]
pub struct Analysis {
    pub array: IntersectionArray,
    pub spectrum: SpectralData,
    pub p: Eigenmatrix,
    pub q: Eigenmatrix,
    pub tolerance: Tolerance,
}

impl Analysis {
    pub fn new(array: IntersectionArray, tolerance: Tolerance) -> Result<Self, Error> {
        let polynomials = DistancePolynomials::new(&array);
        let (mut theta, widths) = eigenvalues_bracketed(&array, 1.0)?;
        let exact = exact::recognize(polynomials.characteristic(), &theta);
        for (t, e) in theta.iter_mut().zip(&exact) {
            if let Some(ExactEigenvalue::Rational(r)) = e {
                *t = rational::to_f64(r);
            }
        }
        let p = eigenmatrix_p(&array, &polynomials, &theta)?;
        let (m, deviation) = multiplicities(&array, &theta, &widths, &p, &tolerance)?;
        let q = eigenmatrix_q(&array, &m, &p);
        let spectrum = SpectralData {
            eigenvalues: theta,
            multiplicities: m,
            interval_widths: widths,
            exact,
            polynomials,
            multiplicity_route_deviation: deviation,
        };
        Ok(Analysis { array, spectrum, p, q, tolerance })
    }

    pub fn parse(text: &str) -> Result<Self, Error> {
        Self::new(IntersectionArray::parse(text)?, Tolerance::default())
    }

    pub fn diameter(&self) -> usize {
        self.array.diameter()
    }

    pub fn theta(&self, i: usize) -> f64 {
        self.spectrum.eigenvalues[i]
    }

    pub fn m(&self, i: usize) -> f64 {
        self.spectrum.multiplicities[i]
    }

    /// Column `d` of `P`: the eigenvalues of the distance-`d` graph.
    pub fn column_d(&self) -> Vec<f64> {
        self.p.column(self.diameter())
    }

    /// `P_{gd} = P_{hd}` compared directly.
    pub fn column_d_equal(&self, g: usize, h: usize) -> Witness {
        let d = self.diameter();
        Witness::compare(
            format!("P[{g}][{d}] = P[{h}][{d}]"),
            self.p.get(g, d),
            self.p.get(h, d),
            &self.tolerance,
        )
    }

    pub fn sign_changes(&self) -> SignChanges {
        sign_changes_check(&self.p, self.array.valencies(), &self.tolerance)
    }

    /// Power sums, `PQ = nI`, the multiplicity identity, and sign changes, as witnesses.
    pub fn identities(&self) -> Verdict {
        let tol = &self.tolerance;
        let arr = &self.array;
        let d = self.diameter();
        let n = arr.n();
        let k = arr.valency();
        let lambda = arr.lambda();
        let theta = &self.spectrum.eigenvalues;
        let m = &self.spectrum.multiplicities;
        let power = |e: i32| -> (f64, f64) {
            let terms = theta.iter().zip(m).map(|(t, mi)| mi * t.powi(e));
            terms.fold((0.0, 0.0), |(s, a), x| (s + x, a + x.abs()))
        };
        let mut ws = Vec::new();
        let expected = [
            n,
            0.0,
            n * k,
            n * k * lambda,
            n * k * (k + lambda * lambda + arr.b(1) * arr.mu().unwrap_or(0.0)),
        ];
        for (e, want) in expected.iter().enumerate() {
            // the fourth moment formula needs b_1 and c_2
            if e == 4 && d < 2 {
                continue;
            }
            let (sum, scale) = power(e as i32);
            ws.push(Witness::scaled(format!("sum m_i theta_i^{e}"), sum, *want, scale, tol));
        }
        let target = n * rational::to_f64(&arr.b_product());
        for i in 0..=d {
            let prod: f64 = (0..=d).filter(|&j| j != i).map(|j| theta[i] - theta[j]).product();
            let pid = self.p.get(i, d);
            let lhs = m[i] * pid * prod;
            let error = product_route_error(arr, theta, &self.spectrum.interval_widths, pid, i);
            let bound = tol.bound(target).max(error * target.abs());
            ws.push(Witness { label: format!("m_{i} P_{i}d prod(theta_{i} - theta_j)"), lhs, rhs: target, bound });
        }
        for i in 0..=d {
            for j in 0..=d {
                let mut sum = 0.0;
                let mut scale = 0.0;
                for l in 0..=d {
                    let t = self.p.get(i, l) * self.q.get(l, j);
                    sum += t;
                    scale += t.abs();
                }
                let want = if i == j { n } else { 0.0 };
                ws.push(Witness::scaled(format!("(PQ)[{i}][{j}]"), sum, want, scale, tol));
            }
        }
        let signs = self.sign_changes();
        for i in 0..=d {
            ws.push(Witness::compare(format!("sign changes row {i}"), signs.rows[i] as f64, i as f64, tol));
            ws.push(Witness::compare(format!("sign changes column {i}"), signs.columns[i] as f64, i as f64, tol));
        }
        Verdict::all(ws)
    }

    /// Whether the zeros of consecutive `p_i` strictly interlace, for `1 <= i <= d`.
    pub fn interlacing(&self) -> Result<bool, Error> {
        let d = self.diameter();
        let mut upper = polynomial_zeros(&self.array, 1)?;
        for i in 1..=d {
            let lower_deg = upper;
            let higher = polynomial_zeros(&self.array, i + 1)?;
            // exactly one zero of p_i strictly between consecutive zeros of p_{i+1}
            for w in 0..i {
                let (hi, lo) = (higher[w], higher[w + 1]);
                let inside = lower_deg.iter().filter(|&&z| z < hi && z > lo).count();
                if inside != 1 {
                    return Ok(false);
                }
            }
            upper = higher;
        }
        Ok(true)
    }

    /// Eigenvalues recomputed with `c_{d+1} = c_last`; returns the largest change.
    pub fn c_last_sensitivity(&self, c_last: f64) -> Result<f64, Error> {
        let other = eigenvalues_with_last(&self.array, c_last)?;
        Ok(other
            .iter()
            .zip(&self.spectrum.eigenvalues)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max))
    }

    /// Product `Π_{j ∈ set} (x - θ_j)` exactly, when every factor is rational or a full conjugate pair.
    pub fn exact_root_product(&self, set: &[usize]) -> Option<Poly<Rational>> {
        let mut product = Poly::one();
        for &j in set {
            match self.spectrum.exact.get(j)?.as_ref()? {
                ExactEigenvalue::Rational(r) => product = &product * &Poly::linear(r.clone()),
                ExactEigenvalue::Quadratic { trace, norm, partner } => {
                    if !set.contains(partner) {
                        return None;
                    }
                    // each conjugate pair contributes its quadratic once
                    if j < *partner {
                        let q = Poly::new(vec![norm.clone(), -trace.clone(), rational::int(1)]);
                        product = &product * &q;
                    }
                }
            }
        }
        Some(product)
    }

    /// Exact value of `θ_i` when it is rational.
    pub fn rational_eigenvalue(&self, i: usize) -> Option<&Rational> {
        match self.spectrum.exact.get(i)?.as_ref()? {
            ExactEigenvalue::Rational(r) => Some(r),
            ExactEigenvalue::Quadratic { .. } => None,
        }
    }

    /// `Σ_i m_i f(θ_i)` with its absolute scale, for `f` given pointwise.
    pub fn spectral_sum(&self, f: impl Fn(usize, f64) -> f64) -> (f64, f64) {
        let theta = &self.spectrum.eigenvalues;
        let m = &self.spectrum.multiplicities;
        (0..theta.len()).fold((0.0, 0.0), |(s, a), i| {
            let t = m[i] * f(i, theta[i]);
            (s + t, a + t.abs())
        })
    }

    /// Whether every multiplicity is within `1e-6` of an integer.
    pub fn multiplicities_integral(&self) -> bool {
        self.spectrum.multiplicities.iter().all(|m| (m - m.round()).abs() <= 1e-6)
    }
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn small_last_column_entry_keeps_multiplicities_consistent() {
        // P_44 is about 3e-3 against terms of size 1e1, so the product formula loses digits
        let an = Analysis::parse("{8,1,1,1;1,1,1,1}").unwrap();
        let total: f64 = an.spectrum.multiplicities.iter().sum();
        assert!((total - 33.0).abs() < 1e-9);
        assert!(an.identities().holds);
        assert!(an.spectrum.multiplicity_route_deviation > 1e-8);
    }

    #[test]
    fn complete_graph_polynomials() {
        let k = 5;
        let arr = IntersectionArray::from_ints(&[k], &[1]).unwrap();
        let polys = DistancePolynomials::new(&arr);
        assert_eq!(polys.get(1), &Poly::x());
        // p_2 = x^2 - (k-1) x - k with c_2 = 1
        assert_eq!(polys.get(2), &Poly::new(vec![int(-k), int(-(k - 1)), int(1)]));
    }

    #[test]
    fn coxeter_valency_evaluation() {
        let arr = IntersectionArray::from_ints(&[3, 2, 2, 1], &[1, 1, 1, 2]).unwrap();
        let polys = DistancePolynomials::new(&arr);
        for i in 0..=4 {
            assert_eq!(polys.get(i).eval(&int(3)), arr.k_exact(i).clone());
        }
        assert_eq!(polys.get(4).eval(&int(3)), int(6));
    }

    #[test]
    fn characteristic_zeros_do_not_depend_on_c_last() {
        let arr = IntersectionArray::from_ints(&[3, 2, 2, 1], &[1, 1, 1, 2]).unwrap();
        let one = DistancePolynomials::with_last(&arr, int(1));
        let two = DistancePolynomials::with_last(&arr, int(2));
        assert_eq!(one.characteristic().scale(&crate::rational::frac(1, 2)), *two.characteristic());
        let a = eigenvalues_with_last(&arr, 1.0).unwrap();
        let b = eigenvalues_with_last(&arr, 2.0).unwrap();
        for (x, y) in a.iter().zip(&b) {
            assert!((x - y).abs() <= 1e-10);
        }
    }

    #[test]
    fn complete_graph_row_has_one_change() {
        let an = Analysis::parse("{4;1}").unwrap();
        assert_eq!(an.p.row(1), vec![1.0, -1.0]);
        assert!(an.sign_changes().passes());
    }

    #[test]
    fn coxeter_spectrum_and_recognition() {
        let an = Analysis::parse("{3,2,2,1;1,1,1,2}").unwrap();
        let s = 2f64.sqrt();
        let want = [3.0, 2.0, -1.0 + s, -1.0, -1.0 - s];
        for (got, w) in an.spectrum.eigenvalues.iter().zip(want) {
            assert!((got - w).abs() < 1e-12);
        }
        assert_eq!(an.rational_eigenvalue(1), Some(&int(2)));
        assert!(matches!(an.spectrum.exact[2], Some(ExactEigenvalue::Quadratic { partner: 4, .. })));
        let product = an.exact_root_product(&[0, 2, 4]).unwrap();
        // (x - 3)(x^2 + 2x - 1)
        assert_eq!(product, Poly::new(vec![int(3), int(-7), int(-1), int(1)]));
        assert!(an.exact_root_product(&[0, 2]).is_none());
    }

    #[test]
    fn generalized_array_with_negative_entry() {
        let arr = GeneralizedArray::parse("{5,4;1,-1}").unwrap();
        let ev = generalized_eigenvalues(&arr).unwrap();
        for (got, want) in ev.iter().zip([5.0, 3.0, -2.0]) {
            assert!((got - want).abs() < 1e-9, "{ev:?}");
        }
    }

    #[test]
    fn non_real_spectrum_is_reported() {
        // eigenvalues 1 and 1 +- i
        let arr = GeneralizedArray::new(vec![1.0, 1.0], vec![-1.0, -1.0]).unwrap();
        assert!(matches!(generalized_eigenvalues(&arr), Err(Error::NonRealEigenvalues { .. })));
    }
}
