//! Coincidences among the eigenvalues `P_{id}` of the distance-`d` graph `Γ_d`.
//!
//! Every statement is decided twice: once from a sum or closed-form criterion on the
//! spectrum or the array, and once by comparing entries of column `d` of `P` directly.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
#[allow(unused_imports)]
use num_traits::Float;

use crate::arrays::{classify_imprimitivity, distance12_condition, GeneralizedArray, Imprimitivity, IntersectionNumbers};
use crate::linalg;
use crate::polybasis::{alpha_coefficients, AlphaCoefficients};
use crate::rational;
use crate::spectral::{generalized_eigenvalues, tridiagonal_spectrum};
use crate::verdict::{CrossChecked, Verdict, Witness};
use crate::{Analysis, Error, Tolerance};

/// Indices whose `P_{id}` agree, with their common value.
#[derive(Debug, Clone, PartialEq)]
pub struct EqualClass {
    pub members: Vec<usize>,
    pub value: f64,
}

/// Partitions column `d` by value under the shared tolerance.
pub fn equal_classes(column: &[f64], tol: &Tolerance) -> Vec<EqualClass> {
    let mut classes: Vec<EqualClass> = Vec::new();
    for (i, &v) in column.iter().enumerate() {
        match classes.iter_mut().find(|c| tol.eq(c.value, v)) {
            Some(c) => c.members.push(i),
            None => classes.push(EqualClass { members: vec![i], value: v }),
        }
    }
    classes
}

/// Result of greedily matching one multiset of reals against another.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumMatch {
    pub matched: bool,
    /// Largest distance from an expected value to its matched partner.
    pub max_distance: f64,
    pub expected: Vec<f64>,
    pub found: Vec<f64>,
}

/// Matches sorted values greedily, each expected value taking the nearest unused one.
pub fn match_spectra(expected: &[f64], found: &[f64], tol: &Tolerance) -> SpectrumMatch {
    let mut expected = expected.to_vec();
    let mut found = found.to_vec();
    expected.sort_by(|a, b| b.total_cmp(a));
    found.sort_by(|a, b| b.total_cmp(a));
    let mut used = vec![false; found.len()];
    let mut matched = expected.len() == found.len();
    let mut max_distance = 0.0f64;
    for &x in &expected {
        let best = found
            .iter()
            .enumerate()
            .filter(|(j, _)| !used[*j])
            .min_by(|(_, a), (_, b)| (*a - x).abs().total_cmp(&(*b - x).abs()));
        match best {
            Some((j, &y)) => {
                used[j] = true;
                let dist = (y - x).abs();
                max_distance = max_distance.max(dist);
                if dist > tol.bound(x.abs().max(y.abs()).max(1.0)) {
                    matched = false;
                }
            }
            None => {
                matched = false;
                max_distance = f64::INFINITY;
            }
        }
    }
    SpectrumMatch { matched, max_distance, expected, found }
}

fn require_diameter(an: &Analysis, d: usize, what: &str) -> Result<(), Error> {
    if an.diameter() != d {
        return Err(Error::precondition(format!("{what} needs diameter {d}, got {}", an.diameter())));
    }
    Ok(())
}

/// `Σ_i m_i θ_i^e Π_{j ∉ H}(θ_i - θ_j)` with its absolute scale.
fn restricted_moment(an: &Analysis, h: &[usize], e: i32) -> (f64, f64) {
    let d = an.diameter();
    an.spectral_sum(|i, t| {
        let prod: f64 = (0..=d)
            .filter(|j| !h.contains(j))
            .map(|j| if j == i { 0.0 } else { t - an.theta(j) })
            .product();
        t.powi(e) * prod
    })
}

/// `P_{gd} = P_{hd}` by the sum `Σ_i m_i Π_{j≠g,h}(θ_i - θ_j) = 0` and directly.
pub fn pair_criterion(an: &Analysis, g: usize, h: usize) -> Result<CrossChecked, Error> {
    let d = an.diameter();
    if g == h || g > d || h > d {
        return Err(Error::precondition(format!("pair ({g},{h}) must be two distinct indices in 0..={d}")));
    }
    let (sum, scale) = restricted_moment(an, &[g, h], 0);
    let criterion = Verdict::single(Witness::scaled(
        format!("sum_i m_i prod_(j != {g},{h}) (theta_i - theta_j) = 0"),
        sum,
        0.0,
        scale,
        &an.tolerance,
    ));
    Ok(CrossChecked { criterion, direct: Verdict::single(an.column_d_equal(g, h)) })
}

/// One pair with both verdicts.
#[derive(Debug, Clone, PartialEq)]
pub struct PairCheck {
    pub g: usize,
    pub h: usize,
    pub check: CrossChecked,
}

/// All pairs `g < h`, with those satisfying the sum criterion singled out.
#[derive(Debug, Clone, PartialEq)]
pub struct EqualPairs {
    pub pairs: Vec<(usize, usize)>,
    pub checks: Vec<PairCheck>,
    /// Pairs where the sum criterion and the direct comparison disagree.
    pub disagreements: Vec<(usize, usize)>,
}

pub fn equal_pairs(an: &Analysis) -> EqualPairs {
    let d = an.diameter();
    let mut checks = Vec::new();
    for g in 0..=d {
        for h in g + 1..=d {
            let check = pair_criterion(an, g, h).expect("indices in range");
            checks.push(PairCheck { g, h, check });
        }
    }
    let pairs = checks.iter().filter(|c| c.check.criterion.holds).map(|c| (c.g, c.h)).collect();
    let disagreements = checks.iter().filter(|c| !c.check.agree()).map(|c| (c.g, c.h)).collect();
    EqualPairs { pairs, checks, disagreements }
}

/// All `P_{hd}`, `h ∈ H`, coincide: by the vanishing of
/// `Σ_i m_i θ_i^e Π_{j∉H}(θ_i - θ_j)` for `0 <= e <= |H| - 2`, and directly.
pub fn equal_set_criterion(an: &Analysis, h: &[usize]) -> Result<CrossChecked, Error> {
    let d = an.diameter();
    let mut h = h.to_vec();
    h.sort_unstable();
    h.dedup();
    if h.len() < 2 || h.iter().any(|&x| x > d) {
        return Err(Error::precondition(format!("index set needs at least two indices in 0..={d}")));
    }
    let tol = &an.tolerance;
    let criterion = (0..=h.len() as i32 - 2)
        .map(|e| {
            let (sum, scale) = restricted_moment(an, &h, e);
            Witness::scaled(format!("sum_i m_i theta_i^{e} prod_(j not in H) (theta_i - theta_j) = 0"), sum, 0.0, scale, tol)
        })
        .collect();
    let direct = h[1..].iter().map(|&x| an.column_d_equal(h[0], x)).collect();
    Ok(CrossChecked { criterion: Verdict::all(criterion), direct: Verdict::all(direct) })
}

/// `d = 3`: `P_{13} = P_{33}` iff `θ_2 = -1`.
pub fn criterion_d3(an: &Analysis) -> Result<CrossChecked, Error> {
    require_diameter(an, 3, "the diameter-3 criterion")?;
    Ok(CrossChecked {
        criterion: Verdict::single(Witness::compare("theta_2 = -1", an.theta(2), -1.0, &an.tolerance)),
        direct: Verdict::single(an.column_d_equal(1, 3)),
    })
}

/// The two diameter-4 criteria.
#[derive(Debug, Clone, PartialEq)]
pub struct D4Criteria {
    /// `P_{14} = P_{34}` iff `(θ_2+1)(θ_4+1) = -b_1`.
    pub pair_13: CrossChecked,
    /// `P_{24} = P_{44}` iff `(θ_1+1)(θ_3+1) = -b_1`.
    pub pair_24: CrossChecked,
}

fn product_witness(an: &Analysis, x: usize, y: usize) -> Witness {
    let lhs = (an.theta(x) + 1.0) * (an.theta(y) + 1.0);
    let b1 = an.array.b(1);
    let scale = (an.theta(x).abs() + 1.0) * (an.theta(y).abs() + 1.0) + b1;
    Witness::scaled(format!("(theta_{x}+1)(theta_{y}+1) = -b_1"), lhs, -b1, scale, &an.tolerance)
}

pub fn criterion_d4(an: &Analysis) -> Result<D4Criteria, Error> {
    require_diameter(an, 4, "the diameter-4 criteria")?;
    Ok(D4Criteria {
        pair_13: CrossChecked {
            criterion: Verdict::single(product_witness(an, 2, 4)),
            direct: Verdict::single(an.column_d_equal(1, 3)),
        },
        pair_24: CrossChecked {
            criterion: Verdict::single(product_witness(an, 1, 3)),
            direct: Verdict::single(an.column_d_equal(2, 4)),
        },
    })
}

/// Three equivalent descriptions of a strongly regular `Γ_4`.
#[derive(Debug, Clone, PartialEq)]
pub struct Gamma4 {
    /// `p^1_{44} = p^2_{44} = p^3_{44}`.
    pub i: Verdict,
    /// `b_3 = a_4 + 1` and `b_1 = b_3 c_3`.
    pub ii: Verdict,
    /// `(θ_1+1)(θ_3+1) = (θ_2+1)(θ_4+1) = -b_1`.
    pub iii: Verdict,
}

impl Gamma4 {
    pub fn agree(&self) -> bool {
        self.i.holds == self.ii.holds && self.ii.holds == self.iii.holds
    }

    pub fn holds(&self) -> bool {
        self.i.holds && self.ii.holds && self.iii.holds
    }
}

pub fn gamma4_strongly_regular(an: &Analysis) -> Result<Gamma4, Error> {
    require_diameter(an, 4, "the strongly regular Γ_4 test")?;
    let arr = &an.array;
    let exact = Tolerance { rel: 0.0, abs: 0.0 };
    let numbers = IntersectionNumbers::exact(arr);
    let p = |k| numbers.get_f64(k, 4, 4);
    let i = Verdict::all(vec![
        Witness::compare("p^1_44 = p^2_44", p(1), p(2), &exact),
        Witness::compare("p^1_44 = p^3_44", p(1), p(3), &exact),
    ]);
    let a4 = rational::to_f64(arr.a_exact(4));
    let ii = Verdict::all(vec![
        Witness::compare("b_3 = a_4 + 1", arr.b(3), a4 + 1.0, &exact),
        Witness::compare("b_1 = b_3 c_3", arr.b(1), arr.b(3) * arr.c(3), &exact),
    ]);
    let iii = Verdict::all(vec![product_witness(an, 1, 3), product_witness(an, 2, 4)]);
    Ok(Gamma4 { i, ii, iii })
}

/// `θ_1 + θ_3 = λ`, `θ_1 θ_3 = -k`, `(θ_2+1)(θ_4+1) = -b_1`, next to the array's antipodality.
#[derive(Debug, Clone, PartialEq)]
pub struct CliqueCondition {
    pub verdict: Verdict,
    pub antipodal: bool,
}

impl CliqueCondition {
    pub fn agree(&self) -> bool {
        self.verdict.holds == self.antipodal
    }
}

pub fn antipodal_d4_clique_condition(an: &Analysis) -> Result<CliqueCondition, Error> {
    require_diameter(an, 4, "the diameter-4 clique condition")?;
    let tol = &an.tolerance;
    let (t1, t3) = (an.theta(1), an.theta(3));
    let k = an.array.valency();
    let verdict = Verdict::all(vec![
        Witness::scaled("theta_1 + theta_3 = lambda", t1 + t3, an.array.lambda(), t1.abs() + t3.abs(), tol),
        Witness::scaled("theta_1 theta_3 = -k", t1 * t3, -k, (t1 * t3).abs().max(k), tol),
        product_witness(an, 2, 4),
    ]);
    Ok(CliqueCondition { verdict, antipodal: classify_imprimitivity(&an.array).antipodal })
}

/// The diameter-5 criterion for one pair.
#[derive(Debug, Clone, PartialEq)]
pub struct D5Criterion {
    pub f: usize,
    pub g: usize,
    /// `(θ_h+1)(θ_i+1)(θ_j+1) + b_1(θ_h+θ_i+θ_j) = b_1(λ-μ-1)` against `P_{f5} = P_{g5}`.
    pub check: CrossChecked,
    /// When one of the remaining eigenvalues is `-1`: the other two sum to `λ - μ`.
    pub special: Option<CrossChecked>,
}

/// `d = 5`, `{f, g, h, i, j} = {1, ..., 5}`.
pub fn criterion_d5(an: &Analysis, f: usize, g: usize) -> Result<D5Criterion, Error> {
    require_diameter(an, 5, "the diameter-5 criterion")?;
    if f == g || !(1..=5).contains(&f) || !(1..=5).contains(&g) {
        return Err(Error::precondition(format!("pair ({f},{g}) must be two distinct indices in 1..=5")));
    }
    let tol = &an.tolerance;
    let arr = &an.array;
    let rest: Vec<usize> = (1..=5).filter(|&x| x != f && x != g).collect();
    let t: Vec<f64> = rest.iter().map(|&x| an.theta(x)).collect();
    let b1 = arr.b(1);
    let lambda = arr.lambda();
    let mu = arr.mu().expect("diameter 5 has c_2");
    let prod = (t[0] + 1.0) * (t[1] + 1.0) * (t[2] + 1.0);
    let lhs = prod + b1 * (t[0] + t[1] + t[2]);
    let rhs = b1 * (lambda - mu - 1.0);
    let scale = prod.abs() + b1 * (t[0].abs() + t[1].abs() + t[2].abs()) + b1 * (lambda.abs() + mu + 1.0);
    let label = format!(
        "(theta_{h}+1)(theta_{i}+1)(theta_{j}+1) + b_1(theta_{h}+theta_{i}+theta_{j}) = b_1(lambda-mu-1)",
        h = rest[0],
        i = rest[1],
        j = rest[2]
    );
    let direct = Verdict::single(an.column_d_equal(f, g));
    let check = CrossChecked { criterion: Verdict::single(Witness::scaled(label, lhs, rhs, scale, tol)), direct: direct.clone() };
    let special = (0..3).find(|&x| tol.eq(t[x], -1.0)).map(|x| {
        let others: Vec<usize> = (0..3).filter(|&y| y != x).collect();
        let (a, b) = (others[0], others[1]);
        let w = Witness::scaled(
            format!("theta_{} + theta_{} = lambda - mu", rest[a], rest[b]),
            t[a] + t[b],
            lambda - mu,
            t[a].abs() + t[b].abs() + lambda.abs() + mu,
            tol,
        );
        CrossChecked { criterion: Verdict::single(w), direct }
    });
    Ok(D5Criterion { f, g, check, special })
}

/// `d = 5`: `P_{15} = P_{35} = P_{55}` iff `(θ_2+1)(θ_4+1) = -b_1` and `θ_2 + θ_4 = λ - μ`.
pub fn criterion_d5_odd_triple(an: &Analysis) -> Result<CrossChecked, Error> {
    require_diameter(an, 5, "the diameter-5 triple criterion")?;
    let tol = &an.tolerance;
    let (t2, t4) = (an.theta(2), an.theta(4));
    let lm = an.array.lambda() - an.array.mu().expect("diameter 5 has c_2");
    let criterion = Verdict::all(vec![
        product_witness(an, 2, 4),
        Witness::scaled("theta_2 + theta_4 = lambda - mu", t2 + t4, lm, t2.abs() + t4.abs() + lm.abs(), tol),
    ]);
    let direct = Verdict::all(vec![an.column_d_equal(1, 3), an.column_d_equal(1, 5)]);
    Ok(CrossChecked { criterion, direct })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Odd,
    Even,
}

/// The two values of `z`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZRoutes {
    /// From `Σ_{j even} θ_j = Σ_{i<=e} a_i + (1 - z) b_e`.
    pub sum: f64,
    /// From `z = -α_{e-1}`, the normalized trace of `A_{e-1} Π_{j∉H}(A - θ_j I)`.
    pub trace: f64,
}

impl ZRoutes {
    pub fn witness(&self, tol: &Tolerance) -> Witness {
        Witness::scaled("z from eigenvalue sum = z from trace", self.sum, self.trace, 1.0, &tol.with_floor(1e-8))
    }
}

/// Outcome of the half-antipodal theorems.
#[derive(Debug, Clone, PartialEq)]
pub struct HalfAntipodalResult {
    pub parity: Parity,
    /// `H = {1, 3, ...}`: the indices whose `P_{hd}` are compared.
    pub h: Vec<usize>,
    /// Direct comparison of `P_{hd}`, `h ∈ H`.
    pub direct: Verdict,
    /// Vanishing restricted moments for `H`.
    pub criterion: Verdict,
    /// The half array (with `c_e + z b_e` last in the even case); absent if it degenerates.
    pub half_array: Option<GeneralizedArray>,
    pub half_spectrum: Vec<f64>,
    /// `{θ_0, θ_2, ...}` against the half array's spectrum.
    pub containment: SpectrumMatch,
    pub z: Option<ZRoutes>,
    /// `0 < z <= 1` (even case).
    pub z_in_range: Option<bool>,
    /// The spectral side of the theorem: containment, and `0 < z <= 1` when `d` is even.
    pub theorem: bool,
    /// Both bordered matrices of the even-case argument carry the even-indexed eigenvalues.
    pub deep: Option<Verdict>,
    pub alpha: Option<AlphaCoefficients>,
}

impl HalfAntipodalResult {
    /// `P_{1d} = P_{3d} = ...` (the direct comparison).
    pub fn holds(&self) -> bool {
        self.direct.holds
    }

    /// The theorem, the moment criterion and the direct comparison give one answer.
    pub fn agree(&self) -> bool {
        self.theorem == self.direct.holds && self.criterion.holds == self.direct.holds
    }

    pub fn half_array_display(&self) -> Option<String> {
        self.half_array.as_ref().map(|a| format!("{a}"))
    }
}

fn odd_indices(d: usize) -> Vec<usize> {
    (1..=d).step_by(2).collect()
}

fn even_indices(d: usize) -> Vec<usize> {
    (0..=d).step_by(2).collect()
}

fn half_spectrum(b: Vec<f64>, c: Vec<f64>) -> (Option<GeneralizedArray>, Vec<f64>) {
    match GeneralizedArray::new(b, c) {
        Ok(arr) => {
            let spectrum = generalized_eigenvalues(&arr).unwrap_or_default();
            (Some(arr), spectrum)
        }
        Err(_) => (None, Vec::new()),
    }
}

/// Odd `d = 2e + 1`: `P_{1d} = P_{3d} = ... = P_{dd}` iff `θ_0, θ_2, ..., θ_{2e}` are the
/// eigenvalues of `{b_0, ..., b_{e-1}; c_1, ..., c_e}`.
pub fn half_antipodal_odd(an: &Analysis) -> Result<HalfAntipodalResult, Error> {
    let d = an.diameter();
    if d.is_multiple_of(2) || d < 3 {
        return Err(Error::precondition(format!("odd half-antipodal test needs odd diameter >= 3, got {d}")));
    }
    let e = (d - 1) / 2;
    let arr = &an.array;
    let h = odd_indices(d);
    let check = equal_set_criterion(an, &h)?;
    let (half_array, spectrum) = half_spectrum((0..e).map(|i| arr.b(i)).collect(), (1..=e).map(|i| arr.c(i)).collect());
    let targets: Vec<f64> = even_indices(d).iter().map(|&j| an.theta(j)).collect();
    let containment = match_spectra(&targets, &spectrum, &an.tolerance);
    Ok(HalfAntipodalResult {
        parity: Parity::Odd,
        h,
        direct: check.direct,
        criterion: check.criterion,
        half_array,
        half_spectrum: spectrum,
        theorem: containment.matched,
        containment,
        z: None,
        z_in_range: None,
        deep: None,
        alpha: None,
    })
}

/// `1 - (Σ_{j ∈ E} θ_j - Σ_{i<=e} a_i) / b_e`.
fn z_from_sum(an: &Analysis, e: usize, set: &[usize]) -> f64 {
    let arr = &an.array;
    let theta_sum: f64 = set.iter().map(|&j| an.theta(j)).sum();
    let a_sum: f64 = (0..=e).map(|i| arr.a(i)).sum();
    1.0 - (theta_sum - a_sum) / arr.b(e)
}

/// Even `d = 2e`: `P_{1d} = P_{3d} = ... = P_{d-1,d}` iff `θ_0, θ_2, ..., θ_d` are the
/// eigenvalues of `{b_0, ..., b_{e-1}; c_1, ..., c_{e-1}, c_e + z b_e}` for some `0 < z <= 1`.
pub fn half_antipodal_even(an: &Analysis, deep: bool) -> Result<HalfAntipodalResult, Error> {
    let d = an.diameter();
    if d % 2 == 1 || d < 2 {
        return Err(Error::precondition(format!("even half-antipodal test needs even diameter >= 2, got {d}")));
    }
    let e = d / 2;
    let arr = &an.array;
    let tol = &an.tolerance;
    let h = odd_indices(d);
    let evens = even_indices(d);
    let direct_and_criterion = if h.len() >= 2 {
        equal_set_criterion(an, &h)?
    } else {
        // a single index: nothing to compare
        CrossChecked { criterion: Verdict::all(Vec::new()), direct: Verdict::all(Vec::new()) }
    };
    let alpha = alpha_coefficients(&h, an)?;
    let z = ZRoutes { sum: z_from_sum(an, e, &evens), trace: -alpha.alpha[e - 1] };
    let zv = z.sum;
    let z_in_range = zv > 0.0 && zv <= 1.0 + tol.bound(1.0);
    let mut c: Vec<f64> = (1..e).map(|i| arr.c(i)).collect();
    c.push(arr.c(e) + zv * arr.b(e));
    let (half_array, spectrum) = half_spectrum((0..e).map(|i| arr.b(i)).collect(), c);
    let targets: Vec<f64> = evens.iter().map(|&j| an.theta(j)).collect();
    let containment = match_spectra(&targets, &spectrum, tol);
    let deep = deep.then(|| bordered_check(an, zv, &targets));
    Ok(HalfAntipodalResult {
        parity: Parity::Even,
        h,
        direct: direct_and_criterion.direct,
        criterion: direct_and_criterion.criterion,
        half_array,
        half_spectrum: spectrum,
        theorem: containment.matched && z_in_range,
        containment,
        z: Some(z),
        z_in_range: Some(z_in_range),
        deep,
        alpha: Some(alpha),
    })
}

fn tridiagonal_values(diag: &[f64], upper: &[f64], lower: &[f64]) -> Result<Vec<f64>, Error> {
    if upper.iter().zip(lower).all(|(u, l)| u * l > 0.0) {
        linalg::symmetrized_tridiagonal_eigenvalues(diag, upper, lower)
    } else {
        tridiagonal_spectrum(diag, upper, lower)
    }
}

/// The two bordered tridiagonal matrices with `p = c_e + z b_e`, `q = b_e + c_e / z`.
fn bordered_check(an: &Analysis, z: f64, targets: &[f64]) -> Verdict {
    let arr = &an.array;
    let d = an.diameter();
    let e = d / 2;
    let k = arr.valency();
    let tol = &an.tolerance;
    let p = arr.c(e) + z * arr.b(e);
    let q = arr.b(e) + arr.c(e) / z;

    let mut diag1: Vec<f64> = (0..e).map(|i| arr.a(i)).collect();
    diag1.push(k - p);
    let upper1: Vec<f64> = (0..e).map(|i| arr.b(i)).collect();
    let mut lower1: Vec<f64> = (1..e).map(|i| arr.c(i)).collect();
    lower1.push(p);

    let mut diag2 = vec![k - q];
    diag2.extend((e + 1..=d).map(|i| arr.a(i)));
    let mut upper2 = vec![q];
    upper2.extend((e + 1..d).map(|i| arr.b(i)));
    let lower2: Vec<f64> = (e + 1..=d).map(|i| arr.c(i)).collect();

    let mut ws = Vec::new();
    for (name, values) in [
        ("upper bordered matrix", tridiagonal_values(&diag1, &upper1, &lower1)),
        ("lower bordered matrix", tridiagonal_values(&diag2, &upper2, &lower2)),
    ] {
        match values {
            Ok(v) => {
                let m = match_spectra(targets, &v, tol);
                ws.push(Witness::scaled(format!("{name} spectrum = even-indexed eigenvalues"), m.max_distance, 0.0, 1.0, tol));
            }
            Err(_) => ws.push(Witness { label: format!("{name} spectrum is real"), lhs: 1.0, rhs: 0.0, bound: 0.0 }),
        }
    }
    Verdict::all(ws)
}

/// How a graph with `z = 1` resolves.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Resolution {
    Antipodal,
    Bipartite,
    AntipodalAndBipartite,
    Neither,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Z1Classification {
    /// `p^d_{e,e+1} = 0` (equivalently `p^{e+1}_{e,d} = 0`).
    pub p_zero: Verdict,
    pub resolution: Resolution,
    /// `d <= 4` but neither antipodal nor bipartite.
    pub contradiction: bool,
    /// The array passes the necessary conditions for a graph (no diagnostics, integral
    /// multiplicities, non-negative `p^k_ij`); the conclusions are only asserted then.
    pub applies: bool,
}

/// Necessary conditions for a graph: no array diagnostics, integral multiplicities and
/// non-negative `p^k_ij`. Consequences proved by counting in the graph are asserted only then.
pub fn graph_conditions(an: &Analysis) -> bool {
    an.array.diagnostics().is_empty()
        && an.multiplicities_integral()
        && IntersectionNumbers::exact(&an.array).negative_entries().is_empty()
}

/// For even-diameter arrays with `z = 1`.
pub fn check_z1_classification(an: &Analysis, half: &HalfAntipodalResult) -> Result<Z1Classification, Error> {
    let z = half.z.ok_or_else(|| Error::precondition("z = 1 classification needs the even-diameter result"))?;
    if !half.theorem || !an.tolerance.with_floor(1e-8).eq(z.sum, 1.0) {
        return Err(Error::precondition("z = 1 classification needs a half-antipodal array with z = 1"));
    }
    let d = an.diameter();
    let e = d / 2;
    let numbers = IntersectionNumbers::exact(&an.array);
    let exact = Tolerance { rel: 0.0, abs: 0.0 };
    let p_zero = Verdict::all(vec![
        Witness::compare(format!("p^{d}_({e},{}) = 0", e + 1), numbers.get_f64(d, e, e + 1), 0.0, &exact),
        Witness::compare(format!("p^{}_({e},{d}) = 0", e + 1), numbers.get_f64(e + 1, e, d), 0.0, &exact),
    ]);
    let imp = classify_imprimitivity(&an.array);
    let resolution = match (imp.antipodal, imp.bipartite) {
        (true, true) => Resolution::AntipodalAndBipartite,
        (true, false) => Resolution::Antipodal,
        (false, true) => Resolution::Bipartite,
        (false, false) => Resolution::Neither,
    };
    let applies = graph_conditions(an);
    Ok(Z1Classification { p_zero, contradiction: d <= 4 && resolution == Resolution::Neither, resolution, applies })
}

/// Spectrum `{k^1, √k^{n/2-k}, 0^{2k-2}, (-√k)^{n/2-k}, (-k)^1}` of a symmetric net's incidence graph.
pub fn symmetric_net_shape(an: &Analysis) -> Option<bool> {
    if an.diameter() != 4 {
        return None;
    }
    let k = an.array.valency();
    let n = an.array.n();
    let s = k.sqrt();
    let theta = [k, s, 0.0, -s, -k];
    let mult = [1.0, n / 2.0 - k, 2.0 * k - 2.0, n / 2.0 - k, 1.0];
    let tol = &an.tolerance;
    Some((0..5).all(|i| tol.is_zero(an.theta(i) - theta[i], k) && tol.eq(an.m(i), mult[i])))
}

/// Consequences of a distance-regular distance 1-or-2 graph.
#[derive(Debug, Clone, PartialEq)]
pub struct Distance12Consequences {
    /// Odd `d`: `P_{d+1-i,d} = P_{id}`; even `d`: `(θ_{d+1-i}+1) P_{id} = (θ_i+1) P_{d+1-i,d}`.
    pub pairing: Verdict,
    /// `θ_{d+1-i} = λ - μ - θ_i` for `i != (d+1)/2`.
    pub reflection: Verdict,
    /// Odd `d`: `θ_{(d+1)/2} = -1`.
    pub middle: Option<Witness>,
    /// Odd `d`: no eigenvalue strictly between `-1` and `λ - μ + 1`.
    pub gap: Option<Verdict>,
}

impl Distance12Consequences {
    pub fn holds(&self) -> bool {
        self.pairing.holds
            && self.reflection.holds
            && self.middle.as_ref().is_none_or(Witness::holds)
            && self.gap.as_ref().is_none_or(|g| g.holds)
    }
}

pub fn distance12_consequences(an: &Analysis) -> Result<Distance12Consequences, Error> {
    if !distance12_condition(&an.array)? {
        return Err(Error::precondition("the distance 1-or-2 graph is not distance-regular"));
    }
    let d = an.diameter();
    let tol = &an.tolerance;
    let arr = &an.array;
    let lm = arr.lambda() - arr.mu().expect("diameter >= 2");
    let p = |i: usize| an.p.get(i, d);
    let mut pairing = Vec::new();
    let mut reflection = Vec::new();
    for i in 1..=d {
        let j = d + 1 - i;
        if d % 2 == 1 {
            pairing.push(Witness::compare(format!("P[{j}][{d}] = P[{i}][{d}]"), p(j), p(i), tol));
        } else {
            let lhs = (an.theta(j) + 1.0) * p(i);
            let rhs = (an.theta(i) + 1.0) * p(j);
            pairing.push(Witness::compare(
                format!("(theta_{j}+1) P[{i}][{d}] = (theta_{i}+1) P[{j}][{d}]"),
                lhs,
                rhs,
                tol,
            ));
        }
        if 2 * i != d + 1 {
            let scale = an.theta(i).abs() + an.theta(j).abs() + lm.abs();
            reflection.push(Witness::scaled(
                format!("theta_{j} = lambda - mu - theta_{i}"),
                an.theta(j),
                lm - an.theta(i),
                scale,
                tol,
            ));
        }
    }
    let (middle, gap) = if d % 2 == 1 {
        let mid = d.div_ceil(2);
        let middle = Witness::compare(format!("theta_{mid} = -1"), an.theta(mid), -1.0, tol);
        let gap = (0..=d)
            .map(|i| {
                let t = an.theta(i);
                let depth = (t + 1.0).min(lm + 1.0 - t).max(0.0);
                Witness::scaled(format!("theta_{i} outside (-1, lambda - mu + 1)"), depth, 0.0, 1.0 + lm.abs(), tol)
            })
            .collect();
        (Some(middle), Some(Verdict::all(gap)))
    } else {
        (None, None)
    };
    Ok(Distance12Consequences { pairing: Verdict::all(pairing), reflection: Verdict::all(reflection), middle, gap })
}

/// The four index sets of even indices examined in the general theorem.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HPreset {
    /// `{0, 2, ..., d}`, even `d`.
    EvenWithZero,
    /// `{0, 2, ..., d-1}`, odd `d`.
    EvenWithZeroOdd,
    /// `{2, 4, ..., d}`, even `d`.
    EvenWithoutZero,
    /// `{2, 4, ..., d-1}`, odd `d`.
    EvenWithoutZeroOdd,
}

impl HPreset {
    pub const ALL: [HPreset; 4] =
        [HPreset::EvenWithZero, HPreset::EvenWithZeroOdd, HPreset::EvenWithoutZero, HPreset::EvenWithoutZeroOdd];

    pub fn name(self) -> &'static str {
        match self {
            HPreset::EvenWithZero => "{0,2,...,d}",
            HPreset::EvenWithZeroOdd => "{0,2,...,d-1}",
            HPreset::EvenWithoutZero => "{2,4,...,d}",
            HPreset::EvenWithoutZeroOdd => "{2,4,...,d-1}",
        }
    }

    /// Whether the preset is defined for this diameter.
    pub fn applies(self, d: usize) -> bool {
        match self {
            HPreset::EvenWithZero => d.is_multiple_of(2) && d >= 2,
            HPreset::EvenWithZeroOdd => d % 2 == 1 && d >= 3,
            HPreset::EvenWithoutZero => d.is_multiple_of(2) && d >= 4,
            HPreset::EvenWithoutZeroOdd => d % 2 == 1 && d >= 5,
        }
    }

    pub fn indices(self, d: usize) -> Vec<usize> {
        let start = match self {
            HPreset::EvenWithZero | HPreset::EvenWithZeroOdd => 0,
            HPreset::EvenWithoutZero | HPreset::EvenWithoutZeroOdd => 2,
        };
        (start..=d).step_by(2).collect()
    }
}

/// Outcome for one preset index set.
#[derive(Debug, Clone, PartialEq)]
pub struct PresetReport {
    pub preset: HPreset,
    pub h: Vec<usize>,
    pub check: CrossChecked,
    pub alpha: AlphaCoefficients,
    /// The expansion of `Π_{j∉H}(A - θ_j I)` is supported on `A_s`, `s` in this range.
    pub window: (usize, usize),
    /// Sets containing 0: the verdict against antipodality.
    pub imprimitivity_match: Option<bool>,
    /// `{2, 4, ..., d}`: `z` (of either sign) and the modified half array.
    pub z: Option<ZRoutes>,
    pub half_array: Option<GeneralizedArray>,
    pub containment: Option<SpectrumMatch>,
}

pub fn classify_h(an: &Analysis, preset: HPreset) -> Result<PresetReport, Error> {
    let d = an.diameter();
    if !preset.applies(d) {
        return Err(Error::precondition(format!("index set {} does not apply at diameter {d}", preset.name())));
    }
    let h = preset.indices(d);
    let check = equal_set_criterion(an, &h)?;
    let alpha = alpha_coefficients(&h, an)?;
    let window = (h.len() - 1, d + 1 - h.len());
    let imp: Imprimitivity = classify_imprimitivity(&an.array);
    let imprimitivity_match = match preset {
        HPreset::EvenWithZero | HPreset::EvenWithZeroOdd => {
            let expected = imp.antipodal || (imp.bipartite && h.len() == 2 && h == [0, d]);
            Some(check.direct.holds == expected)
        }
        _ => None,
    };
    let (z, half_array, containment) = if preset == HPreset::EvenWithoutZero {
        let e = d / 2;
        let rest: Vec<usize> = (0..=d).filter(|j| !h.contains(j)).collect();
        let zr = ZRoutes { sum: z_from_sum(an, e, &rest), trace: -alpha.alpha[e - 1] };
        let arr = &an.array;
        let mut c: Vec<f64> = (1..e).map(|i| arr.c(i)).collect();
        c.push(arr.c(e) + zr.sum * arr.b(e));
        let (half, spectrum) = half_spectrum((0..e).map(|i| arr.b(i)).collect(), c);
        let targets: Vec<f64> = rest.iter().map(|&j| an.theta(j)).collect();
        (Some(zr), half, Some(match_spectra(&targets, &spectrum, &an.tolerance)))
    } else {
        (None, None, None)
    };
    Ok(PresetReport { preset, h, check, alpha, window, imprimitivity_match, z, half_array, containment })
}

/// Column `d` alternates `k_d, -1` (antipodal); `θ_{d-i} = -θ_i` and `P_{d-i,j} = (-1)^j P_{ij}` (bipartite).
pub fn imprimitivity_invariants(an: &Analysis) -> Option<Verdict> {
    let imp = classify_imprimitivity(&an.array);
    if !imp.antipodal && !imp.bipartite {
        return None;
    }
    let d = an.diameter();
    let tol = &an.tolerance;
    let mut ws = Vec::new();
    if imp.antipodal {
        let kd = an.array.k(d);
        for i in 0..=d {
            let want = if i % 2 == 0 { kd } else { -1.0 };
            ws.push(Witness::compare(format!("antipodal P[{i}][{d}]"), an.p.get(i, d), want, tol));
        }
    }
    if imp.bipartite {
        for i in 0..=d {
            ws.push(Witness::scaled(
                format!("theta_{} = -theta_{i}", d - i),
                an.theta(d - i),
                -an.theta(i),
                an.theta(i).abs(),
                tol,
            ));
            for j in 0..=d {
                let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
                ws.push(Witness::compare(
                    format!("P[{}][{j}] = (-1)^{j} P[{i}][{j}]", d - i),
                    an.p.get(d - i, j),
                    sign * an.p.get(i, j),
                    tol,
                ));
            }
        }
    }
    Some(Verdict::all(ws))
}

/// A named criterion with both routes.
#[derive(Debug, Clone, PartialEq)]
pub struct NamedCheck {
    pub name: String,
    pub check: CrossChecked,
}

/// Everything known about column `d` of `P`.
#[derive(Debug, Clone, PartialEq)]
pub struct KneserReport {
    pub column_d: Vec<f64>,
    pub equal_classes: Vec<EqualClass>,
    pub distinct_count: usize,
    /// Entries nonzero and alternating in sign, starting positive.
    pub alternation: Verdict,
    pub pairs: EqualPairs,
    pub criteria: Vec<NamedCheck>,
    pub gamma4: Option<Gamma4>,
    pub clique: Option<CliqueCondition>,
    pub half_antipodal: Option<HalfAntipodalResult>,
    pub z1: Option<Z1Classification>,
    pub symmetric_net: Option<bool>,
    pub distance12: Option<Distance12Consequences>,
    pub presets: Vec<PresetReport>,
    pub imprimitivity: Imprimitivity,
    pub imprimitivity_checks: Option<Verdict>,
    /// See [`graph_conditions`].
    pub graph_conditions: bool,
    /// Human-readable notes on any pair of routes that disagree.
    pub disagreements: Vec<String>,
}

/// Runs every applicable criterion on column `d`.
pub fn kneser_spectrum(an: &Analysis, deep: bool) -> Result<KneserReport, Error> {
    let d = an.diameter();
    let graph = graph_conditions(an);
    let tol = &an.tolerance;
    let column_d = an.column_d();
    let classes = equal_classes(&column_d, tol);
    let kd = an.array.k(d);
    let alternation = Verdict::all(
        column_d
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                let signed = if i % 2 == 0 { v } else { -v };
                // how far the entry is from having the expected strict sign
                let deficit = if tol.is_zero(v, kd) || signed < 0.0 { 1.0 } else { 0.0 };
                Witness { label: format!("P[{i}][{d}] nonzero with sign (-1)^{i}"), lhs: deficit, rhs: 0.0, bound: 0.0 }
            })
            .collect(),
    );
    let pairs = equal_pairs(an);
    let mut disagreements: Vec<String> = pairs
        .disagreements
        .iter()
        .map(|(g, h)| format!("pair ({g},{h}): sum criterion and direct comparison disagree"))
        .collect();

    let mut criteria = Vec::new();
    match d {
        3 => criteria.push(NamedCheck { name: "d3: P13 = P33 iff theta_2 = -1".into(), check: criterion_d3(an)? }),
        4 => {
            let c = criterion_d4(an)?;
            criteria.push(NamedCheck { name: "d4: P14 = P34 iff (theta_2+1)(theta_4+1) = -b_1".into(), check: c.pair_13 });
            criteria.push(NamedCheck { name: "d4: P24 = P44 iff (theta_1+1)(theta_3+1) = -b_1".into(), check: c.pair_24 });
        }
        5 => {
            for f in 1..=5 {
                for g in f + 1..=5 {
                    let c = criterion_d5(an, f, g)?;
                    criteria.push(NamedCheck { name: format!("d5: P{f}5 = P{g}5"), check: c.check });
                    if let Some(s) = c.special {
                        criteria.push(NamedCheck { name: format!("d5: P{f}5 = P{g}5 with an eigenvalue -1"), check: s });
                    }
                }
            }
            criteria.push(NamedCheck { name: "d5: P15 = P35 = P55".into(), check: criterion_d5_odd_triple(an)? });
        }
        _ => {}
    }
    for c in &criteria {
        if !c.check.agree() {
            disagreements.push(format!("{}: criterion and direct comparison disagree", c.name));
        }
    }

    let (gamma4, clique) = if d == 4 {
        let g = gamma4_strongly_regular(an)?;
        if !g.agree() {
            disagreements.push("strongly regular Γ_4: conditions (i), (ii), (iii) disagree".into());
        }
        let c = antipodal_d4_clique_condition(an)?;
        if !c.agree() {
            disagreements.push("clique condition disagrees with antipodality".into());
        }
        (Some(g), Some(c))
    } else {
        (None, None)
    };

    let half_antipodal = if d >= 3 && d % 2 == 1 {
        Some(half_antipodal_odd(an)?)
    } else if d >= 2 && d.is_multiple_of(2) {
        Some(half_antipodal_even(an, deep)?)
    } else {
        None
    };
    let mut z1 = None;
    if let Some(half) = &half_antipodal {
        if !half.agree() {
            disagreements.push("half-antipodal theorem, moment criterion and direct comparison disagree".into());
        }
        if let (Some(z), true) = (half.z, half.holds()) {
            if !z.witness(tol).holds() {
                disagreements.push(format!("z routes disagree: {} vs {}", z.sum, z.trace));
            }
            if half.z_in_range != Some(true) {
                disagreements.push(format!("z = {} outside (0, 1]", z.sum));
            }
            if let Some(deep) = &half.deep {
                if !deep.holds {
                    disagreements.push("bordered matrices do not carry the even-indexed eigenvalues".into());
                }
            }
        }
        if let Ok(c) = check_z1_classification(an, half) {
            if c.applies && (!c.p_zero.holds || c.contradiction) {
                disagreements.push("z = 1 without the expected structure".into());
            }
            z1 = Some(c);
        }
    }

    let distance12 = if d >= 2 && distance12_condition(&an.array)? {
        let c = distance12_consequences(an)?;
        if !c.holds() {
            disagreements.push("distance 1-or-2 consequences fail".into());
        }
        Some(c)
    } else {
        None
    };

    let mut presets = Vec::new();
    for preset in HPreset::ALL {
        if preset.applies(d) {
            let r = classify_h(an, preset)?;
            if r.imprimitivity_match == Some(false) && graph {
                disagreements.push(format!("index set {} disagrees with antipodality", preset.name()));
            }
            if !r.check.agree() {
                disagreements.push(format!("index set {}: criterion and direct comparison disagree", preset.name()));
            }
            presets.push(r);
        }
    }

    let imprimitivity = classify_imprimitivity(&an.array);
    let imprimitivity_checks = imprimitivity_invariants(an);
    if imprimitivity_checks.as_ref().is_some_and(|v| !v.holds) {
        disagreements.push("antipodal/bipartite eigenmatrix pattern fails".into());
    }
    if !alternation.holds {
        disagreements.push(format!("column {d} does not alternate in sign"));
    }

    Ok(KneserReport {
        column_d,
        distinct_count: classes.len(),
        equal_classes: classes,
        alternation,
        pairs,
        criteria,
        gamma4,
        clique,
        half_antipodal,
        z1,
        symmetric_net: symmetric_net_shape(an),
        distance12,
        presets,
        imprimitivity,
        imprimitivity_checks,
        graph_conditions: graph,
        disagreements,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn an(text: &str) -> Analysis {
        Analysis::parse(text).unwrap()
    }

    #[test]
    fn coxeter_pairs_and_z() {
        let a = an("{3,2,2,1;1,1,1,2}");
        assert_eq!(equal_pairs(&a).pairs, vec![(1, 3)]);
        let half = half_antipodal_even(&a, true).unwrap();
        assert!(half.holds() && half.theorem && half.agree());
        let z = half.z.unwrap();
        assert!((z.sum - 0.5).abs() < 1e-12 && (z.trace - 0.5).abs() < 1e-12);
        assert_eq!(half.half_array_display().unwrap(), "{3,2;1,2}");
        assert!(half.deep.unwrap().holds);
        let g = gamma4_strongly_regular(&a).unwrap();
        assert!(g.agree() && !g.holds());
    }

    #[test]
    fn odd_o4_d3() {
        let a = an("{4,3,3;1,1,2}");
        let c = criterion_d3(&a).unwrap();
        assert!(c.holds() && c.agree());
        let half = half_antipodal_odd(&a).unwrap();
        assert!(half.theorem && half.agree());
        assert!(criterion_d3(&an("{4;1}")).is_err());
    }

    #[test]
    fn heawood_fails_d3() {
        let c = criterion_d3(&an("{3,2,2;1,1,3}")).unwrap();
        assert!(!c.criterion.holds && !c.direct.holds);
    }

    #[test]
    fn golay_classes() {
        let a = an("{22,20,18,2,1;1,2,9,20,22}");
        let r = kneser_spectrum(&a, true).unwrap();
        assert!(r.disagreements.is_empty(), "{:?}", r.disagreements);
        let members: Vec<Vec<usize>> = r.equal_classes.iter().map(|c| c.members.clone()).collect();
        assert_eq!(members, vec![vec![0, 2, 4], vec![1, 3, 5]]);
        assert!((r.equal_classes[0].value - 2.0).abs() < 1e-9);
        let half = r.half_antipodal.unwrap();
        assert!(half.theorem);
        for (got, want) in half.half_spectrum.iter().zip([22.0, 4.0, -5.0]) {
            assert!((got - want).abs() < 1e-9);
        }
    }

    #[test]
    fn o5_without_zero_gives_negative_z() {
        let a = an("{5,4,4,3;1,1,2,2}");
        let r = classify_h(&a, HPreset::EvenWithoutZero).unwrap();
        assert!(r.check.holds());
        let z = r.z.unwrap();
        assert!((z.sum + 0.5).abs() < 1e-12 && (z.trace + 0.5).abs() < 1e-9);
        assert_eq!(format!("{}", r.half_array.unwrap()), "{5,4;1,-1}");
        assert!(r.containment.unwrap().matched);
    }

    #[test]
    fn o6_distance12() {
        let a = an("{6,5,5,4,4;1,1,2,2,3}");
        let c = distance12_consequences(&a).unwrap();
        assert!(c.holds());
        let r = criterion_d5(&a, 1, 5).unwrap();
        assert!(r.check.holds() && r.special.unwrap().holds());
    }

    #[test]
    fn wells_z_one() {
        let a = an("{5,4,1,1;1,1,4,5}");
        let r = kneser_spectrum(&a, true).unwrap();
        assert!(r.disagreements.is_empty(), "{:?}", r.disagreements);
        let z1 = r.z1.unwrap();
        assert!(z1.applies && z1.p_zero.holds);
        assert_eq!(z1.resolution, Resolution::Antipodal);
        assert!(r.gamma4.unwrap().holds());
        assert!(r.clique.unwrap().verdict.holds);
    }

    #[test]
    fn antipodality_is_not_asserted_for_arrays_without_a_graph() {
        // P_03 = P_23 although the array is not antipodal; its multiplicities are irrational
        let a = an("{4,1,1;1,2,2}");
        let r = kneser_spectrum(&a, false).unwrap();
        assert!(!r.graph_conditions);
        assert!(r.presets.iter().any(|p| p.imprimitivity_match == Some(false)));
        assert!(r.disagreements.is_empty(), "{:?}", r.disagreements);
        assert!(kneser_spectrum(&an("{3,2,2,1;1,1,1,2}"), false).unwrap().graph_conditions);
    }

    #[test]
    fn z_one_is_not_asserted_for_arrays_without_a_graph() {
        // k_2 = 5/2
        let a = an("{5,1,1,1;1,2,2,4}");
        let r = kneser_spectrum(&a, false).unwrap();
        let z1 = r.z1.unwrap();
        assert!(!z1.applies);
        assert_eq!(z1.resolution, Resolution::Neither);
        assert!(r.disagreements.is_empty(), "{:?}", r.disagreements);
    }

    #[test]
    fn hypercube_q4_is_a_symmetric_net_shape() {
        let a = an("{4,3,2,1;1,2,3,4}");
        assert_eq!(symmetric_net_shape(&a), Some(true));
        let r = kneser_spectrum(&a, true).unwrap();
        assert_eq!(r.z1.unwrap().resolution, Resolution::AntipodalAndBipartite);
    }

    #[test]
    fn spectrum_matching_reports_distance() {
        let tol = Tolerance::default();
        let m = match_spectra(&[1.0, 2.0], &[2.0, 1.5], &tol);
        assert!(!m.matched);
        assert!((m.max_distance - 0.5).abs() < 1e-15);
        assert!(match_spectra(&[1.0, 2.0], &[2.0, 1.0], &tol).matched);
    }
}
