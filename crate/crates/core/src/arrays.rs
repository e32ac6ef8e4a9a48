//! Intersection arrays `{b0,...,b(d-1); c1,...,cd}` and the parameters derived from them.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
#[allow(unused_imports)]
use num_traits::Float;
use num_traits::{One, Signed, Zero};

use crate::rational::{self, Rational};
use crate::{Analysis, Error};

/// The two halves of an array as written, before any validation.
#[derive(Debug, Clone, PartialEq)]
pub struct RawArray {
    pub b: Vec<Rational>,
    pub c: Vec<Rational>,
}

impl RawArray {
    /// Parses `{b0,b1,...;c1,...}`. Whitespace is free; entries are integers or `p/q`.
    pub fn parse(text: &str) -> Result<Self, Error> {
        let t = text.trim();
        let inner = t
            .strip_prefix('{')
            .and_then(|s| s.strip_suffix('}'))
            .ok_or_else(|| Error::parse(text, "array must be enclosed in braces"))?;
        let (bs, cs) = inner
            .split_once(';')
            .ok_or_else(|| Error::parse(text, "missing ';' between the b and c halves"))?;
        if cs.contains(';') {
            return Err(Error::parse(text, "more than one ';'"));
        }
        let side = |s: &str| -> Result<Vec<Rational>, Error> {
            if s.trim().is_empty() {
                return Ok(Vec::new());
            }
            s.split(',').map(rational::parse).collect()
        };
        let b = side(bs).map_err(|e| reparent(e, text))?;
        let c = side(cs).map_err(|e| reparent(e, text))?;
        Ok(RawArray { b, c })
    }
}

fn reparent(err: Error, text: &str) -> Error {
    match err {
        Error::Parse { input, reason } => Error::parse(text, format!("entry {input:?}: {reason}")),
        other => other,
    }
}

/// A feasibility condition that a graph array violates. Violations never abort analysis.
#[derive(Debug, Clone, PartialEq)]
pub enum Diagnostic {
    FirstCNotOne(Rational),
    NegativeA { index: usize, value: Rational },
    BIncreases { index: usize },
    CDecreases { index: usize },
    NonIntegralEntry { side: char, index: usize },
    NonIntegralValency { index: usize, value: Rational },
    NonIntegralOrder(Rational),
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diagnostic::FirstCNotOne(c) => write!(f, "c1 = {} (graph arrays have c1 = 1)", rational::show(c)),
            Diagnostic::NegativeA { index, value } => {
                write!(f, "a{index} = {} is negative", rational::show(value))
            }
            Diagnostic::BIncreases { index } => write!(f, "b{} < b{}", index, index + 1),
            Diagnostic::CDecreases { index } => write!(f, "c{} > c{}", index, index + 1),
            Diagnostic::NonIntegralEntry { side, index } => write!(f, "{side}{index} is not an integer"),
            Diagnostic::NonIntegralValency { index, value } => {
                write!(f, "k{index} = {} is not an integer", rational::show(value))
            }
            Diagnostic::NonIntegralOrder(n) => write!(f, "n = {} is not an integer", rational::show(n)),
        }
    }
}

/// A validated intersection array with positive entries and its derived parameters.
///
/// `b_d = 0` and `c_0 = 0` are implicit: the stored halves have exactly `d` entries each.
#[derive(Debug, Clone, PartialEq)]
pub struct IntersectionArray {
    b: Vec<Rational>,
    c: Vec<Rational>,
    a: Vec<Rational>,
    k: Vec<Rational>,
    n: Rational,
    bf: Vec<f64>,
    cf: Vec<f64>,
    af: Vec<f64>,
    kf: Vec<f64>,
    diagnostics: Vec<Diagnostic>,
}

impl IntersectionArray {
    pub fn new(b: Vec<Rational>, c: Vec<Rational>) -> Result<Self, Error> {
        if b.is_empty() && c.is_empty() {
            return Err(Error::EmptyArray);
        }
        if b.len() != c.len() {
            return Err(Error::LengthMismatch { b: b.len(), c: c.len() });
        }
        for (side, values) in [('b', &b), ('c', &c)] {
            let offset = if side == 'b' { 0 } else { 1 };
            if let Some(i) = values.iter().position(|v| !v.is_positive()) {
                return Err(Error::NonPositiveEntry { side, index: i + offset });
            }
        }
        let d = b.len();
        let zero = Rational::zero();
        let b_at = |i: usize| if i < d { b[i].clone() } else { zero.clone() };
        let c_at = |i: usize| if i == 0 { zero.clone() } else { c[i - 1].clone() };
        let a: Vec<Rational> = (0..=d).map(|i| &b[0] - b_at(i) - c_at(i)).collect();
        let mut k = vec![Rational::one()];
        for i in 0..d {
            let next = &k[i] * &b[i] / &c[i];
            k.push(next);
        }
        let n = k.iter().fold(Rational::zero(), |acc, v| acc + v);

        let mut diagnostics = Vec::new();
        if !c[0].is_one() {
            diagnostics.push(Diagnostic::FirstCNotOne(c[0].clone()));
        }
        for (index, value) in a.iter().enumerate() {
            if value.is_negative() {
                diagnostics.push(Diagnostic::NegativeA { index, value: value.clone() });
            }
        }
        for i in 0..d.saturating_sub(1) {
            if b[i] < b[i + 1] {
                diagnostics.push(Diagnostic::BIncreases { index: i });
            }
            if c[i] > c[i + 1] {
                diagnostics.push(Diagnostic::CDecreases { index: i + 1 });
            }
        }
        for (i, v) in b.iter().enumerate() {
            if !v.is_integer() {
                diagnostics.push(Diagnostic::NonIntegralEntry { side: 'b', index: i });
            }
        }
        for (i, v) in c.iter().enumerate() {
            if !v.is_integer() {
                diagnostics.push(Diagnostic::NonIntegralEntry { side: 'c', index: i + 1 });
            }
        }
        for (index, value) in k.iter().enumerate() {
            if !value.is_integer() {
                diagnostics.push(Diagnostic::NonIntegralValency { index, value: value.clone() });
            }
        }
        if !n.is_integer() {
            diagnostics.push(Diagnostic::NonIntegralOrder(n.clone()));
        }

        let bf = (0..=d).map(|i| rational::to_f64(&b_at(i))).collect();
        let cf = (0..=d).map(|i| rational::to_f64(&c_at(i))).collect();
        let af = a.iter().map(rational::to_f64).collect();
        let kf = k.iter().map(rational::to_f64).collect();
        Ok(IntersectionArray { b, c, a, k, n, bf, cf, af, kf, diagnostics })
    }

    pub fn from_ints(b: &[i64], c: &[i64]) -> Result<Self, Error> {
        Self::new(b.iter().map(|&v| rational::int(v)).collect(), c.iter().map(|&v| rational::int(v)).collect())
    }

    pub fn parse(text: &str) -> Result<Self, Error> {
        let raw = RawArray::parse(text)?;
        Self::new(raw.b, raw.c)
    }

    pub fn diameter(&self) -> usize {
        self.b.len()
    }

    pub fn b(&self, i: usize) -> f64 {
        self.bf[i]
    }

    pub fn c(&self, i: usize) -> f64 {
        self.cf[i]
    }

    pub fn a(&self, i: usize) -> f64 {
        self.af[i]
    }

    pub fn k(&self, i: usize) -> f64 {
        self.kf[i]
    }

    pub fn n(&self) -> f64 {
        rational::to_f64(&self.n)
    }

    pub fn b_exact(&self, i: usize) -> Rational {
        self.b.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn c_exact(&self, i: usize) -> Rational {
        if i == 0 {
            Rational::zero()
        } else {
            self.c[i - 1].clone()
        }
    }

    pub fn a_exact(&self, i: usize) -> &Rational {
        &self.a[i]
    }

    pub fn k_exact(&self, i: usize) -> &Rational {
        &self.k[i]
    }

    pub fn n_exact(&self) -> &Rational {
        &self.n
    }

    pub fn valencies(&self) -> &[f64] {
        &self.kf
    }

    /// `k = b0`.
    pub fn valency(&self) -> f64 {
        self.bf[0]
    }

    /// `λ = a1`.
    pub fn lambda(&self) -> f64 {
        self.af[1]
    }

    /// `μ = c2`, defined for diameter at least 2.
    pub fn mu(&self) -> Option<f64> {
        (self.diameter() >= 2).then(|| self.cf[2])
    }

    pub fn diagnostics(&self) -> &[Diagnostic] {
        &self.diagnostics
    }

    /// Product `b0 b1 ... b(d-1)`.
    pub fn b_product(&self) -> Rational {
        self.b.iter().fold(Rational::one(), |acc, v| acc * v)
    }

    /// Product `c1 c2 ... cr`.
    pub fn c_product(&self, r: usize) -> Rational {
        self.c[..r].iter().fold(Rational::one(), |acc, v| acc * v)
    }

    pub fn to_generalized(&self) -> GeneralizedArray {
        GeneralizedArray {
            b: self.bf[..self.diameter()].to_vec(),
            c: self.cf[1..].to_vec(),
        }
    }

    /// The tridiagonal matrix `L` with rows `(c_i, a_i, b_i)`, exactly.
    pub fn tridiagonal_exact(&self) -> Vec<Vec<Rational>> {
        let d = self.diameter();
        let mut l = vec![vec![Rational::zero(); d + 1]; d + 1];
        for i in 0..=d {
            l[i][i] = self.a[i].clone();
            if i > 0 {
                l[i][i - 1] = self.c_exact(i);
            }
            if i < d {
                l[i][i + 1] = self.b[i].clone();
            }
        }
        l
    }
}

impl fmt::Display for IntersectionArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_halves(f, self.b.iter().map(rational::show), self.c.iter().map(rational::show))
    }
}

fn write_halves(
    f: &mut fmt::Formatter<'_>,
    b: impl Iterator<Item = String>,
    c: impl Iterator<Item = String>,
) -> fmt::Result {
    f.write_str("{")?;
    for (i, v) in b.enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        f.write_str(&v)?;
    }
    f.write_str(";")?;
    for (i, v) in c.enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        f.write_str(&v)?;
    }
    f.write_str("}")
}

/// `validate_array`: build an array from raw halves, returning its feasibility warnings.
pub fn validate_array(raw: RawArray) -> Result<(IntersectionArray, Vec<Diagnostic>), Error> {
    let arr = IntersectionArray::new(raw.b, raw.c)?;
    let diags = arr.diagnostics.clone();
    Ok((arr, diags))
}

/// An array with arbitrary nonzero real entries, used only for half-array spectra.
///
/// No feasibility checks and no valencies: `{5,4;1,-1}` is a legitimate value here.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneralizedArray {
    b: Vec<f64>,
    c: Vec<f64>,
}

impl GeneralizedArray {
    pub fn new(b: Vec<f64>, c: Vec<f64>) -> Result<Self, Error> {
        if b.is_empty() && c.is_empty() {
            return Err(Error::EmptyArray);
        }
        if b.len() != c.len() {
            return Err(Error::LengthMismatch { b: b.len(), c: c.len() });
        }
        if let Some(i) = b.iter().position(|v| *v == 0.0 || !v.is_finite()) {
            return Err(Error::ZeroEntry { side: 'b', index: i });
        }
        if let Some(i) = c.iter().position(|v| *v == 0.0 || !v.is_finite()) {
            return Err(Error::ZeroEntry { side: 'c', index: i + 1 });
        }
        Ok(GeneralizedArray { b, c })
    }

    pub fn parse(text: &str) -> Result<Self, Error> {
        let raw = RawArray::parse(text)?;
        Self::new(
            raw.b.iter().map(rational::to_f64).collect(),
            raw.c.iter().map(rational::to_f64).collect(),
        )
    }

    pub fn diameter(&self) -> usize {
        self.b.len()
    }

    pub fn b(&self, i: usize) -> f64 {
        self.b.get(i).copied().unwrap_or(0.0)
    }

    pub fn c(&self, i: usize) -> f64 {
        if i == 0 {
            0.0
        } else {
            self.c[i - 1]
        }
    }

    pub fn a(&self, i: usize) -> f64 {
        self.b[0] - self.b(i) - self.c(i)
    }

    pub fn b_entries(&self) -> &[f64] {
        &self.b
    }

    pub fn c_entries(&self) -> &[f64] {
        &self.c
    }
}

impl fmt::Display for GeneralizedArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_halves(f, self.b.iter().map(|v| format!("{v}")), self.c.iter().map(|v| format!("{v}")))
    }
}

/// Result of `classify_imprimitivity`.
#[derive(Debug, Clone, PartialEq)]
pub struct Imprimitivity {
    pub bipartite: bool,
    pub antipodal: bool,
    /// Antipodal class size `r = k_d + 1`.
    pub cover_index: Option<Rational>,
}

/// Bipartite iff every `a_i` vanishes; antipodal iff `b_i = c_{d-i}` for all `i != floor(d/2)`.
pub fn classify_imprimitivity(arr: &IntersectionArray) -> Imprimitivity {
    let d = arr.diameter();
    let bipartite = arr.a.iter().all(Zero::is_zero);
    let antipodal = (0..d).filter(|&i| i != d / 2).all(|i| arr.b_exact(i) == arr.c_exact(d - i));
    let cover_index = antipodal.then(|| &arr.k[d] + Rational::one());
    Imprimitivity { bipartite, antipodal, cover_index }
}

/// Whether the distance 1-or-2 graph is distance-regular:
/// `b(i-1) + b(i) + c(i) + c(i+1) = 2k + μ - λ` for `1 <= i <= d-1`.
pub fn distance12_condition(arr: &IntersectionArray) -> Result<bool, Error> {
    let d = arr.diameter();
    if d < 2 {
        return Err(Error::precondition("distance 1-or-2 condition needs diameter at least 2"));
    }
    let two = rational::int(2);
    let target = &two * arr.b_exact(0) + arr.c_exact(2) - &arr.a[1];
    Ok((1..d).all(|i| arr.b_exact(i - 1) + arr.b_exact(i) + arr.c_exact(i) + arr.c_exact(i + 1) == target))
}

/// Intersection numbers `p^k_{ij}`, stored exactly.
#[derive(Debug, Clone, PartialEq)]
pub struct IntersectionNumbers {
    d: usize,
    p: Vec<Rational>,
    /// Largest deviation between the exact recurrence route and the eigenmatrix route.
    pub route_deviation: f64,
}

impl IntersectionNumbers {
    /// Exact tensor from the regular representation: `B_1 = L` and
    /// `c(i+1) B(i+1) = L B(i) - a(i) B(i) - b(i-1) B(i-1)`, with `(B_i)_{kj} = p^k_{ij}`.
    pub fn exact(arr: &IntersectionArray) -> Self {
        let d = arr.diameter();
        let size = d + 1;
        let l = arr.tridiagonal_exact();
        let mut mats: Vec<Vec<Vec<Rational>>> = Vec::with_capacity(size);
        let mut identity = vec![vec![Rational::zero(); size]; size];
        for (i, row) in identity.iter_mut().enumerate() {
            row[i] = Rational::one();
        }
        mats.push(identity);
        if d >= 1 {
            mats.push(l.clone());
        }
        for i in 1..d {
            let prod = mat_mul(&l, &mats[i]);
            let ci = arr.c_exact(i + 1);
            let bi = arr.b_exact(i - 1);
            let next = (0..size)
                .map(|r| {
                    (0..size)
                        .map(|s| (&prod[r][s] - &arr.a[i] * &mats[i][r][s] - &bi * &mats[i - 1][r][s]) / &ci)
                        .collect()
                })
                .collect();
            mats.push(next);
        }
        let mut p = vec![Rational::zero(); size * size * size];
        for (i, m) in mats.iter().enumerate() {
            for (k, row) in m.iter().enumerate() {
                for (j, v) in row.iter().enumerate() {
                    p[(k * size + i) * size + j] = v.clone();
                }
            }
        }
        IntersectionNumbers { d, p, route_deviation: 0.0 }
    }

    pub fn diameter(&self) -> usize {
        self.d
    }

    /// `p^k_{ij}`.
    pub fn get(&self, k: usize, i: usize, j: usize) -> &Rational {
        let s = self.d + 1;
        &self.p[(k * s + i) * s + j]
    }

    pub fn get_f64(&self, k: usize, i: usize, j: usize) -> f64 {
        rational::to_f64(self.get(k, i, j))
    }

    /// Exact check of the standard identities; returns the names of any that fail.
    pub fn identity_failures(&self, arr: &IntersectionArray) -> Vec<String> {
        let s = self.d + 1;
        let mut failures = Vec::new();
        for k in 0..s {
            for i in 0..s {
                let mut row_sum = Rational::zero();
                for j in 0..s {
                    let v = self.get(k, i, j);
                    if v != self.get(k, j, i) {
                        failures.push(format!("p^{k}_{{{i}{j}}} != p^{k}_{{{j}{i}}}"));
                    }
                    if arr.k_exact(k) * v != arr.k_exact(i) * self.get(i, k, j) {
                        failures.push(format!("k{k} p^{k}_{{{i}{j}}} != k{i} p^{i}_{{{k}{j}}}"));
                    }
                    row_sum += v;
                }
                if &row_sum != arr.k_exact(i) {
                    failures.push(format!("sum_j p^{k}_{{{i}j}} != k{i}"));
                }
            }
        }
        for i in 0..s {
            for j in 0..s {
                let expected = if i == j { arr.k_exact(i).clone() } else { Rational::zero() };
                if self.get(0, i, j) != &expected {
                    failures.push(format!("p^0_{{{i}{j}}} != delta k{i}"));
                }
            }
        }
        failures
    }

    /// Entries that are negative (a necessary condition for a graph to exist).
    pub fn negative_entries(&self) -> Vec<(usize, usize, usize)> {
        let s = self.d + 1;
        let mut out = Vec::new();
        for k in 0..s {
            for i in 0..s {
                for j in 0..s {
                    if self.get(k, i, j).is_negative() {
                        out.push((k, i, j));
                    }
                }
            }
        }
        out
    }
}

fn mat_mul(x: &[Vec<Rational>], y: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let s = x.len();
    (0..s)
        .map(|r| {
            (0..s)
                .map(|c| (0..s).fold(Rational::zero(), |acc, t| acc + &x[r][t] * &y[t][c]))
                .collect()
        })
        .collect()
}

/// `intersection_numbers`: the spectral route `p^k_{ij} = Σ_l m_l P_li P_lj P_lk / (n k_k)`,
/// cross-checked against the exact three-term recurrence.
pub fn intersection_numbers(analysis: &Analysis) -> Result<IntersectionNumbers, Error> {
    let arr = &analysis.array;
    let mut numbers = IntersectionNumbers::exact(arr);
    let tol = analysis.tolerance;
    let d = arr.diameter();
    let m = &analysis.spectrum.multiplicities;
    let p = &analysis.p;
    let n = arr.n();
    let mut worst = 0.0f64;
    for k in 0..=d {
        for i in 0..=d {
            for j in 0..=d {
                let mut sum = 0.0;
                let mut scale = 0.0;
                for l in 0..=d {
                    let term = m[l] * p.get(l, i) * p.get(l, j) * p.get(l, k);
                    sum += term;
                    scale += term.abs();
                }
                let denom = n * arr.k(k);
                let spectral = sum / denom;
                let exact = numbers.get_f64(k, i, j);
                let dev = (spectral - exact).abs();
                let bound = tol.bound(scale / denom).max(tol.bound(exact));
                worst = worst.max(dev / (scale / denom).max(exact.abs()).max(1.0));
                if dev > bound {
                    return Err(Error::consistency(
                        format!("intersection number p^{k}_{{{i}{j}}}"),
                        dev,
                        bound,
                    ));
                }
            }
        }
    }
    numbers.route_deviation = worst;
    Ok(numbers)
}

/// Checks the three-term product rule on the first row: `p^k_{1j}` against `b`, `a`, `c`.
pub fn three_term_rule_holds(numbers: &IntersectionNumbers, arr: &IntersectionArray) -> bool {
    let d = arr.diameter();
    for j in 0..=d {
        for k in 0..=d {
            let expected = if j >= 1 && k == j - 1 {
                arr.b_exact(j - 1)
            } else if k == j {
                arr.a[j].clone()
            } else if k == j + 1 {
                arr.c_exact(j + 1)
            } else {
                Rational::zero()
            };
            if d >= 1 && numbers.get(k, 1, j) != &expected {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn coxeter_parameters() {
        let arr = IntersectionArray::parse("{3,2,2,1;1,1,1,2}").unwrap();
        assert_eq!(arr.diameter(), 4);
        let a: Vec<_> = (0..=4).map(|i| arr.a_exact(i).clone()).collect();
        assert_eq!(a, [0, 0, 0, 1, 1].map(int));
        let k: Vec<_> = (0..=4).map(|i| arr.k_exact(i).clone()).collect();
        assert_eq!(k, [1, 3, 6, 12, 6].map(int));
        assert_eq!(arr.n_exact(), &int(28));
        assert!(arr.diagnostics().is_empty());
    }

    #[test]
    fn odd_graph_order() {
        let arr = IntersectionArray::parse("{5,4,4,3;1,1,2,2}").unwrap();
        assert_eq!(arr.n_exact(), &int(126));
    }

    #[test]
    fn complete_graph_array() {
        let arr = IntersectionArray::parse("{6;1}").unwrap();
        assert_eq!(arr.diameter(), 1);
        assert_eq!(arr.n_exact(), &int(7));
        assert_eq!(arr.a_exact(1), &int(5));
        assert_eq!(arr.mu(), None);
    }

    #[test]
    fn grammar_accepts_whitespace_and_fractions() {
        let raw = RawArray::parse(" { 3 , 5/2 ; 1, 2 } ").unwrap();
        assert_eq!(raw.b, vec![int(3), rational::frac(5, 2)]);
        assert_eq!(raw.c, vec![int(1), int(2)]);
        let arr = IntersectionArray::new(raw.b, raw.c).unwrap();
        assert!(arr
            .diagnostics()
            .iter()
            .any(|d| matches!(d, Diagnostic::NonIntegralEntry { side: 'b', index: 1 })));
        assert_eq!(format!("{arr}"), "{3,5/2;1,2}");
    }

    #[test]
    fn grammar_errors() {
        assert!(matches!(IntersectionArray::parse("{;}"), Err(Error::EmptyArray)));
        assert!(matches!(IntersectionArray::parse("3,2;1,1"), Err(Error::Parse { .. })));
        assert!(matches!(IntersectionArray::parse("{3,2,1;1,1}"), Err(Error::LengthMismatch { .. })));
        assert!(matches!(IntersectionArray::parse("{3,a;1,1}"), Err(Error::Parse { .. })));
        assert!(matches!(
            IntersectionArray::parse("{5,4;1,-1}"),
            Err(Error::NonPositiveEntry { side: 'c', index: 2 })
        ));
        assert!(GeneralizedArray::parse("{5,4;1,-1}").is_ok());
        assert!(GeneralizedArray::parse("{5,0;1,1}").is_err());
    }

    #[test]
    fn candidate_arrays_warn_instead_of_failing() {
        let arr = IntersectionArray::parse("{3,4;2,1}").unwrap();
        let diags = arr.diagnostics();
        assert!(diags.iter().any(|d| matches!(d, Diagnostic::FirstCNotOne(_))));
        assert!(diags.iter().any(|d| matches!(d, Diagnostic::BIncreases { index: 0 })));
        assert!(diags.iter().any(|d| matches!(d, Diagnostic::CDecreases { index: 1 })));
        assert!(diags.iter().any(|d| matches!(d, Diagnostic::NegativeA { .. })));
    }

    #[test]
    fn imprimitivity() {
        let golay = IntersectionArray::parse("{22,20,18,2,1;1,2,9,20,22}").unwrap();
        let imp = classify_imprimitivity(&golay);
        assert!(imp.antipodal && !imp.bipartite);
        assert_eq!(imp.cover_index, Some(int(3)));
        let wells = IntersectionArray::parse("{5,4,1,1;1,1,4,5}").unwrap();
        let imp = classify_imprimitivity(&wells);
        assert!(imp.antipodal && !imp.bipartite);
        let square = IntersectionArray::parse("{2,1;1,2}").unwrap();
        let imp = classify_imprimitivity(&square);
        assert!(imp.antipodal && imp.bipartite);
        let coxeter = IntersectionArray::parse("{3,2,2,1;1,1,1,2}").unwrap();
        let imp = classify_imprimitivity(&coxeter);
        assert!(!imp.antipodal && !imp.bipartite && imp.cover_index.is_none());
    }

    #[test]
    fn distance12() {
        let odd6 = IntersectionArray::parse("{6,5,5,4,4;1,1,2,2,3}").unwrap();
        assert!(distance12_condition(&odd6).unwrap());
        let folded = IntersectionArray::parse("{11,10,9,8,7;1,2,3,4,5}").unwrap();
        assert!(distance12_condition(&folded).unwrap());
        let coxeter = IntersectionArray::parse("{3,2,2,1;1,1,1,2}").unwrap();
        assert!(!distance12_condition(&coxeter).unwrap());
        assert!(distance12_condition(&IntersectionArray::parse("{4;1}").unwrap()).is_err());
    }

    #[test]
    fn exact_intersection_numbers_of_petersen() {
        let arr = IntersectionArray::parse("{3,2;1,1}").unwrap();
        let p = IntersectionNumbers::exact(&arr);
        assert_eq!(p.get(2, 1, 1), &int(1));
        assert_eq!(p.get(0, 1, 1), &int(3));
        assert_eq!(p.get(1, 2, 2), &int(4));
        assert!(p.identity_failures(&arr).is_empty());
        assert!(three_term_rule_holds(&p, &arr));
    }
}
