//! Named arrays and closed-form families with the values they are expected to reproduce.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
#[allow(unused_imports)]
use num_traits::Float;

use crate::arrays::{classify_imprimitivity, GeneralizedArray, IntersectionArray, IntersectionNumbers};
use crate::kneser::{self, kneser_spectrum, match_spectra};
use crate::poly::Poly;
use crate::spectral::sturm;
use crate::{oracle, Analysis, Error, Tolerance};

/// Agreement required between a published irrational value and the pipeline.
pub const VALUE_TOL: f64 = 1e-8;
/// Largest admissible change of the eigenvalues when `c_{d+1}` is varied.
pub const C_LAST_TOL: f64 = 1e-10;

const BUILTIN: &str = include_str!("../data/catalog.txt");

/// Evaluates numbers, `sqrt(..)`, `+ - * /` and parentheses.
pub fn eval_expr(text: &str) -> Result<f64, Error> {
    let mut p = ExprParser { s: text.as_bytes(), pos: 0, text };
    let v = p.sum()?;
    p.skip_ws();
    if p.pos != p.s.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(v)
}

struct ExprParser<'a> {
    s: &'a [u8],
    pos: usize,
    text: &'a str,
}

impl ExprParser<'_> {
    fn error(&self, reason: &str) -> Error {
        Error::parse(self.text, format!("{reason} at offset {}", self.pos))
    }

    fn skip_ws(&mut self) {
        while self.s.get(self.pos).is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn sum(&mut self) -> Result<f64, Error> {
        let mut v = self.product()?;
        while let Some(op @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let r = self.product()?;
            v = if op == b'+' { v + r } else { v - r };
        }
        Ok(v)
    }

    fn product(&mut self) -> Result<f64, Error> {
        let mut v = self.factor()?;
        while let Some(op @ (b'*' | b'/')) = self.peek() {
            self.pos += 1;
            let r = self.factor()?;
            if op == b'/' && r == 0.0 {
                return Err(self.error("division by zero"));
            }
            v = if op == b'*' { v * r } else { v / r };
        }
        Ok(v)
    }

    fn factor(&mut self) -> Result<f64, Error> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.factor()?)
            }
            Some(b'(') => {
                self.pos += 1;
                let v = self.sum()?;
                self.expect(b')')?;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() || c == b'.' => {
                let start = self.pos;
                while self.s.get(self.pos).is_some_and(|c| c.is_ascii_digit() || *c == b'.') {
                    self.pos += 1;
                }
                self.text[start..self.pos].parse().map_err(|_| self.error("bad number"))
            }
            Some(b's') if self.text[self.pos..].starts_with("sqrt") => {
                self.pos += 4;
                self.expect(b'(')?;
                let v = self.sum()?;
                self.expect(b')')?;
                if v < 0.0 {
                    return Err(self.error("square root of a negative number"));
                }
                Ok(v.sqrt())
            }
            _ => Err(self.error("expected a number, sqrt(..) or a parenthesis")),
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), Error> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected '{}'", c as char)))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProvenanceKind {
    /// Values printed in the literature.
    Published,
    /// Values computed here from a construction or closed form.
    Derived,
}

impl fmt::Display for ProvenanceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ProvenanceKind::Published => "published",
            ProvenanceKind::Derived => "derived",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Provenance {
    pub kind: ProvenanceKind,
    pub note: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Graph,
    Infeasible,
    Candidate,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Graph => "graph",
            Status::Infeasible => "infeasible",
            Status::Candidate => "candidate",
        })
    }
}

/// Parametric families with closed-form arrays.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Generalized octagon of order `(s, t)`.
    Octagon { s: u64, t: u64 },
    /// Generalized 12-gon of order `(q, 1)`.
    Dodecagon { q: u64 },
    /// Generalized 12-gon of order `(1, q)`, bipartite.
    DodecagonDual { q: u64 },
    /// Dual polar graph of diameter `d` over `GF(q)` with parameter `e`.
    DualPolar { d: u64, q: u64, e: u64 },
    /// Odd graph of diameter `d` (on `2d+1 choose d` vertices).
    Odd { d: u64 },
    /// Folded `(2d+1)`-cube.
    FoldedCube { d: u64 },
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::Octagon { s, t } => write!(f, "GO({s},{t})"),
            Family::Dodecagon { q } => write!(f, "G12({q},1)"),
            Family::DodecagonDual { q } => write!(f, "G12(1,{q})"),
            Family::DualPolar { d, q, e } => write!(f, "dual_polar({d},{q},{e})"),
            Family::Odd { d } => write!(f, "odd_graph({d})"),
            Family::FoldedCube { d } => write!(f, "folded_cube({d})"),
        }
    }
}

impl Family {
    /// Parses `GO(s,t)`, `G12(q,1)`, `G12(1,q)`, `dual_polar(d,q,e)`, `odd_graph(d)`, `folded_cube(d)`.
    pub fn parse(text: &str) -> Result<Family, Error> {
        let t = text.trim();
        let unsupported = |why: &str| Error::UnknownName(format!("{t} ({why})"));
        let (head, args) = t
            .strip_suffix(')')
            .and_then(|s| s.split_once('('))
            .ok_or_else(|| unsupported("expected family(parameters)"))?;
        let args: Vec<u64> = args
            .split(',')
            .map(|a| a.trim().parse::<u64>())
            .collect::<Result<_, _>>()
            .map_err(|_| unsupported("parameters must be non-negative integers"))?;
        let family = match (head.trim().to_ascii_lowercase().as_str(), args.as_slice()) {
            ("go", &[s, t]) if s >= 1 && t >= 1 => Family::Octagon { s, t },
            ("g12", &[q, 1]) if q >= 1 => Family::Dodecagon { q },
            ("g12", &[1, q]) if q >= 1 => Family::DodecagonDual { q },
            ("dual_polar", &[d, q, e]) if d >= 2 && q >= 2 && e <= 2 => Family::DualPolar { d, q, e },
            ("odd_graph", &[d]) if d >= 1 => Family::Odd { d },
            ("folded_cube", &[d]) if d >= 1 => Family::FoldedCube { d },
            _ => return Err(unsupported("unsupported family or parameters")),
        };
        // keep every entry well inside exact f64 integers
        let arr = family.array_ints()?;
        let n: f64 = IntersectionArray::from_ints(&arr.0, &arr.1)?.n();
        if n > 1e15 {
            return Err(unsupported("too large"));
        }
        Ok(family)
    }

    fn array_ints(&self) -> Result<(Vec<i64>, Vec<i64>), Error> {
        let big = || Error::UnknownName(format!("{self} (parameters too large)"));
        let pow = |q: u64, e: u64| -> Result<i64, Error> {
            let e = u32::try_from(e).map_err(|_| big())?;
            i64::try_from(q).ok().and_then(|q| q.checked_pow(e)).ok_or_else(big)
        };
        let ii = |x: u64| i64::try_from(x).map_err(|_| big());
        Ok(match *self {
            Family::Octagon { s, t } => {
                let (s, t) = (ii(s)?, ii(t)?);
                let st = s.checked_mul(t).ok_or_else(big)?;
                (vec![s * (t + 1), st, st, st], vec![1, 1, 1, t + 1])
            }
            Family::Dodecagon { q } => {
                let q = ii(q)?;
                (vec![2 * q, q, q, q, q, q], vec![1, 1, 1, 1, 1, 2])
            }
            Family::DodecagonDual { q } => {
                let q = ii(q)?;
                (vec![q + 1, q, q, q, q, q], vec![1, 1, 1, 1, 1, q + 1])
            }
            Family::DualPolar { d, q, e } => {
                let gauss = |i: u64| -> Result<i64, Error> { Ok((pow(q, i)? - 1) / (ii(q)? - 1)) };
                let b = (0..d)
                    .map(|i| pow(q, i + e)?.checked_mul(gauss(d - i)?).ok_or_else(big))
                    .collect::<Result<_, _>>()?;
                let c = (1..=d).map(gauss).collect::<Result<_, _>>()?;
                (b, c)
            }
            Family::Odd { d } => {
                let d = ii(d)?;
                ((0..d).map(|i| d + 1 - (i + 1) / 2).collect(), (1..=d).map(|i| (i + 1) / 2).collect())
            }
            Family::FoldedCube { d } => {
                let d = ii(d)?;
                ((0..d).map(|i| 2 * d + 1 - i).collect(), (1..=d).collect())
            }
        })
    }

    pub fn array(&self) -> Result<IntersectionArray, Error> {
        let (b, c) = self.array_ints()?;
        IntersectionArray::from_ints(&b, &c)
    }

    /// Eigenvalues in decreasing order, with multiplicities where a closed form is known.
    pub fn spectrum(&self) -> (Vec<f64>, Option<Vec<f64>>) {
        match *self {
            Family::Octagon { s, t } => {
                let (s, t) = (s as f64, t as f64);
                let r = (2.0 * s * t).sqrt();
                (vec![s * (t + 1.0), s - 1.0 + r, s - 1.0, s - 1.0 - r, -t - 1.0], None)
            }
            Family::Dodecagon { q } => {
                let q = q as f64;
                let (a, b) = ((3.0 * q).sqrt(), q.sqrt());
                (vec![2.0 * q, q - 1.0 + a, q - 1.0 + b, q - 1.0, q - 1.0 - b, q - 1.0 - a, -2.0], None)
            }
            Family::DodecagonDual { q } => {
                let q = q as f64;
                let (a, b) = ((3.0 * q).sqrt(), q.sqrt());
                (vec![q + 1.0, a, b, 0.0, -b, -a, -q - 1.0], None)
            }
            Family::DualPolar { d, q, e } => {
                let qf = q as f64;
                let gauss = |i: u64| (qf.powi(i as i32) - 1.0) / (qf - 1.0);
                ((0..=d).map(|i| qf.powi(e as i32) * gauss(d - i) - gauss(i)).collect(), None)
            }
            Family::Odd { d } => {
                let df = d as f64;
                let theta = (0..=d)
                    .map(|i| {
                        let i_f = i as f64;
                        if 2 * i < d + 1 { df + 1.0 - 2.0 * i_f } else { df - 2.0 * i_f }
                    })
                    .collect::<Vec<_>>();
                // the Kneser graph K(2d+1, d) has eigenvalue (-1)^j (d+1-j) with multiplicity
                // C(2d+1, j) - C(2d+1, j-1)
                let mult = theta
                    .iter()
                    .map(|&t| {
                        let j = (0..=d)
                            .find(|&j| {
                                let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
                                sign * (df + 1.0 - j as f64) == t
                            })
                            .expect("every eigenvalue has a Kneser index");
                        binomial(2 * d + 1, j) - if j == 0 { 0.0 } else { binomial(2 * d + 1, j - 1) }
                    })
                    .collect();
                (theta, Some(mult))
            }
            Family::FoldedCube { d } => {
                let df = d as f64;
                (
                    (0..=d).map(|i| 2.0 * df + 1.0 - 4.0 * i as f64).collect(),
                    Some((0..=d).map(|i| binomial(2 * d + 1, 2 * i)).collect()),
                )
            }
        }
    }

    pub fn vertex_count(&self) -> Option<f64> {
        match *self {
            Family::Odd { d } => Some(binomial(2 * d + 1, d)),
            Family::FoldedCube { d } => Some(2f64.powi(2 * d as i32)),
            _ => None,
        }
    }

    fn provenance(&self) -> Provenance {
        let (kind, note) = match self {
            Family::Octagon { .. } => (ProvenanceKind::Published, "generalized octagon: array, eigenvalues and z"),
            Family::Dodecagon { .. } => (ProvenanceKind::Published, "generalized 12-gon of order (q,1): array, P and z"),
            Family::DodecagonDual { .. } => {
                (ProvenanceKind::Derived, "dual generalized 12-gon: array from the dual order, checked against P")
            }
            Family::DualPolar { .. } => {
                (ProvenanceKind::Derived, "dual polar graph: Gaussian-binomial array, checked against column d of P")
            }
            Family::Odd { .. } => (ProvenanceKind::Published, "Odd graph: eigenvalues and vertex count"),
            Family::FoldedCube { .. } => {
                (ProvenanceKind::Derived, "folded cube: array checked against vertex count, eigenvalues, multiplicities")
            }
        };
        Provenance { kind, note: note.to_string() }
    }

    /// `P` as displayed for the generalized 12-gons.
    pub fn displayed_p(&self) -> Option<Vec<Vec<f64>>> {
        let (q, dual) = match *self {
            Family::Dodecagon { q } => (q as f64, false),
            Family::DodecagonDual { q } => (q as f64, true),
            _ => return None,
        };
        let (a, b) = ((3.0 * q).sqrt(), q.sqrt());
        let q2 = q * q;
        let q3 = q2 * q;
        Some(if !dual {
            vec![
                vec![1.0, 2.0 * q, 2.0 * q2, 2.0 * q3, 2.0 * q3 * q, 2.0 * q3 * q2, q3 * q3],
                vec![1.0, q - 1.0 + a, q + (q - 1.0) * a, 2.0 * q * (q - 1.0), -q2 + q * (q - 1.0) * a, q2 * (q - 1.0) - q2 * a, -q3],
                vec![1.0, q - 1.0 + b, -q + (q - 1.0) * b, -2.0 * q * b, -q2 - q * (q - 1.0) * b, -q2 * (q - 1.0) + q2 * b, q3],
                vec![1.0, q - 1.0, -2.0 * q, -q * (q - 1.0), 2.0 * q2, q2 * (q - 1.0), -q3],
                vec![1.0, q - 1.0 - b, -q - (q - 1.0) * b, 2.0 * q * b, -q2 + q * (q - 1.0) * b, -q2 * (q - 1.0) - q2 * b, q3],
                vec![1.0, q - 1.0 - a, q - (q - 1.0) * a, 2.0 * q * (q - 1.0), -q2 - q * (q - 1.0) * a, q2 * (q - 1.0) + q2 * a, -q3],
                vec![1.0, -2.0, 2.0, -2.0, 2.0, -2.0, 1.0],
            ]
        } else {
            let k = q + 1.0;
            vec![
                vec![1.0, k, q * k, q2 * k, q3 * k, q3 * q * k, q3 * q2],
                vec![1.0, a, 2.0 * q - 1.0, (q - 1.0) * a, q * (q - 2.0), -q * a, -q2],
                vec![1.0, b, -1.0, -k * b, -q2, q * b, q2],
                vec![1.0, 0.0, -k, 0.0, q * k, 0.0, -q2],
                vec![1.0, -b, -1.0, k * b, -q2, -q * b, q2],
                vec![1.0, -a, 2.0 * q - 1.0, -(q - 1.0) * a, q * (q - 2.0), q * a, -q2],
                vec![1.0, -k, q * k, -q2 * k, q3 * k, -q3 * q * k, q3 * q2],
            ]
        })
    }
}

fn binomial(n: u64, k: u64) -> f64 {
    if k > n {
        return 0.0;
    }
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64).round()
}

/// One `value^multiplicity` token; `value` is `None` for a `?` placeholder.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumTerm {
    pub text: String,
    pub value: Option<f64>,
    pub multiplicity: u64,
}

/// Eigenvalues at `indices` are the real roots of `coefficients` (highest degree first), in
/// decreasing order.
#[derive(Debug, Clone, PartialEq)]
pub struct RootSpec {
    pub indices: Vec<usize>,
    pub coefficients: Vec<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ImprimitivityFlags {
    pub antipodal: bool,
    pub bipartite: bool,
}

impl fmt::Display for ImprimitivityFlags {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match (self.antipodal, self.bipartite) {
            (false, false) => "primitive",
            (true, false) => "antipodal",
            (false, true) => "bipartite",
            (true, true) => "antipodal bipartite",
        })
    }
}

/// Values an entry must reproduce.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Expected {
    pub n: Option<u64>,
    pub spectrum: Option<Vec<SpectrumTerm>>,
    pub roots: Vec<RootSpec>,
    pub eigenvalues: Option<Vec<(String, f64)>>,
    pub pairs: Option<Vec<(usize, usize)>>,
    pub equal: Vec<Vec<usize>>,
    pub column_d: Option<Vec<f64>>,
    pub z: Option<(String, f64)>,
    pub z_without_zero: Option<(String, f64)>,
    pub half_array: Option<String>,
    pub lambda_mu: Option<(f64, f64)>,
    pub imprimitivity: Option<ImprimitivityFlags>,
    pub half_antipodal: Option<bool>,
    pub strongly_regular_gamma4: Option<bool>,
    pub clique: Option<bool>,
    pub distance12: Option<bool>,
    pub theta2_minus_one: Option<bool>,
}

impl Expected {
    /// Eigenvalues (decreasing) with multiplicities when given.
    pub fn eigenvalue_targets(&self) -> Result<Option<Vec<(f64, Option<u64>)>>, Error> {
        if let Some(terms) = &self.spectrum {
            let mut values: Vec<Option<f64>> = terms.iter().map(|t| t.value).collect();
            for spec in &self.roots {
                let roots = real_roots(&spec.coefficients)?;
                if roots.len() != spec.indices.len() {
                    return Err(Error::precondition(format!(
                        "roots line lists {} indices for a polynomial with {} real roots",
                        spec.indices.len(),
                        roots.len()
                    )));
                }
                for (&i, r) in spec.indices.iter().zip(roots) {
                    let slot = values
                        .get_mut(i)
                        .ok_or_else(|| Error::precondition(format!("roots index {i} outside the spectrum")))?;
                    *slot = Some(r);
                }
            }
            let out = values
                .iter()
                .zip(terms)
                .map(|(v, t)| {
                    v.map(|v| (v, Some(t.multiplicity)))
                        .ok_or_else(|| Error::precondition(format!("spectrum value {} is never resolved", t.text)))
                })
                .collect::<Result<Vec<_>, _>>()?;
            return Ok(Some(out));
        }
        Ok(self.eigenvalues.as_ref().map(|e| e.iter().map(|(_, v)| (*v, None)).collect()))
    }
}

fn real_roots(coefficients: &[f64]) -> Result<Vec<f64>, Error> {
    let poly = Poly::new(coefficients.iter().rev().copied().collect());
    let mut roots = Vec::new();
    for z in sturm::polynomial_roots(&poly) {
        if z.im.abs() > 1e-7 * z.re.abs().max(1.0) {
            return Err(Error::NonRealEigenvalues { max_imaginary: z.im.abs() });
        }
        roots.push(sturm::polish_by_bisection(|x| poly.eval(&x), z.re));
    }
    roots.sort_by(|a, b| b.total_cmp(a));
    Ok(roots)
}

#[derive(Debug, Clone, PartialEq)]
pub struct CatalogEntry {
    pub name: String,
    pub aliases: Vec<String>,
    pub provenance: Provenance,
    pub array: IntersectionArray,
    pub status: Status,
    pub family: Option<Family>,
    pub expected: Expected,
    /// Name of an explicit graph for the oracle.
    pub oracle: Option<String>,
}

impl CatalogEntry {
    pub fn matches(&self, name: &str) -> bool {
        let key = name.trim().to_ascii_lowercase();
        self.name == key || self.aliases.contains(&key)
    }
}

/// Builds an entry from a family's closed forms.
pub fn make_family(family: Family) -> Result<CatalogEntry, Error> {
    let array = family.array()?;
    let (theta, mult) = family.spectrum();
    let mut expected = Expected {
        n: family.vertex_count().map(|n| n as u64),
        ..Expected::default()
    };
    match mult {
        Some(m) => {
            expected.spectrum = Some(
                theta
                    .iter()
                    .zip(m)
                    .map(|(&t, m)| SpectrumTerm { text: format!("{t}"), value: Some(t), multiplicity: m as u64 })
                    .collect(),
            )
        }
        None => expected.eigenvalues = Some(theta.iter().map(|&t| (format!("{t}"), t)).collect()),
    }
    match family {
        Family::Octagon { s, t } => {
            expected.z = Some((format!("1/{s}"), 1.0 / s as f64));
            expected.half_array = Some(format!("{{{},{};1,{}}}", s * (t + 1), s * t, t + 1));
            expected.half_antipodal = Some(true);
        }
        Family::Dodecagon { q } => {
            expected.z = Some((format!("1/{q}"), 1.0 / q as f64));
            expected.half_array = Some(format!("{{{},{q},{q};1,1,2}}", 2 * q));
            expected.equal = vec![vec![1, 3, 5], vec![2, 4]];
            expected.half_antipodal = Some(true);
        }
        Family::DodecagonDual { .. } => {
            expected.equal = vec![vec![1, 3, 5], vec![2, 4]];
            expected.imprimitivity = Some(ImprimitivityFlags { antipodal: false, bipartite: true });
        }
        Family::Odd { .. } | Family::FoldedCube { .. } => expected.distance12 = Some(true),
        Family::DualPolar { e, .. } => {
            if e == 1 {
                expected.distance12 = Some(true);
            }
        }
    }
    Ok(CatalogEntry {
        name: family.to_string(),
        aliases: Vec::new(),
        provenance: family.provenance(),
        array,
        status: Status::Graph,
        family: Some(family),
        expected,
        oracle: None,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct Catalog {
    entries: Vec<CatalogEntry>,
}

impl Catalog {
    pub fn builtin() -> Catalog {
        Catalog::parse(BUILTIN).expect("the built-in catalog parses")
    }

    pub fn parse(text: &str) -> Result<Catalog, Error> {
        let mut entries: Vec<CatalogEntry> = Vec::new();
        let mut block: Vec<(usize, &str)> = Vec::new();
        for (no, line) in text.lines().enumerate().chain(core::iter::once((usize::MAX, ""))) {
            let line = line.trim();
            if line.starts_with('#') {
                continue;
            }
            if line.is_empty() {
                if !block.is_empty() {
                    let entry = parse_entry(&block)?;
                    if entries.iter().any(|e| entry.matches(&e.name) || e.aliases.iter().any(|a| entry.matches(a))) {
                        return Err(Error::parse(&entry.name, "duplicate catalog name or alias"));
                    }
                    entries.push(entry);
                    block.clear();
                }
                continue;
            }
            block.push((no + 1, line));
        }
        Ok(Catalog { entries })
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn names(&self) -> Vec<&str> {
        self.entries.iter().map(|e| e.name.as_str()).collect()
    }

    /// Looks up a name or alias (case-insensitive).
    pub fn get(&self, name: &str) -> Result<&CatalogEntry, Error> {
        self.entries.iter().find(|e| e.matches(name)).ok_or_else(|| Error::UnknownName(name.trim().to_string()))
    }

    /// A named entry, or a family instance such as `GO(2,4)`.
    pub fn resolve(&self, name: &str) -> Result<CatalogEntry, Error> {
        match self.get(name) {
            Ok(e) => Ok(e.clone()),
            Err(err) => match Family::parse(name) {
                Ok(f) => make_family(f),
                Err(_) => Err(err),
            },
        }
    }
}

fn parse_entry(lines: &[(usize, &str)]) -> Result<CatalogEntry, Error> {
    let bad = |no: usize, line: &str, why: &str| Error::parse(line, format!("catalog line {no}: {why}"));
    let mut name = None;
    let mut aliases = Vec::new();
    let mut provenance = None;
    let mut array = None;
    let mut status = Status::Graph;
    let mut family = None;
    let mut oracle = None;
    let mut ex = Expected::default();
    for &(no, line) in lines {
        let (key, value) = line.split_once(':').ok_or_else(|| bad(no, line, "expected `key: value`"))?;
        let value = value.trim();
        let fail = |why: &str| bad(no, line, why);
        let flag = || match value {
            "yes" => Ok(Some(true)),
            "no" => Ok(Some(false)),
            _ => Err(fail("expected yes or no")),
        };
        let number = |s: &str| eval_expr(s).map_err(|_| fail("bad value"));
        match key.trim() {
            "name" => name = Some(value.to_ascii_lowercase()),
            "aliases" => aliases = value.split(',').map(|a| a.trim().to_ascii_lowercase()).collect(),
            "provenance" => {
                let (kind, note) = value.split_once(char::is_whitespace).unwrap_or((value, ""));
                let kind = match kind {
                    "published" => ProvenanceKind::Published,
                    "derived" => ProvenanceKind::Derived,
                    _ => return Err(fail("provenance must be published or derived")),
                };
                provenance = Some(Provenance { kind, note: note.trim().to_string() });
            }
            "array" => array = Some(IntersectionArray::parse(value)?),
            "status" => {
                status = match value {
                    "graph" => Status::Graph,
                    "infeasible" => Status::Infeasible,
                    "candidate" => Status::Candidate,
                    _ => return Err(fail("unknown status")),
                }
            }
            "family" => family = Some(Family::parse(value)?),
            "oracle" => oracle = Some(value.to_string()),
            "n" => ex.n = Some(value.parse().map_err(|_| fail("bad vertex count"))?),
            "spectrum" => {
                let terms = value
                    .split_whitespace()
                    .map(|tok| {
                        let (v, m) = tok.rsplit_once('^').ok_or_else(|| fail("spectrum tokens are value^multiplicity"))?;
                        let value = if v == "?" { None } else { Some(number(v)?) };
                        let multiplicity = m.parse().map_err(|_| fail("bad multiplicity"))?;
                        Ok(SpectrumTerm { text: v.to_string(), value, multiplicity })
                    })
                    .collect::<Result<Vec<_>, Error>>()?;
                ex.spectrum = Some(terms);
            }
            "roots" => {
                let (idx, coeffs) = value.split_once('=').ok_or_else(|| fail("expected indices = coefficients"))?;
                let indices = idx
                    .split(',')
                    .map(|i| i.trim().parse().map_err(|_| fail("bad index")))
                    .collect::<Result<_, _>>()?;
                let coefficients = coeffs.split_whitespace().map(number).collect::<Result<_, _>>()?;
                ex.roots.push(RootSpec { indices, coefficients });
            }
            "eigenvalues" => {
                ex.eigenvalues = Some(
                    value.split_whitespace().map(|t| Ok((t.to_string(), number(t)?))).collect::<Result<_, Error>>()?,
                )
            }
            "pairs" => {
                ex.pairs = Some(
                    value
                        .split_whitespace()
                        .map(|p| {
                            let (g, h) = p.split_once('-').ok_or_else(|| fail("pairs are g-h"))?;
                            Ok((g.parse().map_err(|_| fail("bad index"))?, h.parse().map_err(|_| fail("bad index"))?))
                        })
                        .collect::<Result<_, Error>>()?,
                )
            }
            "equal" => {
                ex.equal = value
                    .split('}')
                    .map(|s| s.trim().trim_start_matches('{'))
                    .filter(|s| !s.is_empty())
                    .map(|s| s.split(',').map(|i| i.trim().parse().map_err(|_| fail("bad index"))).collect())
                    .collect::<Result<_, Error>>()?
            }
            "column-d" => ex.column_d = Some(value.split_whitespace().map(number).collect::<Result<_, _>>()?),
            "z" => ex.z = Some((value.to_string(), number(value)?)),
            "z-without-zero" => ex.z_without_zero = Some((value.to_string(), number(value)?)),
            "half-array" => {
                GeneralizedArray::parse(value)?;
                ex.half_array = Some(value.to_string());
            }
            "lambda-mu" => {
                let v: Vec<f64> = value.split_whitespace().map(number).collect::<Result<_, _>>()?;
                match v.as_slice() {
                    [l, m] => ex.lambda_mu = Some((*l, *m)),
                    _ => return Err(fail("expected two numbers")),
                }
            }
            "imprimitivity" => {
                let words: Vec<&str> = value.split_whitespace().collect();
                if words.iter().any(|w| !["primitive", "antipodal", "bipartite"].contains(w)) {
                    return Err(fail("unknown imprimitivity"));
                }
                ex.imprimitivity = Some(ImprimitivityFlags {
                    antipodal: words.contains(&"antipodal"),
                    bipartite: words.contains(&"bipartite"),
                });
            }
            "half-antipodal" => ex.half_antipodal = flag()?,
            "strongly-regular-gamma4" => ex.strongly_regular_gamma4 = flag()?,
            "clique" => ex.clique = flag()?,
            "distance12" => ex.distance12 = flag()?,
            "theta2-minus-one" => ex.theta2_minus_one = flag()?,
            _ => return Err(fail("unknown key")),
        }
    }
    let first = lines.first().map(|l| l.1).unwrap_or("");
    let name = name.ok_or_else(|| Error::parse(first, "catalog entry without a name"))?;
    let provenance = provenance.ok_or_else(|| Error::parse(&name, "catalog entry without provenance"))?;
    let array = array.ok_or_else(|| Error::parse(&name, "catalog entry without an array"))?;
    Ok(CatalogEntry { name, aliases, provenance, array, status, family, expected: ex, oracle })
}

/// Outcome of one claim about an entry.
#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub entry: String,
    pub claim: String,
    /// Where the expected value comes from.
    pub anchor: String,
    pub passed: bool,
    pub detail: String,
}

fn close(x: f64, y: f64) -> bool {
    (x - y).abs() <= VALUE_TOL * x.abs().max(y.abs()).max(1.0)
}

struct Recorder<'a> {
    entry: &'a CatalogEntry,
    checks: Vec<Check>,
}

impl Recorder<'_> {
    fn push(&mut self, claim: impl Into<String>, anchor: &str, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            entry: self.entry.name.clone(),
            claim: claim.into(),
            anchor: anchor.to_string(),
            passed,
            detail: detail.into(),
        });
    }

    fn expected(&mut self, claim: impl Into<String>, passed: bool, detail: impl Into<String>) {
        let anchor = format!("{}: {}", self.entry.provenance.kind, self.entry.provenance.note);
        self.push(claim, &anchor, passed, detail);
    }

    fn invariant(&mut self, claim: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.push(claim, "invariant", passed, detail);
    }

    fn fail(&mut self, claim: impl Into<String>, err: &Error) {
        self.push(claim, "pipeline", false, format!("{err}"));
    }
}

/// Checks every expected value, the structural invariants, the family formulas and the oracle.
pub fn check_entry(entry: &CatalogEntry, tol: &Tolerance, deep: bool) -> Vec<Check> {
    let mut rec = Recorder { entry, checks: Vec::new() };
    let an = match Analysis::new(entry.array.clone(), *tol) {
        Ok(an) => an,
        Err(e) => {
            rec.fail("symbolic pipeline runs", &e);
            return rec.checks;
        }
    };
    check_expected(&mut rec, &an, deep);
    check_invariants(&mut rec, &an);
    if let Some(f) = entry.family {
        match f.array() {
            Ok(a) => rec.expected(format!("array equals the {f} closed form"), a == entry.array, format!("{a}")),
            Err(e) => rec.fail(format!("array of {f}"), &e),
        }
        for (claim, passed, detail) in closed_form_checks(&f, &an) {
            rec.push(claim, &format!("{}: {}", f.provenance().kind, f.provenance().note), passed, detail);
        }
    }
    if let Some(name) = &entry.oracle {
        let outcome = oracle::build_graph(name).and_then(|g| oracle::verify_against_array(&g, tol));
        match outcome {
            Ok(r) => {
                rec.invariant(
                    format!("explicit graph {name} has this array"),
                    r.array == entry.array,
                    format!("{}", r.array),
                );
                rec.invariant(
                    format!("explicit graph {name} reproduces P, the spectrum and the equal classes"),
                    r.passed,
                    format!(
                        "max discrepancy {:.3e}, spectrum {}, classes {}",
                        r.max_discrepancy, r.spectrum_matches, r.classes_match
                    ),
                );
            }
            Err(e) => rec.fail(format!("explicit graph {name}"), &e),
        }
    }
    rec.checks
}

fn check_expected(rec: &mut Recorder<'_>, an: &Analysis, deep: bool) {
    let ex = &rec.entry.expected;
    let d = an.diameter();
    if let Some(n) = ex.n {
        rec.expected("vertex count", close(an.array.n(), n as f64), format!("n = {}", an.array.n()));
    }
    match ex.eigenvalue_targets() {
        Ok(Some(targets)) => {
            let count_ok = targets.len() == d + 1;
            rec.expected("number of distinct eigenvalues", count_ok, format!("{} expected, {} computed", targets.len(), d + 1));
            if count_ok {
                let worst = targets.iter().enumerate().map(|(i, t)| (an.theta(i) - t.0).abs()).fold(0.0, f64::max);
                let ok = targets.iter().enumerate().all(|(i, t)| close(an.theta(i), t.0));
                rec.expected("eigenvalues", ok, format!("max deviation {worst:.3e}"));
                if targets.iter().all(|t| t.1.is_some()) {
                    let ok = targets.iter().enumerate().all(|(i, t)| {
                        let m = an.m(i);
                        (m - m.round()).abs() <= 1e-6 && m.round() == t.1.unwrap_or(0) as f64
                    });
                    let found: Vec<String> = (0..=d).map(|i| format!("{}", an.m(i))).collect();
                    rec.expected("multiplicities", ok, found.join(" "));
                }
            }
        }
        Ok(None) => {}
        Err(e) => rec.fail("expected spectrum resolves", &e),
    }
    let report = match kneser_spectrum(an, deep) {
        Ok(r) => r,
        Err(e) => {
            rec.fail("kneser report", &e);
            return;
        }
    };
    if let Some(pairs) = &ex.pairs {
        let mut want = pairs.clone();
        want.sort_unstable();
        let direct: Vec<(usize, usize)> =
            report.pairs.checks.iter().filter(|c| c.check.direct.holds).map(|c| (c.g, c.h)).collect();
        let fmt = |p: &[(usize, usize)]| p.iter().map(|(g, h)| format!("{g}-{h}")).collect::<Vec<_>>().join(" ");
        rec.expected(
            "pairs with equal column-d entries (sum criterion)",
            report.pairs.pairs == want,
            fmt(&report.pairs.pairs),
        );
        rec.expected("pairs with equal column-d entries (direct)", direct == want, fmt(&direct));
    }
    for set in &ex.equal {
        let label = format!("P_hd coincide for h in {set:?}");
        if set.iter().any(|&h| h > d) {
            rec.expected(label, false, "index out of range");
            continue;
        }
        let direct = report.equal_classes.iter().any(|c| set.iter().all(|h| c.members.contains(h)));
        rec.expected(format!("{label} (direct)"), direct, format!("{:?}", report.column_d));
        match kneser::equal_set_criterion(an, set) {
            Ok(c) => rec.expected(
                format!("{label} (moment criterion)"),
                c.criterion.holds,
                format!("worst ratio {:.3e}", c.criterion.worst_ratio()),
            ),
            Err(e) => rec.fail(label, &e),
        }
    }
    if let Some(col) = &ex.column_d {
        let ok = col.len() == d + 1 && col.iter().enumerate().all(|(i, &v)| close(an.p.get(i, d), v));
        rec.expected("column d of P", ok, format!("{:?}", report.column_d));
    }
    if let Some(flags) = ex.imprimitivity {
        let imp = classify_imprimitivity(&an.array);
        let found = ImprimitivityFlags { antipodal: imp.antipodal, bipartite: imp.bipartite };
        rec.expected("imprimitivity", found == flags, format!("{found}"));
    }
    if let Some((l, m)) = ex.lambda_mu {
        let ok = close(an.array.lambda(), l) && an.array.mu().is_some_and(|mu| close(mu, m));
        rec.expected("lambda and mu", ok, format!("{} {:?}", an.array.lambda(), an.array.mu()));
    }
    let half = report.half_antipodal.as_ref();
    if let Some(want) = ex.half_antipodal {
        match half {
            Some(h) => {
                rec.expected("half-antipodal (direct comparison)", h.holds() == want, format!("{}", h.holds()));
                rec.expected("half-antipodal (spectral theorem)", h.theorem == want, format!("{}", h.theorem));
                rec.expected("half-antipodal (moment criterion)", h.criterion.holds == want, format!("{}", h.criterion.holds));
            }
            None => rec.expected("half-antipodal", false, "not defined at this diameter"),
        }
    }
    if let Some((text, z)) = &ex.z {
        match half.and_then(|h| h.z) {
            Some(zr) => {
                rec.expected(format!("z = {text} (eigenvalue sum)"), close(zr.sum, *z), format!("{}", zr.sum));
                rec.expected(format!("z = {text} (trace)"), close(zr.trace, *z), format!("{}", zr.trace));
            }
            None => rec.expected(format!("z = {text}"), false, "no z at this diameter"),
        }
    }
    if let Some((text, z)) = &ex.z_without_zero {
        let preset = report.presets.iter().find(|p| p.preset == kneser::HPreset::EvenWithoutZero);
        match preset.and_then(|p| p.z) {
            Some(zr) => {
                rec.expected(format!("z = {text} for {{2,4,...,d}} (eigenvalue sum)"), close(zr.sum, *z), format!("{}", zr.sum));
                rec.expected(format!("z = {text} for {{2,4,...,d}} (trace)"), close(zr.trace, *z), format!("{}", zr.trace));
            }
            None => rec.expected(format!("z = {text} for {{2,4,...,d}}"), false, "index set does not apply"),
        }
    }
    if let Some(text) = &ex.half_array {
        let found = half.and_then(|h| h.half_array.as_ref());
        let ok = match (GeneralizedArray::parse(text), found) {
            (Ok(want), Some(got)) => {
                want.diameter() == got.diameter()
                    && want.b_entries().iter().zip(got.b_entries()).all(|(x, y)| close(*x, *y))
                    && want.c_entries().iter().zip(got.c_entries()).all(|(x, y)| close(*x, *y))
            }
            _ => false,
        };
        let shown = found.map(|a| format!("{a}")).unwrap_or_else(|| "none".into());
        rec.expected(format!("half array {text}"), ok, shown);
        if let Some(h) = half {
            rec.expected("half array carries the even-indexed eigenvalues", h.containment.matched, format!("{:.3e}", h.containment.max_distance));
        }
    }
    if let Some(want) = ex.strongly_regular_gamma4 {
        match &report.gamma4 {
            Some(g) => {
                rec.expected("distance-4 graph strongly regular: condition (i)", g.i.holds == want, format!("{}", g.i.holds));
                rec.expected("distance-4 graph strongly regular: condition (ii)", g.ii.holds == want, format!("{}", g.ii.holds));
                rec.expected("distance-4 graph strongly regular: condition (iii)", g.iii.holds == want, format!("{}", g.iii.holds));
            }
            None => rec.expected("distance-4 graph strongly regular", false, "diameter is not 4"),
        }
    }
    if let Some(want) = ex.clique {
        match &report.clique {
            Some(c) => rec.expected("clique condition", c.verdict.holds == want, format!("{}", c.verdict.holds)),
            None => rec.expected("clique condition", false, "diameter is not 4"),
        }
    }
    if let Some(want) = ex.distance12 {
        match crate::arrays::distance12_condition(&an.array) {
            Ok(cond) => rec.expected("distance 1-or-2 graph is distance-regular", cond == want, format!("{cond}")),
            Err(e) => rec.fail("distance 1-or-2 condition", &e),
        }
        if want {
            match &report.distance12 {
                Some(c) => rec.expected(
                    "distance 1-or-2 consequences",
                    c.holds(),
                    format!(
                        "pairing {}, reflection {}, middle {:?}",
                        c.pairing.holds,
                        c.reflection.holds,
                        c.middle.as_ref().map(|w| w.holds())
                    ),
                ),
                None => rec.expected("distance 1-or-2 consequences", false, "not evaluated"),
            }
        }
    }
    if let Some(want) = ex.theta2_minus_one {
        match kneser::criterion_d3(an) {
            Ok(c) => {
                rec.expected("theta_2 = -1", c.criterion.holds == want, format!("theta_2 = {}", an.theta(2)));
                rec.expected("P_13 = P_33", c.direct.holds == want, format!("{} {}", an.p.get(1, 3), an.p.get(3, 3)));
            }
            Err(e) => rec.fail("diameter-3 criterion", &e),
        }
    }
    if !report.disagreements.is_empty() {
        rec.invariant("criteria agree with direct comparisons", false, report.disagreements.join("; "));
    } else {
        rec.invariant("criteria agree with direct comparisons", true, "");
    }
}

fn check_invariants(rec: &mut Recorder<'_>, an: &Analysis) {
    let ids = an.identities();
    rec.invariant("power sums, PQ = nI and sign changes", ids.holds, format!("worst ratio {:.3e}", ids.worst_ratio()));
    match an.interlacing() {
        Ok(ok) => rec.invariant("zeros of consecutive p_i interlace", ok, ""),
        Err(e) => rec.fail("interlacing", &e),
    }
    let k = an.array.valency();
    match an.c_last_sensitivity(7.0) {
        Ok(dev) => rec.invariant(
            "eigenvalues do not depend on c_{d+1}",
            dev <= C_LAST_TOL * k.max(1.0),
            format!("max change {dev:.3e}"),
        ),
        Err(e) => rec.fail("c_{d+1} sensitivity", &e),
    }
    let numbers = IntersectionNumbers::exact(&an.array);
    let failures = numbers.identity_failures(&an.array);
    rec.invariant("intersection-number identities", failures.is_empty(), failures.join("; "));
    if rec.entry.status == Status::Graph {
        let neg = numbers.negative_entries();
        rec.invariant("intersection numbers non-negative", neg.is_empty(), format!("{neg:?}"));
        let m: Vec<String> = (0..=an.diameter()).map(|i| format!("{}", an.m(i))).collect();
        rec.invariant("multiplicities are integers", an.multiplicities_integral(), m.join(" "));
    }
}

/// Family identities on the computed `P`: `(claim, passed, detail)`.
pub fn closed_form_checks(family: &Family, an: &Analysis) -> Vec<(String, bool, String)> {
    let mut out = Vec::new();
    let d = an.diameter();
    let (theta, mult) = family.spectrum();
    let found: Vec<f64> = (0..=d).map(|i| an.theta(i)).collect();
    let m = match_spectra(&theta, &found, &Tolerance { rel: VALUE_TOL, abs: VALUE_TOL });
    out.push((format!("{family}: eigenvalues from the closed form"), m.matched && theta.len() == d + 1, format!("{found:?}")));
    if let Some(mult) = mult {
        let ok = mult.len() == d + 1 && (0..=d).all(|i| (an.m(i) - mult[i]).abs() <= 1e-6);
        out.push((format!("{family}: multiplicities from the closed form"), ok, format!("{mult:?}")));
    }
    if let Some(n) = family.vertex_count() {
        out.push((format!("{family}: vertex count"), close(an.array.n(), n), format!("{}", an.array.n())));
    }
    match *family {
        Family::DualPolar { d: dd, q, e } => {
            let qf = q as f64;
            let (dd, e) = (dd as i64, e as i64);
            let mut worst = 0.0f64;
            let mut exact = true;
            for i in 0..=dd {
                let exp = dd * (dd - 1) / 2 + dd * e - i * (dd + e - i);
                let sign = if i % 2 == 0 { 1.0 } else { -1.0 };
                let want = sign * qf.powi(exp as i32);
                let got = an.p.get(i as usize, d);
                worst = worst.max((got - want).abs());
                exact &= got.round() == want && (got - got.round()).abs() <= 1e-9 * want.abs().max(1.0);
            }
            out.push((format!("{family}: P_id = (-1)^i q^(d(d-1)/2+de-i(d+e-i))"), exact, format!("max deviation {worst:.3e}")));
            if (dd + e) % 2 == 0 {
                let pairs: Vec<(usize, usize)> = (1..=d)
                    .flat_map(|h| (h + 1..=d).map(move |i| (h, i)))
                    .filter(|&(h, i)| (h + i) as i64 == dd + e)
                    .collect();
                let ok = pairs.iter().all(|&(h, i)| an.column_d_equal(h, i).holds());
                out.push((format!("{family}: P_hd = P_id for h + i = d + e"), ok, format!("{pairs:?}")));
            }
            if e == 1 {
                out.push(reflection(family, an));
            }
        }
        Family::Dodecagon { q } | Family::DodecagonDual { q } => {
            let p = family.displayed_p().expect("12-gons have a displayed P");
            let mut worst = 0.0f64;
            let mut ok = d == 6;
            if ok {
                for (i, row) in p.iter().enumerate() {
                    for (j, &want) in row.iter().enumerate() {
                        let got = an.p.get(i, j);
                        worst = worst.max((got - want).abs());
                        ok &= close(got, want);
                    }
                }
            }
            out.push((format!("{family}: P equals the displayed matrix"), ok, format!("max deviation {worst:.3e}")));
            let qf = q as f64;
            let powers = (0..=d).all(|i| {
                let sq = an.p.get(i, d).powi(2);
                if q == 1 {
                    return close(sq, 1.0);
                }
                let j = (sq.ln() / qf.ln()).round();
                close(sq, qf.powi(j as i32))
            });
            out.push((format!("{family}: squares of P_id are powers of q"), powers, format!("{:?}", an.column_d())));
        }
        Family::Odd { .. } | Family::FoldedCube { .. } => out.push(reflection(family, an)),
        Family::Octagon { .. } => {}
    }
    out
}

/// Consequences of a distance-regular distance 1-or-2 graph: `P_{d+1-i,d} = P_id` for odd `d`,
/// `(θ_{d+1-i} + 1) P_id = (θ_i + 1) P_{d+1-i,d}` for even `d`.
fn reflection(family: &Family, an: &Analysis) -> (String, bool, String) {
    let d = an.diameter();
    let ok = (1..=d).all(|i| {
        let (j, pi, pj) = (d + 1 - i, an.p.get(i, d), an.p.get(d + 1 - i, d));
        if d % 2 == 1 {
            close(pj, pi)
        } else {
            close((an.theta(j) + 1.0) * pi, (an.theta(i) + 1.0) * pj)
        }
    });
    let claim = if d % 2 == 1 { "P_(d+1-i)d = P_id" } else { "(theta_(d+1-i)+1) P_id = (theta_i+1) P_(d+1-i)d" };
    (format!("{family}: {claim}"), ok, format!("{:?}", an.column_d()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expressions() {
        assert_eq!(eval_expr("1/2").unwrap(), 0.5);
        assert!((eval_expr("(-1+sqrt(2))").unwrap() - (2f64.sqrt() - 1.0)).abs() < 1e-15);
        assert_eq!(eval_expr("-3*2 - -1").unwrap(), -5.0);
        assert!(eval_expr("sqrt(-1)").is_err());
        assert!(eval_expr("1/0").is_err());
        assert!(eval_expr("2 3").is_err());
    }

    #[test]
    fn lookup() {
        let cat = Catalog::builtin();
        let e = cat.get("Coxeter").unwrap();
        assert_eq!(format!("{}", e.array), "{3,2,2,1;1,1,1,2}");
        assert_eq!(e.expected.n, Some(28));
        assert_eq!(cat.get("pgaml-3-4-2").unwrap().name, "unital");
        assert!(matches!(cat.get("nosuch"), Err(Error::UnknownName(_))));
        assert_eq!(cat.resolve("GO(2,4)").unwrap().array, cat.get("go-2-4").unwrap().array);
    }

    #[test]
    fn families() {
        let arr = |s: &str| format!("{}", Family::parse(s).unwrap().array().unwrap());
        assert_eq!(arr("GO(2,4)"), "{10,8,8,8;1,1,1,5}");
        assert_eq!(arr("G12(3,1)"), "{6,3,3,3,3,3;1,1,1,1,1,2}");
        assert_eq!(arr("G12(1,2)"), "{3,2,2,2,2,2;1,1,1,1,1,3}");
        assert_eq!(arr("dual_polar(4,2,2)"), "{60,56,48,32;1,3,7,15}");
        assert_eq!(arr("odd_graph(5)"), "{6,5,5,4,4;1,1,2,2,3}");
        assert_eq!(arr("folded_cube(5)"), "{11,10,9,8,7;1,2,3,4,5}");
        assert!(Family::parse("dual_polar(3,2,3)").is_err());
        assert!(Family::parse("hexagon(2)").is_err());
        let (theta, _) = Family::parse("dual_polar(4,2,2)").unwrap().spectrum();
        assert_eq!(theta, vec![60.0, 27.0, 9.0, -3.0, -15.0]);
    }

    #[test]
    fn biggs_smith_roots_resolve() {
        let cat = Catalog::builtin();
        let t = cat.get("biggs-smith").unwrap().expected.eigenvalue_targets().unwrap().unwrap();
        assert_eq!(t.len(), 8);
        assert!((t[1].0 - (1.0 + 17f64.sqrt()) / 2.0).abs() < 1e-12);
        assert!(t.windows(2).all(|w| w[0].0 > w[1].0));
    }

    #[test]
    fn bad_catalog_text() {
        assert!(Catalog::parse("name: x\nprovenance: derived note\narray: {2;1}\nbogus: 1\n").is_err());
        assert!(Catalog::parse("name: x\narray: {2;1}\n").is_err());
        let dup = "name: x\nprovenance: derived a\narray: {2;1}\n\nname: y\naliases: x\nprovenance: derived a\narray: {2;1}\n";
        assert!(Catalog::parse(dup).is_err());
    }
}
