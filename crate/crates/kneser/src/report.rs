//! Serializable analysis report.

use kneser_core::arrays::{classify_imprimitivity, distance12_condition, IntersectionNumbers};
use kneser_core::kneser::{kneser_spectrum, HalfAntipodalResult, KneserReport, Parity, Resolution};
use kneser_core::rational;
use kneser_core::spectral::ExactEigenvalue;
use kneser_core::verdict::{CrossChecked, Verdict, Witness};
use kneser_core::{Analysis, Error};
use serde::{Deserialize, Serialize};

use crate::surd;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub input: InputEcho,
    pub spectrum: SpectrumReport,
    #[serde(rename = "P")]
    pub p: Vec<Vec<f64>>,
    #[serde(rename = "Q")]
    pub q: Vec<Vec<f64>>,
    pub kneser: KneserJson,
    pub classification: Classification,
    pub warnings: Vec<String>,
    pub tool_version: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InputEcho {
    /// What was typed on the command line.
    pub text: String,
    /// Catalog entry the input resolved to, if any.
    pub catalog_name: Option<String>,
    pub array: String,
    pub b: Vec<f64>,
    pub c: Vec<f64>,
    pub diameter: usize,
    pub tolerance: ToleranceJson,
    pub deep: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ToleranceJson {
    pub rel: f64,
    pub abs: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumReport {
    pub n: f64,
    pub valencies: Vec<f64>,
    pub a: Vec<f64>,
    pub eigenvalues: Vec<f64>,
    pub multiplicities: Vec<f64>,
    /// Closed form when the eigenvalue was verified exactly against the characteristic polynomial.
    pub exact: Vec<Option<String>>,
    pub interval_widths: Vec<f64>,
    pub multiplicity_route_deviation: f64,
    pub p_route: String,
    pub p_cross_check_ratio: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WitnessJson {
    pub label: String,
    pub lhs: f64,
    pub rhs: f64,
    pub residual: f64,
    pub bound: f64,
    pub holds: bool,
}

impl From<&Witness> for WitnessJson {
    fn from(w: &Witness) -> Self {
        WitnessJson { label: w.label.clone(), lhs: w.lhs, rhs: w.rhs, residual: w.residual(), bound: w.bound, holds: w.holds() }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerdictJson {
    pub holds: bool,
    pub witnesses: Vec<WitnessJson>,
}

impl From<&Verdict> for VerdictJson {
    fn from(v: &Verdict) -> Self {
        VerdictJson { holds: v.holds, witnesses: v.witnesses.iter().map(WitnessJson::from).collect() }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckJson {
    pub name: String,
    /// The criterion (spectral sums) and the direct comparison agree.
    pub agree: bool,
    pub criterion: VerdictJson,
    pub direct: VerdictJson,
}

impl CheckJson {
    fn new(name: impl Into<String>, c: &CrossChecked) -> Self {
        CheckJson { name: name.into(), agree: c.agree(), criterion: (&c.criterion).into(), direct: (&c.direct).into() }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HalfAntipodalJson {
    pub parity: String,
    pub h: Vec<usize>,
    pub holds: bool,
    pub theorem: bool,
    pub criterion: VerdictJson,
    pub direct: VerdictJson,
    pub half_array: Option<String>,
    pub half_spectrum: Vec<f64>,
    pub containment_distance: f64,
    pub z_sum: Option<f64>,
    pub z_trace: Option<f64>,
    pub z_in_range: Option<bool>,
    pub deep: Option<VerdictJson>,
}

impl From<&HalfAntipodalResult> for HalfAntipodalJson {
    fn from(h: &HalfAntipodalResult) -> Self {
        HalfAntipodalJson {
            parity: match h.parity {
                Parity::Odd => "odd".into(),
                Parity::Even => "even".into(),
            },
            h: h.h.clone(),
            holds: h.holds(),
            theorem: h.theorem,
            criterion: (&h.criterion).into(),
            direct: (&h.direct).into(),
            half_array: h.half_array_display(),
            half_spectrum: h.half_spectrum.clone(),
            containment_distance: h.containment.max_distance,
            z_sum: h.z.map(|z| z.sum),
            z_trace: h.z.map(|z| z.trace),
            z_in_range: h.z_in_range,
            deep: h.deep.as_ref().map(VerdictJson::from),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PresetJson {
    pub index_set: String,
    pub h: Vec<usize>,
    pub check: CheckJson,
    pub alpha: Vec<f64>,
    pub window: (usize, usize),
    pub imprimitivity_match: Option<bool>,
    pub z_sum: Option<f64>,
    pub z_trace: Option<f64>,
    pub half_array: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KneserJson {
    pub column_d: Vec<f64>,
    pub equal_classes: Vec<Vec<usize>>,
    pub distinct_count: usize,
    pub alternation: VerdictJson,
    pub equal_pairs: Vec<(usize, usize)>,
    pub criteria: Vec<CheckJson>,
    pub gamma4: Option<Gamma4Json>,
    pub clique: Option<VerdictJson>,
    pub half_antipodal: Option<HalfAntipodalJson>,
    pub z1: Option<Z1Json>,
    pub symmetric_net: Option<bool>,
    pub distance12: Option<Distance12Json>,
    pub presets: Vec<PresetJson>,
    pub imprimitivity_checks: Option<VerdictJson>,
    pub disagreements: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Gamma4Json {
    pub i: VerdictJson,
    pub ii: VerdictJson,
    pub iii: VerdictJson,
    pub agree: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Z1Json {
    pub p_zero: VerdictJson,
    pub resolution: String,
    pub contradiction: bool,
    pub applies: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Distance12Json {
    pub pairing: VerdictJson,
    pub reflection: VerdictJson,
    pub middle: Option<WitnessJson>,
    pub gap: Option<VerdictJson>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Classification {
    pub antipodal: bool,
    pub bipartite: bool,
    pub cover_index: Option<String>,
    pub distance12_regular: Option<bool>,
    pub half_antipodal: Option<bool>,
    pub strongly_regular_gamma4: Option<bool>,
    pub multiplicities_integral: bool,
    pub intersection_numbers_nonnegative: bool,
    /// All necessary graph conditions hold; graph-only consequences are asserted.
    pub graph_conditions: bool,
}

fn exact_text(e: &ExactEigenvalue, index: usize) -> String {
    match e {
        ExactEigenvalue::Rational(r) => rational::show(r),
        ExactEigenvalue::Quadratic { trace, norm, partner } => {
            let sign = if index < *partner { '+' } else { '-' };
            let half = rational::frac(1, 2);
            let disc = (trace * trace - rational::int(4) * norm) * &half * &half;
            let centre = trace * &half;
            let root = format!("sqrt({})", rational::show(&disc));
            if rational::is_integral(&centre) && rational::is_integral(&disc) {
                if rational::signum(&centre) == 0 {
                    if sign == '+' { root } else { format!("-{root}") }
                } else {
                    format!("{}{sign}{root}", rational::show(&centre))
                }
            } else {
                let disc4 = trace * trace - rational::int(4) * norm;
                format!("({}{sign}sqrt({}))/2", rational::show(trace), rational::show(&disc4))
            }
        }
    }
}

/// Runs the full pipeline and collects it into a report.
pub fn build(text: &str, catalog_name: Option<String>, an: &Analysis, deep: bool) -> Result<AnalysisReport, Error> {
    let arr = &an.array;
    let d = an.diameter();
    let report: KneserReport = kneser_spectrum(an, deep)?;
    let imp = classify_imprimitivity(arr);
    let numbers = IntersectionNumbers::exact(arr);
    let negative = numbers.negative_entries();
    let distance12 = distance12_condition(arr).ok();

    let mut warnings: Vec<String> = arr.diagnostics().iter().map(|w| w.to_string()).collect();
    if !an.multiplicities_integral() {
        warnings.push("multiplicities are not all integers".into());
    }
    if !negative.is_empty() {
        warnings.push(format!("{} negative intersection numbers p^k_ij", negative.len()));
    }
    warnings.extend(report.disagreements.iter().cloned());
    if let Some(h) = &report.half_antipodal {
        if h.holds() && h.z_in_range == Some(false) {
            warnings.push(format!("z = {} lies outside (0, 1]", h.z.map(|z| z.sum).unwrap_or(f64::NAN)));
        }
    }

    let exact = an
        .spectrum
        .exact
        .iter()
        .enumerate()
        .map(|(i, e)| e.as_ref().map(|e| exact_text(e, i)))
        .collect();
    let spectrum = SpectrumReport {
        n: arr.n(),
        valencies: arr.valencies().to_vec(),
        a: (0..=d).map(|i| arr.a(i)).collect(),
        eigenvalues: an.spectrum.eigenvalues.clone(),
        multiplicities: an.spectrum.multiplicities.clone(),
        exact,
        interval_widths: an.spectrum.interval_widths.clone(),
        multiplicity_route_deviation: an.spectrum.multiplicity_route_deviation,
        p_route: an.p.route.to_string(),
        p_cross_check_ratio: an.p.cross_check_ratio,
    };

    let kneser = KneserJson {
        column_d: report.column_d.clone(),
        equal_classes: report.equal_classes.iter().map(|c| c.members.clone()).collect(),
        distinct_count: report.distinct_count,
        alternation: (&report.alternation).into(),
        equal_pairs: report.pairs.pairs.clone(),
        criteria: report.criteria.iter().map(|c| CheckJson::new(c.name.clone(), &c.check)).collect(),
        gamma4: report.gamma4.as_ref().map(|g| Gamma4Json {
            i: (&g.i).into(),
            ii: (&g.ii).into(),
            iii: (&g.iii).into(),
            agree: g.agree(),
        }),
        clique: report.clique.as_ref().map(|c| (&c.verdict).into()),
        half_antipodal: report.half_antipodal.as_ref().map(HalfAntipodalJson::from),
        z1: report.z1.as_ref().map(|z| Z1Json {
            p_zero: (&z.p_zero).into(),
            resolution: match z.resolution {
                Resolution::Antipodal => "antipodal",
                Resolution::Bipartite => "bipartite",
                Resolution::AntipodalAndBipartite => "antipodal and bipartite",
                Resolution::Neither => "neither",
            }
            .into(),
            contradiction: z.contradiction,
            applies: z.applies,
        }),
        symmetric_net: report.symmetric_net,
        distance12: report.distance12.as_ref().map(|c| Distance12Json {
            pairing: (&c.pairing).into(),
            reflection: (&c.reflection).into(),
            middle: c.middle.as_ref().map(WitnessJson::from),
            gap: c.gap.as_ref().map(VerdictJson::from),
        }),
        presets: report
            .presets
            .iter()
            .map(|p| PresetJson {
                index_set: p.preset.name().into(),
                h: p.h.clone(),
                check: CheckJson::new(p.preset.name(), &p.check),
                alpha: p.alpha.alpha.clone(),
                window: p.window,
                imprimitivity_match: p.imprimitivity_match,
                z_sum: p.z.map(|z| z.sum),
                z_trace: p.z.map(|z| z.trace),
                half_array: p.half_array.as_ref().map(|a| a.to_string()),
            })
            .collect(),
        imprimitivity_checks: report.imprimitivity_checks.as_ref().map(VerdictJson::from),
        disagreements: report.disagreements.clone(),
    };

    let classification = Classification {
        antipodal: imp.antipodal,
        bipartite: imp.bipartite,
        cover_index: imp.cover_index.as_ref().map(rational::show),
        distance12_regular: distance12,
        half_antipodal: report.half_antipodal.as_ref().map(|h| h.holds()),
        strongly_regular_gamma4: report.gamma4.as_ref().map(|g| g.holds()),
        multiplicities_integral: an.multiplicities_integral(),
        intersection_numbers_nonnegative: negative.is_empty(),
        graph_conditions: report.graph_conditions,
    };

    Ok(AnalysisReport {
        input: InputEcho {
            text: text.to_string(),
            catalog_name,
            array: arr.to_string(),
            b: (0..d).map(|i| arr.b(i)).collect(),
            c: (1..=d).map(|i| arr.c(i)).collect(),
            diameter: d,
            tolerance: ToleranceJson { rel: an.tolerance.rel, abs: an.tolerance.abs },
            deep,
        },
        spectrum,
        p: an.p.rows(),
        q: an.q.rows(),
        kneser,
        classification,
        warnings,
        tool_version: TOOL_VERSION.to_string(),
    })
}

/// Human-readable tables.
pub fn render(r: &AnalysisReport) -> String {
    use std::fmt::Write;
    let mut s = String::new();
    let d = r.input.diameter;
    let name = r.input.catalog_name.as_ref().map(|n| format!("  ({n})")).unwrap_or_default();
    let _ = writeln!(s, "array {}{name}", r.input.array);
    let _ = writeln!(s, "d = {d}, n = {}, k = {}", num(r.spectrum.n), num(r.spectrum.valencies.get(1).copied().unwrap_or(0.0)));
    let imp = match (r.classification.antipodal, r.classification.bipartite) {
        (false, false) => "primitive",
        (true, false) => "antipodal",
        (false, true) => "bipartite",
        (true, true) => "antipodal, bipartite",
    };
    let _ = writeln!(s, "imprimitivity: {imp}");
    if d == 2 {
        let _ = writeln!(s, "d = 2: the distance-2 graph is the complement, A_2 = J - I - A");
    }
    for w in &r.warnings {
        let _ = writeln!(s, "warning: {w}");
    }

    let _ = writeln!(s, "\n  i  {:>22}  {:>14}  {:>10}  closed form", "theta_i", "m_i", "k_i");
    for i in 0..=d {
        let theta = r.spectrum.eigenvalues[i];
        let form = match &r.spectrum.exact[i] {
            Some(e) => e.clone(),
            None => surd::hint(theta).map(|h| format!("~ {h}")).unwrap_or_default(),
        };
        let _ = writeln!(
            s,
            "{i:>3}  {:>22}  {:>14}  {:>10}  {form}",
            num(theta),
            num(r.spectrum.multiplicities[i]),
            num(r.spectrum.valencies[i])
        );
    }
    for (label, m) in [("P", &r.p), ("Q", &r.q)] {
        let _ = writeln!(s, "\n{label}:");
        for row in m {
            let cells: Vec<String> = row.iter().map(|v| format!("{:>12}", short(*v))).collect();
            let _ = writeln!(s, "  {}", cells.join(" "));
        }
    }

    let k = &r.kneser;
    let _ = writeln!(s, "\ncolumn {d} of P: {}", k.column_d.iter().map(|v| short(*v)).collect::<Vec<_>>().join(", "));
    let classes: Vec<String> = k
        .equal_classes
        .iter()
        .filter(|c| c.len() > 1)
        .map(|c| format!("{{{}}}", c.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",")))
        .collect();
    let _ = writeln!(
        s,
        "equal classes: {}  ({} distinct values, sign alternation {})",
        if classes.is_empty() { "none".to_string() } else { classes.join(" ") },
        k.distinct_count,
        yes(k.alternation.holds)
    );
    for c in &k.criteria {
        let _ = writeln!(s, "  {}: {} (direct {}{})", c.name, yes(c.criterion.holds), yes(c.direct.holds), agree(c.agree));
    }
    if let Some(g) = &k.gamma4 {
        let _ = writeln!(
            s,
            "distance-{d} graph strongly regular: (i) {}, (ii) {}, (iii) {}{}",
            yes(g.i.holds),
            yes(g.ii.holds),
            yes(g.iii.holds),
            agree(g.agree)
        );
    }
    if let Some(c) = &k.clique {
        let _ = writeln!(s, "clique condition: {}", yes(c.holds));
    }
    if let Some(h) = &k.half_antipodal {
        let _ = write!(s, "half-antipodal ({} d, H = {:?}): {}", h.parity, h.h, yes(h.holds));
        if let (Some(zs), Some(zt)) = (h.z_sum, h.z_trace) {
            let hint = surd::hint(zs).map(|t| format!(" ~ {t}")).unwrap_or_default();
            let _ = write!(s, ", z = {}{hint} (trace route {})", num(zs), num(zt));
        }
        if let Some(a) = &h.half_array {
            let _ = write!(s, ", half array {a}");
        }
        let _ = writeln!(s, ", spectral side {}", yes(h.theorem));
        if let Some(deep) = &h.deep {
            let _ = writeln!(s, "  bordered matrices carry the even-indexed eigenvalues: {}", yes(deep.holds));
        }
    }
    if let Some(z) = &k.z1 {
        let scope = if z.applies { "" } else { " (array fails graph conditions, not asserted)" };
        let _ = writeln!(s, "z = 1: p-vanishing {}, resolution {}{scope}", yes(z.p_zero.holds), z.resolution);
    }
    if let Some(net) = k.symmetric_net {
        let _ = writeln!(s, "symmetric net spectrum shape: {}", yes(net));
    }
    if let Some(c) = &k.distance12 {
        let _ = writeln!(
            s,
            "distance 1-or-2 graph regular: pairing {}, reflection {}",
            yes(c.pairing.holds),
            yes(c.reflection.holds)
        );
    }
    for p in &k.presets {
        let _ = writeln!(s, "index set {}: {}{}", p.index_set, yes(p.check.direct.holds), agree(p.check.agree));
    }
    if k.disagreements.is_empty() {
        let _ = writeln!(s, "\nall criteria agree with the direct comparisons");
    }
    s
}

fn yes(b: bool) -> &'static str {
    if b { "yes" } else { "no" }
}

fn agree(b: bool) -> &'static str {
    if b { "" } else { ", ROUTES DISAGREE" }
}

fn near_integer(v: f64) -> Option<f64> {
    let r = v.round();
    ((v - r).abs() <= 1e-9 * v.abs().max(1.0) && r.abs() < 1e15).then_some(r + 0.0)
}

fn num(v: f64) -> String {
    near_integer(v).map_or_else(|| format!("{v:.15}"), |r| format!("{r:.0}"))
}

fn short(v: f64) -> String {
    near_integer(v).map_or_else(|| format!("{v:.6}"), |r| format!("{r:.0}"))
}
