//! One line per acceptance criterion; exits non-zero if any fails.

use std::process::ExitCode;

use kneser_core::arrays::IntersectionNumbers;
use kneser_core::catalog::{closed_form_checks, Catalog, CatalogEntry};
use kneser_core::kneser::{self, distance12_consequences, equal_set_criterion, gamma4_strongly_regular, pair_criterion};
use kneser_core::oracle::{build_graph, verify_against_array};
use kneser_core::{Analysis, Tolerance};

/// Published irrational values and column entries.
const VALUE_TOL: f64 = 1e-8;
/// Criterion residuals, relative to the scale of the sums involved.
const CRITERION_REL: f64 = 1e-6;
const ORACLE_TOL: f64 = 1e-6;
const C_LAST_TOL: f64 = 1e-10;

struct Outcome {
    failures: Vec<String>,
    summary: String,
}

impl Outcome {
    fn new() -> Self {
        Outcome { failures: Vec::new(), summary: String::new() }
    }

    fn require(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(what());
        }
    }
}

fn analysis(entry: &CatalogEntry) -> Analysis {
    Analysis::new(entry.array.clone(), Tolerance::default()).expect("catalog arrays analyse")
}

fn close(x: f64, y: f64) -> bool {
    (x - y).abs() <= VALUE_TOL * x.abs().max(y.abs()).max(1.0)
}

/// Entries whose eigenvalues (and usually multiplicities) are printed in the literature.
const PUBLISHED_SPECTRA: [&str; 14] = [
    "coxeter",
    "odd-5",
    "odd-6",
    "m22",
    "unital",
    "wells",
    "3-sym6-2",
    "locally-petersen",
    "biggs-smith",
    "ternary-golay",
    "folded-11-cube",
    "folded-johnson-20-10",
    "infeasible-12",
    "dual-polar-2d5-2",
];

fn spectrum_regression(cat: &Catalog) -> Outcome {
    let mut out = Outcome::new();
    for name in PUBLISHED_SPECTRA {
        let entry = cat.get(name).unwrap();
        let Some(targets) = entry.expected.eigenvalue_targets().expect("expected spectra resolve") else {
            out.require(false, || format!("{name}: no expected spectrum"));
            continue;
        };
        let an = analysis(entry);
        let d = an.diameter();
        out.require(targets.len() == d + 1, || format!("{}: {} eigenvalues expected", entry.name, targets.len()));
        for (i, (v, m)) in targets.iter().enumerate().take(d + 1) {
            let theta = an.theta(i);
            let ok = if v.fract() == 0.0 { theta == *v } else { close(theta, *v) };
            out.require(ok, || format!("{}: theta_{i} = {theta}, expected {v}", entry.name));
            if let Some(m) = m {
                let got = an.m(i);
                out.require((got - got.round()).abs() <= 1e-6 && got.round() == *m as f64, || {
                    format!("{}: m_{i} = {got}, expected {m}", entry.name)
                });
            }
        }
    }
    for (name, want) in [
        ("coxeter", vec![1.0, 8.0, 6.0, 7.0, 6.0]),
        ("odd-5", vec![1.0, 27.0, 42.0, 48.0, 8.0]),
        ("ternary-golay", vec![1.0, 132.0, 132.0, 330.0, 110.0, 24.0]),
    ] {
        let an = analysis(cat.get(name).unwrap());
        let got: Vec<f64> = (0..want.len()).map(|i| an.m(i).round()).collect();
        out.require(got == want, || format!("{name}: multiplicities {got:?}"));
    }
    out.summary = format!("{} published spectra reproduced", PUBLISHED_SPECTRA.len());
    out
}

fn kneser_equalities(cat: &Catalog) -> Outcome {
    let mut out = Outcome::new();
    let cases = [
        ("coxeter", 1, 3),
        ("m22", 1, 3),
        ("unital", 1, 3),
        ("odd-5", 2, 4),
        ("dual-polar-2d5-2", 2, 4),
        ("biggs-smith", 2, 4),
    ];
    let mut worst = 0.0f64;
    for (name, g, h) in cases {
        let an = analysis(cat.get(name).unwrap());
        let d = an.diameter();
        let (pg, ph) = (an.p.get(g, d), an.p.get(h, d));
        out.require(close(pg, ph), || format!("{name}: P{g}{d} = {pg}, P{h}{d} = {ph}"));
        let c = pair_criterion(&an, g, h).unwrap();
        for w in &c.criterion.witnesses {
            let scale = (w.bound / an.tolerance.rel).max(1.0);
            worst = worst.max(w.residual() / scale);
            out.require(w.residual() <= CRITERION_REL * scale, || format!("{name}: {} residual {}", w.label, w.residual()));
        }
        out.require(c.criterion.holds && c.agree(), || format!("{name}: criterion for ({g},{h}) does not confirm"));
    }
    let golay = analysis(cat.get("ternary-golay").unwrap());
    let col = golay.column_d();
    let want = [2.0, -1.0, 2.0, -1.0, 2.0, -1.0];
    out.require(col.len() == 6 && col.iter().zip(want).all(|(x, y)| close(*x, y)), || format!("golay column {col:?}"));
    for set in [[1, 3, 5], [0, 2, 4]] {
        let c = equal_set_criterion(&golay, &set).unwrap();
        out.require(c.criterion.holds && c.agree(), || format!("golay: criterion for {set:?} does not confirm"));
    }
    out.summary = format!("8 equalities confirmed, worst scaled residual {worst:.1e}");
    out
}

fn z_table(cat: &Catalog) -> Outcome {
    let mut out = Outcome::new();
    let cases = [
        ("coxeter", 0.5),
        ("m22", 0.5),
        ("unital", 0.5),
        ("go-2-4", 0.5),
        ("go-3-3", 1.0 / 3.0),
        ("g12-2-1", 0.5),
        ("g12-3-1", 1.0 / 3.0),
        ("wells", 1.0),
        ("cube-4", 1.0),
    ];
    for (name, z) in cases {
        let an = analysis(cat.get(name).unwrap());
        let half = kneser::half_antipodal_even(&an, true).unwrap();
        let routes = half.z.unwrap();
        out.require((routes.sum - z).abs() <= VALUE_TOL && (routes.trace - z).abs() <= VALUE_TOL, || {
            format!("{name}: z = {} (sum), {} (trace), expected {z}", routes.sum, routes.trace)
        });
        out.require(half.theorem && half.deep.as_ref().is_some_and(|v| v.holds), || {
            format!("{name}: half array or bordered matrices do not carry the even eigenvalues")
        });
    }
    out.summary = format!("{} values of z, both routes", cases.len());
    out
}

fn theorem_equivalences(cat: &Catalog) -> Outcome {
    let mut out = Outcome::new();
    let mut tally = [[0usize; 2]; 2];
    for entry in cat.entries() {
        let an = analysis(entry);
        let d = an.diameter();
        if d < 3 {
            continue;
        }
        let half = if d % 2 == 1 {
            kneser::half_antipodal_odd(&an).unwrap()
        } else {
            kneser::half_antipodal_even(&an, false).unwrap()
        };
        let criterion = equal_set_criterion(&an, &half.h).unwrap();
        let direct = half.direct.holds;
        out.require(half.theorem == direct && criterion.criterion.holds == direct && criterion.direct.holds == direct, || {
            format!(
                "{}: theorem {}, criterion {}, direct {}",
                entry.name, half.theorem, criterion.criterion.holds, direct
            )
        });
        tally[d % 2][usize::from(direct)] += 1;
    }
    for (parity, name) in [(1, "odd"), (0, "even")] {
        out.require(tally[parity][0] >= 3 && tally[parity][1] >= 3, || {
            format!("{name} diameter: {} positive, {} negative", tally[parity][1], tally[parity][0])
        });
    }
    out.summary = format!(
        "odd d: {}+/{}-, even d: {}+/{}-",
        tally[1][1], tally[1][0], tally[0][1], tally[0][0]
    );
    out
}

fn strongly_regular_d4(cat: &Catalog) -> Outcome {
    let mut out = Outcome::new();
    let cases = [
        ("infeasible-12", true),
        ("open-21", true),
        ("open-24", true),
        ("open-66", true),
        ("wells", true),
        ("3-sym6-2", true),
        ("locally-petersen", true),
        ("coxeter", false),
        ("m22", false),
        ("unital", false),
    ];
    for (name, want) in cases {
        let an = analysis(cat.get(name).unwrap());
        let g = gamma4_strongly_regular(&an).unwrap();
        out.require(g.i.holds == want && g.ii.holds == want && g.iii.holds == want, || {
            format!("{name}: (i) {}, (ii) {}, (iii) {}", g.i.holds, g.ii.holds, g.iii.holds)
        });
    }
    out.summary = format!("{} arrays, three conditions each", cases.len());
    out
}

fn closed_forms(cat: &Catalog) -> Outcome {
    let mut out = Outcome::new();
    let mut n = 0;
    for name in ["b3-2", "c3-2", "d4-2", "2d5-2", "G12(2,1)", "G12(3,1)", "G12(1,2)", "G12(1,3)"] {
        let entry = cat.resolve(name).unwrap();
        let family = entry.family.expect("closed-form entries carry a family");
        let an = analysis(&entry);
        for (claim, passed, detail) in closed_form_checks(&family, &an) {
            n += 1;
            out.require(passed, || format!("{name}: {claim} ({detail})"));
        }
    }
    out.summary = format!("{n} closed-form identities");
    out
}

fn oracle_equivalence() -> Outcome {
    let mut out = Outcome::new();
    let names = [
        "petersen", "odd-4", "heawood", "cycle(7)", "cycle(8)", "hypercube(3)", "hypercube(4)", "hamming(2,3)",
        "johnson(5,2)", "biggs-smith",
    ];
    let mut worst = 0.0f64;
    for name in names {
        match build_graph(name).and_then(|g| verify_against_array(&g, &Tolerance::default())) {
            Ok(r) => {
                worst = worst.max(r.max_discrepancy);
                out.require(r.passed && r.max_discrepancy <= ORACLE_TOL, || {
                    format!("{name}: discrepancy {}, spectrum {}, classes {}", r.max_discrepancy, r.spectrum_matches, r.classes_match)
                });
            }
            Err(e) => out.require(false, || format!("{name}: {e}")),
        }
    }
    out.summary = format!("{} graphs, max discrepancy {worst:.1e}", names.len());
    out
}

fn property_suite(cat: &Catalog) -> Outcome {
    let mut out = Outcome::new();
    for entry in cat.entries() {
        let an = analysis(entry);
        let ids = an.identities();
        out.require(ids.holds, || format!("{}: power sums / PQ / sign changes", entry.name));
        out.require(an.interlacing().unwrap(), || format!("{}: interlacing", entry.name));
        let failures = IntersectionNumbers::exact(&entry.array).identity_failures(&entry.array);
        out.require(failures.is_empty(), || format!("{}: {}", entry.name, failures.join("; ")));
        let k = entry.array.valency();
        for c in [0.5, 3.0, 17.0] {
            let dev = an.c_last_sensitivity(c).unwrap();
            out.require(dev <= C_LAST_TOL * k.max(1.0), || format!("{}: c_(d+1) = {c} moves eigenvalues by {dev}", entry.name));
        }
    }
    out.summary = format!("{} catalog entries", cat.entries().len());
    out
}

fn distance12(cat: &Catalog) -> Outcome {
    let mut out = Outcome::new();
    for name in ["odd-5", "odd-6", "folded-11-cube", "b3-2", "c3-2"] {
        let an = analysis(cat.get(name).unwrap());
        let d = an.diameter();
        let c = distance12_consequences(&an).unwrap();
        out.require(c.holds(), || format!("{name}: pairing {}, reflection {}", c.pairing.holds, c.reflection.holds));
        if d % 2 == 1 {
            let mid = an.theta(d.div_ceil(2));
            out.require(mid == -1.0, || format!("{name}: middle eigenvalue {mid}"));
            out.require(c.middle.as_ref().is_some_and(|w| w.holds()), || format!("{name}: middle eigenvalue check"));
        }
    }
    out.summary = "5 arrays".to_string();
    out
}

fn main() -> ExitCode {
    let cat = Catalog::builtin();
    let criteria: [(&str, Box<dyn Fn() -> Outcome>); 9] = [
        ("spectrum regression", Box::new(|| spectrum_regression(&cat))),
        ("kneser equalities", Box::new(|| kneser_equalities(&cat))),
        ("z table", Box::new(|| z_table(&cat))),
        ("theorem equivalences", Box::new(|| theorem_equivalences(&cat))),
        ("strongly regular distance-4 graph", Box::new(|| strongly_regular_d4(&cat))),
        ("closed forms", Box::new(|| closed_forms(&cat))),
        ("oracle equivalence", Box::new(oracle_equivalence)),
        ("property suite", Box::new(|| property_suite(&cat))),
        ("distance 1-or-2 consequences", Box::new(|| distance12(&cat))),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let outcome = run();
        let status = if outcome.failures.is_empty() { "PASS" } else { "FAIL" };
        println!("criterion {}: {status} {name}: {}", i + 1, outcome.summary);
        for f in &outcome.failures {
            println!("    {f}");
        }
        if !outcome.failures.is_empty() {
            failed += 1;
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
