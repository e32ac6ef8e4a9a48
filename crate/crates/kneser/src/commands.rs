//! Subcommand bodies. Each returns the process exit code.

use std::fmt::Write as _;
use std::path::Path;

use kneser_core::catalog::{check_entry, Catalog, CatalogEntry, Check, Status};
use kneser_core::arrays::IntersectionArray;
use kneser_core::{Analysis, Error, Tolerance};

use crate::report;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CONSISTENCY: i32 = 3;

pub fn exit_code(err: &Error) -> i32 {
    if err.is_input_error() { EXIT_INPUT } else { EXIT_CONSISTENCY }
}

/// The catalog from `path` if given, else the built-in one.
pub fn load_catalog(path: Option<&Path>) -> Result<Catalog, String> {
    match path {
        None => Ok(Catalog::builtin()),
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|e| format!("cannot read {}: {e}", p.display()))?;
            Catalog::parse(&text).map_err(|e| format!("{}: {e}", p.display()))
        }
    }
}

/// Array literals start with `{`; anything else is a catalog name or family.
pub fn resolve_input(catalog: &Catalog, input: &str) -> Result<(Option<String>, IntersectionArray), Error> {
    if input.trim_start().starts_with('{') {
        IntersectionArray::parse(input).map(|a| (None, a))
    } else {
        let entry = catalog.resolve(input)?;
        Ok((Some(entry.name), entry.array))
    }
}

pub struct AnalyzeOptions {
    pub json: bool,
    pub tol: Option<f64>,
    pub deep: bool,
}

pub fn analyze(catalog: &Catalog, input: &str, opts: &AnalyzeOptions) -> (i32, String) {
    let tolerance = opts.tol.map(Tolerance::with_rel).unwrap_or_default();
    let built = resolve_input(catalog, input).and_then(|(name, arr)| {
        let an = Analysis::new(arr, tolerance)?;
        report::build(input, name, &an, opts.deep)
    });
    let r = match built {
        Ok(r) => r,
        Err(e) => return (exit_code(&e), format!("error: {e}\n")),
    };
    let out = if opts.json {
        let mut s = serde_json::to_string_pretty(&r).expect("reports serialize");
        s.push('\n');
        s
    } else {
        report::render(&r)
    };
    let code = if r.kneser.disagreements.is_empty() { EXIT_OK } else { EXIT_CONSISTENCY };
    (code, out)
}

fn run_checks(entries: &[&CatalogEntry], tol: &Tolerance, deep: bool) -> Vec<Vec<Check>> {
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get()).min(entries.len().max(1));
    let chunk = entries.len().div_ceil(workers).max(1);
    std::thread::scope(|s| {
        let handles: Vec<_> = entries
            .chunks(chunk)
            .map(|part| s.spawn(move || part.iter().map(|e| check_entry(e, tol, deep)).collect::<Vec<_>>()))
            .collect();
        handles.into_iter().flat_map(|h| h.join().expect("check thread panicked")).collect()
    })
}

pub fn verify(catalog: &Catalog, scope: &str, list: bool, deep: bool) -> (i32, String) {
    let entries: Vec<&CatalogEntry> = if scope.eq_ignore_ascii_case("all") {
        catalog.entries().iter().collect()
    } else {
        match catalog.get(scope) {
            Ok(e) => vec![e],
            Err(e) => return (EXIT_INPUT, format!("error: {e}\n")),
        }
    };
    let results = run_checks(&entries, &Tolerance::default(), deep);
    let mut out = String::new();
    let (mut total, mut failed) = (0, 0);
    for (entry, checks) in entries.iter().zip(&results) {
        let bad = checks.iter().filter(|c| !c.passed).count();
        total += checks.len();
        failed += bad;
        let mark = if bad == 0 { "PASS" } else { "FAIL" };
        let _ = writeln!(out, "{mark} {} ({} claims, {bad} failed)", entry.name, checks.len());
        for c in checks {
            if list || !c.passed {
                let mark = if c.passed { "ok  " } else { "FAIL" };
                let _ = writeln!(out, "  {mark} {}  [{}]  {}", c.claim, c.anchor, c.detail);
            }
        }
    }
    let _ = writeln!(out, "{} entries, {total} claims, {failed} failed", entries.len());
    (if failed == 0 { EXIT_OK } else { EXIT_FAILED }, out)
}

pub fn catalog_list(catalog: &Catalog) -> String {
    let mut out = String::new();
    let width = catalog.names().iter().map(|n| n.len()).max().unwrap_or(0);
    for e in catalog.entries() {
        let _ = writeln!(out, "{:<width$}  {:<10}  {:<9}  {}", e.name, e.status.to_string(), e.provenance.kind.to_string(), e.array);
    }
    out
}

pub fn catalog_show(catalog: &Catalog, name: &str) -> (i32, String) {
    let e = match catalog.resolve(name) {
        Ok(e) => e,
        Err(err) => return (EXIT_INPUT, format!("error: {err}\n")),
    };
    let mut out = String::new();
    let _ = writeln!(out, "name:       {}", e.name);
    if !e.aliases.is_empty() {
        let _ = writeln!(out, "aliases:    {}", e.aliases.join(", "));
    }
    let _ = writeln!(out, "array:      {}", e.array);
    let status = match e.status {
        Status::Candidate => "candidate (existence open)".to_string(),
        s => s.to_string(),
    };
    let _ = writeln!(out, "status:     {status}");
    let _ = writeln!(out, "provenance: {} ({})", e.provenance.kind, e.provenance.note);
    if let Some(f) = e.family {
        let _ = writeln!(out, "family:     {f}");
    }
    if let Some(n) = e.expected.n {
        let _ = writeln!(out, "vertices:   {n}");
    }
    if let Some(spec) = &e.expected.spectrum {
        let terms: Vec<String> = spec.iter().map(|t| format!("{}^{}", t.text, t.multiplicity)).collect();
        let _ = writeln!(out, "spectrum:   {}", terms.join(" "));
    }
    if let Some(pairs) = &e.expected.pairs {
        let p: Vec<String> = pairs.iter().map(|(g, h)| format!("P{g}d=P{h}d")).collect();
        let _ = writeln!(out, "equalities: {}", p.join(" "));
    }
    if let Some((text, _)) = &e.expected.z {
        let _ = writeln!(out, "z:          {text}");
    }
    if let Some(o) = &e.oracle {
        let _ = writeln!(out, "graph:      {o}");
    }
    (EXIT_OK, out)
}
