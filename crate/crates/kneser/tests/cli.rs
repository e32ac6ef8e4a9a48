use std::io::Write;
use std::process::{Command, Output};

use kneser::report::AnalysisReport;

fn kneser(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kneser"))
        .args(args)
        .env_remove("KNESER_CATALOG")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json_report(args: &[&str]) -> (AnalysisReport, serde_json::Value) {
    let o = kneser(args);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let text = stdout(&o);
    (serde_json::from_str(&text).unwrap(), serde_json::from_str(&text).unwrap())
}

#[test]
fn analyze_literal_finds_equal_class_and_z() {
    let o = kneser(&["analyze", "{3,2,2,1;1,1,1,2}"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("equal classes: {1,3}"), "{out}");
    assert!(out.contains("z = 0.500000000000000 ~ 1/2"), "{out}");
    assert!(out.contains("-1+sqrt(2)"), "{out}");
}

#[test]
fn analyze_alias_json_has_same_content() {
    let (r, v) = json_report(&["analyze", "coxeter", "--json"]);
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(|k| k.as_str()).collect();
    for k in ["input", "spectrum", "P", "Q", "kneser", "classification", "warnings", "tool_version"] {
        assert!(keys.contains(&k), "missing {k}");
    }
    assert_eq!(keys.len(), 8);
    assert_eq!(r.input.array, "{3,2,2,1;1,1,1,2}");
    assert!(r.kneser.equal_classes.contains(&vec![1, 3]));
    let h = r.kneser.half_antipodal.as_ref().unwrap();
    assert!(h.holds);
    assert!((h.z_sum.unwrap() - 0.5).abs() <= 1e-8);
    assert!((h.z_trace.unwrap() - 0.5).abs() <= 1e-8);

    let (literal, _) = json_report(&["analyze", "{3,2,2,1;1,1,1,2}", "--json"]);
    assert_eq!(literal.p, r.p);
    assert_eq!(literal.kneser, r.kneser);
}

#[test]
fn every_verdict_carries_witnesses() {
    let (_, v) = json_report(&["analyze", "coxeter", "--json"]);
    fn walk(v: &serde_json::Value, seen: &mut usize) {
        match v {
            serde_json::Value::Object(m) => {
                if m.contains_key("holds") && m.contains_key("witnesses") {
                    *seen += 1;
                    let ws = m["witnesses"].as_array().unwrap();
                    for w in ws {
                        for k in ["label", "lhs", "rhs", "residual", "bound", "holds"] {
                            assert!(w.get(k).is_some(), "witness without {k}: {w}");
                        }
                    }
                }
                m.values().for_each(|x| walk(x, seen));
            }
            serde_json::Value::Array(a) => a.iter().for_each(|x| walk(x, seen)),
            _ => {}
        }
    }
    let mut seen = 0;
    walk(&v, &mut seen);
    assert!(seen >= 5, "{seen} verdicts");
}

#[test]
fn json_round_trips_at_full_precision() {
    let o = kneser(&["analyze", "biggs-smith", "--json", "--deep"]);
    let text = stdout(&o);
    let r: AnalysisReport = serde_json::from_str(&text).unwrap();
    let again: AnalysisReport = serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
    assert_eq!(again, r);
    let theta = r.spectrum.eigenvalues[2];
    assert!(text.contains(&format!("{theta:?}")));
    assert_eq!(format!("{theta:?}").parse::<f64>().unwrap(), theta);
}

#[test]
fn diameter_two_is_trivial() {
    let o = kneser(&["analyze", "{5,4;1,1}"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("d = 2"), "{out}");
    assert!(out.contains("equal classes: none"), "{out}");
    assert!(out.contains("A_2 = J - I - A"), "{out}");
}

#[test]
fn tolerance_flag_is_echoed() {
    let (r, _) = json_report(&["analyze", "wells", "--json", "--tol", "1e-6"]);
    assert_eq!(r.input.tolerance.rel, 1e-6);
    assert!((r.kneser.half_antipodal.unwrap().z_sum.unwrap() - 1.0).abs() <= 1e-8);
}

#[test]
fn bad_input_exits_with_two() {
    for args in [&["analyze", "{5,4;1"][..], &["analyze", "{5,4;1,0}"], &["analyze", "nosuch"], &["verify", "nosuch"]] {
        let o = kneser(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(String::from_utf8_lossy(&o.stderr).starts_with("error:"));
    }
}

#[test]
fn verify_biggs_smith_confirms_the_equality() {
    let o = kneser(&["verify", "biggs-smith", "--list"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("PASS biggs-smith"));
    assert!(out.contains("P_hd coincide for h in [2, 4]"), "{out}");
    assert!(out.contains("0 failed"));
}

#[test]
fn verify_all_passes() {
    let o = kneser(&["verify", "all"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn catalog_listing_and_entries() {
    let o = kneser(&["catalog", "list"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().count() >= 20);

    let wells = stdout(&kneser(&["catalog", "show", "wells"]));
    assert!(wells.contains("{5,4,1,1;1,1,4,5}"));
    assert!(wells.contains("spectrum:   5^1 sqrt(5)^8 1^10 (-sqrt(5))^8 (-3)^5"), "{wells}");

    let open = stdout(&kneser(&["catalog", "show", "open-21"]));
    assert!(open.contains("status:     candidate"), "{open}");
}

const SMALL_CATALOG: &str = "\
name: tiny-cube
provenance: derived  cube for the catalog override test
array: {3,2,1;1,2,3}
spectrum: 3^1 1^3 (-1)^3 (-3)^1
n: 8

name: broken-cube
provenance: derived  wrong multiplicity on purpose
array: {3,2,1;1,2,3}
spectrum: 3^1 1^4 (-1)^2 (-3)^1
";

#[test]
fn catalog_can_be_replaced_by_file_or_environment() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(SMALL_CATALOG.as_bytes()).unwrap();
    let path = f.path().to_str().unwrap();

    let listed = stdout(&kneser(&["--catalog", path, "catalog", "list"]));
    assert_eq!(listed.lines().count(), 2, "{listed}");

    let o = Command::new(env!("CARGO_BIN_EXE_kneser"))
        .args(["verify", "tiny-cube"])
        .env("KNESER_CATALOG", path)
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));

    let o = kneser(&["--catalog", path, "verify", "broken-cube"]);
    assert_eq!(o.status.code(), Some(1), "{}", stdout(&o));
    let o = kneser(&["--catalog", path, "verify", "all"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(kneser(&["--catalog", path, "analyze", "coxeter"]).status.code(), Some(2));
}

#[test]
fn unreadable_catalog_is_an_input_error() {
    let o = kneser(&["--catalog", "/nonexistent/catalog.txt", "catalog", "list"]);
    assert_eq!(o.status.code(), Some(2));
}
