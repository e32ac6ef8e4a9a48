use kneser_core::catalog::{check_entry, Catalog};
use kneser_core::Tolerance;

#[test]
fn every_entry_reproduces_its_expected_values() {
    let cat = Catalog::builtin();
    let mut failures = Vec::new();
    for entry in cat.entries() {
        for c in check_entry(entry, &Tolerance::default(), true) {
            if !c.passed {
                failures.push(format!("{}: {} [{}] {}", c.entry, c.claim, c.anchor, c.detail));
            }
        }
    }
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}

#[test]
fn family_instances_satisfy_their_closed_forms() {
    let families = [
        "GO(1,1)", "GO(2,1)", "GO(2,4)", "GO(4,2)", "G12(2,1)", "G12(3,1)", "G12(4,1)", "G12(1,2)", "G12(1,3)",
        "G12(1,4)", "dual_polar(3,2,1)", "dual_polar(3,3,1)", "dual_polar(5,2,1)", "dual_polar(4,2,0)",
        "dual_polar(4,3,0)", "dual_polar(4,2,2)", "dual_polar(4,3,2)", "dual_polar(3,2,2)", "odd_graph(2)",
        "odd_graph(3)", "odd_graph(4)", "odd_graph(5)", "odd_graph(6)", "odd_graph(7)", "folded_cube(2)",
        "folded_cube(3)", "folded_cube(5)", "folded_cube(6)",
    ];
    let cat = Catalog::builtin();
    let mut failures = Vec::new();
    for name in families {
        let entry = cat.resolve(name).unwrap();
        for c in check_entry(&entry, &Tolerance::default(), false) {
            if !c.passed {
                failures.push(format!("{}: {} {}", c.entry, c.claim, c.detail));
            }
        }
    }
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}

#[test]
fn unknown_names_are_rejected() {
    let cat = Catalog::builtin();
    assert!(cat.resolve("no-such-graph").is_err());
    assert!(cat.resolve("GO(0,2)").is_err());
    assert!(cat.resolve("dual_polar(3,2,5)").is_err());
}

#[test]
fn names_are_unique_and_listed() {
    let cat = Catalog::builtin();
    let names = cat.names();
    for required in [
        "coxeter", "odd-4", "odd-5", "odd-6", "m22", "unital", "wells", "3-sym6-2", "locally-petersen",
        "biggs-smith", "ternary-golay", "folded-11-cube", "folded-johnson-20-10", "infeasible-12", "open-21",
        "open-24", "open-66", "petersen", "heawood", "cycle-7", "cycle-8", "cube-3", "cube-4",
    ] {
        assert!(names.contains(&required), "{required}");
    }
    for n in &names {
        assert_eq!(cat.get(n).unwrap().name, *n);
    }
}
