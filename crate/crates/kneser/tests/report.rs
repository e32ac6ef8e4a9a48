use kneser::report::{self, AnalysisReport};
use kneser_core::catalog::Catalog;
use kneser_core::{Analysis, Tolerance};

#[test]
fn every_catalog_report_round_trips() {
    for e in Catalog::builtin().entries() {
        let an = Analysis::new(e.array.clone(), Tolerance::default()).unwrap();
        let r = report::build(&e.name, Some(e.name.clone()), &an, true).unwrap();
        let text = serde_json::to_string(&r).unwrap();
        let back: AnalysisReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r, "{}", e.name);
        assert_eq!(r.p.len(), an.diameter() + 1);
        assert!(!report::render(&r).is_empty());
    }
}
