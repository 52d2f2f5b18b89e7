use knotscan::classify::CertifiedStore;
use knotscan::tables::*;
use std::time::Instant;

fn main() {
    let store = CertifiedStore::new();
    for id in TABLE_IDS {
        let t = Instant::now();
        let report = table_check(id, 6, &store).unwrap();
        println!(
            "{}: {} entries, {} cases, {} mismatches, {} unknown  [{:?}]",
            id, report.entries, report.cases, report.mismatches, report.unknowns, t.elapsed()
        );
        for r in report.results.iter().filter(|r| !r.matched) {
            println!("  MISMATCH {} {} exp={:?} got={} {}",
                r.selector, r.case_label.as_deref().unwrap_or("-"), r.expected, r.got, r.graph6);
        }
    }
}
