//! Human-readable renderings of verdicts and reports, plus DOT export.
//! JSON output comes straight from the Serialize impls.

use std::fmt::Write;

use crate::census::{BoundsReport, CensusReport};
use crate::classify::{AdamsReport, Certificate, KnotVerdict, LinkVerdict};
use crate::graph::Graph;
use crate::lab::AdamsSweepReport;
use crate::tables::TableReport;
use crate::ty::{FamilyRegistry, FingerprintReport};

pub fn render_link_verdict(v: &LinkVerdict) -> String {
    match v {
        LinkVerdict::Linked { member, witness } => {
            let sets: Vec<String> = (0..witness.branch_sets().len())
                .map(|i| format!("{}:{:?}", i, witness.branch_set(i)))
                .collect();
            format!("LINKED via {} (model {})", member, sets.join(" "))
        }
        LinkVerdict::NotLinked { exhaustive, apex } => match apex {
            Some(v) => format!(
                "NOT LINKED (apex vertex {}{})",
                v,
                if *exhaustive { ", exhaustively validated" } else { "" }
            ),
            None => "NOT LINKED (all Petersen family minors excluded)".into(),
        },
    }
}

pub fn render_knot_verdict(v: &KnotVerdict) -> String {
    match v {
        KnotVerdict::Knotted { member, witness } => {
            let sets: Vec<String> = (0..witness.branch_sets().len())
                .map(|i| format!("{}:{:?}", i, witness.branch_set(i)))
                .collect();
            format!("KNOTTED via {} (model {})", member, sets.join(" "))
        }
        KnotVerdict::NotKnotted { certificate } => match certificate {
            Certificate::PairDeletionPlanar { u, v } => {
                format!("NOT KNOTTED (deleting vertices {} and {} leaves a planar graph)", u, v)
            }
            Certificate::ProperMinorOfMmik { member } => {
                format!("NOT KNOTTED (proper minor of the minor-minimal member {})", member)
            }
            Certificate::MinorOfCertified { reference } => {
                format!("NOT KNOTTED (minor of certified not-knotted graph {})", reference)
            }
        },
        KnotVerdict::Unknown => "UNKNOWN (no minor found, no certificate found)".into(),
    }
}

pub fn render_registry(reg: &FamilyRegistry) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "family '{}': {} members ({})",
        reg.name,
        reg.members.len(),
        reg.provenance
    );
    for m in &reg.members {
        let _ = writeln!(
            out,
            "  {:<12} n={:<3} m={:<3} degseq={:?}{} graph6={}",
            m.name,
            m.graph.n(),
            m.graph.edge_count(),
            m.degseq,
            if m.positional { " (positional)" } else { "" },
            crate::graph6::encode(&m.graph),
        );
    }
    out
}

pub fn render_fingerprints(report: &FingerprintReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "fingerprints for '{}':", report.registry);
    for m in &report.members {
        let f = &m.fingerprint;
        let _ = writeln!(
            out,
            "  {:<12} n={:<3} triangle-free={:<5} 555-triangle={:<5} deg3-all-deg4={:<5} 554-triangle={}",
            m.name, m.n, f.triangle_free, f.has_555_triangle, f.deg3_all_deg4_neighbors, f.has_554_triangle
        );
    }
    for g in &report.groups {
        let _ = writeln!(
            out,
            "  shared degseq {:?}: isolated by 555={} deg3-all-deg4={} 554={} triangle={}",
            g.names,
            g.isolated_by_555_triangle,
            g.isolated_by_deg3_all_deg4,
            g.isolated_by_554_triangle,
            g.isolated_by_triangle_existence
        );
    }
    out
}

pub fn render_table_report(report: &TableReport, verbose: bool) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "table {}: {} entries, {} cases, {} mismatches, {} unknown (n rows up to {}) => {}",
        report.table,
        report.entries,
        report.cases,
        report.mismatches,
        report.unknowns,
        report.n_max,
        if report.passed() { "PASS" } else { "FAIL" }
    );
    for r in &report.results {
        if verbose || !r.matched {
            let _ = writeln!(
                out,
                "  {:<4} {}{} expected={:?} got={} [{}]",
                if r.matched { "ok" } else { "FAIL" },
                r.selector,
                r.case_label.as_deref().map(|l| format!(" {}", l)).unwrap_or_default(),
                r.expected,
                r.got,
                r.graph6
            );
        }
    }
    out
}

pub fn render_census(report: &CensusReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "census of graphs on {} vertices:", report.n);
    for row in &report.rows {
        let _ = writeln!(
            out,
            "  k={:<2} nonisomorphic={:<5} knotted={}{}{}",
            row.k,
            row.graphs,
            row.knotted,
            if row.floored { " (floored)" } else { "" },
            if row.knotted_graph6.is_empty() {
                String::new()
            } else {
                format!("  {}", row.knotted_graph6.join(" "))
            }
        );
    }
    let _ = writeln!(out, "total knotted: {}", report.total_knotted);
    if let Some(d) = &report.discrepancy {
        let _ = writeln!(out, "{}", d);
    }
    out
}

pub fn render_bounds(report: &BoundsReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "max edges without {:?} on {} vertices: {} (first counterexample at k={})",
        report.property, report.n, report.max_edges, report.k
    );
    for w in &report.witnesses_graph6 {
        let _ = writeln!(out, "  extremal witness: {}", w);
    }
    out
}

pub fn render_adams(report: &AdamsReport) -> String {
    let mut out = String::new();
    if !report.knotted {
        let _ = writeln!(out, "not knotted; Adams check is vacuous: PASS");
        return out;
    }
    for e in &report.entries {
        let _ = writeln!(
            out,
            "  delete vertex {}: {}",
            e.vertex,
            if e.linked {
                format!("linked via {}", e.member.as_deref().unwrap_or("?"))
            } else {
                "NOT LINKED".into()
            }
        );
    }
    let _ = writeln!(out, "Adams check: {}", if report.pass { "PASS" } else { "FAIL" });
    out
}

pub fn render_adams_sweep(report: &AdamsSweepReport, verbose: bool) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "Adams sweep over {} ({} knotted graphs): {}",
        report.scope,
        report.graphs,
        if report.all_pass { "PASS" } else { "FAIL" }
    );
    for e in &report.entries {
        if verbose || !e.pass || !e.knotted {
            let _ = writeln!(
                out,
                "  {:<5} {} [{}]{}",
                if e.pass && e.knotted { "ok" } else { "FAIL" },
                e.name,
                e.graph6,
                if e.failing_vertices.is_empty() {
                    String::new()
                } else {
                    format!(" failing vertices {:?}", e.failing_vertices)
                }
            );
        }
    }
    out
}

/// DOT rendering. Removed edges (for deficient graphs) are listed dashed
/// inside a comment layer so the complement-style presentation survives.
pub fn graph_to_dot(g: &Graph, removed: &[(usize, usize)], name: &str) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graph \"{}\" {{", name);
    for v in 0..g.n() {
        let _ = writeln!(out, "  {};", v);
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {} -- {};", u, v);
    }
    if !removed.is_empty() {
        let _ = writeln!(out, "  /* removed edges:");
        for (u, v) in removed {
            let _ = writeln!(out, "  {} -- {} [style=dashed];", u, v);
        }
        let _ = writeln!(out, "  */");
    }
    let _ = writeln!(out, "}}");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dot_contains_ghost_edges() {
        let g = Graph::complete(3).unwrap().delete_edge(0, 1).unwrap();
        let dot = graph_to_dot(&g, &[(0, 1)], "K3-e");
        assert!(dot.contains("1 -- 2;"));
        assert!(dot.contains("/* removed edges:"));
        assert!(dot.contains("0 -- 1 [style=dashed];"));
    }
}
