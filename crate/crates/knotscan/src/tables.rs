//! Classification tables as data, and the machinery that replays every
//! entry through the classifiers.
//!
//! Tables ship as TSV text (one selector and expected verdict per line) so
//! a correction is a one-line diff. Selectors use the usual notation plus
//! two templates: a literal `n` part, instantiated for n = 1..=n_max, and
//! `ALL(p>=P)` rows standing for "every complete multipartite graph with
//! at least P parts", instantiated over a finite sample of part lists.

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::classify::{classify_knotting, classify_linking, CertifiedStore, KnotVerdict};
use crate::graph::Graph;
use crate::graph6;
use crate::notation::{self, Resolved};

pub const TABLE_IDS: [&str; 8] = [
    "il0", "ik0", "il1", "ik1", "il2a", "il2b", "ik2a", "ik2b",
];

pub fn table_data(id: &str) -> Option<&'static str> {
    match id {
        "il0" => Some(include_str!("../data/il0.tsv")),
        "ik0" => Some(include_str!("../data/ik0.tsv")),
        "il1" => Some(include_str!("../data/il1.tsv")),
        "ik1" => Some(include_str!("../data/ik1.tsv")),
        "il2a" => Some(include_str!("../data/il2a.tsv")),
        "il2b" => Some(include_str!("../data/il2b.tsv")),
        "ik2a" => Some(include_str!("../data/ik2a.tsv")),
        "ik2b" => Some(include_str!("../data/ik2b.tsv")),
        _ => None,
    }
}

#[derive(Debug, Error)]
pub enum TableError {
    #[error("unknown table id '{0}'")]
    UnknownTable(String),
    #[error("table {table} line {line}: {message}")]
    BadLine {
        table: String,
        line: usize,
        message: String,
    },
    #[error("selector '{selector}': {source}")]
    Selector {
        selector: String,
        source: notation::NotationError,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Expected {
    Linked,
    NotLinked,
    Knotted,
    NotKnotted,
}

impl Expected {
    fn parse(s: &str) -> Option<Expected> {
        match s {
            "linked" => Some(Expected::Linked),
            "not_linked" => Some(Expected::NotLinked),
            "knotted" => Some(Expected::Knotted),
            "not_knotted" => Some(Expected::NotKnotted),
            _ => None,
        }
    }

    pub fn is_knotting(&self) -> bool {
        matches!(self, Expected::Knotted | Expected::NotKnotted)
    }
}

#[derive(Debug, Clone)]
pub struct TableEntry {
    pub selector: String,
    pub expected: Expected,
}

pub fn load_table(id: &str) -> Result<Vec<TableEntry>, TableError> {
    let data = table_data(id).ok_or_else(|| TableError::UnknownTable(id.to_string()))?;
    let mut entries = Vec::new();
    for (i, line) in data.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut cols = line.split('\t');
        let (selector, verdict) = match (cols.next(), cols.next()) {
            (Some(s), Some(v)) => (s.trim(), v.trim()),
            _ => {
                return Err(TableError::BadLine {
                    table: id.to_string(),
                    line: i + 1,
                    message: "expected two tab-separated columns".into(),
                })
            }
        };
        let expected = Expected::parse(verdict).ok_or_else(|| TableError::BadLine {
            table: id.to_string(),
            line: i + 1,
            message: format!("unknown verdict '{}'", verdict),
        })?;
        entries.push(TableEntry {
            selector: selector.to_string(),
            expected,
        });
    }
    Ok(entries)
}

/// One concrete selector produced from a table entry.
#[derive(Debug, Clone)]
pub struct Instance {
    pub selector: String,
    pub expected: Expected,
    /// True when produced from an `ALL(p>=...)` template.
    pub generated: bool,
}

/// Expand templates: `n` parts run over 1..=n_max; ALL rows sample every
/// descending part list with P or P+1 parts and a few extra vertices.
pub fn instantiate(entry: &TableEntry, n_max: usize) -> Vec<Instance> {
    if let Some(rest) = entry.selector.strip_prefix("ALL(p>=") {
        let close = rest.find(')').expect("ALL selector missing ')'");
        let min_parts: usize = rest[..close].parse().expect("ALL selector part count");
        let removal = &rest[close + 1..]; // "" or "-1e" / "-2e"
        let mut out = Vec::new();
        for p in [min_parts, min_parts + 1] {
            for parts in descending_partitions(p, p + 4) {
                let list = parts
                    .iter()
                    .map(|s| s.to_string())
                    .collect::<Vec<_>>()
                    .join(",");
                out.push(Instance {
                    selector: format!("K{{{}}}{}", list, removal),
                    expected: entry.expected,
                    generated: true,
                });
            }
        }
        return out;
    }
    if selector_has_n(&entry.selector) {
        return (1..=n_max)
            .map(|n| Instance {
                selector: entry.selector.replacen('n', &n.to_string(), 1),
                expected: entry.expected,
                generated: false,
            })
            .collect();
    }
    vec![Instance {
        selector: entry.selector.clone(),
        expected: entry.expected,
        generated: false,
    }]
}

/// Whether the selector's part list contains the literal `n` template.
/// Only the braces section is inspected; edge labels never use `n`.
fn selector_has_n(selector: &str) -> bool {
    match (selector.find('{'), selector.find('}')) {
        (Some(a), Some(b)) if a < b => selector[a..b].contains('n'),
        _ => false,
    }
}

/// All descending lists with exactly `parts` entries and total <= max_total.
fn descending_partitions(parts: usize, max_total: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut acc = Vec::new();
    fn rec(
        acc: &mut Vec<usize>,
        remaining_parts: usize,
        budget: usize,
        max_size: usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        if remaining_parts == 0 {
            out.push(acc.clone());
            return;
        }
        // every remaining part needs at least one vertex
        let hi = max_size.min(budget + 1 - remaining_parts);
        for s in (1..=hi).rev() {
            acc.push(s);
            rec(acc, remaining_parts - 1, budget - s, s, out);
            acc.pop();
        }
    }
    rec(&mut acc, parts, max_total, max_total, &mut out);
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct CaseResult {
    pub selector: String,
    pub case_label: Option<String>,
    pub graph6: String,
    pub n: usize,
    pub expected: Expected,
    pub got: String,
    pub matched: bool,
    pub unknown: bool,
    pub generated: bool,
    pub detail: serde_json::Value,
}

#[derive(Debug, Clone, Serialize)]
pub struct TableReport {
    pub table: String,
    pub n_max: usize,
    pub entries: usize,
    pub cases: usize,
    pub mismatches: usize,
    pub unknowns: usize,
    pub results: Vec<CaseResult>,
}

impl TableReport {
    pub fn passed(&self) -> bool {
        self.mismatches == 0 && self.unknowns == 0
    }
}

struct Job {
    selector: String,
    case_label: Option<String>,
    graph: Graph,
    expected: Expected,
    generated: bool,
}

fn jobs_for(instances: &[Instance]) -> Result<Vec<Job>, TableError> {
    let mut jobs = Vec::new();
    for inst in instances {
        let resolved =
            notation::resolve_text(&inst.selector).map_err(|source| TableError::Selector {
                selector: inst.selector.clone(),
                source,
            })?;
        match resolved {
            Resolved::One { graph, .. } => jobs.push(Job {
                selector: inst.selector.clone(),
                case_label: None,
                graph,
                expected: inst.expected,
                generated: inst.generated,
            }),
            Resolved::Cases(cases) => {
                for case in cases {
                    jobs.push(Job {
                        selector: inst.selector.clone(),
                        case_label: Some(case.label()),
                        graph: case.graph,
                        expected: inst.expected,
                        generated: inst.generated,
                    });
                }
            }
        }
    }
    Ok(jobs)
}

enum RawVerdict {
    Link(crate::classify::LinkVerdict),
    Knot(KnotVerdict),
}

/// Classify a deterministic batch: a parallel pass that never reads the
/// shared store, then an in-order sequential pass replaying the store
/// accumulation so `MinorOfCertified` chains stay reproducible.
fn classify_jobs(jobs: &[Job], store: &CertifiedStore) -> Vec<RawVerdict> {
    let phase1: Vec<RawVerdict> = jobs
        .par_iter()
        .map(|job| {
            if job.expected.is_knotting() {
                let local = CertifiedStore::new();
                RawVerdict::Knot(classify_knotting(&job.graph, &local))
            } else {
                RawVerdict::Link(classify_linking(&job.graph))
            }
        })
        .collect();
    phase1
        .into_iter()
        .zip(jobs)
        .map(|(v, job)| match v {
            RawVerdict::Knot(KnotVerdict::Unknown) => {
                RawVerdict::Knot(classify_knotting(&job.graph, store))
            }
            RawVerdict::Knot(other) => {
                store.insert(&job.graph);
                RawVerdict::Knot(other)
            }
            link => link,
        })
        .collect()
}

pub fn table_check(id: &str, n_max: usize, store: &CertifiedStore) -> Result<TableReport, TableError> {
    let entries = load_table(id)?;
    let instances: Vec<Instance> = entries
        .iter()
        .flat_map(|e| instantiate(e, n_max))
        .collect();
    let jobs = jobs_for(&instances)?;
    let verdicts = classify_jobs(&jobs, store);

    let mut results = Vec::with_capacity(jobs.len());
    let mut mismatches = 0;
    let mut unknowns = 0;
    for (job, verdict) in jobs.iter().zip(verdicts) {
        let (got, matched, unknown, detail) = match (&verdict, job.expected) {
            (RawVerdict::Link(v), expected) => {
                let got = if v.is_linked() { "linked" } else { "not_linked" };
                let matched = (expected == Expected::Linked) == v.is_linked();
                (got.to_string(), matched, false, serde_json::to_value(v).unwrap())
            }
            (RawVerdict::Knot(v), expected) => {
                let got = match v {
                    KnotVerdict::Knotted { .. } => "knotted",
                    KnotVerdict::NotKnotted { .. } => "not_knotted",
                    KnotVerdict::Unknown => "unknown",
                };
                let matched = match v {
                    KnotVerdict::Knotted { .. } => expected == Expected::Knotted,
                    KnotVerdict::NotKnotted { .. } => expected == Expected::NotKnotted,
                    KnotVerdict::Unknown => false,
                };
                (
                    got.to_string(),
                    matched,
                    v.is_unknown(),
                    serde_json::to_value(v).unwrap(),
                )
            }
        };
        if !matched {
            mismatches += 1;
        }
        if unknown {
            unknowns += 1;
        }
        results.push(CaseResult {
            selector: job.selector.clone(),
            case_label: job.case_label.clone(),
            graph6: graph6::encode(&job.graph),
            n: job.graph.n(),
            expected: job.expected,
            got,
            matched,
            unknown,
            generated: job.generated,
            detail,
        });
    }
    Ok(TableReport {
        table: id.to_string(),
        n_max,
        entries: entries.len(),
        cases: results.len(),
        mismatches,
        unknowns,
        results,
    })
}

/// Graphs from the knotted columns (excluding generated ALL instances),
/// used as the Adams sweep population for the table scope.
pub fn knotted_table_graphs(n_max: usize) -> Result<Vec<(String, Graph)>, TableError> {
    let mut out = Vec::new();
    for id in ["ik0", "ik1", "ik2a", "ik2b"] {
        for entry in load_table(id)? {
            if entry.expected != Expected::Knotted {
                continue;
            }
            for inst in instantiate(&entry, n_max) {
                if inst.generated {
                    continue;
                }
                let resolved =
                    notation::resolve_text(&inst.selector).map_err(|source| TableError::Selector {
                        selector: inst.selector.clone(),
                        source,
                    })?;
                match resolved {
                    Resolved::One { graph, .. } => out.push((inst.selector.clone(), graph)),
                    Resolved::Cases(cases) => {
                        for case in cases {
                            out.push((format!("{}:{}", inst.selector, case.label()), case.graph));
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_tables_load() {
        for id in TABLE_IDS {
            let entries = load_table(id).unwrap();
            assert!(!entries.is_empty(), "table {} empty", id);
        }
        assert!(load_table("nope").is_err());
    }

    #[test]
    fn every_selector_resolves() {
        for id in TABLE_IDS {
            for entry in load_table(id).unwrap() {
                for inst in instantiate(&entry, 3) {
                    notation::resolve_text(&inst.selector).unwrap_or_else(|e| {
                        panic!("table {} selector {} fails: {}", id, inst.selector, e)
                    });
                }
            }
        }
    }

    #[test]
    fn n_row_instantiation() {
        let entry = TableEntry {
            selector: "K{n,3}-1e".into(),
            expected: Expected::NotLinked,
        };
        let instances = instantiate(&entry, 4);
        let sels: Vec<&str> = instances.iter().map(|i| i.selector.as_str()).collect();
        assert_eq!(sels, vec!["K{1,3}-1e", "K{2,3}-1e", "K{3,3}-1e", "K{4,3}-1e"]);
    }

    #[test]
    fn all_row_instantiation() {
        let entry = TableEntry {
            selector: "ALL(p>=6)".into(),
            expected: Expected::Linked,
        };
        let instances = instantiate(&entry, 6);
        assert!(instances.iter().all(|i| i.generated));
        assert!(instances.iter().any(|i| i.selector == "K{1,1,1,1,1,1}"));
        // part lists are descending and have 6 or 7 parts
        for inst in &instances {
            let inner = &inst.selector[2..inst.selector.find('}').unwrap()];
            let parts: Vec<usize> = inner.split(',').map(|s| s.parse().unwrap()).collect();
            assert!(parts.len() == 6 || parts.len() == 7);
            assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        }
    }

    #[test]
    fn partitions_are_exact() {
        let lists = descending_partitions(3, 5);
        assert!(lists.contains(&vec![1, 1, 1]));
        assert!(lists.contains(&vec![3, 1, 1]));
        assert!(lists.contains(&vec![2, 2, 1]));
        assert!(!lists.iter().any(|l| l.iter().sum::<usize>() > 5));
        assert!(lists.iter().all(|l| l.len() == 3));
    }

    #[test]
    fn spot_check_il0() {
        // the 0-deficient linking table is the fastest full check
        let store = CertifiedStore::new();
        let report = table_check("il0", 3, &store).unwrap();
        assert!(report.passed(), "mismatches: {:#?}",
            report.results.iter().filter(|r| !r.matched).collect::<Vec<_>>());
    }
}
