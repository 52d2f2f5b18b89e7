//! Isomorph-free enumeration of "complete multipartite minus k edges".
//!
//! Every k-subset of removable edges is generated and bucketed by canonical
//! form; each orbit keeps one deterministic representative, labeled with the
//! lexicographically least edge set in paper notation.

use std::collections::HashMap;

use thiserror::Error;

use crate::canon::{canonical_form, CanonicalForm};
use crate::graph::{complete_multipartite, Graph, PartLabeling};
use crate::notation::{EdgeLabel, VertexRef};

pub const DEFAULT_CASE_CAP: usize = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DeficientError {
    #[error("{0}")]
    Graph(#[from] crate::error::GraphError),
    #[error("enumeration of {total} edge subsets exceeds the cap of {cap}")]
    TooManyCases { total: u128, cap: usize },
    #[error("cannot remove {k} edges from a graph with {m}")]
    TooManyRemovals { k: usize, m: usize },
}

/// One isomorphism orbit of a k-deficient graph.
#[derive(Debug, Clone)]
pub struct DeficientCase {
    pub parts: Vec<usize>,
    pub k: usize,
    /// Removed edges of the representative, in paper notation, sorted.
    pub labels: Vec<EdgeLabel>,
    pub graph: Graph,
    pub labeling: PartLabeling,
    pub orbit_size: usize,
}

impl DeficientCase {
    /// Paper-style label, e.g. `{(a1,b1),(a1,b2)}`.
    pub fn label(&self) -> String {
        format!(
            "{{{}}}",
            self.labels
                .iter()
                .map(|e| e.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

fn edge_label(labeling: &PartLabeling, u: usize, v: usize) -> EdgeLabel {
    let name = |x: usize| {
        let (letter, index) = labeling.name_of(x);
        VertexRef {
            letter,
            index: if labeling.part_size_of(x) > 1 {
                Some(index)
            } else {
                None
            },
        }
    };
    EdgeLabel::new(name(u), name(v))
}

/// Enumerate the isomorphism orbits of removing `k` edges from the complete
/// multipartite graph on `parts`. Edges in `fixed` are removed in every
/// subset (the constrained-wildcard case); `fixed` must have at most `k`
/// entries. Representatives are ordered by their label sets.
pub fn enumerate_deficient(
    parts: &[usize],
    k: usize,
    fixed: &[(usize, usize)],
) -> Result<Vec<DeficientCase>, DeficientError> {
    enumerate_deficient_capped(parts, k, fixed, DEFAULT_CASE_CAP)
}

/// A single part `[n]` denotes the complete graph K_n: n singleton parts
/// labeled a, b, c, …
pub fn effective_parts(parts: &[usize]) -> Vec<usize> {
    if parts.len() == 1 {
        vec![1; parts[0]]
    } else {
        parts.to_vec()
    }
}

pub fn enumerate_deficient_capped(
    parts: &[usize],
    k: usize,
    fixed: &[(usize, usize)],
    cap: usize,
) -> Result<Vec<DeficientCase>, DeficientError> {
    let (g0, labeling) = complete_multipartite(&effective_parts(parts))?;
    let m = g0.edge_count();
    if k > m {
        return Err(DeficientError::TooManyRemovals { k, m });
    }
    assert!(fixed.len() <= k, "more fixed edges than removals");

    let norm_fixed: Vec<(usize, usize)> = fixed
        .iter()
        .map(|&(u, v)| if u < v { (u, v) } else { (v, u) })
        .collect();
    let free_edges: Vec<(usize, usize)> = g0
        .edges()
        .into_iter()
        .filter(|e| !norm_fixed.contains(e))
        .collect();
    let choose = k - norm_fixed.len();
    let total = binomial(free_edges.len() as u128, choose as u128);
    if total > cap as u128 {
        return Err(DeficientError::TooManyCases { total, cap });
    }

    struct Orbit {
        labels: Vec<EdgeLabel>,
        graph: Graph,
        size: usize,
    }
    let mut orbits: HashMap<CanonicalForm, Orbit> = HashMap::new();

    let mut subset: Vec<usize> = (0..choose).collect();
    loop {
        let mut g = g0.clone();
        let mut labels: Vec<EdgeLabel> = Vec::with_capacity(k);
        for &(u, v) in &norm_fixed {
            g = g.delete_edge(u, v)?;
            labels.push(edge_label(&labeling, u, v));
        }
        for &i in &subset {
            let (u, v) = free_edges[i];
            g = g.delete_edge(u, v)?;
            labels.push(edge_label(&labeling, u, v));
        }
        labels.sort();
        let cf = canonical_form(&g);
        orbits
            .entry(cf)
            .and_modify(|o| {
                o.size += 1;
                if labels < o.labels {
                    o.labels = labels.clone();
                    o.graph = g.clone();
                }
            })
            .or_insert_with(|| Orbit {
                labels,
                graph: g,
                size: 1,
            });

        if !next_combination(&mut subset, free_edges.len()) {
            break;
        }
    }

    let mut cases: Vec<DeficientCase> = orbits
        .into_values()
        .map(|o| DeficientCase {
            parts: parts.to_vec(),
            k,
            labels: o.labels,
            graph: o.graph,
            labeling: labeling.clone(),
            orbit_size: o.size,
        })
        .collect();
    cases.sort_by(|a, b| a.labels.cmp(&b.labels));
    Ok(cases)
}

/// Advance `subset` to the next k-combination of {0..n}; false when done.
fn next_combination(subset: &mut [usize], n: usize) -> bool {
    let k = subset.len();
    if k == 0 {
        return false;
    }
    let mut i = k;
    while i > 0 {
        i -= 1;
        if subset[i] < n - (k - i) {
            subset[i] += 1;
            for j in (i + 1)..k {
                subset[j] = subset[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

pub fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k7_minus_two_edges_has_two_cases() {
        let cases = enumerate_deficient(&[7], 2, &[]).unwrap();
        assert_eq!(cases.len(), 2);
        let total: usize = cases.iter().map(|c| c.orbit_size).sum();
        assert_eq!(total as u128, binomial(21, 2));
    }

    #[test]
    fn k333_minus_one_edge_single_case() {
        let cases = enumerate_deficient(&[3, 3, 3], 1, &[]).unwrap();
        assert_eq!(cases.len(), 1);
        assert_eq!(cases[0].orbit_size, 27);
    }

    #[test]
    fn k441_minus_one_edge_two_cases() {
        let cases = enumerate_deficient(&[4, 4, 1], 1, &[]).unwrap();
        assert_eq!(cases.len(), 2);
        let labels: Vec<String> = cases.iter().map(|c| c.label()).collect();
        assert_eq!(labels, vec!["{(a1,b1)}", "{(a1,c)}"]);
    }

    #[test]
    fn k54_minus_two_edges_three_cases() {
        let cases = enumerate_deficient(&[5, 4], 2, &[]).unwrap();
        assert_eq!(cases.len(), 3);
        let total: usize = cases.iter().map(|c| c.orbit_size).sum();
        assert_eq!(total as u128, binomial(20, 2));
    }

    #[test]
    fn orbit_sizes_sum_to_binomial() {
        for (parts, k) in [
            (vec![4, 3, 1], 2usize),
            (vec![3, 3, 2], 2),
            (vec![4, 2, 1, 1], 2),
            (vec![6], 2),
        ] {
            let (g, _) = complete_multipartite(&effective_parts(&parts)).unwrap();
            let m = g.edge_count() as u128;
            let cases = enumerate_deficient(&parts, k, &[]).unwrap();
            let total: usize = cases.iter().map(|c| c.orbit_size).sum();
            assert_eq!(total as u128, binomial(m, k as u128), "parts {:?}", parts);
        }
    }

    #[test]
    fn representative_labels_are_minimal() {
        let cases = enumerate_deficient(&[4, 3, 1], 2, &[]).unwrap();
        // paper: 3 AB-pair cases plus mixed ones; check the shared-vertex cases exist
        let labels: Vec<String> = cases.iter().map(|c| c.label()).collect();
        assert!(labels.contains(&"{(a1,b1),(a1,b2)}".to_string()));
        assert!(labels.contains(&"{(a1,b1),(a2,b1)}".to_string()));
        assert!(labels.contains(&"{(a1,b1),(a2,b2)}".to_string()));
    }

    #[test]
    fn constrained_enumeration() {
        // fix (b1, c); one free edge over the rest
        let (_, labeling) = complete_multipartite(&[4, 3, 1]).unwrap();
        let b1 = labeling.vertex('b', Some(1)).unwrap();
        let c = labeling.vertex('c', None).unwrap();
        let cases = enumerate_deficient(&[4, 3, 1], 2, &[(b1, c)]).unwrap();
        assert!(!cases.is_empty());
        for case in &cases {
            assert!(case.labels.iter().any(|e| e.to_string() == "(b1,c)"));
        }
        let total: usize = cases.iter().map(|c| c.orbit_size).sum();
        assert_eq!(total, 18); // 19 edges minus the fixed one
    }

    #[test]
    fn cap_enforced() {
        let err = enumerate_deficient_capped(&[7], 10, &[], 100).unwrap_err();
        assert!(matches!(err, DeficientError::TooManyCases { .. }));
    }
}
