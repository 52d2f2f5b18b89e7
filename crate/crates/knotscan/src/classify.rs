//! Linking and knotting verdicts.
//!
//! Linking is exact: a graph is intrinsically linked iff it has a Petersen
//! family minor. Knotting is certificate-based and tri-state: `Knotted`
//! carries a verified minor witness for a registry member, `NotKnotted`
//! carries exactly one re-checkable certificate, and `Unknown` is honest
//! ignorance, never silently coerced.

use std::collections::HashMap;

use parking_lot::RwLock;
use rayon::prelude::*;
use serde::Serialize;

use crate::canon::{canonical_form, CanonicalForm};
use crate::graph::Graph;
use crate::graph6;
use crate::minor::{has_minor, MinorWitness};
use crate::planar::{apex_vertex, is_planar, planar_pair};
use crate::ty::{mmik_registry, petersen_registry};

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum LinkVerdict {
    Linked {
        member: String,
        witness: MinorWitness,
    },
    NotLinked {
        /// True when every Petersen minor was excluded by search (always
        /// the case when no apex shortcut applied, or in validation mode).
        exhaustive: bool,
        apex: Option<usize>,
    },
}

impl LinkVerdict {
    pub fn is_linked(&self) -> bool {
        matches!(self, LinkVerdict::Linked { .. })
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum KnotVerdict {
    Knotted {
        member: String,
        witness: MinorWitness,
    },
    NotKnotted {
        certificate: Certificate,
    },
    Unknown,
}

impl KnotVerdict {
    pub fn is_knotted(&self) -> bool {
        matches!(self, KnotVerdict::Knotted { .. })
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self, KnotVerdict::Unknown)
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    /// Deleting vertices u and v leaves a planar graph.
    PairDeletionPlanar { u: usize, v: usize },
    /// The graph is a proper minor of a minor-minimal registry member.
    ProperMinorOfMmik { member: String },
    /// The graph is a minor of an already-certified not-knotted graph.
    MinorOfCertified { reference: String },
}

/// Session store of graphs certified not knotted, keyed by canonical form.
/// Values are the graph6 encodings used as references in certificates.
#[derive(Debug, Default)]
pub struct CertifiedStore {
    inner: RwLock<HashMap<CanonicalForm, String>>,
}

impl CertifiedStore {
    pub fn new() -> CertifiedStore {
        CertifiedStore::default()
    }

    pub fn insert(&self, g: &Graph) {
        let cf = canonical_form(g);
        let enc = graph6::encode(&cf.canonical_graph());
        self.inner.write().insert(cf, enc);
    }

    pub fn lookup(&self, cf: &CanonicalForm) -> Option<String> {
        self.inner.read().get(cf).cloned()
    }

    pub fn len(&self) -> usize {
        self.inner.read().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Stored graphs with at least `n` vertices and `m` edges, decoded.
    fn candidates(&self, n: usize, m: usize) -> Vec<(String, Graph)> {
        let mut out: Vec<(String, Graph)> = self
            .inner
            .read()
            .values()
            .filter_map(|enc| {
                let g = graph6::decode(enc).ok()?;
                (g.n() >= n && g.edge_count() >= m).then(|| (enc.clone(), g))
            })
            .collect();
        out.sort_by(|a, b| a.0.cmp(&b.0));
        out
    }

    pub fn encodings(&self) -> Vec<String> {
        let mut v: Vec<String> = self.inner.read().values().cloned().collect();
        v.sort();
        v
    }
}

/// Exact linking classification via the Petersen family.
pub fn classify_linking(g: &Graph) -> LinkVerdict {
    classify_linking_opts(g, false)
}

pub fn classify_linking_opts(g: &Graph, validate: bool) -> LinkVerdict {
    if let Some(apex) = apex_vertex(g) {
        if validate {
            let exhaustive = petersen_minor(g);
            assert!(
                exhaustive.is_none(),
                "apex fast path contradicts an exhaustive Petersen minor"
            );
        }
        return LinkVerdict::NotLinked {
            exhaustive: validate,
            apex: Some(apex),
        };
    }
    match petersen_minor(g) {
        Some((member, witness)) => LinkVerdict::Linked { member, witness },
        None => LinkVerdict::NotLinked {
            exhaustive: true,
            apex: None,
        },
    }
}

fn petersen_minor(g: &Graph) -> Option<(String, MinorWitness)> {
    for member in &petersen_registry().members {
        if let Some(w) = has_minor(g, &member.graph) {
            return Some((member.name.clone(), w));
        }
    }
    None
}

/// Certificate-based knotting classification. Any `NotKnotted` result is
/// recorded in the store for later `MinorOfCertified` propagation.
pub fn classify_knotting(g: &Graph, store: &CertifiedStore) -> KnotVerdict {
    for member in &mmik_registry().members {
        if let Some(witness) = has_minor(g, &member.graph) {
            return KnotVerdict::Knotted {
                member: member.name.clone(),
                witness,
            };
        }
    }
    let verdict = not_knotted_certificate(g, store);
    if let KnotVerdict::NotKnotted { .. } = &verdict {
        store.insert(g);
    }
    verdict
}

fn not_knotted_certificate(g: &Graph, store: &CertifiedStore) -> KnotVerdict {
    if let Some((u, v)) = planar_pair(g) {
        return KnotVerdict::NotKnotted {
            certificate: Certificate::PairDeletionPlanar { u, v },
        };
    }
    for member in &mmik_registry().members {
        // proper: g is never isomorphic to a member here, otherwise the
        // member search would have matched it
        if has_minor(&member.graph, g).is_some() {
            return KnotVerdict::NotKnotted {
                certificate: Certificate::ProperMinorOfMmik {
                    member: member.name.clone(),
                },
            };
        }
    }
    // fast path: an already-certified one-edge supergraph
    let full = if g.n() == 0 { 0u64 } else { (1u64 << g.n()) - 1 };
    for u in 0..g.n() {
        // non-neighbors above u, so each missing edge is tried once
        let above = full & !((1u64 << (u + 1)) - 1);
        let mut m = above & !g.neighbors(u);
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            let parent = Graph::from_edges(
                g.n(),
                &[g.edges(), vec![(u, v)]].concat(),
            )
            .expect("edge within range");
            if let Some(reference) = store.lookup(&canonical_form(&parent)) {
                return KnotVerdict::NotKnotted {
                    certificate: Certificate::MinorOfCertified { reference },
                };
            }
        }
    }
    for (reference, h) in store.candidates(g.n(), g.edge_count()) {
        if has_minor(&h, g).is_some() {
            return KnotVerdict::NotKnotted {
                certificate: Certificate::MinorOfCertified { reference },
            };
        }
    }
    KnotVerdict::Unknown
}

/// Re-check a certificate by the corresponding engine call.
pub fn verify_certificate(g: &Graph, cert: &Certificate, store: &CertifiedStore) -> bool {
    match cert {
        Certificate::PairDeletionPlanar { u, v } => {
            if *u >= g.n() || *v >= g.n() || u == v {
                return false;
            }
            let (hi, lo) = if u > v { (*u, *v) } else { (*v, *u) };
            let reduced = g.delete_vertex(hi).unwrap().delete_vertex(lo).unwrap();
            is_planar(&reduced)
        }
        Certificate::ProperMinorOfMmik { member } => match mmik_registry().member(member) {
            Some(m) => {
                has_minor(&m.graph, g).is_some() && canonical_form(&m.graph) != canonical_form(g)
            }
            None => false,
        },
        Certificate::MinorOfCertified { reference } => match graph6::decode(reference) {
            Ok(h) => store.lookup(&canonical_form(&h)).is_some() && has_minor(&h, g).is_some(),
            Err(_) => false,
        },
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct AdamsEntry {
    pub vertex: usize,
    pub linked: bool,
    pub member: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct AdamsReport {
    /// False means the graph was not knotted, making the check vacuous.
    pub knotted: bool,
    pub entries: Vec<AdamsEntry>,
    pub pass: bool,
}

/// For a knotted graph, verify every single-vertex deletion is linked.
/// Not-knotted inputs report a vacuous pass.
pub fn check_adams(g: &Graph, store: &CertifiedStore) -> AdamsReport {
    if !classify_knotting(g, store).is_knotted() {
        return AdamsReport {
            knotted: false,
            entries: Vec::new(),
            pass: true,
        };
    }
    let entries: Vec<AdamsEntry> = (0..g.n())
        .into_par_iter()
        .map(|v| {
            let reduced = g.delete_vertex(v).unwrap();
            match classify_linking(&reduced) {
                LinkVerdict::Linked { member, .. } => AdamsEntry {
                    vertex: v,
                    linked: true,
                    member: Some(member),
                },
                LinkVerdict::NotLinked { .. } => AdamsEntry {
                    vertex: v,
                    linked: false,
                    member: None,
                },
            }
        })
        .collect();
    let pass = entries.iter().all(|e| e.linked);
    AdamsReport {
        knotted: true,
        entries,
        pass,
    }
}
