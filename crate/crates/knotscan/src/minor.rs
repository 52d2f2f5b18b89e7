//! Exhaustive minor containment with explicit, independently verifiable
//! witnesses.
//!
//! `has_minor` runs a branch-and-bound minor-model search: branch sets are
//! grown for the target's vertices in descending degree order, with safe
//! prunes on the remaining vertex and edge budgets. Results are memoized
//! under the canonical forms of the (host, target) pair in a shared
//! capacity-bounded cache. `has_minor_exhaustive` is an independent
//! delete/contract recursion kept as a cross-check for small hosts.

use std::collections::{BTreeMap, HashMap};
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::canon::{canonical_form, CanonicalForm};
use crate::graph::{mask_to_vec, Graph};
use crate::memo::MemoCache;

/// A minor model: one branch set per target vertex, as masks over host
/// vertices. Certifies that the target is a minor of the host.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinorWitness {
    branch_sets: Vec<u64>,
}

impl MinorWitness {
    pub fn new(branch_sets: Vec<u64>) -> MinorWitness {
        MinorWitness { branch_sets }
    }

    pub fn branch_sets(&self) -> &[u64] {
        &self.branch_sets
    }

    pub fn branch_set(&self, h_vertex: usize) -> Vec<usize> {
        mask_to_vec(self.branch_sets[h_vertex])
    }
}

#[derive(Serialize, Deserialize)]
struct WitnessJson {
    model: BTreeMap<String, Vec<usize>>,
}

impl Serialize for MinorWitness {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let model = self
            .branch_sets
            .iter()
            .enumerate()
            .map(|(v, &mask)| (v.to_string(), mask_to_vec(mask)))
            .collect();
        WitnessJson { model }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for MinorWitness {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = WitnessJson::deserialize(deserializer)?;
        let mut sets = vec![0u64; raw.model.len()];
        for (key, verts) in raw.model {
            let idx: usize = key.parse().map_err(serde::de::Error::custom)?;
            if idx >= sets.len() {
                return Err(serde::de::Error::custom("non-contiguous model keys"));
            }
            for v in verts {
                if v >= 64 {
                    return Err(serde::de::Error::custom("vertex out of range"));
                }
                sets[idx] |= 1 << v;
            }
        }
        Ok(MinorWitness { branch_sets: sets })
    }
}

/// Check the three witness invariants by purely local inspection:
/// branch sets nonempty and pairwise disjoint, each inducing a connected
/// subgraph of `g`, with a connecting edge for every edge of `h`.
pub fn verify_witness(g: &Graph, h: &Graph, w: &MinorWitness) -> bool {
    if w.branch_sets.len() != h.n() {
        return false;
    }
    let full = if g.n() == 0 { 0 } else { (1u64 << g.n()) - 1 };
    let mut seen = 0u64;
    for &set in &w.branch_sets {
        if set == 0 || set & !full != 0 || set & seen != 0 {
            return false;
        }
        seen |= set;
        if !g.is_connected_within(set) {
            return false;
        }
    }
    for (u, v) in h.edges() {
        if g.neighborhood_of(w.branch_sets[u]) & w.branch_sets[v] == 0 {
            return false;
        }
    }
    true
}

fn memo() -> &'static MemoCache<(CanonicalForm, CanonicalForm), Option<Vec<u64>>> {
    static MEMO: OnceLock<MemoCache<(CanonicalForm, CanonicalForm), Option<Vec<u64>>>> =
        OnceLock::new();
    MEMO.get_or_init(|| {
        let cap = std::env::var("KNOTSCAN_MEMO_CAP")
            .ok()
            .and_then(|s| s.parse().ok())
            .unwrap_or(1 << 20);
        MemoCache::new(cap)
    })
}

/// Decide whether `h` is a minor of `g`; on success the returned witness
/// always passes `verify_witness`. Exhaustive: a `None` answer means no
/// minor model exists.
pub fn has_minor(g: &Graph, h: &Graph) -> Option<MinorWitness> {
    if h.n() > g.n() || h.edge_count() > g.edge_count() {
        return None;
    }
    if h.n() == 0 {
        return Some(MinorWitness::new(Vec::new()));
    }
    let cg = canonical_form(g);
    let ch = canonical_form(h);
    let key = (cg.clone(), ch.clone());
    let model = match memo().get(&key) {
        Some(cached) => cached,
        None => {
            let gc = cg.canonical_graph();
            let hc = ch.canonical_graph();
            let model = ModelSearch::new(&gc, &hc).run();
            memo().insert(key, model.clone());
            model
        }
    };
    model.map(|m| map_model_back(&m, &cg, &ch))
}

/// Translate a model over canonical coordinates back to the original
/// labelings of host and target.
fn map_model_back(model: &[u64], cg: &CanonicalForm, ch: &CanonicalForm) -> MinorWitness {
    let mut inv_g = vec![0usize; cg.n()];
    for (orig, &pos) in cg.perm().iter().enumerate() {
        inv_g[pos] = orig;
    }
    let sets = (0..ch.n())
        .map(|v| {
            let canon_set = model[ch.perm()[v]];
            mask_to_vec(canon_set)
                .into_iter()
                .fold(0u64, |acc, pos| acc | (1 << inv_g[pos]))
        })
        .collect();
    MinorWitness::new(sets)
}

struct ModelSearch<'a> {
    g: &'a Graph,
    h: &'a Graph,
    /// h vertices in placement order: descending degree, then ascending id.
    order: Vec<usize>,
    /// earlier[i] = placement indices of already-placed h-neighbors of order[i].
    earlier: Vec<Vec<usize>>,
    /// later[i] = number of h-neighbors of order[i] placed after i.
    later: Vec<usize>,
    /// h_edges_rem[i] = h-edges with at least one endpoint at position >= i.
    h_edges_rem: Vec<usize>,
    sets: Vec<u64>,
    nbhds: Vec<u64>,
    used: u64,
    full: u64,
}

impl<'a> ModelSearch<'a> {
    fn new(g: &'a Graph, h: &'a Graph) -> ModelSearch<'a> {
        let hn = h.n();
        let mut order: Vec<usize> = (0..hn).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(h.degree(v)), v));
        let mut pos = vec![0usize; hn];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let mut earlier = vec![Vec::new(); hn];
        let mut later = vec![0usize; hn];
        for i in 0..hn {
            let hv = order[i];
            for w in mask_to_vec(h.neighbors(hv)) {
                if pos[w] < i {
                    earlier[i].push(pos[w]);
                } else {
                    later[i] += 1;
                }
            }
        }
        // h_edges_rem[i] = edges with at least one endpoint in the suffix
        let mut h_edges_rem = vec![0usize; hn + 1];
        let h_edges = h.edges();
        for i in 0..=hn {
            let suffix: u64 = order[i..].iter().fold(0u64, |m, &v| m | (1 << v));
            h_edges_rem[i] = h_edges
                .iter()
                .filter(|&&(u, v)| suffix & (1 << u) != 0 || suffix & (1 << v) != 0)
                .count();
        }
        let full = if g.n() == 0 { 0 } else { (1u64 << g.n()) - 1 };
        ModelSearch {
            g,
            h,
            order,
            earlier,
            later,
            h_edges_rem,
            sets: Vec::with_capacity(hn),
            nbhds: Vec::with_capacity(hn),
            used: 0,
            full,
        }
    }

    fn run(mut self) -> Option<Vec<u64>> {
        let budget = self.g.n() - self.h.n();
        if self.place(0, budget) {
            let mut model = vec![0u64; self.h.n()];
            for (i, &hv) in self.order.iter().enumerate() {
                model[hv] = self.sets[i];
            }
            Some(model)
        } else {
            None
        }
    }

    fn g_edges_touching_free(&self) -> usize {
        let used = self.used;
        let mut within_used = 0;
        let mut m = used;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            within_used += (self.g.neighbors(v) & used).count_ones() as usize;
            m &= m - 1;
        }
        self.g.edge_count() - within_used / 2
    }

    fn place(&mut self, idx: usize, budget: usize) -> bool {
        if idx == self.h.n() {
            return true;
        }
        if self.g_edges_touching_free() < self.h_edges_rem[idx] {
            return false;
        }
        let free = self.full & !self.used;
        let cap = 1 + budget;
        let mut roots = free;
        while roots != 0 {
            let root = roots.trailing_zeros() as usize;
            roots &= roots - 1;
            let allowed = free & !((1u64 << root) - 1) & !(1 << root);
            let s = 1u64 << root;
            let nb_s = self.g.neighbors(root);
            let ext = nb_s & allowed;
            if self.grow(idx, budget, cap, s, nb_s, ext, allowed) {
                return true;
            }
        }
        false
    }

    #[allow(clippy::too_many_arguments)]
    fn grow(
        &mut self,
        idx: usize,
        budget: usize,
        cap: usize,
        s: u64,
        nb_s: u64,
        ext: u64,
        allowed: u64,
    ) -> bool {
        if self.try_place(idx, budget, s, nb_s) {
            return true;
        }
        if (s.count_ones() as usize) < cap {
            let mut pool = ext;
            while pool != 0 {
                let v = pool.trailing_zeros() as usize;
                pool &= pool - 1;
                let nb_v = self.g.neighbors(v);
                // exclusive neighbors: new frontier not already reachable
                let excl = nb_v & allowed & !s & !nb_s;
                let child_ext = pool | excl;
                if self.grow(
                    idx,
                    budget,
                    cap,
                    s | (1 << v),
                    nb_s | nb_v,
                    child_ext,
                    allowed,
                ) {
                    return true;
                }
            }
        }
        false
    }

    fn try_place(&mut self, idx: usize, budget: usize, s: u64, nb_s: u64) -> bool {
        for &j in &self.earlier[idx] {
            if self.nbhds[j] & s == 0 {
                return false;
            }
        }
        // each future neighbor's branch set needs its own contact vertex
        let free_after = self.full & !self.used & !s;
        if ((nb_s & free_after).count_ones() as usize) < self.later[idx] {
            return false;
        }
        let extra = s.count_ones() as usize - 1;
        self.sets.push(s);
        self.nbhds.push(nb_s & !s);
        self.used |= s;
        if self.place(idx + 1, budget - extra) {
            return true;
        }
        self.used &= !s;
        self.nbhds.pop();
        self.sets.pop();
        false
    }
}

/// Independent exhaustive route: memoized recursion over single edge
/// deletions, edge contractions, and isolated-vertex deletions. Intended
/// for small hosts (n <= 12); used as a cross-check oracle.
pub fn has_minor_exhaustive(g: &Graph, h: &Graph) -> bool {
    let ch = canonical_form(h);
    let mut seen: HashMap<CanonicalForm, bool> = HashMap::new();
    exhaustive_rec(g, h, &ch, &mut seen)
}

fn exhaustive_rec(
    g: &Graph,
    h: &Graph,
    ch: &CanonicalForm,
    seen: &mut HashMap<CanonicalForm, bool>,
) -> bool {
    if g.n() < h.n() || g.edge_count() < h.edge_count() {
        return false;
    }
    let cg = canonical_form(g);
    if let Some(&r) = seen.get(&cg) {
        return r;
    }
    let result = if g.n() == h.n() && g.edge_count() == h.edge_count() {
        cg == *ch
    } else {
        let mut found = cg == *ch;
        if !found && g.n() > h.n() {
            if let Some(v) = (0..g.n()).find(|&v| g.degree(v) == 0) {
                found = exhaustive_rec(&g.delete_vertex(v).unwrap(), h, ch, seen);
            }
        }
        if !found {
            for (u, v) in g.edges() {
                if exhaustive_rec(&g.delete_edge(u, v).unwrap(), h, ch, seen)
                    || exhaustive_rec(&g.contract_edge(u, v).unwrap(), h, ch, seen)
                {
                    found = true;
                    break;
                }
            }
        }
        found
    };
    seen.insert(cg, result);
    result
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::complete_multipartite;

    fn k(n: usize) -> Graph {
        Graph::complete(n).unwrap()
    }

    fn kp(parts: &[usize]) -> Graph {
        complete_multipartite(parts).unwrap().0
    }

    #[test]
    fn k5_minor_of_k6() {
        let w = has_minor(&k(6), &k(5)).unwrap();
        assert!(verify_witness(&k(6), &k(5), &w));
    }

    #[test]
    fn part_merge_gives_minor() {
        // merging the 2-part and a singleton of K_{3,2,1,1} yields K_{3,3,1}
        let g = kp(&[3, 2, 1, 1]);
        let h = kp(&[3, 3, 1]);
        let w = has_minor(&g, &h).expect("pair-merge minor");
        assert!(verify_witness(&g, &h, &w));
    }

    #[test]
    fn k5_not_minor_of_k33() {
        assert!(has_minor(&kp(&[3, 3]), &k(5)).is_none());
    }

    #[test]
    fn witness_rejections() {
        let g = k(6);
        let h = k(5);
        let w = has_minor(&g, &h).unwrap();
        assert!(verify_witness(&g, &h, &w));
        // overlapping branch sets
        let mut sets = w.branch_sets().to_vec();
        sets[1] = sets[0];
        assert!(!verify_witness(&g, &h, &MinorWitness::new(sets)));
        // empty set
        let mut sets = w.branch_sets().to_vec();
        sets[2] = 0;
        assert!(!verify_witness(&g, &h, &MinorWitness::new(sets)));
        // missing connection: model K2 in 2K1
        let two = Graph::empty(2).unwrap();
        let w = MinorWitness::new(vec![1, 2]);
        assert!(!verify_witness(&two, &k(2), &w));
        // disconnected branch set
        let path = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let w = MinorWitness::new(vec![0b101, 0b010]);
        assert!(!verify_witness(&path, &k(2), &w));
    }

    #[test]
    fn empty_and_isolated_targets() {
        let g = k(3);
        let h0 = Graph::empty(0).unwrap();
        assert!(has_minor(&g, &h0).is_some());
        let h2 = Graph::empty(2).unwrap();
        let w = has_minor(&g, &h2).unwrap();
        assert!(verify_witness(&g, &h2, &w));
        assert!(has_minor(&k(1), &h2).is_none());
    }

    #[test]
    fn contraction_needed_for_minor() {
        // C6 reaches K3 only through contractions
        let c6 = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
        let w = has_minor(&c6, &k(3)).unwrap();
        assert!(verify_witness(&c6, &k(3), &w));
        assert!(has_minor(&c6, &k(4)).is_none());
    }

    #[test]
    fn petersen_contains_k5_not_k6() {
        let petersen = Graph::from_edges(
            10,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 0),
                (5, 7),
                (7, 9),
                (9, 6),
                (6, 8),
                (8, 5),
                (0, 5),
                (1, 6),
                (2, 7),
                (3, 8),
                (4, 9),
            ],
        )
        .unwrap();
        let w = has_minor(&petersen, &k(5)).unwrap();
        assert!(verify_witness(&petersen, &k(5), &w));
        assert!(has_minor(&petersen, &k(6)).is_none());
    }

    #[test]
    fn exhaustive_route_agrees_small() {
        let hosts = vec![
            k(5),
            k(6),
            kp(&[3, 3]),
            kp(&[2, 2, 2]),
            kp(&[3, 2, 1]),
            Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap(),
        ];
        let targets = vec![k(3), k(4), k(5), kp(&[3, 3]), kp(&[2, 2, 1])];
        for g in &hosts {
            for h in &targets {
                let fast = has_minor(g, h).is_some();
                let slow = has_minor_exhaustive(g, h);
                assert_eq!(fast, slow, "disagree on {:?} vs {:?}", g, h);
            }
        }
    }

    #[test]
    fn minor_is_transitive_spot() {
        let g = kp(&[3, 3, 1]);
        let h = kp(&[3, 3]);
        let t = k(4);
        assert!(has_minor(&g, &h).is_some());
        assert!(has_minor(&h, &t).is_some());
        assert!(has_minor(&g, &t).is_some());
    }

    #[test]
    fn witness_json_round_trip() {
        let w = has_minor(&k(6), &k(5)).unwrap();
        let json = serde_json::to_string(&w).unwrap();
        assert!(json.contains("\"model\""));
        let back: MinorWitness = serde_json::from_str(&json).unwrap();
        assert_eq!(back, w);
    }
}
