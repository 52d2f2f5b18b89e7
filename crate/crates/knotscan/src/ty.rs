//! Triangle-Y and Y-triangle exchanges, family closures, and the three
//! registries the classifications depend on: the Petersen family and the
//! two knotting families grown from K7 and K_{3,3,1,1}.

use std::collections::{HashMap, VecDeque};
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::canon::{canonical_form, CanonicalForm};
use crate::error::GraphError;
use crate::graph::{complete_multipartite, mask_to_vec, Graph};
use crate::minor::has_minor;
use crate::notation;

/// Replace a triangle's three edges by a new vertex joined to its corners.
/// Edge count is preserved; vertex count grows by one.
pub fn delta_y(g: &Graph, triangle: [usize; 3]) -> Result<Graph, GraphError> {
    let [a, b, c] = triangle;
    if !(g.has_edge(a, b) && g.has_edge(a, c) && g.has_edge(b, c)) {
        return Err(GraphError::NotATriangle(triangle));
    }
    g.delete_edge(a, b)?
        .delete_edge(a, c)?
        .delete_edge(b, c)?
        .extend_with_vertex(&[a, b, c])
}

/// Inverse exchange: remove a degree-3 vertex and pairwise connect its
/// neighbors, coalescing any edge already present.
pub fn y_delta(g: &Graph, v: usize) -> Result<Graph, GraphError> {
    let degree = g.degree(v);
    if degree != 3 {
        return Err(GraphError::DegreeNotThree { v, degree });
    }
    let nb = mask_to_vec(g.neighbors(v));
    let (x, y, z) = (nb[0], nb[1], nb[2]);
    let mut edges = g.edges();
    edges.push((x, y));
    edges.push((x, z));
    edges.push((y, z));
    Graph::from_edges(g.n(), &edges)?.delete_vertex(v)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Move {
    #[serde(rename = "dy")]
    DeltaY([usize; 3]),
    #[serde(rename = "yd")]
    YDelta(usize),
}

impl Move {
    pub fn apply(&self, g: &Graph) -> Result<Graph, GraphError> {
        match *self {
            Move::DeltaY(t) => delta_y(g, t),
            Move::YDelta(v) => y_delta(g, v),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum MoveSet {
    DeltaYOnly,
    Both,
}

impl MoveSet {
    pub fn includes_y_delta(&self) -> bool {
        matches!(self, MoveSet::Both)
    }
}

#[derive(Debug, Error)]
pub enum ClosureError {
    #[error("{0}")]
    Graph(#[from] GraphError),
    #[error("closure exceeded the size cap of {cap} members")]
    TooLarge { cap: usize },
}

#[derive(Debug, Clone)]
pub struct FamilyMember {
    pub name: String,
    /// True when the name was assigned by canonical order rather than a
    /// structural identification.
    pub positional: bool,
    pub graph: Graph,
    pub canon: CanonicalForm,
    pub degseq: Vec<usize>,
    /// Moves that reproduce this member from the seed, in order.
    pub path: Vec<Move>,
}

#[derive(Debug, Clone)]
pub struct FamilyRegistry {
    pub name: String,
    pub seed: Graph,
    pub moves: MoveSet,
    /// Members sorted by (vertex count, edge count, canonical bit-string).
    pub members: Vec<FamilyMember>,
    pub provenance: String,
}

impl FamilyRegistry {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, g: &Graph) -> Option<&FamilyMember> {
        let cf = canonical_form(g);
        self.members.iter().find(|m| m.canon == cf)
    }

    pub fn member(&self, name: &str) -> Option<&FamilyMember> {
        self.members.iter().find(|m| m.name == name)
    }
}

pub const DEFAULT_CLOSURE_CAP: usize = 10_000;

/// Breadth-first closure of a seed under the allowed exchanges,
/// deduplicated by canonical form. Members are named positionally
/// (`<letter><vertex count>`); callers may rename afterwards.
pub fn closure(seed: &Graph, moves: MoveSet, cap: usize) -> Result<FamilyRegistry, ClosureError> {
    struct Raw {
        graph: Graph,
        canon: CanonicalForm,
        path: Vec<Move>,
    }
    let seed_canon = canonical_form(seed);
    let mut members: Vec<Raw> = vec![Raw {
        graph: seed.clone(),
        canon: seed_canon.clone(),
        path: Vec::new(),
    }];
    let mut seen: HashMap<CanonicalForm, usize> = HashMap::new();
    seen.insert(seed_canon, 0);
    let mut frontier: VecDeque<usize> = VecDeque::new();
    frontier.push_back(0);

    while !frontier.is_empty() {
        let batch: Vec<usize> = frontier.drain(..).collect();
        // expand the whole frontier in parallel, merge deterministically
        let expansions: Vec<Vec<(Graph, Move)>> = batch
            .par_iter()
            .map(|&i| {
                let g = &members[i].graph;
                let mut out: Vec<(Graph, Move)> = Vec::new();
                for t in g.triangles() {
                    if let Ok(child) = delta_y(g, t) {
                        out.push((child, Move::DeltaY(t)));
                    }
                }
                if moves.includes_y_delta() {
                    for v in 0..g.n() {
                        if g.degree(v) == 3 {
                            if let Ok(child) = y_delta(g, v) {
                                out.push((child, Move::YDelta(v)));
                            }
                        }
                    }
                }
                out
            })
            .collect();
        for (&parent, children) in batch.iter().zip(expansions) {
            for (child, mv) in children {
                let cf = canonical_form(&child);
                if seen.contains_key(&cf) {
                    continue;
                }
                let mut path = members[parent].path.clone();
                path.push(mv);
                seen.insert(cf.clone(), members.len());
                frontier.push_back(members.len());
                members.push(Raw {
                    graph: child,
                    canon: cf,
                    path,
                });
                if members.len() > cap {
                    return Err(ClosureError::TooLarge { cap });
                }
            }
        }
    }

    let mut members: Vec<FamilyMember> = members
        .into_iter()
        .map(|r| FamilyMember {
            name: String::new(),
            positional: true,
            degseq: r.graph.degree_sequence(),
            graph: r.graph,
            canon: r.canon,
            path: r.path,
        })
        .collect();
    members.sort_by(|a, b| {
        (a.graph.n(), a.graph.edge_count())
            .cmp(&(b.graph.n(), b.graph.edge_count()))
            .then_with(|| a.canon.cmp(&b.canon))
    });
    assign_positional_names(&mut members);
    Ok(FamilyRegistry {
        name: String::new(),
        seed: seed.clone(),
        moves,
        members,
        provenance: String::new(),
    })
}

/// `<letter><vertex count>` per vertex-count group, letters in canonical
/// order within the group.
fn assign_positional_names(members: &mut [FamilyMember]) {
    let mut index_within: HashMap<usize, usize> = HashMap::new();
    for m in members.iter_mut() {
        let i = index_within.entry(m.graph.n()).or_insert(0);
        m.name = format!("{}{}", (b'A' + *i as u8) as char, m.graph.n());
        m.positional = true;
        *i += 1;
    }
}

fn rename(members: &mut [FamilyMember], canon: &CanonicalForm, name: &str, positional: bool) {
    if let Some(m) = members.iter_mut().find(|m| m.canon == *canon) {
        m.name = name.to_string();
        m.positional = positional;
    }
}

/// The Petersen family: closure of K6 under both exchanges. Seven members.
pub fn petersen_registry() -> &'static FamilyRegistry {
    static REG: OnceLock<FamilyRegistry> = OnceLock::new();
    REG.get_or_init(|| {
        let k6 = Graph::complete(6).unwrap();
        let mut reg = closure(&k6, MoveSet::Both, DEFAULT_CLOSURE_CAP).unwrap();
        reg.name = "petersen".into();
        reg.provenance =
            "closure of K6 under both exchanges; named members identified structurally".into();
        rename(&mut reg.members, &canonical_form(&k6), "K{6}", false);
        let k331 = complete_multipartite(&[3, 3, 1]).unwrap().0;
        rename(&mut reg.members, &canonical_form(&k331), "K{3,3,1}", false);
        let k44 = complete_multipartite(&[4, 4]).unwrap().0;
        let k44e = k44.delete_edge(0, 4).unwrap();
        rename(&mut reg.members, &canonical_form(&k44e), "K{4,4}-e", false);
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
        rename(&mut reg.members, &canonical_form(&petersen), "Petersen", false);
        // remaining three get P<n> names: one 7-, one 8-, one 9-vertex member
        for m in reg.members.iter_mut() {
            if m.positional {
                m.name = format!("P{}", m.graph.n());
            }
        }
        reg
    })
}

/// Closure of K7 under triangle-Y exchanges: K7 plus thirteen descendants.
pub fn k7_family() -> &'static FamilyRegistry {
    static REG: OnceLock<FamilyRegistry> = OnceLock::new();
    REG.get_or_init(|| {
        let k7 = Graph::complete(7).unwrap();
        let mut reg = closure(&k7, MoveSet::DeltaYOnly, DEFAULT_CLOSURE_CAP).unwrap();
        reg.name = "k7".into();
        reg.provenance = "closure of K7 under triangle-Y; H8 is the unique 8-vertex member, \
                          H9 the 9-vertex member embedding in K{3,3,3}; other names positional"
            .into();
        rename(&mut reg.members, &canonical_form(&k7), "K{7}", false);
        // H8: the unique 8-vertex member
        let eight: Vec<CanonicalForm> = reg
            .members
            .iter()
            .filter(|m| m.graph.n() == 8)
            .map(|m| m.canon.clone())
            .collect();
        if let [only] = eight.as_slice() {
            rename(&mut reg.members, only, "H8", false);
        }
        // H9: the 9-vertex member that is a minor of (in fact a spanning
        // subgraph of) K_{3,3,3}
        let k333 = complete_multipartite(&[3, 3, 3]).unwrap().0;
        let nine: Vec<CanonicalForm> = reg
            .members
            .iter()
            .filter(|m| m.graph.n() == 9 && has_minor(&k333, &m.graph).is_some())
            .map(|m| m.canon.clone())
            .collect();
        if let [only] = nine.as_slice() {
            rename(&mut reg.members, only, "H9", false);
        }
        reg
    })
}

/// Closure of K_{3,3,1,1} under triangle-Y exchanges: twenty-six members.
pub fn k3311_family() -> &'static FamilyRegistry {
    static REG: OnceLock<FamilyRegistry> = OnceLock::new();
    REG.get_or_init(|| {
        let seed = complete_multipartite(&[3, 3, 1, 1]).unwrap().0;
        let mut reg = closure(&seed, MoveSet::DeltaYOnly, DEFAULT_CLOSURE_CAP).unwrap();
        reg.name = "k3311".into();
        reg.provenance = "closure of K{3,3,1,1} under triangle-Y; letters positional per \
                          vertex count with same-degree-sequence pairs oriented by their \
                          structural fingerprints; B9 identified by the K{4,3,2} minor relation"
            .into();
        rename(&mut reg.members, &canonical_form(&seed), "K{3,3,1,1}", false);
        orient_pair_names(&mut reg.members);
        pin_b9(&mut reg.members);
        reg
    })
}

/// Within each same-degree-sequence pair, orient the two positional letters
/// the way the distinguishing fingerprints read: the member with a
/// (5,5,5)-triangle or a degree-3 vertex seeing only degree-4 neighbors
/// takes the later letter; the member with a (5,5,4)-triangle or any
/// triangle at all takes the earlier one.
fn orient_pair_names(members: &mut [FamilyMember]) {
    let pairs = same_degseq_pairs(members);
    for (i, j) in pairs {
        let (a, b) = (i.min(j), i.max(j));
        let swap = if fingerprint(&members[a].graph).has_555_triangle
            != fingerprint(&members[b].graph).has_555_triangle
        {
            fingerprint(&members[a].graph).has_555_triangle
        } else if fingerprint(&members[a].graph).deg3_all_deg4_neighbors
            != fingerprint(&members[b].graph).deg3_all_deg4_neighbors
        {
            fingerprint(&members[a].graph).deg3_all_deg4_neighbors
        } else if fingerprint(&members[a].graph).has_554_triangle
            != fingerprint(&members[b].graph).has_554_triangle
        {
            fingerprint(&members[b].graph).has_554_triangle
        } else if fingerprint(&members[a].graph).triangle_free
            != fingerprint(&members[b].graph).triangle_free
        {
            fingerprint(&members[a].graph).triangle_free
        } else {
            false
        };
        if swap {
            let name_a = members[a].name.clone();
            let name_b = members[b].name.clone();
            members[a].name = name_b;
            members[b].name = name_a;
        }
    }
}

/// Indices of members sharing (vertex count, degree sequence), grouped.
/// Only groups of two or more are reported.
pub fn same_degseq_groups(members: &[FamilyMember]) -> Vec<Vec<usize>> {
    let mut groups: HashMap<(usize, Vec<usize>), Vec<usize>> = HashMap::new();
    for (i, m) in members.iter().enumerate() {
        groups
            .entry((m.graph.n(), m.degseq.clone()))
            .or_default()
            .push(i);
    }
    let mut out: Vec<Vec<usize>> = groups.into_values().filter(|v| v.len() >= 2).collect();
    out.sort_unstable();
    out
}

fn same_degseq_pairs(members: &[FamilyMember]) -> Vec<(usize, usize)> {
    same_degseq_groups(members)
        .into_iter()
        .filter(|g| g.len() == 2)
        .map(|g| (g[0], g[1]))
        .collect()
}

/// B9: the 9-vertex member that the two-deficient K_{4,3,2} case
/// -{(b1,c1),(b1,c2)} contains as a minor.
fn pin_b9(members: &mut [FamilyMember]) {
    let resolved = notation::resolve_text("K{4,3,2}-{(b1,c1),(b1,c2)}");
    let host = match resolved {
        Ok(notation::Resolved::One { graph, .. }) => graph,
        _ => return,
    };
    let hits: Vec<usize> = members
        .iter()
        .enumerate()
        .filter(|(_, m)| m.graph.n() == 9 && has_minor(&host, &m.graph).is_some())
        .map(|(i, _)| i)
        .collect();
    if let [only] = hits.as_slice() {
        let only = *only;
        // swap names with whoever currently holds "B9"
        if members[only].name != "B9" {
            if let Some(other) = members.iter().position(|m| m.name == "B9") {
                members[other].name = members[only].name.clone();
            }
            members[only].name = "B9".into();
        }
        members[only].positional = false;
    }
}

/// Union of the two knotting families: forty pairwise non-isomorphic
/// graphs, ordered smallest-first for classifier sweeps. Names are
/// qualified by family (`K7/H9`, `K3311/B9`).
pub fn mmik_registry() -> &'static FamilyRegistry {
    static REG: OnceLock<FamilyRegistry> = OnceLock::new();
    REG.get_or_init(|| {
        let mut members: Vec<FamilyMember> = Vec::new();
        for (tag, fam) in [("K7", k7_family()), ("K3311", k3311_family())] {
            for m in &fam.members {
                let mut m = m.clone();
                m.name = format!("{}/{}", tag, m.name);
                members.push(m);
            }
        }
        members.sort_by(|a, b| {
            (a.graph.n(), a.graph.edge_count())
                .cmp(&(b.graph.n(), b.graph.edge_count()))
                .then_with(|| a.canon.cmp(&b.canon))
        });
        FamilyRegistry {
            name: "mmik".into(),
            seed: Graph::complete(7).unwrap(),
            moves: MoveSet::DeltaYOnly,
            members,
            provenance: "union of the K7 and K{3,3,1,1} triangle-Y families; disjoint since \
                         every K7 descendant has 21 edges and every K{3,3,1,1} descendant 22"
                .into(),
        }
    })
}

/// Structural fingerprints used to tell apart same-degree-sequence members.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Fingerprint {
    pub degseq: Vec<usize>,
    pub triangle_free: bool,
    pub has_555_triangle: bool,
    pub deg3_all_deg4_neighbors: bool,
    pub has_554_triangle: bool,
}

pub fn fingerprint(g: &Graph) -> Fingerprint {
    let triangles = g.triangles();
    let tri_degrees = |t: &[usize; 3]| {
        let mut d = [g.degree(t[0]), g.degree(t[1]), g.degree(t[2])];
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    };
    Fingerprint {
        degseq: g.degree_sequence(),
        triangle_free: triangles.is_empty(),
        has_555_triangle: triangles.iter().any(|t| tri_degrees(t) == [5, 5, 5]),
        deg3_all_deg4_neighbors: (0..g.n()).any(|v| {
            g.degree(v) == 3 && mask_to_vec(g.neighbors(v)).iter().all(|&w| g.degree(w) == 4)
        }),
        has_554_triangle: triangles.iter().any(|t| tri_degrees(t) == [5, 5, 4]),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FingerprintEntry {
    pub name: String,
    pub n: usize,
    pub edges: usize,
    #[serde(flatten)]
    pub fingerprint: Fingerprint,
}

#[derive(Debug, Clone, Serialize)]
pub struct FingerprintReport {
    pub registry: String,
    pub members: Vec<FingerprintEntry>,
    /// Same-degree-sequence groups and which distinguishing predicates
    /// isolate exactly one of their members.
    pub groups: Vec<GroupSeparation>,
}

#[derive(Debug, Clone, Serialize)]
pub struct GroupSeparation {
    pub names: Vec<String>,
    pub isolated_by_555_triangle: bool,
    pub isolated_by_deg3_all_deg4: bool,
    pub isolated_by_554_triangle: bool,
    pub isolated_by_triangle_existence: bool,
}

impl GroupSeparation {
    pub fn separated(&self) -> bool {
        self.isolated_by_555_triangle
            || self.isolated_by_deg3_all_deg4
            || self.isolated_by_554_triangle
            || self.isolated_by_triangle_existence
    }
}

fn isolates_one(flags: &[bool]) -> bool {
    let yes = flags.iter().filter(|&&b| b).count();
    yes == 1 || yes + 1 == flags.len()
}

pub fn structural_fingerprints(registry: &FamilyRegistry) -> FingerprintReport {
    let members = registry
        .members
        .iter()
        .map(|m| FingerprintEntry {
            name: m.name.clone(),
            n: m.graph.n(),
            edges: m.graph.edge_count(),
            fingerprint: fingerprint(&m.graph),
        })
        .collect();
    let groups = same_degseq_groups(&registry.members)
        .into_iter()
        .map(|idxs| {
            let fps: Vec<Fingerprint> = idxs
                .iter()
                .map(|&i| fingerprint(&registry.members[i].graph))
                .collect();
            GroupSeparation {
                names: idxs
                    .iter()
                    .map(|&i| registry.members[i].name.clone())
                    .collect(),
                isolated_by_555_triangle: isolates_one(
                    &fps.iter().map(|f| f.has_555_triangle).collect::<Vec<_>>(),
                ),
                isolated_by_deg3_all_deg4: isolates_one(
                    &fps.iter()
                        .map(|f| f.deg3_all_deg4_neighbors)
                        .collect::<Vec<_>>(),
                ),
                isolated_by_554_triangle: isolates_one(
                    &fps.iter().map(|f| f.has_554_triangle).collect::<Vec<_>>(),
                ),
                isolated_by_triangle_existence: isolates_one(
                    &fps.iter().map(|f| f.triangle_free).collect::<Vec<_>>(),
                ),
            }
        })
        .collect();
    FingerprintReport {
        registry: registry.name.clone(),
        members,
        groups,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;

    fn k(n: usize) -> Graph {
        Graph::complete(n).unwrap()
    }

    #[test]
    fn delta_y_k6() {
        let g = delta_y(&k(6), [0, 1, 2]).unwrap();
        assert_eq!((g.n(), g.edge_count()), (7, 15));
        assert_eq!(g.degree_sequence(), vec![5, 5, 5, 4, 4, 4, 3]);
        // not isomorphic to K_{3,3,1} despite equal size
        let k331 = complete_multipartite(&[3, 3, 1]).unwrap().0;
        assert!(!is_isomorphic(&g, &k331));
    }

    #[test]
    fn delta_y_k7_gives_h8() {
        let g = delta_y(&k(7), [1, 3, 5]).unwrap();
        assert_eq!((g.n(), g.edge_count()), (8, 21));
    }

    #[test]
    fn delta_y_rejects_non_triangle() {
        let k33 = complete_multipartite(&[3, 3]).unwrap().0;
        assert!(k33.triangles().is_empty());
        assert!(delta_y(&k33, [0, 1, 3]).is_err());
    }

    #[test]
    fn y_delta_inverts_delta_y() {
        let g = delta_y(&k(6), [2, 3, 4]).unwrap();
        let back = y_delta(&g, 6).unwrap();
        assert!(is_isomorphic(&back, &k(6)));
        assert!(y_delta(&k(6), 0).is_err()); // degree 5
    }

    #[test]
    fn petersen_family_has_seven_members() {
        let reg = petersen_registry();
        assert_eq!(reg.len(), 7);
        let k6 = k(6);
        assert!(reg.contains(&k6).is_some());
        let k331 = complete_multipartite(&[3, 3, 1]).unwrap().0;
        assert!(reg.contains(&k331).is_some());
        let k44e = complete_multipartite(&[4, 4]).unwrap().0.delete_edge(0, 4).unwrap();
        assert_eq!(reg.contains(&k44e).unwrap().name, "K{4,4}-e");
        // one 10-vertex 15-edge cubic member
        let tenv: Vec<_> = reg.members.iter().filter(|m| m.graph.n() == 10).collect();
        assert_eq!(tenv.len(), 1);
        assert_eq!(tenv[0].graph.edge_count(), 15);
        assert_eq!(tenv[0].degseq, vec![3; 10]);
        assert_eq!(tenv[0].name, "Petersen");
    }

    #[test]
    fn y_delta_on_petersen_lands_in_family() {
        let reg = petersen_registry();
        let petersen = &reg.member("Petersen").unwrap().graph;
        for v in 0..10 {
            let g = y_delta(petersen, v).unwrap();
            assert_eq!(g.n(), 9);
            assert!(reg.contains(&g).is_some());
        }
    }

    #[test]
    fn k7_closure_has_fourteen_members() {
        let reg = k7_family();
        assert_eq!(reg.len(), 14);
        assert!(reg.members.iter().all(|m| m.graph.edge_count() == 21));
        assert!(reg.member("H8").is_some());
        assert!(reg.member("H9").is_some());
        assert_eq!(reg.member("H8").unwrap().graph.n(), 8);
        assert_eq!(reg.member("H9").unwrap().graph.n(), 9);
    }

    #[test]
    fn k3311_closure_has_twenty_six_members() {
        let reg = k3311_family();
        assert_eq!(reg.len(), 26);
        assert!(reg.members.iter().all(|m| m.graph.edge_count() == 22));
        // max vertex count 14, attained once
        let max_n = reg.members.iter().map(|m| m.graph.n()).max().unwrap();
        assert_eq!(max_n, 14);
        assert_eq!(reg.members.iter().filter(|m| m.graph.n() == 14).count(), 1);
    }

    #[test]
    fn k3311_triangle_free_members() {
        let reg = k3311_family();
        let mut tf: Vec<usize> = reg
            .members
            .iter()
            .filter(|m| m.graph.triangles().is_empty())
            .map(|m| m.graph.n())
            .collect();
        tf.sort_unstable();
        assert_eq!(tf, vec![13, 13, 14]);
    }

    #[test]
    fn k3311_groups_separated_by_fingerprints() {
        // three exact same-degree-sequence pairs plus one triple at 12
        // vertices; each of the four distinguishing predicates isolates
        // exactly one member of its group
        let reg = k3311_family();
        let report = structural_fingerprints(reg);
        assert_eq!(report.groups.len(), 4);
        let mut sizes: Vec<usize> = report.groups.iter().map(|g| g.names.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![2, 2, 2, 3]);
        for group in &report.groups {
            assert!(group.separated(), "group {:?} not separated", group.names);
        }
        assert_eq!(
            report
                .groups
                .iter()
                .filter(|g| g.isolated_by_555_triangle)
                .count(),
            1
        );
        assert!(report
            .groups
            .iter()
            .any(|g| g.isolated_by_deg3_all_deg4 && g.names.len() == 2));
        assert!(report
            .groups
            .iter()
            .any(|g| g.isolated_by_554_triangle && g.names.len() == 3));
        assert!(report
            .groups
            .iter()
            .any(|g| g.isolated_by_triangle_existence && g.names.len() == 2));
    }

    #[test]
    fn mmik_has_forty_members() {
        let reg = mmik_registry();
        assert_eq!(reg.len(), 40);
        // ordered smallest-first
        for w in reg.members.windows(2) {
            assert!((w[0].graph.n(), w[0].graph.edge_count())
                <= (w[1].graph.n(), w[1].graph.edge_count()));
        }
        assert_eq!(reg.members[0].name, "K7/K{7}");
    }

    #[test]
    fn member_paths_replay() {
        for reg in [petersen_registry(), k7_family(), k3311_family()] {
            for m in &reg.members {
                let mut g = reg.seed.clone();
                for mv in &m.path {
                    g = mv.apply(&g).unwrap();
                }
                assert!(
                    is_isomorphic(&g, &m.graph),
                    "path replay failed for {}",
                    m.name
                );
            }
        }
    }

    #[test]
    fn closure_cap_enforced() {
        let err = closure(&k(7), MoveSet::DeltaYOnly, 5).unwrap_err();
        assert!(matches!(err, ClosureError::TooLarge { cap: 5 }));
    }
}
