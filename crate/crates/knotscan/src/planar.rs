//! Planarity and apex tests, decided through the minor engine: a graph is
//! planar iff it has neither a K5 nor a K_{3,3} minor. One exhaustive
//! engine backs every predicate, so a single soundness argument covers all
//! of them.

use std::sync::OnceLock;

use crate::graph::{complete_multipartite, Graph};
use crate::minor::has_minor;

fn k5() -> &'static Graph {
    static K5: OnceLock<Graph> = OnceLock::new();
    K5.get_or_init(|| Graph::complete(5).unwrap())
}

fn k33() -> &'static Graph {
    static K33: OnceLock<Graph> = OnceLock::new();
    K33.get_or_init(|| complete_multipartite(&[3, 3]).unwrap().0)
}

pub fn is_planar(g: &Graph) -> bool {
    let n = g.n();
    if n <= 4 {
        return true;
    }
    if g.edge_count() > 3 * n - 6 {
        return false;
    }
    // planar iff every component is planar
    for comp in g.connected_components() {
        if comp.len() <= 4 {
            continue;
        }
        let mask = comp.iter().fold(0u64, |m, &v| m | (1 << v));
        let (sub, _) = g.induced(mask);
        if sub.edge_count() > 3 * sub.n() - 6 {
            return false;
        }
        if has_minor(&sub, k5()).is_some() || has_minor(&sub, k33()).is_some() {
            return false;
        }
    }
    true
}

/// First vertex (ascending) whose deletion leaves a planar graph.
pub fn apex_vertex(g: &Graph) -> Option<usize> {
    (0..g.n()).find(|&v| is_planar(&g.delete_vertex(v).unwrap()))
}

/// Lexicographically first pair {u, v} whose deletion leaves a planar graph.
pub fn planar_pair(g: &Graph) -> Option<(usize, usize)> {
    for u in 0..g.n() {
        for v in (u + 1)..g.n() {
            // delete the higher index first so the lower keeps its id
            let reduced = g.delete_vertex(v).unwrap().delete_vertex(u).unwrap();
            if is_planar(&reduced) {
                return Some((u, v));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::complete_multipartite;

    fn kp(parts: &[usize]) -> Graph {
        complete_multipartite(parts).unwrap().0
    }

    #[test]
    fn kuratowski_graphs_nonplanar() {
        assert!(!is_planar(&Graph::complete(5).unwrap()));
        assert!(!is_planar(&kp(&[3, 3])));
        assert!(is_planar(&Graph::complete(4).unwrap()));
    }

    #[test]
    fn octahedron_planar() {
        // K_{2,2,2} has 12 = 3n-6 edges yet is planar: the engine must
        // exhaust the search space without finding K5 or K_{3,3}
        assert!(is_planar(&kp(&[2, 2, 2])));
    }

    #[test]
    fn planar_euler_bound_holds() {
        for parts in [vec![2, 2, 2], vec![3, 2], vec![2, 2, 1], vec![4, 1]] {
            let g = kp(&parts);
            if is_planar(&g) && g.n() >= 3 {
                assert!(g.edge_count() <= 3 * g.n() - 6);
            }
        }
    }

    #[test]
    fn disjoint_nonplanar_component_detected() {
        // K5 plus isolated vertices keeps the K5 minor
        let mut edges = Vec::new();
        for u in 0..5 {
            for v in (u + 1)..5 {
                edges.push((u, v));
            }
        }
        let g = Graph::from_edges(8, &edges).unwrap();
        assert!(!is_planar(&g));
    }

    #[test]
    fn apex_cases() {
        assert_eq!(apex_vertex(&Graph::complete(5).unwrap()), Some(0));
        assert_eq!(apex_vertex(&Graph::complete(6).unwrap()), None);
        // K_{4,2,1}: deleting a 2-part vertex leaves planar K_{4,1,1}
        let g = kp(&[4, 2, 1]);
        let apex = apex_vertex(&g).expect("K_{4,2,1} has an apex");
        assert!(is_planar(&g.delete_vertex(apex).unwrap()));
        // and the singleton-part vertex works too
        assert!(is_planar(&g.delete_vertex(6).unwrap()));
    }

    #[test]
    fn planar_pair_cases() {
        // two vertices of the same 4-part leave planar K_{2,4}
        let g = kp(&[4, 4]);
        let (u, v) = planar_pair(&g).expect("K_{4,4} has a planar pair");
        let reduced = g.delete_vertex(v).unwrap().delete_vertex(u).unwrap();
        assert!(is_planar(&reduced));
        // K7: every pair leaves K5
        assert_eq!(planar_pair(&Graph::complete(7).unwrap()), None);
    }
}
