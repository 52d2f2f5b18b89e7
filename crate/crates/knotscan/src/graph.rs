//! Immutable simple undirected graphs on at most 62 vertices.
//!
//! `Graph` is the universal currency of the crate: a vertex count plus an
//! edge set, stored as per-vertex neighbor bitmasks. All surgery operations
//! (deletion, contraction, splitting, join) are pure and return new values.

use std::fmt;

use crate::error::GraphError;

/// Upper bound on vertex count, matching the single-byte graph6 header.
pub const MAX_VERTICES: usize = 62;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Empty graph (no edges) on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n });
        }
        Ok(Graph {
            n,
            adj: vec![0; n],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(GraphError::SelfLoop { v });
            }
            g.adj[u] |= 1 << v;
            g.adj[v] |= 1 << u;
        }
        Ok(g)
    }

    /// Complete graph K_n.
    pub fn complete(n: usize) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n)?;
        for u in 0..n {
            for v in (u + 1)..n {
                g.adj[u] |= 1 << v;
                g.adj[v] |= 1 << u;
            }
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & (1 << v) != 0
    }

    /// Neighbor bitmask of `v`.
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Edges as sorted (u, v) pairs with u < v.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            let mut m = self.adj[u] >> (u + 1) << (u + 1);
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                out.push((u, v));
                m &= m - 1;
            }
        }
        out
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.n {
            Err(GraphError::VertexOutOfRange { v, n: self.n })
        } else {
            Ok(())
        }
    }

    fn check_edge(&self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(GraphError::NoSuchEdge { u, v });
        }
        Ok(())
    }

    /// Delete vertex `v`; vertices above `v` shift down by one.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(v)?;
        let low = (1u64 << v) - 1;
        let mut adj = Vec::with_capacity(self.n - 1);
        for u in 0..self.n {
            if u == v {
                continue;
            }
            let m = self.adj[u];
            adj.push((m & low) | ((m >> (v + 1)) << v));
        }
        Ok(Graph {
            n: self.n - 1,
            adj,
        })
    }

    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        self.check_edge(u, v)?;
        let mut g = self.clone();
        g.adj[u] &= !(1 << v);
        g.adj[v] &= !(1 << u);
        Ok(g)
    }

    /// Contract edge (u, v): the endpoints merge at min(u, v), loops are
    /// dropped and parallel edges coalesce, then max(u, v) is deleted.
    pub fn contract_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        self.check_edge(u, v)?;
        let (keep, gone) = if u < v { (u, v) } else { (v, u) };
        let mut g = self.clone();
        let merged = (g.adj[keep] | g.adj[gone]) & !(1 << keep) & !(1 << gone);
        g.adj[keep] = merged;
        let mut m = merged;
        while m != 0 {
            let w = m.trailing_zeros() as usize;
            g.adj[w] |= 1 << keep;
            m &= m - 1;
        }
        g.adj[gone] = 0;
        for w in 0..g.n {
            g.adj[w] &= !(1 << gone);
        }
        g.delete_vertex(gone)
    }

    /// Split vertex `v` into an adjacent pair: `v` keeps the neighbors in
    /// `s`, a new last vertex takes the rest. Contracting the new edge
    /// recovers the original graph.
    pub fn split_vertex(&self, v: usize, s: &[usize]) -> Result<Graph, GraphError> {
        self.check_vertex(v)?;
        if self.n + 1 > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n: self.n + 1 });
        }
        let mut s_mask = 0u64;
        for &w in s {
            self.check_vertex(w)?;
            s_mask |= 1 << w;
        }
        let nb = self.adj[v];
        if s_mask & !nb != 0 || s.len() != s_mask.count_ones() as usize {
            return Err(GraphError::BadBipartition);
        }
        let t_mask = nb & !s_mask;
        let new = self.n;
        let mut adj = self.adj.clone();
        adj.push(0);
        adj[v] = s_mask | (1 << new);
        adj[new] = t_mask | (1 << v);
        for w in 0..self.n {
            if w == v {
                continue;
            }
            if t_mask & (1 << w) != 0 {
                adj[w] &= !(1 << v);
                adj[w] |= 1 << new;
            }
        }
        Ok(Graph { n: self.n + 1, adj })
    }

    /// Disjoint union of `self` and `other` plus all cross edges.
    pub fn join(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n });
        }
        let mut adj = Vec::with_capacity(n);
        let other_mask = if other.n == 0 {
            0
        } else {
            ((1u64 << other.n) - 1) << self.n
        };
        let self_mask = if self.n == 0 { 0 } else { (1u64 << self.n) - 1 };
        for u in 0..self.n {
            adj.push(self.adj[u] | other_mask);
        }
        for u in 0..other.n {
            adj.push((other.adj[u] << self.n) | self_mask);
        }
        Ok(Graph { n, adj })
    }

    pub fn complement(&self) -> Graph {
        let full = if self.n == 0 { 0 } else { (1u64 << self.n) - 1 };
        let adj = (0..self.n)
            .map(|v| full & !self.adj[v] & !(1 << v))
            .collect();
        Graph { n: self.n, adj }
    }

    /// Vertex degrees sorted in descending order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// All triangles as sorted vertex triples, in lexicographic order.
    pub fn triangles(&self) -> Vec<[usize; 3]> {
        let mut out = Vec::new();
        for u in 0..self.n {
            let above_u = self.adj[u] >> (u + 1) << (u + 1);
            let mut mv = above_u;
            while mv != 0 {
                let v = mv.trailing_zeros() as usize;
                mv &= mv - 1;
                let common = self.adj[u] & self.adj[v];
                let mut mw = common >> (v + 1) << (v + 1);
                while mw != 0 {
                    let w = mw.trailing_zeros() as usize;
                    out.push([u, v, w]);
                    mw &= mw - 1;
                }
            }
        }
        out
    }

    /// Connected components as sorted vertex lists, ordered by minimum vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen = 0u64;
        let mut comps = Vec::new();
        for start in 0..self.n {
            if seen & (1 << start) != 0 {
                continue;
            }
            let mask = self.component_mask(start);
            seen |= mask;
            comps.push(mask_to_vec(mask));
        }
        comps
    }

    /// Bitmask of the component containing `start`.
    pub fn component_mask(&self, start: usize) -> u64 {
        let mut mask = 1u64 << start;
        loop {
            let mut grown = mask;
            let mut m = mask;
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                grown |= self.adj[v];
                m &= m - 1;
            }
            if grown == mask {
                return mask;
            }
            mask = grown;
        }
    }

    /// True when the vertices of `mask` induce a connected subgraph
    /// (the empty mask counts as not connected).
    pub fn is_connected_within(&self, mask: u64) -> bool {
        if mask == 0 {
            return false;
        }
        let start = mask.trailing_zeros() as usize;
        let mut reach = 1u64 << start;
        loop {
            let mut grown = reach;
            let mut m = reach;
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                grown |= self.adj[v] & mask;
                m &= m - 1;
            }
            if grown == reach {
                return reach == mask;
            }
            reach = grown;
        }
    }

    /// Induced subgraph on the vertices of `mask`, compacted in ascending
    /// order. Returns the subgraph and the original id of each new vertex.
    pub fn induced(&self, mask: u64) -> (Graph, Vec<usize>) {
        let verts = mask_to_vec(mask);
        let mut g = Graph {
            n: verts.len(),
            adj: vec![0; verts.len()],
        };
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.adj[i] |= 1 << j;
                    g.adj[j] |= 1 << i;
                }
            }
        }
        (g, verts)
    }

    /// Append one vertex adjacent to the given existing vertices.
    pub fn extend_with_vertex(&self, neighbors: &[usize]) -> Result<Graph, GraphError> {
        if self.n + 1 > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n: self.n + 1 });
        }
        let mut adj = self.adj.clone();
        adj.push(0);
        let new = self.n;
        for &w in neighbors {
            self.check_vertex(w)?;
            adj[new] |= 1 << w;
            adj[w] |= 1 << new;
        }
        Ok(Graph { n: self.n + 1, adj })
    }

    /// Relabel vertices: `perm[old] = new`. `perm` must be a permutation.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut g = Graph {
            n: self.n,
            adj: vec![0; self.n],
        };
        for (u, v) in self.edges() {
            g.adj[perm[u]] |= 1 << perm[v];
            g.adj[perm[v]] |= 1 << perm[u];
        }
        g
    }

    /// Union of neighbor masks over the vertices of `mask`.
    pub fn neighborhood_of(&self, mask: u64) -> u64 {
        let mut out = 0;
        let mut m = mask;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            out |= self.adj[v];
            m &= m - 1;
        }
        out & !mask
    }
}

pub(crate) fn mask_to_vec(mask: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    let mut m = mask;
    while m != 0 {
        out.push(m.trailing_zeros() as usize);
        m &= m - 1;
    }
    out
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={}, {:?})", self.n, self.edge_count(), self.edges())
    }
}

/// Labels the parts of a complete multipartite graph with letters a, b, c, …
/// in the order the part sizes were given; vertices take contiguous ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartLabeling {
    sizes: Vec<usize>,
    offsets: Vec<usize>,
}

impl PartLabeling {
    pub fn new(sizes: &[usize]) -> Result<PartLabeling, GraphError> {
        if sizes.is_empty() {
            return Err(GraphError::EmptyParts);
        }
        if sizes.iter().any(|&s| s == 0) {
            return Err(GraphError::ZeroPartSize);
        }
        if sizes.len() > 26 {
            return Err(GraphError::TooManyParts { parts: sizes.len() });
        }
        let mut offsets = Vec::with_capacity(sizes.len());
        let mut acc = 0;
        for &s in sizes {
            offsets.push(acc);
            acc += s;
        }
        if acc > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n: acc });
        }
        Ok(PartLabeling {
            sizes: sizes.to_vec(),
            offsets,
        })
    }

    pub fn part_count(&self) -> usize {
        self.sizes.len()
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn total(&self) -> usize {
        self.offsets.last().unwrap() + self.sizes.last().unwrap()
    }

    pub fn letter(&self, part: usize) -> char {
        (b'a' + part as u8) as char
    }

    /// Resolve a part letter and 1-based index to a vertex id. A missing
    /// index means the bare-letter reference: index 1.
    pub fn vertex(&self, letter: char, index: Option<usize>) -> Result<usize, GraphError> {
        let part = (letter as i32) - ('a' as i32);
        if part < 0 || part as usize >= self.sizes.len() {
            return Err(GraphError::UnknownPart { letter });
        }
        let part = part as usize;
        let idx = index.unwrap_or(1);
        if idx == 0 || idx > self.sizes[part] {
            return Err(GraphError::IndexOutOfPart {
                letter,
                index: idx,
                size: self.sizes[part],
            });
        }
        Ok(self.offsets[part] + idx - 1)
    }

    /// Part letter and 1-based index of a vertex id.
    pub fn name_of(&self, v: usize) -> (char, usize) {
        let part = match self.offsets.binary_search(&v) {
            Ok(p) => p,
            Err(p) => p - 1,
        };
        (self.letter(part), v - self.offsets[part] + 1)
    }

    pub fn part_size_of(&self, v: usize) -> usize {
        let part = match self.offsets.binary_search(&v) {
            Ok(p) => p,
            Err(p) => p - 1,
        };
        self.sizes[part]
    }
}

/// Complete multipartite graph: vertices grouped by parts, edge present
/// iff the endpoints lie in different parts.
pub fn complete_multipartite(parts: &[usize]) -> Result<(Graph, PartLabeling), GraphError> {
    let labeling = PartLabeling::new(parts)?;
    let n = labeling.total();
    let mut g = Graph::empty(n)?;
    let full = if n == 0 { 0 } else { (1u64 << n) - 1 };
    for p in 0..parts.len() {
        let off = labeling.offsets[p];
        let part_mask = ((1u64 << parts[p]) - 1) << off;
        for i in 0..parts[p] {
            g.adj[off + i] = full & !part_mask;
        }
    }
    Ok((g, labeling))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(n: usize) -> Graph {
        Graph::complete(n).unwrap()
    }

    #[test]
    fn multipartite_edge_counts() {
        let (g, _) = complete_multipartite(&[3, 3, 1]).unwrap();
        assert_eq!(g.n(), 7);
        assert_eq!(g.edge_count(), 15);
        let (g, _) = complete_multipartite(&[1]).unwrap();
        assert_eq!((g.n(), g.edge_count()), (1, 0));
        let (g, _) = complete_multipartite(&[3, 3, 1, 1]).unwrap();
        assert_eq!((g.n(), g.edge_count()), (8, 22));
    }

    #[test]
    fn multipartite_rejects_zero_parts() {
        assert!(complete_multipartite(&[]).is_err());
        assert!(complete_multipartite(&[3, 0]).is_err());
    }

    #[test]
    fn multipartite_formula_small() {
        // |E| = (n^2 - sum a_i^2) / 2 for all part lists with n <= 14
        fn rec(parts: &mut Vec<usize>, remaining: usize) {
            if !parts.is_empty() {
                let n: usize = parts.iter().sum();
                let sq: usize = parts.iter().map(|a| a * a).sum();
                let (g, _) = complete_multipartite(parts).unwrap();
                assert_eq!(g.edge_count(), (n * n - sq) / 2, "parts {:?}", parts);
            }
            let max = parts.last().copied().unwrap_or(remaining);
            for s in (1..=remaining.min(max)).rev() {
                parts.push(s);
                rec(parts, remaining - s);
                parts.pop();
            }
        }
        rec(&mut Vec::new(), 14);
    }

    #[test]
    fn join_cases() {
        let k6 = k(5).join(&k(1)).unwrap();
        assert_eq!(k6, k(6));
        let (k33, _) = complete_multipartite(&[3, 3]).unwrap();
        let j = k33.join(&k(2)).unwrap();
        let (k3311, _) = complete_multipartite(&[3, 3, 1, 1]).unwrap();
        assert_eq!((j.n(), j.edge_count()), (8, 22));
        assert_eq!(j.degree_sequence(), k3311.degree_sequence());
        let e3 = Graph::empty(3).unwrap();
        let j = e3.join(&e3).unwrap();
        assert_eq!((j.n(), j.edge_count()), (6, 9));
        assert_eq!(j.degree_sequence(), vec![3; 6]);
    }

    #[test]
    fn join_k1_adds_one_universal_vertex() {
        let (g, _) = complete_multipartite(&[3, 2]).unwrap();
        let j = g.join(&k(1)).unwrap();
        let universal: Vec<usize> = (0..j.n()).filter(|&v| j.degree(v) == j.n() - 1).collect();
        assert_eq!(universal, vec![5]);
    }

    #[test]
    fn deletions() {
        assert_eq!(k(7).delete_vertex(3).unwrap(), k(6));
        let g = k(6).delete_edge(1, 4).unwrap();
        assert_eq!((g.n(), g.edge_count()), (6, 14));
        let (k44, lab) = complete_multipartite(&[4, 4]).unwrap();
        let g = k44.delete_vertex(lab.vertex('a', Some(2)).unwrap()).unwrap();
        let (k34, _) = complete_multipartite(&[3, 4]).unwrap();
        assert_eq!(g.degree_sequence(), k34.degree_sequence());
        assert_eq!(g.edge_count(), 12);
        assert!(k(3).delete_edge(0, 0).is_err());
        assert!(k(3).delete_vertex(5).is_err());
    }

    #[test]
    fn contraction() {
        assert_eq!(k(3).contract_edge(0, 1).unwrap(), k(2));
        // K_{3,3} / e: endpoints have no common neighbor, so exactly the
        // contracted edge disappears; the result is K_{2,2,1}.
        let (k33, _) = complete_multipartite(&[3, 3]).unwrap();
        let g = k33.contract_edge(0, 3).unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edge_count(), 8);
        assert_eq!(g.degree_sequence(), vec![4, 3, 3, 3, 3]);
        let (k221, _) = complete_multipartite(&[2, 2, 1]).unwrap();
        assert_eq!(g.degree_sequence(), k221.degree_sequence());
    }

    #[test]
    fn split_then_contract_is_identity() {
        let g = k(7);
        for v in 0..7 {
            let nb = mask_to_vec(g.neighbors(v));
            for cut in 0..=nb.len() {
                let s: Vec<usize> = nb[..cut].to_vec();
                let split = g.split_vertex(v, &s).unwrap();
                assert_eq!(split.n(), 8);
                let back = split.contract_edge(v, 7).unwrap();
                assert_eq!(back, g);
            }
        }
    }

    #[test]
    fn split_k4_example() {
        let g = k(4);
        let nb = mask_to_vec(g.neighbors(0));
        let split = g.split_vertex(0, &nb[..1]).unwrap();
        assert_eq!((split.n(), split.edge_count()), (5, 7));
    }

    #[test]
    fn split_rejects_bad_bipartition() {
        let g = k(4);
        assert!(g.split_vertex(0, &[0]).is_err());
    }

    #[test]
    fn complement_cases() {
        // complement of a complete multipartite graph = disjoint cliques,
        // one per part: here two triangles and two isolated vertices
        let (g, _) = complete_multipartite(&[3, 3, 1, 1]).unwrap();
        let c = g.complement();
        assert_eq!(c.edge_count(), 6);
        let comps = c.connected_components();
        let mut sizes: Vec<usize> = comps.iter().map(|c| c.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 1, 3, 3]);
        assert_eq!(c.triangles().len(), 2);
        assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn degree_sequence_k331() {
        let (g, _) = complete_multipartite(&[3, 3, 1]).unwrap();
        assert_eq!(g.degree_sequence(), vec![6, 4, 4, 4, 4, 4, 4]);
    }

    #[test]
    fn triangles_bipartite_empty() {
        let (g, _) = complete_multipartite(&[3, 3]).unwrap();
        assert!(g.triangles().is_empty());
    }

    #[test]
    fn triangles_k4() {
        assert_eq!(k(4).triangles().len(), 4);
    }

    #[test]
    fn part_labeling_lookup() {
        let lab = PartLabeling::new(&[4, 3, 1]).unwrap();
        assert_eq!(lab.vertex('a', Some(1)).unwrap(), 0);
        assert_eq!(lab.vertex('b', Some(3)).unwrap(), 6);
        assert_eq!(lab.vertex('c', None).unwrap(), 7);
        assert_eq!(lab.vertex('b', None).unwrap(), 4);
        assert_eq!(lab.name_of(6), ('b', 3));
        assert!(lab.vertex('d', None).is_err());
        assert!(lab.vertex('a', Some(5)).is_err());
    }
}
