//! Finite simple graphs, complete multipartite shapes, clique census,
//! chordality, and the quasi-projectivity classification of the associated
//! Bestvina–Brady groups.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result};

/// Simple undirected graph on vertices `0..vertices`; edges are stored as
/// sorted pairs `(i, j)` with `i < j`, deduplicated, in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Graph {
    vertices: usize,
    edges: Vec<(u32, u32)>,
}

impl Graph {
    pub fn new(vertices: usize, edges: impl IntoIterator<Item = (u32, u32)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::domain(format!("loop at vertex {a}")));
            }
            if a as usize >= vertices || b as usize >= vertices {
                return Err(Error::domain(format!(
                    "edge ({a},{b}) out of range for {vertices} vertices"
                )));
            }
            set.insert((a.min(b), a.max(b)));
        }
        Ok(Graph { vertices, edges: set.into_iter().collect() })
    }

    pub fn edgeless(vertices: usize) -> Self {
        Graph { vertices, edges: Vec::new() }
    }

    pub fn path(vertices: usize) -> Self {
        let edges = (1..vertices as u32).map(|i| (i - 1, i));
        Self::new(vertices, edges).expect("path edges are valid")
    }

    pub fn cycle(vertices: usize) -> Self {
        assert!(vertices >= 3, "a cycle needs at least 3 vertices");
        let n = vertices as u32;
        let edges = (0..n).map(|i| (i, (i + 1) % n));
        Self::new(vertices, edges).expect("cycle edges are valid")
    }

    pub fn complete(vertices: usize) -> Self {
        let n = vertices as u32;
        let edges = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
        Self::new(vertices, edges).expect("complete edges are valid")
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn adjacent(&self, a: u32, b: u32) -> bool {
        let key = (a.min(b), a.max(b));
        a != b && self.edges.binary_search(&key).is_ok()
    }

    pub fn adjacency(&self) -> Vec<Vec<bool>> {
        let mut adj = vec![vec![false; self.vertices]; self.vertices];
        for &(a, b) in &self.edges {
            adj[a as usize][b as usize] = true;
            adj[b as usize][a as usize] = true;
        }
        adj
    }

    pub fn neighbors(&self, v: u32) -> Vec<u32> {
        let mut out: Vec<u32> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    pub fn complement(&self) -> Self {
        let n = self.vertices as u32;
        let edges = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| !self.adjacent(i, j));
        Self::new(self.vertices, edges).expect("complement edges are valid")
    }

    pub fn is_connected(&self) -> bool {
        if self.vertices == 0 {
            return false;
        }
        let adj = self.adjacency();
        let mut seen = vec![false; self.vertices];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for w in 0..self.vertices {
                if adj[v][w] && !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    pub fn connected_components(&self) -> Vec<Vec<u32>> {
        let adj = self.adjacency();
        let mut seen = vec![false; self.vertices];
        let mut comps = Vec::new();
        for start in 0..self.vertices {
            if seen[start] {
                continue;
            }
            let mut comp = Vec::new();
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(v) = stack.pop() {
                comp.push(v as u32);
                for w in 0..self.vertices {
                    if adj[v][w] && !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_tree(&self) -> bool {
        self.vertices >= 1 && self.is_connected() && self.edge_count() == self.vertices - 1
    }

    /// Induced subgraph on the given (sorted, distinct) vertices, relabelled
    /// to `0..verts.len()` in order.
    pub fn induced(&self, verts: &[u32]) -> Graph {
        let edges = verts.iter().enumerate().flat_map(|(i, &a)| {
            verts
                .iter()
                .enumerate()
                .skip(i + 1)
                .filter(move |&(_, &b)| self.adjacent(a, b))
                .map(move |(j, _)| (i as u32, j as u32))
        });
        Graph::new(verts.len(), edges).expect("induced edges are valid")
    }
}

/// Part sizes of a complete multipartite graph K_{n_0,...,n_r}; every part is
/// non-empty.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct MultipartiteShape {
    parts: Vec<u32>,
}

impl MultipartiteShape {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::domain("a multipartite shape needs at least one part"));
        }
        if parts.iter().any(|&n| n == 0) {
            return Err(Error::domain("multipartite part sizes must be positive"));
        }
        Ok(MultipartiteShape { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of parts minus one.
    pub fn r(&self) -> usize {
        self.parts.len() - 1
    }

    pub fn total_vertices(&self) -> usize {
        self.parts.iter().map(|&n| n as usize).sum()
    }

    pub fn sorted(&self) -> Self {
        let mut parts = self.parts.clone();
        parts.sort_unstable();
        MultipartiteShape { parts }
    }

    /// Vertex ranges of each part when the parts are laid out contiguously.
    pub fn blocks(&self) -> Vec<core::ops::Range<u32>> {
        let mut out = Vec::with_capacity(self.parts.len());
        let mut at = 0u32;
        for &n in &self.parts {
            out.push(at..at + n);
            at += n;
        }
        out
    }
}

/// Complete multipartite graph with contiguous parts in the given order.
pub fn multipartite_graph(shape: &MultipartiteShape) -> Graph {
    let blocks = shape.blocks();
    let mut edges = Vec::new();
    for (bi, ra) in blocks.iter().enumerate() {
        for rb in blocks.iter().skip(bi + 1) {
            for a in ra.clone() {
                for b in rb.clone() {
                    edges.push((a, b));
                }
            }
        }
    }
    Graph::new(shape.total_vertices(), edges).expect("multipartite edges are valid")
}

/// Wheel: a hub (vertex 0) joined to an r-cycle on vertices 1..=r; r >= 3.
pub fn wheel_graph(r: usize) -> Result<Graph> {
    if r < 3 {
        return Err(Error::domain("a wheel needs a rim of length at least 3"));
    }
    let mut edges: Vec<(u32, u32)> = (1..=r as u32).map(|i| (0, i)).collect();
    for i in 1..r as u32 {
        edges.push((i, i + 1));
    }
    edges.push((1, r as u32));
    Graph::new(r + 1, edges)
}

/// All cliques with between `min_size` and `max_size` vertices, grouped by
/// size (index 0 holds the cliques of size `min_size`). Each clique is a
/// sorted vertex list; enumeration extends cliques by vertices above their
/// maximum, so every clique appears exactly once.
pub fn cliques_by_size(g: &Graph, min_size: usize, max_size: usize) -> Vec<Vec<Vec<u32>>> {
    let mut out: Vec<Vec<Vec<u32>>> = vec![Vec::new(); max_size.saturating_sub(min_size) + 1];
    if max_size < min_size {
        return out;
    }
    let adj = g.adjacency();
    let mut current: Vec<u32> = Vec::new();
    fn extend(
        g: &Graph,
        adj: &[Vec<bool>],
        current: &mut Vec<u32>,
        from: u32,
        min_size: usize,
        max_size: usize,
        out: &mut [Vec<Vec<u32>>],
    ) {
        if current.len() >= min_size {
            out[current.len() - min_size].push(current.clone());
        }
        if current.len() == max_size {
            return;
        }
        for v in from..g.vertices() as u32 {
            if current.iter().all(|&u| adj[u as usize][v as usize]) {
                current.push(v);
                extend(g, adj, current, v + 1, min_size, max_size, out);
                current.pop();
            }
        }
    }
    extend(g, &adj, &mut current, 0, min_size, max_size, &mut out);
    out
}

/// Census of complete subgraphs: entry `p-1` counts the K_{p+1} subgraphs,
/// for p = 1..=p_max.
pub fn clique_counts(g: &Graph, p_max: usize) -> Vec<u64> {
    assert!(p_max >= 1, "clique census needs p_max >= 1");
    let grouped = cliques_by_size(g, 2, p_max + 1);
    grouped.into_iter().map(|c| c.len() as u64).collect()
}

/// Chordality by perfect-elimination-ordering search: repeatedly remove a
/// simplicial vertex (one whose remaining neighbourhood is a clique).
pub fn is_chordal(g: &Graph) -> bool {
    let adj = g.adjacency();
    let mut alive: Vec<bool> = vec![true; g.vertices()];
    let mut remaining = g.vertices();
    while remaining > 0 {
        let mut found = None;
        'search: for v in 0..g.vertices() {
            if !alive[v] {
                continue;
            }
            let nbrs: Vec<usize> =
                (0..g.vertices()).filter(|&w| alive[w] && adj[v][w]).collect();
            for (i, &a) in nbrs.iter().enumerate() {
                for &b in nbrs.iter().skip(i + 1) {
                    if !adj[a][b] {
                        continue 'search;
                    }
                }
            }
            found = Some(v);
            break;
        }
        match found {
            Some(v) => {
                alive[v] = false;
                remaining -= 1;
            }
            None => return false,
        }
    }
    true
}

/// Sufficient condition for the graphic arrangement to be non-hypersolvable:
/// no K_4 subgraphs, at least one edge, and c_1 <= 2 c_2.
pub fn nonhypersolvable_flag(g: &Graph) -> bool {
    let c = clique_counts(g, 3);
    c[2] == 0 && c[0] > 0 && c[0] <= 2 * c[1]
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QPKind {
    Tree,
    MultipartiteQP,
    MultipartiteSomeOne,
    MultipartiteNotQP,
    NotCovered,
}

/// Direct-product shape Z^{z_rank} x F_{m_1} x ... x F_{m_k}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductStructure {
    pub z_rank: usize,
    pub free_ranks: Vec<u32>,
}

/// Outcome of the quasi-projectivity classification of a Bestvina–Brady
/// group. `shape` is the sorted multipartite shape when one is recognized,
/// `free_rank` is set for trees, and `product` describes the direct-product
/// decomposition when some part has size one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QPClassification {
    pub kind: QPKind,
    pub shape: Option<MultipartiteShape>,
    pub free_rank: Option<usize>,
    pub product: Option<ProductStructure>,
}

/// Recognize `g` as a complete multipartite graph by checking that its
/// complement is a disjoint union of cliques; returns the sorted part sizes.
pub fn multipartite_shape_of(g: &Graph) -> Option<MultipartiteShape> {
    if g.vertices() == 0 {
        return None;
    }
    let comp = g.complement();
    let comps = comp.connected_components();
    for c in &comps {
        for (i, &a) in c.iter().enumerate() {
            for &b in c.iter().skip(i + 1) {
                if !comp.adjacent(a, b) {
                    return None;
                }
            }
        }
    }
    let mut parts: Vec<u32> = comps.iter().map(|c| c.len() as u32).collect();
    parts.sort_unstable();
    Some(MultipartiteShape::new(parts).expect("component sizes are positive"))
}

/// Classify whether the Bestvina–Brady group of `g` is quasi-projective:
/// trees give free groups, and complete multipartite graphs are
/// quasi-projective exactly when some part is a singleton (direct product
/// with free factors) or all parts have size >= 2 with at least three parts.
/// Everything else is out of the covered range.
pub fn classify_bb_quasiprojective(g: &Graph) -> QPClassification {
    if g.is_tree() {
        return QPClassification {
            kind: QPKind::Tree,
            shape: None,
            free_rank: Some(g.vertices() - 1),
            product: None,
        };
    }
    if let Some(shape) = multipartite_shape_of(g) {
        let ones = shape.parts().iter().filter(|&&n| n == 1).count();
        let kind = if ones > 0 {
            QPKind::MultipartiteSomeOne
        } else if shape.r() >= 2 {
            QPKind::MultipartiteQP
        } else {
            QPKind::MultipartiteNotQP
        };
        let product = (ones > 0).then(|| ProductStructure {
            z_rank: ones - 1,
            free_ranks: shape.parts().iter().copied().filter(|&n| n > 1).collect(),
        });
        return QPClassification { kind, shape: Some(shape), free_rank: None, product };
    }
    QPClassification { kind: QPKind::NotCovered, shape: None, free_rank: None, product: None }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_edges() {
        let g = Graph::new(3, [(2, 0), (0, 2), (1, 0)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 2)]);
        assert!(Graph::new(2, [(0, 0)]).is_err());
        assert!(Graph::new(2, [(0, 2)]).is_err());
    }

    #[test]
    fn multipartite_construction_and_recognition() {
        let shape = MultipartiteShape::new(vec![2, 2, 2]).unwrap();
        let g = multipartite_graph(&shape);
        assert_eq!(g.vertices(), 6);
        assert_eq!(g.edge_count(), 12);
        let found = multipartite_shape_of(&g).unwrap();
        assert_eq!(found.parts(), &[2, 2, 2]);
        // K_{1,2} laid out in any order recognizes to sorted shape
        let shape = MultipartiteShape::new(vec![2, 1]).unwrap();
        let g = multipartite_graph(&shape);
        assert_eq!(multipartite_shape_of(&g).unwrap().parts(), &[1, 2]);
        assert_eq!(multipartite_shape_of(&Graph::path(4)), None);
    }

    #[test]
    fn wheel_census() {
        for r in 4..=8 {
            let w = wheel_graph(r).unwrap();
            assert_eq!(clique_counts(&w, 3), vec![2 * r as u64, r as u64, 0]);
        }
        // W_3 = K_4 has a 4-clique
        let w3 = wheel_graph(3).unwrap();
        assert_eq!(clique_counts(&w3, 3), vec![6, 4, 1]);
        assert!(wheel_graph(2).is_err());
    }

    #[test]
    fn chordality() {
        assert!(is_chordal(&Graph::path(5)));
        assert!(is_chordal(&Graph::complete(5)));
        assert!(!is_chordal(&Graph::cycle(4)));
        assert!(!is_chordal(&Graph::cycle(6)));
        assert!(is_chordal(&Graph::cycle(3)));
        assert!(!is_chordal(&wheel_graph(4).unwrap()));
        assert!(is_chordal(&Graph::edgeless(4)));
    }

    #[test]
    fn nonhypersolvable_wheels() {
        for r in 4..=8 {
            assert!(nonhypersolvable_flag(&wheel_graph(r).unwrap()));
        }
        assert!(!nonhypersolvable_flag(&wheel_graph(3).unwrap()));
        assert!(!nonhypersolvable_flag(&Graph::path(4)));
    }

    #[test]
    fn classify_trees_and_multipartite() {
        let c = classify_bb_quasiprojective(&Graph::path(4));
        assert_eq!(c.kind, QPKind::Tree);
        assert_eq!(c.free_rank, Some(3));

        let octahedron = multipartite_graph(&MultipartiteShape::new(vec![2, 2, 2]).unwrap());
        let c = classify_bb_quasiprojective(&octahedron);
        assert_eq!(c.kind, QPKind::MultipartiteQP);
        assert_eq!(c.shape.unwrap().parts(), &[2, 2, 2]);

        let c4 = multipartite_graph(&MultipartiteShape::new(vec![2, 2]).unwrap());
        let c = classify_bb_quasiprojective(&c4);
        assert_eq!(c.kind, QPKind::MultipartiteNotQP);

        let k123 = multipartite_graph(&MultipartiteShape::new(vec![3, 1, 2]).unwrap());
        let c = classify_bb_quasiprojective(&k123);
        assert_eq!(c.kind, QPKind::MultipartiteSomeOne);
        let p = c.product.unwrap();
        assert_eq!(p.z_rank, 0);
        assert_eq!(p.free_ranks, vec![2, 3]);

        // complete graph: all parts singletons, product is Z^r
        let c = classify_bb_quasiprojective(&Graph::complete(4));
        assert_eq!(c.kind, QPKind::MultipartiteSomeOne);
        let p = c.product.unwrap();
        assert_eq!(p.z_rank, 3);
        assert!(p.free_ranks.is_empty());

        // disconnected tree-plus-point is out of range
        let g = Graph::new(4, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(classify_bb_quasiprojective(&g).kind, QPKind::NotCovered);

        // edgeless on >= 2 vertices: single part of size n, r = 0
        let c = classify_bb_quasiprojective(&Graph::edgeless(3));
        assert_eq!(c.kind, QPKind::MultipartiteNotQP);
        assert_eq!(c.shape.unwrap().parts(), &[3]);
    }

    #[test]
    fn stars_are_trees_first() {
        let star = multipartite_graph(&MultipartiteShape::new(vec![1, 4]).unwrap());
        let c = classify_bb_quasiprojective(&star);
        assert_eq!(c.kind, QPKind::Tree);
        assert_eq!(c.free_rank, Some(4));
    }
}
