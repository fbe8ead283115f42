//! Simple undirected graphs held in memory, plus a few named families used
//! throughout the tests and generators.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::stream::{ReplayableStream, VertexId};

/// Simple undirected graph on `[0, n)` with canonical `(u, v)`, `u < v` edges.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct StoredGraph {
    n: usize,
    edges: BTreeSet<(VertexId, VertexId)>,
}

fn canonical(a: VertexId, b: VertexId) -> (VertexId, VertexId) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

impl StoredGraph {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            edges: BTreeSet::new(),
        }
    }

    pub fn from_edges(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self> {
        let mut g = Self::new(n);
        for &(a, b) in edges {
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    /// Adds an edge; re-adding an existing edge is a no-op.
    pub fn add_edge(&mut self, a: VertexId, b: VertexId) -> Result<()> {
        if a == b {
            return Err(Error::InvalidInstance(format!("self-loop on {a}")));
        }
        if a.max(b) as usize >= self.n {
            return Err(Error::InvalidInstance(format!(
                "edge ({a},{b}) out of range for n={}",
                self.n
            )));
        }
        self.edges.insert(canonical(a, b));
        Ok(())
    }

    pub(crate) fn insert_edge_unchecked(&mut self, a: VertexId, b: VertexId) {
        self.edges.insert(canonical(a, b));
    }

    pub fn remove_edge(&mut self, a: VertexId, b: VertexId) {
        self.edges.remove(&canonical(a, b));
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, a: VertexId, b: VertexId) -> bool {
        self.edges.contains(&canonical(a, b))
    }

    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.edges.iter().copied()
    }

    pub fn adjacency_lists(&self) -> Vec<Vec<VertexId>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        adj
    }

    /// Neighbourhood bitmasks; requires `n <= 64`.
    pub fn adjacency_masks(&self) -> Vec<u64> {
        assert!(self.n <= 64, "bitmask adjacency needs n <= 64");
        let mut adj = vec![0u64; self.n];
        for &(u, v) in &self.edges {
            adj[u as usize] |= 1 << v;
            adj[v as usize] |= 1 << u;
        }
        adj
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    pub fn is_vertex_cover(&self, cover: &[VertexId]) -> bool {
        let set: BTreeSet<_> = cover.iter().copied().collect();
        self.edges
            .iter()
            .all(|(u, v)| set.contains(u) || set.contains(v))
    }

    /// True when removing `removed` leaves a forest.
    pub fn is_feedback_vertex_set(&self, removed: &[VertexId]) -> bool {
        let gone: BTreeSet<_> = removed.iter().copied().collect();
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for &(u, v) in &self.edges {
            if gone.contains(&u) || gone.contains(&v) {
                continue;
            }
            let (ru, rv) = (find(&mut parent, u as usize), find(&mut parent, v as usize));
            if ru == rv {
                return false;
            }
            parent[ru] = rv;
        }
        true
    }

    pub fn is_dominating_set(&self, set: &[VertexId]) -> bool {
        let mut dominated = vec![false; self.n];
        for &s in set {
            dominated[s as usize] = true;
        }
        for &(u, v) in &self.edges {
            if set.contains(&u) {
                dominated[v as usize] = true;
            }
            if set.contains(&v) {
                dominated[u as usize] = true;
            }
        }
        dominated.into_iter().all(|d| d)
    }

    /// True when consecutive vertices of `path` are adjacent and all distinct.
    pub fn is_simple_path(&self, path: &[VertexId]) -> bool {
        let distinct: BTreeSet<_> = path.iter().collect();
        distinct.len() == path.len()
            && path.iter().all(|&v| (v as usize) < self.n)
            && path.windows(2).all(|w| self.has_edge(w[0], w[1]))
    }

    /// Insert-only stream of the edges in canonical order.
    pub fn to_stream(&self) -> ReplayableStream {
        let edges: Vec<_> = self.edges().collect();
        ReplayableStream::insert_only(self.n, &edges).expect("stored graphs are simple")
    }

    pub fn empty(n: usize) -> Self {
        Self::new(n)
    }

    /// Path on `vertices` vertices.
    pub fn path(vertices: usize) -> Self {
        let mut g = Self::new(vertices);
        for i in 1..vertices {
            g.insert_edge_unchecked(i as VertexId - 1, i as VertexId);
        }
        g
    }

    pub fn cycle(vertices: usize) -> Self {
        assert!(vertices >= 3);
        let mut g = Self::path(vertices);
        g.insert_edge_unchecked(0, vertices as VertexId - 1);
        g
    }

    pub fn complete(vertices: usize) -> Self {
        let mut g = Self::new(vertices);
        for u in 0..vertices as VertexId {
            for v in u + 1..vertices as VertexId {
                g.insert_edge_unchecked(u, v);
            }
        }
        g
    }

    /// Star with centre 0 and `leaves` leaves.
    pub fn star(leaves: usize) -> Self {
        let mut g = Self::new(leaves + 1);
        for leaf in 1..=leaves as VertexId {
            g.insert_edge_unchecked(0, leaf);
        }
        g
    }

    /// `count` vertex-disjoint edges.
    pub fn matching(count: usize) -> Self {
        let mut g = Self::new(2 * count);
        for i in 0..count as VertexId {
            g.insert_edge_unchecked(2 * i, 2 * i + 1);
        }
        g
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn families_have_expected_sizes() {
        assert_eq!(StoredGraph::path(6).edge_count(), 5);
        assert_eq!(StoredGraph::cycle(5).edge_count(), 5);
        assert_eq!(StoredGraph::complete(5).edge_count(), 10);
        assert_eq!(StoredGraph::star(5).n(), 6);
        assert_eq!(StoredGraph::matching(3).edge_count(), 3);
    }

    #[test]
    fn certificate_checks() {
        let tri = StoredGraph::complete(3);
        assert!(tri.is_vertex_cover(&[0, 1]));
        assert!(!tri.is_vertex_cover(&[0]));
        assert!(tri.is_feedback_vertex_set(&[2]));
        assert!(!tri.is_feedback_vertex_set(&[]));
        assert!(tri.is_dominating_set(&[1]));
        assert!(tri.is_simple_path(&[0, 1, 2]));
        assert!(!StoredGraph::path(3).is_simple_path(&[0, 2]));
    }

    #[test]
    fn add_edge_validates() {
        let mut g = StoredGraph::new(3);
        assert!(g.add_edge(1, 1).is_err());
        assert!(g.add_edge(0, 3).is_err());
        g.add_edge(2, 0).unwrap();
        g.add_edge(0, 2).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert!(g.has_edge(0, 2));
    }
}
