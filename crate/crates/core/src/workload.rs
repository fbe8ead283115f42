//! Graph and stream workloads for sweeps, tests and benches.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::StoredGraph;
use crate::stream::{EdgeUpdate, ReplayableStream, StreamModel, VertexId};

/// The `n(n-1)/2` vertex pairs in canonical order.
pub fn edge_slots(n: usize) -> Vec<(VertexId, VertexId)> {
    let n = n as VertexId;
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

/// Number of labelled graphs on `n` vertices, `2^(n(n-1)/2)`; needs `n <= 11`.
pub fn labelled_graph_count(n: usize) -> u64 {
    let slots = n * n.saturating_sub(1) / 2;
    assert!(slots < 64, "too many labelled graphs on {n} vertices");
    1 << slots
}

/// Graph whose edge set is the set bits of `mask` over [`edge_slots`].
pub fn graph_from_mask(slots: &[(VertexId, VertexId)], n: usize, mask: u64) -> StoredGraph {
    let mut g = StoredGraph::new(n);
    for (i, &(u, v)) in slots.iter().enumerate() {
        if (mask >> i) & 1 == 1 {
            g.insert_edge_unchecked(u, v);
        }
    }
    g
}

/// Erdős–Rényi `G(n, p)`.
pub fn random_graph<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> StoredGraph {
    let mut g = StoredGraph::new(n);
    for (u, v) in edge_slots(n) {
        if rng.gen_bool(p) {
            g.insert_edge_unchecked(u, v);
        }
    }
    g
}

/// Insert-only stream of `g` in a uniformly random order.
pub fn shuffled_insert_only<R: Rng + ?Sized>(g: &StoredGraph, rng: &mut R) -> ReplayableStream {
    let mut edges: Vec<_> = g.edges().collect();
    edges.shuffle(rng);
    ReplayableStream::insert_only(g.n(), &edges).expect("stored graphs are simple")
}

/// Insert-delete stream whose net graph is `g`. Each edge of `g` is either
/// inserted once or inserted, deleted and reinserted; each of up to `decoys`
/// non-edges is inserted and later deleted. Events are interleaved at random.
pub fn churn_stream<R: Rng + ?Sized>(g: &StoredGraph, decoys: usize, rng: &mut R) -> ReplayableStream {
    let mut scripts: Vec<((VertexId, VertexId), usize)> = Vec::new();
    for e in g.edges() {
        scripts.push((e, if rng.gen_bool(0.5) { 1 } else { 3 }));
    }
    let mut absent: Vec<_> = edge_slots(g.n())
        .into_iter()
        .filter(|&(u, v)| !g.has_edge(u, v))
        .collect();
    absent.shuffle(rng);
    scripts.extend(absent.into_iter().take(decoys).map(|e| (e, 2)));
    let mut tokens: Vec<usize> = scripts
        .iter()
        .enumerate()
        .flat_map(|(i, &(_, len))| std::iter::repeat(i).take(len))
        .collect();
    tokens.shuffle(rng);
    let mut step = vec![0usize; scripts.len()];
    let updates = tokens
        .into_iter()
        .map(|i| {
            let ((u, v), _) = scripts[i];
            let k = step[i];
            step[i] += 1;
            if k % 2 == 0 {
                EdgeUpdate::insert(u, v)
            } else {
                EdgeUpdate::delete(u, v)
            }
        })
        .collect();
    ReplayableStream::open(g.n(), updates, StreamModel::InsertDelete)
        .expect("scripts keep multiplicities in {0, 1}")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn masks_enumerate_all_graphs() {
        let slots = edge_slots(4);
        assert_eq!(slots.len(), 6);
        assert_eq!(labelled_graph_count(4), 64);
        assert_eq!(graph_from_mask(&slots, 4, 63), StoredGraph::complete(4));
        assert_eq!(graph_from_mask(&slots, 4, 0b100101).edge_count(), 3);
    }

    #[test]
    fn streams_preserve_the_graph() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..20 {
            let g = random_graph(9, 0.4, &mut rng);
            assert_eq!(shuffled_insert_only(&g, &mut rng).net_graph(), g);
            let churn = churn_stream(&g, 6, &mut rng);
            assert_eq!(churn.model(), StreamModel::InsertDelete);
            assert_eq!(churn.net_graph(), g);
        }
    }
}
