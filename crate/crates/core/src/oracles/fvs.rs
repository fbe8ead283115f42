use super::{check_bound, first_subset_of_size, mask_to_vertices, DESK_BOUNDS};
use crate::error::Result;
use crate::graph::StoredGraph;
use crate::stream::VertexId;

/// True when the subgraph induced by `keep` has no cycle.
pub(crate) fn induced_forest(adj: &[u64], keep: u64) -> bool {
    let mut degree_sum = 0u32;
    let mut rest = keep;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        degree_sum += (adj[v] & keep).count_ones();
        rest &= rest - 1;
    }
    let edges = degree_sum / 2;
    let mut components = 0u32;
    let mut unseen = keep;
    while unseen != 0 {
        components += 1;
        let mut comp = unseen & unseen.wrapping_neg();
        let mut frontier = comp;
        while frontier != 0 {
            let mut next = 0;
            let mut f = frontier;
            while f != 0 {
                next |= adj[f.trailing_zeros() as usize];
                f &= f - 1;
            }
            frontier = next & keep & !comp;
            comp |= frontier;
        }
        unseen &= !comp;
    }
    edges + components == keep.count_ones()
}

/// Minimum feedback vertex set by enumerating candidate sets in increasing size.
pub fn fvs_min(g: &StoredGraph) -> Result<(usize, Vec<VertexId>)> {
    check_bound("fvs_min", g.n(), DESK_BOUNDS.fvs_vertices)?;
    let n = g.n();
    let adj = g.adjacency_masks();
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    for size in 0..=n {
        if let Some(mask) = first_subset_of_size(n, size, |m| induced_forest(&adj, full & !m)) {
            return Ok((size, mask_to_vertices(mask)));
        }
    }
    unreachable!("removing every vertex leaves a forest")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_triangles() -> StoredGraph {
        StoredGraph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap()
    }

    #[test]
    fn small_families() {
        assert_eq!(fvs_min(&StoredGraph::path(5)).unwrap(), (0, vec![]));
        assert_eq!(fvs_min(&StoredGraph::star(4)).unwrap().0, 0);
        let (size, witness) = fvs_min(&StoredGraph::complete(3)).unwrap();
        assert_eq!(size, 1);
        assert!(StoredGraph::complete(3).is_feedback_vertex_set(&witness));
        let g = two_triangles();
        let (size, witness) = fvs_min(&g).unwrap();
        assert_eq!(size, 2);
        assert!(g.is_feedback_vertex_set(&witness));
        assert!(witness.iter().filter(|&&v| v < 3).count() == 1);
        assert_eq!(fvs_min(&StoredGraph::complete(5)).unwrap().0, 3);
    }
}
