use super::{check_bound, first_subset_of_size, mask_to_vertices, DESK_BOUNDS};
use crate::error::Result;
use crate::graph::StoredGraph;
use crate::stream::VertexId;

/// Minimum vertex cover by enumerating candidate sets in increasing size.
pub fn vc_min(g: &StoredGraph) -> Result<(usize, Vec<VertexId>)> {
    check_bound("vc_min", g.n(), DESK_BOUNDS.vc_vertices)?;
    let n = g.n();
    let adj = g.adjacency_masks();
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    // A set covers every edge iff its complement is independent.
    let covers = |mask: u64| {
        let mut rest = full & !mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            if adj[v] & !mask != 0 {
                return false;
            }
            rest &= rest - 1;
        }
        true
    };
    for size in 0..=n {
        if let Some(mask) = first_subset_of_size(n, size, covers) {
            return Ok((size, mask_to_vertices(mask)));
        }
    }
    unreachable!("the full vertex set is always a cover")
}
