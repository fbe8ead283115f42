use super::{check_bound, DESK_BOUNDS};
use crate::error::Result;
use crate::graph::StoredGraph;
use crate::stream::VertexId;

/// Longest simple path, as its vertex sequence. Empty for the empty graph.
///
/// Dynamic program over vertex subsets: `ends[mask]` holds every vertex at
/// which some simple path visiting exactly `mask` can end.
pub fn longest_path(g: &StoredGraph) -> Result<Vec<VertexId>> {
    check_bound("longest_path", g.n(), DESK_BOUNDS.path_vertices)?;
    let n = g.n();
    if n == 0 {
        return Ok(Vec::new());
    }
    let adj = g.adjacency_masks();
    let mut ends = vec![0u32; 1 << n];
    for v in 0..n {
        ends[1 << v] = 1 << v;
    }
    let mut best = 1usize;
    for mask in 1..(1usize << n) {
        let here = ends[mask];
        if here == 0 {
            continue;
        }
        if mask.count_ones() > best.count_ones() {
            best = mask;
        }
        let mut e = here;
        while e != 0 {
            let v = e.trailing_zeros() as usize;
            e &= e - 1;
            let mut ext = adj[v] & !(mask as u64);
            while ext != 0 {
                let w = ext.trailing_zeros() as usize;
                ext &= ext - 1;
                ends[mask | (1 << w)] |= 1 << w;
            }
        }
    }
    // Walk back from any endpoint of the widest reachable mask.
    let mut mask = best;
    let mut v = ends[mask].trailing_zeros() as usize;
    let mut path = vec![v as VertexId];
    while mask.count_ones() > 1 {
        let prev_mask = mask & !(1 << v);
        let candidates = ends[prev_mask] & adj[v] as u32;
        let u = candidates.trailing_zeros() as usize;
        path.push(u as VertexId);
        mask = prev_mask;
        v = u;
    }
    path.reverse();
    Ok(path)
}

/// Number of edges on a longest simple path.
pub fn longest_path_length(g: &StoredGraph) -> Result<usize> {
    Ok(longest_path(g)?.len().saturating_sub(1))
}
