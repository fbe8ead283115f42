use std::collections::VecDeque;

use super::{check_bound, DESK_BOUNDS};
use crate::error::Result;
use crate::graph::StoredGraph;

/// Length of a shortest cycle, or `None` (infinite girth) for forests.
///
/// Breadth-first search from every vertex; a non-tree edge `(u, w)` closes a
/// closed walk of length `d(u) + d(w) + 1`, and the root of a shortest cycle
/// sees it exactly.
pub fn girth(g: &StoredGraph) -> Result<Option<usize>> {
    check_bound("girth", g.n(), DESK_BOUNDS.girth_vertices)?;
    let n = g.n();
    let adj = g.adjacency_lists();
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for root in 0..n {
        dist.fill(usize::MAX);
        parent.fill(usize::MAX);
        dist[root] = 0;
        queue.clear();
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            if let Some(b) = best {
                if 2 * dist[u] + 1 >= b {
                    break;
                }
            }
            for &w in &adj[u] {
                let w = w as usize;
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    let len = dist[u] + dist[w] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    Ok(best)
}
