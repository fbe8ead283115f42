use std::collections::HashSet;

use super::{check_bound, DESK_BOUNDS};
use crate::error::Result;
use crate::graph::StoredGraph;

/// Neighbours of `v` once every vertex in `eliminated` has been eliminated:
/// the vertices outside `eliminated ∪ {v}` reachable from `v` through
/// `eliminated`.
fn elimination_neighbours(adj: &[u64], eliminated: u64, v: usize) -> u64 {
    let mut comp = 1u64 << v;
    let mut frontier = comp;
    let mut boundary = 0u64;
    while frontier != 0 {
        let mut next = 0;
        let mut f = frontier;
        while f != 0 {
            next |= adj[f.trailing_zeros() as usize];
            f &= f - 1;
        }
        boundary |= next;
        frontier = next & eliminated & !comp;
        comp |= frontier;
    }
    boundary & !eliminated & !(1u64 << v)
}

struct Search<'a> {
    adj: &'a [u64],
    full: u64,
    bound: usize,
    failed: HashSet<u64>,
}

impl Search<'_> {
    /// Can the vertices outside `eliminated` be eliminated with every
    /// elimination degree at most `bound`?
    fn feasible(&mut self, eliminated: u64) -> bool {
        let remaining = self.full & !eliminated;
        if remaining.count_ones() as usize <= self.bound + 1 {
            return true;
        }
        if self.failed.contains(&eliminated) {
            return false;
        }
        let mut nbrs = [0u64; 64];
        let mut candidates = 0u64;
        let mut rest = remaining;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            nbrs[v] = elimination_neighbours(self.adj, eliminated, v);
            if nbrs[v].count_ones() as usize <= self.bound {
                candidates |= 1 << v;
            }
        }
        // A simplicial vertex of low degree can always be eliminated first.
        let mut c = candidates;
        while c != 0 {
            let v = c.trailing_zeros() as usize;
            c &= c - 1;
            let mut simplicial = true;
            let mut others = nbrs[v];
            while others != 0 {
                let u = others.trailing_zeros() as usize;
                others &= others - 1;
                if nbrs[v] & !nbrs[u] & !(1 << u) != 0 {
                    simplicial = false;
                    break;
                }
            }
            if simplicial {
                let ok = self.feasible(eliminated | 1 << v);
                if !ok {
                    self.failed.insert(eliminated);
                }
                return ok;
            }
        }
        let mut c = candidates;
        while c != 0 {
            let v = c.trailing_zeros() as usize;
            c &= c - 1;
            if self.feasible(eliminated | 1 << v) {
                return true;
            }
        }
        self.failed.insert(eliminated);
        false
    }
}

/// Exact treewidth: lower bound from degeneracy, upper bound from greedy
/// min-degree elimination, and a memoised search over eliminated vertex sets
/// for every width in between.
pub fn treewidth_exact(g: &StoredGraph) -> Result<usize> {
    check_bound("treewidth_exact", g.n(), DESK_BOUNDS.treewidth_vertices)?;
    let n = g.n();
    if g.edge_count() == 0 {
        return Ok(0);
    }
    let adj = g.adjacency_masks();
    let full = (1u64 << n) - 1;

    let mut lower = 0;
    let mut alive = full;
    while alive != 0 {
        let (v, d) = ones(alive)
            .map(|v| (v, (adj[v] & alive).count_ones() as usize))
            .min_by_key(|&(_, d)| d)
            .unwrap();
        lower = lower.max(d);
        alive &= !(1 << v);
    }

    let mut upper = 0;
    let mut eliminated = 0u64;
    while eliminated != full {
        let (v, d) = ones(full & !eliminated)
            .map(|v| (v, elimination_neighbours(&adj, eliminated, v).count_ones() as usize))
            .min_by_key(|&(_, d)| d)
            .unwrap();
        upper = upper.max(d);
        eliminated |= 1 << v;
    }

    for bound in lower..upper {
        let mut search = Search {
            adj: &adj,
            full,
            bound,
            failed: HashSet::new(),
        };
        if search.feasible(0) {
            return Ok(bound);
        }
    }
    Ok(upper)
}

fn ones(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (mask != 0).then(|| {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            v
        })
    })
}
