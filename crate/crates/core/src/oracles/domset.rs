use super::{check_bound, DESK_BOUNDS};
use crate::error::{Error, Result};
use crate::graph::StoredGraph;
use crate::stream::VertexId;

/// Minimum dominating set, searching candidate sets in increasing size.
///
/// Works on graphs up to 128 vertices as long as the optimum is small
/// enough that the search stays within the candidate budget.
pub fn domset_min(g: &StoredGraph) -> Result<(usize, Vec<VertexId>)> {
    check_bound("domset_min", g.n(), DESK_BOUNDS.domset_vertices)?;
    let n = g.n();
    let full: u128 = if n == 128 { u128::MAX } else { (1u128 << n) - 1 };
    let mut closed: Vec<u128> = (0..n).map(|v| 1u128 << v).collect();
    for (u, v) in g.edges() {
        closed[u as usize] |= 1 << v;
        closed[v as usize] |= 1 << u;
    }
    let mut budget = DESK_BOUNDS.domset_candidates;
    let mut chosen = Vec::new();
    for size in 0..=n {
        if search(&closed, full, 0, size, &mut chosen, &mut budget)? {
            let mut witness: Vec<VertexId> = chosen.iter().map(|&v| v as VertexId).collect();
            witness.sort_unstable();
            return Ok((size, witness));
        }
    }
    unreachable!("the full vertex set dominates")
}

/// Depth-first choice of `left` more vertices.
fn search(
    closed: &[u128],
    full: u128,
    covered: u128,
    left: usize,
    chosen: &mut Vec<usize>,
    budget: &mut u64,
) -> Result<bool> {
    if covered == full {
        return Ok(true);
    }
    if left == 0 {
        if *budget == 0 {
            return Err(Error::DeskBound {
                oracle: "domset_min",
                size: closed.len() as u64,
                limit: DESK_BOUNDS.domset_candidates,
            });
        }
        *budget -= 1;
        return Ok(false);
    }
    // Some chosen vertex must dominate the lowest undominated vertex `x`; its
    // closed neighbourhood lists exactly those candidates.
    let x = (!covered & full).trailing_zeros() as usize;
    let mut options = closed[x];
    while options != 0 {
        let v = options.trailing_zeros() as usize;
        options &= options - 1;
        chosen.push(v);
        if search(closed, full, covered | closed[v], left - 1, chosen, budget)? {
            return Ok(true);
        }
        chosen.pop();
    }
    Ok(false)
}
