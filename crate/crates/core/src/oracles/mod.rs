//! Exact desk-scale solvers. They decide stored graphs at the end of a
//! threshold run and serve as ground truth in tests.
//!
//! Every oracle refuses instances above its [`DeskBounds`] limit with
//! [`Error::DeskBound`](crate::Error::DeskBound) instead of running for hours.

mod domset;
mod fvs;
mod girth;
mod path;
mod sat;
mod treewidth;
mod union;
mod vc;

pub use domset::domset_min;
pub use fvs::fvs_min;
pub use girth::girth;
pub use path::{longest_path, longest_path_length};
pub use sat::{sat2_solve, satd_brute, CnfInstance, Literal, Satisfiability};
pub use treewidth::treewidth_exact;
pub use union::disjoint_union;
pub use vc::vc_min;

use crate::error::{Error, Result};

/// Largest instances each oracle accepts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DeskBounds {
    pub vc_vertices: usize,
    pub fvs_vertices: usize,
    pub path_vertices: usize,
    pub treewidth_vertices: usize,
    pub girth_vertices: usize,
    pub domset_vertices: usize,
    /// Candidate sets the dominating-set search may test before refusing.
    pub domset_candidates: u64,
    pub sat_brute_variables: usize,
}

pub const DESK_BOUNDS: DeskBounds = DeskBounds {
    vc_vertices: 24,
    fvs_vertices: 22,
    path_vertices: 20,
    treewidth_vertices: 24,
    girth_vertices: 1 << 20,
    domset_vertices: 128,
    domset_candidates: 50_000_000,
    sat_brute_variables: 24,
};

pub(crate) fn check_bound(oracle: &'static str, size: usize, limit: usize) -> Result<()> {
    if size > limit {
        return Err(Error::DeskBound {
            oracle,
            size: size as u64,
            limit: limit as u64,
        });
    }
    Ok(())
}

pub(crate) fn mask_to_vertices(mut mask: u64) -> Vec<u32> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    while mask != 0 {
        out.push(mask.trailing_zeros());
        mask &= mask - 1;
    }
    out
}

/// Calls `visit` on every `size`-subset of `[0, n)` as a bitmask, in
/// increasing numeric order, stopping when it returns true.
pub(crate) fn first_subset_of_size(n: usize, size: usize, mut visit: impl FnMut(u64) -> bool) -> Option<u64> {
    if size > n {
        return None;
    }
    if size == 0 {
        return visit(0).then_some(0);
    }
    let limit = 1u128 << n;
    let mut mask: u64 = (1u64 << size) - 1;
    loop {
        if visit(mask) {
            return Some(mask);
        }
        // Gosper's hack
        let c = mask & mask.wrapping_neg();
        let r = mask + c;
        let next = (((r ^ mask) >> 2) / c) | r;
        if next as u128 >= limit || r == 0 {
            return None;
        }
        mask = next;
    }
}
