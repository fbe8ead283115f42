//! Multipass k-Vertex-Cover in O(k) words on insert-only streams.
//!
//! Two algorithms: bounded-depth branching (one pass per branch string,
//! at most `2^k` passes) and iterative compression from a greedy maximal
//! matching (at most `1 + sum_{i<=k} C(2k, i)` passes).

use crate::error::{Error, Result};
use crate::ledger::{bits_to_words, SpaceLedger, COUNTER_WORDS, VERTEX_WORDS};
use crate::stream::{PassCounter, ReplayableStream, StreamModel, VertexId};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VcOutcome {
    Cover(Vec<VertexId>),
    No,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VcRun {
    pub outcome: VcOutcome,
    pub passes: u64,
    pub peak_words: u64,
}

fn require_insert_only(stream: &ReplayableStream, algorithm: &'static str) -> Result<()> {
    match stream.model() {
        StreamModel::InsertOnly => Ok(()),
        actual => Err(Error::ModelMismatch {
            algorithm,
            expected: StreamModel::InsertOnly,
            actual,
        }),
    }
}

/// A binary string of length `k`, stepped through in dictionary order.
/// Character `i` says which endpoint of the `i`-th uncovered edge to take:
/// `false` for the smaller id, `true` for the larger.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchString {
    bits: Vec<bool>,
    exhausted: bool,
}

impl BranchString {
    pub fn first(k: usize) -> Self {
        Self {
            bits: vec![false; k],
            exhausted: false,
        }
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bit(&self, i: usize) -> bool {
        self.bits[i]
    }

    pub fn is_exhausted(&self) -> bool {
        self.exhausted
    }

    /// Steps to the successor; stepping past `1^k` exhausts the string.
    pub fn advance(&mut self) {
        for b in self.bits.iter_mut().rev() {
            if *b {
                *b = false;
            } else {
                *b = true;
                return;
            }
        }
        self.exhausted = true;
    }
}

/// Enumerates subsets of `[0, ground)` of size at most `max_size` in
/// dictionary order of their sorted index sequences, starting from the empty
/// set: `{}`, `{0}`, `{0,1}`, ..., `{1}`, `{1,2}`, ...
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundedSubsetCursor {
    ground: usize,
    max_size: usize,
    current: Vec<usize>,
    exhausted: bool,
}

impl BoundedSubsetCursor {
    pub fn new(ground: usize, max_size: usize) -> Self {
        Self {
            ground,
            max_size,
            current: Vec::new(),
            exhausted: false,
        }
    }

    pub fn current(&self) -> &[usize] {
        &self.current
    }

    pub fn is_exhausted(&self) -> bool {
        self.exhausted
    }

    pub fn advance(&mut self) {
        let next = self.current.last().map_or(0, |&x| x + 1);
        if self.current.len() < self.max_size && next < self.ground {
            self.current.push(next);
            return;
        }
        while let Some(x) = self.current.pop() {
            if x + 1 < self.ground {
                self.current.push(x + 1);
                return;
            }
        }
        self.exhausted = true;
    }
}

/// Bounded-depth branching. Each pass follows one branch string: the first
/// `k` uncovered edges pick an endpoint each, and the string fails only if
/// an uncovered edge turns up after all `k` picks are spent.
pub fn vc_branching(stream: &ReplayableStream, k: usize) -> Result<VcRun> {
    require_insert_only(stream, "vc-branching")?;
    let mut passes = PassCounter::new();
    let mut ledger = SpaceLedger::new();
    // branch string, pick counter, stream position
    ledger.acquire(bits_to_words(k as u64, stream.n()) + 2 * COUNTER_WORDS);
    let mut x = BranchString::first(k);
    let mut chosen: Vec<VertexId> = Vec::with_capacity(k);
    let mut held = 0;
    while !x.is_exhausted() {
        chosen.clear();
        let mut failed = false;
        for up in stream.replay(&mut passes) {
            let (u, v) = up.endpoints();
            if chosen.contains(&u) || chosen.contains(&v) {
                continue;
            }
            if chosen.len() == k {
                failed = true;
                break;
            }
            chosen.push(if x.bit(chosen.len()) { v } else { u });
            if chosen.len() > held {
                ledger.acquire(VERTEX_WORDS);
                held += 1;
            }
        }
        if !failed {
            chosen.sort_unstable();
            return Ok(VcRun {
                outcome: VcOutcome::Cover(chosen),
                passes: passes.passes(),
                peak_words: ledger.peak_words(),
            });
        }
        x.advance();
    }
    Ok(VcRun {
        outcome: VcOutcome::No,
        passes: passes.passes(),
        peak_words: ledger.peak_words(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MatchingOutcome {
    /// Endpoints of a maximal matching, in the order they were matched.
    Matched(Vec<VertexId>),
    /// The matching grew past the cap.
    Exceeded,
}

/// One pass of greedy maximal matching, abandoned once it would exceed
/// `cap` edges.
pub fn greedy_maximal_matching_pass(
    stream: &ReplayableStream,
    cap: usize,
    ledger: &mut SpaceLedger,
    passes: &mut PassCounter,
) -> MatchingOutcome {
    let mut matched: Vec<VertexId> = Vec::with_capacity(2 * cap);
    for up in stream.replay(passes) {
        let (u, v) = up.endpoints();
        if matched.contains(&u) || matched.contains(&v) {
            continue;
        }
        if matched.len() == 2 * cap {
            return MatchingOutcome::Exceeded;
        }
        ledger.acquire(2 * VERTEX_WORDS);
        matched.push(u);
        matched.push(v);
    }
    MatchingOutcome::Matched(matched)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DisjointOutcome {
    /// `keep ∪ forced`, sorted.
    Found(Vec<VertexId>),
    /// More than `budget - |keep|` vertices outside `cover` are forced.
    TooBig,
    /// An edge cannot be covered: both ends lie in `cover \ keep`, or
    /// neither end lies in `cover`.
    Conflict,
}

/// One pass looking for a cover of size at most `budget` that contains
/// `keep ⊆ cover` and avoids `cover \ keep`. Every neighbour outside
/// `cover` of a dropped vertex is forced in.
pub fn disjoint_vc_pass(
    stream: &ReplayableStream,
    cover: &[VertexId],
    keep: &[VertexId],
    budget: usize,
    ledger: &mut SpaceLedger,
    passes: &mut PassCounter,
) -> DisjointOutcome {
    if keep.len() > budget {
        return DisjointOutcome::TooBig;
    }
    let room = budget - keep.len();
    let mut forced: Vec<VertexId> = Vec::new();
    let mut outcome = None;
    for up in stream.replay(passes) {
        let (u, v) = up.endpoints();
        let (u_in, v_in) = (cover.contains(&u), cover.contains(&v));
        let u_dropped = u_in && !keep.contains(&u);
        let v_dropped = v_in && !keep.contains(&v);
        if (u_dropped && v_dropped) || (!u_in && !v_in) {
            outcome = Some(DisjointOutcome::Conflict);
            break;
        }
        let need = if u_dropped && !v_in {
            Some(v)
        } else if v_dropped && !u_in {
            Some(u)
        } else {
            None
        };
        if let Some(w) = need {
            if !forced.contains(&w) {
                if forced.len() == room {
                    outcome = Some(DisjointOutcome::TooBig);
                    break;
                }
                ledger.acquire(VERTEX_WORDS);
                forced.push(w);
            }
        }
    }
    let words = forced.len() as u64 * VERTEX_WORDS;
    ledger.release(words).expect("forced vertices were charged");
    outcome.unwrap_or_else(|| {
        let mut found: Vec<VertexId> = keep.iter().copied().chain(forced).collect();
        found.sort_unstable();
        DisjointOutcome::Found(found)
    })
}

/// Iterative compression, one-shot form: a greedy matching pass gives a
/// cover `S` of size at most `2k`, then each `Y ⊆ S` with `|Y| <= k` gets
/// one disjoint-cover pass.
pub fn vc_iterative_compression(stream: &ReplayableStream, k: usize) -> Result<VcRun> {
    require_insert_only(stream, "vc-iterative-compression")?;
    let mut passes = PassCounter::new();
    let mut ledger = SpaceLedger::new();
    // matching size, subset cursor flag, stream position
    ledger.acquire(3 * COUNTER_WORDS);
    let finish = |outcome, passes: &PassCounter, ledger: &SpaceLedger| VcRun {
        outcome,
        passes: passes.passes(),
        peak_words: ledger.peak_words(),
    };
    let matched = match greedy_maximal_matching_pass(stream, k, &mut ledger, &mut passes) {
        MatchingOutcome::Exceeded => return Ok(finish(VcOutcome::No, &passes, &ledger)),
        MatchingOutcome::Matched(m) => m,
    };
    let mut cover = matched;
    cover.sort_unstable();
    if cover.len() <= k {
        return Ok(finish(VcOutcome::Cover(cover), &passes, &ledger));
    }
    // working copy of S next to the matching's own endpoints
    ledger.acquire(cover.len() as u64 * VERTEX_WORDS);
    let mut cursor = BoundedSubsetCursor::new(cover.len(), k);
    let mut keep: Vec<VertexId> = Vec::with_capacity(k);
    ledger.acquire(k as u64 * VERTEX_WORDS);
    while !cursor.is_exhausted() {
        keep.clear();
        keep.extend(cursor.current().iter().map(|&i| cover[i]));
        if let DisjointOutcome::Found(found) =
            disjoint_vc_pass(stream, &cover, &keep, k, &mut ledger, &mut passes)
        {
            return Ok(finish(VcOutcome::Cover(found), &passes, &ledger));
        }
        cursor.advance();
    }
    Ok(finish(VcOutcome::No, &passes, &ledger))
}

/// Pass bound for branching: `max(1, 2^k)`.
pub fn branching_pass_bound(k: usize) -> u64 {
    1u64.checked_shl(k as u32).unwrap_or(u64::MAX)
}

/// Pass bound for iterative compression: `1 + k * 2^(2k)`.
pub fn compression_pass_bound(k: usize) -> u64 {
    1u64.checked_shl(2 * k as u32)
        .and_then(|p| p.checked_mul(k as u64))
        .and_then(|p| p.checked_add(1))
        .unwrap_or(u64::MAX)
}
