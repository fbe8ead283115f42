//! One-pass "store at most M edges or decide immediately" algorithms.
//!
//! Each problem comes with an extremal bound: graphs with more than `M`
//! edges have a forced answer, and graphs with at most `M` edges are stored
//! whole and handed to an exact oracle. Insert-only runs keep the edges and a
//! counter, aborting at edge `M + 1`. Insert-delete runs keep an exact net
//! counter and an M-sparse recovery sketch, and decide at end of stream.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::StoredGraph;
use crate::ledger::{SpaceLedger, COUNTER_WORDS, EDGE_WORDS};
use crate::oracles;
use crate::sparse_recovery::{Recovery, SparseRecoverySketch};
use crate::stream::{PassCounter, ReplayableStream, StreamModel, UpdateOp, VertexId};

const SKETCH_SEED: u64 = 0x5eed_ed9e_5ca1_ab1e;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Decision {
    Yes,
    No,
}

impl Decision {
    pub fn from_bool(yes: bool) -> Self {
        if yes {
            Decision::Yes
        } else {
            Decision::No
        }
    }

    pub fn is_yes(self) -> bool {
        self == Decision::Yes
    }
}

impl fmt::Display for Decision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Decision::Yes => "YES",
            Decision::No => "NO",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    Path(Vec<VertexId>),
    VertexSet(Vec<VertexId>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BudgetOutcome {
    /// More than `M` edges. Insert-only runs report the count at abort time
    /// (`M + 1`), insert-delete runs the net count at end of stream.
    OverBudget { count: u64 },
    Stored(StoredGraph),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BudgetRun {
    pub outcome: BudgetOutcome,
    pub threshold: u64,
    pub passes: u64,
    pub peak_words: u64,
}

/// Checks whether the stream's graph has at most `budget` edges, storing it
/// if so. A budget of 0 is accepted and means "no edges at all".
pub fn run_edge_budget(stream: &ReplayableStream, budget: u64) -> Result<BudgetRun> {
    let mut passes = PassCounter::new();
    let mut ledger = SpaceLedger::new();
    let outcome = match stream.model() {
        StreamModel::InsertOnly => insert_only_budget(stream, budget, &mut passes, &mut ledger)?,
        StreamModel::InsertDelete => insert_delete_budget(stream, budget, &mut passes, &mut ledger)?,
    };
    Ok(BudgetRun {
        outcome,
        threshold: budget,
        passes: passes.passes(),
        peak_words: ledger.peak_words(),
    })
}

fn insert_only_budget(
    stream: &ReplayableStream,
    budget: u64,
    passes: &mut PassCounter,
    ledger: &mut SpaceLedger,
) -> Result<BudgetOutcome> {
    ledger.acquire(COUNTER_WORDS);
    let mut count = 0u64;
    let mut edges: Vec<(VertexId, VertexId)> = Vec::new();
    for up in stream.replay(passes) {
        debug_assert_eq!(up.op(), UpdateOp::Insert);
        count += 1;
        if count > budget {
            return Ok(BudgetOutcome::OverBudget { count });
        }
        ledger.acquire(EDGE_WORDS);
        edges.push(up.endpoints());
    }
    let mut g = StoredGraph::new(stream.n());
    for (u, v) in edges {
        g.insert_edge_unchecked(u, v);
    }
    Ok(BudgetOutcome::Stored(g))
}

fn insert_delete_budget(
    stream: &ReplayableStream,
    budget: u64,
    passes: &mut PassCounter,
    ledger: &mut SpaceLedger,
) -> Result<BudgetOutcome> {
    let n = stream.n() as u64;
    let capacity = budget.max(1) as usize;
    let mut sketch = SparseRecoverySketch::new(capacity, (n * n).max(1), SKETCH_SEED);
    ledger.acquire(sketch.words() + COUNTER_WORDS);
    let mut net: i64 = 0;
    for up in stream.replay(passes) {
        let key = up.u() as u64 * n + up.v() as u64;
        match up.op() {
            UpdateOp::Insert => {
                sketch.insert(key)?;
                net += 1;
            }
            UpdateOp::Delete => {
                sketch.delete(key)?;
                net -= 1;
            }
        }
    }
    if net > budget as i64 {
        return Ok(BudgetOutcome::OverBudget { count: net as u64 });
    }
    let contradiction = Error::SketchContradiction {
        net,
        capacity,
    };
    let Recovery::Recovered(elements) = sketch.into_recovery() else {
        return Err(contradiction);
    };
    let mut g = StoredGraph::new(stream.n());
    for (key, mult) in elements {
        if mult != 1 {
            return Err(contradiction);
        }
        let (u, v) = ((key / n) as VertexId, (key % n) as VertexId);
        ledger.acquire(EDGE_WORDS);
        g.insert_edge_unchecked(u, v);
    }
    if g.edge_count() as i64 != net {
        return Err(contradiction);
    }
    Ok(BudgetOutcome::Stored(g))
}

/// Result of a threshold decision run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThresholdReport {
    pub decision: Decision,
    pub certificate: Option<Certificate>,
    pub threshold: u64,
    /// Whether the graph was stored and decided by an oracle.
    pub stored: bool,
    pub passes: u64,
    pub peak_words: u64,
}

fn checked_budget(k: u64, factors: &[u64]) -> Result<u64> {
    factors
        .iter()
        .try_fold(1u64, |acc, &f| acc.checked_mul(f))
        .ok_or_else(|| Error::BudgetOverflow {
            k,
            detail: format!("product of {factors:?} exceeds u64"),
        })
}

fn decide_with(
    stream: &ReplayableStream,
    budget: u64,
    over_budget: Decision,
    decide: impl FnOnce(&StoredGraph) -> Result<(Decision, Option<Certificate>)>,
) -> Result<ThresholdReport> {
    let run = run_edge_budget(stream, budget)?;
    let (decision, certificate, stored) = match &run.outcome {
        BudgetOutcome::OverBudget { .. } => (over_budget, None, false),
        BudgetOutcome::Stored(g) => {
            let (d, c) = decide(g)?;
            (d, c, true)
        }
    };
    Ok(ThresholdReport {
        decision,
        certificate,
        threshold: run.threshold,
        stored,
        passes: run.passes,
        peak_words: run.peak_words,
    })
}

/// Does the graph have a path with at least `k` edges? Budget `n * k`.
pub fn k_path_decide(stream: &ReplayableStream, k: u64) -> Result<ThresholdReport> {
    let budget = checked_budget(k, &[stream.n() as u64, k])?;
    decide_with(stream, budget, Decision::Yes, |g| {
        let path = oracles::longest_path(g)?;
        let yes = path.len() as u64 > k;
        Ok((Decision::from_bool(yes), yes.then_some(Certificate::Path(path))))
    })
}

/// Is the treewidth at most `k`? Budget `n * k`.
pub fn k_treewidth_decide(stream: &ReplayableStream, k: u64) -> Result<ThresholdReport> {
    let budget = checked_budget(k, &[stream.n() as u64, k])?;
    decide_with(stream, budget, Decision::No, |g| {
        Ok((Decision::from_bool(oracles::treewidth_exact(g)? as u64 <= k), None))
    })
}

/// Is there a feedback vertex set of size at most `k`? Budget `n * (k + 1)`.
pub fn k_fvs_decide(stream: &ReplayableStream, k: u64) -> Result<ThresholdReport> {
    let budget = checked_budget(k, &[stream.n() as u64, k.saturating_add(1)])?;
    decide_with(stream, budget, Decision::No, |g| {
        let (size, witness) = oracles::fvs_min(g)?;
        let yes = size as u64 <= k;
        Ok((Decision::from_bool(yes), yes.then_some(Certificate::VertexSet(witness))))
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Minimize,
    Maximize,
}

/// A g(r)-minor-bidimensional problem: its value on the r×r grid is at least
/// g(r) and never grows under taking minors.
#[derive(Clone, Copy)]
pub struct BidimensionalProblemSpec {
    pub name: &'static str,
    pub direction: Direction,
    /// k ↦ g⁻¹(k + 1), the side of a grid whose value exceeds k.
    pub g_inverse: fn(u64) -> u64,
    /// Exponent in the polynomial grid-minor bound.
    pub grid_exponent: u32,
    /// Exact answer to "is (G, k) a YES instance" on a stored graph.
    pub decider: fn(&StoredGraph, u64) -> Result<bool>,
}

impl fmt::Debug for BidimensionalProblemSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BidimensionalProblemSpec")
            .field("name", &self.name)
            .field("direction", &self.direction)
            .field("grid_exponent", &self.grid_exponent)
            .finish()
    }
}

pub const GRID_EXPONENT: u32 = 10;

fn ceil_sqrt(x: u64) -> u64 {
    let mut r = (x as f64).sqrt() as u64;
    while r * r < x {
        r += 1;
    }
    while r > 0 && (r - 1) * (r - 1) >= x {
        r -= 1;
    }
    r
}

impl BidimensionalProblemSpec {
    /// Treewidth is Ω(r)-minor-bidimensional: g(r) = r.
    pub fn treewidth() -> Self {
        Self {
            name: "treewidth",
            direction: Direction::Minimize,
            g_inverse: |k| k + 1,
            grid_exponent: GRID_EXPONENT,
            decider: |g, k| Ok(oracles::treewidth_exact(g)? as u64 <= k),
        }
    }

    /// Vertex cover is Ω(r²)-minor-bidimensional.
    pub fn vertex_cover() -> Self {
        Self {
            name: "vc",
            direction: Direction::Minimize,
            g_inverse: |k| ceil_sqrt(k + 1),
            grid_exponent: GRID_EXPONENT,
            decider: |g, k| Ok(oracles::vc_min(g)?.0 as u64 <= k),
        }
    }

    pub fn feedback_vertex_set() -> Self {
        Self {
            name: "fvs",
            direction: Direction::Minimize,
            g_inverse: |k| ceil_sqrt(k + 1),
            grid_exponent: GRID_EXPONENT,
            decider: |g, k| Ok(oracles::fvs_min(g)?.0 as u64 <= k),
        }
    }

    /// Long path: a maximisation problem, YES when a path has at least k edges.
    pub fn long_path() -> Self {
        Self {
            name: "path",
            direction: Direction::Maximize,
            g_inverse: |k| ceil_sqrt(k + 1),
            grid_exponent: GRID_EXPONENT,
            decider: |g, k| Ok(oracles::longest_path_length(g)? as u64 >= k),
        }
    }

    pub fn builtin() -> [Self; 4] {
        [
            Self::treewidth(),
            Self::vertex_cover(),
            Self::feedback_vertex_set(),
            Self::long_path(),
        ]
    }

    pub fn by_name(name: &str) -> Option<Self> {
        Self::builtin().into_iter().find(|s| s.name == name)
    }

    /// `tau * g⁻¹(k+1)^exponent * n`, or a refusal when it overflows.
    pub fn edge_budget(&self, n: usize, k: u64, tau: u64) -> Result<u64> {
        let side = (self.g_inverse)(k);
        let grid = side.checked_pow(self.grid_exponent).ok_or_else(|| Error::BudgetOverflow {
            k,
            detail: format!("{side}^{} exceeds u64", self.grid_exponent),
        })?;
        checked_budget(k, &[tau, grid, n as u64])
    }
}

/// Generic minor-bidimensional decision with the grid-minor edge threshold.
pub fn bidimensional_decide(
    stream: &ReplayableStream,
    k: u64,
    spec: &BidimensionalProblemSpec,
    tau: u64,
) -> Result<ThresholdReport> {
    if tau == 0 {
        return Err(Error::InvalidParameter("tau must be at least 1".into()));
    }
    let budget = spec.edge_budget(stream.n(), k, tau)?;
    let over = match spec.direction {
        Direction::Minimize => Decision::No,
        Direction::Maximize => Decision::Yes,
    };
    decide_with(stream, budget, over, |g| {
        Ok((Decision::from_bool((spec.decider)(g, k)?), None))
    })
}
