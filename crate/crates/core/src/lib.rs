//! Parameterized streaming graph algorithms with exact desk-scale oracles.
//!
//! * [`stream`] and [`ledger`]: replayable edge-update streams, pass counting
//!   and word-level space accounting.
//! * [`sparse_recovery`]: M-sparse recovery used by insert-delete runs.
//! * [`threshold`]: the "store at most M edges or decide" algorithms for
//!   k-Path, k-Treewidth, k-FVS and minor-bidimensional problems.
//! * [`multipass_vc`]: O(k)-word multipass k-VC by branching and by
//!   iterative compression.
//! * [`reductions`]: hard-instance generators with ground-truth bits.
//! * [`oracles`]: exact solvers used to decide stored graphs and to check
//!   everything else.
//! * [`sweep`] and [`workload`]: parallel sweeps over generated instances.

pub mod clause_stream;
pub mod error;
pub mod graph;
pub mod ledger;
pub mod multipass_vc;
pub mod oracles;
pub mod reductions;
pub mod sparse_recovery;
pub mod stream;
pub mod sweep;
pub mod threshold;
pub mod workload;

pub use error::{Error, Result};
pub use graph::StoredGraph;
pub use ledger::SpaceLedger;
pub use stream::{EdgeUpdate, PassCounter, ReplayableStream, StreamModel, UpdateOp, VertexId};
