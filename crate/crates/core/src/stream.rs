//! Edge-update streams over a fixed vertex set `[0, n)` and the replay harness
//! that counts passes.
//!
//! Text format:
//!
//! ```text
//! n <count> <insert-only|insert-delete>
//! + u v
//! - u v
//! ```
//!
//! Insert-only files may omit the `+`. Blank lines and lines starting with `#`
//! are ignored.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::StoredGraph;

pub type VertexId = u32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum UpdateOp {
    Insert,
    Delete,
}

/// A single edge insertion or deletion, stored with `u < v` when well formed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EdgeUpdate {
    u: VertexId,
    v: VertexId,
    op: UpdateOp,
}

impl EdgeUpdate {
    pub fn new(a: VertexId, b: VertexId, op: UpdateOp) -> Self {
        let (u, v) = if a <= b { (a, b) } else { (b, a) };
        Self { u, v, op }
    }

    pub fn insert(a: VertexId, b: VertexId) -> Self {
        Self::new(a, b, UpdateOp::Insert)
    }

    pub fn delete(a: VertexId, b: VertexId) -> Self {
        Self::new(a, b, UpdateOp::Delete)
    }

    /// Smaller endpoint under the natural id order.
    pub fn u(&self) -> VertexId {
        self.u
    }

    pub fn v(&self) -> VertexId {
        self.v
    }

    pub fn op(&self) -> UpdateOp {
        self.op
    }

    pub fn endpoints(&self) -> (VertexId, VertexId) {
        (self.u, self.v)
    }

    pub fn is_insert(&self) -> bool {
        self.op == UpdateOp::Insert
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StreamModel {
    InsertOnly,
    InsertDelete,
}

impl fmt::Display for StreamModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StreamModel::InsertOnly => "insert-only",
            StreamModel::InsertDelete => "insert-delete",
        })
    }
}

impl FromStr for StreamModel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "insert-only" => Ok(StreamModel::InsertOnly),
            "insert-delete" => Ok(StreamModel::InsertDelete),
            other => Err(Error::InvalidParameter(format!(
                "unknown stream model `{other}`"
            ))),
        }
    }
}

/// Counts complete or partial consumptions of a stream.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct PassCounter {
    passes: u64,
}

impl PassCounter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn passes(&self) -> u64 {
        self.passes
    }

    pub(crate) fn start_pass(&mut self) {
        self.passes += 1;
    }
}

/// Immutable, validated update sequence that can be replayed any number of
/// times in identical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReplayableStream {
    n: usize,
    updates: Vec<EdgeUpdate>,
    model: StreamModel,
}

/// Net multiplicity bookkeeping used only during validation.
enum Multiplicity {
    Dense { n: usize, counts: Vec<u8> },
    Sparse(HashMap<(VertexId, VertexId), u8>),
}

impl Multiplicity {
    fn new(n: usize) -> Self {
        if n <= 256 {
            Multiplicity::Dense {
                n,
                counts: vec![0; n * n],
            }
        } else {
            Multiplicity::Sparse(HashMap::new())
        }
    }

    fn slot(&mut self, u: VertexId, v: VertexId) -> &mut u8 {
        match self {
            Multiplicity::Dense { n, counts } => &mut counts[u as usize * *n + v as usize],
            Multiplicity::Sparse(map) => map.entry((u, v)).or_insert(0),
        }
    }
}

impl ReplayableStream {
    /// Validates `updates` against the stream invariants.
    ///
    /// Rejects self-loops, out-of-range ids, deletions in insert-only streams,
    /// deletions without a live edge and insertions of an already live edge.
    pub fn open(n: usize, updates: Vec<EdgeUpdate>, model: StreamModel) -> Result<Self> {
        if n > VertexId::MAX as usize {
            return Err(Error::InvalidParameter(format!(
                "vertex count {n} exceeds id range"
            )));
        }
        let mut live = Multiplicity::new(n);
        for (idx, up) in updates.iter().enumerate() {
            let position = idx + 1;
            let bad = |reason: String| Error::MalformedUpdate { position, reason };
            let (u, v) = up.endpoints();
            if u == v {
                return Err(bad(format!("self-loop on vertex {u}")));
            }
            if v as usize >= n {
                return Err(bad(format!("vertex {v} out of range for n={n}")));
            }
            let slot = live.slot(u, v);
            match up.op() {
                UpdateOp::Insert => {
                    if *slot == 1 {
                        return Err(bad(format!(
                            "edge ({u},{v}) inserted while present (multiplicity > 1)"
                        )));
                    }
                    *slot = 1;
                }
                UpdateOp::Delete => {
                    if model == StreamModel::InsertOnly {
                        return Err(bad("deletion in an insert-only stream".into()));
                    }
                    if *slot == 0 {
                        return Err(bad(format!(
                            "edge ({u},{v}) deleted while absent (negative multiplicity)"
                        )));
                    }
                    *slot = 0;
                }
            }
        }
        Ok(Self { n, updates, model })
    }

    pub fn insert_only(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self> {
        let updates = edges.iter().map(|&(a, b)| EdgeUpdate::insert(a, b)).collect();
        Self::open(n, updates, StreamModel::InsertOnly)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn model(&self) -> StreamModel {
        self.model
    }

    pub fn len(&self) -> usize {
        self.updates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.updates.is_empty()
    }

    /// Starts a new pass over the stream, counting it in `passes`.
    pub fn replay<'a>(&'a self, passes: &mut PassCounter) -> std::slice::Iter<'a, EdgeUpdate> {
        passes.start_pass();
        self.updates.iter()
    }

    /// Raw update sequence, for serialization and inspection outside algorithms.
    pub fn updates(&self) -> &[EdgeUpdate] {
        &self.updates
    }

    /// The same updates viewed under the insert-delete model.
    pub fn as_insert_delete(&self) -> Self {
        Self {
            n: self.n,
            updates: self.updates.clone(),
            model: StreamModel::InsertDelete,
        }
    }

    /// Graph formed by the edges live at the end of the stream.
    pub fn net_graph(&self) -> StoredGraph {
        let mut g = StoredGraph::new(self.n);
        for up in &self.updates {
            let (u, v) = up.endpoints();
            match up.op() {
                UpdateOp::Insert => g.insert_edge_unchecked(u, v),
                UpdateOp::Delete => g.remove_edge(u, v),
            }
        }
        g
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("n {} {}\n", self.n, self.model);
        for up in &self.updates {
            let sign = if up.is_insert() { '+' } else { '-' };
            out.push_str(&format!("{} {} {}\n", sign, up.u(), up.v()));
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut header: Option<(usize, StreamModel)> = None;
        let mut updates = Vec::new();
        let mut line_of_update = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let perr = |reason: String| Error::Parse {
                line: line_no,
                reason,
            };
            let tokens: Vec<&str> = line.split_whitespace().collect();
            let Some((n, model)) = header else {
                if tokens.len() != 3 || tokens[0] != "n" {
                    return Err(perr("expected header `n <count> <model>`".into()));
                }
                let n = tokens[1]
                    .parse::<usize>()
                    .map_err(|e| perr(format!("bad vertex count: {e}")))?;
                let model = tokens[2].parse::<StreamModel>().map_err(|e| perr(e.to_string()))?;
                header = Some((n, model));
                continue;
            };
            let (op, rest) = match tokens[0] {
                "+" => (UpdateOp::Insert, &tokens[1..]),
                "-" => (UpdateOp::Delete, &tokens[1..]),
                _ if model == StreamModel::InsertOnly => (UpdateOp::Insert, &tokens[..]),
                t => return Err(perr(format!("expected `+` or `-`, found `{t}`"))),
            };
            if rest.len() != 2 {
                return Err(perr("expected two endpoints".into()));
            }
            let parse_id = |t: &str| {
                t.parse::<VertexId>()
                    .map_err(|e| perr(format!("bad vertex id `{t}`: {e}")))
            };
            let (a, b) = (parse_id(rest[0])?, parse_id(rest[1])?);
            if (a.max(b) as usize) >= n {
                return Err(perr(format!("vertex {} out of range for n={n}", a.max(b))));
            }
            updates.push(EdgeUpdate::new(a, b, op));
            line_of_update.push(line_no);
        }
        let Some((n, model)) = header else {
            return Err(Error::Parse {
                line: 0,
                reason: "missing header".into(),
            });
        };
        Self::open(n, updates, model).map_err(|e| match e {
            Error::MalformedUpdate { position, reason } => Error::Parse {
                line: line_of_update[position - 1],
                reason,
            },
            other => other,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_stream_consumes_no_passes() {
        let s = ReplayableStream::open(0, vec![], StreamModel::InsertOnly).unwrap();
        let passes = PassCounter::new();
        assert!(s.is_empty());
        assert_eq!(passes.passes(), 0);
    }

    #[test]
    fn replay_is_deterministic_and_counted() {
        let s = ReplayableStream::insert_only(3, &[(0, 1), (1, 2)]).unwrap();
        let mut passes = PassCounter::new();
        let first: Vec<_> = s.replay(&mut passes).copied().collect();
        let second: Vec<_> = s.replay(&mut passes).copied().collect();
        assert_eq!(first, second);
        assert_eq!(first.len(), 2);
        assert_eq!(passes.passes(), 2);
    }

    #[test]
    fn canonical_orientation() {
        let up = EdgeUpdate::insert(5, 2);
        assert_eq!(up.endpoints(), (2, 5));
    }

    #[test]
    fn negative_multiplicity_names_position() {
        let ups = vec![
            EdgeUpdate::insert(0, 1),
            EdgeUpdate::delete(0, 1),
            EdgeUpdate::delete(0, 1),
        ];
        let err = ReplayableStream::open(2, ups, StreamModel::InsertDelete).unwrap_err();
        assert!(matches!(err, Error::MalformedUpdate { position: 3, .. }));
    }

    #[test]
    fn rejects_malformed_updates() {
        let self_loop = ReplayableStream::insert_only(3, &[(0, 1), (2, 2)]).unwrap_err();
        assert!(matches!(self_loop, Error::MalformedUpdate { position: 2, .. }));
        let range = ReplayableStream::insert_only(3, &[(0, 3)]).unwrap_err();
        assert!(matches!(range, Error::MalformedUpdate { position: 1, .. }));
        let dup = ReplayableStream::insert_only(3, &[(0, 1), (1, 0)]).unwrap_err();
        assert!(matches!(dup, Error::MalformedUpdate { position: 2, .. }));
        let del = ReplayableStream::open(
            2,
            vec![EdgeUpdate::insert(0, 1), EdgeUpdate::delete(0, 1)],
            StreamModel::InsertOnly,
        )
        .unwrap_err();
        assert!(matches!(del, Error::MalformedUpdate { position: 2, .. }));
    }

    #[test]
    fn reinsertion_after_delete_is_allowed() {
        let ups = vec![
            EdgeUpdate::insert(0, 1),
            EdgeUpdate::delete(0, 1),
            EdgeUpdate::insert(1, 0),
        ];
        let s = ReplayableStream::open(2, ups, StreamModel::InsertDelete).unwrap();
        assert_eq!(s.net_graph().edge_count(), 1);
    }

    #[test]
    fn text_round_trip() {
        let ups = vec![
            EdgeUpdate::insert(0, 1),
            EdgeUpdate::insert(2, 1),
            EdgeUpdate::delete(0, 1),
        ];
        let s = ReplayableStream::open(3, ups, StreamModel::InsertDelete).unwrap();
        let parsed = ReplayableStream::parse(&s.to_text()).unwrap();
        assert_eq!(parsed, s);
    }

    #[test]
    fn parse_insert_only_without_sign() {
        let s = ReplayableStream::parse("# P3\nn 3 insert-only\n0 1\n+ 1 2\n").unwrap();
        assert_eq!(s.len(), 2);
        assert_eq!(s.model(), StreamModel::InsertOnly);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let err = ReplayableStream::parse("n 3 insert-only\n0 1\n1 1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err:?}");
        let err = ReplayableStream::parse("n 3 insert-delete\n0 1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err:?}");
        let err = ReplayableStream::parse("n 3 insert-only\n0 9\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err:?}");
        let err = ReplayableStream::parse("3 0 1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }), "{err:?}");
    }
}
