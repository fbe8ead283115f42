use std::fmt;
use std::time::Duration;

use pstream::threshold::Decision;
use pstream::{StreamModel, VertexId};

/// Outcome of one `run` invocation. Every field except `wall_time` comes
/// from the algorithm's own pass counter and space ledger.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunReport {
    pub problem: String,
    pub k: Option<u64>,
    pub model: StreamModel,
    pub decision: Decision,
    pub witness: Option<Vec<VertexId>>,
    pub passes: u64,
    pub peak_words: u64,
    pub threshold: Option<u64>,
    pub wall_time: Duration,
}

impl RunReport {
    /// The reproducible part of the report, in output order.
    pub fn fields(&self) -> Vec<(&'static str, String)> {
        let mut out = vec![("problem", self.problem.clone())];
        if let Some(k) = self.k {
            out.push(("k", k.to_string()));
        }
        out.push(("model", self.model.to_string()));
        out.push(("decision", self.decision.to_string()));
        if let Some(w) = &self.witness {
            out.push(("witness", join_ids(w)));
        }
        out.push(("passes", self.passes.to_string()));
        out.push(("peak_words", self.peak_words.to_string()));
        if let Some(m) = self.threshold {
            out.push(("threshold", m.to_string()));
        }
        out
    }
}

impl fmt::Display for RunReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (key, value) in self.fields() {
            writeln!(f, "{key}={value}")?;
        }
        writeln!(f, "wall_time={:.6}", self.wall_time.as_secs_f64())
    }
}

pub fn join_ids(ids: &[VertexId]) -> String {
    ids.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}
