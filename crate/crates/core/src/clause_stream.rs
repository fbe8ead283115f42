//! Clause streams and the store-everything algorithm for d-SAT.

use crate::error::Result;
use crate::ledger::{SpaceLedger, COUNTER_WORDS};
use crate::oracles::{sat2_solve, satd_brute, CnfInstance, Literal, Satisfiability};
use crate::stream::PassCounter;

/// A CNF formula delivered one clause at a time, replayable like an edge stream.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClauseStream {
    cnf: CnfInstance,
}

impl ClauseStream {
    pub fn new(cnf: CnfInstance) -> Self {
        Self { cnf }
    }

    pub fn num_vars(&self) -> usize {
        self.cnf.num_vars()
    }

    pub fn replay<'a>(&'a self, passes: &mut PassCounter) -> std::slice::Iter<'a, Vec<Literal>> {
        passes.start_pass();
        self.cnf.clauses().iter()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SatNaiveRun {
    pub result: Satisfiability,
    pub clauses: usize,
    pub passes: u64,
    pub peak_words: u64,
}

/// Stores every clause (one word per literal, one per clause length) and
/// solves offline: implication graph for 2-CNF, brute force otherwise.
pub fn sat_naive(stream: &ClauseStream) -> Result<SatNaiveRun> {
    let mut passes = PassCounter::new();
    let mut ledger = SpaceLedger::new();
    ledger.acquire(COUNTER_WORDS);
    let mut stored = CnfInstance::new(stream.num_vars());
    for clause in stream.replay(&mut passes) {
        ledger.acquire(clause.len() as u64 + COUNTER_WORDS);
        stored.push_clause(clause.clone())?;
    }
    let result = if stored.max_clause_len() <= 2 {
        sat2_solve(&stored)?
    } else {
        satd_brute(&stored)?
    };
    Ok(SatNaiveRun {
        result,
        clauses: stored.clauses().len(),
        passes: passes.passes(),
        peak_words: ledger.peak_words(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_pass_and_matching_decisions() {
        let cnf = CnfInstance::parse_dimacs("p cnf 2 3\n1 2 0\n-1 0\n-2 0\n").unwrap();
        let run = sat_naive(&ClauseStream::new(cnf)).unwrap();
        assert_eq!((run.result, run.passes, run.clauses), (Satisfiability::Unsat, 1, 3));
        assert_eq!(run.peak_words, 1 + 3 + 2 + 2);
        let cnf = CnfInstance::parse_dimacs("p cnf 3 2\n1 2 3 0\n-1 -2 -3 0\n").unwrap();
        assert_eq!(sat_naive(&ClauseStream::new(cnf)).unwrap().result, Satisfiability::Sat);
    }
}
