use std::fmt;

use petgraph::algo::tarjan_scc;
use petgraph::graph::{DiGraph, NodeIndex};

use super::{check_bound, DESK_BOUNDS};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal {
    var: u32,
    negated: bool,
}

impl Literal {
    pub fn pos(var: u32) -> Self {
        Self { var, negated: false }
    }

    pub fn neg(var: u32) -> Self {
        Self { var, negated: true }
    }

    pub fn var(&self) -> u32 {
        self.var
    }

    pub fn is_negated(&self) -> bool {
        self.negated
    }

    pub fn negate(self) -> Self {
        Self {
            var: self.var,
            negated: !self.negated,
        }
    }

    /// DIMACS literal: 1-based variable, sign for polarity.
    pub fn to_dimacs(self) -> i64 {
        let v = self.var as i64 + 1;
        if self.negated {
            -v
        } else {
            v
        }
    }

    pub fn from_dimacs(lit: i64) -> Option<Self> {
        if lit == 0 || lit.unsigned_abs() > u32::MAX as u64 {
            return None;
        }
        let var = (lit.unsigned_abs() - 1) as u32;
        Some(if lit < 0 { Self::neg(var) } else { Self::pos(var) })
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_dimacs())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Satisfiability {
    Sat,
    Unsat,
}

/// CNF formula over variables `[0, num_vars)`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CnfInstance {
    num_vars: usize,
    clauses: Vec<Vec<Literal>>,
}

impl CnfInstance {
    pub fn new(num_vars: usize) -> Self {
        Self {
            num_vars,
            clauses: Vec::new(),
        }
    }

    pub fn from_clauses(num_vars: usize, clauses: Vec<Vec<Literal>>) -> Result<Self> {
        let mut cnf = Self::new(num_vars);
        for clause in clauses {
            cnf.push_clause(clause)?;
        }
        Ok(cnf)
    }

    /// Appends a clause after checking variable range and that no variable
    /// occurs in both polarities.
    pub fn push_clause(&mut self, clause: Vec<Literal>) -> Result<()> {
        for (i, lit) in clause.iter().enumerate() {
            if lit.var as usize >= self.num_vars {
                return Err(Error::InvalidInstance(format!(
                    "literal {lit} exceeds {} variables",
                    self.num_vars
                )));
            }
            if clause[..i].contains(&lit.negate()) {
                return Err(Error::InvalidInstance(format!(
                    "clause contains variable {} in both polarities",
                    lit.var + 1
                )));
            }
        }
        self.clauses.push(clause);
        Ok(())
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[Vec<Literal>] {
        &self.clauses
    }

    pub fn max_clause_len(&self) -> usize {
        self.clauses.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p cnf {} {}\n", self.num_vars, self.clauses.len());
        for clause in &self.clauses {
            for lit in clause {
                out.push_str(&format!("{lit} "));
            }
            out.push_str("0\n");
        }
        out
    }

    pub fn parse_dimacs(text: &str) -> Result<Self> {
        let mut cnf: Option<(CnfInstance, usize)> = None;
        let mut current = Vec::new();
        let mut last_line = 0;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('c') || line.starts_with('%') {
                continue;
            }
            let perr = |reason: String| Error::Parse {
                line: line_no,
                reason,
            };
            last_line = line_no;
            let Some((inst, _)) = cnf.as_mut() else {
                let t: Vec<&str> = line.split_whitespace().collect();
                if t.len() != 4 || t[0] != "p" || t[1] != "cnf" {
                    return Err(perr("expected header `p cnf <vars> <clauses>`".into()));
                }
                let vars = t[2].parse().map_err(|e| perr(format!("bad variable count: {e}")))?;
                let clauses = t[3].parse().map_err(|e| perr(format!("bad clause count: {e}")))?;
                cnf = Some((CnfInstance::new(vars), clauses));
                continue;
            };
            for tok in line.split_whitespace() {
                let lit: i64 = tok.parse().map_err(|e| perr(format!("bad literal `{tok}`: {e}")))?;
                if lit == 0 {
                    inst.push_clause(std::mem::take(&mut current))
                        .map_err(|e| perr(e.to_string()))?;
                } else {
                    current.push(Literal::from_dimacs(lit).ok_or_else(|| perr(format!("bad literal `{tok}`")))?);
                }
            }
        }
        let Some((inst, declared)) = cnf else {
            return Err(Error::Parse {
                line: 0,
                reason: "missing `p cnf` header".into(),
            });
        };
        if !current.is_empty() {
            return Err(Error::Parse {
                line: last_line,
                reason: "last clause is not terminated by 0".into(),
            });
        }
        if inst.clauses.len() != declared {
            return Err(Error::Parse {
                line: last_line,
                reason: format!("header declares {declared} clauses, found {}", inst.clauses.len()),
            });
        }
        Ok(inst)
    }
}

fn node(lit: Literal) -> NodeIndex {
    NodeIndex::new(2 * lit.var as usize + lit.negated as usize)
}

/// 2-SAT by strongly connected components of the implication graph.
pub fn sat2_solve(cnf: &CnfInstance) -> Result<Satisfiability> {
    if cnf.max_clause_len() > 2 {
        return Err(Error::InvalidInstance(format!(
            "2-SAT solver given a clause of length {}",
            cnf.max_clause_len()
        )));
    }
    let mut graph: DiGraph<(), ()> = DiGraph::with_capacity(2 * cnf.num_vars, 2 * cnf.clauses.len());
    for _ in 0..2 * cnf.num_vars {
        graph.add_node(());
    }
    for clause in &cnf.clauses {
        match clause.as_slice() {
            [] => return Ok(Satisfiability::Unsat),
            [a] => {
                graph.add_edge(node(a.negate()), node(*a), ());
            }
            [a, b] => {
                graph.add_edge(node(a.negate()), node(*b), ());
                graph.add_edge(node(b.negate()), node(*a), ());
            }
            _ => unreachable!(),
        }
    }
    let mut component = vec![usize::MAX; 2 * cnf.num_vars];
    for (id, scc) in tarjan_scc(&graph).into_iter().enumerate() {
        for v in scc {
            component[v.index()] = id;
        }
    }
    let contradiction = (0..cnf.num_vars).any(|v| component[2 * v] == component[2 * v + 1]);
    Ok(if contradiction {
        Satisfiability::Unsat
    } else {
        Satisfiability::Sat
    })
}

/// Satisfiability by trying all `2^N` assignments.
pub fn satd_brute(cnf: &CnfInstance) -> Result<Satisfiability> {
    check_bound("satd_brute", cnf.num_vars, DESK_BOUNDS.sat_brute_variables)?;
    let masks: Vec<(u32, u32)> = cnf
        .clauses
        .iter()
        .map(|clause| {
            clause.iter().fold((0, 0), |(pos, neg), lit| {
                if lit.negated {
                    (pos, neg | 1 << lit.var)
                } else {
                    (pos | 1 << lit.var, neg)
                }
            })
        })
        .collect();
    let found = (0u32..(1u32 << cnf.num_vars))
        .any(|assign| masks.iter().all(|&(pos, neg)| assign & pos != 0 || !assign & neg != 0));
    Ok(if found {
        Satisfiability::Sat
    } else {
        Satisfiability::Unsat
    })
}
