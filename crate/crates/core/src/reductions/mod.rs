//! Hard-instance generators for the one-pass lower bounds.
//!
//! Every generator turns a communication-problem input (Alice's data plus
//! Bob's query) into a stream or CNF whose exact answer reveals Bob's bit.
//! [`extract_bit_via_solver`] is Bob's decoding step, done with the oracles.
//!
//! Conventions, all 0-based: a value `v ∈ [N]` is written as `v` in
//! `log N` bits, most significant first; bit index `I` splits row-major as
//! `(I / log N, I % log N)`; grid bijections are row-major.

mod domset_est;
mod index;
mod perm;

use std::fmt;
use std::str::FromStr;

pub use domset_est::{sample_domset_est, DomSetEstSample, DOMSET_EST_BLOCKS};
pub use index::{gen_index_2sat, gen_index_domset3, gen_index_girth3, IndexInstance};
pub use perm::{gen_perm_5path, gen_perm_fvs0, gen_perm_treewidth1, PermInstance};

use crate::error::{Error, Result};
use crate::oracles::{self, CnfInstance, Satisfiability};
use crate::stream::ReplayableStream;

/// Fixed-width binary encoding of values in `[0, 2^width)`, MSB first.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BitEncoding {
    width: u32,
}

impl BitEncoding {
    pub fn new(width: u32) -> Self {
        Self { width }
    }

    /// Encoding wide enough for `[0, n)`, `n` a power of two.
    pub fn for_universe(n: usize) -> Self {
        Self::new(n.trailing_zeros())
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    /// Bit `position` of `value`, counting from the most significant.
    pub fn bit(&self, value: u32, position: u32) -> bool {
        debug_assert!(position < self.width);
        (value >> (self.width - 1 - position)) & 1 == 1
    }

    pub fn encode(&self, value: u32) -> Vec<bool> {
        (0..self.width).map(|p| self.bit(value, p)).collect()
    }

    pub fn decode(&self, bits: &[bool]) -> u32 {
        bits.iter().fold(0, |acc, &b| (acc << 1) | b as u32)
    }

    /// Concatenated encodings of `values`.
    pub fn concat(&self, values: &[u32]) -> Vec<bool> {
        values.iter().flat_map(|&v| self.encode(v)).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ReductionTag {
    Perm5Path,
    PermTreewidth1,
    PermFvs0,
    IndexDomset3,
    IndexGirth3,
    Index2Sat,
    DomsetEst,
}

impl ReductionTag {
    pub const ALL: [ReductionTag; 7] = [
        ReductionTag::Perm5Path,
        ReductionTag::PermTreewidth1,
        ReductionTag::PermFvs0,
        ReductionTag::IndexDomset3,
        ReductionTag::IndexGirth3,
        ReductionTag::Index2Sat,
        ReductionTag::DomsetEst,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ReductionTag::Perm5Path => "perm-5path",
            ReductionTag::PermTreewidth1 => "perm-treewidth1",
            ReductionTag::PermFvs0 => "perm-fvs0",
            ReductionTag::IndexDomset3 => "index-domset3",
            ReductionTag::IndexGirth3 => "index-girth3",
            ReductionTag::Index2Sat => "index-2sat",
            ReductionTag::DomsetEst => "domset-est",
        }
    }
}

impl fmt::Display for ReductionTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ReductionTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown reduction '{s}'")))
    }
}

/// A generated instance: a graph stream or a CNF formula.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Generated {
    Graph(ReplayableStream),
    Cnf(CnfInstance),
}

/// Generated instance together with the bit Bob is after.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratedInstance {
    pub tag: ReductionTag,
    pub instance: Generated,
    pub truth: bool,
}

/// Decodes Bob's bit from an oracle answer on the generated instance.
pub fn extract_bit_via_solver(instance: &Generated, tag: ReductionTag) -> Result<bool> {
    let mismatch = || Error::InvalidInstance(format!("wrong instance kind for {tag}"));
    match (tag, instance) {
        (ReductionTag::Index2Sat, Generated::Cnf(cnf)) => {
            Ok(oracles::sat2_solve(cnf)? == Satisfiability::Unsat)
        }
        (ReductionTag::Index2Sat | ReductionTag::DomsetEst, _) => Err(mismatch()),
        (_, Generated::Cnf(_)) => Err(mismatch()),
        (tag, Generated::Graph(stream)) => {
            let g = stream.net_graph();
            Ok(match tag {
                ReductionTag::Perm5Path => oracles::longest_path_length(&g)? < 5,
                ReductionTag::PermTreewidth1 => oracles::treewidth_exact(&g)? <= 1,
                ReductionTag::PermFvs0 => oracles::fvs_min(&g)?.0 == 0,
                ReductionTag::IndexDomset3 => oracles::domset_min(&g)?.0 <= 3,
                ReductionTag::IndexGirth3 => oracles::girth(&g)? == Some(3),
                ReductionTag::Index2Sat | ReductionTag::DomsetEst => unreachable!(),
            })
        }
    }
}

fn is_power_of_two_at_least_two(n: usize) -> bool {
    n >= 2 && n.is_power_of_two()
}

fn exact_sqrt(n: usize) -> Option<usize> {
    let r = (n as f64).sqrt().round() as usize;
    (r * r == n).then_some(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn encoding_is_msb_first_and_bijective() {
        let enc = BitEncoding::for_universe(8);
        assert_eq!(enc.width(), 3);
        assert_eq!(enc.encode(1), vec![false, false, true]);
        assert_eq!(enc.encode(6), vec![true, true, false]);
        for v in 0..8 {
            assert_eq!(enc.decode(&enc.encode(v)), v);
        }
        assert_eq!(enc.concat(&[1, 0]), vec![false, false, true, false, false, false]);
    }

    #[test]
    fn tags_round_trip() {
        for tag in ReductionTag::ALL {
            assert_eq!(tag.name().parse::<ReductionTag>().unwrap(), tag);
        }
        assert!("perm".parse::<ReductionTag>().is_err());
    }

    #[test]
    fn wrong_kind_is_rejected() {
        let g = Generated::Graph(crate::StoredGraph::path(3).to_stream());
        assert!(extract_bit_via_solver(&g, ReductionTag::Index2Sat).is_err());
        let c = Generated::Cnf(CnfInstance::new(2));
        assert!(extract_bit_via_solver(&c, ReductionTag::IndexGirth3).is_err());
    }
}
