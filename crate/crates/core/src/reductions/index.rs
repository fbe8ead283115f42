//! Index: Alice holds a bit string `B` of perfect-square length `r²`, Bob
//! wants `B[I*]`. Position `I` maps to the grid cell `(I / r, I % r)`.
//!
//! Graph layout: `y_a = a`, `w_b = r + b`, then Bob's gadget vertices.
//! CNF layout: `x_i` is variable `i`, `y_j` is variable `r + j`.

use super::{exact_sqrt, Generated, GeneratedInstance, ReductionTag};
use crate::error::{Error, Result};
use crate::oracles::{CnfInstance, Literal};
use crate::stream::{EdgeUpdate, ReplayableStream, StreamModel, VertexId};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexInstance {
    bits: Vec<bool>,
    index: usize,
    side: usize,
}

impl IndexInstance {
    pub fn new(bits: Vec<bool>, index: usize) -> Result<Self> {
        let side = exact_sqrt(bits.len())
            .filter(|&r| r >= 1)
            .ok_or_else(|| {
                Error::InvalidInstance(format!("length {} is not a positive square", bits.len()))
            })?;
        if index >= bits.len() {
            return Err(Error::InvalidInstance(format!(
                "index {index} out of range for {} bits",
                bits.len()
            )));
        }
        Ok(Self { bits, index, side })
    }

    /// Instance whose bits are the low `len` bits of `mask`, LSB = position 0.
    pub fn from_mask(mask: u64, len: usize, index: usize) -> Result<Self> {
        Self::new((0..len).map(|i| (mask >> i) & 1 == 1).collect(), index)
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn side(&self) -> usize {
        self.side
    }

    pub fn bit(&self) -> bool {
        self.bits[self.index]
    }

    pub fn cell(&self, position: usize) -> (usize, usize) {
        (position / self.side, position % self.side)
    }

    fn alice_edges(&self) -> Vec<EdgeUpdate> {
        let r = self.side as VertexId;
        self.bits
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(pos, _)| {
                let (a, b) = self.cell(pos);
                EdgeUpdate::insert(a as VertexId, r + b as VertexId)
            })
            .collect()
    }
}

fn graph_instance(
    n: usize,
    updates: Vec<EdgeUpdate>,
    tag: ReductionTag,
    truth: bool,
) -> Result<GeneratedInstance> {
    Ok(GeneratedInstance {
        tag,
        instance: Generated::Graph(ReplayableStream::open(n, updates, StreamModel::InsertOnly)?),
        truth,
    })
}

/// Graph on `2r + 4` vertices with a dominating set of size 3 iff `B[I*] = 1`.
pub fn gen_index_domset3(x: &IndexInstance) -> Result<GeneratedInstance> {
    let r = x.side as VertexId;
    let (x1, x2, z1, z2) = (2 * r, 2 * r + 1, 2 * r + 2, 2 * r + 3);
    let (alpha, beta) = x.cell(x.index);
    let mut updates = x.alice_edges();
    updates.push(EdgeUpdate::insert(x1, x2));
    updates.push(EdgeUpdate::insert(z1, z2));
    updates.extend(
        (0..r)
            .filter(|&a| a as usize != alpha)
            .map(|a| EdgeUpdate::insert(x1, a)),
    );
    updates.extend(
        (0..r)
            .filter(|&b| b as usize != beta)
            .map(|b| EdgeUpdate::insert(z1, r + b)),
    );
    graph_instance(2 * x.side + 4, updates, ReductionTag::IndexDomset3, x.bit())
}

/// Graph on `2r + 1` vertices with girth exactly 3 iff `B[I*] = 1`.
pub fn gen_index_girth3(x: &IndexInstance) -> Result<GeneratedInstance> {
    let r = x.side as VertexId;
    let z = 2 * r;
    let (alpha, beta) = x.cell(x.index);
    let mut updates = x.alice_edges();
    updates.push(EdgeUpdate::insert(z, alpha as VertexId));
    updates.push(EdgeUpdate::insert(z, r + beta as VertexId));
    graph_instance(2 * x.side + 1, updates, ReductionTag::IndexGirth3, x.bit())
}

/// 2-CNF over `2r` variables, satisfiable iff `B[I*] = 0`.
pub fn gen_index_2sat(x: &IndexInstance) -> Result<GeneratedInstance> {
    let r = x.side as u32;
    let mut cnf = CnfInstance::new(2 * x.side);
    for (pos, &b) in x.bits.iter().enumerate() {
        let (i, j) = x.cell(pos);
        let xi = Literal::pos(i as u32);
        cnf.push_clause(vec![if b { xi.negate() } else { xi }, Literal::pos(r + j as u32)])?;
    }
    let (i, j) = x.cell(x.index);
    cnf.push_clause(vec![Literal::neg(r + j as u32)])?;
    cnf.push_clause(vec![Literal::pos(i as u32), Literal::pos(r + j as u32)])?;
    Ok(GeneratedInstance {
        tag: ReductionTag::Index2Sat,
        instance: Generated::Cnf(cnf),
        truth: x.bit(),
    })
}
