//! Perm: Alice holds a permutation δ of `[N]`, Bob wants bit `I` of the
//! concatenated encodings δ(0) δ(1) … δ(N-1).
//!
//! Vertex layout: `w_i = i`, `x_r = N + r`, Bob's `v = 2N`, `y = 2N + 1`.

use super::{is_power_of_two_at_least_two, BitEncoding, Generated, GeneratedInstance, ReductionTag};
use crate::error::{Error, Result};
use crate::stream::{EdgeUpdate, ReplayableStream, StreamModel, VertexId};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermInstance {
    delta: Vec<u32>,
    bit_index: usize,
}

impl PermInstance {
    pub fn new(delta: Vec<u32>, bit_index: usize) -> Result<Self> {
        let n = delta.len();
        if !is_power_of_two_at_least_two(n) {
            return Err(Error::InvalidInstance(format!(
                "permutation size {n} is not a power of two >= 2"
            )));
        }
        let mut seen = vec![false; n];
        for &d in &delta {
            if d as usize >= n || std::mem::replace(&mut seen[d as usize], true) {
                return Err(Error::InvalidInstance(format!("{delta:?} is not a permutation")));
            }
        }
        let width = n.trailing_zeros() as usize;
        if bit_index >= n * width {
            return Err(Error::InvalidInstance(format!(
                "bit index {bit_index} out of range for N={n}"
            )));
        }
        Ok(Self { delta, bit_index })
    }

    pub fn size(&self) -> usize {
        self.delta.len()
    }

    pub fn delta(&self) -> &[u32] {
        &self.delta
    }

    pub fn bit_index(&self) -> usize {
        self.bit_index
    }

    pub fn encoding(&self) -> BitEncoding {
        BitEncoding::for_universe(self.size())
    }

    /// `(j, ℓ)`: the queried bit is bit `ℓ` of δ(j).
    pub fn decompose(&self) -> (usize, u32) {
        let width = self.encoding().width() as usize;
        (self.bit_index / width, (self.bit_index % width) as u32)
    }

    pub fn bit(&self) -> bool {
        let (j, l) = self.decompose();
        self.encoding().bit(self.delta[j], l)
    }

    /// The whole string Bob indexes into.
    pub fn bit_string(&self) -> Vec<bool> {
        self.encoding().concat(&self.delta)
    }

    fn alice_edges(&self) -> Vec<EdgeUpdate> {
        let n = self.size() as VertexId;
        self.delta
            .iter()
            .enumerate()
            .map(|(i, &d)| EdgeUpdate::insert(i as VertexId, n + d))
            .collect()
    }

    /// `x_r` for every `r` whose bit `ℓ` is 0.
    fn zero_side(&self, l: u32) -> impl Iterator<Item = VertexId> + '_ {
        let n = self.size() as VertexId;
        let enc = self.encoding();
        (0..n).filter(move |&r| !enc.bit(r, l)).map(move |r| n + r)
    }
}

fn finish(
    n: usize,
    updates: Vec<EdgeUpdate>,
    tag: ReductionTag,
    truth: bool,
) -> Result<GeneratedInstance> {
    let stream = ReplayableStream::open(n, updates, StreamModel::InsertOnly)?;
    Ok(GeneratedInstance {
        tag,
        instance: Generated::Graph(stream),
        truth,
    })
}

/// Graph on `2N + 2` vertices with a path of length 5 iff the bit is 0.
pub fn gen_perm_5path(p: &PermInstance) -> Result<GeneratedInstance> {
    let n = p.size();
    let (v, y) = (2 * n as VertexId, 2 * n as VertexId + 1);
    let (j, l) = p.decompose();
    let mut updates = p.alice_edges();
    updates.push(EdgeUpdate::insert(v, j as VertexId));
    updates.extend(p.zero_side(l).map(|x| EdgeUpdate::insert(y, x)));
    finish(2 * n + 2, updates, ReductionTag::Perm5Path, p.bit())
}

fn cycle_gadget(p: &PermInstance, tag: ReductionTag) -> Result<GeneratedInstance> {
    let n = p.size();
    let v = 2 * n as VertexId;
    let (j, l) = p.decompose();
    let mut updates = p.alice_edges();
    updates.push(EdgeUpdate::insert(v, j as VertexId));
    updates.extend(p.zero_side(l).map(|x| EdgeUpdate::insert(v, x)));
    finish(2 * n + 1, updates, tag, p.bit())
}

/// Graph on `2N + 1` vertices that is a forest (treewidth ≤ 1) iff the bit is 1.
pub fn gen_perm_treewidth1(p: &PermInstance) -> Result<GeneratedInstance> {
    cycle_gadget(p, ReductionTag::PermTreewidth1)
}

/// Same graph as [`gen_perm_treewidth1`]; its minimum FVS is 0 iff the bit is 1.
pub fn gen_perm_fvs0(p: &PermInstance) -> Result<GeneratedInstance> {
    cycle_gadget(p, ReductionTag::PermFvs0)
}
