//! Hard distribution for estimating the minimum dominating set on graphs of
//! arboricity `β + 2`, sampled through random block partitions.
//!
//! For each `i ∈ [n]` a random `(2β, 16)`-partition `P_i` of `[n]` is drawn
//! (2β elements split into 16 blocks of `β/8`); `S_i` is the union of 8 of
//! its blocks. Bob's complement set `T̄` is one block of `P_{i*}`, and
//! `θ = 0` exactly when that block lies inside `S_{i*}`.
//!
//! Vertices `1..=n` become `0..n`, the extra vertex `n + 1` becomes `n`.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::StoredGraph;
use crate::stream::{EdgeUpdate, ReplayableStream, StreamModel, VertexId};

pub const DOMSET_EST_BLOCKS: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DomSetEstSample {
    n: usize,
    beta: usize,
    seed: u64,
    partitions: Vec<Vec<Vec<VertexId>>>,
    /// Indices into `partitions[i]` of the blocks making up `S_i`.
    chosen: Vec<Vec<usize>>,
    theta: u8,
    special: usize,
    complement_block: usize,
}

fn random_partition(n: usize, beta: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<VertexId>> {
    let picked = rand::seq::index::sample(rng, n, 2 * beta).into_vec();
    let mut picked: Vec<VertexId> = picked.into_iter().map(|x| x as VertexId).collect();
    picked.shuffle(rng);
    picked
        .chunks(beta / 8)
        .map(|c| {
            let mut block = c.to_vec();
            block.sort_unstable();
            block
        })
        .collect()
}

/// Draws one sample. `theta` forces Bob's case; `None` draws it uniformly.
pub fn sample_domset_est(
    n: usize,
    beta: usize,
    seed: u64,
    theta: Option<u8>,
) -> Result<DomSetEstSample> {
    if beta < 8 || beta % 8 != 0 {
        return Err(Error::InvalidParameter(format!(
            "beta={beta} must be a positive multiple of 8"
        )));
    }
    if 2 * beta > n {
        return Err(Error::InvalidParameter(format!(
            "2*beta={} exceeds n={n}",
            2 * beta
        )));
    }
    if matches!(theta, Some(t) if t > 1) {
        return Err(Error::InvalidParameter("theta must be 0 or 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut partitions = Vec::with_capacity(n);
    let mut chosen = Vec::with_capacity(n);
    for _ in 0..n {
        partitions.push(random_partition(n, beta, &mut rng));
        let mut halves = rand::seq::index::sample(&mut rng, DOMSET_EST_BLOCKS, DOMSET_EST_BLOCKS / 2)
            .into_vec();
        halves.sort_unstable();
        chosen.push(halves);
    }
    let theta = theta.unwrap_or_else(|| rng.gen_range(0..2));
    let special = rng.gen_range(0..n);
    let candidates: Vec<usize> = (0..DOMSET_EST_BLOCKS)
        .filter(|b| chosen[special].contains(b) == (theta == 0))
        .collect();
    let complement_block = *candidates.choose(&mut rng).expect("each half has 8 blocks");
    Ok(DomSetEstSample {
        n,
        beta,
        seed,
        partitions,
        chosen,
        theta,
        special,
        complement_block,
    })
}

impl DomSetEstSample {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn beta(&self) -> usize {
        self.beta
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn theta(&self) -> u8 {
        self.theta
    }

    /// `i*`, 0-based.
    pub fn special(&self) -> usize {
        self.special
    }

    /// The vertex standing for `n + 1`.
    pub fn extra_vertex(&self) -> VertexId {
        self.n as VertexId
    }

    pub fn partition(&self, i: usize) -> &[Vec<VertexId>] {
        &self.partitions[i]
    }

    /// `S_i`, sorted.
    pub fn set(&self, i: usize) -> Vec<VertexId> {
        let mut s: Vec<VertexId> = self.chosen[i]
            .iter()
            .flat_map(|&b| self.partitions[i][b].iter().copied())
            .collect();
        s.sort_unstable();
        s
    }

    /// `S'_i = {i} ∪ S_i`, sorted.
    pub fn closed_set(&self, i: usize) -> Vec<VertexId> {
        let mut s = self.set(i);
        if let Err(pos) = s.binary_search(&(i as VertexId)) {
            s.insert(pos, i as VertexId);
        }
        s
    }

    /// `T̄`, one block of `P_{i*}`.
    pub fn complement(&self) -> &[VertexId] {
        &self.partitions[self.special][self.complement_block]
    }

    /// `T = [n] \ T̄`.
    pub fn bob_set(&self) -> Vec<VertexId> {
        let bar = self.complement();
        (0..self.n as VertexId).filter(|x| !bar.contains(x)).collect()
    }

    /// Dominating set of size 2 when `θ = 0`: `{i*, n+1}`.
    pub fn witness(&self) -> [VertexId; 2] {
        [self.special as VertexId, self.extra_vertex()]
    }

    /// `(β+1)n + 1 + n - β/8`.
    pub fn edge_bound(&self) -> usize {
        (self.beta + 1) * self.n + 1 + self.n - self.beta / 8
    }

    /// Edges in vertex-arrival order: all new edges of vertex 0, then 1, …,
    /// then those of the extra vertex.
    pub fn arrival_edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut seen = std::collections::HashSet::new();
        let mut out = Vec::new();
        for i in 0..self.n {
            let iv = i as VertexId;
            for s in self.set(i) {
                if s != iv && seen.insert((iv.min(s), iv.max(s))) {
                    out.push((iv, s));
                }
            }
        }
        let extra = self.extra_vertex();
        out.extend(self.bob_set().into_iter().map(|t| (extra, t)));
        out
    }

    pub fn graph(&self) -> StoredGraph {
        let mut g = StoredGraph::new(self.n + 1);
        for (u, v) in self.arrival_edges() {
            g.insert_edge_unchecked(u, v);
        }
        g
    }

    pub fn stream(&self) -> ReplayableStream {
        let updates = self
            .arrival_edges()
            .into_iter()
            .map(|(u, v)| EdgeUpdate::insert(u, v))
            .collect();
        ReplayableStream::open(self.n + 1, updates, StreamModel::InsertOnly)
            .expect("arrival edges are distinct")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_parameters() {
        assert!(sample_domset_est(64, 12, 0, None).is_err());
        assert!(sample_domset_est(64, 0, 0, None).is_err());
        assert!(sample_domset_est(15, 8, 0, None).is_err());
        assert!(sample_domset_est(16, 8, 0, Some(2)).is_err());
    }

    #[test]
    fn structure_holds() {
        for seed in 0..20 {
            let s = sample_domset_est(64, 32, seed, None).unwrap();
            assert_eq!(s.complement().len(), 4);
            for i in 0..64 {
                assert_eq!(s.set(i).len(), 32);
                let closed = s.closed_set(i).len();
                assert!(closed == 32 || closed == 33);
            }
            let inside = s.complement().iter().all(|x| s.set(s.special()).contains(x));
            let outside = s.complement().iter().all(|x| !s.set(s.special()).contains(x));
            assert!(if s.theta() == 0 { inside } else { outside });
            assert!(s.graph().edge_count() <= s.edge_bound());
        }
    }

    #[test]
    fn theta_zero_witness_dominates() {
        for seed in 0..10 {
            let s = sample_domset_est(16, 8, seed, Some(0)).unwrap();
            assert!(s.graph().is_dominating_set(&s.witness()));
        }
    }

    #[test]
    fn seeded_samples_repeat() {
        assert_eq!(
            sample_domset_est(32, 8, 9, None).unwrap(),
            sample_domset_est(32, 8, 9, None).unwrap()
        );
        assert_eq!(
            sample_domset_est(32, 8, 9, None).unwrap().stream().net_graph(),
            sample_domset_est(32, 8, 9, None).unwrap().graph()
        );
    }
}
