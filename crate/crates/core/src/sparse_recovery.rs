//! M-sparse recovery over a universe `[0, U)`.
//!
//! The sketch is an invertible cell table: `ROWS` independent rows of
//! `2M + 8` cells. Each cell keeps the net count, the exact sum of
//! `count * element` and a wrapping sum of `count * fingerprint(element)`.
//! Recovery peels cells that hold a single element, then checks the peeled
//! multiset against three global registers. Anything left over, any failed
//! check, or more than `M` distinct survivors yields [`Recovery::Overflow`].
//!
//! With `ROWS = 6` the dominant decoding failure (two survivors colliding in
//! every row) has probability below `M^2 / (2M+8)^6`, under `3e-8` for all
//! `M >= 1`. A false accept additionally requires a 64-bit fingerprint
//! collision.

use std::collections::BTreeMap;

use crate::error::{Error, Result};

pub const ROWS: usize = 6;
/// Words per cell: count (1), key sum (2), fingerprint sum (1).
pub const CELL_WORDS: u64 = 4;
/// Global registers: net count (1), key total (2), fingerprint total (1),
/// capacity (1) and one hash seed per row.
pub const REGISTER_WORDS: u64 = 5 + ROWS as u64;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
struct Cell {
    count: i64,
    key_sum: i128,
    fp_sum: u64,
}

impl Cell {
    fn apply(&mut self, x: u64, fp: u64, delta: i64) {
        self.count += delta;
        self.key_sum += x as i128 * delta as i128;
        self.fp_sum = self.fp_sum.wrapping_add(fp.wrapping_mul(delta as u64));
    }

    fn is_zero(&self) -> bool {
        self.count == 0 && self.key_sum == 0 && self.fp_sum == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Recovery {
    /// Exact net multiset: element -> nonzero net multiplicity.
    Recovered(BTreeMap<u64, i64>),
    Overflow,
}

#[derive(Debug, Clone)]
pub struct SparseRecoverySketch {
    capacity: usize,
    universe: u64,
    width: usize,
    seeds: [u64; ROWS],
    fp_seed: u64,
    cells: Vec<Cell>,
    net_count: i64,
    key_total: i128,
    fp_total: u64,
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

impl SparseRecoverySketch {
    /// Sketch able to recover up to `capacity` distinct survivors from `[0, universe)`.
    pub fn new(capacity: usize, universe: u64, seed: u64) -> Self {
        assert!(capacity >= 1, "sparse recovery capacity must be at least 1");
        let width = 2 * capacity + 8;
        let mut state = seed;
        let mut next = || {
            state = splitmix64(state);
            state
        };
        let seeds = std::array::from_fn(|_| next());
        let fp_seed = next();
        Self {
            capacity,
            universe,
            width,
            seeds,
            fp_seed,
            cells: vec![Cell::default(); ROWS * width],
            net_count: 0,
            key_total: 0,
            fp_total: 0,
        }
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    pub fn universe(&self) -> u64 {
        self.universe
    }

    /// Exact sum of all net multiplicities.
    pub fn net_count(&self) -> i64 {
        self.net_count
    }

    /// Words of retained state, as charged to a ledger.
    pub fn words(&self) -> u64 {
        self.cells.len() as u64 * CELL_WORDS + REGISTER_WORDS
    }

    /// Cell of `x` in `row`: an independent hash per row, reduced to
    /// `[0, width)` by multiply-shift on its top 32 bits.
    fn column(&self, row: usize, x: u64) -> usize {
        let h = splitmix64(x ^ self.seeds[row]) >> 32;
        row * self.width + ((h * self.width as u64) >> 32) as usize
    }

    fn columns(&self, x: u64) -> [usize; ROWS] {
        std::array::from_fn(|row| self.column(row, x))
    }

    fn fingerprint(&self, x: u64) -> u64 {
        splitmix64(x.wrapping_mul(0xd6e8_feb8_6659_fd93) ^ self.fp_seed)
    }

    fn update(&mut self, x: u64, delta: i64) -> Result<()> {
        if x >= self.universe {
            return Err(Error::OutOfUniverse {
                element: x,
                universe: self.universe,
            });
        }
        let fp = self.fingerprint(x);
        for col in self.columns(x) {
            self.cells[col].apply(x, fp, delta);
        }
        self.net_count += delta;
        self.key_total += x as i128 * delta as i128;
        self.fp_total = self.fp_total.wrapping_add(fp.wrapping_mul(delta as u64));
        Ok(())
    }

    pub fn insert(&mut self, x: u64) -> Result<()> {
        self.update(x, 1)
    }

    pub fn delete(&mut self, x: u64) -> Result<()> {
        self.update(x, -1)
    }

    /// Element held alone by cell `idx`, with its multiplicity.
    fn pure_element(&self, cells: &[Cell], idx: usize) -> Option<(u64, i64)> {
        let cell = cells[idx];
        let x = match cell.count {
            0 => return None,
            1 => cell.key_sum,
            -1 => -cell.key_sum,
            c if cell.key_sum % c as i128 == 0 => cell.key_sum / c as i128,
            _ => return None,
        };
        if x < 0 || x >= self.universe as i128 {
            return None;
        }
        let x = x as u64;
        let fp_ok = cell.fp_sum == self.fingerprint(x).wrapping_mul(cell.count as u64);
        (fp_ok && self.column(idx / self.width, x) == idx).then_some((x, cell.count))
    }

    pub fn recover(&self) -> Recovery {
        self.clone().into_recovery()
    }

    /// [`recover`](Self::recover) without copying the table.
    pub fn into_recovery(mut self) -> Recovery {
        let mut cells = std::mem::take(&mut self.cells);
        let mut found: BTreeMap<u64, i64> = BTreeMap::new();
        let mut stack: Vec<usize> = (0..cells.len()).filter(|&i| !cells[i].is_zero()).collect();
        while let Some(idx) = stack.pop() {
            let Some((x, count)) = self.pure_element(&cells, idx) else {
                continue;
            };
            let fp = self.fingerprint(x);
            for col in self.columns(x) {
                cells[col].apply(x, fp, -count);
                stack.push(col);
            }
            let entry = found.entry(x).or_insert(0);
            *entry += count;
            if *entry == 0 {
                found.remove(&x);
            }
            if found.len() > self.capacity {
                return Recovery::Overflow;
            }
        }
        if !cells.iter().all(Cell::is_zero) {
            return Recovery::Overflow;
        }
        let (mut net, mut keys, mut fps) = (0i64, 0i128, 0u64);
        for (&x, &c) in &found {
            net += c;
            keys += x as i128 * c as i128;
            fps = fps.wrapping_add(self.fingerprint(x).wrapping_mul(c as u64));
        }
        if net != self.net_count || keys != self.key_total || fps != self.fp_total {
            return Recovery::Overflow;
        }
        Recovery::Recovered(found)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn recovered(pairs: &[(u64, i64)]) -> Recovery {
        Recovery::Recovered(pairs.iter().copied().collect())
    }

    #[test]
    fn empty_sketch_recovers_nothing() {
        let s = SparseRecoverySketch::new(4, 100, 1);
        assert_eq!(s.recover(), recovered(&[]));
    }

    #[test]
    fn multiset_semantics() {
        let mut s = SparseRecoverySketch::new(4, 100, 7);
        s.insert(3).unwrap();
        assert_eq!(s.recover(), recovered(&[(3, 1)]));
        s.insert(3).unwrap();
        assert_eq!(s.recover(), recovered(&[(3, 2)]));
        s.delete(3).unwrap();
        s.delete(3).unwrap();
        assert_eq!(s.recover(), recovered(&[]));
        assert_eq!(s.net_count(), 0);
    }

    #[test]
    fn delete_mirrors_insert() {
        let mut s = SparseRecoverySketch::new(4, 100, 7);
        s.delete(3).unwrap();
        assert_eq!(s.recover(), recovered(&[(3, -1)]));
        s.delete(3).unwrap();
        assert_eq!(s.recover(), recovered(&[(3, -2)]));
        s.insert(3).unwrap();
        s.insert(3).unwrap();
        assert_eq!(s.recover(), recovered(&[]));
    }

    #[test]
    fn recovers_after_deletion_within_capacity() {
        let mut s = SparseRecoverySketch::new(2, 10, 3);
        for x in [3, 7, 5] {
            s.insert(x).unwrap();
        }
        s.delete(3).unwrap();
        assert_eq!(s.recover(), recovered(&[(5, 1), (7, 1)]));
    }

    #[test]
    fn too_many_survivors_overflow() {
        let mut s = SparseRecoverySketch::new(2, 10, 3);
        for x in [1, 2, 3] {
            s.insert(x).unwrap();
        }
        assert_eq!(s.recover(), Recovery::Overflow);
    }

    #[test]
    fn rejects_out_of_universe() {
        let mut s = SparseRecoverySketch::new(2, 10, 3);
        assert_eq!(
            s.insert(10),
            Err(Error::OutOfUniverse {
                element: 10,
                universe: 10
            })
        );
        assert!(s.delete(11).is_err());
        assert_eq!(s.net_count(), 0);
    }

    #[test]
    fn words_scale_linearly_in_capacity() {
        for m in [1usize, 4, 16, 64, 1024] {
            let s = SparseRecoverySketch::new(m, u64::MAX, 0);
            assert!(s.words() <= 48 * m as u64 + 250);
        }
    }
}
