//! Word-level accounting of retained algorithm state.
//!
//! One word holds a vertex id, a counter, or a flag/bit-string of at most
//! `ceil(log2 n)` bits. An edge costs two words.

use crate::error::{Error, Result};

pub const VERTEX_WORDS: u64 = 1;
pub const COUNTER_WORDS: u64 = 1;
pub const EDGE_WORDS: u64 = 2;

/// Bits that fit in one word for a graph on `n` vertices (at least one).
pub fn word_bits(n: usize) -> u64 {
    let n = n.max(2) as u64;
    (64 - (n - 1).leading_zeros()) as u64
}

/// Words needed to hold a string of `bits` bits on an `n`-vertex graph.
pub fn bits_to_words(bits: u64, n: usize) -> u64 {
    bits.div_ceil(word_bits(n))
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SpaceLedger {
    current: u64,
    peak: u64,
}

impl SpaceLedger {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn current_words(&self) -> u64 {
        self.current
    }

    pub fn peak_words(&self) -> u64 {
        self.peak
    }

    /// Applies a signed change to the retained word count.
    pub fn charge(&mut self, delta_words: i64) -> Result<()> {
        if delta_words >= 0 {
            self.acquire(delta_words as u64);
            Ok(())
        } else {
            self.release(delta_words.unsigned_abs())
        }
    }

    pub fn acquire(&mut self, words: u64) {
        self.current += words;
        self.peak = self.peak.max(self.current);
    }

    pub fn release(&mut self, words: u64) -> Result<()> {
        if words > self.current {
            return Err(Error::LedgerUnderflow {
                current: self.current,
                requested: words,
            });
        }
        self.current -= words;
        Ok(())
    }

    /// Releases everything still held, keeping the peak.
    pub fn release_all(&mut self) {
        self.current = 0;
    }
}
