//! Permutation classes and statistics.
//!
//! Indices are 1-based throughout, matching the usual conventions: the
//! parity of an index is the parity of its 1-based position.  All
//! statistics are computed literally from their defining quantifications;
//! there are no clever data structures.

mod enumerate;
mod profile;

pub use enumerate::{enumerate, for_each, PermClass};
pub use profile::{profile, summarize, CycleClass, IndexProfile, Parity, RecordClass, StatSummary};

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum PermError {
    #[error("index {0} out of range 1..={1}")]
    IndexError(usize, usize),
    #[error("word is not a permutation of 1..=N")]
    NotAPermutation,
}

/// A permutation of `[N]` in one-line notation with a cached inverse.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    word: Vec<usize>,
    inv: Vec<usize>,
}

impl Permutation {
    /// Builds from the one-line word `sigma(1), ..., sigma(N)`.
    pub fn from_word(word: Vec<usize>) -> Result<Self, PermError> {
        let n = word.len();
        let mut inv = vec![0usize; n];
        let mut seen = vec![false; n];
        for (i, &v) in word.iter().enumerate() {
            if v < 1 || v > n || seen[v - 1] {
                return Err(PermError::NotAPermutation);
            }
            seen[v - 1] = true;
            inv[v - 1] = i + 1;
        }
        Ok(Permutation { word, inv })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            word: (1..=n).collect(),
            inv: (1..=n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// `sigma(i)`, 1-based.
    pub fn apply(&self, i: usize) -> usize {
        self.word[i - 1]
    }

    /// `sigma^{-1}(i)`, 1-based.
    pub fn preimage(&self, i: usize) -> usize {
        self.inv[i - 1]
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// Number of cycles.
    pub fn cycle_count(&self) -> usize {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut cyc = 0;
        for start in 1..=n {
            if seen[start - 1] {
                continue;
            }
            cyc += 1;
            let mut j = start;
            while !seen[j - 1] {
                seen[j - 1] = true;
                j = self.apply(j);
            }
        }
        cyc
    }

    /// Conjugation by the reversal `i -> N+1-i`.
    pub fn reversal(&self) -> Permutation {
        let n = self.len();
        let mut word = vec![0usize; n];
        for i in 1..=n {
            word[n - i] = n + 1 - self.apply(i);
        }
        Permutation::from_word(word).expect("reversal of a permutation")
    }

    /// Number of inversions, by direct pair count.
    pub fn inversions(&self) -> usize {
        let n = self.len();
        let mut inv = 0;
        for i in 1..=n {
            for j in (i + 1)..=n {
                if self.apply(i) > self.apply(j) {
                    inv += 1;
                }
            }
        }
        inv
    }
}
