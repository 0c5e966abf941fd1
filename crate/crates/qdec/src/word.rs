//! Binary words, run-block factorization and the membership predicates.
//!
//! Words are stored as packed 64-bit blocks with an explicit length.
//! Position `i` of the text form (1-based, leftmost first) is internal
//! index `i - 1`.

use std::fmt;
use std::str::FromStr;

use crate::Error;

/// The parameter `q >= 1` of the q-decreasing property.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Q(u32);

impl Q {
    pub fn new(q: u32) -> Result<Q, Error> {
        if q < 1 {
            return Err(Error::InvalidQ(q));
        }
        Ok(Q(q))
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

impl fmt::Display for Q {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A finite binary word. The empty word is a valid value.
///
/// Bit `i` (0-based from the left) lives in block `i / 64` at shift
/// `63 - i % 64`, so comparing the block vectors of two same-length
/// words compares them lexicographically. Unused low bits of the last
/// block are kept at zero.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    len: usize,
    bits: Vec<u64>,
}

impl Word {
    pub fn empty() -> Word {
        Word {
            len: 0,
            bits: Vec::new(),
        }
    }

    /// The word `0^n`.
    pub fn zeros(n: usize) -> Word {
        Word {
            len: n,
            bits: vec![0; n.div_ceil(64)],
        }
    }

    /// The word `1^n`.
    pub fn ones(n: usize) -> Word {
        let mut w = Word::zeros(n);
        for i in 0..n {
            w.set(i, true);
        }
        w
    }

    pub fn from_bits<I: IntoIterator<Item = bool>>(iter: I) -> Word {
        let mut w = Word::empty();
        for b in iter {
            w.push(b);
        }
        w
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(
            i < self.len,
            "bit index {} out of range for word of length {}",
            i,
            self.len
        );
        self.bits[i / 64] >> (63 - i % 64) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(
            i < self.len,
            "bit index {} out of range for word of length {}",
            i,
            self.len
        );
        let mask = 1u64 << (63 - i % 64);
        if value {
            self.bits[i / 64] |= mask;
        } else {
            self.bits[i / 64] &= !mask;
        }
    }

    pub fn flip(&mut self, i: usize) {
        let b = self.get(i);
        self.set(i, !b);
    }

    pub fn push(&mut self, value: bool) {
        if self.len.is_multiple_of(64) {
            self.bits.push(0);
        }
        self.len += 1;
        self.set(self.len - 1, value);
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    pub fn count_ones(&self) -> usize {
        self.bits.iter().map(|b| b.count_ones() as usize).sum()
    }

    /// Number of positions at which two same-length words differ.
    pub fn hamming(&self, other: &Word) -> Result<usize, Error> {
        if self.len != other.len {
            return Err(Error::LengthMismatch(self.len, other.len));
        }
        Ok(self
            .bits
            .iter()
            .zip(&other.bits)
            .map(|(a, b)| (a ^ b).count_ones() as usize)
            .sum())
    }

    pub fn reversed(&self) -> Word {
        Word::from_bits((0..self.len).rev().map(|i| self.get(i)))
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut w = self.clone();
        for b in other.iter() {
            w.push(b);
        }
        w
    }

    /// The length-`len` prefix of `self` repeated indefinitely (the
    /// `v^*` notation). `self` must be nonempty when `len > 0`.
    pub fn repeat_trim(&self, len: usize) -> Word {
        if len == 0 {
            return Word::empty();
        }
        assert!(
            !self.is_empty(),
            "cannot repeat the empty word to a positive length"
        );
        Word::from_bits((0..len).map(|i| self.get(i % self.len)))
    }

    /// Length of the maximal prefix of ones.
    pub fn leading_ones(&self) -> usize {
        self.iter().take_while(|&b| b).count()
    }

    /// Length of the maximal suffix of ones.
    pub fn trailing_ones(&self) -> usize {
        (0..self.len).rev().take_while(|&i| self.get(i)).count()
    }

    /// The prefix of the first `n` bits.
    pub fn prefix(&self, n: usize) -> Word {
        assert!(n <= self.len);
        Word::from_bits((0..n).map(|i| self.get(i)))
    }

    /// Maximal `0^a 1^b` factorization, left to right. Only the first
    /// block may have `a = 0` and only the last may have `b = 0`.
    pub fn decompose_runs(&self) -> Vec<RunBlock> {
        let mut blocks = Vec::new();
        let mut i = 0;
        while i < self.len {
            let mut zeros = 0;
            while i < self.len && !self.get(i) {
                zeros += 1;
                i += 1;
            }
            let mut ones = 0;
            while i < self.len && self.get(i) {
                ones += 1;
                i += 1;
            }
            blocks.push(RunBlock { zeros, ones });
        }
        blocks
    }

    /// True iff every maximal factor `0^a 1^b` with `a > 0` satisfies
    /// `q * a > b`. A leading 1-run (the block with `a = 0`) is
    /// unconstrained.
    pub fn is_q_decreasing(&self, q: Q) -> bool {
        self.decompose_runs()
            .iter()
            .all(|b| b.zeros == 0 || q.get() as usize * b.zeros > b.ones)
    }

    /// True iff `1^k` does not occur as a factor.
    pub fn avoids_ones_run(&self, k: usize) -> bool {
        assert!(k >= 1);
        let mut run = 0;
        for b in self.iter() {
            if b {
                run += 1;
                if run >= k {
                    return false;
                }
            } else {
                run = 0;
            }
        }
        true
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.iter() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({})", self)
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word, Error> {
        let mut w = Word::empty();
        for c in s.chars() {
            match c {
                '0' => w.push(false),
                '1' => w.push(true),
                other => return Err(Error::Parse(other)),
            }
        }
        Ok(w)
    }
}

/// One maximal factor `0^zeros 1^ones` of a word.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunBlock {
    pub zeros: usize,
    pub ones: usize,
}

/// The word `0(001)^*` of length `n`, first element of the 1-Gray code
/// of words starting with 0.
pub fn zero_then_001_star(n: usize) -> Word {
    if n == 0 {
        return Word::empty();
    }
    let w = Word::zeros(1);
    let tail: Word = "001".parse().unwrap();
    w.concat(&tail.repeat_trim(n - 1))
}

/// The word `(001)^*` of length `n`.
pub fn pattern_001_star(n: usize) -> Word {
    let v: Word = "001".parse().unwrap();
    v.repeat_trim(n)
}

/// `0^a 1^b` as a word.
pub fn zeros_ones(a: usize, b: usize) -> Word {
    Word::zeros(a).concat(&Word::ones(b))
}
