//! Permutations in one-line notation.
//!
//! Values and positions are 1-indexed throughout, matching the one-line
//! words used for input and output. Composition follows `(u * v)(i) = u(v(i))`,
//! so `w * s_i` swaps the entries of `w` in positions `i` and `i + 1`.

mod classify;
mod lowering;
mod pattern;
mod separable;

pub use classify::{classify, ClassLabel};
pub use lowering::{factorize, q_set, Factorization, LoweringPermutation};
pub use pattern::{
    avoids_all, avoids_thirteen, contains_pattern, find_pattern, first_violation, patterns,
    PatternOccurrence, THIRTEEN_PATTERNS,
};
pub use separable::{separable_decomposition, top_split, SeparableTree, Split};

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("permutation must have at least one entry")]
    Empty,
    #[error("{word:?} is not a permutation of 1..={n}")]
    NotBijective { word: Vec<usize>, n: usize },
    #[error("code entry c_{index} = {value} exceeds n - i = {bound}")]
    CodeOutOfRange {
        index: usize,
        value: usize,
        bound: usize,
    },
    #[error("{word} contains the pattern {pattern} at positions {positions:?}")]
    PatternViolation {
        word: Permutation,
        pattern: Permutation,
        positions: Vec<usize>,
    },
    #[error("{0} is not a lowering permutation")]
    NotLowering(Permutation),
    #[error("cannot compose permutations of sizes {0} and {1}")]
    SizeMismatch(usize, usize),
    #[error("cannot parse permutation from {0:?}")]
    Parse(String),
}

impl PermError {
    pub(crate) fn violation(word: &Permutation, occ: PatternOccurrence) -> Self {
        PermError::PatternViolation {
            word: word.clone(),
            pattern: occ.pattern,
            positions: occ.positions,
        }
    }
}

/// A permutation of `{1, ..., n}` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    word: Vec<usize>,
}

impl Permutation {
    pub fn new(word: Vec<usize>) -> Result<Self, PermError> {
        let n = word.len();
        if n == 0 {
            return Err(PermError::Empty);
        }
        let mut seen = vec![false; n + 1];
        for &v in &word {
            if v == 0 || v > n || seen[v] {
                return Err(PermError::NotBijective { word, n });
            }
            seen[v] = true;
        }
        Ok(Permutation { word })
    }

    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "S_0 is not supported");
        Permutation {
            word: (1..=n).collect(),
        }
    }

    /// The longest element `n (n-1) ... 1`.
    pub fn longest(n: usize) -> Self {
        assert!(n >= 1, "S_0 is not supported");
        Permutation {
            word: (1..=n).rev().collect(),
        }
    }

    /// The simple transposition `s_i` in `S_n`.
    pub fn simple(i: usize, n: usize) -> Self {
        assert!(i >= 1 && i < n, "s_{i} is not in S_{n}");
        let mut w = Self::identity(n);
        w.word.swap(i - 1, i);
        w
    }

    /// Standardizes a sequence of distinct integers to the permutation with
    /// the same relative order.
    pub fn standardize(values: &[usize]) -> Self {
        let mut order: Vec<usize> = (0..values.len()).collect();
        order.sort_by_key(|&i| values[i]);
        let mut word = vec![0; values.len()];
        for (rank, &i) in order.iter().enumerate() {
            word[i] = rank + 1;
        }
        Permutation { word }
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// `w(i)` for 1-based `i`.
    pub fn at(&self, i: usize) -> usize {
        self.word[i - 1]
    }

    /// 1-based position of value `v`.
    pub fn position_of(&self, v: usize) -> usize {
        self.word
            .iter()
            .position(|&x| x == v)
            .expect("value in range")
            + 1
    }

    pub fn is_identity(&self) -> bool {
        self.word.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    pub fn inverse(&self) -> Self {
        let mut word = vec![0; self.len()];
        for (i, &v) in self.word.iter().enumerate() {
            word[v - 1] = i + 1;
        }
        Permutation { word }
    }

    /// Embeds into `S_m` (`m >= n`) by fixing `n + 1, ..., m`.
    pub fn padded(&self, m: usize) -> Self {
        assert!(m >= self.len());
        let mut word = self.word.clone();
        word.extend(self.len() + 1..=m);
        Permutation { word }
    }

    /// Removes trailing fixed points, keeping at least one entry.
    pub fn trimmed(&self) -> Self {
        let mut n = self.len();
        while n > 1 && self.word[n - 1] == n {
            n -= 1;
        }
        Permutation {
            word: self.word[..n].to_vec(),
        }
    }

    /// `w * s_i`: swaps the entries in positions `i` and `i + 1`.
    pub fn swap_positions(&self, i: usize) -> Self {
        let mut w = self.clone();
        w.word.swap(i - 1, i);
        w
    }

    /// `s_i * w`: swaps the values `i` and `i + 1`.
    pub fn swap_values(&self, i: usize) -> Self {
        let word = self
            .word
            .iter()
            .map(|&v| match v {
                v if v == i => i + 1,
                v if v == i + 1 => i,
                v => v,
            })
            .collect();
        Permutation { word }
    }

    /// Lehmer code `c_i = #{ j > i : w_j < w_i }`.
    pub fn code(&self) -> Code {
        let entries = self
            .word
            .iter()
            .enumerate()
            .map(|(i, &wi)| self.word[i + 1..].iter().filter(|&&wj| wj < wi).count())
            .collect();
        Code { entries }
    }

    pub fn from_code(code: &Code) -> Self {
        let n = code.len();
        let mut remaining: Vec<usize> = (1..=n).collect();
        let word = code.entries.iter().map(|&c| remaining.remove(c)).collect();
        Permutation { word }
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        self.code().entries.iter().sum()
    }

    pub fn sign(&self) -> i32 {
        if self.length().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn descents(&self) -> Vec<usize> {
        (1..self.len())
            .filter(|&i| self.at(i) > self.at(i + 1))
            .collect()
    }

    /// Positions `i` (1-based) where `w_i` exceeds every earlier entry.
    pub fn left_to_right_maxima(&self) -> Vec<usize> {
        let mut best = 0;
        let mut out = Vec::new();
        for (i, &v) in self.word.iter().enumerate() {
            if v > best {
                best = v;
                out.push(i + 1);
            }
        }
        out
    }

    /// A reduced word `a_1 ... a_l` with `w = s_{a_1} ... s_{a_l}`, built by
    /// repeatedly stripping the smallest descent from the right.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut rev = Vec::with_capacity(self.length());
        while let Some(i) = (1..w.len()).find(|&i| w.at(i) > w.at(i + 1)) {
            rev.push(i);
            w = w.swap_positions(i);
        }
        rev.reverse();
        rev
    }

    pub fn direct_sum(&self, other: &Permutation) -> Self {
        let m = self.len();
        let word = self
            .word
            .iter()
            .copied()
            .chain(other.word.iter().map(|&v| v + m))
            .collect();
        Permutation { word }
    }

    pub fn skew_sum(&self, other: &Permutation) -> Self {
        let n = other.len();
        let word = self
            .word
            .iter()
            .map(|&v| v + n)
            .chain(other.word.iter().copied())
            .collect();
        Permutation { word }
    }

    /// Composition `(self * other)(i) = self(other(i))`, padding the shorter
    /// factor with fixed points.
    pub fn compose(&self, other: &Permutation) -> Self {
        let n = self.len().max(other.len());
        let (a, b) = (self.padded(n), other.padded(n));
        let word = b.word.iter().map(|&v| a.word[v - 1]).collect();
        Permutation { word }
    }

    /// All of `S_n` in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        (1..=n).permutations(n).map(|word| Permutation { word })
    }
}

impl Mul for &Permutation {
    type Output = Permutation;

    fn mul(self, rhs: &Permutation) -> Permutation {
        self.compose(rhs)
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = PermError;

    fn try_from(word: Vec<usize>) -> Result<Self, Self::Error> {
        Permutation::new(word)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(w: Permutation) -> Self {
        w.word
    }
}

/// Accepts space- or comma-separated words (`"4 1 3 2"`) and, for `n <= 9`,
/// compact digit strings (`"4132"`).
impl FromStr for Permutation {
    type Err = PermError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let parse_err = || PermError::Parse(s.to_string());
        let word: Vec<usize> = if t.contains(|c: char| c.is_whitespace() || c == ',') {
            t.split(|c: char| c.is_whitespace() || c == ',')
                .filter(|p| !p.is_empty())
                .map(|p| p.parse().map_err(|_| parse_err()))
                .collect::<Result<_, _>>()?
        } else {
            t.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(parse_err))
                .collect::<Result<_, _>>()?
        };
        Permutation::new(word)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len() <= 9 {
            for v in &self.word {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            write!(f, "{}", self.word.iter().join(" "))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

/// A Lehmer code `(c_1, ..., c_n)` with `0 <= c_i <= n - i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Code {
    entries: Vec<usize>,
}

impl Code {
    pub fn new(entries: Vec<usize>) -> Result<Self, PermError> {
        let n = entries.len();
        if n == 0 {
            return Err(PermError::Empty);
        }
        for (i, &c) in entries.iter().enumerate() {
            if c > n - 1 - i {
                return Err(PermError::CodeOutOfRange {
                    index: i + 1,
                    value: c,
                    bound: n - 1 - i,
                });
            }
        }
        Ok(Code { entries })
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}
