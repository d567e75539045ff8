//! Separable permutations as trees of direct and skew sums.

use std::fmt;

use super::pattern::{first_violation, patterns};
use super::{PermError, Permutation};

/// How a permutation splits at its leftmost top-level block boundary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Split {
    /// `w = u ⊕ v`
    Direct(Permutation, Permutation),
    /// `w = u ⊖ v`
    Skew(Permutation, Permutation),
}

/// Finds the smallest `m < n` at which `w` is `u ⊕ v` or `u ⊖ v` with
/// `u ∈ S_m`. Returns `None` for `n = 1` and for sum-indecomposable words.
pub fn top_split(w: &Permutation) -> Option<Split> {
    let n = w.len();
    let mut max = 0;
    let mut min = usize::MAX;
    for m in 1..n {
        max = max.max(w.at(m));
        min = min.min(w.at(m));
        if max == m {
            let u = Permutation::standardize(&w.word()[..m]);
            let v = Permutation::standardize(&w.word()[m..]);
            return Some(Split::Direct(u, v));
        }
        if min == n - m + 1 {
            let u = Permutation::standardize(&w.word()[..m]);
            let v = Permutation::standardize(&w.word()[m..]);
            return Some(Split::Skew(u, v));
        }
    }
    None
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SeparableTree {
    Leaf,
    Direct(Box<SeparableTree>, Box<SeparableTree>),
    Skew(Box<SeparableTree>, Box<SeparableTree>),
}

impl SeparableTree {
    pub fn compose(&self) -> Permutation {
        match self {
            SeparableTree::Leaf => Permutation::identity(1),
            SeparableTree::Direct(a, b) => a.compose().direct_sum(&b.compose()),
            SeparableTree::Skew(a, b) => a.compose().skew_sum(&b.compose()),
        }
    }

    pub fn leaves(&self) -> usize {
        match self {
            SeparableTree::Leaf => 1,
            SeparableTree::Direct(a, b) | SeparableTree::Skew(a, b) => a.leaves() + b.leaves(),
        }
    }
}

impl fmt::Display for SeparableTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeparableTree::Leaf => write!(f, "1"),
            SeparableTree::Direct(a, b) => write!(f, "⊕({a}, {b})"),
            SeparableTree::Skew(a, b) => write!(f, "⊖({a}, {b})"),
        }
    }
}

/// Decomposes a separable permutation, always splitting at the leftmost
/// top-level block boundary.
pub fn separable_decomposition(w: &Permutation) -> Result<SeparableTree, PermError> {
    if w.len() == 1 {
        return Ok(SeparableTree::Leaf);
    }
    match top_split(w) {
        Some(Split::Direct(u, v)) => Ok(SeparableTree::Direct(
            Box::new(separable_decomposition(&u)?),
            Box::new(separable_decomposition(&v)?),
        )),
        Some(Split::Skew(u, v)) => Ok(SeparableTree::Skew(
            Box::new(separable_decomposition(&u)?),
            Box::new(separable_decomposition(&v)?),
        )),
        None => {
            let occ = first_violation(w, &patterns(&["2413", "3142"]))
                .expect("sum-indecomposable word of length > 1 contains 2413 or 3142");
            Err(PermError::violation(w, occ))
        }
    }
}
