//! Lattice path representations: start points `(a_i, 0)` on the floor, end
//! points `(b_j, c_j)`, and a sign, standing for the polynomial
//! `sign · det(e^{(c_j)}_{c_j + b_j - a_i})`.

mod construct;
mod ops;
mod paths;
mod render;
mod sem;

pub use construct::{compact_rep, proper_rep, rep_213, rep_321, rep_413625, rep_dominant, rep_grassmannian};
pub use ops::{delete_staircase, divided_difference, drop, drop_is_zero, lower, product, pull, slide_left_at, slide_left_below, translate};
pub use paths::{enumerate_path_systems, enumerate_path_systems_with, signed_path_sum, PathBudget, PathSystem, Step};
pub use sem::{rep_determinant_quantum, sem_of_proper};

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::perm::PermError;
use crate::poly::{determinant, elementary, Polynomial};
use crate::scalar::Coefficient;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LprError {
    #[error("{starts} start points but {ends} end points")]
    SizeMismatch { starts: usize, ends: usize },
    #[error("sign must be +1 or -1, got {0}")]
    BadSign(i64),
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error("representation is not proper: end heights repeat")]
    NotProper,
    #[error("end point ({b},{c}) is missing")]
    MissingEnd { b: i64, c: u32 },
    #[error("start point ({a},0) is missing")]
    MissingStart { a: i64 },
    #[error("expected exactly one end point at height {c}, found {found}")]
    HeightNotUnique { c: u32, found: usize },
    #[error("start ({a},0) reaches end ({b},{c}), so the product rule does not apply")]
    Reachable { a: i64, b: i64, c: u32 },
    #[error("end heights must be exactly 0..{k}")]
    NotStaircaseHeights { k: usize },
    #[error("lowering permutation has size {v}, representation has {k} points")]
    LoweringSize { v: usize, k: usize },
    #[error("path enumeration budget exceeded: {0}")]
    Budget(String),
}

/// `e((a,0),(b,c)) = e^{(c)}_{c+b-a}`, the weight of all paths from
/// `(a, 0)` to `(b, c)`.
pub fn point_weight<C: Coefficient>(a: i64, b: i64, c: u32) -> Polynomial<C> {
    elementary(c as i64 + b - a, c as usize)
}

/// Whether some path runs from `(a, 0)` to `(b, c)`.
pub fn reachable(a: i64, b: i64, c: u32) -> bool {
    b <= a && a <= b + c as i64
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RepJson", into = "RepJson")]
pub struct LatticeRep {
    starts: Vec<i64>,
    ends: Vec<(i64, u32)>,
    sign: i8,
    label: Option<String>,
}

#[derive(Serialize, Deserialize)]
struct RepJson {
    sign: i64,
    starts: Vec<i64>,
    ends: Vec<(i64, u32)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    label: Option<String>,
}

impl TryFrom<RepJson> for LatticeRep {
    type Error = LprError;
    fn try_from(j: RepJson) -> Result<Self, LprError> {
        let sign = match j.sign {
            1 => 1,
            -1 => -1,
            s => return Err(LprError::BadSign(s)),
        };
        let mut rep = LatticeRep::new(j.starts, j.ends, sign)?;
        rep.label = j.label;
        Ok(rep)
    }
}

impl From<LatticeRep> for RepJson {
    fn from(r: LatticeRep) -> Self {
        RepJson { sign: r.sign as i64, starts: r.starts, ends: r.ends, label: r.label }
    }
}

/// Parity of the permutation that stably sorts `keys`.
fn sort_parity<K: Ord>(keys: &[K]) -> bool {
    let mut odd = false;
    for i in 0..keys.len() {
        for j in i + 1..keys.len() {
            if keys[i] > keys[j] {
                odd = !odd;
            }
        }
    }
    odd
}

impl LatticeRep {
    pub fn new(starts: Vec<i64>, ends: Vec<(i64, u32)>, sign: i8) -> Result<Self, LprError> {
        if starts.len() != ends.len() {
            return Err(LprError::SizeMismatch { starts: starts.len(), ends: ends.len() });
        }
        if sign != 1 && sign != -1 {
            return Err(LprError::BadSign(sign as i64));
        }
        Ok(LatticeRep { starts, ends, sign, label: None })
    }

    /// The empty representation of `1`.
    pub fn empty() -> Self {
        LatticeRep { starts: Vec::new(), ends: Vec::new(), sign: 1, label: None }
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn starts(&self) -> &[i64] {
        &self.starts
    }

    pub fn ends(&self) -> &[(i64, u32)] {
        &self.ends
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn len(&self) -> usize {
        self.starts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.starts.is_empty()
    }

    pub fn max_height(&self) -> u32 {
        self.ends.iter().map(|&(_, c)| c).max().unwrap_or(0)
    }

    pub(crate) fn negate(&mut self) {
        self.sign = -self.sign;
    }

    pub(crate) fn parts_mut(&mut self) -> (&mut Vec<i64>, &mut Vec<(i64, u32)>) {
        (&mut self.starts, &mut self.ends)
    }

    /// Sorts the ends by height, then abscissa; the sign absorbs the reordering.
    pub fn sort_ends(&mut self) {
        let keys: Vec<(u32, i64)> = self.ends.iter().map(|&(b, c)| (c, b)).collect();
        if sort_parity(&keys) {
            self.negate();
        }
        self.ends.sort_by_key(|&(b, c)| (c, b));
    }

    /// Sorts the starts increasingly; the sign absorbs the reordering.
    pub fn sort_starts(&mut self) {
        if sort_parity(&self.starts) {
            self.negate();
        }
        self.starts.sort();
    }

    pub fn normalized(mut self) -> Self {
        self.sort_starts();
        self.sort_ends();
        self
    }

    /// End heights are pairwise distinct.
    pub fn is_proper(&self) -> bool {
        let heights: BTreeSet<u32> = self.ends.iter().map(|&(_, c)| c).collect();
        heights.len() == self.ends.len()
    }

    /// Starts and heights are both `{0, …, k-1}` and `0 ≤ b_i ≤ k-1`.
    pub fn is_compact(&self) -> bool {
        let k = self.len() as i64;
        let starts: BTreeSet<i64> = self.starts.iter().copied().collect();
        let heights: BTreeSet<i64> = self.ends.iter().map(|&(_, c)| c as i64).collect();
        let full: BTreeSet<i64> = (0..k).collect();
        starts == full && heights == full && self.ends.iter().all(|&(b, _)| (0..k).contains(&b))
    }

    /// For each `s`, at least `s` of the `b_i` are below `s`.
    pub fn is_parking(&self) -> bool {
        (1..=self.len() as i64).all(|s| self.ends.iter().filter(|&&(b, _)| b < s).count() as i64 >= s)
    }

    /// `(e^{(c_j)}_{c_j + b_j - a_i})_{i,j}` without the sign.
    pub fn matrix<C: Coefficient>(&self) -> Vec<Vec<Polynomial<C>>> {
        self.starts
            .iter()
            .map(|&a| self.ends.iter().map(|&(b, c)| point_weight(a, b, c)).collect())
            .collect()
    }

    /// The represented polynomial `sign · det`.
    pub fn determinant<C: Coefficient>(&self) -> Polynomial<C> {
        let d = determinant(&self.matrix::<C>());
        if self.sign < 0 {
            -d
        } else {
            d
        }
    }

    pub(crate) fn require_end(&self, b: i64, c: u32) -> Result<usize, LprError> {
        self.ends.iter().position(|&e| e == (b, c)).ok_or(LprError::MissingEnd { b, c })
    }

    pub(crate) fn require_start(&self, a: i64) -> Result<usize, LprError> {
        self.starts.iter().position(|&s| s == a).ok_or(LprError::MissingStart { a })
    }

    /// Indices of the end points at height `c`.
    pub fn ends_at_height(&self, c: u32) -> Vec<usize> {
        (0..self.ends.len()).filter(|&j| self.ends[j].1 == c).collect()
    }
}

/// `sign · det(e^{(c_j)}_{c_j + b_j - a_i})`.
pub fn rep_determinant<C: Coefficient>(rep: &LatticeRep) -> Polynomial<C> {
    rep.determinant()
}

impl fmt::Display for LatticeRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(label) = &self.label {
            writeln!(f, "label {label}")?;
        }
        writeln!(f, "sign {}", if self.sign > 0 { "+1" } else { "-1" })?;
        let starts: Vec<String> = self.starts.iter().map(|a| format!("({a},0)")).collect();
        let ends: Vec<String> = self.ends.iter().map(|(b, c)| format!("({b},{c})")).collect();
        writeln!(f, "A = {{{}}}", starts.join(", "))?;
        write!(f, "B = {{{}}}", ends.join(", "))
    }
}
