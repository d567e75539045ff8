use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::SchubertError;
use crate::perm::Permutation;
use crate::poly::{Monomial, Polynomial};
use crate::scalar::Coefficient;

pub const PIPE_DREAM_MAX_N: usize = 8;

/// Cross positions `(i, j)` (row, column, 1-based) in the staircase
/// `i + j ≤ n`; every other staircase cell is an elbow.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PipeDream {
    crosses: BTreeSet<(usize, usize)>,
}

impl PipeDream {
    pub fn new(crosses: impl IntoIterator<Item = (usize, usize)>) -> Self {
        PipeDream {
            crosses: crosses.into_iter().collect(),
        }
    }

    pub fn crosses(&self) -> &BTreeSet<(usize, usize)> {
        &self.crosses
    }

    pub fn len(&self) -> usize {
        self.crosses.len()
    }

    pub fn is_empty(&self) -> bool {
        self.crosses.is_empty()
    }

    /// `∏ x_i` over the crosses `(i, j)`.
    pub fn weight(&self) -> Monomial {
        let rows = self.crosses.iter().map(|&(i, _)| i).max().unwrap_or(0);
        let mut x = vec![0u16; rows];
        for &(i, _) in &self.crosses {
            x[i - 1] += 1;
        }
        Monomial::from_x(&x)
    }

    /// Traces the wires through an `n × n` staircase. The wire entering row
    /// `i` from the left leaves through the top of column `w(i)`. Returns
    /// `None` if some cross lies outside the staircase or two wires cross
    /// twice.
    pub fn trace(&self, n: usize) -> Option<Permutation> {
        if self
            .crosses
            .iter()
            .any(|&(i, j)| i == 0 || j == 0 || i + j > n)
        {
            return None;
        }
        // from_below[j] is the wire entering the current row's cell in column j from below
        let mut from_below = vec![0usize; n + 2];
        let mut crossed = BTreeSet::new();
        for i in (1..=n).rev() {
            let mut from_left = i;
            let mut up = vec![0usize; n + 2];
            for j in 1..=n + 1 - i {
                if i + j == n + 1 {
                    up[j] = from_left;
                } else if self.crosses.contains(&(i, j)) {
                    let pair = (from_left.min(from_below[j]), from_left.max(from_below[j]));
                    if !crossed.insert(pair) {
                        return None;
                    }
                    up[j] = from_below[j];
                } else {
                    up[j] = from_left;
                    from_left = from_below[j];
                }
            }
            from_below = up;
        }
        let mut word = vec![0; n];
        for j in 1..=n {
            word[from_below[j] - 1] = j;
        }
        Permutation::new(word).ok()
    }

    /// ASCII picture: `+` for a cross, `r` for an elbow, rows top to bottom.
    pub fn render(&self, n: usize) -> String {
        let mut out = String::new();
        for i in 1..=n {
            let row: Vec<&str> = (1..=n + 1 - i)
                .map(|j| {
                    if i + j == n + 1 {
                        "/"
                    } else if self.crosses.contains(&(i, j)) {
                        "+"
                    } else {
                        "r"
                    }
                })
                .collect();
            out += &format!("{i:>2} {}\n", row.join(" "));
        }
        out
    }
}

impl fmt::Display for PipeDream {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self
            .crosses
            .iter()
            .map(|(i, j)| format!("({i},{j})"))
            .collect();
        write!(f, "{{{}}}", cells.join(" "))
    }
}

fn cells(n: usize) -> Vec<(usize, usize)> {
    // reading order: rows top to bottom, each row right to left
    (1..n)
        .flat_map(|i| (1..=n - i).rev().map(move |j| (i, j)))
        .collect()
}

/// All reduced pipe dreams of `w`. A cross at `(i, j)` stands for
/// `s_{i+j-1}`; in reading order the crosses spell a reduced word of `w`,
/// so the search only extends prefixes of reduced words of `w`.
pub fn reduced_pipe_dreams(w: &Permutation) -> Vec<PipeDream> {
    let n = w.len();
    let cells = cells(n);
    let target_len = w.length();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    fn go(
        cells: &[(usize, usize)],
        at: usize,
        prefix: &Permutation,
        w: &Permutation,
        target_len: usize,
        chosen: &mut Vec<(usize, usize)>,
        out: &mut Vec<PipeDream>,
    ) {
        if chosen.len() == target_len {
            if prefix == w {
                out.push(PipeDream::new(chosen.iter().copied()));
            }
            return;
        }
        if cells.len() - at < target_len - chosen.len() {
            return;
        }
        let (i, j) = cells[at];
        let k = i + j - 1;
        if prefix.at(k) < prefix.at(k + 1) {
            let next = prefix.swap_positions(k);
            if (&next.inverse() * w).length() == target_len - chosen.len() - 1 {
                chosen.push((i, j));
                go(cells, at + 1, &next, w, target_len, chosen, out);
                chosen.pop();
            }
        }
        go(cells, at + 1, prefix, w, target_len, chosen, out);
    }
    go(
        &cells,
        0,
        &Permutation::identity(n),
        w,
        target_len,
        &mut chosen,
        &mut out,
    );
    out
}

/// `Σ x^{weight(P)}` over the reduced pipe dreams of `w`.
pub fn schubert_via_pipedreams<C: Coefficient>(
    w: &Permutation,
) -> Result<Polynomial<C>, SchubertError> {
    let w = w.trimmed();
    if w.len() > PIPE_DREAM_MAX_N {
        return Err(SchubertError::Budget {
            n: w.len(),
            limit: PIPE_DREAM_MAX_N,
        });
    }
    let mut out = Polynomial::zero();
    for pd in reduced_pipe_dreams(&w) {
        out.add_term(pd.weight(), C::one());
    }
    Ok(out)
}
