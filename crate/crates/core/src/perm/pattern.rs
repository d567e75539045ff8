//! Classical pattern containment.

use std::sync::OnceLock;

use super::Permutation;

/// The patterns whose avoidance guarantees a factorization into a
/// compact-representable permutation and a lowering permutation.
pub const THIRTEEN_PATTERNS: [&str; 13] = [
    "51324", "15324", "52413", "25413", "53142", "35142", "31542", "143265", "143625", "143652",
    "146352", "413265", "413625",
];

fn thirteen() -> &'static [Permutation] {
    static PATTERNS: OnceLock<Vec<Permutation>> = OnceLock::new();
    PATTERNS.get_or_init(|| {
        THIRTEEN_PATTERNS
            .iter()
            .map(|s| s.parse().expect("valid pattern"))
            .collect()
    })
}

/// A witnessed occurrence: 1-based positions in the host permutation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternOccurrence {
    pub pattern: Permutation,
    pub positions: Vec<usize>,
}

/// Exhaustive left-to-right subsequence search. A partial choice is pruned as
/// soon as its relative order disagrees with the pattern prefix.
pub fn find_pattern(w: &Permutation, p: &Permutation) -> Option<Vec<usize>> {
    let (n, k) = (w.len(), p.len());
    if k > n {
        return None;
    }
    let mut chosen = Vec::with_capacity(k);
    if extend(w.word(), p.word(), 0, &mut chosen) {
        Some(chosen.iter().map(|i| i + 1).collect())
    } else {
        None
    }
}

fn extend(w: &[usize], p: &[usize], start: usize, chosen: &mut Vec<usize>) -> bool {
    let t = chosen.len();
    if t == p.len() {
        return true;
    }
    let last_start = w.len() - (p.len() - t);
    for i in start..=last_start {
        let consistent = chosen
            .iter()
            .enumerate()
            .all(|(s, &j)| (w[j] < w[i]) == (p[s] < p[t]));
        if consistent {
            chosen.push(i);
            if extend(w, p, i + 1, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

pub fn contains_pattern(w: &Permutation, p: &Permutation) -> bool {
    find_pattern(w, p).is_some()
}

/// The first pattern in `patterns` that occurs in `w`, with a witness.
pub fn first_violation<'a, I>(w: &Permutation, patterns: I) -> Option<PatternOccurrence>
where
    I: IntoIterator<Item = &'a Permutation>,
{
    patterns.into_iter().find_map(|p| {
        find_pattern(w, p).map(|positions| PatternOccurrence {
            pattern: p.clone(),
            positions,
        })
    })
}

pub fn avoids_all<'a, I>(w: &Permutation, patterns: I) -> bool
where
    I: IntoIterator<Item = &'a Permutation>,
{
    first_violation(w, patterns).is_none()
}

pub fn avoids_thirteen(w: &Permutation) -> bool {
    avoids_all(w, thirteen())
}

pub(crate) fn thirteen_violation(w: &Permutation) -> Option<PatternOccurrence> {
    first_violation(w, thirteen())
}

/// Parses a fixed list of small patterns.
/// Parses a list of one-line patterns such as `["132", "312"]`.
pub fn patterns(words: &[&str]) -> Vec<Permutation> {
    words
        .iter()
        .map(|s| s.parse().expect("valid pattern"))
        .collect()
}
