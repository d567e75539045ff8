//! Lowering permutations and the factorization `w = u v` of 13-avoiding
//! permutations into a 1324-avoiding separable `u` and a lowering `v`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::pattern::{first_violation, patterns, thirteen_violation};
use super::{PermError, Permutation};

/// A permutation `v` with `v⁻¹(1) > … > v⁻¹(k) = 1 < v⁻¹(k+1) < … < v⁻¹(n)`
/// where `k = v(1)`; equivalently one avoiding 132 and 312.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Permutation", into = "Permutation")]
pub struct LoweringPermutation {
    base: Permutation,
    k: usize,
    descent_positions: Vec<usize>,
}

impl LoweringPermutation {
    pub fn new(base: Permutation) -> Result<Self, PermError> {
        let n = base.len();
        let k = base.at(1);
        let inv = base.inverse();
        let p: Vec<usize> = (1..=n).map(|i| inv.at(i)).collect();
        let falling = p[..k].windows(2).all(|w| w[0] > w[1]);
        let rising = p[k - 1..].windows(2).all(|w| w[0] < w[1]);
        if !(falling && rising) {
            return Err(PermError::NotLowering(base));
        }
        Ok(LoweringPermutation {
            base,
            k,
            descent_positions: p[..k].to_vec(),
        })
    }

    /// Builds the lowering permutation with `v⁻¹(i) = positions[i-1]` for
    /// `i ≤ k` from strictly decreasing `positions` ending in 1.
    pub fn from_positions(n: usize, positions: &[usize]) -> Result<Self, PermError> {
        let k = positions.len();
        let mut word = vec![0; n];
        for (i, &pos) in positions.iter().enumerate() {
            if pos == 0 || pos > n || word[pos - 1] != 0 {
                return Err(PermError::Parse(format!(
                    "bad lowering positions {positions:?}"
                )));
            }
            word[pos - 1] = i + 1;
        }
        for (value, slot) in (k + 1..).zip(word.iter_mut().filter(|s| **s == 0)) {
            *slot = value;
        }
        LoweringPermutation::new(Permutation::new(word)?)
    }

    /// All `2^(n-1)` lowering permutations in `S_n`.
    pub fn all(n: usize) -> Vec<LoweringPermutation> {
        let mut out = Vec::with_capacity(1 << (n - 1));
        for mask in 0u64..(1 << (n - 1)) {
            // bit i set => position i + 2 carries one of the values 1..k-1
            let mut positions: Vec<usize> = (0..n - 1)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| i + 2)
                .rev()
                .collect();
            positions.push(1);
            out.push(Self::from_positions(n, &positions).expect("valid by construction"));
        }
        out
    }

    pub fn base(&self) -> &Permutation {
        &self.base
    }

    /// `k = v(1)`.
    pub fn k(&self) -> usize {
        self.k
    }

    /// `p_1 > p_2 > … > p_k = 1` with `p_i = v⁻¹(i)`.
    pub fn descent_positions(&self) -> &[usize] {
        &self.descent_positions
    }

    pub fn len(&self) -> usize {
        self.base.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl TryFrom<Permutation> for LoweringPermutation {
    type Error = PermError;

    fn try_from(p: Permutation) -> Result<Self, Self::Error> {
        LoweringPermutation::new(p)
    }
}

impl From<LoweringPermutation> for Permutation {
    fn from(v: LoweringPermutation) -> Self {
        v.base
    }
}

fn check_thirteen(w: &Permutation) -> Result<(), PermError> {
    match thirteen_violation(w) {
        Some(occ) => Err(PermError::violation(w, occ)),
        None => Ok(()),
    }
}

/// True if `w` has a 1342 occurrence `a q q' b` whose `3` is the value `q`
/// and whose `4` is a value not in `q_set`.
fn blocked(w: &Permutation, q: usize, q_set: &BTreeSet<usize>) -> bool {
    let word = w.word();
    let iq = w.position_of(q) - 1;
    let n = word.len();
    (iq + 1..n).any(|j| {
        let big = word[j];
        big > q
            && !q_set.contains(&big)
            && word[j + 1..]
                .iter()
                .any(|&b| b < q && word[..iq].iter().any(|&a| a < b))
    })
}

/// Scans the left-to-right maxima from largest to smallest and keeps each
/// one unless it is the `3` of a 1342 occurrence whose `4` was not kept.
pub fn q_set(w: &Permutation) -> Result<BTreeSet<usize>, PermError> {
    check_thirteen(w)?;
    let mut q = BTreeSet::new();
    for pos in w.left_to_right_maxima().into_iter().rev() {
        let value = w.at(pos);
        if !blocked(w, value, &q) {
            q.insert(value);
        }
    }
    Ok(q)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factorization {
    pub q: BTreeSet<usize>,
    pub u: Permutation,
    pub v: LoweringPermutation,
}

/// `w = u v` with `u` obtained by moving the values of `q_set(w)` to the
/// front in decreasing order.
pub fn factorize(w: &Permutation) -> Result<Factorization, PermError> {
    let q = q_set(w)?;
    let mut word: Vec<usize> = q.iter().rev().copied().collect();
    word.extend(w.word().iter().filter(|v| !q.contains(v)));
    let u = Permutation::new(word)?;
    let v = LoweringPermutation::new(&u.inverse() * w)?;
    debug_assert_eq!(&u * v.base(), *w);
    debug_assert_eq!(w.length() + v.base().length(), u.length());
    if let Some(occ) = first_violation(&u, &patterns(&["1324", "2413", "3142"])) {
        // Only reachable if the Q-set construction is wrong.
        return Err(PermError::violation(&u, occ));
    }
    Ok(Factorization { q, u, v })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::pattern::{avoids_all, avoids_thirteen, find_pattern};

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn worked_q_set() {
        assert_eq!(q_set(&p("32157684")).unwrap(), BTreeSet::from([3, 7, 8]));
        for n in 1..8 {
            assert_eq!(
                q_set(&Permutation::longest(n)).unwrap(),
                BTreeSet::from([n])
            );
            assert_eq!(q_set(&Permutation::identity(n)).unwrap(), (1..=n).collect());
        }
        assert!(matches!(
            q_set(&p("51324")),
            Err(PermError::PatternViolation { .. })
        ));
    }

    #[test]
    fn worked_factorization() {
        let f = factorize(&p("32157684")).unwrap();
        assert_eq!(f.u, p("87321564"));
        assert_eq!(*f.v.base(), p("34562718"));
        assert_eq!(f.v.k(), 3);
        assert_eq!(f.v.descent_positions(), &[7, 5, 1]);

        let f = factorize(&Permutation::identity(5)).unwrap();
        assert_eq!(f.u, Permutation::longest(5));
        assert_eq!(*f.v.base(), Permutation::longest(5));

        let f = factorize(&p("321")).unwrap();
        assert_eq!(
            (f.u, f.v.base().clone()),
            (p("321"), Permutation::identity(3))
        );
    }

    #[test]
    fn lowering_validation() {
        assert!(LoweringPermutation::new(p("34562718")).is_ok());
        assert!(LoweringPermutation::new(p("132")).is_err());
        assert!(LoweringPermutation::new(p("312")).is_err());
        let low = patterns(&["132", "312"]);
        for n in 1..=6 {
            let all = LoweringPermutation::all(n);
            assert_eq!(all.len(), 1 << (n - 1));
            for w in Permutation::all(n) {
                let ok = LoweringPermutation::new(w.clone()).is_ok();
                assert_eq!(ok, avoids_all(&w, &low), "{w}");
                assert_eq!(ok, all.iter().any(|v| *v.base() == w));
            }
        }
    }

    #[test]
    fn factorization_properties_in_s6() {
        let bad = patterns(&["1324", "2413", "3142"]);
        let low = patterns(&["132", "312"]);
        for n in 1..=6 {
            for w in Permutation::all(n).filter(avoids_thirteen) {
                let f = factorize(&w).unwrap();
                assert_eq!(&f.u * f.v.base(), w);
                assert_eq!(w.length() + f.v.base().length(), f.u.length());
                assert!(avoids_all(&f.u, &bad));
                assert!(avoids_all(f.v.base(), &low));
                // every kept value sits at a left-to-right maximum
                let maxima: Vec<usize> =
                    w.left_to_right_maxima().iter().map(|&i| w.at(i)).collect();
                assert!(f.q.iter().all(|q| maxima.contains(q)));
            }
        }
    }

    /// Direct checks of the structural consequences of the Q-set rule.
    #[test]
    fn q_pattern_consequences_in_s6() {
        let all4 = |w: &Permutation, pat: &str, f: &mut dyn FnMut(&[usize])| {
            let pat = p(pat);
            use itertools::Itertools;
            for idx in (0..w.len()).combinations(4) {
                let vals: Vec<usize> = idx.iter().map(|&i| w.word()[i]).collect();
                if Permutation::standardize(&vals) == pat {
                    f(&vals);
                }
            }
        };
        for w in Permutation::all(6).filter(avoids_thirteen) {
            let q = q_set(&w).unwrap();
            all4(&w, "2413", &mut |v| assert!(q.contains(&v[1]), "{w}"));
            all4(&w, "3142", &mut |v| assert!(q.contains(&v[2]), "{w}"));
            all4(&w, "1324", &mut |v| {
                if !q.contains(&v[3]) {
                    assert!(q.contains(&v[1]), "{w}")
                }
            });
            all4(&w, "1342", &mut |v| {
                if !q.contains(&v[2]) {
                    assert!(!q.contains(&v[1]), "{w}")
                }
            });
        }
        assert!(find_pattern(&p("32157684"), &p("1342")).is_some());
    }

    #[test]
    fn no_factorization_for_pattern_containing_words_in_s6() {
        let bad = patterns(&["1324", "2413", "3142"]);
        for w in Permutation::all(6).filter(|w| !avoids_thirteen(w)) {
            for v in LoweringPermutation::all(6) {
                let u = w.compose(&v.base().inverse());
                let ok = avoids_all(&u, &bad) && w.length() + v.base().length() == u.length();
                assert!(!ok, "{w} = {u} · {}", v.base());
            }
        }
    }
}
