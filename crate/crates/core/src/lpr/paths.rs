//! Brute-force enumeration of nonintersecting path systems.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use super::{LatticeRep, LprError};
use crate::perm::Permutation;
use crate::poly::{Monomial, Polynomial};
use crate::scalar::Coefficient;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Step {
    /// `(a, b) → (a, b+1)`, weight `x_{b+1}`.
    Up,
    /// `(a, b) → (a-1, b+1)`, weight 1.
    Diag,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PathBudget {
    pub max_points: usize,
    pub max_height: u32,
    pub max_systems: usize,
}

impl Default for PathBudget {
    fn default() -> Self {
        PathBudget { max_points: 5, max_height: 8, max_systems: 100_000 }
    }
}

/// Vertex-disjoint paths, path `i` running from start `i` to end `sigma(i)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathSystem {
    pub steps: Vec<Vec<Step>>,
    pub sigma: Permutation,
}

impl PathSystem {
    pub fn weight(&self, rep: &LatticeRep) -> Monomial {
        let mut x = vec![0u16; rep.max_height() as usize];
        for path in &self.steps {
            for (h, step) in path.iter().enumerate() {
                if *step == Step::Up {
                    x[h] += 1;
                }
            }
        }
        Monomial::from_x(&x)
    }

    /// Vertices of path `i`, floor point first.
    pub fn vertices(&self, rep: &LatticeRep, i: usize) -> Vec<(i64, u32)> {
        let mut p = (rep.starts()[i], 0);
        let mut out = vec![p];
        for step in &self.steps[i] {
            p = match step {
                Step::Up => (p.0, p.1 + 1),
                Step::Diag => (p.0 - 1, p.1 + 1),
            };
            out.push(p);
        }
        out
    }

    pub fn sign(&self) -> i32 {
        self.sigma.sign()
    }
}

fn paths_between(a: i64, b: i64, c: u32) -> Vec<Vec<Step>> {
    let diags = a - b;
    if diags < 0 || diags > c as i64 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(c as usize);
    fn go(ups: u32, diags: u32, cur: &mut Vec<Step>, out: &mut Vec<Vec<Step>>) {
        if ups == 0 && diags == 0 {
            out.push(cur.clone());
            return;
        }
        for (step, u, d) in [(Step::Up, 1, 0), (Step::Diag, 0, 1)] {
            if ups >= u && diags >= d {
                cur.push(step);
                go(ups - u, diags - d, cur, out);
                cur.pop();
            }
        }
    }
    go(c - diags as u32, diags as u32, &mut cur, &mut out);
    out
}

/// All nonintersecting path systems for `rep` within the default budget.
pub fn enumerate_path_systems(rep: &LatticeRep) -> Result<Vec<PathSystem>, LprError> {
    enumerate_path_systems_with(rep, PathBudget::default())
}

pub fn enumerate_path_systems_with(rep: &LatticeRep, budget: PathBudget) -> Result<Vec<PathSystem>, LprError> {
    let k = rep.len();
    if k > budget.max_points {
        return Err(LprError::Budget(format!("{k} points exceed the limit of {}", budget.max_points)));
    }
    if rep.max_height() > budget.max_height {
        return Err(LprError::Budget(format!(
            "height {} exceeds the limit of {}",
            rep.max_height(),
            budget.max_height
        )));
    }
    struct Search<'a> {
        rep: &'a LatticeRep,
        budget: PathBudget,
        used_ends: Vec<bool>,
        target: Vec<usize>,
        steps: Vec<Vec<Step>>,
        occupied: HashSet<(i64, u32)>,
        out: Vec<PathSystem>,
    }
    impl Search<'_> {
        fn go(&mut self, i: usize) -> Result<(), LprError> {
            if i == self.rep.len() {
                if self.out.len() == self.budget.max_systems {
                    return Err(LprError::Budget(format!("more than {} path systems", self.budget.max_systems)));
                }
                let sigma = Permutation::new(self.target.iter().map(|t| t + 1).collect()).expect("bijective by construction");
                self.out.push(PathSystem { steps: self.steps.clone(), sigma });
                return Ok(());
            }
            let a = self.rep.starts()[i];
            for j in 0..self.rep.len() {
                if self.used_ends[j] {
                    continue;
                }
                let (b, c) = self.rep.ends()[j];
                for path in paths_between(a, b, c) {
                    let mut verts = Vec::with_capacity(path.len() + 1);
                    let mut p = (a, 0);
                    verts.push(p);
                    for s in &path {
                        p = match s {
                            Step::Up => (p.0, p.1 + 1),
                            Step::Diag => (p.0 - 1, p.1 + 1),
                        };
                        verts.push(p);
                    }
                    if verts.iter().any(|v| self.occupied.contains(v)) {
                        continue;
                    }
                    self.occupied.extend(verts.iter().copied());
                    self.used_ends[j] = true;
                    self.target.push(j);
                    self.steps.push(path);
                    let r = self.go(i + 1);
                    self.steps.pop();
                    self.target.pop();
                    self.used_ends[j] = false;
                    for v in &verts {
                        self.occupied.remove(v);
                    }
                    r?;
                }
            }
            Ok(())
        }
    }
    let mut s = Search {
        rep,
        budget,
        used_ends: vec![false; k],
        target: Vec::new(),
        steps: Vec::new(),
        occupied: HashSet::new(),
        out: Vec::new(),
    };
    s.go(0)?;
    Ok(s.out)
}

/// `Σ sgn(σ(P)) x^{w(P)}` over the systems, without the representation's sign.
pub fn signed_path_sum<C: Coefficient>(rep: &LatticeRep, systems: &[PathSystem]) -> Polynomial<C> {
    let mut out = Polynomial::zero();
    for sys in systems {
        let c = if sys.sign() > 0 { C::one() } else { -C::one() };
        out.add_term(sys.weight(rep), c);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::determinant;
    use num_bigint::BigInt;

    #[test]
    fn worked_example() {
        let rep = LatticeRep::new(vec![0, 1, 2], vec![(0, 1), (0, 2), (1, 3)], 1).unwrap();
        let systems = enumerate_path_systems(&rep).unwrap();
        assert_eq!(systems.len(), 2);
        let weights: HashSet<Monomial> = systems.iter().map(|s| s.weight(&rep)).collect();
        assert_eq!(weights, HashSet::from([Monomial::from_x(&[3, 1]), Monomial::from_x(&[3, 0, 1])]));
        assert!(systems.iter().all(|s| s.sigma.is_identity()));
    }

    #[test]
    fn single_path() {
        let rep = LatticeRep::new(vec![0], vec![(0, 1)], 1).unwrap();
        let systems = enumerate_path_systems(&rep).unwrap();
        assert_eq!(systems.len(), 1);
        assert_eq!(systems[0].weight(&rep), Monomial::var(1));
        assert_eq!(systems[0].vertices(&rep, 0), vec![(0, 0), (0, 1)]);
    }

    #[test]
    fn crossing_ends_give_signed_terms() {
        let rep = LatticeRep::new(vec![0, 2], vec![(1, 2), (0, 2)], 1).unwrap();
        let systems = enumerate_path_systems(&rep).unwrap();
        let lgv = signed_path_sum::<BigInt>(&rep, &systems);
        assert_eq!(lgv, determinant(&rep.matrix::<BigInt>()));
    }

    #[test]
    fn budget() {
        let rep = LatticeRep::new(vec![0], vec![(0, 9)], 1).unwrap();
        assert!(matches!(enumerate_path_systems(&rep), Err(LprError::Budget(_))));
        let tight = PathBudget { max_systems: 1, ..PathBudget::default() };
        let rep = LatticeRep::new(vec![0, 1, 2], vec![(0, 1), (0, 2), (1, 3)], 1).unwrap();
        assert!(enumerate_path_systems_with(&rep, tight).is_err());
    }
}
