//! Schubert polynomials by divided differences and by pipe dreams, and their
//! quantum deformations.

mod pipedream;
mod quantum;

pub use pipedream::{reduced_pipe_dreams, schubert_via_pipedreams, PipeDream, PIPE_DREAM_MAX_N};
pub use quantum::{quantum_elementary, quantum_schubert, quantum_sem_monomial};

use std::collections::HashMap;

use crate::perm::Permutation;
use crate::poly::{divided_difference, divided_difference_word, Monomial, PolyError, Polynomial};
use crate::scalar::Coefficient;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SchubertError {
    #[error("n = {n} exceeds the enumeration budget of {limit}")]
    Budget { n: usize, limit: usize },
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// `x_1^{n-1} x_2^{n-2} ⋯ x_{n-1}`.
pub fn staircase<C: Coefficient>(n: usize) -> Polynomial<C> {
    let exps: Vec<u16> = (1..n).rev().map(|e| e as u16).collect();
    Polynomial::monomial(Monomial::from_x(&exps))
}

/// `𝔖_w = ∂_{w⁻¹ w_0} x^δ`. Dominant permutations short-circuit to the
/// monomial `x^{code(w)}`.
pub fn schubert<C: Coefficient>(w: &Permutation) -> Polynomial<C> {
    let w = w.trimmed();
    let code = w.code();
    if code.entries().windows(2).all(|p| p[0] >= p[1]) {
        let exps: Vec<u16> = code.entries().iter().map(|&c| c as u16).collect();
        return Polynomial::monomial(Monomial::from_x(&exps));
    }
    let n = w.len();
    divided_difference_word(&staircase(n), &(&w.inverse() * &Permutation::longest(n)))
}

/// Every `𝔖_w` for `w ∈ S_n`, walking down from `w_0` one descent at a time.
pub fn schubert_table<C: Coefficient>(n: usize) -> HashMap<Permutation, Polynomial<C>> {
    let top = Permutation::longest(n);
    let mut table = HashMap::from([(top.clone(), staircase(n))]);
    let mut level = vec![top];
    while !level.is_empty() {
        let mut next = Vec::new();
        for w in &level {
            for i in w.descents() {
                let down = w.swap_positions(i);
                if table.contains_key(&down) {
                    continue;
                }
                let p = divided_difference(&table[w], i);
                table.insert(down.clone(), p);
                next.push(down);
            }
        }
        level = next;
    }
    table
}
