use std::collections::{BTreeMap, HashMap};

use super::{divided_difference, PolyError, Polynomial};
use crate::perm::Permutation;
use crate::scalar::Coefficient;
use crate::schubert::schubert;

/// Coefficients `c_w` with `f = Σ c_w 𝔖_w` over `w ∈ S_n`. Each `c_w` is
/// the constant term of `∂_w f`; the expansion is checked by reconstruction.
pub fn schubert_expand<C: Coefficient>(
    f: &Polynomial<C>,
    n: usize,
) -> Result<BTreeMap<Permutation, C>, PolyError> {
    if f.has_q() {
        return Err(PolyError::QuantumVariables);
    }
    let mut out = BTreeMap::new();
    let mut level: HashMap<Permutation, Polynomial<C>> =
        HashMap::from([(Permutation::identity(n), f.clone())]);
    while !level.is_empty() {
        let mut next: HashMap<Permutation, Polynomial<C>> = HashMap::new();
        for (w, g) in level {
            let c = g.constant_term();
            if !c.is_zero() {
                out.insert(w.clone(), c);
            }
            for i in 1..n {
                // s_i w is longer exactly when i sits left of i + 1 in w
                if w.position_of(i) > w.position_of(i + 1) {
                    continue;
                }
                let up = w.swap_values(i);
                if next.contains_key(&up) {
                    continue;
                }
                let h = divided_difference(&g, i);
                if !h.is_zero() {
                    next.insert(up, h);
                }
            }
        }
        level = next;
    }
    let mut check = Polynomial::zero();
    for (w, c) in &out {
        check += &schubert::<C>(w).scale(c);
    }
    if check != *f {
        return Err(PolyError::NotInSpan { n });
    }
    Ok(out)
}
