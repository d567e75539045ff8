use super::schubert;
use crate::perm::Permutation;
use crate::poly::{sem_expand, PolyError, Polynomial, SemIndex};
use crate::scalar::Coefficient;

/// `E_j^{(k)}` by `E_j^{(k)} = E_j^{(k-1)} + x_k E_{j-1}^{(k-1)} + q_{k-1} E_{j-2}^{(k-2)}`.
pub fn quantum_elementary<C: Coefficient>(j: i64, k: usize) -> Polynomial<C> {
    if j < 0 || j as usize > k {
        return Polynomial::zero();
    }
    let j = j as usize;
    // rows[k'][j'] = E_{j'}^{(k')} for j' ≤ j
    let mut rows: Vec<Vec<Polynomial<C>>> = Vec::with_capacity(k + 1);
    let mut base = vec![Polynomial::zero(); j + 1];
    base[0] = Polynomial::one();
    rows.push(base);
    for kk in 1..=k {
        let row = (0..=j)
            .map(|jj| {
                let mut e = rows[kk - 1][jj].clone();
                if jj >= 1 {
                    e += &(&Polynomial::x(kk) * &rows[kk - 1][jj - 1]);
                }
                if jj >= 2 && kk >= 2 {
                    e += &(&Polynomial::q(kk - 1) * &rows[kk - 2][jj - 2]);
                }
                e
            })
            .collect();
        rows.push(row);
    }
    rows[k][j].clone()
}

/// `E_{j_1 j_2 ⋯} = ∏_k E_{j_k}^{(k)}`.
pub fn quantum_sem_monomial<C: Coefficient>(idx: &SemIndex) -> Polynomial<C> {
    idx.js()
        .iter()
        .enumerate()
        .filter(|(_, &j)| j > 0)
        .map(|(k, &j)| quantum_elementary::<C>(j as i64, k + 1))
        .product()
}

/// Replaces every `e` by `E` in the SEM expansion of `𝔖_w`.
pub fn quantum_schubert<C: Coefficient>(w: &Permutation) -> Result<Polynomial<C>, PolyError> {
    let w = w.trimmed();
    let sem = sem_expand(&schubert::<C>(&w), w.len() - 1)?;
    Ok(sem.evaluate_with(quantum_sem_monomial))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::elementary;
    use num_bigint::BigInt;

    type P = Polynomial<BigInt>;

    #[test]
    fn small_values() {
        let e22: P = quantum_elementary(2, 2);
        assert_eq!(e22, "x1*x2 + q1".parse::<P>().unwrap());
        for k in 0..6 {
            let sum: P = (1..=k).map(P::x).sum();
            assert_eq!(quantum_elementary::<BigInt>(1, k), sum);
            for j in -1..=k as i64 + 1 {
                assert_eq!(
                    quantum_elementary::<BigInt>(j, k).at_q_zero(),
                    elementary(j, k)
                );
            }
        }
    }

    #[test]
    fn quantum_schubert_values() {
        let s: P = quantum_schubert(&"21".parse().unwrap()).unwrap();
        assert_eq!(s, P::x(1));
        let s: P = quantum_schubert(&"4132".parse().unwrap()).unwrap();
        let e = |js: &[u32]| quantum_sem_monomial::<BigInt>(&SemIndex::new(js.to_vec()).unwrap());
        assert_eq!(s, &(&e(&[1, 1, 2]) - &e(&[1, 0, 3])) - &e(&[0, 2, 2]));
        for w in Permutation::all(4) {
            assert_eq!(
                quantum_schubert::<BigInt>(&w).unwrap().at_q_zero(),
                schubert(&w)
            );
        }
    }
}
