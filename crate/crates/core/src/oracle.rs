//! Slow reference computations used to cross-check the main algorithms.

use std::collections::HashMap;

use itertools::Itertools;

use crate::perm::Permutation;
use crate::poly::{Monomial, Polynomial};
use crate::scalar::Coefficient;

/// `Σ_σ sgn(σ) ∏ m[i][σ(i)]`.
pub fn leibniz_determinant<C: Coefficient>(m: &[Vec<Polynomial<C>>]) -> Polynomial<C> {
    let n = m.len();
    if n == 0 {
        return Polynomial::one();
    }
    let mut acc = Polynomial::zero();
    for sigma in Permutation::all(n) {
        let mut term = Polynomial::one();
        for i in 0..n {
            let e = &m[i][sigma.at(i + 1) - 1];
            if e.is_zero() {
                term = Polynomial::zero();
                break;
            }
            term = &term * e;
        }
        if sigma.sign() > 0 {
            acc += &term;
        } else {
            acc -= &term;
        }
    }
    acc
}

/// Coefficient of `λ^j` in `det(I + λ G_k)`, where `G_k` has `x_1, …, x_k`
/// on the diagonal, `q_1, …, q_{k-1}` above it and `-1` below it.
pub fn quantum_elementary_by_determinant<C: Coefficient>(j: i64, k: usize) -> Polynomial<C> {
    if j < 0 {
        return Polynomial::zero();
    }
    // λ is modelled by the spare variable x_{k+1}
    let lambda = Polynomial::<C>::x(k + 1);
    let m: Vec<Vec<Polynomial<C>>> = (1..=k)
        .map(|r| {
            (1..=k)
                .map(|c| {
                    if r == c {
                        &Polynomial::one() + &(&lambda * &Polynomial::x(r))
                    } else if c == r + 1 {
                        &lambda * &Polynomial::q(r)
                    } else if r == c + 1 {
                        -&lambda
                    } else {
                        Polynomial::zero()
                    }
                })
                .collect()
        })
        .collect();
    let det = leibniz_determinant(&m);
    Polynomial::from_terms(
        det.terms()
            .filter(|(mono, _)| mono.x_exp(k + 1) as i64 == j)
            .map(|(mono, c)| {
                let mut x = mono.x_exps().to_vec();
                x.truncate(k);
                (Monomial::new(&x, mono.q_exps()), c.clone())
            }),
    )
}

/// Semistandard tableaux of shape `lambda` with entries in `1..=n`.
pub fn semistandard_tableaux(lambda: &[usize], n: usize) -> Vec<Vec<Vec<usize>>> {
    fn go(lambda: &[usize], n: usize, t: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        let r = t.len() - 1;
        let c = t[r].len();
        if c == lambda[r] {
            if r + 1 == lambda.len() {
                out.push(t.clone());
            } else {
                t.push(Vec::new());
                go(lambda, n, t, out);
                t.pop();
            }
            return;
        }
        let lo_row = if c > 0 { t[r][c - 1] } else { 1 };
        let lo_col = if r > 0 { t[r - 1][c] + 1 } else { 1 };
        for v in lo_row.max(lo_col)..=n {
            t[r].push(v);
            go(lambda, n, t, out);
            t[r].pop();
        }
    }
    let lambda: Vec<usize> = lambda.iter().copied().filter(|&l| l > 0).collect();
    if lambda.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    go(&lambda, n, &mut vec![Vec::new()], &mut out);
    out
}

/// `s_λ(x_1, …, x_n)` as the sum of tableau weights.
pub fn schur_by_tableaux<C: Coefficient>(lambda: &[usize], n: usize) -> Polynomial<C> {
    let mut out = Polynomial::zero();
    for t in semistandard_tableaux(lambda, n) {
        let mut x = vec![0u16; n];
        for &v in t.iter().flatten() {
            x[v - 1] += 1;
        }
        out.add_term(Monomial::from_x(&x), C::one());
    }
    out
}

/// Rank over `Z/p` of the coefficient vectors of `polys`.
pub fn rank_mod_p<C: Coefficient>(polys: &[Polynomial<C>], p: u64) -> usize {
    let mut cols: HashMap<Monomial, usize> = HashMap::new();
    for poly in polys {
        for (m, _) in poly.terms() {
            let next = cols.len();
            cols.entry(m.clone()).or_insert(next);
        }
    }
    let width = cols.len();
    let mut rows: Vec<Vec<u64>> = polys
        .iter()
        .map(|poly| {
            let mut row = vec![0; width];
            for (m, c) in poly.terms() {
                row[cols[m]] = c.residue(p);
            }
            row
        })
        .collect();
    let pow = |mut b: u64, mut e: u64| {
        let mut r = 1;
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % p;
            }
            b = b * b % p;
            e >>= 1;
        }
        r
    };
    let mut rank = 0;
    for col in 0..width {
        let Some(piv) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, piv);
        let inv = pow(rows[rank][col], p - 2);
        let pivot: Vec<u64> = rows[rank].iter().map(|v| v * inv % p).collect();
        for row in rows.iter_mut().skip(rank + 1) {
            let f = row[col];
            if f != 0 {
                for (v, pv) in row.iter_mut().zip(&pivot) {
                    *v = (*v + p - f * pv % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// All `k`-subsets of `0..n`, a convenience for small exhaustive checks.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0..n).combinations(k).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::schur;
    use crate::schubert::quantum_elementary;
    use num_bigint::BigInt;

    type P = Polynomial<BigInt>;

    #[test]
    fn leibniz_small() {
        let m = vec![vec![P::x(1), P::x(2)], vec![P::one(), P::x(1)]];
        assert_eq!(leibniz_determinant(&m), "x1^2 - x2".parse::<P>().unwrap());
    }

    #[test]
    fn quantum_recurrence_matches_determinant() {
        for k in 0..=5 {
            for j in -1..=k as i64 + 1 {
                assert_eq!(
                    quantum_elementary::<BigInt>(j, k),
                    quantum_elementary_by_determinant(j, k),
                    "j={j} k={k}"
                );
            }
        }
    }

    #[test]
    fn schur_matches_tableaux() {
        for lambda in crate::poly::schur::partitions_in_box(3, 3) {
            for n in 1..=4 {
                assert_eq!(
                    schur::<BigInt>(&lambda, n),
                    schur_by_tableaux(&lambda, n),
                    "{lambda:?} n={n}"
                );
            }
        }
        assert_eq!(semistandard_tableaux(&[2, 1], 2).len(), 2);
    }

    #[test]
    fn rank_of_dependent_rows() {
        let a = &P::x(1) + &P::x(2);
        let b = P::x(1);
        let c = &a - &b;
        assert_eq!(rank_mod_p(&[a.clone(), b.clone()], 101), 2);
        assert_eq!(rank_mod_p(&[a, b, c], 101), 2);
    }
}
