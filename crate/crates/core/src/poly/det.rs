use super::Polynomial;
use crate::scalar::Coefficient;

/// Exact determinant of a square matrix of polynomials. Cofactor expansion up
/// to size 4, Bareiss fraction-free elimination beyond.
pub fn determinant<C: Coefficient>(m: &[Vec<Polynomial<C>>]) -> Polynomial<C> {
    let n = m.len();
    assert!(
        m.iter().all(|row| row.len() == n),
        "determinant of a non-square matrix"
    );
    if n <= 4 {
        cofactor(m)
    } else {
        bareiss(m.to_vec())
    }
}

fn cofactor<C: Coefficient>(m: &[Vec<Polynomial<C>>]) -> Polynomial<C> {
    match m.len() {
        0 => Polynomial::one(),
        1 => m[0][0].clone(),
        2 => &(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0]),
        n => {
            let mut acc = Polynomial::zero();
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<_>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != j)
                            .map(|(_, p)| p.clone())
                            .collect()
                    })
                    .collect();
                let term = &m[0][j] * &cofactor(&minor);
                if j % 2 == 0 {
                    acc += &term;
                } else {
                    acc -= &term;
                }
            }
            acc
        }
    }
}

fn bareiss<C: Coefficient>(mut a: Vec<Vec<Polynomial<C>>>) -> Polynomial<C> {
    let n = a.len();
    let mut negate = false;
    let mut prev = Polynomial::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return Polynomial::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.div_exact(&prev).expect("Bareiss step divides exactly");
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::leibniz_determinant;
    use num_bigint::BigInt;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    type P = Polynomial<BigInt>;

    fn random_matrix(rng: &mut ChaCha8Rng, n: usize) -> Vec<Vec<P>> {
        (0..n)
            .map(|_| {
                (0..n)
                    .map(|_| {
                        let mut p = P::zero();
                        for _ in 0..rng.gen_range(0..3) {
                            let v = rng.gen_range(1..4);
                            let c = BigInt::from(rng.gen_range(-2..=2));
                            p += &P::x(v).scale(&c);
                        }
                        if rng.gen_bool(0.3) {
                            p += &P::one();
                        }
                        p
                    })
                    .collect()
            })
            .collect()
    }

    #[test]
    fn identity_and_empty() {
        for n in 0..7 {
            let m: Vec<Vec<P>> = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| if i == j { P::one() } else { P::zero() })
                        .collect()
                })
                .collect();
            assert!(determinant(&m).is_one());
        }
    }

    #[test]
    fn agrees_with_leibniz() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 1..=6 {
            for _ in 0..8 {
                let m = random_matrix(&mut rng, n);
                assert_eq!(determinant(&m), leibniz_determinant(&m));
            }
        }
    }

    #[test]
    fn bareiss_handles_zero_pivots() {
        let mut m: Vec<Vec<P>> = (0..5)
            .map(|_| (0..5).map(|_| P::zero()).collect())
            .collect();
        for i in 0..5 {
            m[i][(i + 1) % 5] = P::x(i + 1);
        }
        assert_eq!(determinant(&m), leibniz_determinant(&m));
        assert!(!determinant(&m).is_zero());
    }
}
