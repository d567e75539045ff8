use super::{determinant, elementary, Polynomial};
use crate::scalar::Coefficient;

/// The conjugate partition.
pub fn conjugate(lambda: &[usize]) -> Vec<usize> {
    let r = lambda.first().copied().unwrap_or(0);
    (1..=r)
        .map(|j| lambda.iter().filter(|&&l| l >= j).count())
        .collect()
}

pub fn is_partition(lambda: &[usize]) -> bool {
    lambda.windows(2).all(|w| w[0] >= w[1])
}

/// Partitions fitting in a `rows × cols` box, zero parts stripped.
pub fn partitions_in_box(rows: usize, cols: usize) -> Vec<Vec<usize>> {
    fn go(rows: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(cur.clone());
        if cur.len() == rows {
            return;
        }
        for part in 1..=max {
            cur.push(part);
            go(rows, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(rows, cols, &mut Vec::new(), &mut out);
    out
}

/// `s_λ(x_1, …, x_n) = det(e^{(n)}_{λ'_i + j - i})`.
pub fn schur<C: Coefficient>(lambda: &[usize], n: usize) -> Polynomial<C> {
    assert!(is_partition(lambda), "{lambda:?} is not a partition");
    let conj = conjugate(lambda);
    let r = conj.len();
    let m: Vec<Vec<Polynomial<C>>> = (0..r)
        .map(|i| {
            (0..r)
                .map(|j| elementary(conj[i] as i64 + j as i64 - i as i64, n))
                .collect()
        })
        .collect();
    determinant(&m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type P = Polynomial<BigInt>;

    #[test]
    fn small_cases() {
        assert_eq!(conjugate(&[3, 1]), vec![2, 1, 1]);
        assert_eq!(schur::<BigInt>(&[1], 2), &P::x(1) + &P::x(2));
        assert!(schur::<BigInt>(&[], 4).is_one());
        let expected: P = "x1^2*x2 + x1*x2^2".parse().unwrap();
        assert_eq!(schur::<BigInt>(&[2, 1], 2), expected);
        assert!(schur::<BigInt>(&[1, 1, 1], 2).is_zero());
    }

    #[test]
    fn box_enumeration() {
        assert_eq!(partitions_in_box(2, 2).len(), 6);
        assert_eq!(partitions_in_box(3, 3).len(), 20);
    }
}
