//! Representations of Schubert polynomials built from permutation structure.

use super::ops::{delete_staircase, lower, product};
use super::{LatticeRep, LprError};
use crate::perm::{factorize, first_violation, PermError, Permutation, Split};
use crate::perm::{top_split, THIRTEEN_PATTERNS};
use crate::poly::conjugate;

fn require_avoids(w: &Permutation, pats: &[&str]) -> Result<(), LprError> {
    let pats: Vec<Permutation> = pats.iter().map(|p| p.parse().expect("valid pattern")).collect();
    match first_violation(w, &pats) {
        Some(occ) => Err(PermError::violation(w, occ).into()),
        None => Ok(()),
    }
}

/// For 132-avoiding `w`: starts `n-1, …, 0`, ends `(code_i, i-1)`, sign
/// `(-1)^{C(n,2) - ℓ(w)}`.
pub fn rep_dominant(w: &Permutation) -> Result<LatticeRep, LprError> {
    require_avoids(w, &["132"])?;
    let n = w.len();
    let starts = (0..n as i64).rev().collect();
    let ends = w.code().entries().iter().enumerate().map(|(i, &b)| (b as i64, i as u32)).collect();
    let sign = if (n * (n - 1) / 2 - w.length()).is_multiple_of(2) { 1 } else { -1 };
    Ok(LatticeRep::new(starts, ends, sign)?.with_label(w.to_string()))
}

/// For 213-avoiding `w`: starts `0, …, n-1`, ends `(b_{n+1-i}, i-1)` with
/// `b = code(w_0 w w_0)`, sign `+1`.
pub fn rep_213(w: &Permutation) -> Result<LatticeRep, LprError> {
    require_avoids(w, &["213"])?;
    let n = w.len();
    let w0 = Permutation::longest(n);
    let code = (&(&w0 * w) * &w0).code();
    let starts = (0..n as i64).collect();
    let ends = code.entries().iter().rev().enumerate().map(|(h, &b)| (b as i64, h as u32)).collect();
    Ok(LatticeRep::new(starts, ends, 1)?.with_label(w.to_string()))
}

fn compact_unsorted(w: &Permutation) -> Result<LatticeRep, LprError> {
    let n = w.len();
    match top_split(w) {
        None if n == 1 => LatticeRep::new(vec![0], vec![(0, 0)], 1),
        None => {
            require_avoids(w, &["2413", "3142"])?;
            unreachable!("sum-indecomposable words of length > 1 are not separable")
        }
        Some(Split::Skew(u, v)) => {
            let m = u.len() as i64;
            let shift = n as i64 - m;
            let ru = compact_unsorted(&u)?;
            let rv = compact_unsorted(&v)?;
            let starts = ru.starts().iter().map(|a| a + shift).chain(rv.starts().iter().copied()).collect();
            let ends = ru
                .ends()
                .iter()
                .map(|&(b, c)| (b + shift, c))
                .chain(rv.ends().iter().map(|&(b, c)| (b, c + m as u32)))
                .collect();
            LatticeRep::new(starts, ends, ru.sign() * rv.sign())
        }
        Some(Split::Direct(u, v)) => {
            let m = u.len();
            let ru = rep_dominant(&u)?;
            let v1 = Permutation::identity(m).direct_sum(&v);
            let rv = delete_staircase(&rep_213(&v1)?, 0, m as u32 - 1)?;
            product(&rv, &ru)
        }
    }
}

/// A compact representation for `w` avoiding 1324, 2413 and 3142, built
/// along the leftmost separable decomposition.
pub fn compact_rep(w: &Permutation) -> Result<LatticeRep, LprError> {
    require_avoids(w, &["1324", "2413", "3142"])?;
    Ok(compact_unsorted(w)?.normalized().with_label(w.to_string()))
}

/// A proper representation for `w` avoiding the thirteen patterns: the
/// compact representation of `u` lowered by `v`, where `w = u v`.
pub fn proper_rep(w: &Permutation) -> Result<LatticeRep, LprError> {
    let pats: Vec<&str> = THIRTEEN_PATTERNS.to_vec();
    require_avoids(w, &pats)?;
    let f = factorize(w)?;
    Ok(lower(&compact_rep(&f.u)?, &f.v)?.normalized().with_label(w.to_string()))
}

/// For 321-avoiding `w`: with `q̄` the values that are not left-to-right
/// maxima and `p̄` their positions, starts `q̄_i - 1` and ends `(0, p̄_i - 1)`.
pub fn rep_321(w: &Permutation) -> Result<LatticeRep, LprError> {
    require_avoids(w, &["321"])?;
    let maxima = w.left_to_right_maxima();
    let others: Vec<usize> = (1..=w.len()).filter(|p| !maxima.contains(p)).collect();
    let starts = others.iter().map(|&p| w.at(p) as i64 - 1).collect();
    let ends = others.iter().map(|&p| (0, p as u32 - 1)).collect();
    Ok(LatticeRep::new(starts, ends, 1)?.with_label(w.to_string()))
}

/// Represents `s_λ(x_1, …, x_n)` by `det(e^{(n+j-1)}_{λ'_i + j - i})`.
pub fn rep_grassmannian(lambda: &[usize], n: usize) -> LatticeRep {
    let conj = conjugate(lambda);
    let starts = conj.iter().enumerate().map(|(i, &l)| (n + i) as i64 - l as i64).collect();
    let ends = (0..conj.len()).map(|j| (0, (n + j) as u32)).collect();
    let parts: Vec<String> = lambda.iter().map(|p| p.to_string()).collect();
    LatticeRep::new(starts, ends, 1).expect("sizes agree").with_label(format!("s({}; n={n})", parts.join(",")))
}

/// A proper representation of `𝔖_{413625}`, outside the thirteen-pattern class.
pub fn rep_413625() -> LatticeRep {
    LatticeRep::new(vec![0, 1, 2, 5], vec![(0, 1), (0, 2), (1, 4), (1, 5)], 1)
        .expect("fixed data")
        .with_label("413625")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lpr::ops::divided_difference;
    use crate::perm::{avoids_all, avoids_thirteen};
    use crate::poly::{schur, Polynomial};
    use crate::schubert::{schubert, schubert_table};
    use num_bigint::BigInt;

    type P = Polynomial<BigInt>;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn pats(ps: &[&str]) -> Vec<Permutation> {
        ps.iter().map(|s| p(s)).collect()
    }

    #[test]
    fn dominant_examples() {
        let r = rep_dominant(&p("321")).unwrap();
        assert_eq!(r.ends(), &[(2, 0), (1, 1), (0, 2)]);
        assert_eq!(r.sign(), 1);
        assert_eq!(r.determinant::<BigInt>(), "x1^2*x2".parse::<P>().unwrap());
        assert!(rep_dominant(&Permutation::identity(4)).unwrap().determinant::<BigInt>().is_one());
        assert!(rep_dominant(&p("132")).is_err());
    }

    #[test]
    fn families_in_s5() {
        let table = schubert_table::<BigInt>(5);
        for (w, s) in &table {
            if let Ok(r) = rep_dominant(w) {
                assert_eq!(r.determinant::<BigInt>(), *s, "dominant {w}");
                assert!(r.is_compact());
            }
            if let Ok(r) = rep_213(w) {
                assert_eq!(r.determinant::<BigInt>(), *s, "213 {w}");
            }
            if let Ok(r) = rep_321(w) {
                assert_eq!(r.determinant::<BigInt>(), *s, "321 {w}");
            }
            if avoids_all(w, &pats(&["1324", "2413", "3142"])) {
                let r = compact_rep(w).unwrap();
                assert!(r.is_compact() && r.is_parking(), "{w}");
                assert_eq!(r.determinant::<BigInt>(), *s, "compact {w}");
            }
            if avoids_thirteen(w) {
                let r = proper_rep(w).unwrap();
                assert!(r.is_proper());
                assert_eq!(r.determinant::<BigInt>(), *s, "proper {w}");
            }
        }
    }

    #[test]
    fn worked_compact_examples() {
        let r = compact_rep(&p("321564")).unwrap();
        assert_eq!(r.starts(), &[0, 1, 2, 3, 4, 5]);
        assert_eq!(r.ends(), &[(2, 0), (1, 1), (0, 2), (0, 3), (0, 4), (2, 5)]);
        let r = compact_rep(&p("87321564")).unwrap();
        assert_eq!(r.ends(), &[(7, 0), (6, 1), (2, 2), (1, 3), (0, 4), (0, 5), (0, 6), (2, 7)]);
        assert_eq!(r.determinant::<BigInt>(), schubert(&p("87321564")));
        let r = rep_213(&p("123564")).unwrap();
        assert_eq!(r.ends()[5], (2, 5));
        let r = proper_rep(&p("32157684")).unwrap();
        assert_eq!(r.starts(), &[0, 1, 3, 4, 5]);
        assert_eq!(r.ends(), &[(1, 1), (0, 2), (0, 3), (0, 5), (2, 7)]);
        assert_eq!(r.determinant::<BigInt>(), schubert(&p("32157684")));
        assert!(compact_rep(&p("1")).unwrap().determinant::<BigInt>().is_one());
        assert!(proper_rep(&p("51324")).is_err());
    }

    #[test]
    fn avoiding_321_and_grassmannian_examples() {
        let r = rep_321(&p("2143")).unwrap();
        assert_eq!(r.starts(), &[0, 2]);
        assert_eq!(r.ends(), &[(0, 1), (0, 3)]);
        assert_eq!(r.determinant::<BigInt>(), "x1^2 + x1*x2 + x1*x3".parse::<P>().unwrap());
        assert!(rep_321(&Permutation::identity(3)).unwrap().is_empty());
        assert_eq!(rep_grassmannian(&[1], 2).determinant::<BigInt>(), &P::x(1) + &P::x(2));
        assert_eq!(rep_grassmannian(&[2, 1], 2).determinant::<BigInt>(), schur::<BigInt>(&[2, 1], 2));
        assert!(rep_grassmannian(&[2, 1], 2).is_proper());
    }

    #[test]
    fn fixture_413625_and_its_descendants() {
        let r = rep_413625();
        assert_eq!(r.determinant::<BigInt>(), schubert(&p("413625")));
        let r1 = divided_difference(&r, 4).unwrap().unwrap();
        assert_eq!(r1.determinant::<BigInt>(), schubert(&p("413265")));
        let r2 = divided_difference(&r, 1).unwrap().unwrap();
        assert_eq!(r2.determinant::<BigInt>(), schubert(&p("143625")));
        let r3 = divided_difference(&r1, 1).unwrap().unwrap();
        assert_eq!(r3.determinant::<BigInt>(), schubert(&p("143265")));
        assert!(r1.is_proper() && r2.is_proper() && r3.is_proper());
    }
}
