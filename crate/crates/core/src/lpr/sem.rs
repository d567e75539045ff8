use super::{LatticeRep, LprError};
use crate::perm::Permutation;
use crate::poly::{determinant, Polynomial, SemExpansion, SemIndex};
use crate::scalar::Coefficient;
use crate::schubert::quantum_elementary;

/// Reads the SEM expansion off a proper representation: every nonvanishing
/// Leibniz term `∏_j e^{(c_j)}_{d_j}` is a single SEM with `j_{c_j} = d_j`.
pub fn sem_of_proper<C: Coefficient>(rep: &LatticeRep) -> Result<SemExpansion<C>, LprError> {
    if !rep.is_proper() {
        return Err(LprError::NotProper);
    }
    let k = rep.len();
    let width = rep.max_height() as usize;
    let mut out = SemExpansion::new();
    // degree d of e^{(c_j)} for start i and end j, if the entry is nonzero
    let entry = |i: usize, j: usize| -> Option<u32> {
        let (b, c) = rep.ends()[j];
        let d = c as i64 + b - rep.starts()[i];
        (0..=c as i64).contains(&d).then_some(d as u32)
    };
    for sigma in Permutation::all(k.max(1)) {
        if k == 0 {
            out.add(SemIndex::one(), C::from_i64(rep.sign() as i64));
            break;
        }
        let mut js = vec![0u32; width];
        let mut ok = true;
        for i in 0..k {
            let j = sigma.at(i + 1) - 1;
            match entry(i, j) {
                Some(d) => {
                    let c = rep.ends()[j].1 as usize;
                    if c > 0 {
                        js[c - 1] = d;
                    }
                }
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if ok {
            let s = sigma.sign() as i64 * rep.sign() as i64;
            out.add(SemIndex::new(js).expect("j_c ≤ c by construction"), C::from_i64(s));
        }
    }
    Ok(out)
}

/// `sign · det(E^{(c_j)}_{c_j + b_j - a_i})` for a proper representation.
pub fn rep_determinant_quantum<C: Coefficient>(rep: &LatticeRep) -> Result<Polynomial<C>, LprError> {
    if !rep.is_proper() {
        return Err(LprError::NotProper);
    }
    let m: Vec<Vec<Polynomial<C>>> = rep
        .starts()
        .iter()
        .map(|&a| rep.ends().iter().map(|&(b, c)| quantum_elementary(c as i64 + b - a, c as usize)).collect())
        .collect();
    let d = determinant(&m);
    Ok(if rep.sign() < 0 { -d } else { d })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lpr::{proper_rep, rep_413625};
    use crate::perm::avoids_thirteen;
    use crate::poly::sem_expand;
    use crate::schubert::quantum_schubert;
    use num_bigint::BigInt;

    #[test]
    fn worked_example() {
        let rep = LatticeRep::new(vec![0, 1, 2], vec![(0, 1), (0, 2), (1, 3)], 1).unwrap();
        let sem = sem_of_proper::<BigInt>(&rep).unwrap();
        assert_eq!(sem.to_string(), "e112 - e103 - e022");
        let improper = LatticeRep::new(vec![0, 1], vec![(0, 1), (1, 1)], 1).unwrap();
        assert!(matches!(sem_of_proper::<BigInt>(&improper), Err(LprError::NotProper)));
        let id = LatticeRep::new(vec![0, 1], vec![(0, 0), (0, 1)], 1).unwrap();
        assert_eq!(sem_of_proper::<BigInt>(&id).unwrap().to_string(), "1");
        assert_eq!(sem_of_proper::<BigInt>(&LatticeRep::empty()).unwrap().to_string(), "1");
    }

    #[test]
    fn agrees_with_sem_expand_in_s5() {
        for w in Permutation::all(5).filter(avoids_thirteen) {
            let rep = proper_rep(&w).unwrap();
            let sem = sem_of_proper::<BigInt>(&rep).unwrap();
            assert_eq!(sem, sem_expand(&rep.determinant::<BigInt>(), 4).unwrap(), "{w}");
            assert!(sem.iter().all(|(_, c)| c.magnitude() == &1u32.into()));
            assert_eq!(rep_determinant_quantum::<BigInt>(&rep).unwrap(), quantum_schubert(&w).unwrap(), "{w}");
        }
    }

    #[test]
    fn quantum_fixture() {
        let rep = rep_413625();
        let q = rep_determinant_quantum::<BigInt>(&rep).unwrap();
        assert_eq!(q.at_q_zero(), rep.determinant());
        assert_eq!(q, quantum_schubert(&"413625".parse().unwrap()).unwrap());
    }
}
