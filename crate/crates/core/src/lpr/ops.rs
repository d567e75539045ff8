//! Operations on representations. Each one states the polynomial its output
//! represents in terms of the polynomial `F` represented by its input.

use super::{reachable, LatticeRep, LprError};
use crate::perm::LoweringPermutation;

/// Still represents `F`: the end `(b+1, c)` becomes `(b, c+1)`, given
/// that `(b, c)` is also an end.
pub fn pull(rep: &LatticeRep, b: i64, c: u32) -> Result<LatticeRep, LprError> {
    rep.require_end(b, c)?;
    let j = rep.require_end(b + 1, c)?;
    let mut out = rep.clone();
    out.parts_mut().1[j] = (b, c + 1);
    Ok(out)
}

/// Whether `∂_c F = 0` follows because no end sits at height `c`.
pub fn drop_is_zero(rep: &LatticeRep, c: u32) -> bool {
    rep.ends_at_height(c).is_empty()
}

fn unique_at(rep: &LatticeRep, c: u32) -> Result<usize, LprError> {
    match rep.ends_at_height(c).as_slice() {
        &[j] => Ok(j),
        other => Err(LprError::HeightNotUnique { c, found: other.len() }),
    }
}

/// Represents `∂_c F`: the unique end at height `c ≥ 1` moves down by one.
pub fn drop(rep: &LatticeRep, c: u32) -> Result<LatticeRep, LprError> {
    assert!(c >= 1, "divided differences are indexed from 1");
    let j = unique_at(rep, c)?;
    let mut out = rep.clone();
    out.parts_mut().1[j].1 = c - 1;
    Ok(out)
}

/// Represents `∂_c F`. With `(b, c)` the unique end at height `c` and
/// `(b+1, c-1)` also an end, the latter moves to `(b, c-1)` and the sign
/// flips.
pub fn slide_left_below(rep: &LatticeRep, c: u32) -> Result<LatticeRep, LprError> {
    let j = unique_at(rep, c)?;
    let b = rep.ends()[j].0;
    let k = rep.require_end(b + 1, c - 1)?;
    let mut out = rep.clone();
    out.parts_mut().1[k] = (b, c - 1);
    out.negate();
    Ok(out)
}

/// Represents `∂_c F`. With `(b, c)` the unique end at height `c` and
/// `(b-1, c-1)` also an end, `(b, c)` moves to `(b-1, c)`.
pub fn slide_left_at(rep: &LatticeRep, c: u32) -> Result<LatticeRep, LprError> {
    let j = unique_at(rep, c)?;
    let b = rep.ends()[j].0;
    rep.require_end(b - 1, c - 1)?;
    let mut out = rep.clone();
    out.parts_mut().1[j] = (b - 1, c);
    Ok(out)
}

/// Represents `∂_c F` by whichever of slide or drop applies, preferring the
/// height-preserving slides. `Ok(None)` means `∂_c F = 0`.
pub fn divided_difference(rep: &LatticeRep, c: u32) -> Result<Option<LatticeRep>, LprError> {
    if drop_is_zero(rep, c) {
        return Ok(None);
    }
    if let Ok(r) = slide_left_at(rep, c) {
        return Ok(Some(r));
    }
    if let Ok(r) = slide_left_below(rep, c) {
        return Ok(Some(r));
    }
    drop(rep, c).map(Some)
}

/// Represents `F · G` when no start of `f` reaches an end of `g`.
pub fn product(f: &LatticeRep, g: &LatticeRep) -> Result<LatticeRep, LprError> {
    for &a in f.starts() {
        for &(b, c) in g.ends() {
            if reachable(a, b, c) {
                return Err(LprError::Reachable { a, b, c });
            }
        }
    }
    let starts = f.starts().iter().chain(g.starts()).copied().collect();
    let ends = f.ends().iter().chain(g.ends()).copied().collect();
    LatticeRep::new(starts, ends, f.sign() * g.sign())
}

/// Shifts every point horizontally by `dx`; the polynomial is unchanged.
pub fn translate(rep: &LatticeRep, dx: i64) -> LatticeRep {
    let mut out = rep.clone();
    let (starts, ends) = out.parts_mut();
    starts.iter_mut().for_each(|a| *a += dx);
    ends.iter_mut().for_each(|e| e.0 += dx);
    out
}

/// Parity of listing `picked` first (in the given order), then the rest in
/// their original order.
fn move_to_front_parity(picked: &[usize], len: usize) -> bool {
    let mut order: Vec<usize> = picked.to_vec();
    order.extend((0..len).filter(|i| !picked.contains(i)));
    let mut odd = false;
    for i in 0..len {
        for j in i + 1..len {
            if order[i] > order[j] {
                odd = !odd;
            }
        }
    }
    odd
}

/// Still represents `F`: removes starts `a, …, a+s` and ends
/// `(a, 0), …, (a, s)`.
pub fn delete_staircase(rep: &LatticeRep, a: i64, s: u32) -> Result<LatticeRep, LprError> {
    let rows: Vec<usize> = (0..=s as i64).map(|t| rep.require_start(a + t)).collect::<Result<_, _>>()?;
    let cols: Vec<usize> = (0..=s).map(|t| rep.require_end(a, t)).collect::<Result<_, _>>()?;
    let k = rep.len();
    let odd = move_to_front_parity(&rows, k) ^ move_to_front_parity(&cols, k);
    let starts = (0..k).filter(|i| !rows.contains(i)).map(|i| rep.starts()[i]).collect();
    let ends = (0..k).filter(|j| !cols.contains(j)).map(|j| rep.ends()[j]).collect();
    let mut out = LatticeRep::new(starts, ends, rep.sign())?;
    if odd {
        out.negate();
    }
    out.label = rep.label.clone();
    Ok(out)
}

/// Represents `∂_{v⁻¹} F` for a representation whose ends occupy heights
/// `0, …, n-1` exactly once each: for each `p_r` in turn, the floor point is
/// deleted together with the start below it, and the points at heights
/// `1, …, p_r - 1` drop by one.
pub fn lower(rep: &LatticeRep, v: &LoweringPermutation) -> Result<LatticeRep, LprError> {
    let n = rep.len();
    if v.len() != n {
        return Err(LprError::LoweringSize { v: v.len(), k: n });
    }
    let mut heights: Vec<u32> = rep.ends().iter().map(|&(_, c)| c).collect();
    heights.sort();
    if heights != (0..n as u32).collect::<Vec<_>>() {
        return Err(LprError::NotStaircaseHeights { k: n });
    }
    let mut cur = rep.clone();
    for &p in v.descent_positions() {
        let j = unique_at(&cur, 0)?;
        let b = cur.ends()[j].0;
        cur = delete_staircase(&cur, b, 0)?;
        for c in 1..p as u32 {
            cur = drop(&cur, c)?;
        }
    }
    Ok(cur)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;
    use crate::poly::{divided_difference as dd, Polynomial};
    use num_bigint::BigInt;

    type P = Polynomial<BigInt>;

    fn rep(starts: &[i64], ends: &[(i64, u32)]) -> LatticeRep {
        LatticeRep::new(starts.to_vec(), ends.to_vec(), 1).unwrap()
    }

    fn det(r: &LatticeRep) -> P {
        r.determinant()
    }

    #[test]
    fn slide_example() {
        let f = rep(&[0, 1, 2], &[(0, 2), (1, 1), (1, 3)]);
        assert_eq!(det(&f), "x1^3*x2^2 + x1^3*x2*x3".parse::<P>().unwrap());
        let a = slide_left_below(&f, 2).unwrap();
        assert_eq!(det(&a), "x1^3*x2 + x1^3*x3".parse::<P>().unwrap());
        assert_eq!(a.clone().normalized().ends(), &[(0, 1), (0, 2), (1, 3)]);
        let b = slide_left_at(&f, 3).unwrap();
        assert_eq!(det(&b), "x1^3*x2".parse::<P>().unwrap());
        assert_eq!(det(&drop(&f, 3).unwrap()), dd(&det(&f), 3));
        assert!(drop_is_zero(&f, 4));
        assert!(dd(&det(&f), 4).is_zero());
    }

    #[test]
    fn pull_example() {
        let r = rep(&[0, 1, 2], &[(0, 2), (1, 2), (2, 0)]);
        let p = pull(&r, 0, 2).unwrap();
        assert_eq!(p.ends(), &[(0, 2), (0, 3), (2, 0)]);
        assert_eq!(det(&p), det(&r));
        assert!(pull(&r, 1, 2).is_err());
    }

    #[test]
    fn product_and_translate() {
        let f = rep(&[0], &[(0, 1)]);
        let g = rep(&[0], &[(0, 2)]);
        assert!(matches!(product(&f, &g), Err(LprError::Reachable { .. })));
        let g = translate(&g, 5);
        assert_eq!(det(&product(&f, &g).unwrap()), &det(&f) * &det(&g));
        let id = rep(&[9, 8], &[(9, 0), (7, 1)]);
        assert_eq!(det(&product(&id, &f).unwrap()), det(&f));
    }

    #[test]
    fn delete_keeps_polynomial() {
        let r = rep(&[0, 1, 2, 3], &[(0, 1), (1, 0), (2, 2), (1, 1)]);
        let before = det(&r);
        let d = delete_staircase(&r, 1, 1).unwrap();
        assert_eq!(d.len(), 2);
        assert_eq!(det(&d), before);
        assert!(delete_staircase(&r, 0, 3).is_err());
    }

    #[test]
    fn lowering_example() {
        let u = rep(&[0, 1, 2, 3, 4, 5, 6, 7], &[(7, 0), (6, 1), (2, 2), (1, 3), (0, 4), (0, 5), (0, 6), (2, 7)]);
        let v = LoweringPermutation::new("34562718".parse().unwrap()).unwrap();
        let w = lower(&u, &v).unwrap().normalized();
        assert_eq!(w.starts(), &[0, 1, 3, 4, 5]);
        assert_eq!(w.ends(), &[(1, 1), (0, 2), (0, 3), (0, 5), (2, 7)]);
        let vinv = v.base().inverse();
        assert_eq!(det(&w), crate::poly::divided_difference_word(&det(&u), &vinv));
        let same = lower(&u, &LoweringPermutation::new(Permutation::identity(8)).unwrap()).unwrap();
        assert_eq!(det(&same), det(&u));
    }
}
