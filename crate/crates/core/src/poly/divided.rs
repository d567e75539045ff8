use super::monomial::Exps;
use super::Polynomial;
use crate::perm::Permutation;
use crate::scalar::Coefficient;

/// `∂_i f = (f - s_i f) / (x_i - x_{i+1})`, computed monomial by monomial.
pub fn divided_difference<C: Coefficient>(f: &Polynomial<C>, i: usize) -> Polynomial<C> {
    assert!(i >= 1, "divided differences are indexed from 1");
    let mut out = Polynomial::zero();
    for (m, c) in f.terms() {
        let p = m.x_exp(i);
        let q = m.x_exp(i + 1);
        if p == q {
            continue;
        }
        let (hi, lo, coeff) = if p > q {
            (p, q, c.clone())
        } else {
            (q, p, -c.clone())
        };
        let mut x: Exps = m.x_exps().into();
        if x.len() < i + 1 {
            x.resize(i + 1, 0);
        }
        for t in 0..hi - lo {
            x[i - 1] = hi - 1 - t;
            x[i] = lo + t;
            out.add_term(m.with_x_exps(x.clone()), coeff.clone());
        }
    }
    out
}

/// The defining quotient, by exact polynomial division. Slower than
/// [`divided_difference`]; kept as an independent check.
pub fn divided_difference_by_division<C: Coefficient>(
    f: &Polynomial<C>,
    i: usize,
) -> Polynomial<C> {
    let num = f - &f.swap_vars(i);
    let den = &Polynomial::x(i) - &Polynomial::x(i + 1);
    num.div_exact(&den)
        .expect("antisymmetric numerator is divisible by x_i - x_{i+1}")
}

/// `∂_w f`, applying `∂_i` for each letter of a reduced word of `w`,
/// rightmost letter first.
pub fn divided_difference_word<C: Coefficient>(
    f: &Polynomial<C>,
    w: &Permutation,
) -> Polynomial<C> {
    let mut g = f.clone();
    for &i in w.reduced_word().iter().rev() {
        if g.is_zero() {
            break;
        }
        g = divided_difference(&g, i);
    }
    g
}

/// Applies `∂_{a_1} ⋯ ∂_{a_l}` to `f` for an arbitrary word.
pub fn divided_difference_letters<C: Coefficient>(
    f: &Polynomial<C>,
    word: &[usize],
) -> Polynomial<C> {
    word.iter()
        .rev()
        .fold(f.clone(), |g, &i| divided_difference(&g, i))
}
