use std::cmp::Ordering;

use smallvec::SmallVec;

pub(crate) type Exps = SmallVec<[u16; 8]>;

/// A monomial `x^a q^b` with trailing zero exponents stripped.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    x: Exps,
    q: Exps,
}

fn strip(v: &mut Exps) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn add_into(dst: &mut Exps, src: &[u16]) {
    if dst.len() < src.len() {
        dst.resize(src.len(), 0);
    }
    for (d, s) in dst.iter_mut().zip(src) {
        *d += s;
    }
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn new(x: &[u16], q: &[u16]) -> Self {
        let mut m = Monomial {
            x: x.into(),
            q: q.into(),
        };
        strip(&mut m.x);
        strip(&mut m.q);
        m
    }

    pub fn from_x(x: &[u16]) -> Self {
        Monomial::new(x, &[])
    }

    /// `x_i` for 1-based `i`.
    pub fn var(i: usize) -> Self {
        let mut x = Exps::from_elem(0, i);
        x[i - 1] = 1;
        Monomial { x, q: Exps::new() }
    }

    /// `q_i` for 1-based `i`.
    pub fn qvar(i: usize) -> Self {
        let mut q = Exps::from_elem(0, i);
        q[i - 1] = 1;
        Monomial { x: Exps::new(), q }
    }

    pub fn x_exps(&self) -> &[u16] {
        &self.x
    }

    pub fn q_exps(&self) -> &[u16] {
        &self.q
    }

    /// Exponent of `x_i` (1-based).
    pub fn x_exp(&self, i: usize) -> u16 {
        self.x.get(i - 1).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> u32 {
        self.x.iter().chain(&self.q).map(|&e| e as u32).sum()
    }

    pub fn x_degree(&self) -> u32 {
        self.x.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.x.is_empty() && self.q.is_empty()
    }

    pub fn has_q(&self) -> bool {
        !self.q.is_empty()
    }

    /// Index of the largest `x` variable present, 0 for none.
    pub fn max_x_var(&self) -> usize {
        self.x.len()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = self.clone();
        add_into(&mut out.x, &other.x);
        add_into(&mut out.q, &other.q);
        out
    }

    /// `self / other` if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        fn sub(a: &[u16], b: &[u16]) -> Option<Exps> {
            if b.len() > a.len() {
                return None;
            }
            let mut out: Exps = a.into();
            for (o, &e) in out.iter_mut().zip(b) {
                *o = o.checked_sub(e)?;
            }
            strip(&mut out);
            Some(out)
        }
        Some(Monomial {
            x: sub(&self.x, &other.x)?,
            q: sub(&self.q, &other.q)?,
        })
    }

    pub(crate) fn with_x_exps(&self, x: Exps) -> Monomial {
        let mut m = Monomial {
            x,
            q: self.q.clone(),
        };
        strip(&mut m.x);
        m
    }

    /// Substitutes `x_i -> x_{i+shift}`.
    pub fn shift_x(&self, shift: usize) -> Monomial {
        if self.x.is_empty() {
            return self.clone();
        }
        let mut x = Exps::from_elem(0, shift);
        x.extend_from_slice(&self.x);
        Monomial {
            x,
            q: self.q.clone(),
        }
    }

    pub fn without_q(&self) -> Monomial {
        Monomial {
            x: self.x.clone(),
            q: Exps::new(),
        }
    }
}

fn lex(a: &[u16], b: &[u16]) -> Ordering {
    // Trailing zeros are stripped, so slice order equals zero-padded order.
    a.cmp(b)
}

/// Graded lexicographic order with `x_1 > x_2 > … > q_1 > q_2 > …`.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| lex(&self.x, &other.x))
            .then_with(|| lex(&self.q, &other.q))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_graded_lex() {
        let x1 = Monomial::var(1);
        let x2 = Monomial::var(2);
        let q1 = Monomial::qvar(1);
        assert!(x1 > x2);
        assert!(x2 > q1);
        assert!(x2.mul(&x2) > x1);
        assert!(x1.mul(&x2) < x1.mul(&x1));
        assert!(Monomial::one() < q1);
    }

    #[test]
    fn division_and_stripping() {
        let m = Monomial::from_x(&[3, 1, 0, 0]);
        assert_eq!(m.x_exps(), &[3, 1]);
        assert_eq!(m.div(&Monomial::var(2)), Some(Monomial::from_x(&[3])));
        assert_eq!(m.div(&Monomial::var(3)), None);
        assert_eq!(m.shift_x(2), Monomial::from_x(&[0, 0, 3, 1]));
    }
}
