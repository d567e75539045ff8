//! Text, LaTeX and JSON forms of polynomials.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::sem::SemExpansion;
use super::{Monomial, PolyError, Polynomial};
use crate::scalar::Coefficient;

/// Writes `b_1 + c_2*b_2 - b_3 …`; an empty body stands for the unit.
pub(crate) fn write_signed_terms<'a, C: Coefficient>(
    f: &mut impl fmt::Write,
    terms: impl Iterator<Item = (String, &'a C)>,
) -> fmt::Result {
    write_terms(f, terms, "*")
}

fn write_terms<'a, C: Coefficient>(
    f: &mut impl fmt::Write,
    terms: impl Iterator<Item = (String, &'a C)>,
    times: &str,
) -> fmt::Result {
    let mut first = true;
    for (body, c) in terms {
        let neg = c.is_negative();
        match (first, neg) {
            (true, true) => f.write_str("-")?,
            (true, false) => {}
            (false, true) => f.write_str(" - ")?,
            (false, false) => f.write_str(" + ")?,
        }
        first = false;
        let abs = c.abs();
        if body.is_empty() {
            write!(f, "{abs}")?;
        } else if abs.is_one() {
            f.write_str(&body)?;
        } else {
            write!(f, "{abs}{times}{body}")?;
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

fn monomial_text(m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (name, exps) in [("x", m.x_exps()), ("q", m.q_exps())] {
        for (i, &e) in exps.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(format!("{name}{}", i + 1)),
                e => parts.push(format!("{name}{}^{e}", i + 1)),
            }
        }
    }
    parts.join("*")
}

fn braced(v: impl fmt::Display) -> String {
    let s = v.to_string();
    if s.len() == 1 {
        s
    } else {
        format!("{{{s}}}")
    }
}

fn monomial_latex(m: &Monomial) -> String {
    let mut out = String::new();
    for (name, exps) in [("x", m.x_exps()), ("q", m.q_exps())] {
        for (i, &e) in exps.iter().enumerate() {
            match e {
                0 => {}
                1 => out += &format!("{name}_{}", braced(i + 1)),
                e => out += &format!("{name}_{}^{}", braced(i + 1), braced(e)),
            }
        }
    }
    out
}

impl<C: Coefficient> fmt::Display for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_signed_terms(f, self.terms().rev().map(|(m, c)| (monomial_text(m), c)))
    }
}

impl<C: Coefficient> Polynomial<C> {
    pub fn to_latex(&self) -> String {
        let mut s = String::new();
        write_terms(
            &mut s,
            self.terms().rev().map(|(m, c)| (monomial_latex(m), c)),
            "",
        )
        .expect("writing to a String");
        s
    }
}

impl<C: Coefficient> SemExpansion<C> {
    pub fn to_latex(&self) -> String {
        let m = self.width();
        let mut s = String::new();
        write_terms(
            &mut s,
            self.iter().rev().map(|(idx, c)| {
                let body = if idx.is_empty() {
                    String::new()
                } else {
                    format!("e_{{{}}}", idx.digits(m))
                };
                (body, c)
            }),
            "",
        )
        .expect("writing to a String");
        s
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, what: &str) -> PolyError {
        PolyError::Parse(format!("{what} at offset {}", self.pos))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Result<&'a str, PolyError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        Ok(std::str::from_utf8(&self.s[start..self.pos]).expect("ascii digits"))
    }

    /// `7`, `_7` or `_{12}`.
    fn subscript(&mut self) -> Result<usize, PolyError> {
        let braced = self.eat(b'_') && self.eat(b'{');
        let v = self
            .digits()?
            .parse()
            .map_err(|_| self.err("index too large"))?;
        if braced && !self.eat(b'}') {
            return Err(self.err("expected '}'"));
        }
        Ok(v)
    }

    fn exponent(&mut self) -> Result<u16, PolyError> {
        if !self.eat(b'^') {
            return Ok(1);
        }
        let braced = self.eat(b'{');
        let v = self
            .digits()?
            .parse()
            .map_err(|_| self.err("exponent too large"))?;
        if braced && !self.eat(b'}') {
            return Err(self.err("expected '}'"));
        }
        Ok(v)
    }

    fn term<C: Coefficient>(&mut self) -> Result<(Monomial, C), PolyError> {
        let mut coeff = C::one();
        let mut mono = Monomial::one();
        let mut any = false;
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let d = self.digits()?;
                    coeff = coeff * d.parse::<C>().map_err(|_| self.err("bad integer"))?;
                }
                Some(c @ (b'x' | b'q')) => {
                    self.pos += 1;
                    let i = self.subscript()?;
                    if i == 0 {
                        return Err(self.err("variables are numbered from 1"));
                    }
                    let e = self.exponent()?;
                    let mut exps = vec![0u16; i];
                    exps[i - 1] = e;
                    let factor = if c == b'x' {
                        Monomial::new(&exps, &[])
                    } else {
                        Monomial::new(&[], &exps)
                    };
                    mono = mono.mul(&factor);
                }
                _ => break,
            }
            any = true;
            self.eat(b'*');
        }
        if !any {
            return Err(self.err("expected a term"));
        }
        Ok((mono, coeff))
    }
}

impl<C: Coefficient> FromStr for Polynomial<C> {
    type Err = PolyError;

    /// Accepts sums of terms like `3*x1^2*x2`, `x_1^{3}x_2`, `-q1` and `0`.
    fn from_str(s: &str) -> Result<Self, PolyError> {
        let mut p = Parser {
            s: s.as_bytes(),
            pos: 0,
        };
        let mut out = Polynomial::zero();
        let mut neg = p.eat(b'-');
        if !neg {
            p.eat(b'+');
        }
        loop {
            let (m, c) = p.term::<C>()?;
            out.add_term(m, if neg { -c } else { c });
            if p.eat(b'+') {
                neg = false;
            } else if p.eat(b'-') {
                neg = true;
            } else if p.peek().is_none() {
                return Ok(out);
            } else {
                return Err(p.err("unexpected character"));
            }
        }
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    exps: Vec<u16>,
    #[serde(default)]
    qexps: Vec<u16>,
    coeff: String,
}

impl<C: Coefficient> Serialize for Polynomial<C> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.terms().rev().map(|(m, c)| TermJson {
            exps: m.x_exps().to_vec(),
            qexps: m.q_exps().to_vec(),
            coeff: c.to_string(),
        }))
    }
}

impl<'de, C: Coefficient> Deserialize<'de> for Polynomial<C> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let terms = Vec::<TermJson>::deserialize(d)?;
        let mut out = Polynomial::zero();
        for t in terms {
            let c: C = t
                .coeff
                .parse()
                .map_err(|_| serde::de::Error::custom(format!("bad coefficient {}", t.coeff)))?;
            if c.is_zero() {
                continue;
            }
            out.add_term(Monomial::new(&t.exps, &t.qexps), c);
        }
        Ok(out)
    }
}
