//! Standard elementary monomials `e_{j_1 j_2 ⋯} = ∏ e_{j_k}^{(k)}` and
//! expansion of polynomials in that basis.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{Monomial, PolyError, Polynomial};
use crate::scalar::Coefficient;

/// `e_j^{(k)}`, the `j`-th elementary symmetric polynomial in `x_1, …, x_k`.
pub fn elementary<C: Coefficient>(j: i64, k: usize) -> Polynomial<C> {
    if j < 0 || j as usize > k {
        return Polynomial::zero();
    }
    let j = j as usize;
    Polynomial::from_terms((1..=k).combinations(j).map(|vars| {
        let mut x = vec![0u16; k];
        for v in vars {
            x[v - 1] = 1;
        }
        (Monomial::from_x(&x), C::one())
    }))
}

/// A sequence `(j_1, …, j_m)` with `0 ≤ j_k ≤ k`, trailing zeros stripped.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct SemIndex {
    js: Vec<u32>,
}

impl SemIndex {
    pub fn new(mut js: Vec<u32>) -> Result<Self, PolyError> {
        if js.iter().enumerate().any(|(k, &j)| j as usize > k + 1) {
            return Err(PolyError::BadSemIndex(js));
        }
        while js.last() == Some(&0) {
            js.pop();
        }
        Ok(SemIndex { js })
    }

    pub fn one() -> Self {
        SemIndex::default()
    }

    pub fn js(&self) -> &[u32] {
        &self.js
    }

    /// `j_k` for 1-based `k`.
    pub fn get(&self, k: usize) -> u32 {
        self.js.get(k - 1).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> u32 {
        self.js.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.js.len()
    }

    pub fn is_empty(&self) -> bool {
        self.js.is_empty()
    }

    /// Renders the index padded with zeros to length `m`, as in `e_{022}`.
    pub fn digits(&self, m: usize) -> String {
        let width = m.max(self.js.len());
        let padded = (1..=width).map(|k| self.get(k));
        if self.js.iter().any(|&j| j > 9) {
            padded.map(|j| j.to_string()).join(",")
        } else {
            padded.map(|j| j.to_string()).collect()
        }
    }
}

impl TryFrom<Vec<u32>> for SemIndex {
    type Error = PolyError;
    fn try_from(js: Vec<u32>) -> Result<Self, PolyError> {
        SemIndex::new(js)
    }
}

impl From<SemIndex> for Vec<u32> {
    fn from(idx: SemIndex) -> Self {
        idx.js
    }
}

impl fmt::Display for SemIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.digits(0))
    }
}

/// `∏_k e_{j_k}^{(k)}`.
pub fn sem_monomial<C: Coefficient>(idx: &SemIndex) -> Polynomial<C> {
    idx.js
        .iter()
        .enumerate()
        .filter(|(_, &j)| j > 0)
        .map(|(k, &j)| elementary::<C>(j as i64, k + 1))
        .product()
}

/// A finite integer combination of standard elementary monomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemExpansion<C> {
    coeffs: BTreeMap<SemIndex, C>,
}

impl<C: Coefficient> Default for SemExpansion<C> {
    fn default() -> Self {
        SemExpansion {
            coeffs: BTreeMap::new(),
        }
    }
}

impl<C: Coefficient> SemExpansion<C> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, idx: SemIndex, c: C) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(idx.clone()).or_insert_with(C::zero);
        *entry = entry.clone() + c;
        if entry.is_zero() {
            self.coeffs.remove(&idx);
        }
    }

    pub fn get(&self, idx: &SemIndex) -> C {
        self.coeffs.get(idx).cloned().unwrap_or_else(C::zero)
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&SemIndex, &C)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn max_abs(&self) -> C {
        self.coeffs
            .values()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(C::zero)
    }

    /// Longest index length among the terms.
    pub fn width(&self) -> usize {
        self.coeffs.keys().map(SemIndex::len).max().unwrap_or(0)
    }

    /// `Σ α · basis(idx)` for an arbitrary substitution of the basis.
    pub fn evaluate_with(
        &self,
        mut basis: impl FnMut(&SemIndex) -> Polynomial<C>,
    ) -> Polynomial<C> {
        let mut out = Polynomial::zero();
        for (idx, c) in &self.coeffs {
            out += &basis(idx).scale(c);
        }
        out
    }

    pub fn evaluate(&self) -> Polynomial<C> {
        self.evaluate_with(sem_monomial)
    }
}

impl<C: Coefficient> FromIterator<(SemIndex, C)> for SemExpansion<C> {
    fn from_iter<I: IntoIterator<Item = (SemIndex, C)>>(iter: I) -> Self {
        let mut e = SemExpansion::new();
        for (idx, c) in iter {
            e.add(idx, c);
        }
        e
    }
}

impl<C: Coefficient> fmt::Display for SemExpansion<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.width();
        super::format::write_signed_terms(
            f,
            self.coeffs.iter().rev().map(|(idx, c)| {
                let body = if idx.is_empty() {
                    String::new()
                } else {
                    format!("e{}", idx.digits(m))
                };
                (body, c)
            }),
        )
    }
}

#[derive(Serialize, Deserialize)]
struct SemTermJson {
    index: SemIndex,
    coeff: String,
}

impl<C: Coefficient> Serialize for SemExpansion<C> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs.iter().map(|(idx, c)| SemTermJson {
            index: idx.clone(),
            coeff: c.to_string(),
        }))
    }
}

impl<'de, C: Coefficient> Deserialize<'de> for SemExpansion<C> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let terms = Vec::<SemTermJson>::deserialize(d)?;
        terms
            .into_iter()
            .map(|t| {
                let c = t.coeff.parse::<C>().map_err(|_| {
                    serde::de::Error::custom(format!("bad coefficient {}", t.coeff))
                })?;
                Ok((t.index, c))
            })
            .collect()
    }
}

/// Exponent vectors `a` of degree `d` with `a_i ≤ m + 1 - i`; the span of
/// these monomials is the span of the SEMs with `k ≤ m`.
pub fn staircase_monomials(m: usize, d: u32) -> Vec<Monomial> {
    let caps: Vec<u32> = (1..=m).map(|i| (m + 1 - i) as u32).collect();
    bounded_compositions(&caps, d)
        .into_iter()
        .map(|a| Monomial::from_x(&a.iter().map(|&e| e as u16).collect::<Vec<_>>()))
        .collect()
}

/// All SEM indices of degree `d` with `k ≤ m`.
pub fn sem_indices(m: usize, d: u32) -> Vec<SemIndex> {
    let caps: Vec<u32> = (1..=m as u32).collect();
    bounded_compositions(&caps, d)
        .into_iter()
        .map(|js| SemIndex::new(js).expect("bounded by construction"))
        .collect()
}

fn bounded_compositions(caps: &[u32], d: u32) -> Vec<Vec<u32>> {
    fn go(caps: &[u32], left: u32, room: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        let i = cur.len();
        if i == caps.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let rest = room - caps[i];
        for e in left.saturating_sub(rest)..=caps[i].min(left) {
            cur.push(e);
            go(caps, left - e, rest, cur, out);
            cur.pop();
        }
    }
    let room: u32 = caps.iter().sum();
    let mut out = Vec::new();
    if d <= room {
        go(caps, d, room, &mut Vec::new(), &mut out);
    }
    out
}

pub fn in_staircase(m: &Monomial, bound: usize) -> bool {
    !m.has_q()
        && m.max_x_var() <= bound
        && m.x_exps()
            .iter()
            .enumerate()
            .all(|(i, &e)| e as usize <= bound - i)
}

const MAX_PRIMES: usize = 64;

fn primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let is_prime = |p: u64| (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d));
        (1u64 << 30..1u64 << 31)
            .rev()
            .filter(|&p| is_prime(p))
            .take(MAX_PRIMES)
            .collect()
    })
}

fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// The square system for one `(m, degree)` pair, with lazily built inverses
/// modulo each prime.
struct SemBlock {
    indices: Vec<SemIndex>,
    rows: HashMap<Monomial, usize>,
    polys: Vec<Polynomial<BigInt>>,
    inverses: Vec<OnceLock<Option<Vec<Vec<u64>>>>>,
}

impl SemBlock {
    fn build(m: usize, d: u32) -> SemBlock {
        let indices = sem_indices(m, d);
        let rows: HashMap<Monomial, usize> = staircase_monomials(m, d)
            .into_iter()
            .enumerate()
            .map(|(i, mono)| (mono, i))
            .collect();
        assert_eq!(
            indices.len(),
            rows.len(),
            "SEM count equals staircase count"
        );
        let polys = indices.iter().map(sem_monomial::<BigInt>).collect();
        SemBlock {
            indices,
            rows,
            polys,
            inverses: (0..MAX_PRIMES).map(|_| OnceLock::new()).collect(),
        }
    }

    /// Columns of `A⁻¹ mod p`, indexed by row monomial; `None` if singular.
    fn inverse(&self, prime_idx: usize) -> Option<&Vec<Vec<u64>>> {
        self.inverses[prime_idx]
            .get_or_init(|| {
                let p = primes()[prime_idx];
                let n = self.indices.len();
                let mut a = vec![vec![0u64; 2 * n]; n];
                for (col, poly) in self.polys.iter().enumerate() {
                    for (mono, c) in poly.terms() {
                        a[self.rows[mono]][col] = c.residue(p);
                    }
                }
                for (i, row) in a.iter_mut().enumerate() {
                    row[n + i] = 1;
                }
                for col in 0..n {
                    let piv = (col..n).find(|&r| a[r][col] != 0)?;
                    a.swap(col, piv);
                    let inv = mod_pow(a[col][col], p - 2, p);
                    for v in a[col].iter_mut() {
                        *v = *v * inv % p;
                    }
                    let pivot_row = a[col].clone();
                    for (r, row) in a.iter_mut().enumerate() {
                        if r == col || row[col] == 0 {
                            continue;
                        }
                        let f = row[col];
                        for (v, &pv) in row.iter_mut().zip(&pivot_row) {
                            *v = (*v + p - f * pv % p) % p;
                        }
                    }
                }
                // inverse column for row monomial r is a[..][n + r]
                Some(
                    (0..n)
                        .map(|r| a.iter().map(|row| row[n + r]).collect())
                        .collect(),
                )
            })
            .as_ref()
    }
}

type BlockCache = Mutex<HashMap<(usize, u32), Arc<OnceLock<Arc<SemBlock>>>>>;

fn block(m: usize, d: u32) -> Arc<SemBlock> {
    static CACHE: OnceLock<BlockCache> = OnceLock::new();
    let cell = {
        let mut map = CACHE
            .get_or_init(Default::default)
            .lock()
            .expect("SEM cache poisoned");
        map.entry((m, d)).or_default().clone()
    };
    cell.get_or_init(|| Arc::new(SemBlock::build(m, d))).clone()
}

fn solve_block(blk: &SemBlock, f: &Polynomial<BigInt>) -> Result<Vec<BigInt>, PolyError> {
    let n = blk.indices.len();
    let rhs: Vec<(usize, &BigInt)> = f.terms().map(|(mono, c)| (blk.rows[mono], c)).collect();
    let mut modulus = BigInt::one();
    let mut acc = vec![BigInt::zero(); n];
    let mut previous: Option<Vec<BigInt>> = None;
    for (pi, &p) in primes().iter().enumerate() {
        let Some(inv) = blk.inverse(pi) else { continue };
        let mut sol = vec![0u64; n];
        for &(r, c) in &rhs {
            let b = c.residue(p);
            for (s, &v) in sol.iter_mut().zip(&inv[r]) {
                *s = (*s + v * b) % p;
            }
        }
        let pb = BigInt::from(p);
        let m_inv = BigInt::from(mod_pow(modulus.residue(p), p - 2, p));
        for (x, &r) in acc.iter_mut().zip(&sol) {
            let t = ((BigInt::from(r) - &*x) * &m_inv).mod_floor(&pb);
            *x += &modulus * t;
        }
        modulus *= &pb;
        let half = &modulus >> 1u32;
        let lifted: Vec<BigInt> = acc
            .iter()
            .map(|x| if *x > half { x - &modulus } else { x.clone() })
            .collect();
        if previous.as_ref() == Some(&lifted) {
            let mut check = Polynomial::zero();
            for (poly, a) in blk.polys.iter().zip(&lifted) {
                if !a.is_zero() {
                    check += &poly.scale(a);
                }
            }
            if check == *f {
                return Ok(lifted);
            }
        }
        previous = Some(lifted);
    }
    Err(PolyError::Unsolved)
}

/// Expands `f ∈ Z[x_1, …, x_m]` as an integer combination of SEMs with
/// `k ≤ m`. Solved degree by degree modulo word-sized primes, lifted by
/// CRT and confirmed by exact reconstruction.
pub fn sem_expand<C: Coefficient>(
    f: &Polynomial<C>,
    m: usize,
) -> Result<SemExpansion<C>, PolyError> {
    if f.has_q() {
        return Err(PolyError::QuantumVariables);
    }
    if f.terms().any(|(mono, _)| !in_staircase(mono, m)) {
        return Err(PolyError::InsufficientBound { m });
    }
    let big: Polynomial<BigInt> =
        f.map_coeffs(|c| c.to_bigint().expect("integers convert to BigInt"));
    let mut out = SemExpansion::new();
    for (d, part) in big.homogeneous_components() {
        let blk = block(m, d);
        let sol = solve_block(&blk, &part)?;
        for (idx, a) in blk.indices.iter().zip(sol) {
            if !a.is_zero() {
                out.add(idx.clone(), C::from_bigint(&a).ok_or(PolyError::Overflow)?);
            }
        }
    }
    Ok(out)
}

/// The largest `|α|` in the expansion, convenient for coefficient-bound sweeps.
pub fn max_sem_coefficient<C: Coefficient>(
    f: &Polynomial<C>,
    m: usize,
) -> Result<BigInt, PolyError> {
    Ok(sem_expand(f, m)?
        .iter()
        .map(|(_, c)| c.to_bigint().expect("integer").abs())
        .max()
        .unwrap_or_default())
}
