//! Sparse multivariate polynomials under lex order.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::cell::{Cell, CellSet};
use crate::error::{Error, Result};
use crate::gdmatrix::GDMatrix;

/// Coefficient field.
pub trait Coeff: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_i64(v: i64) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    /// `o` must be nonzero.
    fn div(&self, o: &Self) -> Self;
}

impl Coeff for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Self {
        self / o
    }
}

/// Integers modulo the prime `P`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fp<const P: u64>(u64);

/// The default prime field, modulo `2^31 − 1`.
pub type Fp31 = Fp<2_147_483_647>;

impl<const P: u64> Fp<P> {
    pub fn value(self) -> u64 {
        self.0
    }

    fn pow(self, mut e: u64) -> Self {
        let (mut b, mut acc) = (self.0 as u128, 1u128);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * b % P as u128;
            }
            b = b * b % P as u128;
            e >>= 1;
        }
        Fp(acc as u64)
    }
}

impl<const P: u64> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Coeff for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn one() -> Self {
        Fp(1 % P)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn from_i64(v: i64) -> Self {
        Fp(v.rem_euclid(P as i64) as u64)
    }
    fn add(&self, o: &Self) -> Self {
        Fp((self.0 + o.0) % P)
    }
    fn sub(&self, o: &Self) -> Self {
        Fp((self.0 + P - o.0) % P)
    }
    fn mul(&self, o: &Self) -> Self {
        Fp((self.0 as u128 * o.0 as u128 % P as u128) as u64)
    }
    fn div(&self, o: &Self) -> Self {
        self.mul(&o.pow(P - 2))
    }
}

/// Exponent vector over the nonzero cells of a matrix, indexed in (row, col)
/// order. Index 0 is the largest variable, so the derived `Ord` is the lex
/// order on monomials.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u8>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    /// Product of the given cells, each a nonzero cell of `m`.
    pub fn from_cells(m: &GDMatrix, cells: &CellSet) -> Result<Self> {
        let mut e = vec![0u8; m.num_cells()];
        for c in cells {
            let i = m
                .cells()
                .binary_search(c)
                .map_err(|_| Error::CellIsZero(*c))?;
            e[i] += 1;
        }
        Ok(Monomial(e))
    }

    pub fn exponents(&self) -> &[u8] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, o: &Monomial) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| a <= b)
    }

    /// `o / self`; requires `self | o`.
    pub fn quotient(&self, o: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&o.0).map(|(a, b)| b - a).collect())
    }

    pub fn lcm(&self, o: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&o.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, o: &Monomial) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn is_square_free(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }

    /// Cells with positive exponent.
    pub fn support(&self, m: &GDMatrix) -> CellSet {
        self.0
            .iter()
            .zip(m.cells())
            .filter(|(e, _)| **e > 0)
            .map(|(_, c)| *c)
            .collect()
    }

    /// Exponents keyed by cell.
    pub fn to_map(&self, m: &GDMatrix) -> BTreeMap<Cell, u32> {
        self.0
            .iter()
            .zip(m.cells())
            .filter(|(e, _)| **e > 0)
            .map(|(e, c)| (*c, *e as u32))
            .collect()
    }

    /// `x11*x22` style rendering; variables above 9 are written `x{10,3}`.
    pub fn render(&self, m: &GDMatrix) -> String {
        let mut parts = Vec::new();
        for (c, e) in self.to_map(m) {
            let v = if c.row < 10 && c.col < 10 {
                format!("x{}{}", c.row, c.col)
            } else {
                format!("x{{{},{}}}", c.row, c.col)
            };
            parts.push(if e == 1 { v } else { format!("{v}^{e}") });
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}

/// A polynomial with no stored zero coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct Polynomial<K: Coeff> {
    nvars: usize,
    terms: BTreeMap<Monomial, K>,
}

impl<K: Coeff> Polynomial<K> {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: K) -> Self {
        Self::term(Monomial::one(nvars), c)
    }

    pub fn term(mono: Monomial, c: K) -> Self {
        let nvars = mono.0.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(mono, c);
        }
        Polynomial { nvars, terms }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::term(Monomial::var(nvars, i), K::one())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms from the largest monomial down.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &K)> {
        self.terms.iter().rev()
    }

    pub fn leading_term(&self) -> Result<(Monomial, K)> {
        self.terms
            .last_key_value()
            .map(|(m, c)| (m.clone(), c.clone()))
            .ok_or(Error::ZeroPolynomial)
    }

    fn add_term(&mut self, mono: Monomial, c: K) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(mono) {
            Entry::Vacant(v) => {
                if !c.is_zero() {
                    v.insert(c);
                }
            }
            Entry::Occupied(mut o) => {
                let s = o.get().add(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), K::zero().sub(c));
        }
        out
    }

    /// `self · c · mono`.
    pub fn mul_term(&self, mono: &Monomial, c: &K) -> Self {
        let mut out = Self::zero(self.nvars);
        if c.is_zero() {
            return out;
        }
        for (m, k) in &self.terms {
            out.terms.insert(m.mul(mono), k.mul(c));
        }
        out
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::zero(self.nvars);
        for (m, c) in &o.terms {
            for (n, k) in &self.terms {
                out.add_term(n.mul(m), k.mul(c));
            }
        }
        out
    }

    /// Renders the polynomial with the cell names of `m`.
    pub fn render(&self, m: &GDMatrix) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, (mono, c)) in self.terms().enumerate() {
            let text = c.to_string();
            let (neg, abs) = match text.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, text),
            };
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let body = mono.render(m);
            match (abs.as_str(), body.as_str()) {
                (a, "1") => s.push_str(a),
                ("1", b) => s.push_str(b),
                (a, b) => s.push_str(&format!("{a}*{b}")),
            }
        }
        s
    }
}

/// Remainder of `f` on division by `basis`, always dividing the current
/// leading term by the first basis element whose leading monomial divides it.
pub fn reduce<K: Coeff>(f: &Polynomial<K>, basis: &[Polynomial<K>]) -> Polynomial<K> {
    let leads: Vec<(Monomial, K)> = basis.iter().filter_map(|g| g.leading_term().ok()).collect();
    let mut p = f.clone();
    let mut rem = Polynomial::zero(f.nvars);
    while let Ok((lm, lc)) = p.leading_term() {
        match leads.iter().position(|(m, _)| m.divides(&lm)) {
            Some(i) => {
                let q = leads[i].0.quotient(&lm);
                let c = lc.div(&leads[i].1);
                p = p.sub(&basis[i].mul_term(&q, &c));
            }
            None => {
                p.terms.remove(&lm);
                rem.terms.insert(lm, lc);
            }
        }
    }
    rem
}

/// `S(f, g) = (L / lt f) f − (L / lt g) g` with `L = lcm(lm f, lm g)`.
pub fn s_polynomial<K: Coeff>(f: &Polynomial<K>, g: &Polynomial<K>) -> Result<Polynomial<K>> {
    let (fm, fc) = f.leading_term()?;
    let (gm, gc) = g.leading_term()?;
    let l = fm.lcm(&gm);
    Ok(f.mul_term(&fm.quotient(&l), &K::one().div(&fc))
        .sub(&g.mul_term(&gm.quotient(&l), &K::one().div(&gc))))
}
