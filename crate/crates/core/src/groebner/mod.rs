//! Checks that the `r × r` minors of a GD matrix form a Gröbner basis under
//! lex order, and lists the generators of the initial ideal.

mod poly;

pub use poly::{reduce, s_polynomial, Coeff, Fp, Fp31, Monomial, Polynomial};

use std::collections::HashMap;

use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;

use crate::cell::{Cell, CellSet};
use crate::complex::MinorsProblem;
use crate::error::{Error, Result};
use crate::gdmatrix::GDMatrix;

pub type Rational = BigRational;

pub const DEFAULT_MINOR_BUDGET: usize = 200;

/// Determinant of the submatrix on `rows × cols`; zero cells contribute 0.
pub fn minor<K: Coeff>(m: &GDMatrix, rows: &[usize], cols: &[usize]) -> Result<Polynomial<K>> {
    check_indices(rows, m.n(), "row")?;
    check_indices(cols, m.m(), "column")?;
    if rows.len() != cols.len() {
        return Err(Error::BadIndex(format!(
            "{} rows but {} columns",
            rows.len(),
            cols.len()
        )));
    }
    if cols.len() > 16 {
        return Err(Error::BadIndex(
            "minors larger than 16x16 are not supported".into(),
        ));
    }
    let nvars = m.num_cells();
    let var = |i: usize, j: usize| -> Option<Polynomial<K>> {
        m.cells()
            .binary_search(&Cell::new(i, j))
            .ok()
            .map(|k| Polynomial::var(nvars, k))
    };
    // Expansion along successive rows; the column subset still available
    // determines the sub-determinant, so it is memoised on that mask.
    fn det<K: Coeff>(
        k: usize,
        mask: u32,
        rows: &[usize],
        cols: &[usize],
        nvars: usize,
        var: &dyn Fn(usize, usize) -> Option<Polynomial<K>>,
        memo: &mut HashMap<u32, Polynomial<K>>,
    ) -> Polynomial<K> {
        if k == rows.len() {
            return Polynomial::constant(nvars, K::one());
        }
        if let Some(p) = memo.get(&mask) {
            return p.clone();
        }
        let mut acc = Polynomial::zero(nvars);
        let mut pos = 0;
        for (c, &col) in cols.iter().enumerate() {
            if mask >> c & 1 == 0 {
                continue;
            }
            if let Some(x) = var(rows[k], col) {
                let sub = det(k + 1, mask & !(1 << c), rows, cols, nvars, var, memo);
                let term = sub.mul(&x);
                acc = if pos % 2 == 0 {
                    acc.add(&term)
                } else {
                    acc.sub(&term)
                };
            }
            pos += 1;
        }
        memo.insert(mask, acc.clone());
        acc
    }
    let full = if cols.is_empty() {
        0
    } else {
        u32::MAX >> (32 - cols.len())
    };
    Ok(det(0, full, rows, cols, nvars, &var, &mut HashMap::new()))
}

fn check_indices(idx: &[usize], bound: usize, what: &str) -> Result<()> {
    if idx.is_empty() {
        return Err(Error::BadIndex(format!("empty {what} list")));
    }
    if idx.iter().any(|&i| i == 0 || i > bound) {
        return Err(Error::BadIndex(format!("{what} index out of 1..={bound}")));
    }
    if idx.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::BadIndex(format!(
            "{what} indices must be strictly increasing"
        )));
    }
    Ok(())
}

/// Lex-greatest term of `f`.
pub fn leading_term<K: Coeff>(f: &Polynomial<K>) -> Result<(Monomial, K)> {
    f.leading_term()
}

/// Strictly increasing index tuples of length `k` from `1..=n`.
pub fn index_tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..=n {
            cur.push(i);
            go(n, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, k, 1, &mut Vec::new(), &mut out);
    out
}

/// A nonzero minor with its row and column indices.
#[derive(Clone, Debug)]
pub struct LabelledMinor<K: Coeff> {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub poly: Polynomial<K>,
}

/// All nonzero `r × r` minors, ordered by (rows, cols).
pub fn nonzero_minors<K: Coeff>(p: &MinorsProblem, budget: usize) -> Result<Vec<LabelledMinor<K>>> {
    let (m, r) = (p.matrix(), p.r());
    let rs = index_tuples(m.n(), r);
    let cs = index_tuples(m.m(), r);
    if rs.len() * cs.len() > budget {
        return Err(Error::BudgetExceeded(format!(
            "{} minors exceed the budget of {budget}",
            rs.len() * cs.len()
        )));
    }
    let mut out = Vec::new();
    for rows in &rs {
        for cols in &cs {
            let poly = minor::<K>(m, rows, cols)?;
            if !poly.is_zero() {
                out.push(LabelledMinor {
                    rows: rows.clone(),
                    cols: cols.clone(),
                    poly,
                });
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug)]
pub struct GroebnerOptions {
    /// Skip pairs whose leading monomials are coprime.
    pub skip_coprime: bool,
    pub minor_budget: usize,
}

impl Default for GroebnerOptions {
    fn default() -> Self {
        GroebnerOptions {
            skip_coprime: true,
            minor_budget: DEFAULT_MINOR_BUDGET,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroebnerReport {
    pub groebner: bool,
    pub nonzero_minors: usize,
    pub pairs_checked: usize,
    pub pairs_skipped_coprime: usize,
    /// Row and column indices of the first pair whose S-polynomial does not
    /// reduce to zero.
    pub failing_pair: Option<[(Vec<usize>, Vec<usize>); 2]>,
}

/// Buchberger's criterion over the rationals.
pub fn verify_groebner(p: &MinorsProblem) -> Result<GroebnerReport> {
    verify_groebner_with::<Rational>(p, &GroebnerOptions::default())
}

/// Buchberger's criterion: every S-polynomial of two nonzero minors reduces
/// to zero modulo all of them.
pub fn verify_groebner_with<K: Coeff>(
    p: &MinorsProblem,
    opts: &GroebnerOptions,
) -> Result<GroebnerReport> {
    let minors = nonzero_minors::<K>(p, opts.minor_budget)?;
    let basis: Vec<Polynomial<K>> = minors.iter().map(|x| x.poly.clone()).collect();
    let leads: Vec<Monomial> = basis
        .iter()
        .map(|f| f.leading_term().map(|t| t.0))
        .collect::<Result<_>>()?;
    let pairs: Vec<(usize, usize)> = (0..basis.len())
        .flat_map(|i| (i + 1..basis.len()).map(move |j| (i, j)))
        .collect();
    let (skipped, todo): (Vec<_>, Vec<_>) = pairs
        .into_iter()
        .partition(|&(i, j)| opts.skip_coprime && leads[i].is_coprime(&leads[j]));
    let failures: Vec<(usize, usize)> = todo
        .par_iter()
        .filter(|&&(i, j)| {
            let s = s_polynomial(&basis[i], &basis[j]).expect("minors are nonzero");
            !reduce(&s, &basis).is_zero()
        })
        .copied()
        .collect();
    let label = |k: usize| (minors[k].rows.clone(), minors[k].cols.clone());
    Ok(GroebnerReport {
        groebner: failures.is_empty(),
        nonzero_minors: basis.len(),
        pairs_checked: todo.len(),
        pairs_skipped_coprime: skipped.len(),
        failing_pair: failures.iter().min().map(|&(i, j)| [label(i), label(j)]),
    })
}

/// Every `r`-diagonal among the nonzero cells.
pub fn r_diagonals(m: &GDMatrix, r: usize) -> Vec<CellSet> {
    fn go(cells: &[Cell], r: usize, start: usize, cur: &mut Vec<Cell>, out: &mut Vec<CellSet>) {
        if cur.len() == r {
            out.push(cur.iter().copied().collect());
            return;
        }
        for i in start..cells.len() {
            if cur.last().is_none_or(|l| l.precedes(&cells[i])) {
                cur.push(cells[i]);
                go(cells, r, i + 1, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(m.cells(), r, 0, &mut Vec::new(), &mut out);
    out
}

/// Minimal generators of the initial ideal: the diagonal products of all
/// `r`-diagonals. Each is square-free.
pub fn initial_ideal_gens(p: &MinorsProblem) -> Vec<Monomial> {
    let m = p.matrix();
    let mut gens: Vec<Monomial> = r_diagonals(m, p.r())
        .iter()
        .map(|d| Monomial::from_cells(m, d).expect("diagonal cells are nonzero"))
        .collect();
    gens.sort();
    gens.dedup();
    let keep: Vec<bool> = gens
        .iter()
        .map(|g| !gens.iter().any(|h| h != g && h.divides(g)))
        .collect();
    let mut out: Vec<Monomial> = gens
        .into_iter()
        .zip(keep)
        .filter(|(_, k)| *k)
        .map(|(g, _)| g)
        .collect();
    out.reverse();
    out
}
