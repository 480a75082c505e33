//! Multiplicity as a count of nonintersecting lattice paths.
//!
//! Points are `(row, col)` pairs. A path moves one row down or one column
//! left per step, so it runs from a point `(β, γ)` to `(α, δ)` with
//! `α ≥ β` and `δ ≤ γ`.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::complex::{facets, MinorsProblem};
use crate::error::{Error, Result};
use crate::gdmatrix::GDMatrix;
use crate::linalg::{binomial, det_bareiss};
use crate::stairs::longest_diagonal;

pub type Point = (i64, i64);

/// Start points `b` and end points `a`; path `i` runs from `b[i]` to `a[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PathEndpoints {
    pub b: Vec<Point>,
    pub a: Vec<Point>,
}

impl PathEndpoints {
    pub fn new(b: Vec<Point>, a: Vec<Point>) -> Result<Self> {
        if a.len() != b.len() {
            return Err(Error::InvalidParameters(format!(
                "{} start points but {} end points",
                b.len(),
                a.len()
            )));
        }
        if a.iter().chain(&b).any(|&(x, y)| x < 0 || y < 0) {
            return Err(Error::InvalidParameters(
                "coordinates must be nonnegative".into(),
            ));
        }
        Ok(PathEndpoints { b, a })
    }

    /// `h[i][j]` = number of paths from `b[i]` to `a[j]`.
    pub fn path_matrix(&self) -> Vec<Vec<BigInt>> {
        self.b
            .iter()
            .map(|&s| self.a.iter().map(|&t| count_paths(s, t)).collect())
            .collect()
    }
}

/// Paths from `(β, γ)` to `(α, δ)`: `binom(α − β + γ − δ, α − β)`.
pub fn count_paths(from: Point, to: Point) -> BigInt {
    let (down, left) = (to.0 - from.0, from.1 - to.1);
    if down < 0 || left < 0 {
        return BigInt::zero();
    }
    binomial(down + left, down)
}

/// Determinant of the path-count matrix. Equals the number of
/// nonintersecting families when every non-identity pairing of endpoints
/// forces an intersection.
pub fn lgv_det(e: &PathEndpoints) -> BigInt {
    det_bareiss(e.path_matrix())
}

/// How the nonpermutable condition behind [`lgv_det`] was established.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PermutationCheck {
    /// Both endpoint lists move strictly down and right.
    Interleaved,
    /// Not certified structurally; the determinant matched brute force.
    BruteForce,
    /// Neither certified nor confirmed.
    Uncertified,
}

/// Heuristic certificate that only the identity pairing admits disjoint
/// paths; falls back to comparing against brute force when it can't tell.
pub fn check_permutation_condition(e: &PathEndpoints, budget: &PathBudget) -> PermutationCheck {
    let chain = |v: &[Point]| v.windows(2).all(|w| w[0].0 < w[1].0 && w[0].1 < w[1].1);
    if chain(&e.a) && chain(&e.b) {
        return PermutationCheck::Interleaved;
    }
    match brute_nonintersecting(e, budget) {
        Ok(n) if n == lgv_det(e) => PermutationCheck::BruteForce,
        _ => PermutationCheck::Uncertified,
    }
}

/// Limits for [`brute_nonintersecting`].
#[derive(Clone, Copy, Debug)]
pub struct PathBudget {
    pub max_path_len: i64,
    pub max_tuples: u64,
}

impl Default for PathBudget {
    fn default() -> Self {
        PathBudget {
            max_path_len: 12,
            max_tuples: 1_000_000,
        }
    }
}

/// Counts nonintersecting families by listing every path.
pub fn brute_nonintersecting(e: &PathEndpoints, budget: &PathBudget) -> Result<BigInt> {
    let mut product: u64 = 1;
    for (&s, &t) in e.b.iter().zip(&e.a) {
        let len = (t.0 - s.0) + (s.1 - t.1);
        if len > budget.max_path_len {
            return Err(Error::BudgetExceeded(format!(
                "path of length {len} exceeds {}",
                budget.max_path_len
            )));
        }
        let c: u64 = count_paths(s, t).try_into().unwrap_or(u64::MAX);
        product = product.saturating_mul(c.max(1));
    }
    if product > budget.max_tuples {
        return Err(Error::BudgetExceeded(format!(
            "{product} path tuples exceed {}",
            budget.max_tuples
        )));
    }
    let all: Vec<Vec<Vec<Point>>> =
        e.b.iter()
            .zip(&e.a)
            .map(|(&s, &t)| all_paths(s, t))
            .collect();
    fn go(all: &[Vec<Vec<Point>>], i: usize, used: &mut HashSet<Point>) -> u64 {
        if i == all.len() {
            return 1;
        }
        let mut n = 0;
        for p in &all[i] {
            if p.iter().all(|q| !used.contains(q)) {
                used.extend(p.iter().copied());
                n += go(all, i + 1, used);
                for q in p {
                    used.remove(q);
                }
            }
        }
        n
    }
    Ok(BigInt::from(go(&all, 0, &mut HashSet::new())))
}

/// Every path from `s` to `t`, as point lists.
pub fn all_paths(s: Point, t: Point) -> Vec<Vec<Point>> {
    fn go(p: Point, t: Point, cur: &mut Vec<Point>, out: &mut Vec<Vec<Point>>) {
        if p == t {
            out.push(cur.clone());
            return;
        }
        for q in [(p.0 + 1, p.1), (p.0, p.1 - 1)] {
            if q.0 <= t.0 && q.1 >= t.1 {
                cur.push(q);
                go(q, t, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    if t.0 >= s.0 && t.1 <= s.1 {
        go(s, t, &mut vec![s], &mut out);
    }
    out
}

/// The corner endpoints used by [`multiplicity_formula`]:
/// `A_a = (n − T1 − 1 + a, a)` and `B_b = (b, m − T2 − 1 + b)`.
pub fn triangle_corners(
    n: usize,
    m: usize,
    t1: usize,
    t2: usize,
    r: usize,
) -> (Vec<Point>, Vec<Point>) {
    let big_t1 = t1.max(r.saturating_sub(2)) as i64;
    let big_t2 = t2.max(r.saturating_sub(2)) as i64;
    let (n, m) = (n as i64, m as i64);
    let a = (1..=big_t1 + 1).map(|a| (n - big_t1 - 1 + a, a)).collect();
    let b = (1..=big_t2 + 1).map(|b| (b, m - big_t2 - 1 + b)).collect();
    (a, b)
}

fn index_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
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

/// Multiplicity of the ideal of `r`-minors of a triangle-ladder matrix: the
/// number of top-dimensional faces of its Stanley-Reisner complex.
///
/// Sums, over `(r−1)`-subsets `a ⊂ [1, T1+1]` and `b ⊂ [1, T2+1]`, the
/// determinant with entries `binom(n+m−T1−T2−2, m−1−T2+b_j−a_i)`, where
/// `T_i = max(r−2, t_i)`. For `r = 1`, and whenever the ideal is zero,
/// the complex has one facet and the value is 1.
pub fn multiplicity_formula(n: usize, m: usize, t1: usize, t2: usize, r: usize) -> Result<BigInt> {
    let x =
        GDMatrix::triangles(n, m, t1, t2).map_err(|e| Error::InvalidParameters(e.to_string()))?;
    if r == 0 || r > n.min(m) {
        return Err(Error::InvalidParameters(format!(
            "r = {r} must lie in 1..={}",
            n.min(m)
        )));
    }
    if r == 1 || longest_diagonal(x.cells()) < r {
        return Ok(BigInt::one());
    }
    let big_t1 = t1.max(r - 2) as i64;
    let big_t2 = t2.max(r - 2) as i64;
    let (ni, mi) = (n as i64, m as i64);
    let top = ni + mi - big_t1 - big_t2 - 2;
    let (lo, hi) = (big_t2 - mi + 1, ni - 1 - big_t1);
    let entry = |a: usize, b: usize| -> BigInt {
        let diff = b as i64 - a as i64;
        if diff < lo || diff > hi {
            BigInt::zero()
        } else {
            binomial(top, mi - 1 - big_t2 + diff)
        }
    };
    let a_sets = index_subsets(big_t1 as usize + 1, r - 1);
    let b_sets = index_subsets(big_t2 as usize + 1, r - 1);
    let terms: Vec<BigInt> = a_sets
        .par_iter()
        .map(|a| {
            b_sets
                .iter()
                .map(|b| {
                    det_bareiss(
                        a.iter()
                            .map(|&ai| b.iter().map(|&bj| entry(ai, bj)).collect())
                            .collect(),
                    )
                })
                .fold(BigInt::zero(), |s, v| s + v)
        })
        .collect();
    Ok(terms.into_iter().fold(BigInt::zero(), |s, v| s + v))
}

/// The classical generic-matrix count `det[binom(n+m−i−j, m−i)]`, with
/// `i, j = 1..r−1`. A different matrix with the same determinant as
/// [`multiplicity_formula`] at `t1 = t2 = 0`.
pub fn multiplicity_generic_classical(n: usize, m: usize, r: usize) -> BigInt {
    let (n, m) = (n as i64, m as i64);
    let k = r.saturating_sub(1) as i64;
    det_bareiss(
        (1..=k)
            .map(|i| (1..=k).map(|j| binomial(n + m - i - j, m - i)).collect())
            .collect(),
    )
}

/// Facet counts behind the multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FacetCount {
    /// Number of facets of maximal dimension.
    #[serde(serialize_with = "crate::serde_bigint")]
    pub top: BigInt,
    pub total: usize,
    /// `false` means `top` counts only part of the facets.
    pub pure: bool,
}

/// Multiplicity by enumerating facets.
pub fn multiplicity_by_count(p: &MinorsProblem) -> Result<FacetCount> {
    let f = facets(p)?;
    let top = f.iter().map(|x| x.len()).max().unwrap_or(0);
    let n = f.iter().filter(|x| x.len() == top).count();
    Ok(FacetCount {
        top: BigInt::from(n),
        total: f.len(),
        pure: n == f.len(),
    })
}
