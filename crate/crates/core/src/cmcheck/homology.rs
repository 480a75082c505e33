//! Reduced simplicial homology ranks and Reisner's criterion.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cell::CellSet;
use crate::complex::{faces_of, link_masks, ones, Complex, Mask};
use crate::error::Result;

pub const DEFAULT_FACE_BUDGET: usize = 1 << 18;

/// Coefficient field for homology.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum HomologyField {
    #[default]
    Rational,
    Prime(u64),
}

/// Ranks of `H̃_i` for `i = -1 … dim K`, over the rationals.
pub fn reduced_homology_ranks(k: &Complex) -> Result<Vec<usize>> {
    reduced_homology_ranks_with(k, HomologyField::Rational, DEFAULT_FACE_BUDGET)
}

pub fn reduced_homology_ranks_with(
    k: &Complex,
    field: HomologyField,
    face_budget: usize,
) -> Result<Vec<usize>> {
    let faces = faces_of(k.facet_masks(), face_budget)?;
    Ok(ranks_of_faces(&faces, field, isize::MAX))
}

/// Homology ranks in dimensions `-1 …= upto` from a face list sorted by size.
fn ranks_of_faces(faces: &[Mask], field: HomologyField, upto: isize) -> Vec<usize> {
    let top = faces.last().map_or(0, |m| m.count_ones() as usize);
    let mut by_size: Vec<Vec<Mask>> = vec![Vec::new(); top + 1];
    for &f in faces {
        by_size[f.count_ones() as usize].push(f);
    }
    let sizes = top.min(upto.saturating_add(1).max(0) as usize);
    // rank[s] is the rank of the boundary map from size-s faces to size-(s-1) faces.
    let mut rank = vec![0usize; sizes + 2];
    for s in 1..=(sizes + 1).min(top) {
        rank[s] = boundary_rank(&by_size[s - 1], &by_size[s], field);
    }
    (0..=sizes)
        .map(|s| by_size[s].len() - rank[s] - rank[s + 1])
        .collect()
}

fn boundary_rank(lower: &[Mask], upper: &[Mask], field: HomologyField) -> usize {
    if lower.is_empty() || upper.is_empty() {
        return 0;
    }
    let index: HashMap<Mask, usize> = lower.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    let cols: Vec<Vec<(usize, i64)>> = upper
        .iter()
        .map(|&f| {
            let mut col: Vec<(usize, i64)> = ones(f)
                .enumerate()
                .map(|(p, v)| (index[&(f & !(1 << v))], if p % 2 == 0 { 1 } else { -1 }))
                .collect();
            col.sort_unstable_by_key(|e| e.0);
            col
        })
        .collect();
    match field {
        HomologyField::Rational => match eliminate::<i64>(&cols) {
            Some(r) => r,
            None => eliminate::<BigInt>(&cols).expect("big integers do not overflow"),
        },
        HomologyField::Prime(p) => rank_mod_p(&cols, p),
    }
}

/// Integer types usable for fraction-free column reduction.
trait Scalar: Clone + Zero + PartialEq {
    fn from_i64(v: i64) -> Self;
    /// `a*b - c*d`, `None` on overflow.
    fn mul_sub(a: &Self, b: &Self, c: &Self, d: &Self) -> Option<Self>;
    fn content_divide(col: &mut [(usize, Self)]);
}

impl Scalar for i64 {
    fn from_i64(v: i64) -> Self {
        v
    }
    fn mul_sub(a: &Self, b: &Self, c: &Self, d: &Self) -> Option<Self> {
        a.checked_mul(*b)?.checked_sub(c.checked_mul(*d)?)
    }
    fn content_divide(col: &mut [(usize, Self)]) {
        let g = col.iter().fold(0i64, |g, e| g.gcd(&e.1));
        if g > 1 {
            col.iter_mut().for_each(|e| e.1 /= g);
        }
    }
}

impl Scalar for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn mul_sub(a: &Self, b: &Self, c: &Self, d: &Self) -> Option<Self> {
        Some(a * b - c * d)
    }
    fn content_divide(col: &mut [(usize, Self)]) {
        let g = col.iter().fold(BigInt::zero(), |g, e| g.gcd(&e.1)).abs();
        if g > BigInt::from(1) {
            col.iter_mut().for_each(|e| e.1 = &e.1 / &g);
        }
    }
}

/// Rank over the rationals by reducing columns on their last nonzero row.
fn eliminate<T: Scalar>(cols: &[Vec<(usize, i64)>]) -> Option<usize> {
    let mut pivots: HashMap<usize, Vec<(usize, T)>> = HashMap::new();
    for col in cols {
        let mut v: Vec<(usize, T)> = col.iter().map(|&(i, x)| (i, T::from_i64(x))).collect();
        while let Some((low, a)) = v.last().cloned() {
            let Some(u) = pivots.get(&low) else { break };
            let b = u.last().unwrap().1.clone();
            // b*v - a*u cancels the entry at `low`.
            v = combine(&v, &b, u, &a)?;
            T::content_divide(&mut v);
        }
        if let Some(&(low, _)) = v.last() {
            pivots.insert(low, v);
        }
    }
    Some(pivots.len())
}

fn combine<T: Scalar>(v: &[(usize, T)], b: &T, u: &[(usize, T)], a: &T) -> Option<Vec<(usize, T)>> {
    let zero = T::zero();
    let mut out = Vec::with_capacity(v.len() + u.len());
    let (mut i, mut j) = (0, 0);
    while i < v.len() || j < u.len() {
        let (row, x, y) = match (v.get(i), u.get(j)) {
            (Some(p), Some(q)) if p.0 == q.0 => {
                i += 1;
                j += 1;
                (p.0, &p.1, &q.1)
            }
            (Some(p), q) if q.is_none_or(|q| p.0 < q.0) => {
                i += 1;
                (p.0, &p.1, &zero)
            }
            (_, q) => {
                let q = q.expect("one side is left");
                j += 1;
                (q.0, &zero, &q.1)
            }
        };
        let w = T::mul_sub(b, x, a, y)?;
        if !w.is_zero() {
            out.push((row, w));
        }
    }
    Some(out)
}

fn rank_mod_p(cols: &[Vec<(usize, i64)>], p: u64) -> usize {
    let p128 = p as u128;
    let norm = |x: i64| (x.rem_euclid(p as i64)) as u64;
    let inv = |a: u64| {
        // Fermat; p is taken to be prime.
        let (mut base, mut e, mut acc) = (a as u128, p - 2, 1u128);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p128;
            }
            base = base * base % p128;
            e >>= 1;
        }
        acc as u64
    };
    let mut pivots: HashMap<usize, Vec<(usize, u64)>> = HashMap::new();
    for col in cols {
        let mut v: Vec<(usize, u64)> = col
            .iter()
            .map(|&(i, x)| (i, norm(x)))
            .filter(|e| e.1 != 0)
            .collect();
        while let Some(&(low, a)) = v.last() {
            let Some(u) = pivots.get(&low) else { break };
            // Pivot columns are stored with last entry 1: v -= a*u.
            let mut out = Vec::with_capacity(v.len() + u.len());
            let (mut i, mut j) = (0, 0);
            while i < v.len() || j < u.len() {
                let (row, x, y) = match (v.get(i), u.get(j)) {
                    (Some(s), Some(t)) if s.0 == t.0 => {
                        i += 1;
                        j += 1;
                        (s.0, s.1, t.1)
                    }
                    (Some(s), t) if t.is_none_or(|t| s.0 < t.0) => {
                        i += 1;
                        (s.0, s.1, 0)
                    }
                    (_, t) => {
                        let t = t.expect("one side is left");
                        j += 1;
                        (t.0, 0, t.1)
                    }
                };
                let w = ((x as u128 + p128 * p128 - a as u128 * y as u128) % p128) as u64;
                if w != 0 {
                    out.push((row, w));
                }
            }
            v = out;
        }
        if let Some(&(low, a)) = v.last() {
            let s = inv(a) as u128;
            v.iter_mut()
                .for_each(|e| e.1 = (e.1 as u128 * s % p128) as u64);
            pivots.insert(low, v);
        }
    }
    pivots.len()
}

/// Outcome of Reisner's criterion, with a witness face when it fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReisnerReport {
    pub cohen_macaulay: bool,
    pub field: HomologyField,
    pub faces_checked: usize,
    pub failing_face: Option<CellSet>,
    /// Reduced homology of the failing link, dimensions `-1 …`.
    pub failing_link_homology: Option<Vec<usize>>,
}

pub fn reisner_cm(k: &Complex) -> Result<bool> {
    Ok(reisner_report(k, HomologyField::Rational, DEFAULT_FACE_BUDGET)?.cohen_macaulay)
}

/// Checks `H̃_i(Link_F) = 0` for every face `F` and every `i < dim Link_F`.
pub fn reisner_report(
    k: &Complex,
    field: HomologyField,
    face_budget: usize,
) -> Result<ReisnerReport> {
    let faces = faces_of(k.facet_masks(), face_budget)?;
    let failing = faces.par_iter().find_map_first(|&f| {
        let link = link_masks(k.facet_masks(), f);
        let dim = link
            .iter()
            .map(|g| g.count_ones() as isize)
            .max()
            .unwrap_or(0)
            - 1;
        if dim <= -1 {
            return None;
        }
        // Faces of a link lie inside the faces of K, so the budget holds.
        let lf = faces_of(&link, face_budget).expect("link is smaller than the complex");
        let h = ranks_of_faces(&lf, field, dim - 1);
        h.iter().any(|&x| x != 0).then_some((f, h))
    });
    Ok(ReisnerReport {
        cohen_macaulay: failing.is_none(),
        field,
        faces_checked: faces.len(),
        failing_face: failing.as_ref().map(|(f, _)| k.to_cells(*f)),
        failing_link_homology: failing.map(|(_, h)| h),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cell::CellSet;

    fn cs(p: &[(usize, usize)]) -> CellSet {
        CellSet::from_pairs(p)
    }

    fn cx(facets: &[&[(usize, usize)]]) -> Complex {
        Complex::from_facets(facets.iter().map(|f| cs(f))).unwrap()
    }

    #[test]
    fn simplex_is_acyclic() {
        let k = cx(&[&[(1, 1), (1, 2), (2, 2)]]);
        assert_eq!(reduced_homology_ranks(&k).unwrap(), vec![0, 0, 0, 0]);
    }

    #[test]
    fn empty_face_only() {
        let k = Complex::new(CellSet::new(), []).unwrap();
        assert_eq!(reduced_homology_ranks(&k).unwrap(), vec![1]);
    }

    #[test]
    fn two_points() {
        let k = cx(&[&[(1, 1)], &[(2, 2)]]);
        assert_eq!(reduced_homology_ranks(&k).unwrap(), vec![0, 1]);
        assert!(!reisner_cm(&cx(&[&[(1, 1), (1, 2)], &[(2, 1), (2, 2)]])).unwrap());
    }

    #[test]
    fn triangle_boundary() {
        let k = cx(&[&[(1, 1), (1, 2)], &[(1, 2), (1, 3)], &[(1, 1), (1, 3)]]);
        assert_eq!(reduced_homology_ranks(&k).unwrap(), vec![0, 0, 1]);
        let p = reduced_homology_ranks_with(&k, HomologyField::Prime(2), 100).unwrap();
        assert_eq!(p, vec![0, 0, 1]);
        assert!(reisner_cm(&k).unwrap());
    }

    #[test]
    fn torsion_shows_in_characteristic_two() {
        // Six-vertex real projective plane.
        let f: [[usize; 3]; 10] = [
            [1, 2, 3],
            [1, 3, 4],
            [1, 4, 5],
            [1, 5, 6],
            [1, 2, 6],
            [2, 3, 5],
            [3, 4, 6],
            [2, 4, 5],
            [2, 4, 6],
            [3, 5, 6],
        ];
        let k = Complex::from_facets(
            f.iter()
                .map(|t| t.iter().map(|&v| crate::Cell::new(1, v)).collect()),
        )
        .unwrap();
        assert_eq!(reduced_homology_ranks(&k).unwrap(), vec![0, 0, 0, 0]);
        let p = reduced_homology_ranks_with(&k, HomologyField::Prime(2), 1000).unwrap();
        assert_eq!(p, vec![0, 0, 1, 1]);
        assert!(reisner_cm(&k).unwrap());
        assert!(
            !reisner_report(&k, HomologyField::Prime(2), 1000)
                .unwrap()
                .cohen_macaulay
        );
    }

    #[test]
    fn path_complex_is_cm() {
        let k = cx(&[&[(1, 1), (1, 2)], &[(1, 2), (1, 3)], &[(1, 3), (1, 4)]]);
        assert!(reisner_cm(&k).unwrap());
    }

    #[test]
    fn impure_fails_with_witness() {
        let k = cx(&[&[(1, 1), (1, 2)], &[(2, 2)]]);
        let rep = reisner_report(&k, HomologyField::Rational, 100).unwrap();
        assert!(!rep.cohen_macaulay);
        assert_eq!(rep.failing_face, Some(CellSet::new()));
        assert_eq!(rep.failing_link_homology, Some(vec![0, 1]));
    }

    #[test]
    fn big_integer_fallback_agrees() {
        let k = cx(&[
            &[(1, 1), (1, 2), (2, 2)],
            &[(1, 2), (2, 2), (3, 3)],
            &[(1, 1), (3, 1)],
            &[(3, 1), (3, 3)],
        ]);
        let faces = faces_of(k.facet_masks(), 100).unwrap();
        let mut by: Vec<Vec<Mask>> = vec![vec![]; 4];
        faces
            .iter()
            .for_each(|&f| by[f.count_ones() as usize].push(f));
        let index: HashMap<Mask, usize> = by[1].iter().enumerate().map(|(i, &m)| (m, i)).collect();
        let cols: Vec<Vec<(usize, i64)>> = by[2]
            .iter()
            .map(|&f| {
                let v: Vec<u32> = ones(f).collect();
                let mut c = vec![(index[&(1 << v[1])], 1), (index[&(1 << v[0])], -1)];
                c.sort();
                c
            })
            .collect();
        assert_eq!(eliminate::<i64>(&cols), eliminate::<BigInt>(&cols));
        assert_eq!(eliminate::<i64>(&cols), Some(rank_mod_p(&cols, 7)));
    }
}
