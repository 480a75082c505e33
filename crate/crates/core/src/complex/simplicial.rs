//! Explicit simplicial complexes given by facet lists over cell vertices.

use std::collections::HashSet;

use serde::Serialize;

use crate::cell::{Cell, CellSet};
use crate::error::{Error, Result};

/// Vertex subsets are stored as bit masks, so a complex has at most this
/// many vertices.
pub const MAX_VERTICES: usize = 128;

pub(crate) type Mask = u128;

/// A simplicial complex: a vertex set plus inclusion-maximal facets.
///
/// The facet list is never empty; `{∅}` is represented by the single empty
/// facet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Complex {
    vertices: Vec<Cell>,
    facets: Vec<Mask>,
}

impl Complex {
    /// Builds a complex from facet generators. Non-maximal generators are
    /// dropped; an empty generator list gives `{∅}`.
    pub fn new<I: IntoIterator<Item = CellSet>>(vertices: CellSet, facets: I) -> Result<Self> {
        if vertices.len() > MAX_VERTICES {
            return Err(Error::BudgetExceeded(format!(
                "complex has {} vertices, at most {MAX_VERTICES} are supported",
                vertices.len()
            )));
        }
        let vertices = vertices.to_vec();
        let mut masks = Vec::new();
        for f in facets {
            let mut mask = 0;
            for c in &f {
                let i = vertices.binary_search(c).map_err(|_| {
                    Error::InvalidParameters(format!("facet vertex {c} is not a vertex"))
                })?;
                mask |= 1 << i;
            }
            masks.push(mask);
        }
        Ok(Self::from_masks(vertices, masks))
    }

    /// Complex whose vertex set is the union of the facets.
    pub fn from_facets<I: IntoIterator<Item = CellSet>>(facets: I) -> Result<Self> {
        let facets: Vec<CellSet> = facets.into_iter().collect();
        let vertices = facets.iter().flat_map(|f| f.iter().copied()).collect();
        Self::new(vertices, facets)
    }

    pub fn simplex(cells: CellSet) -> Result<Self> {
        Self::new(cells.clone(), [cells])
    }

    pub(crate) fn from_masks(vertices: Vec<Cell>, masks: Vec<Mask>) -> Self {
        let mut facets = maximalize(masks);
        if facets.is_empty() {
            facets.push(0);
        }
        let mut k = Complex { vertices, facets };
        k.sort_facets();
        k
    }

    fn sort_facets(&mut self) {
        // Lexicographic on sorted cell lists; bit i is vertex i in sorted order,
        // so comparing the ascending index lists gives the same result.
        let key = |m: &Mask| -> Vec<u32> { ones(*m).collect() };
        self.facets.sort_by_cached_key(key);
    }

    pub fn vertices(&self) -> CellSet {
        self.vertices.iter().copied().collect()
    }

    #[cfg(test)]
    pub(crate) fn vertex_list(&self) -> &[Cell] {
        &self.vertices
    }

    pub(crate) fn facet_masks(&self) -> &[Mask] {
        &self.facets
    }

    pub(crate) fn to_cells(&self, mask: Mask) -> CellSet {
        ones(mask).map(|i| self.vertices[i as usize]).collect()
    }

    pub(crate) fn to_mask(&self, cells: &CellSet) -> Option<Mask> {
        let mut mask = 0;
        for c in cells {
            mask |= 1 << self.vertices.binary_search(c).ok()?;
        }
        Some(mask)
    }

    /// Facets in lexicographic order of their sorted cell lists.
    pub fn facets(&self) -> Vec<CellSet> {
        self.facets.iter().map(|&m| self.to_cells(m)).collect()
    }

    pub fn num_facets(&self) -> usize {
        self.facets.len()
    }

    /// Largest facet size minus one; `-1` for `{∅}`.
    pub fn dimension(&self) -> isize {
        self.facets
            .iter()
            .map(|f| f.count_ones() as isize)
            .max()
            .unwrap_or(0)
            - 1
    }

    pub fn is_pure(&self) -> bool {
        let k = self.facets[0].count_ones();
        self.facets.iter().all(|f| f.count_ones() == k)
    }

    pub fn is_empty_face_only(&self) -> bool {
        self.facets == [0]
    }

    pub fn contains_face(&self, face: &CellSet) -> bool {
        self.to_mask(face)
            .is_some_and(|m| self.facets.iter().any(|f| f & m == m))
    }

    /// `Link_F = {G : G ∩ F = ∅, G ∪ F ∈ K}` over the same vertex set.
    pub fn link(&self, face: &CellSet) -> Result<Complex> {
        let f = self
            .to_mask(face)
            .filter(|m| self.facets.iter().any(|g| g & m == *m))
            .ok_or_else(|| Error::NotAFace(face.to_string()))?;
        Ok(Self::from_masks(
            self.vertices.clone(),
            link_masks(&self.facets, f),
        ))
    }

    /// `Del_F = {G ∈ K : G ∩ F = ∅}` over the same vertex set.
    pub fn deletion(&self, face: &CellSet) -> Result<Complex> {
        let f = self
            .to_mask(face)
            .ok_or_else(|| Error::NotAFace(face.to_string()))?;
        Ok(Self::from_masks(
            self.vertices.clone(),
            deletion_masks(&self.facets, f),
        ))
    }

    /// `K * L = {F ∪ G}` for complexes on disjoint vertex sets.
    pub fn join(&self, other: &Complex) -> Result<Complex> {
        let a = self.vertices();
        let b = other.vertices();
        if !a.is_disjoint(&b) {
            return Err(Error::VertexClash);
        }
        let mut facets = Vec::with_capacity(self.facets.len() * other.facets.len());
        for f in self.facets() {
            for g in other.facets() {
                facets.push(f.union(&g));
            }
        }
        Complex::new(a.union(&b), facets)
    }

    /// Face counts `f_0, …, f_dim`, enumerating the downset of the facets.
    pub fn f_vector(&self, face_budget: usize) -> Result<Vec<u64>> {
        let faces = self.faces(face_budget)?;
        let mut f = vec![0u64; (self.dimension() + 1) as usize];
        for m in faces {
            if m != 0 {
                f[m.count_ones() as usize - 1] += 1;
            }
        }
        Ok(f)
    }

    /// Every face, `∅` included.
    pub(crate) fn faces(&self, face_budget: usize) -> Result<Vec<Mask>> {
        faces_of(&self.facets, face_budget)
    }
}

pub(crate) fn ones(mut m: Mask) -> impl Iterator<Item = u32> {
    std::iter::from_fn(move || {
        (m != 0).then(|| {
            let i = m.trailing_zeros();
            m &= m - 1;
            i
        })
    })
}

/// Keeps the inclusion-maximal masks, deduplicated.
pub(crate) fn maximalize(mut masks: Vec<Mask>) -> Vec<Mask> {
    masks.sort_unstable_by_key(|m| std::cmp::Reverse(m.count_ones()));
    masks.dedup();
    let mut out: Vec<Mask> = Vec::with_capacity(masks.len());
    for m in masks {
        if !out.iter().any(|&f| f & m == m) {
            out.push(m);
        }
    }
    out
}

pub(crate) fn link_masks(facets: &[Mask], f: Mask) -> Vec<Mask> {
    facets
        .iter()
        .filter(|&&g| g & f == f)
        .map(|&g| g & !f)
        .collect()
}

pub(crate) fn deletion_masks(facets: &[Mask], f: Mask) -> Vec<Mask> {
    maximalize(facets.iter().map(|&g| g & !f).collect())
}

pub(crate) fn faces_of(facets: &[Mask], face_budget: usize) -> Result<Vec<Mask>> {
    let mut seen: HashSet<Mask> = HashSet::new();
    for &f in facets {
        // Walk every subset of f; skip subtrees already recorded.
        let mut stack = vec![f];
        while let Some(g) = stack.pop() {
            if !seen.insert(g) {
                continue;
            }
            if seen.len() > face_budget {
                return Err(Error::BudgetExceeded(format!(
                    "more than {face_budget} faces"
                )));
            }
            for i in ones(g) {
                let h = g & !(1 << i);
                if !seen.contains(&h) {
                    stack.push(h);
                }
            }
        }
    }
    let mut v: Vec<Mask> = seen.into_iter().collect();
    v.sort_unstable_by_key(|m| (m.count_ones(), *m));
    Ok(v)
}

/// Facet-list JSON form used by the CLI and certificates.
#[derive(Serialize)]
pub struct ComplexReport {
    pub vertices: CellSet,
    pub facets: Vec<CellSet>,
    pub dimension: isize,
    pub pure: bool,
}

impl From<&Complex> for ComplexReport {
    fn from(k: &Complex) -> Self {
        ComplexReport {
            vertices: k.vertices(),
            facets: k.facets(),
            dimension: k.dimension(),
            pure: k.is_pure(),
        }
    }
}
