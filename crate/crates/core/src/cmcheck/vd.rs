//! Vertex decomposability: an exhaustive search for small complexes and the
//! ladder recursion that certifies triangle-ladder complexes.

use std::collections::HashMap;

use crate::cell::{Cell, CellSet};
use crate::complex::{
    self, deletion_masks, ladder_fits, link_masks, ones, Complex, Mask, MinorsProblem,
};
use crate::error::{Error, Result};
use crate::stairs::scrape;

use super::certificate::{CertNode, LadderState, VDCertificate};

pub const DEFAULT_VERTEX_BUDGET: usize = 14;
pub const DEFAULT_NODE_BUDGET: usize = 1 << 20;

pub fn is_vertex_decomposable(k: &Complex) -> Result<bool> {
    is_vertex_decomposable_with(k, DEFAULT_VERTEX_BUDGET)
}

/// Exhaustive search over shedding vertices, memoized on a relabelled
/// facet list.
pub fn is_vertex_decomposable_with(k: &Complex, vertex_budget: usize) -> Result<bool> {
    let used = k.facet_masks().iter().fold(0, |a, f| a | f);
    let nv = used.count_ones() as usize;
    if nv > vertex_budget.min(32) {
        return Err(Error::BudgetExceeded(format!(
            "{nv} vertices, search budget is {}",
            vertex_budget.min(32)
        )));
    }
    let pos: Vec<u32> = ones(used).collect();
    let compress = |f: Mask| -> u32 {
        pos.iter()
            .enumerate()
            .filter(|(_, &v)| f >> v & 1 == 1)
            .map(|(i, _)| 1 << i)
            .sum()
    };
    let facets: Vec<u32> = k.facet_masks().iter().map(|&f| compress(f)).collect();
    Ok(Search::default().vd(canonical(&facets)))
}

/// Relabels vertices by first appearance in the sorted facet list and
/// re-sorts. Not an isomorphism invariant, but stable and cheap.
fn canonical(facets: &[u32]) -> Vec<u32> {
    let mut sorted: Vec<Vec<u32>> = facets.iter().map(|&f| ones(f as Mask).collect()).collect();
    sorted.sort();
    let mut label = [u32::MAX; 32];
    let mut next = 0;
    let mut out: Vec<u32> = sorted
        .iter()
        .map(|f| {
            f.iter().fold(0u32, |m, &v| {
                if label[v as usize] == u32::MAX {
                    label[v as usize] = next;
                    next += 1;
                }
                m | 1 << label[v as usize]
            })
        })
        .collect();
    out.sort_unstable();
    out
}

#[derive(Default)]
struct Search {
    memo: HashMap<Vec<u32>, bool>,
}

impl Search {
    fn vd(&mut self, facets: Vec<u32>) -> bool {
        if facets == [0] {
            return true;
        }
        let size = facets[0].count_ones();
        if facets.iter().any(|f| f.count_ones() != size) {
            return false;
        }
        if facets.len() == 1 {
            return true;
        }
        if let Some(&v) = self.memo.get(&facets) {
            return v;
        }
        let wide: Vec<Mask> = facets.iter().map(|&f| f as Mask).collect();
        let used = facets.iter().fold(0, |a, f| a | f);
        let ok = ones(used as Mask).any(|v| {
            let bit = 1 << v;
            let narrow =
                |m: Vec<Mask>| canonical(&m.into_iter().map(|x| x as u32).collect::<Vec<_>>());
            self.vd(narrow(link_masks(&wide, bit))) && self.vd(narrow(deletion_masks(&wide, bit)))
        });
        self.memo.insert(facets, ok);
        ok
    }
}

/// `true` when both ladders are triangles or fit inside the
/// `(r-1)`-triangles.
pub fn is_triangle_shape(p: &MinorsProblem) -> bool {
    let rev: Vec<usize> = p.matrix().d().iter().rev().copied().collect();
    ladder_fits(p.matrix().c(), p.r()) && ladder_fits(&rev, p.r())
}

pub fn vd_certificate_triangles(p: &MinorsProblem) -> Result<VDCertificate> {
    vd_certificate_triangles_with(p, DEFAULT_NODE_BUDGET)
}

/// Builds the ladder decision tree for a triangle-shaped problem.
///
/// The corner triangles are coned off first. Then corners of the deleted
/// ladder are split on in row order until every corner is linked; at that
/// point a first row or column lying inside the deleted ladder is dropped,
/// or else the tendril through the linked corners is coned off and the
/// recursion continues on `r − 1` minors below the first row.
pub fn vd_certificate_triangles_with(
    p: &MinorsProblem,
    node_budget: usize,
) -> Result<VDCertificate> {
    if !is_triangle_shape(p) {
        return Err(Error::NotTriangleShape);
    }
    let k = complex::complex(p)?;
    let cert = |root| VDCertificate {
        matrix: p.matrix().spec(),
        r: p.r(),
        root,
    };
    let mut g = Generator {
        k: &k,
        nodes: 0,
        budget: node_budget,
    };
    if k.num_facets() == 1 {
        return Ok(cert(g.leaf(k.facet_masks()[0])));
    }
    let apex = p.corner_cells();
    let a = k.to_mask(&apex).expect("corner cells are vertices");
    let region = Region {
        cells: p.matrix().universe().difference(&apex),
        origin: Cell::new(1, 1),
        r: p.r(),
        state: LadderState::default(),
    };
    let base = g.region(region, link_masks(k.facet_masks(), a))?;
    Ok(cert(if apex.is_empty() {
        base
    } else {
        CertNode::Cone {
            apex,
            base: Box::new(base),
        }
    }))
}

struct Region {
    /// Nonzero cells still in play, including the ladder.
    cells: CellSet,
    origin: Cell,
    r: usize,
    state: LadderState,
}

struct Generator<'a> {
    k: &'a Complex,
    nodes: usize,
    budget: usize,
}

impl Generator<'_> {
    fn leaf(&self, f: Mask) -> CertNode {
        CertNode::Leaf {
            simplex: self.k.to_cells(f),
        }
    }

    fn bit(&self, v: Cell) -> Mask {
        self.k
            .to_mask(&CellSet::from_iter([v]))
            .expect("region cells are vertices")
    }

    fn region(&mut self, mut reg: Region, facets: Vec<Mask>) -> Result<CertNode> {
        loop {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::RecursionBudget(self.budget));
            }
            if facets.len() == 1 {
                return Ok(self.leaf(facets[0]));
            }
            if reg.cells.is_empty() || reg.r <= 1 {
                return Err(Error::CertificateAbort(format!(
                    "region at {} ran out with {} facets left",
                    reg.origin,
                    facets.len()
                )));
            }
            let corners = reg.state.corners(&reg.cells, reg.origin);
            if let Some(&v) = corners.iter().find(|c| !reg.state.linked.contains(c)) {
                let b = self.bit(v);
                if !facets.iter().any(|f| f & b != 0) {
                    // Not a vertex: deleting it changes nothing.
                    reg.state =
                        LadderState::new(with(&reg.state.deleted, v), reg.state.linked.clone());
                    continue;
                }
                let state = reg.state.clone();
                let del = Region {
                    cells: reg.cells.clone(),
                    origin: reg.origin,
                    r: reg.r,
                    state: LadderState::new(with(&state.deleted, v), state.linked.clone()),
                };
                let deletion = self.region(del, deletion_masks(&facets, b))?;
                reg.state = LadderState::new(state.deleted.clone(), with(&state.linked, v));
                let link = self.region(reg, link_masks(&facets, b))?;
                return Ok(CertNode::Split {
                    vertex: v,
                    state: Some(state),
                    deletion: Box::new(deletion),
                    link: Box::new(link),
                });
            }
            let (row, col) = (reg.origin.row, reg.origin.col);
            if reg
                .cells
                .iter()
                .filter(|x| x.row == row)
                .all(|x| reg.state.deleted.contains(x))
            {
                reg = drop_line(reg, |x| x.row == row, Cell::new(row + 1, col), 0);
                continue;
            }
            if reg
                .cells
                .iter()
                .filter(|x| x.col == col)
                .all(|x| reg.state.deleted.contains(x))
            {
                reg = drop_line(reg, |x| x.col == col, Cell::new(row, col + 1), 0);
                continue;
            }
            return self.tendril_cone(reg, facets);
        }
    }

    /// Every facet, together with the linked corners, contains the same
    /// stair through those corners; cone it off and continue with `r − 1`
    /// below the first row.
    fn tendril_cone(&mut self, reg: Region, facets: Vec<Mask>) -> Result<CertNode> {
        let linked = &reg.state.linked;
        let mut tendril: Option<CellSet> = None;
        for &f in &facets {
            let mut rest = self.k.to_cells(f).union(linked);
            let mut through = Vec::new();
            while !rest.is_empty() {
                let s = scrape_cells(&rest);
                rest = rest.difference(&s);
                if linked.is_subset(&s) {
                    through.push(s);
                }
            }
            let [t] = through.as_slice() else {
                return Err(Error::CertificateAbort(format!(
                    "{} stairs pass through the linked corners {linked}",
                    through.len()
                )));
            };
            match &tendril {
                None => tendril = Some(t.clone()),
                Some(prev) if prev == t => {}
                Some(prev) => {
                    return Err(Error::CertificateAbort(format!(
                        "tendril through {linked} is not unique: {prev} vs {t}"
                    )))
                }
            }
        }
        let t = tendril.expect("facet list is never empty");
        let apex = t.difference(linked);
        let row = reg.origin.row;
        let deleted = reg.state.deleted.union(&t);
        let next = drop_line(
            Region {
                state: LadderState::new(deleted, CellSet::new()),
                ..reg
            },
            |x| x.row == row,
            Cell::new(row + 1, reg.origin.col),
            1,
        );
        if !next.state.deleted_is_ladder_shape(next.origin) {
            return Err(Error::CertificateAbort(format!(
                "ladder {} below the tendril is not a ladder shape",
                next.state.deleted
            )));
        }
        let a = self.k.to_mask(&apex).expect("tendril cells are vertices");
        let base = self.region(next, link_masks(&facets, a))?;
        Ok(if apex.is_empty() {
            base
        } else {
            CertNode::Cone {
                apex,
                base: Box::new(base),
            }
        })
    }
}

fn with(s: &CellSet, v: Cell) -> CellSet {
    let mut out = s.clone();
    out.insert(v);
    out
}

/// Removes a boundary line from the region; `lower` is subtracted from `r`.
fn drop_line(reg: Region, on_line: impl Fn(&Cell) -> bool, origin: Cell, lower: usize) -> Region {
    let keep = |s: &CellSet| -> CellSet { s.iter().filter(|x| !on_line(x)).copied().collect() };
    Region {
        cells: keep(&reg.cells),
        origin,
        r: reg.r - lower,
        state: LadderState::new(keep(&reg.state.deleted), keep(&reg.state.linked)),
    }
}

/// Scraping needs no matrix beyond the set itself.
fn scrape_cells(cells: &CellSet) -> CellSet {
    let n = cells.iter().map(|x| x.row).max().unwrap_or(1);
    let m = cells.iter().map(|x| x.col).max().unwrap_or(1);
    let host = crate::gdmatrix::GDMatrix::generic(n, m).expect("positive dimensions");
    scrape(&host, cells)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cmcheck::certificate::validate_certificate;
    use crate::GDMatrix;

    fn cs(p: &[(usize, usize)]) -> CellSet {
        CellSet::from_pairs(p)
    }

    #[test]
    fn small_complexes() {
        assert!(
            is_vertex_decomposable(&Complex::simplex(cs(&[(1, 1), (1, 2), (1, 3)])).unwrap())
                .unwrap()
        );
        assert!(is_vertex_decomposable(&Complex::new(CellSet::new(), []).unwrap()).unwrap());
        let two_edges =
            Complex::from_facets([cs(&[(1, 1), (1, 2)]), cs(&[(2, 1), (2, 2)])]).unwrap();
        assert!(!is_vertex_decomposable(&two_edges).unwrap());
        let path = Complex::from_facets([cs(&[(1, 1), (1, 2)]), cs(&[(1, 2), (1, 3)])]).unwrap();
        assert!(is_vertex_decomposable(&path).unwrap());
        let big = Complex::simplex((1..=15).map(|j| Cell::new(1, j)).collect()).unwrap();
        assert!(is_vertex_decomposable(&big).is_err());
    }

    #[test]
    fn pinched_verdict() {
        // Pure, three facets of size 3 pairwise meeting in an edge.
        let p = MinorsProblem::new(GDMatrix::new(3, 3, vec![2, 1], vec![2]).unwrap(), 3).unwrap();
        let k = complex::complex(&p).unwrap();
        assert!(is_vertex_decomposable(&k).unwrap());
    }

    #[test]
    fn canonical_key_ignores_vertex_names() {
        assert_eq!(canonical(&[0b0011, 0b0110]), canonical(&[0b1100, 0b0110]));
    }

    #[test]
    fn certificates_replay() {
        for (x, r) in [
            (GDMatrix::generic(2, 2).unwrap(), 2),
            (GDMatrix::generic(3, 3).unwrap(), 2),
            (GDMatrix::triangles(3, 3, 1, 1).unwrap(), 2),
            (GDMatrix::generic(4, 4).unwrap(), 3),
        ] {
            let p = MinorsProblem::new(x, r).unwrap();
            let c = vd_certificate_triangles(&p).unwrap();
            let v = validate_certificate(&p, &c);
            assert!(v.valid, "{:?} r={r}: {v:?}", p.matrix().spec());
        }
        let c = vd_certificate_triangles(
            &MinorsProblem::new(GDMatrix::generic(2, 2).unwrap(), 2).unwrap(),
        )
        .unwrap();
        assert!(c.root.depth() <= 4);
    }

    #[test]
    fn square_ladder_is_refused() {
        let p = MinorsProblem::new(GDMatrix::new(4, 4, vec![2, 2], vec![]).unwrap(), 2).unwrap();
        assert_eq!(vd_certificate_triangles(&p), Err(Error::NotTriangleShape));
    }
}
