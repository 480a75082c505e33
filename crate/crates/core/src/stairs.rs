//! Chains, stairs and the scraping operator.

use std::cmp::Ordering;

use serde::Serialize;

use crate::cell::{succ_compare, Cell, CellSet};
use crate::error::{Error, Result};
use crate::gdmatrix::GDMatrix;

/// Length of the longest chain of cells strictly increasing in both row and
/// column, i.e. the largest `k` with a `k`-diagonal inside `cells`.
pub fn longest_diagonal<'a, I: IntoIterator<Item = &'a Cell>>(cells: I) -> usize {
    let mut v: Vec<Cell> = cells.into_iter().copied().collect();
    // Within a row columns descend, so no two cells of one row can both
    // extend the same strictly increasing column sequence.
    v.sort_by(|a, b| a.row.cmp(&b.row).then(b.col.cmp(&a.col)));
    let mut tails: Vec<usize> = Vec::new();
    for x in v {
        let k = tails.partition_point(|&t| t < x.col);
        if k == tails.len() {
            tails.push(x.col);
        } else {
            tails[k] = x.col;
        }
    }
    tails.len()
}

/// Condition `F_k`: no `k`-diagonal inside `cells`.
pub fn satisfies_f(cells: &CellSet, k: usize) -> bool {
    longest_diagonal(cells) < k
}

/// Minimal number of stairs covering `cells`. Equal to the longest chain by
/// Mirsky's theorem.
pub fn stair_number(_m: &GDMatrix, cells: &CellSet) -> usize {
    longest_diagonal(cells)
}

/// The scraped cells `y_1 ≻ y_2 ≻ …` in the order they are picked.
pub fn scrape_sequence(m: &GDMatrix, cells: &CellSet) -> Vec<Cell> {
    debug_assert!(
        cells.iter().all(|&x| m.is_nonzero(x)),
        "scrape input leaves the universe"
    );
    let max_succ = |it: &mut dyn Iterator<Item = Cell>| it.max_by(|a, b| succ_compare(*a, *b));
    let mut out = Vec::new();
    let mut cur = max_succ(&mut cells.iter().copied());
    while let Some(y) = cur {
        out.push(y);
        // B(y) ∩ C; membership in C already implies nonzero.
        cur = max_succ(
            &mut cells
                .iter()
                .copied()
                .filter(|x| x.row <= y.row && x.col >= y.col && *x != y),
        );
    }
    out
}

/// `S(C)`: the top-left perimeter of `C`.
pub fn scrape(m: &GDMatrix, cells: &CellSet) -> CellSet {
    scrape_sequence(m, cells).into_iter().collect()
}

/// Longest chain ending at and starting from each cell of a set.
struct Profile {
    cells: Vec<Cell>,
    ending: Vec<usize>,
    starting: Vec<usize>,
}

impl Profile {
    fn new(set: &CellSet) -> Self {
        let cells = set.to_vec();
        let k = cells.len();
        let mut ending = vec![1; k];
        for i in 0..k {
            for j in 0..i {
                if cells[j].precedes(&cells[i]) {
                    ending[i] = ending[i].max(ending[j] + 1);
                }
            }
        }
        let mut starting = vec![1; k];
        for i in (0..k).rev() {
            for j in i + 1..k {
                if cells[i].precedes(&cells[j]) {
                    starting[i] = starting[i].max(starting[j] + 1);
                }
            }
        }
        Profile {
            cells,
            ending,
            starting,
        }
    }

    /// Longest chain through `x` after adding it to the set.
    fn through(&self, x: Cell) -> usize {
        let mut before = 0;
        let mut after = 0;
        for (i, c) in self.cells.iter().enumerate() {
            if c.precedes(&x) {
                before = before.max(self.ending[i]);
            } else if x.precedes(c) {
                after = after.max(self.starting[i]);
            }
        }
        before + 1 + after
    }
}

/// `C` has a `k`-diagonal but no `(k+1)`-diagonal, and adding any other
/// nonzero cell creates a `(k+1)`-diagonal.
pub fn is_maximal_kstair(m: &GDMatrix, cells: &CellSet, k: usize) -> bool {
    if longest_diagonal(cells) != k {
        return false;
    }
    let p = Profile::new(cells);
    m.cells()
        .iter()
        .filter(|x| !cells.contains(x))
        .all(|&x| p.through(x) > k)
}

/// Cells that could be added to `cells` without creating a `(k+1)`-diagonal.
pub fn free_cells(m: &GDMatrix, cells: &CellSet, k: usize) -> Vec<Cell> {
    let p = Profile::new(cells);
    m.cells()
        .iter()
        .filter(|x| !cells.contains(x) && p.through(**x) <= k)
        .copied()
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StairDecomposition {
    pub stairs: Vec<CellSet>,
    pub tendrils: Vec<CellSet>,
}

/// Peels a maximal `k`-stair into `k` stairs by repeated scraping and strips
/// the corner triangles `U_{k-1} ∪ D_{k-1}` off each one.
pub fn stair_decomposition(m: &GDMatrix, cells: &CellSet, k: usize) -> Result<StairDecomposition> {
    if !is_maximal_kstair(m, cells, k) {
        return Err(Error::NotMaximalKStair(k));
    }
    let corners = m
        .triangle_u(k.saturating_sub(1))
        .union(&m.triangle_d(k.saturating_sub(1)));
    let mut rest = cells.clone();
    let mut stairs = Vec::with_capacity(k);
    while !rest.is_empty() {
        let s = scrape(m, &rest);
        rest = rest.difference(&s);
        stairs.push(s);
    }
    let tendrils = stairs.iter().map(|s| s.difference(&corners)).collect();
    Ok(StairDecomposition { stairs, tendrils })
}

/// Sizes of the tendrils, in decomposition order.
pub fn tendril_sizes(d: &StairDecomposition) -> Vec<usize> {
    d.tendrils.iter().map(|t| t.len()).collect()
}

/// `true` when the scraped sequence is strictly `≻`-decreasing.
pub fn is_succ_sorted(seq: &[Cell]) -> bool {
    seq.windows(2)
        .all(|w| succ_compare(w[0], w[1]) == Ordering::Greater)
}
