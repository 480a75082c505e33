//! The Stanley-Reisner complex of the initial ideal of `r × r` minors: its
//! faces are the cell sets without an `r`-diagonal.

mod engines;
mod simplicial;

pub(crate) use engines::ladder_fits;
pub(crate) use simplicial::{deletion_masks, faces_of, link_masks, ones, Mask};
pub use simplicial::{Complex, ComplexReport, MAX_VERTICES};

use serde::{Deserialize, Serialize};

use crate::cell::CellSet;
use crate::error::{Error, Result};
use crate::gdmatrix::GDMatrix;
use crate::stairs::longest_diagonal;

pub const DEFAULT_CELL_BUDGET: usize = 36;
pub const DEFAULT_FVECTOR_BUDGET: usize = 24;

/// A GD matrix together with the minor size `r`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinorsProblem {
    matrix: GDMatrix,
    r: usize,
}

impl MinorsProblem {
    pub fn new(matrix: GDMatrix, r: usize) -> Result<Self> {
        let top = matrix.n().min(matrix.m());
        if r == 0 || r > top {
            return Err(Error::InvalidProblem(format!(
                "r = {r} must lie in 1..={top}"
            )));
        }
        Ok(MinorsProblem { matrix, r })
    }

    pub fn matrix(&self) -> &GDMatrix {
        &self.matrix
    }

    pub fn r(&self) -> usize {
        self.r
    }

    /// No `r`-diagonal exists among the nonzero cells, so every minor vanishes.
    pub fn ideal_is_zero(&self) -> bool {
        longest_diagonal(self.matrix.cells()) < self.r
    }

    /// `U_{r-1} ∪ D_{r-1}`, contained in every facet.
    pub fn corner_cells(&self) -> CellSet {
        let k = self.r - 1;
        self.matrix.triangle_u(k).union(&self.matrix.triangle_d(k))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Engine {
    #[default]
    General,
    Paths,
}

#[derive(Clone, Copy, Debug)]
pub struct EnumOptions {
    pub engine: Engine,
    pub cell_budget: usize,
    pub parallel: bool,
}

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions {
            engine: Engine::General,
            cell_budget: DEFAULT_CELL_BUDGET,
            parallel: true,
        }
    }
}

pub fn is_face(p: &MinorsProblem, cells: &CellSet) -> bool {
    longest_diagonal(cells) < p.r
}

/// Facets with the default options.
pub fn facets(p: &MinorsProblem) -> Result<Vec<CellSet>> {
    facets_with(p, &EnumOptions::default())
}

/// All facets, sorted lexicographically by their sorted cell lists.
pub fn facets_with(p: &MinorsProblem, opts: &EnumOptions) -> Result<Vec<CellSet>> {
    if p.ideal_is_zero() {
        return Ok(vec![p.matrix.universe()]);
    }
    match opts.engine {
        Engine::General => engines::general(p.matrix.cells(), p.r, opts.cell_budget, opts.parallel),
        Engine::Paths => engines::paths(&p.matrix, p.r, opts.parallel),
    }
}

/// `true` when the paths engine is exact on this instance.
pub fn paths_engine_supports(p: &MinorsProblem) -> bool {
    let rev: Vec<usize> = p.matrix.d().iter().rev().copied().collect();
    p.r <= 2
        || p.ideal_is_zero()
        || (engines::ladder_fits(p.matrix.c(), p.r) && engines::ladder_fits(&rev, p.r))
}

/// `Δ` as an explicit complex on the whole universe.
pub fn complex(p: &MinorsProblem) -> Result<Complex> {
    complex_with(p, &EnumOptions::default())
}

pub fn complex_with(p: &MinorsProblem, opts: &EnumOptions) -> Result<Complex> {
    Complex::new(p.matrix.universe(), facets_with(p, opts)?)
}

fn dim_of(facets: &[CellSet]) -> isize {
    facets.iter().map(|f| f.len() as isize).max().unwrap_or(0) - 1
}

pub fn dimension(p: &MinorsProblem) -> Result<isize> {
    Ok(dim_of(&facets(p)?))
}

/// `dim R − dim Δ − 1`.
pub fn height(p: &MinorsProblem) -> Result<usize> {
    let d = dimension(p)?;
    Ok((p.matrix.num_cells() as isize - d - 1) as usize)
}

/// `(n − r + 1)(m − r + 1)`.
pub fn en(n: usize, m: usize, r: usize) -> i64 {
    (n as i64 - r as i64 + 1) * (m as i64 - r as i64 + 1)
}

/// `binom(n − r + 2, 2)`, zero when the top index is below 2.
pub fn ens(n: usize, r: usize) -> i64 {
    let a = n as i64 - r as i64 + 2;
    if a < 2 {
        0
    } else {
        a * (a - 1) / 2
    }
}

/// Height of the ideal of `r`-minors for triangle ladders, 0 when that
/// ideal is zero.
pub fn height_formula_triangles(n: usize, m: usize, t1: usize, t2: usize, r: usize) -> usize {
    if let Ok(x) = GDMatrix::triangles(n, m, t1, t2) {
        if longest_diagonal(x.cells()) < r {
            return 0;
        }
    }
    (en(n, m, r) - ens(t1, r) - ens(t2, r)).max(0) as usize
}

pub fn is_pure(p: &MinorsProblem) -> Result<bool> {
    let f = facets(p)?;
    Ok(f.iter().all(|x| x.len() == f[0].len()))
}

/// Corner-diagonal purity criterion, only available for `r = 2`.
///
/// Zero rows and columns are deleted first. The criterion implies purity;
/// the converse holds when the reduced matrix is unpinched.
pub fn is_pure_predicted(p: &MinorsProblem) -> Option<bool> {
    if p.r != 2 {
        return None;
    }
    if p.ideal_is_zero() {
        return Some(true);
    }
    let x = p.matrix.without_zero_lines().matrix;
    let same_diagonal = |cs: &[crate::Cell]| {
        cs.windows(2)
            .all(|w| w[0].row + w[1].col == w[1].row + w[0].col)
    };
    let rev: Vec<usize> = x.d().iter().rev().copied().collect();
    let fits = |seq: &[usize]| seq.iter().enumerate().all(|(i, &v)| v + i < p.r);
    Some(
        (same_diagonal(&x.corners_l1()) || fits(x.c()))
            && (same_diagonal(&x.corners_l2()) || fits(&rev)),
    )
}

/// Face counts `f_0 … f_dim` by enumerating every subset of the universe.
pub fn f_vector(p: &MinorsProblem, cell_budget: usize) -> Result<Vec<u64>> {
    let cells = p.matrix.cells();
    if cells.len() > cell_budget.min(63) {
        return Err(Error::UniverseTooLarge {
            cells: cells.len(),
            budget: cell_budget.min(63),
        });
    }
    if p.r == 1 {
        return Ok(vec![]);
    }
    // Depth-first over cells in (row, col) order, tracking the longest chain
    // ending at each chosen cell.
    fn go(
        cells: &[crate::Cell],
        r: usize,
        i: usize,
        chosen: &mut Vec<(usize, usize)>,
        counts: &mut Vec<u64>,
    ) {
        if i == cells.len() {
            if !chosen.is_empty() {
                if counts.len() < chosen.len() {
                    counts.resize(chosen.len(), 0);
                }
                counts[chosen.len() - 1] += 1;
            }
            return;
        }
        let below = chosen
            .iter()
            .filter(|(j, _)| cells[*j].precedes(&cells[i]))
            .map(|&(_, l)| l)
            .max()
            .unwrap_or(0);
        if below + 1 < r {
            chosen.push((i, below + 1));
            go(cells, r, i + 1, chosen, counts);
            chosen.pop();
        }
        go(cells, r, i + 1, chosen, counts);
    }
    let mut counts = Vec::new();
    go(cells, p.r, 0, &mut Vec::new(), &mut counts);
    Ok(counts)
}
