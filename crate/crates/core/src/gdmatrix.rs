//! Generalized diagonal matrices: a generic `n × m` matrix with a ladder of
//! zeros in the bottom-left corner (`L1`) and another in the top-right (`L2`).

use std::fmt;
use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};

use crate::cell::{succ_compare, Cell, CellSet};
use crate::error::{Error, LadderSide, Result, Violation};

/// A validated GD matrix.
///
/// `c[j-1]` is the number of zeros at the bottom of column `j`. `d` is stored
/// right-aligned: `d[k]` is the number of zeros at the top of column
/// `m - d.len() + 1 + k`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GDMatrix {
    n: usize,
    m: usize,
    c: Vec<usize>,
    d: Vec<usize>,
    cells: Vec<Cell>,
}

impl GDMatrix {
    /// Validates the ladder shapes and builds the matrix. Every violated
    /// constraint is reported, not only the first.
    pub fn new(n: usize, m: usize, c: Vec<usize>, d: Vec<usize>) -> Result<Self> {
        let mut bad = Vec::new();
        if n == 0 || m == 0 {
            bad.push(Violation::EmptyDimension { n, m });
            return Err(Error::InvalidMatrix(bad));
        }
        check_ladder(&c, LadderSide::Lower, n, m, &mut bad);
        let rev: Vec<usize> = d.iter().rev().copied().collect();
        check_ladder(&rev, LadderSide::Upper, n, m, &mut bad);
        if !bad.is_empty() {
            return Err(Error::InvalidMatrix(bad));
        }
        Ok(Self::from_ladders_unchecked(n, m, c, d))
    }

    /// Generic matrix without zeros.
    pub fn generic(n: usize, m: usize) -> Result<Self> {
        Self::new(n, m, vec![], vec![])
    }

    /// Triangle ladders `c = (t1, …, 1)` and `d = (1, …, t2)`.
    pub fn triangles(n: usize, m: usize, t1: usize, t2: usize) -> Result<Self> {
        Self::new(n, m, (1..=t1).rev().collect(), (1..=t2).collect())
    }

    /// Skips validation. Used for sub-blocks and reductions whose ladder
    /// sequences are derived from an already valid matrix.
    pub(crate) fn from_ladders_unchecked(n: usize, m: usize, c: Vec<usize>, d: Vec<usize>) -> Self {
        let mut g = GDMatrix {
            n,
            m,
            c,
            d,
            cells: Vec::new(),
        };
        g.cells = (1..=n)
            .flat_map(|i| (1..=m).map(move |j| Cell::new(i, j)))
            .filter(|&x| !g.in_l1(x) && !g.in_l2(x))
            .collect();
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn c(&self) -> &[usize] {
        &self.c
    }

    pub fn d(&self) -> &[usize] {
        &self.d
    }

    /// Zeros at the bottom of column `j` contributed by `L1`.
    pub fn lower_height(&self, j: usize) -> usize {
        if j >= 1 && j <= self.c.len() {
            self.c[j - 1]
        } else {
            0
        }
    }

    /// Zeros at the top of column `j` contributed by `L2`.
    pub fn upper_depth(&self, j: usize) -> usize {
        let t = self.m + 1 - self.d.len();
        if j >= t && j <= self.m {
            self.d[j - t]
        } else {
            0
        }
    }

    pub fn in_l1(&self, x: Cell) -> bool {
        x.row + self.lower_height(x.col) > self.n
    }

    pub fn in_l2(&self, x: Cell) -> bool {
        x.row <= self.upper_depth(x.col)
    }

    pub fn in_bounds(&self, x: Cell) -> bool {
        (1..=self.n).contains(&x.row) && (1..=self.m).contains(&x.col)
    }

    pub fn is_nonzero(&self, x: Cell) -> bool {
        self.in_bounds(x) && !self.in_l1(x) && !self.in_l2(x)
    }

    /// Nonzero cells in (row, col) order.
    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn num_cells(&self) -> usize {
        self.cells.len()
    }

    pub fn universe(&self) -> CellSet {
        self.cells.iter().copied().collect()
    }

    /// `B(y)`: nonzero cells weakly above and weakly right of `y`, except `y`.
    pub fn upper_set(&self, y: Cell) -> Result<CellSet> {
        if !self.is_nonzero(y) {
            return Err(Error::CellIsZero(y));
        }
        Ok(self
            .cells
            .iter()
            .filter(|x| x.row <= y.row && x.col >= y.col && **x != y)
            .copied()
            .collect())
    }

    /// Nonzero cells with empty `B`, in `≻`-descending order.
    pub fn corners_l2(&self) -> Vec<Cell> {
        let mut out: Vec<Cell> = self
            .cells
            .iter()
            .filter(|y| {
                !self
                    .cells
                    .iter()
                    .any(|x| x != *y && x.row <= y.row && x.col >= y.col)
            })
            .copied()
            .collect();
        out.sort_by(|a, b| succ_compare(*b, *a));
        out
    }

    /// Nonzero cells with no other nonzero cell weakly below and weakly left,
    /// by ascending row.
    pub fn corners_l1(&self) -> Vec<Cell> {
        // Cells are row-sorted already.
        self.cells
            .iter()
            .filter(|y| {
                !self
                    .cells
                    .iter()
                    .any(|x| x != *y && x.row >= y.row && x.col <= y.col)
            })
            .copied()
            .collect()
    }

    /// `U_k`: nonzero cells with `j - i ≥ m - k`.
    pub fn triangle_u(&self, k: usize) -> CellSet {
        self.cells
            .iter()
            .filter(|x| x.col + k >= self.m + x.row && k > 0)
            .copied()
            .collect()
    }

    /// `D_k`: nonzero cells with `i - j ≥ n - k`.
    pub fn triangle_d(&self, k: usize) -> CellSet {
        self.cells
            .iter()
            .filter(|x| x.row + k >= self.n + x.col && k > 0)
            .copied()
            .collect()
    }

    /// Top-left cells `(i, j)` of contiguous `[[*, 0], [0, *]]` windows.
    pub fn pinches(&self) -> Vec<Cell> {
        self.cells
            .iter()
            .filter(|x| {
                self.is_nonzero(Cell::new(x.row + 1, x.col + 1))
                    && !self.is_nonzero(Cell::new(x.row, x.col + 1))
                    && !self.is_nonzero(Cell::new(x.row + 1, x.col))
            })
            .copied()
            .collect()
    }

    pub fn is_unpinched(&self) -> bool {
        self.pinches().is_empty()
    }

    /// Splits the matrix at every pinch into diagonal blocks.
    pub fn unpinched_blocks(&self) -> Vec<Block> {
        let mut cuts = self.pinches();
        cuts.sort();
        let mut blocks = Vec::with_capacity(cuts.len() + 1);
        let (mut r0, mut c0) = (1, 1);
        for p in cuts
            .into_iter()
            .chain(std::iter::once(Cell::new(self.n, self.m)))
        {
            blocks.push(self.block(r0..=p.row, c0..=p.col));
            r0 = p.row + 1;
            c0 = p.col + 1;
        }
        blocks
    }

    fn block(&self, rows: RangeInclusive<usize>, cols: RangeInclusive<usize>) -> Block {
        let (r0, r1) = (*rows.start(), *rows.end());
        let count =
            |j: usize, f: &dyn Fn(Cell) -> bool| (r0..=r1).filter(|&i| f(Cell::new(i, j))).count();
        let c: Vec<usize> = cols
            .clone()
            .map(|j| count(j, &|x| self.in_l1(x)))
            .take_while(|&h| h > 0)
            .collect();
        let mut d: Vec<usize> = cols
            .clone()
            .map(|j| count(j, &|x| self.in_l2(x) && !self.in_l1(x)))
            .collect();
        let lead = d.iter().take_while(|&&h| h == 0).count();
        d.drain(..lead);
        let matrix =
            GDMatrix::from_ladders_unchecked(r1 + 1 - r0, cols.end() + 1 - cols.start(), c, d);
        Block { rows, cols, matrix }
    }

    /// Enlarges both ladders to contain the `(r-1)`-triangles, i.e. zeroes
    /// `U_{r-1}` and `D_{r-1}`.
    pub fn zero_corner_triangles(&self, r: usize) -> Result<GDMatrix> {
        if r == 0 {
            return Err(Error::InvalidProblem("r must be at least 1".into()));
        }
        let k = r - 1;
        if k >= self.m {
            return Err(Error::ResultDegenerate(format!(
                "the {k}-triangles cover a whole row of a {}-column matrix",
                self.m
            )));
        }
        let len = self.c.len().max(k);
        let c: Vec<usize> = (1..=len)
            .map(|j| self.lower_height(j).max(k.saturating_sub(j - 1)))
            .collect();
        let len = self.d.len().max(k);
        let d: Vec<usize> = (0..len)
            .map(|i| {
                let j = self.m + i + 1 - len;
                self.upper_depth(j).max((i + k + 1).saturating_sub(len))
            })
            .collect();
        GDMatrix::new(self.n, self.m, c, d).map_err(|e| Error::ResultDegenerate(e.to_string()))
    }

    /// The transposed GD matrix; `L1` and `L2` trade places.
    pub fn transpose(&self) -> GDMatrix {
        let c: Vec<usize> = (1..=self.n)
            .map(|i| (1..=self.m).filter(|&j| i <= self.upper_depth(j)).count())
            .take_while(|&h| h > 0)
            .collect();
        let mut d: Vec<usize> = (1..=self.n)
            .map(|i| {
                (1..=self.m)
                    .filter(|&j| i + self.lower_height(j) > self.n)
                    .count()
            })
            .collect();
        let lead = d.iter().take_while(|&&h| h == 0).count();
        d.drain(..lead);
        GDMatrix::from_ladders_unchecked(self.m, self.n, c, d)
    }

    /// Rows and columns containing no nonzero cell.
    pub fn zero_lines(&self) -> (Vec<usize>, Vec<usize>) {
        let rows = (1..=self.n)
            .filter(|&i| !self.cells.iter().any(|x| x.row == i))
            .collect();
        let cols = (1..=self.m)
            .filter(|&j| !self.cells.iter().any(|x| x.col == j))
            .collect();
        (rows, cols)
    }

    /// Deletes every row and column that the two ladders zero out completely.
    /// The result has the same nonzero pattern, re-indexed, so the ideals of
    /// minors coincide.
    pub fn without_zero_lines(&self) -> Reduced {
        let (zr, zc) = self.zero_lines();
        let rows: Vec<usize> = (1..=self.n).filter(|i| !zr.contains(i)).collect();
        let cols: Vec<usize> = (1..=self.m).filter(|j| !zc.contains(j)).collect();
        let c: Vec<usize> = cols
            .iter()
            .map(|&j| {
                rows.iter()
                    .filter(|&&i| self.in_l1(Cell::new(i, j)))
                    .count()
            })
            .take_while(|&h| h > 0)
            .collect();
        let mut d: Vec<usize> = cols
            .iter()
            .map(|&j| {
                rows.iter()
                    .filter(|&&i| self.in_l2(Cell::new(i, j)) && !self.in_l1(Cell::new(i, j)))
                    .count()
            })
            .collect();
        let lead = d.iter().take_while(|&&h| h == 0).count();
        d.drain(..lead);
        let matrix = GDMatrix::from_ladders_unchecked(rows.len().max(1), cols.len().max(1), c, d);
        Reduced { matrix, rows, cols }
    }

    /// Canonical spec with explicit ladder sequences.
    pub fn spec(&self) -> MatrixSpec {
        MatrixSpec {
            n: self.n,
            m: self.m,
            c: Some(self.c.clone()),
            d: Some(self.d.clone()),
            t1: None,
            t2: None,
        }
    }

    /// `Some(t)` when `L1` is the staircase `(t, …, 1)`.
    pub fn lower_triangle_size(&self) -> Option<usize> {
        is_staircase(&self.c).then_some(self.c.len())
    }

    /// `Some(t)` when `L2` is the staircase `(1, …, t)`.
    pub fn upper_triangle_size(&self) -> Option<usize> {
        let rev: Vec<usize> = self.d.iter().rev().copied().collect();
        is_staircase(&rev).then_some(self.d.len())
    }
}

pub(crate) fn is_staircase(seq: &[usize]) -> bool {
    seq.iter().enumerate().all(|(i, &v)| v == seq.len() - i)
}

fn check_ladder(seq: &[usize], side: LadderSide, n: usize, m: usize, bad: &mut Vec<Violation>) {
    for (i, &v) in seq.iter().enumerate() {
        if v == 0 {
            bad.push(Violation::ZeroEntry {
                ladder: side,
                position: i + 1,
            });
        }
        if i > 0 && v > seq[i - 1] {
            bad.push(Violation::NonMonotoneLadder {
                ladder: side,
                position: i + 1,
            });
        }
    }
    if let Some(&h) = seq.iter().max() {
        if h >= n {
            bad.push(Violation::LadderTooTall {
                ladder: side,
                height: h,
                n,
            });
        }
    }
    if seq.len() >= m {
        bad.push(Violation::LadderTooWide {
            ladder: side,
            width: seq.len(),
            m,
        });
    }
}

/// `make_gd` under its conventional name.
pub fn make_gd(n: usize, m: usize, c: &[usize], d: &[usize]) -> Result<GDMatrix> {
    GDMatrix::new(n, m, c.to_vec(), d.to_vec())
}

pub fn make_triangles(n: usize, m: usize, t1: usize, t2: usize) -> Result<GDMatrix> {
    GDMatrix::triangles(n, m, t1, t2)
}

/// A diagonal block produced by [`GDMatrix::unpinched_blocks`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub rows: RangeInclusive<usize>,
    pub cols: RangeInclusive<usize>,
    pub matrix: GDMatrix,
}

impl Block {
    /// Block cells in the coordinates of the parent matrix.
    pub fn cells(&self) -> CellSet {
        let (dr, dc) = (self.rows.start() - 1, self.cols.start() - 1);
        self.matrix
            .cells()
            .iter()
            .map(|x| Cell::new(x.row + dr, x.col + dc))
            .collect()
    }
}

/// A matrix with its zero rows and columns removed; `rows[i-1]` is the
/// original index of reduced row `i`.
#[derive(Clone, Debug)]
pub struct Reduced {
    pub matrix: GDMatrix,
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

/// JSON matrix description. Triangle shorthand (`t1`, `t2`) is accepted in
/// place of `c` or `d`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixSpec {
    pub n: usize,
    pub m: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t1: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t2: Option<usize>,
}

impl MatrixSpec {
    pub fn build(&self) -> Result<GDMatrix> {
        let c = match (&self.c, self.t1) {
            (Some(_), Some(_)) => {
                return Err(Error::InvalidParameters(
                    "give either c or t1, not both".into(),
                ))
            }
            (Some(c), None) => c.clone(),
            (None, Some(t)) => (1..=t).rev().collect(),
            (None, None) => vec![],
        };
        let d = match (&self.d, self.t2) {
            (Some(_), Some(_)) => {
                return Err(Error::InvalidParameters(
                    "give either d or t2, not both".into(),
                ))
            }
            (Some(d), None) => d.clone(),
            (None, Some(t)) => (1..=t).collect(),
            (None, None) => vec![],
        };
        GDMatrix::new(self.n, self.m, c, d)
    }
}

impl Serialize for GDMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.spec().serialize(s)
    }
}

impl<'de> Deserialize<'de> for GDMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        MatrixSpec::deserialize(d)?
            .build()
            .map_err(serde::de::Error::custom)
    }
}

impl fmt::Debug for GDMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "GDMatrix {{ n: {}, m: {}, c: {:?}, d: {:?} }}",
            self.n, self.m, self.c, self.d
        )
    }
}

/// Draws nonzero entries as `*` and zeros as `0`.
impl fmt::Display for GDMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.n {
            let row: Vec<&str> = (1..=self.m)
                .map(|j| {
                    if self.is_nonzero(Cell::new(i, j)) {
                        "*"
                    } else {
                        "0"
                    }
                })
                .collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pinched() -> GDMatrix {
        GDMatrix::new(3, 3, vec![2, 1], vec![2]).unwrap()
    }

    fn cs(p: &[(usize, usize)]) -> CellSet {
        CellSet::from_pairs(p)
    }

    #[test]
    fn construction_examples() {
        assert_eq!(GDMatrix::generic(4, 4).unwrap().num_cells(), 16);
        assert_eq!(pinched().universe(), cs(&[(1, 1), (1, 2), (2, 2), (3, 3)]));
        match GDMatrix::new(4, 4, vec![4], vec![]) {
            Err(Error::InvalidMatrix(v)) => assert_eq!(v[0].kind(), "LadderTooTall"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn every_violation_is_listed() {
        let Err(Error::InvalidMatrix(v)) = GDMatrix::new(3, 2, vec![1, 3], vec![3, 1]) else {
            panic!()
        };
        let kinds: Vec<_> = v.iter().map(|x| x.kind()).collect();
        assert!(kinds.contains(&"NonMonotoneLadder"));
        assert!(kinds.contains(&"LadderTooTall"));
        assert!(kinds.contains(&"LadderTooWide"));
    }

    #[test]
    fn triangle_examples() {
        let t = GDMatrix::triangles(5, 6, 2, 1).unwrap();
        assert_eq!(t.num_cells(), 26);
        for z in [(4, 1), (5, 1), (5, 2), (1, 6)] {
            assert!(!t.is_nonzero(z.into()));
        }
        assert_eq!(GDMatrix::triangles(3, 3, 1, 1).unwrap().num_cells(), 7);
        assert_eq!(
            GDMatrix::triangles(4, 4, 0, 0).unwrap(),
            GDMatrix::generic(4, 4).unwrap()
        );
    }

    #[test]
    fn upper_set_examples() {
        let g = GDMatrix::generic(2, 2).unwrap();
        assert_eq!(
            g.upper_set(Cell::new(2, 1)).unwrap(),
            cs(&[(1, 1), (1, 2), (2, 2)])
        );
        assert!(GDMatrix::generic(3, 5)
            .unwrap()
            .upper_set(Cell::new(1, 5))
            .unwrap()
            .is_empty());
        assert_eq!(pinched().upper_set(Cell::new(2, 2)).unwrap(), cs(&[(1, 2)]));
        assert_eq!(
            pinched().upper_set(Cell::new(1, 3)),
            Err(Error::CellIsZero(Cell::new(1, 3)))
        );
    }

    #[test]
    fn corner_examples() {
        let t = GDMatrix::triangles(3, 3, 1, 1).unwrap();
        assert_eq!(t.corners_l2(), vec![Cell::new(1, 2), Cell::new(2, 3)]);
        assert_eq!(t.corners_l1(), vec![Cell::new(2, 1), Cell::new(3, 2)]);
        let g = GDMatrix::generic(3, 4).unwrap();
        assert_eq!(g.corners_l2(), vec![Cell::new(1, 4)]);
        assert_eq!(g.corners_l1(), vec![Cell::new(3, 1)]);
        let t = GDMatrix::triangles(4, 4, 0, 1).unwrap();
        assert_eq!(t.corners_l2(), vec![Cell::new(1, 3), Cell::new(2, 4)]);
    }

    #[test]
    fn triangle_corners_match_closed_form() {
        for n in 2..=6 {
            for m in 2..=6 {
                for t1 in 0..n.min(m) {
                    for t2 in 0..n.min(m) {
                        let x = GDMatrix::triangles(n, m, t1, t2).unwrap();
                        if !x.zero_lines().0.is_empty() || !x.zero_lines().1.is_empty() {
                            continue;
                        }
                        let a: Vec<Cell> =
                            (1..=t1 + 1).map(|a| Cell::new(n - t1 - 1 + a, a)).collect();
                        let b: Vec<Cell> =
                            (1..=t2 + 1).map(|b| Cell::new(b, m - t2 - 1 + b)).collect();
                        assert_eq!(x.corners_l1(), a, "{x:?}");
                        assert_eq!(x.corners_l2(), b, "{x:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn triangles_u_d() {
        let g = GDMatrix::generic(4, 4).unwrap();
        assert_eq!(g.triangle_u(1), cs(&[(1, 4)]));
        assert_eq!(g.triangle_d(1), cs(&[(4, 1)]));
        assert!(g.triangle_u(0).is_empty() && g.triangle_d(0).is_empty());
        assert!(GDMatrix::triangles(4, 4, 2, 0)
            .unwrap()
            .triangle_d(2)
            .is_empty());
    }

    #[test]
    fn blocks() {
        let b = pinched().unpinched_blocks();
        assert_eq!(b.len(), 2);
        assert_eq!(b[0].cells(), cs(&[(1, 1), (1, 2), (2, 2)]));
        assert_eq!((b[0].matrix.n(), b[0].matrix.m()), (2, 2));
        assert_eq!(b[1].cells(), cs(&[(3, 3)]));
        let g = GDMatrix::generic(4, 4).unwrap();
        assert_eq!(g.unpinched_blocks().len(), 1);
        assert_eq!(g.unpinched_blocks()[0].matrix, g);
        assert!(GDMatrix::triangles(5, 5, 2, 2).unwrap().is_unpinched());
    }

    #[test]
    fn zeroing_triangles() {
        let g = GDMatrix::generic(4, 4).unwrap();
        let z = g.zero_corner_triangles(3).unwrap();
        assert_eq!(z, GDMatrix::triangles(4, 4, 2, 2).unwrap());
        assert_eq!(z.zero_corner_triangles(3).unwrap(), z);
        let p = pinched().zero_corner_triangles(3).unwrap();
        assert_eq!(p.c(), &[2, 1]);
        assert_eq!(p.d(), &[1, 2]);
        assert_eq!(p.universe(), cs(&[(1, 1), (2, 2), (3, 3)]));
        assert!(matches!(
            GDMatrix::generic(2, 2).unwrap().zero_corner_triangles(3),
            Err(Error::ResultDegenerate(_))
        ));
    }

    #[test]
    fn transpose_swaps_ladders() {
        let x = GDMatrix::new(5, 4, vec![3, 1], vec![1, 2]).unwrap();
        let t = x.transpose();
        let flipped: CellSet = x.cells().iter().map(|c| Cell::new(c.col, c.row)).collect();
        assert_eq!(t.universe(), flipped);
        assert_eq!(t.transpose(), x);
    }

    #[test]
    fn spec_round_trip() {
        let s: MatrixSpec = serde_json::from_str(r#"{"n":4,"m":4,"t1":2,"t2":2}"#).unwrap();
        let x = s.build().unwrap();
        assert_eq!(
            serde_json::to_string(&x).unwrap(),
            r#"{"n":4,"m":4,"c":[2,1],"d":[1,2]}"#
        );
        let y: GDMatrix = serde_json::from_str(r#"{"n":4,"m":4,"c":[2,1],"d":[1,2]}"#).unwrap();
        assert_eq!(x, y);
    }

    #[test]
    fn zero_line_reduction_keeps_pattern() {
        // Column 2 is zeroed by both ladders together.
        let x = GDMatrix::new(3, 3, vec![2, 1], vec![2, 2]).unwrap();
        let r = x.without_zero_lines();
        assert_eq!(r.matrix.num_cells(), x.num_cells());
        let back: CellSet = r
            .matrix
            .cells()
            .iter()
            .map(|c| Cell::new(r.rows[c.row - 1], r.cols[c.col - 1]))
            .collect();
        assert_eq!(back, x.universe());
    }
}
