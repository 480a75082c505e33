//! The two facet enumerators: an exact branch-and-bound search over the
//! whole universe, and a lattice-path construction for ladders that contain
//! the corner triangles.

use rayon::prelude::*;

use crate::cell::{Cell, CellSet};
use crate::error::{Error, Result};
use crate::gdmatrix::{is_staircase, GDMatrix};
use crate::stairs::longest_diagonal;

/// Depth up to which the search forks onto the rayon pool.
const PAR_DEPTH: usize = 10;

struct Search {
    r: usize,
    n: usize,
    pred: Vec<u64>,
    succ: Vec<u64>,
    /// Longest chain in the universe starting at each cell.
    reach: Vec<usize>,
    parallel: bool,
}

#[derive(Clone)]
struct State {
    chosen: u64,
    /// Cells left out although they were addable when decided.
    pending: u64,
    /// For chosen cells: longest chosen chain ending there. For pending
    /// cells: chain length still required after the cell to block it.
    len: [u8; 64],
}

impl Search {
    fn new(cells: &[Cell], r: usize, parallel: bool) -> Self {
        let n = cells.len();
        let mask = |f: &dyn Fn(&Cell) -> bool| -> u64 {
            cells
                .iter()
                .enumerate()
                .filter(|(_, c)| f(c))
                .fold(0, |m, (j, _)| m | 1 << j)
        };
        let pred: Vec<u64> = cells.iter().map(|x| mask(&|c| c.precedes(x))).collect();
        let succ: Vec<u64> = cells.iter().map(|x| mask(&|c| x.precedes(c))).collect();
        let mut reach = vec![1; n];
        for i in (0..n).rev() {
            for j in i + 1..n {
                if succ[i] >> j & 1 == 1 {
                    reach[i] = reach[i].max(reach[j] + 1);
                }
            }
        }
        Search {
            r,
            n,
            pred,
            succ,
            reach,
            parallel,
        }
    }

    fn run(&self, i: usize, st: &mut State) -> Vec<u64> {
        if i == self.n {
            return if self.pending_blocked(st) {
                vec![st.chosen]
            } else {
                vec![]
            };
        }
        let below = self.longest_before(i, st);
        let addable = below + 1 < self.r;
        let leave_ok = !addable || below + self.reach[i] >= self.r;
        let include = |st: &mut State| {
            st.chosen |= 1 << i;
            st.len[i] = (below + 1) as u8;
            let out = self.run(i + 1, st);
            st.chosen &= !(1 << i);
            out
        };
        let exclude = |st: &mut State| {
            if addable {
                st.pending |= 1 << i;
                st.len[i] = (self.r - 1 - below) as u8;
            }
            let out = self.run(i + 1, st);
            st.pending &= !(1 << i);
            out
        };
        if self.parallel && i < PAR_DEPTH && addable && leave_ok {
            let mut other = st.clone();
            let (mut a, b) = rayon::join(|| include(st), || exclude(&mut other));
            a.extend(b);
            return a;
        }
        let mut out = if addable { include(st) } else { vec![] };
        if leave_ok {
            out.extend(exclude(st));
        }
        out
    }

    fn longest_before(&self, i: usize, st: &State) -> usize {
        let mut best = 0;
        let mut m = self.pred[i] & st.chosen;
        while m != 0 {
            let j = m.trailing_zeros() as usize;
            best = best.max(st.len[j] as usize);
            m &= m - 1;
        }
        best
    }

    /// Every pending cell has a long enough chosen chain after it.
    fn pending_blocked(&self, st: &State) -> bool {
        if st.pending == 0 {
            return true;
        }
        let mut start = [0u8; 64];
        for i in (0..self.n).rev() {
            if st.chosen >> i & 1 == 0 {
                continue;
            }
            let mut best = 0;
            let mut m = self.succ[i] & st.chosen;
            while m != 0 {
                let j = m.trailing_zeros() as usize;
                best = best.max(start[j]);
                m &= m - 1;
            }
            start[i] = best + 1;
        }
        let mut p = st.pending;
        while p != 0 {
            let x = p.trailing_zeros() as usize;
            p &= p - 1;
            let mut after = 0;
            let mut m = self.succ[x] & st.chosen;
            while m != 0 {
                let j = m.trailing_zeros() as usize;
                after = after.max(start[j]);
                m &= m - 1;
            }
            if after < st.len[x] {
                return false;
            }
        }
        true
    }
}

/// Maximal subsets of `cells` without an `r`-diagonal, by exhaustive
/// branch-and-bound. Each maximal set is reached exactly once: cells are
/// decided in (row, col) order, a cell is left out only if some later
/// choice can still block it, and leaves are kept only when every left-out
/// cell ends up blocked.
pub(crate) fn general(
    cells: &[Cell],
    r: usize,
    budget: usize,
    parallel: bool,
) -> Result<Vec<CellSet>> {
    let n = cells.len();
    if n > budget.min(64) {
        return Err(Error::UniverseTooLarge {
            cells: n,
            budget: budget.min(64),
        });
    }
    if r == 0 {
        return Ok(vec![]);
    }
    let search = Search::new(cells, r, parallel);
    let mut st = State {
        chosen: 0,
        pending: 0,
        len: [0; 64],
    };
    let masks = search.run(0, &mut st);
    let mut out: Vec<CellSet> = masks
        .into_iter()
        .map(|m| {
            (0..n)
                .filter(|i| m >> i & 1 == 1)
                .map(|i| cells[i])
                .collect()
        })
        .collect();
    out.sort();
    Ok(out)
}

/// `true` when the ladder is a staircase or fits inside the `(r-1)`-triangle.
pub(crate) fn ladder_fits(seq: &[usize], r: usize) -> bool {
    is_staircase(seq) || seq.iter().enumerate().all(|(i, &v)| v + i < r)
}

/// Facets as unions of nonintersecting corner-to-corner path families,
/// joined with the cells of the corner triangles.
pub(crate) fn paths(m: &GDMatrix, r: usize, parallel: bool) -> Result<Vec<CellSet>> {
    let universe = m.universe();
    if longest_diagonal(&universe) < r {
        return Ok(vec![universe]);
    }
    let rev: Vec<usize> = m.d().iter().rev().copied().collect();
    if r > 2 && !(ladder_fits(m.c(), r) && ladder_fits(&rev, r)) {
        return Err(Error::EngineUnsupported(
            "path families give every facet only when r <= 2 or both ladders are triangles or fit inside the (r-1)-triangles"
                .into(),
        ));
    }
    let inner = m.zero_corner_triangles(r)?;
    let extra = universe.difference(&inner.universe());
    let mut l2 = inner.corners_l2();
    l2.sort();
    let l1 = inner.corners_l1();
    let k = r - 1;
    let pairs: Vec<(Vec<Cell>, Vec<Cell>)> = subsets(&l2, k)
        .into_iter()
        .flat_map(|b| subsets(&l1, k).into_iter().map(move |a| (b.clone(), a)))
        .collect();
    let fam = |(b, a): &(Vec<Cell>, Vec<Cell>)| -> Vec<CellSet> {
        let mut out = Vec::new();
        families(&inner, b, a, 0, &mut CellSet::new(), &mut out);
        out
    };
    let found: Vec<CellSet> = if parallel {
        pairs.par_iter().flat_map_iter(fam).collect()
    } else {
        pairs.iter().flat_map(fam).collect()
    };
    let mut out: Vec<CellSet> = found.into_iter().map(|f| f.union(&extra)).collect();
    out.sort();
    out.dedup();
    Ok(out)
}

fn subsets(items: &[Cell], k: usize) -> Vec<Vec<Cell>> {
    fn go(items: &[Cell], k: usize, start: usize, cur: &mut Vec<Cell>, out: &mut Vec<Vec<Cell>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            cur.push(items[i]);
            go(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(items, k, 0, &mut Vec::new(), &mut out);
    out
}

/// Extends `used` by a path from `from[j]` to `to[j]` for each remaining `j`.
fn families(
    m: &GDMatrix,
    from: &[Cell],
    to: &[Cell],
    j: usize,
    used: &mut CellSet,
    out: &mut Vec<CellSet>,
) {
    if j == from.len() {
        out.push(used.clone());
        return;
    }
    let (a, b) = (from[j], to[j]);
    if b.row < a.row || b.col > a.col || used.contains(&a) {
        return;
    }
    let mut path = vec![a];
    walk(m, b, &mut path, used, &mut |used: &mut CellSet| {
        families(m, from, to, j + 1, used, out)
    });
}

/// Enumerates down/left unit paths from the last cell of `path` to `goal`
/// that avoid `used`; calls `done` with the path's cells added to `used`.
fn walk(
    m: &GDMatrix,
    goal: Cell,
    path: &mut Vec<Cell>,
    used: &mut CellSet,
    done: &mut dyn FnMut(&mut CellSet),
) {
    let p = *path.last().unwrap();
    if p == goal {
        let added: Vec<Cell> = path.iter().copied().filter(|c| used.insert(*c)).collect();
        done(used);
        for c in added {
            used.remove(&c);
        }
        return;
    }
    for q in [
        Cell::new(p.row + 1, p.col),
        Cell::new(p.row, p.col.wrapping_sub(1)),
    ] {
        if q.row <= goal.row
            && q.col >= goal.col
            && q.col >= 1
            && m.is_nonzero(q)
            && !used.contains(&q)
        {
            path.push(q);
            walk(m, goal, path, used, done);
            path.pop();
        }
    }
}
