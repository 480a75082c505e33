#![allow(dead_code)]

use gdminors::GDMatrix;

/// Non-increasing sequences of positive integers below `top`, of length
/// below `max_len`.
fn ladders(top: usize, max_len: usize) -> Vec<Vec<usize>> {
    fn go(top: usize, max_len: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(cur.clone());
        if cur.len() + 1 >= max_len {
            return;
        }
        let hi = cur.last().copied().unwrap_or(top - 1);
        for v in 1..=hi {
            cur.push(v);
            go(top, max_len, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(top, max_len, &mut Vec::new(), &mut out);
    out
}

/// Every valid GD matrix of size `n × m`.
pub fn all_shapes(n: usize, m: usize) -> Vec<GDMatrix> {
    let ls = ladders(n, m);
    let mut out = Vec::new();
    for c in &ls {
        for d in &ls {
            let d: Vec<usize> = d.iter().rev().copied().collect();
            if let Ok(x) = GDMatrix::new(n, m, c.clone(), d) {
                out.push(x);
            }
        }
    }
    out
}

/// Valid triangle-ladder matrices `(n, m, t1, t2)` in the given ranges.
pub fn triangle_instances(
    ns: std::ops::RangeInclusive<usize>,
    tmax: usize,
) -> Vec<(usize, usize, usize, usize, GDMatrix)> {
    let mut out = Vec::new();
    for n in ns.clone() {
        for m in ns.clone() {
            for t1 in 0..=tmax {
                for t2 in 0..=tmax {
                    if let Ok(x) = GDMatrix::triangles(n, m, t1, t2) {
                        out.push((n, m, t1, t2, x));
                    }
                }
            }
        }
    }
    out
}

use proptest::prelude::*;

/// Random valid GD matrices up to the given size.
pub fn gd_matrix(max_n: usize, max_m: usize) -> impl Strategy<Value = GDMatrix> {
    (1..=max_n, 1..=max_m)
        .prop_flat_map(|(n, m)| {
            let h = 1..n.max(2);
            (
                Just(n),
                Just(m),
                proptest::collection::vec(h.clone(), 0..m),
                proptest::collection::vec(h, 0..m),
            )
        })
        .prop_filter_map("ladders must fit", |(n, m, mut c, mut d)| {
            c.sort_unstable_by(|a, b| b.cmp(a));
            d.sort_unstable();
            GDMatrix::new(n, m, c, d).ok()
        })
}

/// A random subset of the nonzero cells.
pub fn gd_with_subset(
    max_n: usize,
    max_m: usize,
) -> impl Strategy<Value = (GDMatrix, gdminors::CellSet)> {
    gd_matrix(max_n, max_m)
        .prop_flat_map(|x| {
            let k = x.num_cells();
            (Just(x), proptest::collection::vec(any::<bool>(), k))
        })
        .prop_map(|(x, keep)| {
            let s = x
                .cells()
                .iter()
                .zip(keep)
                .filter(|(_, k)| *k)
                .map(|(c, _)| *c)
                .collect();
            (x, s)
        })
}
