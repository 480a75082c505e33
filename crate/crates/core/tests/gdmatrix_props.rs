mod common;

use gdminors::{make_triangles, Cell, CellSet, GDMatrix, MatrixSpec};
use proptest::prelude::*;

fn set(cs: &[Cell]) -> CellSet {
    cs.iter().copied().collect()
}

#[test]
fn triangle_corner_examples() {
    let x = make_triangles(3, 3, 1, 1).unwrap();
    assert_eq!(set(&x.corners_l2()), CellSet::from_pairs(&[(1, 2), (2, 3)]));
    assert_eq!(set(&x.corners_l1()), CellSet::from_pairs(&[(2, 1), (3, 2)]));
    let y = make_triangles(4, 4, 0, 1).unwrap();
    assert_eq!(set(&y.corners_l2()), CellSet::from_pairs(&[(1, 3), (2, 4)]));
}

#[test]
fn triangle_corners_closed_form() {
    for n in 2..=7 {
        for m in 2..=7 {
            for t1 in 0..n {
                for t2 in 0..m {
                    let Ok(x) = make_triangles(n, m, t1, t2) else {
                        continue;
                    };
                    let b: CellSet = (1..=t2 + 1)
                        .map(|b| Cell::new(b, m - t2 - 1 + b))
                        .filter(|c| c.row <= n)
                        .collect();
                    let a: CellSet = (1..=t1 + 1)
                        .map(|a| Cell::new(n - t1 - 1 + a, a))
                        .filter(|c| c.col <= m)
                        .collect();
                    assert_eq!(set(&x.corners_l2()), b, "{n}x{m} t=({t1},{t2})");
                    assert_eq!(set(&x.corners_l1()), a, "{n}x{m} t=({t1},{t2})");
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn validation_round_trip(n in 1usize..7, m in 1usize..7, c in prop::collection::vec(0usize..8, 0..7), d in prop::collection::vec(0usize..8, 0..7)) {
        let ok = c.len() < m.max(1) && d.len() < m.max(1)
            && c.iter().all(|&v| v >= 1 && v < n) && d.iter().all(|&v| v >= 1 && v < n)
            && c.windows(2).all(|w| w[0] >= w[1]) && d.windows(2).all(|w| w[0] <= w[1]);
        match GDMatrix::new(n, m, c.clone(), d.clone()) {
            Ok(x) => {
                prop_assert!(ok);
                let spec = x.spec();
                let json = serde_json::to_string(&spec).unwrap();
                let back: MatrixSpec = serde_json::from_str(&json).unwrap();
                prop_assert_eq!(back.build().unwrap(), x);
            }
            Err(_) => prop_assert!(!ok),
        }
    }

    #[test]
    fn corners_have_empty_upper_sets(x in common::gd_matrix(6, 6)) {
        let by_def: CellSet = x.cells().iter().filter(|&&y| x.upper_set(y).unwrap().is_empty()).copied().collect();
        prop_assert_eq!(set(&x.corners_l2()), by_def);
    }

    #[test]
    fn blocks_partition_the_cells(x in common::gd_matrix(7, 7)) {
        let blocks = x.unpinched_blocks();
        let mut all = CellSet::new();
        for (i, b) in blocks.iter().enumerate() {
            prop_assert!(b.matrix.is_unpinched() || b.matrix.num_cells() == 0);
            let cells = b.cells();
            prop_assert!(all.is_disjoint(&cells));
            all = all.union(&cells);
            for o in &blocks[i + 1..] {
                prop_assert!(b.rows.end() < o.rows.start() && b.cols.end() < o.cols.start());
            }
        }
        prop_assert_eq!(all, x.universe());
    }

    #[test]
    fn zeroing_corner_triangles(x in common::gd_matrix(7, 7), r in 1usize..5) {
        if let Ok(y) = x.zero_corner_triangles(r) {
            prop_assert!(y.universe().is_subset(&x.universe()));
            prop_assert!(y.triangle_u(r - 1).is_empty() && y.triangle_d(r - 1).is_empty());
            prop_assert_eq!(y.zero_corner_triangles(r).unwrap(), y.clone());
            let removed = x.universe().difference(&y.universe());
            prop_assert_eq!(removed, x.triangle_u(r - 1).union(&x.triangle_d(r - 1)));
        }
    }

    #[test]
    fn transpose_is_an_involution(x in common::gd_matrix(6, 6)) {
        let t = x.transpose();
        let flipped: CellSet = x.cells().iter().map(|c| Cell::new(c.col, c.row)).collect();
        prop_assert_eq!(t.universe(), flipped);
        prop_assert_eq!(t.transpose(), x);
    }
}
