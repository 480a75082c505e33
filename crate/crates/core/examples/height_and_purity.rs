//! Compares enumerated heights with the triangle-ladder formula, and purity
//! with the corner-diagonal criterion for 2-minors.

use gdminors::complex::{height, height_formula_triangles, is_pure, is_pure_predicted};
use gdminors::{GDMatrix, MinorsProblem, Result};

pub fn run() -> Result<()> {
    for (n, m, t1, t2, r) in [
        (4, 4, 0, 0, 3),
        (5, 5, 2, 0, 3),
        (5, 4, 1, 2, 2),
        (4, 5, 2, 2, 3),
    ] {
        let p = MinorsProblem::new(GDMatrix::triangles(n, m, t1, t2)?, r)?;
        println!(
            "{n}x{m} t=({t1},{t2}) r={r}: height {} (formula {}), pure {}",
            height(&p)?,
            height_formula_triangles(n, m, t1, t2, r),
            is_pure(&p)?
        );
    }
    for c in [vec![2], vec![2, 2], vec![3, 1]] {
        let p = MinorsProblem::new(GDMatrix::new(4, 4, c.clone(), vec![])?, 2)?;
        println!(
            "4x4 c={c:?} r=2: pure {}, predicted {:?}",
            is_pure(&p)?,
            is_pure_predicted(&p)
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().expect("example runs");
}
