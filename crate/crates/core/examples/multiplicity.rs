//! Multiplicity of triangle-ladder ideals: the path-determinant formula,
//! facet counting, and the LGV lemma against brute force.

use gdminors::multiplicity::{
    brute_nonintersecting, lgv_det, multiplicity_by_count, multiplicity_formula,
    multiplicity_generic_classical, PathBudget, PathEndpoints,
};
use gdminors::{GDMatrix, MinorsProblem, Result};

pub fn run() -> Result<()> {
    println!(
        "formula (4,4,0,0,3) = {}",
        multiplicity_formula(4, 4, 0, 0, 3)?
    );
    println!(
        "classical generic count = {}",
        multiplicity_generic_classical(4, 4, 3)
    );
    let p = MinorsProblem::new(GDMatrix::generic(4, 4)?, 3)?;
    let c = multiplicity_by_count(&p)?;
    println!(
        "facet count = {} of {} facets (pure {})",
        c.top, c.total, c.pure
    );

    for (n, m, t1, t2, r) in [(3, 3, 1, 1, 2), (5, 5, 2, 1, 3), (6, 5, 2, 2, 4)] {
        println!(
            "f_d({n},{m},{t1},{t2},{r}) = {}",
            multiplicity_formula(n, m, t1, t2, r)?
        );
    }

    let e = PathEndpoints::new(vec![(1, 3), (2, 4)], vec![(3, 1), (4, 2)])?;
    println!("path matrix {:?}", e.path_matrix());
    println!(
        "LGV det {} vs brute force {}",
        lgv_det(&e),
        brute_nonintersecting(&e, &PathBudget::default())?
    );
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().expect("example runs");
}
