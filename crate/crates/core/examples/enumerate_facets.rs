//! Enumerates the facets of the Stanley-Reisner complex with both engines.

use gdminors::complex::{self, facets_with, Engine, EnumOptions};
use gdminors::{GDMatrix, MinorsProblem, Result};

pub fn run() -> Result<()> {
    let p = MinorsProblem::new(GDMatrix::new(3, 3, vec![2, 1], vec![2])?, 3)?;
    for f in complex::facets(&p)? {
        println!("facet {f}");
    }

    let p = MinorsProblem::new(GDMatrix::triangles(4, 5, 2, 1)?, 3)?;
    let general = facets_with(&p, &EnumOptions::default())?;
    let paths = facets_with(
        &p,
        &EnumOptions {
            engine: Engine::Paths,
            ..Default::default()
        },
    )?;
    println!(
        "4x5 t=(2,1), r=3: {} facets, engines agree: {}",
        general.len(),
        general == paths
    );
    println!(
        "dimension {}, f-vector {:?}",
        complex::dimension(&p)?,
        complex::f_vector(&p, 24)?
    );
    println!("every facet contains {}", p.corner_cells());

    // Outside its domain the paths engine refuses instead of guessing.
    let q = MinorsProblem::new(GDMatrix::new(3, 4, vec![2, 2], vec![])?, 3)?;
    println!(
        "paths engine on 3x4 c=(2,2), r=3: {:?}",
        facets_with(
            &q,
            &EnumOptions {
                engine: Engine::Paths,
                ..Default::default()
            }
        )
        .err()
    );
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().expect("example runs");
}
