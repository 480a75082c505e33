//! Verifies that the minors form a Gröbner basis and lists the initial ideal.

use gdminors::complex::{facets, is_face};
use gdminors::groebner::{initial_ideal_gens, minor, verify_groebner, Rational};
use gdminors::{GDMatrix, MinorsProblem, Result};

pub fn run() -> Result<()> {
    let x = GDMatrix::new(3, 3, vec![2, 1], vec![2])?;
    let d = minor::<Rational>(&x, &[1, 2], &[1, 2])?;
    println!("minor rows 1,2 cols 1,2 = {}", d.render(&x));

    let p = MinorsProblem::new(GDMatrix::triangles(4, 4, 1, 1)?, 3)?;
    let rep = verify_groebner(&p)?;
    println!(
        "{} nonzero minors, {} pairs reduced, {} coprime pairs skipped, Gröbner: {}",
        rep.nonzero_minors, rep.pairs_checked, rep.pairs_skipped_coprime, rep.groebner
    );
    let gens = initial_ideal_gens(&p);
    println!(
        "{} initial-ideal generators, e.g. {}",
        gens.len(),
        gens[0].render(p.matrix())
    );
    let f = &facets(&p)?[0];
    println!("facet {f} is a face: {}", is_face(&p, f));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().expect("example runs");
}
