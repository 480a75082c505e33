//! Decides Cohen-Macaulayness by the ladder criterion and by Reisner's
//! homological test, and shows the failing link when it fails.

use gdminors::cmcheck::{
    is_cm_predicted, reduced_homology_ranks, reisner_report, HomologyField, DEFAULT_FACE_BUDGET,
};
use gdminors::complex::complex;
use gdminors::{GDMatrix, MinorsProblem, Result};

pub fn run() -> Result<()> {
    for (c, r) in [
        (vec![2, 2], 2),
        (vec![2, 1], 2),
        (vec![2, 2], 4),
        (vec![3, 1], 3),
    ] {
        let p = MinorsProblem::new(GDMatrix::new(4, 4, c.clone(), vec![])?, r)?;
        let k = complex(&p)?;
        let rep = reisner_report(&k, HomologyField::Rational, DEFAULT_FACE_BUDGET)?;
        print!(
            "4x4 c={c:?} r={r}: predicted {}, Reisner {}",
            is_cm_predicted(&p),
            rep.cohen_macaulay
        );
        if let (Some(f), Some(h)) = (&rep.failing_face, &rep.failing_link_homology) {
            print!(" (link of {f} has reduced homology {h:?})");
        }
        println!();
    }
    let p = MinorsProblem::new(GDMatrix::generic(3, 3)?, 2)?;
    println!(
        "generic 3x3, r=2: reduced homology {:?}",
        reduced_homology_ranks(&complex(&p)?)?
    );
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().expect("example runs");
}
