//! Scrapes a cell set, checks a maximal 2-stair and peels it into tendrils.

use gdminors::stairs::{
    is_maximal_kstair, scrape_sequence, stair_decomposition, stair_number, tendril_sizes,
};
use gdminors::{Cell, CellSet, GDMatrix, Result};

pub fn run() -> Result<()> {
    let x = GDMatrix::generic(5, 6)?;
    let c = CellSet::from_pairs(&[
        (1, 5),
        (1, 6),
        (2, 4),
        (2, 5),
        (2, 6),
        (3, 5),
        (3, 6),
        (4, 4),
        (4, 5),
        (5, 2),
        (5, 3),
        (5, 4),
        (5, 5),
    ]);
    let picked = scrape_sequence(&x, &c);
    println!("scrape order: {picked:?}");
    println!("stair number: {}", stair_number(&x, &c));

    let mut full = c.clone();
    full.extend([(3, 4), (4, 1), (4, 2), (4, 3), (5, 1)].map(Cell::from));
    println!(
        "{} cells, maximal 2-stair: {}",
        full.len(),
        is_maximal_kstair(&x, &full, 2)
    );
    let d = stair_decomposition(&x, &full, 2)?;
    for (s, t) in d.stairs.iter().zip(&d.tendrils) {
        println!("stair {s}\n  tendril {t}");
    }

    let pinched = GDMatrix::new(3, 3, vec![2, 1], vec![2])?;
    let f = CellSet::from_pairs(&[(1, 1), (1, 2), (2, 2)]);
    let d = stair_decomposition(&pinched, &f, 2)?;
    println!("pinched facet {f}: tendril sizes {:?}", tendril_sizes(&d));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().expect("example runs");
}
