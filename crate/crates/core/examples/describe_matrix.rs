//! Builds GD matrices and prints their ladders, corners and unpinched blocks.

use gdminors::{make_gd, make_triangles, Result};

pub fn run() -> Result<()> {
    let pinched = make_gd(3, 3, &[2, 1], &[2])?;
    println!("{pinched}");
    println!("cells: {}", pinched.num_cells());
    println!("L1 corners: {:?}", pinched.corners_l1());
    println!("L2 corners: {:?}", pinched.corners_l2());
    println!("pinches: {:?}", pinched.pinches());
    for b in pinched.unpinched_blocks() {
        println!("block rows {:?} cols {:?}: {}", b.rows, b.cols, b.cells());
    }

    let x = make_triangles(5, 5, 2, 1)?;
    println!("{x}");
    println!("U_2 = {}, D_2 = {}", x.triangle_u(2), x.triangle_d(2));
    println!(
        "with corner triangles zeroed for r = 3:\n{}",
        x.zero_corner_triangles(3)?
    );

    match make_gd(4, 4, &[4], &[]) {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => unreachable!("a ladder as tall as the matrix is invalid"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().expect("example runs");
}
