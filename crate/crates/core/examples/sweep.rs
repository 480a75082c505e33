//! Runs the agreement sweep behind `gdminors sweep` from library code.

use gdminors::cli::{sweep, RunArgs, Shapes, SweepCheck, SweepConfig};
use gdminors::cmcheck::{DEFAULT_FACE_BUDGET, DEFAULT_VERTEX_BUDGET};
use gdminors::complex::DEFAULT_CELL_BUDGET;

pub fn run() -> gdminors::Result<()> {
    let run = RunArgs {
        budget_cells: DEFAULT_CELL_BUDGET,
        budget_faces: DEFAULT_FACE_BUDGET,
        budget_vertices: DEFAULT_VERTEX_BUDGET,
        jobs: 0,
        out: None,
        pretty: false,
    };
    let cfg = SweepConfig {
        min_n: 2,
        max_n: 4,
        max_r: 3,
        max_t: 2,
        shapes: Shapes::Triangles,
    };
    let checks = [SweepCheck::Height, SweepCheck::Multiplicity, SweepCheck::Vd];
    let out = sweep(&cfg, &checks, &run);
    println!("{}", out.report["summary"]);
    for row in out.report["rows"]
        .as_array()
        .into_iter()
        .flatten()
        .filter(|r| r["status"] != "pass")
    {
        println!("{row}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().expect("example runs");
}
