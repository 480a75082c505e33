//! Generates a vertex-decomposition certificate for a triangle-ladder
//! complex, replays it, and shows that a tampered copy is rejected.

use gdminors::cmcheck::{
    is_vertex_decomposable, validate_certificate, vd_certificate_triangles, CertNode, Step,
};
use gdminors::complex::complex;
use gdminors::{Cell, GDMatrix, MinorsProblem, Result};

pub fn run() -> Result<()> {
    let p = MinorsProblem::new(GDMatrix::triangles(4, 4, 1, 1)?, 3)?;
    let cert = vd_certificate_triangles(&p)?;
    println!(
        "certificate: {} nodes, depth {}",
        cert.root.size(),
        cert.root.depth()
    );
    println!("replay: {:?}", validate_certificate(&p, &cert));

    let mut bad = cert.clone();
    // Swap the first split vertex for a cell that cannot shed.
    let mut path = vec![];
    let mut node = &bad.root;
    while let CertNode::Cone { base, .. } = node {
        path.push(Step::Base);
        node = base;
    }
    if let Some(CertNode::Split { vertex, .. }) = bad.root.at_mut(&path) {
        *vertex = Cell::new(4, 4);
    }
    let v = validate_certificate(&p, &bad);
    println!(
        "tampered: valid {}, fails at {:?}: {:?}",
        v.valid, v.failing_path, v.reason
    );

    let k =
        complex(&GDMatrix::new(3, 3, vec![2, 1], vec![2]).and_then(|x| MinorsProblem::new(x, 3))?)?;
    println!(
        "pinched 3x3, r=3 vertex decomposable by search: {}",
        is_vertex_decomposable(&k)?
    );

    let json = serde_json::to_string(&cert).expect("certificate serializes");
    println!("certificate JSON is {} bytes", json.len());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().expect("example runs");
}
