//! Cohen-Macaulayness of `Δ_I`: the ladder-shape characterization, Reisner's
//! homological criterion, and vertex decomposability.

mod certificate;
mod homology;
mod vd;

pub use certificate::{
    validate_against, validate_certificate, CertNode, LadderState, Step, VDCertificate, Validation,
};
pub use homology::{
    reduced_homology_ranks, reduced_homology_ranks_with, reisner_cm, reisner_report, HomologyField,
    ReisnerReport, DEFAULT_FACE_BUDGET,
};
pub use vd::{
    is_triangle_shape, is_vertex_decomposable, is_vertex_decomposable_with,
    vd_certificate_triangles, vd_certificate_triangles_with, DEFAULT_NODE_BUDGET,
    DEFAULT_VERTEX_BUDGET,
};

use crate::complex::{ladder_fits, MinorsProblem};

/// Closed-form Cohen-Macaulay test.
///
/// Rows and columns that the ladders zero out entirely are removed first;
/// then each ladder must be a staircase or fit inside the `(r-1)`-triangle.
/// A zero ideal gives a simplex, which is Cohen-Macaulay.
pub fn is_cm_predicted(p: &MinorsProblem) -> bool {
    if p.ideal_is_zero() {
        return true;
    }
    let x = p.matrix().without_zero_lines().matrix;
    let rev: Vec<usize> = x.d().iter().rev().copied().collect();
    ladder_fits(x.c(), p.r()) && ladder_fits(&rev, p.r())
}
