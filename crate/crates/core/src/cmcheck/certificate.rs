//! Vertex-decomposition certificates and their independent replay.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cell::{Cell, CellSet};
use crate::complex::{self, deletion_masks, link_masks, Complex, Mask, MinorsProblem};
use crate::gdmatrix::MatrixSpec;

/// A ladder `𝓛 = D ⊔ L` grown in the top-left corner: `D` is deleted, `L`
/// is linked.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LadderState {
    pub ladder: CellSet,
    pub deleted: CellSet,
    pub linked: CellSet,
}

impl LadderState {
    pub fn new(deleted: CellSet, linked: CellSet) -> Self {
        LadderState {
            ladder: deleted.union(&linked),
            deleted,
            linked,
        }
    }

    /// `D` occupies an initial segment of each column, with segment lengths
    /// non-increasing from left to right, relative to the corner `origin`.
    pub fn deleted_is_ladder_shape(&self, origin: Cell) -> bool {
        let d = &self.deleted;
        d.iter().all(|x| {
            x.row >= origin.row
                && x.col >= origin.col
                && (x.row == origin.row || d.contains(&Cell::new(x.row - 1, x.col)))
                && (x.col == origin.col || d.contains(&Cell::new(x.row, x.col - 1)))
        })
    }

    /// Corners of `D` among `cells`, by ascending row: cells outside `D`
    /// whose upper and left neighbours are in `D` or off the region.
    pub fn corners(&self, cells: &CellSet, origin: Cell) -> Vec<Cell> {
        let d = &self.deleted;
        // At most one per row, and CellSet iterates by row first.
        cells
            .iter()
            .filter(|x| {
                !d.contains(x)
                    && (x.row == origin.row || d.contains(&Cell::new(x.row - 1, x.col)))
                    && (x.col == origin.col || d.contains(&Cell::new(x.row, x.col - 1)))
            })
            .copied()
            .collect()
    }
}

/// One node of a vertex decomposition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum CertNode {
    /// Shedding vertex: both `Del_v` and `Link_v` decompose.
    Split {
        vertex: Cell,
        state: Option<LadderState>,
        deletion: Box<CertNode>,
        link: Box<CertNode>,
    },
    /// Every facet contains `apex`; the complex is the simplex on `apex`
    /// joined with `base`.
    Cone { apex: CellSet, base: Box<CertNode> },
    /// The simplex on the given cells; empty means `{∅}`.
    Leaf { simplex: CellSet },
}

impl CertNode {
    pub fn size(&self) -> usize {
        match self {
            CertNode::Split { deletion, link, .. } => 1 + deletion.size() + link.size(),
            CertNode::Cone { base, .. } => 1 + base.size(),
            CertNode::Leaf { .. } => 1,
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            CertNode::Split { deletion, link, .. } => 1 + deletion.depth().max(link.depth()),
            CertNode::Cone { base, .. } => 1 + base.depth(),
            CertNode::Leaf { .. } => 1,
        }
    }

    /// Mutable access along a path of child steps, used by mutation tests.
    pub fn at_mut(&mut self, path: &[Step]) -> Option<&mut CertNode> {
        let Some((first, rest)) = path.split_first() else {
            return Some(self);
        };
        match (self, first) {
            (CertNode::Split { deletion, .. }, Step::Deletion(_)) => deletion.at_mut(rest),
            (CertNode::Split { link, .. }, Step::Link(_)) => link.at_mut(rest),
            (CertNode::Cone { base, .. }, Step::Base) => base.at_mut(rest),
            _ => None,
        }
    }
}

/// A decision tree certifying that `Δ_I` is vertex decomposable.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VDCertificate {
    pub matrix: MatrixSpec,
    pub r: usize,
    pub root: CertNode,
}

/// A move from a node to one of its children.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Step {
    Deletion(Cell),
    Link(Cell),
    Base,
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Step::Deletion(v) => write!(f, "del {v}"),
            Step::Link(v) => write!(f, "link {v}"),
            Step::Base => f.write_str("base"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Validation {
    pub valid: bool,
    /// Steps from the root to the first failing node.
    pub failing_path: Vec<Step>,
    pub reason: Option<String>,
}

/// Replays `cert` against the explicit complex of `p`.
pub fn validate_certificate(p: &MinorsProblem, cert: &VDCertificate) -> Validation {
    let fail = |reason: String| Validation {
        valid: false,
        failing_path: vec![],
        reason: Some(reason),
    };
    if cert.r != p.r() || cert.matrix.build().ok().as_ref() != Some(p.matrix()) {
        return fail("certificate was issued for a different problem".into());
    }
    let k = match complex::complex(p) {
        Ok(k) => k,
        Err(e) => return fail(format!("cannot build the complex: {e}")),
    };
    validate_against(&k, &cert.root)
}

/// Replays a decision tree on an arbitrary complex.
pub fn validate_against(k: &Complex, root: &CertNode) -> Validation {
    let mut path = Vec::new();
    match replay(k, k.facet_masks().to_vec(), root, &mut path) {
        Ok(()) => Validation {
            valid: true,
            failing_path: vec![],
            reason: None,
        },
        Err(reason) => Validation {
            valid: false,
            failing_path: path,
            reason: Some(reason),
        },
    }
}

fn replay(
    k: &Complex,
    facets: Vec<Mask>,
    node: &CertNode,
    path: &mut Vec<Step>,
) -> Result<(), String> {
    let n0 = facets[0].count_ones();
    if facets.iter().any(|f| f.count_ones() != n0) {
        return Err("complex is not pure".into());
    }
    let bit = |v: &Cell| k.to_mask(&CellSet::from_iter([*v]));
    match node {
        CertNode::Leaf { simplex } => {
            let want = k
                .to_mask(simplex)
                .ok_or("leaf names cells outside the vertex set")?;
            if facets != [want] {
                return Err(format!("complex is not the simplex {simplex}"));
            }
            Ok(())
        }
        CertNode::Cone { apex, base } => {
            let a = k
                .to_mask(apex)
                .ok_or("apex names cells outside the vertex set")?;
            if facets.iter().any(|f| f & a != a) {
                return Err(format!("{apex} is not in every facet"));
            }
            path.push(Step::Base);
            replay(k, link_masks(&facets, a), base, path)?;
            path.pop();
            Ok(())
        }
        CertNode::Split {
            vertex,
            deletion,
            link,
            ..
        } => {
            let v = bit(vertex).ok_or("split vertex outside the vertex set")?;
            if !facets.iter().any(|f| f & v != 0) {
                return Err(format!("{vertex} is not a vertex of the complex"));
            }
            path.push(Step::Deletion(*vertex));
            replay(k, deletion_masks(&facets, v), deletion, path)?;
            path.pop();
            path.push(Step::Link(*vertex));
            replay(k, link_masks(&facets, v), link, path)?;
            path.pop();
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cs(p: &[(usize, usize)]) -> CellSet {
        CellSet::from_pairs(p)
    }

    #[test]
    fn simplex_certificate() {
        let k = Complex::simplex(cs(&[(1, 1), (2, 2)])).unwrap();
        let leaf = CertNode::Leaf {
            simplex: cs(&[(1, 1), (2, 2)]),
        };
        assert!(validate_against(&k, &leaf).valid);
        let split = CertNode::Split {
            vertex: Cell::new(1, 1),
            state: None,
            deletion: Box::new(CertNode::Leaf {
                simplex: cs(&[(2, 2)]),
            }),
            link: Box::new(CertNode::Leaf {
                simplex: cs(&[(2, 2)]),
            }),
        };
        assert!(validate_against(&k, &split).valid);
        let cone = CertNode::Cone {
            apex: cs(&[(1, 1), (2, 2)]),
            base: Box::new(CertNode::Leaf { simplex: cs(&[]) }),
        };
        assert!(validate_against(&k, &cone).valid);
    }

    #[test]
    fn two_edges_cannot_be_certified() {
        let k = Complex::from_facets([cs(&[(1, 1), (1, 2)]), cs(&[(2, 1), (2, 2)])]).unwrap();
        let split = CertNode::Split {
            vertex: Cell::new(1, 1),
            state: None,
            deletion: Box::new(CertNode::Leaf { simplex: cs(&[]) }),
            link: Box::new(CertNode::Leaf {
                simplex: cs(&[(1, 2)]),
            }),
        };
        let v = validate_against(&k, &split);
        assert!(!v.valid);
        assert_eq!(v.failing_path, vec![Step::Deletion(Cell::new(1, 1))]);
        assert_eq!(v.reason.as_deref(), Some("complex is not pure"));
    }

    #[test]
    fn corners_of_a_ladder() {
        let s = LadderState::new(cs(&[(1, 1), (1, 2), (2, 1)]), cs(&[]));
        let cells: CellSet = (1..=3)
            .flat_map(|i| (1..=3).map(move |j| Cell::new(i, j)))
            .collect();
        assert!(s.deleted_is_ladder_shape(Cell::new(1, 1)));
        assert_eq!(
            s.corners(&cells, Cell::new(1, 1)),
            vec![Cell::new(1, 3), Cell::new(2, 2), Cell::new(3, 1)]
        );
        let bad = LadderState::new(cs(&[(1, 1), (2, 2)]), cs(&[]));
        assert!(!bad.deleted_is_ladder_shape(Cell::new(1, 1)));
    }
}
