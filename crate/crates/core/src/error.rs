use std::fmt;

use crate::cell::Cell;

/// A single violated constraint reported by [`GDMatrix::new`](crate::GDMatrix::new).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    EmptyDimension {
        n: usize,
        m: usize,
    },
    NonMonotoneLadder {
        ladder: LadderSide,
        position: usize,
    },
    LadderTooTall {
        ladder: LadderSide,
        height: usize,
        n: usize,
    },
    LadderTooWide {
        ladder: LadderSide,
        width: usize,
        m: usize,
    },
    ZeroEntry {
        ladder: LadderSide,
        position: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LadderSide {
    Lower,
    Upper,
}

impl Violation {
    /// Stable machine-readable name, used in CLI diagnostics.
    pub fn kind(&self) -> &'static str {
        match self {
            Violation::EmptyDimension { .. } => "EmptyDimension",
            Violation::NonMonotoneLadder { .. } => "NonMonotoneLadder",
            Violation::LadderTooTall { .. } => "LadderTooTall",
            Violation::LadderTooWide { .. } => "LadderTooWide",
            Violation::ZeroEntry { .. } => "ZeroEntry",
        }
    }
}

impl fmt::Display for LadderSide {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LadderSide::Lower => "L1",
            LadderSide::Upper => "L2",
        })
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::EmptyDimension { n, m } => {
                write!(f, "matrix must be at least 1x1, got {n}x{m}")
            }
            Violation::NonMonotoneLadder { ladder, position } => {
                write!(f, "{ladder} is not monotone at entry {position}")
            }
            Violation::LadderTooTall { ladder, height, n } => {
                write!(f, "{ladder} has height {height}, must be below n = {n}")
            }
            Violation::LadderTooWide { ladder, width, m } => {
                write!(f, "{ladder} spans {width} columns, must be below m = {m}")
            }
            Violation::ZeroEntry { ladder, position } => {
                write!(
                    f,
                    "{ladder} entry {position} is zero; ladder entries are positive"
                )
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid matrix: {}", join(.0))]
    InvalidMatrix(Vec<Violation>),
    #[error("cell {0} is a zero entry of the matrix")]
    CellIsZero(Cell),
    #[error("zeroing the corner triangles leaves no valid GD matrix: {0}")]
    ResultDegenerate(String),
    #[error("invalid problem: {0}")]
    InvalidProblem(String),
    #[error("set is not a maximal {0}-stair")]
    NotMaximalKStair(usize),
    #[error("universe has {cells} cells, above the budget of {budget}")]
    UniverseTooLarge { cells: usize, budget: usize },
    #[error("{0} is not a face of the complex")]
    NotAFace(String),
    #[error("vertex sets are not disjoint")]
    VertexClash,
    #[error("bad index: {0}")]
    BadIndex(String),
    #[error("the zero polynomial has no leading term")]
    ZeroPolynomial,
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("ladders are neither triangles nor inside the (r-1)-triangles")]
    NotTriangleShape,
    #[error("certificate recursion budget of {0} nodes exhausted")]
    RecursionBudget(usize),
    #[error("certificate generation aborted: {0}")]
    CertificateAbort(String),
    #[error("engine does not support this instance: {0}")]
    EngineUnsupported(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
}

fn join(v: &[Violation]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}

impl Error {
    /// True for errors caused by an exhausted resource budget rather than bad input.
    pub fn is_budget(&self) -> bool {
        matches!(
            self,
            Error::UniverseTooLarge { .. } | Error::BudgetExceeded(_) | Error::RecursionBudget(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
