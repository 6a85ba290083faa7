use thiserror::Error;

use crate::partition::Cell;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts {0:?} are not weakly decreasing")]
    NotAPartition(Vec<usize>),

    #[error("composition {0:?} has a zero part")]
    NotAComposition(Vec<usize>),

    #[error("malformed partition string {0:?}")]
    Parse(String),

    #[error("k must be at least 1")]
    InvalidK,

    #[error("partition {partition} has a part larger than k={k}")]
    NotKBounded { partition: String, k: usize },

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("cell {cell} lies outside the shape")]
    CellOutside { cell: Cell },

    #[error("inner shape is not contained in the outer shape")]
    NotContained,

    #[error("shape is not a {}-core: cell {cell} has hook length {}", .k + 1, .k + 1)]
    NotACore { cell: Cell, k: usize },

    #[error("residue {residue} out of range for k={k}")]
    InvalidResidue { residue: usize, k: usize },

    #[error("operands carry different k ({0} and {1})")]
    KMismatch(usize, usize),

    #[error("invalid chain: {0}")]
    InvalidChain(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("tableau is not standard")]
    NotStandard,

    #[error("tableau is empty")]
    EmptyTableau,

    #[error("word is not reduced for the quotient: letter {position} does not grow the core")]
    NotReducedWord { position: usize },

    #[error("window {0:?} is not an affine permutation")]
    InvalidWindow(Vec<i64>),

    #[error("permutation is not a minimal coset representative")]
    NotMinimalCosetRep,

    #[error("matrix is not upper unitriangular")]
    NotUnitriangular,

    #[error("enumeration bound {bound} exceeded (needed {needed})")]
    BoundExceeded { bound: usize, needed: usize },
}
