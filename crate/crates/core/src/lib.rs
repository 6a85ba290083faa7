pub mod affine;
pub mod checks;
pub mod cores;
pub mod error;
pub mod ktableau;
pub mod kostka;
pub mod lattice;
pub mod partition;

pub use affine::{AffinePermutation, Side};
pub use cores::{c_map, k_conjugate, k_skew, p_map, Core, KSkew};
pub use error::{Error, Result};
pub use ktableau::KTableau;
pub use kostka::{KostkaMatrix, PartitionMatrix};
pub use lattice::Chain;
pub use partition::{Cell, Composition, Partition, SkewShape};
