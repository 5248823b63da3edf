//! Structural analysis: Green's relations, kernels and their coordinates,
//! and predicate classification.

pub mod green;
pub mod kernel;
pub mod predicates;

pub use green::{green, GreenData, Preorder};
pub use kernel::{
    ideal_generated, kernel, minimal_one_sided_ideals, DecompositionError, KernelData,
    ReesMatrixData, Side,
};
pub use predicates::{
    band_decomposition, has_zero, l_star, left_compatibility_counterexample, local_zeros,
    predicates, BandDecomposition, Predicates,
};
