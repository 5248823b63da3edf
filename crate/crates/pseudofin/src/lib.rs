//! Finite semigroup toolkit centered on the metric geometry of the
//! universal right congruence: how far apart two elements are when the only
//! allowed moves are translations of a fixed generating set of pairs.
//!
//! The crate provides
//!
//! * multiplication-table semigroups with validation, transformation
//!   closures, and seeded random monoids ([`semigroup`]),
//! * Green's relations, kernels with Rees coordinates, and structural
//!   predicates ([`structure`]),
//! * finite right acts, act congruences, and minimal generating sets
//!   ([`acts`]),
//! * the generating-set metric, diameters with verifiable witnesses, and
//!   related searches ([`metric`]),
//! * Rees matrix products and ideal extensions ([`constructions`]),
//! * verified bound checks tying all of the above together ([`theorems`]),
//! * JSON interchange types ([`io`]).

pub mod acts;
pub mod constructions;
pub mod fixtures;
pub mod io;
pub mod metric;
pub mod semigroup;
pub mod structure;
pub mod theorems;
pub mod util;

pub use acts::{FiniteRightAct, MinGenResult};
pub use metric::{DiameterReport, GenSet, MetricBudget};
pub use semigroup::{ElementId, FiniteSemigroup, Transformation};
pub use structure::{green, kernel, predicates};
