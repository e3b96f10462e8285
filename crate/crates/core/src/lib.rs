//! Exact invariant theory of finite graded group actions on the quantum and Jordan planes.

pub mod auslander;
pub mod error;
pub mod group_actions;
pub mod hj_series;
pub mod invariants;
pub mod linalg;
pub mod presentations;
pub mod scalars;
pub mod skew_algebra;

pub use error::{Error, Result};
pub use scalars::{CycloScalar, Rational};
pub use skew_algebra::{AlgebraElt, AlgebraKind, AlgebraSpec, Mat2, Monomial};
pub use group_actions::{GradedAut, GroupSpec, GroupVariant, TruncatedSeries};
pub use presentations::{FreeWord, Presentation, Relation};
