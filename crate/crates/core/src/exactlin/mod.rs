//! Exact linear algebra kernel over the rationals and prime fields.
//!
//! All values are immutable after construction; every operation is a pure
//! function with deterministic pivoting, so bases and reports are
//! reproducible bit for bit.

mod mat;
mod scalar;
mod subspace;

pub use mat::{solve, LinSolution, Mat, Rref};
pub use scalar::{FieldKind, Scalar};
pub use subspace::{Coordinatizer, QuotientSpace, Subspace};
