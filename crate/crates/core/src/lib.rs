//! Exact computational homological algebra for bound quiver algebras.
//!
//! The crate builds finite-dimensional algebras from quivers with relations,
//! works in the bounded homotopy category of projective complexes, constructs
//! n-angles in cluster tilting subcategories from tower seeds, forms
//! perforated Yoneda algebras over admissible grading sets, and verifies the
//! derived equivalence between the two quotient algebras attached to an
//! n-angle by building the tilting complex, checking self-orthogonality and
//! generation, and exhibiting an explicit ring isomorphism onto the
//! endomorphism ring.
//!
//! Everything runs over exact arithmetic (arbitrary-precision rationals by
//! default, prime fields as a fast mode). All operations are pure and
//! deterministic.

pub mod error;
pub mod exactlin;
pub mod homotopy;
pub mod nangle;
pub mod quiveralg;
pub mod tilting;
pub mod yoneda;
