//! Bound quiver algebras and their module categories.
//!
//! Builds finite-dimensional algebras from acyclic quivers with admissible
//! relations, realizes modules as component-graded representations,
//! computes Hom spaces and minimal projective resolutions, and provides the
//! projective/injective transport used by the Nakayama functor.

pub mod algebra;
pub mod module;
pub mod quiver;

pub use algebra::{
    algebra_from_table, dense_to_sparse, quotient_algebra, radical_by_trace, sparse_to_dense,
    AlgebraData, AlgebraQuotient, SparseVec,
};
pub use module::{
    hom_module_basis, hom_vec_len, image_of, injective_module, kernel_of,
    map_from_generator_image, min_proj_resolution, projective_basis_indices, projective_cover,
    projective_module, radical_submodule, simple_module, standard_inj_module,
    standard_proj_module, AModule, CompMap, Cover, ProjResolution, Submodule,
};
pub use quiver::{build_algebra, enumerate_paths, Arrow, Path, Quiver, QuiverAlgebra, Relation, RelationSet};
