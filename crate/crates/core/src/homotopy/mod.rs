//! Bounded complexes and the homotopy category.
