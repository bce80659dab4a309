//! n-angles.
