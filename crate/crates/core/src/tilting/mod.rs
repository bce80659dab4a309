//! Tilting verification.
