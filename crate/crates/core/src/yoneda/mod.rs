//! Perforated Yoneda algebras.
