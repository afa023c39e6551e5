//! Exact computations around degree-6 del Pezzo surfaces and the canonical
//! dimension of `PGL_6`: Brauer classes over the rationals, Galois lattices,
//! algebras of degree 3 with unitary involution, point counts over finite
//! fields and replayable proof certificates.

pub mod algebra3;
pub mod brauer;
pub mod dp6;
pub mod field;
pub mod hexagon;
pub mod lattice;
pub mod numtheory;
pub mod proofkit;
pub mod selftest;
