//! Exact computation of p-Kazhdan-Lusztig bases for finite and affine type A
//! via the light-leaves calculus on diagrammatic Soergel bimodules, together
//! with the crystal / Fock-space combinatorics and the decomposition-number
//! pipelines built on top of them.

pub mod coxeter;
pub mod hecke;
pub mod laurent;
pub mod mult;
pub mod par;
pub mod poly;
pub mod fock;
pub mod soergel;
pub mod weights;

pub use coxeter::{CoxKind, CoxeterElement, CoxeterSystem, ParabolicSubset};
pub use laurent::LaurentPoly;
