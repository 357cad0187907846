//! Integral closures of submodules of free modules over `Q[x_1, ..., x_n]`,
//! localized at the origin, with Newton polyhedra, Buchsbaum–Rim and mixed
//! multiplicities, and related decision procedures.

pub mod closure;
pub mod error;
pub mod grobner;
pub mod matrix;
pub mod modtools;
pub mod multiplicity;
mod parse;
pub mod poly;
pub mod polyhedra;

pub use error::{Error, Result};
pub use grobner::{Colength, GroebnerBasis, ModuleOrder, MonomialOrder};
pub use matrix::{Ideal, PolyMatrix, Submodule};
pub use poly::{ExponentVector, Polynomial, Ring, WeightVector};
