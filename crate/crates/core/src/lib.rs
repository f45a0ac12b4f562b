//! Exact computations in the modular representation theory of finite
//! general linear groups: permutation and Gelfand-Graev induced modules,
//! meataxe composition series, decomposition matrices with dominance
//! bookkeeping, Iwahori-Hecke and Schur endomorphism algebras, and
//! extended affine Weyl group checks in truncated matrix groups.

pub mod error;
pub mod field;
pub mod matrix;
pub mod gln;
pub mod perm;
pub mod poly;

pub use error::{Error, Result};
pub use field::{make_field, primitive_root_of_unity, splitting_degree_for_characters};
pub use field::{CoefficientField, FEl, FieldDescriptor, PrimePowerField};
pub use matrix::{Echelon, Matrix};
