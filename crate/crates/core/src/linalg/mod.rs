//! Exact sparse linear algebra over `Q(q)`: rank, kernel and image bases,
//! inverses, minimal polynomials, and specialization to rational points.

mod elimination;
mod matrix;
mod minpoly;
mod specialized;
mod subspace;

pub use elimination::{inverse, nullity, rank, solve_unique};
pub use matrix::FieldMatrix;
pub use minpoly::{minimal_polynomial, FieldPoly};
pub use specialized::{specialize, RationalMatrix, SpecializationPoints};
pub use subspace::{image_basis, kernel_basis, SubspaceBasis};
