//! Exact computations for braided vector spaces over the rational function
//! field `Q(q)`: quantum symmetrizers and Nichols-algebra graded dimensions,
//! Hecke and diagonal detection, quadratic covers and their duals, and the
//! braidings on the antiholomorphic cotangent space of quantum projective space.

pub mod braidcore;
pub mod error;
pub mod families;
pub mod linalg;
pub mod nichols;
pub mod qfield;
pub mod tableaux;

pub use error::{Error, Result};
