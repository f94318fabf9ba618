//! Exact arithmetic in the field `Q(q)` of rational functions with integer
//! coefficients, plus the text grammar used for coefficients everywhere.
//!
//! Negative powers of `q` are ordinary denominators; there is no separate
//! Laurent representation.

mod parse;
mod poly;
mod rational;

pub use parse::parse;
pub use poly::IntPoly;
pub use rational::QRational;

pub use num_rational::BigRational;
