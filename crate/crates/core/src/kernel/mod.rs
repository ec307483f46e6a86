//! Exact arithmetic substrate: integers, rationals, polynomials and matrices.

mod error;
pub mod int;
pub mod linalg;
pub mod poly;
pub mod resultant;
pub mod upoly;

pub use error::KernelError;
pub use linalg::{rational_nullspace, RationalMatrix};
pub use poly::{Monomial, MultiPoly};
pub use resultant::resultant;
pub use upoly::UniPoly;
