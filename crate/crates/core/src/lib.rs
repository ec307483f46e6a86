//! Exact arithmetic and C-finite machinery for discovering, and certifying by
//! finite checks, infinite families of solutions of cubic Diophantine
//! equations `a·X³ + a·Y³ + b·Z³ = c`.
//!
//! The crate is `no_std` (it only needs `alloc`). Everything here is a pure
//! function over immutable values; IO, JSON and the command line live in the
//! `cubeforge` companion crate.
//!
//! Module map:
//! - [`kernel`]: big integers, multivariate polynomials, resultants, exact
//!   linear algebra.
//! - [`cfinite`]: rational generating functions, recurrence guessing and
//!   finite-check certification of polynomial identities.
//! - [`quadform`]: binary quadratic forms and Pell-like orbit discovery.
//! - [`cubic`]: weighted quadruple search, combination and morphing.
//! - [`forge`]: the end-to-end theorem factory.
//! - [`concoct`]: implicitization, unsolvable twists and form discovery.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod cfinite;
pub mod concoct;
pub mod cubic;
pub mod forge;
pub mod kernel;
pub mod quadform;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
