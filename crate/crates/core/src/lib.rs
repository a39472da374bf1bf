//! Binary forms attached to `2cos(2π/n)`, `2sin(2π/n)` and the Chebyshev
//! polynomials, the areas of their fundamental regions `|F(x, y)| ≤ 1`, and
//! the closed-form estimates that sandwich those areas.
//!
//! Everything here is `no_std` (with `alloc`): polynomials are exact over
//! arbitrary-precision integers, transcendental functions come from `libm`.
//! Areas are improper integrals `∫ |F(x, 1)|^(-2/n) dx` evaluated with a
//! tanh-sinh rule that is split at the real roots of `F(x, 1)`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bounds;
mod dd;
pub mod error;
pub mod families;
pub mod numtheory;
pub mod polycore;
pub mod quadrature;
pub mod specialfn;

pub use error::{Error, Result};
pub use families::FamilyId;
pub use polycore::{BinaryForm, IntPolynomial};
pub use quadrature::{AreaResult, AreaStatus, QuadratureConfig, RootSet};
