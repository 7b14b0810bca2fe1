//! Hyperbolic-complex Clifford algebra in three dimensions.
//!
//! The scalars are the commutative ring of hyperbolic-complex numbers
//! `x + iy + jv + ijw` with `i² = -1`, `j² = +1`. Multivectors carry one such
//! scalar on each of the Pauli basis elements `1, σ₁, σ₂, σ₃`, giving the
//! sixteen real dimensional universal complex algebra. Minkowski vectors are
//! embedded as paravectors `x⁰ + xᵏ jσₖ`, Lorentz transformations act by the
//! sandwich `t x t†`, and spinors are the spin transformations themselves.
//!
//! The crate is `no_std` and allocation free; text and JSON formats live in the
//! companion `hypalg-cli` crate.
#![no_std]

#[cfg(test)]
extern crate std;

mod error;

pub mod cayley;
pub mod hypernum;
pub mod lorentz;
pub mod spinor;

pub use cayley::{FourVector, Multivector};
pub use error::{Error, Result};
pub use hypernum::HyperComplex;
pub use lorentz::{LorentzParams, Rotor};
pub use spinor::{ColumnSpinor, EvenComponents, HMat2, OddComponents, Spinor};

/// Default absolute tolerance for approximate comparisons.
pub const DEFAULT_TOL: f64 = 1e-12;
