//! Exact S_n-equivariant Euler characteristics of quotients `F(X, n)/G` of
//! configuration spaces by finite group actions, and their application to the
//! moduli spaces of genus-2 and hyperelliptic curves with marked points.
//!
//! Everything is computed with exact rationals. Symmetric functions are kept in
//! the power-sum basis; the Schur basis is an output view obtained through the
//! Murnaghan–Nakayama rule.
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

mod error;
pub mod equivariant;
pub mod exactmath;
pub mod moduli;
pub mod series;
pub mod symfunc;

pub use error::{Error, Result};
pub use exactmath::Rational;
