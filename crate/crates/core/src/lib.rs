//! Desk-scale numerics for toy early-universe cosmology.
//!
//! The crate evaluates a chain of small formula-driven models: temperature
//! dependent vacuum energy, a wormhole-bridge wavefunctional, discrete
//! scale-factor stepping with causal-set checks, computation and entropy
//! bounds, a relic graviton burst table, axion and brane potentials,
//! quintessence dynamics with a bifurcation scan, and a minisuperspace
//! Wheeler-DeWitt solver.
//!
//! All model structs hold values in natural Planck units
//! (`hbar = c = k_B = G = 1`). Functions that need physical constants take a
//! [`Constants`] value, which doubles as the unit system: pass
//! [`Constants::natural`] for Planck units or [`Constants::codata`] for SI.

// Parameter checks are written `!(x > 0.0)` on purpose so that NaN fails them.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod burst;
mod error;
pub mod info;
pub mod numerics;
pub mod potentials;
pub mod quintessence;
pub mod scale;
pub mod units;
pub mod vacuum;
pub mod wdw;
pub mod wormhole;

pub use error::{Error, Result};
pub use units::{Constants, LogScalar};
