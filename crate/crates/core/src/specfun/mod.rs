//! Special functions: log-Gamma, orthonormal Laguerre, Gegenbauer, Bessel J
//! and Airy Ai.

pub mod airy;
pub mod bessel;
pub mod gamma;
pub mod gegenbauer;
pub mod laguerre;
pub(crate) mod roots;

pub use airy::{airy_ai, airy_zero};
pub use bessel::{bessel_j, bessel_j_ln, BesselZeros};
pub use gamma::{gamma_ln, gamma_ln_signed};
pub use gegenbauer::{gegenbauer, gegenbauer_zero_angles};
pub use laguerre::{
    laguerre_orthonormal, laguerre_orthonormal_eval, laguerre_weighted_eval, laguerre_zeros, Laguerre, PolyEval,
};
