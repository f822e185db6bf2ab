//! Rényi, Shannon and Tsallis entropies of D-dimensional hydrogenic states,
//! computed exactly by quadrature and asymptotically for large n.

// `!(x > a)` is the NaN-rejecting form; reference constants keep all quoted digits
#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::excessive_precision)]

pub mod asymptotics;
pub mod entropy;
pub mod error;
pub mod exec;
pub mod figures;
pub mod hydrogenic;
pub mod norms;
pub mod quadrature;
pub mod specfun;

pub use error::{Error, Result};
pub use exec::Strategy;
