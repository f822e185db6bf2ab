//! Adaptive quadrature on finite and semi-infinite ranges, plus lobe
//! summation for slowly decaying oscillatory integrals.

pub mod adaptive;
pub mod oscillatory;

pub use adaptive::{
    integrate, integrate_adaptive, integrate_breakpoints, integrate_power_endpoint, IntegrationResult, QuadConfig,
};
pub use oscillatory::{integrate_oscillatory_semiinfinite, LobeKind, OscillatorySpec};
