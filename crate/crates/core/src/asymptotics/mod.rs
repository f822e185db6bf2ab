//! Large-n asymptotics of the Laguerre norms: regimes, constants and the
//! leading term in each regime.

pub mod constants;
pub mod estimate;
pub mod regime;

pub use constants::{constant_c, constant_c_ln, constant_ca, constant_cb, constant_cb_ln};
pub use estimate::{asymptotic_norm, leading_term, AsymptoticEstimate, LeadingTerm, LogArgument};
pub use regime::{beta_of, classify_regime, p_airy_bessel, p_high, p_low, CaseLabel, RegimeClass, RegimeKind};
