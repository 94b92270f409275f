//! Scalar special functions and accelerated series for the constant side of
//! the identities.
//!
//! Truncation is always decided by a tail bound or an extrapolation change,
//! never by the size of the last term alone.

mod accel;
mod bernoulli;
mod expint;
mod gamma;
mod series;
mod zeta;

pub(crate) use accel::Compensated;
pub use accel::{euler_transform, richardson, sum_series, sum_with_accel, SeriesResult};
pub use expint::{exp_integral_e, exp_integral_e_scaled};
pub use gamma::{digamma, log_gamma};
pub use series::{
    alt_log_product, custom_series, euler_gamma, euler_gamma_partial, evaluate_series, psi_sum,
    series_of_halfline, PSI_SUM_TERMS,
};
pub use zeta::{hurwitz_zeta, lerch_phi, zeta, MIN_S_MINUS_ONE};
