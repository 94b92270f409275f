//! Verification engine for unit-cube, exponential-orthant and half-line
//! integral identities.
//!
//! Every identity in the built-in catalog is evaluated by independent
//! routes and the results are compared:
//!
//! - [`halfline`]: exact evaluation of `∫₀^∞ P(x)/∏(aₙx + bₙ + cₙi)^{mₙ} dx`
//!   (optionally weighted by `e^{-mx}`) through complex partial fractions.
//! - [`cubature`]: numerical integration of unit-cube integrands with a
//!   logarithmic denominator, either directly on the cube, through the
//!   orthant form with a radial-simplex substitution, or with randomized
//!   Sobol points.
//! - [`special`]: log-gamma, digamma, Lerch Φ, ζ, exponential integrals and
//!   the accelerated series used on the constant side of the identities.
//!
//! [`registry`] holds the catalog and the planner that dispatches each side
//! of an identity to an engine and produces [`registry::VerificationReport`]s.

pub mod cubature;
pub mod error;
pub mod expr;
pub mod halfline;
pub mod registry;
pub mod special;

pub use error::{Error, Result};
pub use num_complex::Complex64 as C64;
