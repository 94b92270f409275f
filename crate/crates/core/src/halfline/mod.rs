//! Closed-form evaluation of `∫₀^∞ P(x)/∏(aₙx + bₙ + cₙi)^{mₙ} dx` and its
//! `e^{−mx}`-weighted variant through complex partial fractions.
//!
//! Repeated-root coefficients come from a Taylor shift of the numerator to
//! each root (Horner synthetic division) multiplied by the binomial series of
//! the remaining factors, so no symbolic derivatives are formed. All logs and
//! powers use the principal branch.

mod integrate;
mod partial;
mod ramanujan;

pub use integrate::{integrate_expansion, integrate_rational, integrate_rational_exp};
pub use partial::{partial_fractions, PartialFractionExpansion, PfTerm, MIN_ROOT_SEPARATION};
pub use ramanujan::{cubic_variant_product, ramanujan_product, ramanujan_product_integral, ProductFamily};
