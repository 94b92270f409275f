//! Numerical integration of unit-cube integrands with a logarithmic
//! denominator.
//!
//! Engines:
//! - `tanh-sinh-1d`: one-dimensional double-exponential rule (k = 1).
//! - `adaptive-tensor`: nested tanh-sinh directly on the cube (k ≤ 3).
//! - `radial-simplex`: the orthant form with `s = Σcₙtₙ`; the singular cube
//!   corner becomes the endpoint `s = 0` of a 1-D exp-sinh integral.
//! - `low-discrepancy`: Sobol points with random digital shifts (k ≤ 12).
//! - `series-mode`: geometric expansion summed with per-term closed forms.
//!
//! Every engine is deterministic for a fixed [`Budget`].

mod de;
mod direct;
mod gk;
mod kernel;
mod orthant;
mod qmc;
mod riemann;
mod series_mode;
mod sobol;

use serde::Serialize;

use crate::expr::{CubeIntegrandSpec, CubeRoute, Part, Validate};
use crate::{Error, Result, C64};

pub use de::{exp_sinh, exp_sinh_with, tanh_sinh, tanh_sinh_unit, Quad1d, MAX_LEVEL};
pub use gk::gauss_kronrod;
pub use kernel::log_moment_kernel;
pub use orthant::{to_orthant, OrthantForm, RADIAL_COLLAPSE_MAX_DIM, RADIAL_INNER_MAX_DIM};
pub use riemann::riemann_limit_sum;
pub use sobol::{Sobol, SOBOL_MAX_DIM};

/// Largest dimension handled by the deterministic tensor engine.
pub const DIRECT_MAX_DIM: usize = 3;

/// Engine that produced a [`QuadratureResult`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Method {
    #[serde(rename = "tanh-sinh-1d")]
    TanhSinh1d,
    #[serde(rename = "adaptive-tensor")]
    AdaptiveTensor,
    #[serde(rename = "radial-simplex")]
    RadialSimplex,
    #[serde(rename = "low-discrepancy")]
    LowDiscrepancy,
    #[serde(rename = "series-mode")]
    SeriesMode,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::TanhSinh1d => "tanh-sinh-1d",
            Method::AdaptiveTensor => "adaptive-tensor",
            Method::RadialSimplex => "radial-simplex",
            Method::LowDiscrepancy => "low-discrepancy",
            Method::SeriesMode => "series-mode",
        }
    }
}

/// Value and diagnostics of one cube integral.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureResult {
    pub value: C64,
    /// Non-negative; for the low-discrepancy engine, the standard error of
    /// the shift mean.
    pub error_estimate: f64,
    pub evaluations: u64,
    pub method: Method,
    /// Number of series terms, for series mode.
    pub truncation: Option<u64>,
}

/// Evaluation budget and the seed of the randomized engine.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Integrand evaluations for the deterministic engines.
    pub max_evals: u64,
    /// Sobol points per shift (rounded up to a power of two).
    pub points: u64,
    pub shifts: usize,
    pub seed: u64,
}

/// Seed used when none is given.
pub const DEFAULT_SEED: u64 = 2_245_502;

impl Budget {
    pub fn quick() -> Self {
        Budget { max_evals: 1_000_000, points: 1 << 16, shifts: 8, seed: DEFAULT_SEED }
    }

    pub fn thorough() -> Self {
        Budget { max_evals: 4_000_000, points: 1 << 20, shifts: 8, seed: DEFAULT_SEED }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::quick()
    }
}

/// `∫_{[0,1]^k} spec` with automatic engine selection.
pub fn integrate_cube(spec: &CubeIntegrandSpec, tol: f64) -> Result<QuadratureResult> {
    integrate_cube_terms(&[(C64::new(1.0, 0.0), spec.clone())], Part::Full, CubeRoute::Auto, tol, &Budget::default())
}

/// The terms must share dimension; `part` is applied to the integrand
/// pointwise, which commutes with integration.
fn check_terms(terms: &[(C64, CubeIntegrandSpec)]) -> Result<usize> {
    let k = terms.first().ok_or_else(|| Error::Domain("no cube terms".into()))?.1.dim;
    for (_, s) in terms {
        let v = s.violations();
        if !v.is_empty() {
            return Err(Error::Domain(v.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; ")));
        }
        if s.dim != k {
            return Err(Error::Domain("cube terms differ in dimension".into()));
        }
    }
    if k == 0 || k > SOBOL_MAX_DIM {
        return Err(Error::InvalidDim(k));
    }
    Ok(k)
}

fn on_unit_circle(terms: &[(C64, CubeIntegrandSpec)]) -> bool {
    terms.iter().any(|(_, s)| s.geometric.as_ref().is_some_and(|g| (g.z.norm() - 1.0).abs() < 1e-15))
}

/// `part(Σ coef·∫ spec)` through the requested route.
///
/// `Auto` picks tanh-sinh for k = 1, the radial engine when it applies, the
/// tensor engine for k ≤ 3 and Sobol points up to k = 12. A geometric factor
/// on the unit circle switches to series mode when the chosen engine fails
/// or stalls above `tol`.
pub fn integrate_cube_terms(
    terms: &[(C64, CubeIntegrandSpec)],
    part: Part,
    route: CubeRoute,
    tol: f64,
    budget: &Budget,
) -> Result<QuadratureResult> {
    if !(tol > 0.0) {
        return Err(Error::Domain(format!("tolerance {tol} must be positive")));
    }
    let k = check_terms(terms)?;
    match route {
        CubeRoute::Series => series_mode::integrate(terms, part, tol),
        CubeRoute::Direct => direct::integrate(terms, part, tol, budget),
        CubeRoute::LowDiscrepancy => qmc::integrate(terms, part, budget),
        CubeRoute::Orthant => radial(terms, part, tol, budget),
        CubeRoute::Auto => {
            let first = if k == 1 {
                direct::integrate(terms, part, tol, budget)
            } else {
                match radial(terms, part, tol, budget) {
                    Err(Error::NotApplicable(_)) if k <= DIRECT_MAX_DIM => direct::integrate(terms, part, tol, budget),
                    Err(Error::NotApplicable(_)) => qmc::integrate(terms, part, budget),
                    r => r,
                }
            };
            let stalled = match &first {
                Ok(r) => !(r.error_estimate <= tol * r.value.norm().max(1.0)),
                Err(_) => true,
            };
            if stalled && on_unit_circle(terms) {
                if let Ok(r) = series_mode::integrate(terms, part, tol) {
                    return Ok(r);
                }
            }
            let r = first?;
            if !r.value.re.is_finite() || !r.value.im.is_finite() {
                return Err(Error::Nonconvergent(format!("{} produced a non-finite value", r.method.name())));
            }
            Ok(r)
        }
    }
}

fn radial(terms: &[(C64, CubeIntegrandSpec)], part: Part, tol: f64, budget: &Budget) -> Result<QuadratureResult> {
    let forms: Vec<(C64, OrthantForm)> = terms.iter().map(|(c, s)| (*c, to_orthant(s))).collect();
    let plan = orthant::RadialPlan::new(&forms)?;
    Ok(plan.integrate(part, tol, budget.max_evals))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::EULER_GAMMA;

    #[test]
    fn routing_examples() {
        let r = integrate_cube(&CubeIntegrandSpec::real(&[0.0, 0.0], 1), 1e-8).unwrap();
        assert_eq!(r.method, Method::RadialSimplex);
        assert!((r.value.re - 1.0).abs() < 1e-8);
        let r = integrate_cube(&CubeIntegrandSpec::real(&[2.0], 0), 1e-12).unwrap();
        assert_eq!(r.method, Method::TanhSinh1d);
        assert!((r.value.re - 1.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn sondow_difference() {
        // γ = ∫∫ (1 − x)/((1 − xy)(−log xy))
        let g = |mu: f64| CubeIntegrandSpec::real(&[mu, 0.0], 1).with_geometric(C64::new(1.0, 0.0), vec![1.0, 1.0]);
        let terms = [(C64::new(1.0, 0.0), g(0.0)), (C64::new(-1.0, 0.0), g(1.0))];
        let r = integrate_cube_terms(&terms, Part::Full, CubeRoute::Auto, 1e-9, &Budget::default()).unwrap();
        assert!((r.value.re - EULER_GAMMA).abs() < 1e-8, "{r:?}");
    }

    #[test]
    fn dimension_limits() {
        let spec = CubeIntegrandSpec::real(&[0.0; 13], 0);
        assert!(matches!(integrate_cube(&spec, 1e-6), Err(Error::InvalidDim(13))));
    }
}
