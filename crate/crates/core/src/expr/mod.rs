//! Data model for integrands, series, constants and identities.
//!
//! Everything here is plain immutable data. Numerics live in the engine
//! modules; this module only validates and normalizes.

mod canon;
mod constexpr;
pub mod literal;
mod plan;
pub mod sexpr;
mod validate;

pub use canon::{canonicalize, canonical_roots, CanonicalRoot, ROOT_MERGE_TOL};
pub use constexpr::{ConstExpr, Func, Symbol};
pub(crate) use constexpr::EULER_GAMMA;
#[cfg(test)]
pub(crate) use constexpr::CATALAN;
pub use plan::{
    Accel, CubeRoute, IdentityRecord, Part, Plan, SeriesSpec, TemplateFactor, TemplateTerm, Trust,
};
pub use validate::{Validate, Violation};

use crate::C64;

/// One factor `(slope·x + offset)^multiplicity` of a half-line denominator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinearFactor {
    pub slope: f64,
    pub offset: C64,
    pub multiplicity: u32,
}

impl LinearFactor {
    pub fn new(slope: f64, offset: C64, multiplicity: u32) -> Self {
        LinearFactor { slope, offset, multiplicity }
    }

    /// Simple factor `slope·x + re + im·i`.
    pub fn simple(slope: f64, re: f64, im: f64) -> Self {
        LinearFactor::new(slope, C64::new(re, im), 1)
    }

    /// The zero of the factor, `-offset/slope`.
    pub fn root(&self) -> C64 {
        -self.offset / self.slope
    }
}

/// `P(x) / ∏ (aₙx + bₙ + cₙi)^{mₙ}` with a real polynomial numerator stored
/// in ascending-degree order.
#[derive(Debug, Clone, PartialEq)]
pub struct FactorProduct {
    pub factors: Vec<LinearFactor>,
    pub numerator: Vec<f64>,
}

impl FactorProduct {
    pub fn new(factors: Vec<LinearFactor>, numerator: Vec<f64>) -> Self {
        FactorProduct { factors, numerator }
    }

    /// Product with numerator 1.
    pub fn unit(factors: Vec<LinearFactor>) -> Self {
        FactorProduct::new(factors, vec![1.0])
    }

    /// Σ multiplicities.
    pub fn denominator_degree(&self) -> u32 {
        self.factors.iter().map(|f| f.multiplicity).sum()
    }

    /// Degree of the numerator, `None` for the zero polynomial.
    pub fn numerator_degree(&self) -> Option<usize> {
        self.numerator.iter().rposition(|&c| c != 0.0)
    }

    /// Direct evaluation at a (complex) point.
    pub fn eval(&self, x: C64) -> C64 {
        let num = self
            .numerator
            .iter()
            .rev()
            .fold(C64::new(0.0, 0.0), |acc, &c| acc * x + c);
        let den = self
            .factors
            .iter()
            .fold(C64::new(1.0, 0.0), |acc, f| {
                acc * (x * f.slope + f.offset).powu(f.multiplicity)
            });
        num / den
    }
}

/// Geometric factor `1/(1 − z·∏ xₙ^{eₙ})`.
#[derive(Debug, Clone, PartialEq)]
pub struct Geometric {
    pub z: C64,
    pub exps: Vec<f64>,
}

/// `coef · ∏ logᵖⁿ(xₙ)`.
#[derive(Debug, Clone, PartialEq)]
pub struct LogMonomial {
    pub coef: f64,
    pub powers: Vec<u32>,
}

/// Unit-cube integrand
///
/// ```text
/// ∏ xₙ^{μₙ} · Σ_mono c·∏ logᵖ(xₙ) · 1/(1 − z∏xₙ^{eₙ}) / (m − log ∏ xₙ^{wₙ})^j
/// ```
///
/// integrated over `[0,1]^k`. The log denominator is written so that it is
/// positive on the open cube: `(−1)^j / (log ∏x^w − m)^j`.
#[derive(Debug, Clone, PartialEq)]
pub struct CubeIntegrandSpec {
    pub dim: usize,
    pub exponents: Vec<C64>,
    pub log_weights: Vec<f64>,
    pub log_power: u32,
    pub log_shift: f64,
    pub geometric: Option<Geometric>,
    pub poly_log: Option<Vec<LogMonomial>>,
}

impl CubeIntegrandSpec {
    /// `∏ xₙ^{μₙ} / (−log ∏ xₙ^{wₙ})^j`.
    pub fn new(exponents: Vec<C64>, log_weights: Vec<f64>, log_power: u32) -> Self {
        CubeIntegrandSpec {
            dim: exponents.len(),
            exponents,
            log_weights,
            log_power,
            log_shift: 0.0,
            geometric: None,
            poly_log: None,
        }
    }

    /// Real exponents, all log weights one.
    pub fn real(exponents: &[f64], log_power: u32) -> Self {
        let k = exponents.len();
        CubeIntegrandSpec::new(
            exponents.iter().map(|&e| C64::new(e, 0.0)).collect(),
            vec![1.0; k],
            log_power,
        )
    }

    pub fn with_shift(mut self, m: f64) -> Self {
        self.log_shift = m;
        self
    }

    pub fn with_geometric(mut self, z: C64, exps: Vec<f64>) -> Self {
        self.geometric = Some(Geometric { z, exps });
        self
    }

    pub fn with_poly_log(mut self, monomials: Vec<LogMonomial>) -> Self {
        self.poly_log = Some(monomials);
        self
    }

    pub fn with_log_weights(mut self, w: Vec<f64>) -> Self {
        self.log_weights = w;
        self
    }

    /// The same spec with every exponent conjugated.
    pub fn conj(&self) -> Self {
        let mut c = self.clone();
        for e in &mut c.exponents {
            *e = e.conj();
        }
        if let Some(g) = &mut c.geometric {
            g.z = g.z.conj();
        }
        c
    }

    /// Integrand value at a point of the open cube. `xc[n]` must equal
    /// `1 − x[n]` (passed separately so it stays accurate next to 1).
    pub fn eval_cube(&self, x: &[f64], xc: &[f64]) -> C64 {
        let logs: Vec<f64> = x
            .iter()
            .zip(xc)
            .map(|(&xi, &ci)| if xi > 0.5 { (-ci).ln_1p() } else { xi.ln() })
            .collect();
        self.eval_logs(&logs)
    }

    /// Integrand value given `log xₙ` for each coordinate.
    pub fn eval_logs(&self, logs: &[f64]) -> C64 {
        let mut expo = C64::new(0.0, 0.0);
        for (mu, &l) in self.exponents.iter().zip(logs) {
            expo += mu * l;
        }
        let mut v = expo.exp();
        if let Some(monos) = &self.poly_log {
            let p: f64 = monos
                .iter()
                .map(|m| {
                    m.coef
                        * m.powers
                            .iter()
                            .zip(logs)
                            .map(|(&p, &l)| l.powi(p as i32))
                            .product::<f64>()
                })
                .sum();
            v *= p;
        }
        if let Some(g) = &self.geometric {
            let s: f64 = g.exps.iter().zip(logs).map(|(e, l)| e * l).sum();
            v /= geometric_denominator(g.z, s);
        }
        if self.log_power > 0 {
            let wl: f64 = self.log_weights.iter().zip(logs).map(|(w, l)| w * l).sum();
            v /= (self.log_shift - wl).powi(self.log_power as i32);
        }
        v
    }
}

/// `1 − z·e^{s}` for `s ≤ 0`, accurate when `z = 1` and `s → 0`.
pub(crate) fn geometric_denominator(z: C64, s: f64) -> C64 {
    (C64::new(1.0, 0.0) - z) - z * s.exp_m1()
}
