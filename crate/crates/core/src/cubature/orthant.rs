//! Exponential-orthant form and the radial-simplex engine.
//!
//! With `xₙ = e^{−tₙ}` a cube integrand becomes
//! `e^{−Σβₙtₙ}·P(−t)/(1 − z·e^{−Σeₙtₙ})/(m + Σcₙtₙ)^j` on `[0, ∞)^k`,
//! `βₙ = μₙ + 1`. The radial engine substitutes `s = Σcₙtₙ`,
//! `tₙ = s·uₙ/cₙ` with `u` on the unit simplex (Jacobian `s^{k−1}/∏cₙ`), so
//! the log denominator becomes `(m + s)^{−j}` and the singular corner of the
//! cube sits at `s = 0`.

use std::cell::Cell;

use super::de::exp_sinh_with;
use super::gk::gauss_kronrod;
use super::{Method, QuadratureResult};
use crate::expr::{geometric_denominator, CubeIntegrandSpec, Geometric, LogMonomial, Part};
use crate::{Error, Result, C64};

/// A cube integrand in orthant coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct OrthantForm {
    pub dim: usize,
    /// `βₙ = μₙ + 1`.
    pub beta: Vec<C64>,
    /// Weights `cₙ` of the linear form in the denominator.
    pub weights: Vec<f64>,
    pub shift: f64,
    pub power: u32,
    /// `1/(1 − z·e^{−Σeₙtₙ})`.
    pub geometric: Option<Geometric>,
    /// Monomials in `log xₙ = −tₙ`.
    pub poly_log: Option<Vec<LogMonomial>>,
}

/// Applies `xₙ = e^{−tₙ}` (including the Jacobian `e^{−Σtₙ}`).
pub fn to_orthant(spec: &CubeIntegrandSpec) -> OrthantForm {
    OrthantForm {
        dim: spec.dim,
        beta: spec.exponents.iter().map(|mu| mu + 1.0).collect(),
        weights: spec.log_weights.clone(),
        shift: spec.log_shift,
        power: spec.log_power,
        geometric: spec.geometric.clone(),
        poly_log: spec.poly_log.clone(),
    }
}

fn poly_value(monos: &[LogMonomial], logs: impl Fn(usize) -> f64) -> f64 {
    monos
        .iter()
        .map(|m| m.coef * m.powers.iter().enumerate().map(|(n, &p)| logs(n).powi(p as i32)).product::<f64>())
        .sum()
}

impl OrthantForm {
    /// Integrand value at `t ∈ [0, ∞)^k`.
    pub fn eval(&self, t: &[f64]) -> C64 {
        let mut expo = C64::new(0.0, 0.0);
        for (b, &tn) in self.beta.iter().zip(t) {
            expo -= b * tn;
        }
        let mut v = expo.exp();
        if let Some(monos) = &self.poly_log {
            v *= poly_value(monos, |n| -t[n]);
        }
        if let Some(g) = &self.geometric {
            let s: f64 = g.exps.iter().zip(t).map(|(e, tn)| e * tn).sum();
            v /= geometric_denominator(g.z, -s);
        }
        if self.power > 0 {
            let s: f64 = self.weights.iter().zip(t).map(|(c, tn)| c * tn).sum();
            v /= (self.shift + s).powi(self.power as i32);
        }
        v
    }
}

/// Per-term data in radial coordinates.
struct RadialTerm {
    coef: C64,
    /// `βₙ/cₙ`.
    gamma: Vec<C64>,
    /// `(z, eₙ/cₙ)`.
    geometric: Option<(C64, Vec<f64>)>,
    poly: Option<Vec<LogMonomial>>,
    collapse: bool,
}

/// The radial plan for a linear combination of orthant forms sharing
/// dimension, substitution weights, shift and power.
pub(crate) struct RadialPlan {
    k: usize,
    c: Vec<f64>,
    shift: f64,
    power: u32,
    terms: Vec<RadialTerm>,
}

/// Largest dimension with an inner simplex quadrature.
pub const RADIAL_INNER_MAX_DIM: usize = 3;
/// Largest dimension for the collapsed (constant-rate) radial route.
pub const RADIAL_COLLAPSE_MAX_DIM: usize = 6;

impl RadialPlan {
    pub(crate) fn new(forms: &[(C64, OrthantForm)]) -> Result<Self> {
        let first = &forms.first().ok_or_else(|| Error::NotApplicable("no terms".into()))?.1;
        let k = first.dim;
        let any_log = forms.iter().any(|(_, f)| f.power > 0);
        for (_, f) in forms {
            if f.dim != k || f.power != first.power || f.shift != first.shift {
                return Err(Error::NotApplicable("terms differ in dimension, shift or log power".into()));
            }
            if any_log && f.weights != first.weights {
                return Err(Error::NotApplicable("terms use different log weights".into()));
            }
        }
        let c = if any_log { first.weights.clone() } else { vec![1.0; k] };
        if c.iter().any(|&w| !(w > 0.0)) {
            return Err(Error::NotApplicable("radial substitution needs positive log weights".into()));
        }
        let terms: Vec<RadialTerm> = forms
            .iter()
            .map(|(coef, f)| {
                let gamma: Vec<C64> = f.beta.iter().zip(&c).map(|(b, cn)| b / cn).collect();
                let geometric = f
                    .geometric
                    .as_ref()
                    .map(|g| (g.z, g.exps.iter().zip(&c).map(|(e, cn)| e / cn).collect::<Vec<f64>>()));
                let eta_const = geometric.as_ref().is_none_or(|(_, eta)| eta.iter().all(|e| *e == eta[0]));
                let collapse = f.poly_log.is_none() && eta_const && gamma.iter().all(|g| *g == gamma[0]);
                RadialTerm { coef: *coef, gamma, geometric, poly: f.poly_log.clone(), collapse }
            })
            .collect();
        let plan = RadialPlan { k, c, shift: first.shift, power: first.power, terms };
        if k > RADIAL_INNER_MAX_DIM && !(plan.collapses() && k <= RADIAL_COLLAPSE_MAX_DIM) {
            return Err(Error::NotApplicable(format!("radial route unavailable for k = {k}")));
        }
        Ok(plan)
    }

    pub(crate) fn collapses(&self) -> bool {
        self.terms.iter().all(|t| t.collapse)
    }

    /// Integrand of one term on the simplex point `u` at radius `s`.
    fn simplex_value(&self, t: &RadialTerm, s: f64, u: &[f64]) -> C64 {
        let mut expo = C64::new(0.0, 0.0);
        for (g, &un) in t.gamma.iter().zip(u) {
            expo -= g * (s * un);
        }
        let mut v = expo.exp();
        if let Some(monos) = &t.poly {
            v *= poly_value(monos, |n| -s * u[n] / self.c[n]);
        }
        if let Some((z, eta)) = &t.geometric {
            let x: f64 = eta.iter().zip(u).map(|(e, un)| e * un).sum();
            v /= geometric_denominator(*z, -s * x);
        }
        v
    }

    /// `∫_simplex` of one term at radius `s` (simplex measure `du₁⋯du_{k−1}`).
    fn inner(&self, t: &RadialTerm, s: f64, evals: &Cell<u64>) -> C64 {
        let k = self.k;
        if t.collapse {
            evals.set(evals.get() + 1);
            let u = vec![1.0 / k as f64; k];
            let fact: f64 = (1..k).map(|i| i as f64).product();
            return self.simplex_value(t, s, &u) / fact;
        }
        let min_re = t.gamma.iter().map(|g| g.re).fold(f64::INFINITY, f64::min);
        let scale = (-s * min_re).exp() * (1.0 + s).powi(6);
        let abs_tol = 1e-16 * scale;
        match k {
            1 => {
                evals.set(evals.get() + 1);
                self.simplex_value(t, s, &[1.0])
            }
            2 => {
                let q = gauss_kronrod(|u| self.simplex_value(t, s, &[u, 1.0 - u]), 0.0, 1.0, abs_tol, 1e-13, 200);
                evals.set(evals.get() + q.evals);
                q.value
            }
            3 => {
                let q = gauss_kronrod(
                    |u1| {
                        let rest = 1.0 - u1;
                        let qi = gauss_kronrod(
                            |v| self.simplex_value(t, s, &[u1, rest * v, rest * (1.0 - v)]),
                            0.0,
                            1.0,
                            abs_tol,
                            1e-13,
                            100,
                        );
                        evals.set(evals.get() + qi.evals);
                        qi.value * rest
                    },
                    0.0,
                    1.0,
                    abs_tol,
                    1e-12,
                    100,
                );
                q.value
            }
            _ => unreachable!("non-collapsing terms are limited to k ≤ 3"),
        }
    }

    /// `part(Σ coef·s^{k−1}/∏c·(m + s)^{−j}·∫_simplex)` at radius `s`.
    fn radial_value(&self, s: f64, part: Part, evals: &Cell<u64>) -> C64 {
        let jac = s.powi(self.k as i32 - 1) / self.c.iter().product::<f64>();
        let den = if self.power > 0 { (self.shift + s).powi(self.power as i32) } else { 1.0 };
        let mut v = C64::new(0.0, 0.0);
        for t in &self.terms {
            v += t.coef * self.inner(t, s, evals);
        }
        part.apply(v * (jac / den))
    }

    pub(crate) fn integrate(&self, part: Part, tol: f64, max_evals: u64) -> QuadratureResult {
        let evals = Cell::new(0u64);
        let q = exp_sinh_with(|s| self.radial_value(s, part, &evals), 0.0, tol, 9, max_evals / 64);
        QuadratureResult {
            value: q.value,
            error_estimate: q.error,
            evaluations: evals.get().max(q.evals),
            method: Method::RadialSimplex,
            truncation: None,
        }
    }
}
