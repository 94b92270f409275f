use std::fmt;

use super::{CubeIntegrandSpec, FactorProduct, IdentityRecord, Plan, SeriesSpec};
use crate::C64;

/// One violated invariant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub field: &'static str,
    pub reason: String,
}

impl Violation {
    fn new(field: &'static str, reason: impl Into<String>) -> Self {
        Violation { field, reason: reason.into() }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.field, self.reason)
    }
}

/// Invariant checks. Violations are data: an empty list means valid.
pub trait Validate {
    fn violations(&self) -> Vec<Violation>;

    fn is_valid(&self) -> bool {
        self.violations().is_empty()
    }
}

fn finite(z: C64) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

impl FactorProduct {
    /// Checks shared by the plain and the exponentially weighted integral:
    /// well-formed factors and no pole on `[0, ∞)`.
    pub(crate) fn structural_violations(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        for (i, f) in self.factors.iter().enumerate() {
            if !(f.slope.is_finite() && f.slope != 0.0) {
                out.push(Violation::new("factors", format!("factor {i}: slope must be finite and nonzero")));
                continue;
            }
            if !finite(f.offset) {
                out.push(Violation::new("factors", format!("factor {i}: offset is not finite")));
                continue;
            }
            if f.multiplicity == 0 {
                out.push(Violation::new("factors", format!("factor {i}: multiplicity must be at least 1")));
            }
            let z = f.root();
            if z.im == 0.0 && z.re >= 0.0 {
                out.push(Violation::new(
                    "factors",
                    format!("factor {i}: root on positive axis (x = {})", z.re),
                ));
            }
        }
        if self.numerator.is_empty() {
            out.push(Violation::new("numerator", "empty coefficient list"));
        }
        if self.numerator.iter().any(|c| !c.is_finite()) {
            out.push(Violation::new("numerator", "non-finite coefficient"));
        }
        out
    }

    /// Violations for `∫₀^∞ e^{-m x} P/Q dx`. With `m > 0` the exponential
    /// restores convergence at infinity, so only the structural checks apply.
    pub fn weighted_violations(&self, m: f64) -> Vec<Violation> {
        if m == 0.0 {
            return self.violations();
        }
        let mut out = self.structural_violations();
        if !(m.is_finite() && m > 0.0) {
            out.push(Violation::new("weight", format!("weight {m} must be finite and ≥ 0")));
        }
        out
    }
}

impl Validate for FactorProduct {
    fn violations(&self) -> Vec<Violation> {
        let mut out = self.structural_violations();
        let d = self.denominator_degree();
        if d < 2 {
            out.push(Violation::new("factors", format!("degree {d} < 2")));
        }
        if let Some(p) = self.numerator_degree() {
            if d >= 2 && p as u32 > d - 2 {
                out.push(Violation::new(
                    "numerator",
                    format!("numerator degree {p} > D − 2 = {}", d - 2),
                ));
            }
        }
        out
    }
}

impl Validate for CubeIntegrandSpec {
    fn violations(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let k = self.dim;
        if k == 0 {
            out.push(Violation::new("dim", "k must be at least 1"));
        }
        if self.exponents.len() != k {
            out.push(Violation::new("exponents", format!("{} exponents for k = {k}", self.exponents.len())));
        }
        if self.log_weights.len() != k {
            out.push(Violation::new("log_weights", format!("{} weights for k = {k}", self.log_weights.len())));
        }
        for (n, mu) in self.exponents.iter().enumerate() {
            if !finite(*mu) {
                out.push(Violation::new("exponents", format!("exponent {n} is not finite")));
            } else if mu.re <= -1.0 {
                out.push(Violation::new("exponents", format!("Re μ{n} = {} ≤ −1", mu.re)));
            }
        }
        if self.log_weights.iter().any(|w| !w.is_finite() || *w < 0.0) {
            out.push(Violation::new("log_weights", "weights must be finite and non-negative"));
        }
        if self.log_power >= 1 && self.log_weights.iter().all(|&w| w == 0.0) {
            out.push(Violation::new("log_weights", "all weights zero with j ≥ 1"));
        }
        if !(self.log_shift.is_finite() && self.log_shift >= 0.0) {
            out.push(Violation::new("log_shift", format!("shift {} must be finite and ≥ 0", self.log_shift)));
        }
        if let Some(g) = &self.geometric {
            if g.exps.len() != k {
                out.push(Violation::new("geometric", format!("{} exponents for k = {k}", g.exps.len())));
            }
            if !finite(g.z) {
                out.push(Violation::new("geometric", "z is not finite"));
            } else if g.z.norm() > 1.0 + 1e-15 {
                out.push(Violation::new("geometric", format!("|z| = {} > 1", g.z.norm())));
            }
            if g.exps.iter().any(|e| !e.is_finite() || *e < 0.0) || g.exps.iter().all(|&e| e == 0.0) {
                out.push(Violation::new("geometric", "exponents must be non-negative and not all zero"));
            }
        }
        if let Some(monos) = &self.poly_log {
            for (i, m) in monos.iter().enumerate() {
                if m.powers.len() != k {
                    out.push(Violation::new("poly_log", format!("monomial {i}: {} powers for k = {k}", m.powers.len())));
                }
                if !m.coef.is_finite() {
                    out.push(Violation::new("poly_log", format!("monomial {i}: non-finite coefficient")));
                }
            }
        }
        out
    }
}

impl Validate for SeriesSpec {
    fn violations(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        match self {
            SeriesSpec::Lerch { z, s, a } => {
                if !finite(*z) || z.norm() > 1.0 + 1e-15 {
                    out.push(Violation::new("z", "|z| must be ≤ 1"));
                }
                if *z == C64::new(1.0, 0.0) && *s <= 1.0 {
                    out.push(Violation::new("s", "z = 1 requires s > 1"));
                }
                if *s < 1.0 {
                    out.push(Violation::new("s", "s must be ≥ 1"));
                }
                if !(*a > 0.0) {
                    out.push(Violation::new("a", "a must be positive"));
                }
            }
            SeriesSpec::HalflineSum { ratio, template, .. } => {
                if !finite(*ratio) || ratio.norm() > 1.0 + 1e-15 {
                    out.push(Violation::new("ratio", "|r| must be ≤ 1"));
                }
                if template.is_empty() {
                    out.push(Violation::new("template", "no terms"));
                }
                for t in template {
                    for f in &t.factors {
                        if f.slope == 0.0 || f.multiplicity == 0 {
                            out.push(Violation::new("template", "degenerate factor"));
                        }
                    }
                }
            }
            SeriesSpec::EulerGamma => {}
            SeriesSpec::AltLogProduct { a, b, c } => {
                if !(*a > 0.0 && *b > 0.0 && *c > 0.0) {
                    out.push(Violation::new("parameters", "a, b, c must be positive"));
                }
            }
            SeriesSpec::PsiSum { q, den, .. } => {
                if !(*q > 0.0) {
                    out.push(Violation::new("q", "q must be positive"));
                }
                if den.is_empty() {
                    out.push(Violation::new("den", "at least one denominator factor is required"));
                }
                if den.iter().any(|c| *c <= -1.0) {
                    out.push(Violation::new("den", "factor (n + c) vanishes for some n ≥ 1"));
                }
            }
            SeriesSpec::Custom { term, .. } => {
                if !term.uses_index() {
                    out.push(Violation::new("term", "custom term does not depend on n"));
                }
            }
        }
        out
    }
}

impl Validate for Plan {
    fn violations(&self) -> Vec<Violation> {
        match self {
            Plan::Halfline { product, weight } => product.weighted_violations(*weight),
            Plan::Cube { terms, .. } => {
                let mut out: Vec<Violation> = terms.iter().flat_map(|(_, s)| s.violations()).collect();
                if terms.is_empty() {
                    out.push(Violation::new("terms", "no cube terms"));
                } else if terms.iter().any(|(_, s)| s.dim != terms[0].1.dim) {
                    out.push(Violation::new("terms", "cube terms differ in dimension"));
                }
                out
            }
            Plan::Series(s) => s.violations(),
            Plan::Const(e) => {
                if e.uses_index() {
                    vec![Violation::new("const", "constant uses the series index n")]
                } else {
                    Vec::new()
                }
            }
            Plan::Linear(ts) => {
                let mut out: Vec<Violation> = ts.iter().flat_map(|(_, p)| p.violations()).collect();
                if ts.is_empty() {
                    out.push(Violation::new("linear", "no terms"));
                }
                out
            }
            Plan::Part(_, p) => p.violations(),
            Plan::ShiftedProductTrend { a, k_max } => {
                let mut out = Vec::new();
                if !(*a > 0.0 && a.is_finite()) {
                    out.push(Violation::new("a", "shift must be positive"));
                }
                if *k_max < 2 {
                    out.push(Violation::new("k_max", "trend needs k_max ≥ 2"));
                }
                out
            }
        }
    }
}

impl Validate for IdentityRecord {
    fn violations(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        if self.id.is_empty() || self.id.chars().any(|c| c.is_whitespace()) {
            out.push(Violation::new("id", format!("`{}` must be non-empty without whitespace", self.id)));
        }
        if !(self.tolerance > 0.0 && self.tolerance.is_finite()) {
            out.push(Violation::new("tolerance", format!("{} must be positive", self.tolerance)));
        }
        out.extend(self.lhs.violations());
        out.extend(self.rhs.violations());
        out
    }
}
