//! Series mode: `1/(1 − z∏x^{e}) = Σ zⁿ ∏x^{ne}` turns each term into a
//! closed-form cube integral.
//!
//! With `1/(m + S)^j = ∫₀^∞ τ^{j−1} e^{−(m+S)τ} dτ/(j−1)!` the orthant
//! integral of `e^{−Σβₙtₙ}/(m + Σwₙtₙ)^j` is the half-line integral
//! `∫ τ^{j−1} e^{−mτ} / ∏(wₙτ + βₙ) dτ/(j−1)!`. Log monomials use
//! [`log_moment_kernel`](super::log_moment_kernel) (k = 2, equal
//! exponents, j = 1, m = 0) or the one-dimensional moments when j = 0.

use super::kernel::log_moment_kernel;
use super::{Method, QuadratureResult};
use crate::expr::{CubeIntegrandSpec, FactorProduct, LinearFactor, Part};
use crate::halfline::{integrate_rational, integrate_rational_exp};
use crate::special::sum_series;
use crate::{Error, Result, C64};

fn fact(n: u32) -> f64 {
    (1..=n).map(f64::from).product()
}

/// `∫₀¹ x^{β−1} logᵖx dx = (−1)ᵖ p!/βᵖ⁺¹`.
fn moment(beta: C64, p: u32) -> C64 {
    let sign = if p.is_multiple_of(2) { 1.0 } else { -1.0 };
    sign * fact(p) / beta.powu(p + 1)
}

/// Closed form of the geometric-free spec with exponents `μ + shift`.
fn closed_form(spec: &CubeIntegrandSpec, shift: &[f64]) -> Result<C64> {
    let beta: Vec<C64> = spec.exponents.iter().zip(shift).map(|(mu, s)| mu + 1.0 + s).collect();
    let j = spec.log_power;
    if let Some(monos) = &spec.poly_log {
        if j == 0 {
            return Ok(monos
                .iter()
                .map(|m| m.coef * m.powers.iter().zip(&beta).map(|(&p, &b)| moment(b, p)).product::<C64>())
                .sum());
        }
        let equal = beta.iter().all(|b| *b == beta[0]);
        if spec.dim != 2 || j != 1 || spec.log_shift != 0.0 || !equal || spec.log_weights.iter().any(|&w| w != 1.0) {
            return Err(Error::NotApplicable("log monomials need the two-dimensional kernel shape".into()));
        }
        let mut v = C64::new(0.0, 0.0);
        for m in monos {
            v += m.coef * log_moment_kernel(beta[0], m.powers[0], m.powers[1])?;
        }
        return Ok(v);
    }
    if j == 0 {
        return Ok(beta.iter().map(|b| b.inv()).product());
    }
    let mut constant = C64::new(1.0, 0.0);
    let mut factors = Vec::new();
    for (b, &w) in beta.iter().zip(&spec.log_weights) {
        if w == 0.0 {
            constant /= b;
        } else {
            factors.push(LinearFactor::new(w, *b, 1));
        }
    }
    let mut numerator = vec![0.0; j as usize];
    numerator[j as usize - 1] = 1.0 / fact(j - 1);
    let fp = FactorProduct::new(factors, numerator);
    let v = if spec.log_shift > 0.0 { integrate_rational_exp(&fp, spec.log_shift)? } else { integrate_rational(&fp)? };
    Ok(constant * v)
}

pub(crate) fn integrate(terms: &[(C64, CubeIntegrandSpec)], part: Part, tol: f64) -> Result<QuadratureResult> {
    let z = terms
        .iter()
        .find_map(|(_, s)| s.geometric.as_ref().map(|g| g.z))
        .ok_or_else(|| Error::NotApplicable("series mode needs a geometric factor".into()))?;
    let mut constant = C64::new(0.0, 0.0);
    let mut series_terms = Vec::new();
    for (c, s) in terms {
        match &s.geometric {
            Some(g) if g.z == z => series_terms.push((*c, s, g.exps.clone())),
            Some(_) => return Err(Error::NotApplicable("geometric factors differ in z".into())),
            None => constant += c * closed_form(s, &vec![0.0; s.dim])?,
        }
    }
    // For real z the part commutes with the weights zⁿ and is taken term by
    // term, so a convergent part is summable even when the other diverges.
    let per_term = z.im == 0.0;
    let b = |n: u64| -> Result<C64> {
        let mut v = C64::new(0.0, 0.0);
        for (c, s, e) in &series_terms {
            let shift: Vec<f64> = e.iter().map(|x| x * n as f64).collect();
            v += c * closed_form(s, &shift)?;
        }
        Ok(if per_term { part.apply(v) } else { v })
    };
    let r = sum_series(z, 0, b, tol)?;
    Ok(QuadratureResult {
        value: if per_term { r.value + part.apply(constant) } else { part.apply(r.value + constant) },
        error_estimate: r.tail_bound,
        evaluations: r.terms_used.max(1),
        method: Method::SeriesMode,
        truncation: Some(r.terms_used),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::EULER_GAMMA;
    use std::f64::consts::PI;

    #[test]
    fn sondow_by_series() {
        let g = |mu: f64| CubeIntegrandSpec::real(&[mu, 0.0], 1).with_geometric(C64::new(1.0, 0.0), vec![1.0, 1.0]);
        let terms = [(C64::new(1.0, 0.0), g(0.0)), (C64::new(-1.0, 0.0), g(1.0))];
        let r = integrate(&terms, Part::Full, 1e-12).unwrap();
        assert!((r.value.re - EULER_GAMMA).abs() < 1e-10, "{r:?}");
        assert!(r.truncation.is_some());
    }

    #[test]
    fn alternating_without_log() {
        // ∫∫ 1/(1 + xy) = π²/12
        let s = CubeIntegrandSpec::real(&[0.0, 0.0], 0).with_geometric(C64::new(-1.0, 0.0), vec![1.0, 1.0]);
        let r = integrate(&[(C64::new(1.0, 0.0), s)], Part::Full, 1e-13).unwrap();
        assert!((r.value.re - PI * PI / 12.0).abs() < 1e-12, "{r:?}");
    }
}
