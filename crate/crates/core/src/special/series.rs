use super::accel::{richardson, sum_series, sum_with_accel, Compensated, SeriesResult};
use super::gamma::digamma;
use super::zeta::lerch_phi;
use crate::cubature::exp_sinh;
use crate::expr::{Accel, ConstExpr, Part, SeriesSpec, Validate, TemplateTerm};
use crate::halfline::integrate_rational;
use crate::{Error, Result, C64};

fn re(x: f64) -> C64 {
    C64::new(x, 0.0)
}

/// Richardson in `1/N` over partial sums at `N = 8·2ⁱ`, `i = 0..=levels`,
/// with error exponents `1, 2, 3, …`. The schedule is fixed, so the result
/// is a deterministic function of the term sequence.
fn extrapolate_partial_sums(levels: u32, mut term: impl FnMut(u64) -> f64) -> (f64, f64, u64) {
    let mut acc = Compensated::default();
    let mut n = 0u64;
    let mut hs = Vec::new();
    let mut vals = Vec::new();
    for i in 0..=levels {
        let target = 8u64 << i;
        while n < target {
            acc.add(re(term(n)));
            n += 1;
        }
        hs.push(1.0 / target as f64);
        vals.push(acc.value());
    }
    let exps: Vec<f64> = (1..=levels).map(f64::from).collect();
    let (v, err) = richardson(&hs, &vals, &exps);
    (v.re, err, n)
}

fn gamma_term(n: u64) -> f64 {
    let x = 1.0 / (n + 1) as f64;
    x - x.ln_1p()
}

/// `Σ_{k<n} (1/(k+1) − log((k+2)/(k+1)))`.
pub fn euler_gamma_partial(n: u64) -> f64 {
    let mut acc = Compensated::default();
    for k in 0..n {
        acc.add(re(gamma_term(k)));
    }
    acc.value().re
}

/// γ from `Σ_{n≥0} (1/(n+1) − log((n+2)/(n+1)))`, Richardson-extrapolated
/// in the truncation index.
pub fn euler_gamma(tol: f64) -> Result<SeriesResult> {
    if !(tol > 0.0) {
        return Err(Error::Domain(format!("tolerance {tol} must be positive")));
    }
    let mut last = (f64::NAN, f64::INFINITY, 0);
    for levels in [6u32, 9, 12] {
        last = extrapolate_partial_sums(levels, gamma_term);
        if last.1 <= tol {
            return Ok(SeriesResult { value: re(last.0), terms_used: last.2, tail_bound: last.1, accelerated: true });
        }
    }
    Err(Error::Nonconvergent(format!("γ estimate {} with change {:e} above {tol:e}", last.0, last.1)))
}

/// `log ∏_{n≥0} ((an + b)/(an + c))^{(−1)ⁿ}`, summed in consecutive pairs
/// and Richardson-extrapolated in the number of pairs.
pub fn alt_log_product(a: f64, b: f64, c: f64) -> Result<SeriesResult> {
    if !(a > 0.0 && b > 0.0 && c > 0.0 && a.is_finite() && b.is_finite() && c.is_finite()) {
        return Err(Error::Domain("a, b, c must be positive".into()));
    }
    if b == c {
        return Ok(SeriesResult { value: re(0.0), terms_used: 1, tail_bound: 0.0, accelerated: false });
    }
    let d = b - c;
    let pair = |n: u64| {
        let base = 2.0 * a * n as f64;
        (d / (base + c)).ln_1p() - (d / (base + a + c)).ln_1p()
    };
    let (v, err, n) = extrapolate_partial_sums(12, pair);
    if err > 1e-10 {
        return Err(Error::Nonconvergent(format!("alternating log product change {err:e}")));
    }
    Ok(SeriesResult { value: re(v), terms_used: 2 * n, tail_bound: err, accelerated: true })
}

/// Direct-summation length for non-alternating ψ-sums.
pub const PSI_SUM_TERMS: u64 = 100_000;

/// `Σ_{n≥1} (±1)ⁿ ψ(n/q)/∏_c (n + c)`.
///
/// Alternating sums use the averaging transform. Otherwise the first
/// [`PSI_SUM_TERMS`] terms are summed directly and the tail by the midpoint
/// Euler–Maclaurin formula `∫_{N+½}^∞ f − f′(N+½)/24`.
pub fn psi_sum(q: f64, alternating: bool, den: &[f64], tol: f64) -> Result<SeriesResult> {
    if !(q > 0.0) || den.is_empty() || den.iter().any(|&c| c <= -1.0) {
        return Err(Error::Domain("ψ-sum needs q > 0 and factors n + c with c > −1".into()));
    }
    let f = |x: f64| -> Result<f64> {
        let p: f64 = den.iter().map(|c| x + c).product();
        Ok(digamma(re(x / q))?.re / p)
    };
    if alternating {
        return sum_series(re(-1.0), 1, |n| Ok(re(f(n as f64)?)), tol);
    }
    let mut acc = Compensated::default();
    for n in 1..=PSI_SUM_TERMS {
        acc.add(re(f(n as f64)?));
    }
    let m = PSI_SUM_TERMS as f64 + 0.5;
    let integral = exp_sinh(|x| f(x).map(re).unwrap_or(C64::new(f64::NAN, 0.0)), m, 1e-14);
    let h = 1e-2 * m;
    let deriv = (f(m + h)? - f(m - h)?) / (2.0 * h);
    let correction = -deriv / 24.0;
    let tail = integral.value.re + correction;
    acc.add(re(tail));
    Ok(SeriesResult {
        value: acc.value(),
        terms_used: PSI_SUM_TERMS,
        tail_bound: correction.abs() + integral.error,
        accelerated: true,
    })
}

/// `scale · Σ_{n≥start} ratioⁿ · part(Σ_terms coef·∫₀^∞ term(n))`.
pub fn series_of_halfline(
    ratio: C64,
    scale: C64,
    start: u64,
    part: Part,
    template: &[TemplateTerm],
    tol: f64,
) -> Result<SeriesResult> {
    let term = |n: u64| -> Result<C64> {
        let mut v = C64::new(0.0, 0.0);
        for t in template {
            v += t.coef * integrate_rational(&t.instantiate(n))?;
        }
        Ok(part.apply(v))
    };
    let mut r = sum_series(ratio, start, term, tol)?;
    r.value *= scale;
    r.tail_bound *= scale.norm();
    Ok(r)
}

/// `Σ_{n≥start} term(n)` for a closed-form term in the index `n`.
pub fn custom_series(start: u64, accel: Accel, term: &ConstExpr, tol: f64) -> Result<SeriesResult> {
    sum_with_accel(accel, start, |n| term.eval_at(Some(n as f64)), tol)
}

/// Evaluates any series family.
pub fn evaluate_series(spec: &SeriesSpec, tol: f64) -> Result<SeriesResult> {
    let v = spec.violations();
    if !v.is_empty() {
        return Err(Error::Domain(v.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; ")));
    }
    match spec {
        SeriesSpec::Lerch { z, s, a } => lerch_phi(*z, *s, *a),
        SeriesSpec::HalflineSum { ratio, scale, start, part, template } => {
            series_of_halfline(*ratio, *scale, *start, *part, template, tol)
        }
        SeriesSpec::EulerGamma => euler_gamma(tol),
        SeriesSpec::AltLogProduct { a, b, c } => alt_log_product(*a, *b, *c),
        SeriesSpec::PsiSum { q, alternating, den } => psi_sum(*q, *alternating, den, tol),
        SeriesSpec::Custom { start, accel, term } => custom_series(*start, *accel, term, tol),
    }
}
