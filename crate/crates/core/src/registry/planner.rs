//! Evaluation of one plan by the engine its variant names.

use crate::cubature::{integrate_cube_terms, Budget};
use crate::expr::{Plan, SeriesSpec};
use crate::halfline::{integrate_rational, integrate_rational_exp, ramanujan_product_integral, ProductFamily};
use crate::special::{evaluate_series, richardson};
use crate::{Error, Result, C64};

/// What an engine reported for one evaluated plan.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct PlanDiagnostics {
    /// Engine names, `+`-joined for linear combinations.
    pub method: String,
    pub evals: u64,
    /// Internal error estimate (0 for exact closed forms).
    pub estimate: f64,
    /// Series terms or sequence length, when the engine truncates.
    pub truncation: Option<u64>,
}

impl PlanDiagnostics {
    fn exact(method: &str) -> Self {
        PlanDiagnostics { method: method.to_string(), evals: 0, estimate: 0.0, truncation: None }
    }
}

/// Short label used in engine-failure messages.
pub fn plan_label(p: &Plan) -> String {
    match p {
        Plan::Halfline { product, weight } => {
            let w = if *weight > 0.0 { ", weighted" } else { "" };
            format!("halfline(D={}{w})", product.denominator_degree())
        }
        Plan::Cube { terms, route, .. } => {
            format!("cube(k={}, route={})", terms.first().map_or(0, |t| t.1.dim), route.name())
        }
        Plan::Series(s) => format!("series({})", series_name(s)),
        Plan::Const(_) => "constant".into(),
        Plan::Linear(ts) => format!("linear({} terms)", ts.len()),
        Plan::Part(part, inner) => format!("{}({})", part.name(), plan_label(inner)),
        Plan::ShiftedProductTrend { a, k_max } => format!("shifted-trend(a={a}, k≤{k_max})"),
    }
}

fn series_name(s: &SeriesSpec) -> &'static str {
    match s {
        SeriesSpec::Lerch { .. } => "lerch",
        SeriesSpec::HalflineSum { .. } => "halfline-sum",
        SeriesSpec::EulerGamma => "euler-gamma",
        SeriesSpec::AltLogProduct { .. } => "alt-log-product",
        SeriesSpec::PsiSum { .. } => "psi-sum",
        SeriesSpec::Custom { .. } => "custom",
    }
}

/// Evaluates `plan`; `tol` is the engine tolerance.
pub fn evaluate(plan: &Plan, tol: f64, budget: &Budget) -> Result<(C64, PlanDiagnostics)> {
    match plan {
        Plan::Halfline { product, weight } => {
            if *weight > 0.0 {
                Ok((integrate_rational_exp(product, *weight)?, PlanDiagnostics::exact("halfline-exp-closed-form")))
            } else {
                Ok((integrate_rational(product)?, PlanDiagnostics::exact("halfline-closed-form")))
            }
        }
        Plan::Cube { terms, part, route } => {
            let r = integrate_cube_terms(terms, *part, *route, tol, budget)?;
            let d = PlanDiagnostics {
                method: r.method.name().to_string(),
                evals: r.evaluations,
                estimate: r.error_estimate,
                truncation: r.truncation,
            };
            Ok((r.value, d))
        }
        Plan::Series(spec) => {
            let r = evaluate_series(spec, tol)?;
            let d = PlanDiagnostics {
                method: format!("series:{}", series_name(spec)),
                evals: r.terms_used,
                estimate: r.tail_bound,
                truncation: Some(r.terms_used),
            };
            Ok((r.value, d))
        }
        Plan::Const(e) => Ok((e.eval()?, PlanDiagnostics::exact("constant"))),
        Plan::Linear(ts) => {
            let mut value = C64::new(0.0, 0.0);
            let mut methods: Vec<String> = Vec::new();
            let mut d = PlanDiagnostics::exact("");
            for (c, p) in ts {
                let (v, di) = evaluate(p, tol / (ts.len() as f64 * c.norm().max(1.0)), budget)?;
                value += c * v;
                if !methods.contains(&di.method) {
                    methods.push(di.method);
                }
                d.evals += di.evals;
                d.estimate += c.norm() * di.estimate;
                d.truncation = match (d.truncation, di.truncation) {
                    (Some(a), Some(b)) => Some(a.max(b)),
                    (a, b) => a.or(b),
                };
            }
            d.method = methods.join("+");
            Ok((value, d))
        }
        Plan::Part(part, inner) => {
            let (v, d) = evaluate(inner, tol, budget)?;
            Ok((part.apply(v), d))
        }
        Plan::ShiftedProductTrend { a, k_max } => shifted_trend(*a, *k_max),
    }
}

/// Limit of `I_k = ∫₀^∞ dx/∏_{n≤k}(1 + x²/(a+n−1)²)`.
///
/// `I_k` must decrease with shrinking steps (each added factor is ≥ 1 on
/// the axis); the limit is Richardson-extrapolated in `1/k` over the last
/// [`TREND_NODES`] values of `k`.
/// Consecutive nodes used by the trend extrapolation; more nodes amplify
/// rounding faster than they remove truncation for `k_max ≈ 24`.
pub const TREND_NODES: u32 = 6;

fn shifted_trend(a: f64, k_max: u32) -> Result<(C64, PlanDiagnostics)> {
    if k_max < 2 {
        return Err(Error::Domain("trend needs k_max ≥ 2".into()));
    }
    let vals: Vec<f64> = (1..=k_max)
        .map(|k| ramanujan_product_integral(ProductFamily::Shifted { a }, k).map(|v| v.re))
        .collect::<Result<_>>()?;
    let steps: Vec<f64> = vals.windows(2).map(|w| w[0] - w[1]).collect();
    if steps.iter().any(|&s| !(s > 0.0)) || steps.windows(2).any(|w| !(w[1] < w[0])) {
        return Err(Error::Nonconvergent(format!("shifted product integrals are not a contracting sequence: {vals:?}")));
    }
    let m = TREND_NODES.min(k_max);
    let ks: Vec<u32> = (k_max - m + 1..=k_max).collect();
    let h: Vec<f64> = ks.iter().map(|&k| 1.0 / f64::from(k)).collect();
    let v: Vec<C64> = ks.iter().map(|&k| C64::new(vals[k as usize - 1], 0.0)).collect();
    let exps: Vec<f64> = (1..ks.len()).map(|e| e as f64).collect();
    let (value, err) = richardson(&h, &v, &exps);
    let d = PlanDiagnostics {
        method: "shifted-product-trend".into(),
        evals: u64::from(k_max),
        estimate: err,
        truncation: Some(u64::from(k_max)),
    };
    Ok((value, d))
}
