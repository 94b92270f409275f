//! Checks shared by the property suites and the acceptance harness.
#![allow(dead_code)]

use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};
use squarint::cubature::{integrate_cube_terms, log_moment_kernel, tanh_sinh_unit, Budget, MAX_LEVEL};
use squarint::expr::{CubeIntegrandSpec, CubeRoute, FactorProduct, LinearFactor, Part};
use squarint::halfline::{integrate_rational, partial_fractions};
use squarint::registry::{builtin_registry, report_record, Profile, Settings};
use squarint::special::{alt_log_product, digamma, lerch_phi};
use squarint::C64;

pub const CASES: u32 = 64;

pub fn config() -> Config {
    Config { cases: CASES, failure_persistence: None, ..Config::default() }
}

type Check = std::result::Result<(), TestCaseError>;

/// Two to four factors whose roots lie at least `sep` apart in the left
/// half-plane.
pub fn factor_product(max_mult: u32, sep: f64) -> impl Strategy<Value = FactorProduct> {
    prop::collection::vec((0.5f64..3.0, 0.2f64..3.0, -2.0f64..2.0, 1..=max_mult), 2..=4)
        .prop_filter("roots must be separated", move |fs| {
            let roots: Vec<C64> = fs.iter().map(|&(a, b, c, _)| -C64::new(b, c) / a).collect();
            roots.iter().enumerate().all(|(i, r)| roots[..i].iter().all(|s| (r - s).norm() > sep))
        })
        .prop_map(|fs| FactorProduct::unit(fs.into_iter().map(|(a, b, c, m)| LinearFactor::new(a, C64::new(b, c), m)).collect()))
}

pub fn with_numerator(fp: FactorProduct, coeffs: &[f64]) -> FactorProduct {
    let d = fp.denominator_degree() as usize;
    // Keep the numerator at most D − 2 so the integral converges.
    let num: Vec<f64> = coeffs.iter().take(d.saturating_sub(1)).copied().collect();
    FactorProduct::new(fp.factors, if num.is_empty() { vec![1.0] } else { num })
}


fn run<S: Strategy>(strategy: S, check: impl Fn(S::Value) -> Check) -> Result<(), String>
where
    S::Value: std::fmt::Debug,
{
    TestRunner::new(config()).run(&strategy, check).map_err(|e| e.to_string())
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(TestCaseError::fail(msg()))
    }
}

/// First-order residues of a proper expansion with D − deg N ≥ 2 sum to 0.
pub fn residue_sum_zero() -> Result<(), String> {
    run((factor_product(3, 1e-2), prop::collection::vec(-2.0f64..2.0, 1..6)), |(fp, c)| {
        let fp = with_numerator(fp, &c);
        let pf = partial_fractions(&fp).map_err(|e| TestCaseError::fail(e.to_string()))?;
        let scale = pf.terms.iter().filter(|t| t.order == 1).map(|t| t.coef.norm()).fold(1.0, f64::max);
        ensure(pf.residue_sum().norm() <= 1e-10 * scale, || format!("residue sum {}", pf.residue_sum()))
    })
}

/// The expansion is a sum of terms that cancel wherever f is small against
/// them (far from the roots, or near clustered roots), so the error is
/// bounded by the size of the summed terms; where that sum is well
/// conditioned the bound is relative to f itself.
pub fn reconstruction() -> Result<(), String> {
    let s = (factor_product(3, 1e-2), prop::collection::vec(-2.0f64..2.0, 1..6), (0.0f64..5.0, -1.0f64..1.0));
    run(s, |(fp, c, x)| {
        let fp = with_numerator(fp, &c);
        let pf = partial_fractions(&fp).map_err(|e| TestCaseError::fail(e.to_string()))?;
        let x = C64::new(x.0, x.1);
        let want = fp.eval(x);
        let size = pf.scale.norm() * pf.terms.iter().map(|t| (t.coef / (x - t.root).powu(t.order)).norm()).sum::<f64>();
        let err = (pf.eval(x) - want).norm();
        ensure(err <= 1e-9 * size.max(want.norm()), || format!("error {err} against term size {size}"))?;
        if size <= 1e5 * want.norm() {
            ensure(err <= 1e-9 * want.norm(), || format!("error {err} against value {want}"))?;
        }
        Ok(())
    })
}

/// Direct nested quadrature on the cube and radial quadrature on the
/// orthant agree within their combined error estimates.
pub fn cube_vs_orthant() -> Result<(), String> {
    let s = (prop::collection::vec(0.0f64..2.0, 2), prop::collection::vec(0.5f64..2.5, 2), 0u32..=2);
    run(s, |(mu, w, j)| {
        let spec = CubeIntegrandSpec::new(mu.iter().map(|&m| C64::new(m, 0.0)).collect(), w, j);
        let terms = [(C64::new(1.0, 0.0), spec)];
        let b = Budget::quick();
        let fail = |e: squarint::Error| TestCaseError::fail(e.to_string());
        let d = integrate_cube_terms(&terms, Part::Full, CubeRoute::Direct, 1e-9, &b).map_err(fail)?;
        let o = integrate_cube_terms(&terms, Part::Full, CubeRoute::Orthant, 1e-9, &b).map_err(fail)?;
        let slack = 3.0 * (d.error_estimate + o.error_estimate) + 1e-10;
        ensure((d.value - o.value).norm() <= slack, || format!("direct {d:?} orthant {o:?}"))
    })
}

/// Automatic cubature against the half-line closed form of the same
/// integral, k ∈ {2, 3}.
pub fn engine_agreement() -> Result<(), String> {
    let s = (prop::collection::vec(0.0f64..2.0, 2..=3), prop::collection::vec(0.5f64..2.5, 3));
    run(s, |(mu, w)| {
        let w = &w[..mu.len()];
        let spec = CubeIntegrandSpec::new(mu.iter().map(|&m| C64::new(m, 0.0)).collect(), w.to_vec(), 1);
        let fp = FactorProduct::unit(mu.iter().zip(w).map(|(&m, &wn)| LinearFactor::new(wn, C64::new(m + 1.0, 0.0), 1)).collect());
        let fail = |e: squarint::Error| TestCaseError::fail(e.to_string());
        let closed = integrate_rational(&fp).map_err(fail)?;
        let o = integrate_cube_terms(&[(C64::new(1.0, 0.0), spec)], Part::Full, CubeRoute::Auto, 1e-9, &Budget::quick())
            .map_err(fail)?;
        ensure((o.value - closed).norm() <= 3.0 * o.error_estimate + 1e-9, || format!("{o:?} vs {closed}"))
    })
}

pub fn digamma_recurrence() -> Result<(), String> {
    run((0.1f64..30.0, -20.0f64..20.0), |(re, im)| {
        let z = C64::new(re, im);
        let fail = |e: squarint::Error| TestCaseError::fail(e.to_string());
        let a = digamma(z).map_err(fail)?;
        let b = digamma(z + 1.0).map_err(fail)?;
        let r = b - a - z.inv();
        ensure(r.norm() <= 1e-12 * a.norm().max(1.0), || format!("residual {r} at {z}"))
    })
}

/// `Φ(z, s, a) = z Φ(z, s, a + 1) + a^{−s}`.
pub fn lerch_shift() -> Result<(), String> {
    let s = (-0.95f64..0.95, -0.3f64..0.3, 1.5f64..4.0, 0.3f64..3.0)
        .prop_filter("|z| ≤ 0.95", |(zr, zi, _, _)| zr.hypot(*zi) <= 0.95);
    run(s, |(zr, zi, s, a)| {
        let z = C64::new(zr, zi);
        let fail = |e: squarint::Error| TestCaseError::fail(e.to_string());
        let p0 = lerch_phi(z, s, a).map_err(fail)?.value;
        let p1 = lerch_phi(z, s, a + 1.0).map_err(fail)?.value;
        let r = p0 - z * p1 - a.powf(-s);
        ensure(r.norm() <= 1e-11 * p0.norm().max(1.0), || format!("residual {r}"))
    })
}

/// Swapping b and c inverts the product.
pub fn alt_log_product_antisymmetry() -> Result<(), String> {
    run((0.5f64..4.0, 0.5f64..4.0, 0.5f64..4.0), |(a, b, c)| {
        let fail = |e: squarint::Error| TestCaseError::fail(e.to_string());
        let f = alt_log_product(a, b, c).map_err(fail)?.value;
        let g = alt_log_product(a, c, b).map_err(fail)?.value;
        ensure((f + g).norm() <= 1e-12, || format!("{f} vs {g}"))
    })
}

/// `∂_α K(α,p,q) = K(α,p+1,q) + K(α,p,q+1) = −(p+q+1)/α · K(α,p,q)`.
pub fn kernel_consistency() -> Result<(), String> {
    run((0.2f64..5.0, -3.0f64..3.0, 0u32..6, 0u32..6), |(re, im, p, q)| {
        let a = C64::new(re, im);
        let fail = |e: squarint::Error| TestCaseError::fail(e.to_string());
        let k = log_moment_kernel(a, p, q).map_err(fail)?;
        let lhs = log_moment_kernel(a, p + 1, q).map_err(fail)? + log_moment_kernel(a, p, q + 1).map_err(fail)?;
        let rhs = -k * f64::from(p + q + 1) / a;
        ensure((lhs - rhs).norm() <= 1e-12 * rhs.norm(), || format!("{lhs} vs {rhs}"))
    })
}

/// Serialized reports of a seeded run repeat bit for bit.
pub fn deterministic_reports() -> Result<(), String> {
    let reg = builtin_registry();
    run((0..reg.len(), any::<u64>()), |(idx, seed)| {
        let r = &reg.records[idx];
        let s = Settings::new(Profile::Quick).with_seed(seed);
        let a = serde_json::to_string(&report_record(r, &s)).map_err(|e| TestCaseError::fail(e.to_string()))?;
        let b = serde_json::to_string(&report_record(r, &s)).map_err(|e| TestCaseError::fail(e.to_string()))?;
        ensure(a == b, || format!("{} differs between runs", r.id))
    })
}

/// Every suite by name.
pub const SUITES: [(&str, fn() -> Result<(), String>); 9] = [
    ("residue-sum", residue_sum_zero),
    ("reconstruction", reconstruction),
    ("cube-vs-orthant", cube_vs_orthant),
    ("engine-agreement", engine_agreement),
    ("digamma-recurrence", digamma_recurrence),
    ("lerch-shift", lerch_shift),
    ("alt-log-product-antisymmetry", alt_log_product_antisymmetry),
    ("kernel-consistency", kernel_consistency),
    ("deterministic-reports", deterministic_reports),
];

/// `∫∫ (xy)^{α−1} logᵖx log^q y / (−log xy)`, from an independent
/// 25-digit adaptive 2-D quadrature (mpmath), rounded to 20 digits.
pub const ORACLE: [(u32, u32, u32, f64); 18] = [
    (1, 0, 0, 1.0),
    (1, 0, 1, -0.5),
    (1, 0, 2, 0.666_666_666_666_666_666_67),
    (1, 1, 0, -0.5),
    (1, 1, 1, 0.333_333_333_333_333_333_33),
    (1, 1, 2, -0.5),
    (1, 2, 0, 0.666_666_666_666_666_666_67),
    (1, 2, 1, -0.5),
    (1, 2, 2, 0.8),
    (2, 0, 0, 0.5),
    (2, 0, 1, -0.125),
    (2, 0, 2, 0.083_333_333_333_333_333_333),
    (2, 1, 0, -0.125),
    (2, 1, 1, 0.041_666_666_666_666_666_667),
    (2, 1, 2, -0.031_25),
    (2, 2, 0, 0.083_333_333_333_333_333_333),
    (2, 2, 1, -0.031_25),
    (2, 2, 2, 0.025),
];

/// Nested tanh-sinh; logs near 1 come from the complements.
pub fn nested(alpha: u32, p: u32, q: u32) -> f64 {
    let outer = tanh_sinh_unit(
        |x, xc| {
            let lx = if x > 0.5 { (-xc).ln_1p() } else { x.ln() };
            let inner = tanh_sinh_unit(
                |y, yc| {
                    let ly = if y > 0.5 { (-yc).ln_1p() } else { y.ln() };
                    let v = ((lx + ly) * f64::from(alpha - 1)).exp() * lx.powi(p as i32) * ly.powi(q as i32) / -(lx + ly);
                    C64::new(v, 0.0)
                },
                1e-13,
                MAX_LEVEL,
                1 << 20,
            );
            inner.value
        },
        1e-12,
        MAX_LEVEL,
        1 << 20,
    );
    outer.value.re
}

