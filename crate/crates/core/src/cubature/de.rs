//! Double-exponential quadrature: tanh-sinh on finite intervals and
//! exp-sinh on `[a, ∞)`.
//!
//! Level `L` uses step `h = 2^{−L}` and reuses every node of the previous
//! level. The error estimate is the change between the last two levels.

use crate::special::Compensated;
use crate::C64;
use std::f64::consts::FRAC_PI_2;

/// One-dimensional quadrature outcome.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quad1d {
    pub value: C64,
    pub error: f64,
    pub evals: u64,
}

/// Parameter range of the tanh-sinh rule; reaches `1 − x ≈ 1e−300`.
const TS_TMAX: f64 = 6.5;
/// Parameter range of the exp-sinh rule.
const ES_TMAX: f64 = 5.0;
const MIN_LEVEL: u32 = 3;
pub const MAX_LEVEL: u32 = 10;

fn finite(z: C64) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

/// Tanh-sinh node at parameter `t` on (0, 1): `(x, 1 − x, dx/dt)`.
fn ts_node(t: f64) -> (f64, f64, f64) {
    let u = FRAC_PI_2 * t.sinh();
    let e = (-2.0 * u.abs()).exp();
    let small = e / (1.0 + e);
    let large = 1.0 / (1.0 + e);
    let (x, xc) = if u >= 0.0 { (large, small) } else { (small, large) };
    let w = FRAC_PI_2 * t.cosh() * 2.0 * e / ((1.0 + e) * (1.0 + e));
    (x, xc, w)
}

/// Relative size below which two consecutive outer nodes end a sweep.
const TAIL_CUTOFF: f64 = 1e-18;

/// Sums nodes `t = ±k·h` with `k` odd (or all `k` at level 0), sweeping
/// outward from the centre on each side. A sweep stops at `tmax` or once two
/// consecutive weighted values fall below `TAIL_CUTOFF` relative to `scale`
/// (the magnitude of the previous estimate, or the running sum at level 0).
fn level_sum(level: u32, tmax: f64, scale: f64, g: &mut impl FnMut(f64) -> Option<C64>, evals: &mut u64) -> C64 {
    let h = (0.5f64).powi(level as i32);
    let step = if level == 0 { 1 } else { 2 };
    let mut acc = Compensated::default();
    if level == 0 {
        *evals += 1;
        if let Some(v) = g(0.0) {
            acc.add(v);
        }
    }
    for sign in [1.0, -1.0] {
        let mut k = 1;
        let mut small = 0;
        loop {
            let t = k as f64 * h;
            if t > tmax {
                break;
            }
            *evals += 1;
            let v = g(sign * t).unwrap_or(C64::new(0.0, 0.0));
            acc.add(v);
            let reference = if level == 0 { acc.value().norm() } else { scale };
            if t >= 1.0 && v.norm() * h <= TAIL_CUTOFF * reference {
                small += 1;
                if small >= 2 {
                    break;
                }
            } else {
                small = 0;
            }
            k += step;
        }
    }
    acc.value()
}

/// Generic driver: `g(t)` returns the weighted integrand at parameter `t`
/// (`None` for nodes to skip).
fn de_driver(
    tmax: f64,
    mut g: impl FnMut(f64) -> Option<C64>,
    tol: f64,
    max_level: u32,
    max_evals: u64,
) -> Quad1d {
    let mut evals = 0;
    let mut sum = level_sum(0, tmax, 0.0, &mut g, &mut evals);
    let mut est = sum;
    let mut err = f64::INFINITY;
    for level in 1..=max_level.max(1) {
        sum += level_sum(level, tmax, est.norm(), &mut g, &mut evals);
        let h = (0.5f64).powi(level as i32);
        let next = sum * h;
        err = (next - est).norm();
        est = next;
        if level >= MIN_LEVEL && err <= tol * est.norm().max(1.0) {
            break;
        }
        if evals >= max_evals {
            break;
        }
    }
    Quad1d { value: est, error: err, evals }
}

/// `∫₀¹ f(x) dx` where `f(x, 1 − x)` receives the complement computed
/// without cancellation.
pub fn tanh_sinh_unit(f: impl Fn(f64, f64) -> C64, tol: f64, max_level: u32, max_evals: u64) -> Quad1d {
    de_driver(
        TS_TMAX,
        |t| {
            let (x, xc, w) = ts_node(t);
            if w == 0.0 || x == 0.0 || xc == 0.0 {
                return None;
            }
            let v = f(x, xc) * w;
            finite(v).then_some(v)
        },
        tol,
        max_level,
        max_evals,
    )
}

/// `∫_a^b f(x) dx` by tanh-sinh.
pub fn tanh_sinh(f: impl Fn(f64) -> C64, a: f64, b: f64, tol: f64) -> Quad1d {
    let len = b - a;
    let mut q = tanh_sinh_unit(
        |x, xc| if x <= 0.5 { f(a + len * x) } else { f(b - len * xc) },
        tol,
        MAX_LEVEL,
        u64::MAX,
    );
    q.value *= len;
    q.error *= len.abs();
    q
}

/// `∫_a^∞ f(x) dx` by exp-sinh, `x = a + exp(π/2·sinh t)`.
pub fn exp_sinh(f: impl Fn(f64) -> C64, a: f64, tol: f64) -> Quad1d {
    exp_sinh_with(f, a, tol, MAX_LEVEL, u64::MAX)
}

pub fn exp_sinh_with(f: impl Fn(f64) -> C64, a: f64, tol: f64, max_level: u32, max_evals: u64) -> Quad1d {
    de_driver(
        ES_TMAX,
        |t| {
            let e = (FRAC_PI_2 * t.sinh()).exp();
            let w = FRAC_PI_2 * t.cosh() * e;
            if e == 0.0 || !w.is_finite() {
                return None;
            }
            let v = f(a + e) * w;
            finite(v).then_some(v)
        },
        tol,
        max_level,
        max_evals,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn re(x: f64) -> C64 {
        C64::new(x, 0.0)
    }

    #[test]
    fn endpoint_singularity() {
        // ∫₀¹ x^{−3/4} dx = 4
        let q = tanh_sinh_unit(|x, _| re(x.powf(-0.75)), 1e-13, MAX_LEVEL, u64::MAX);
        assert!((q.value.re - 4.0).abs() < 1e-12, "{q:?}");
    }

    #[test]
    fn log_endpoint() {
        // ∫₀¹ −log(1 − x) dx = 1, using the complement
        let q = tanh_sinh_unit(|_, xc| re(-xc.ln()), 1e-13, MAX_LEVEL, u64::MAX);
        assert!((q.value.re - 1.0).abs() < 1e-13, "{q:?}");
    }

    #[test]
    fn general_interval() {
        let q = tanh_sinh(|x| re(x.cos()), 0.0, 2.0, 1e-14);
        assert!((q.value.re - 2f64.sin()).abs() < 1e-14);
    }

    #[test]
    fn half_line() {
        let q = exp_sinh(|x| re((-x).exp()), 0.0, 1e-13);
        assert!((q.value.re - 1.0).abs() < 1e-13, "{q:?}");
        let q = exp_sinh(|x| re(1.0 / ((1.0 + x) * (1.0 + x))), 0.0, 1e-13);
        assert!((q.value.re - 1.0).abs() < 1e-13, "{q:?}");
        let q = exp_sinh(|x| re(1.0 / (x * x)), 3.0, 1e-13);
        assert!((q.value.re - 1.0 / 3.0).abs() < 1e-13, "{q:?}");
    }
}
