//! Riemann-sum limit `lim_{t→0} t·Σ_{n≥1} f(nt)`, an oracle for half-line
//! integrals that shares no code path with the closed forms.

use super::de::exp_sinh;
use crate::special::Compensated;
use crate::{Error, Result, C64};

/// The sum is taken directly up to `n ≤ SPAN/t`; the rest is the midpoint
/// tail integral.
const SPAN: f64 = 50.0;
/// Further halvings of the last step when the given sequence is too short.
const MAX_EXTRA_HALVINGS: usize = 8;

/// Euler–Maclaurin error exponents of `t·Σ_{n≥1} f(nt) − ∫₀^∞ f`.
fn exponent(i: usize) -> f64 {
    if i == 0 {
        1.0
    } else {
        2.0 * i as f64
    }
}

fn riemann_sum(f: &impl Fn(f64) -> f64, t: f64) -> f64 {
    let n = (SPAN / t).ceil() as u64;
    let mut acc = Compensated::default();
    for i in 1..=n {
        acc.add(C64::new(f(i as f64 * t), 0.0));
    }
    let tail = exp_sinh(|x| C64::new(f(x), 0.0), (n as f64 + 0.5) * t, 1e-14);
    acc.value().re * t + tail.value.re
}

/// Extrapolant through `(tᵢ, vᵢ)` for `v(t) = L + Σ_{i<n−1} cᵢ t^{eᵢ}`
/// (exact solve; `n` is small).
fn extrapolate(ts: &[f64], vs: &[f64]) -> f64 {
    let n = ts.len();
    let mut a: Vec<Vec<f64>> = ts
        .iter()
        .zip(vs)
        .map(|(&t, &v)| {
            let mut row = vec![1.0];
            row.extend((0..n - 1).map(|i| (t / ts[0]).powf(exponent(i))));
            row.push(v);
            row
        })
        .collect();
    for c in 0..n {
        let p = (c..n).max_by(|&i, &j| a[i][c].abs().total_cmp(&a[j][c].abs())).expect("non-empty");
        a.swap(c, p);
        for r in 0..n {
            if r != c {
                let m = a[r][c] / a[c][c];
                for j in c..=n {
                    a[r][j] -= m * a[c][j];
                }
            }
        }
    }
    a[0][n] / a[0][0]
}

/// `lim_{t→0} t·Σ_{n≥1} f(nt)` extrapolated over `t_seq` (decreasing,
/// positive), extended by halving until successive extrapolants agree to
/// `tol`.
pub fn riemann_limit_sum(f: impl Fn(f64) -> f64, t_seq: &[f64], tol: f64) -> Result<f64> {
    if t_seq.is_empty() || t_seq.iter().any(|&t| !(t > 0.0)) || t_seq.windows(2).any(|w| w[1] >= w[0]) {
        return Err(Error::Domain("t sequence must be positive and strictly decreasing".into()));
    }
    let mut ts = t_seq.to_vec();
    let mut vs: Vec<f64> = ts.iter().map(|&t| riemann_sum(&f, t)).collect();
    let mut prev = f64::NAN;
    for extra in 0..=MAX_EXTRA_HALVINGS {
        // Use at most the last five levels; higher orders amplify rounding.
        let start = ts.len().saturating_sub(5);
        let est = extrapolate(&ts[start..], &vs[start..]);
        if ts.len() >= 2 && (est - prev).abs() <= tol {
            return Ok(est);
        }
        prev = est;
        if extra == MAX_EXTRA_HALVINGS {
            break;
        }
        let t = ts[ts.len() - 1] / 2.0;
        ts.push(t);
        vs.push(riemann_sum(&f, t));
    }
    Err(Error::Nonconvergent(format!("Riemann-sum extrapolants still differ at t = {}", ts[ts.len() - 1])))
}
