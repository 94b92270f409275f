use crate::expr::Accel;
use crate::{Error, Result, C64};

/// Value of a summed series with its truncation diagnostics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesResult {
    pub value: C64,
    pub terms_used: u64,
    /// Bound (or, for accelerated sums, estimate) of the neglected tail.
    pub tail_bound: f64,
    pub accelerated: bool,
}

/// Neumaier-compensated complex sum.
#[derive(Debug, Default, Clone, Copy)]
pub(crate) struct Compensated {
    re: (f64, f64),
    im: (f64, f64),
}

fn neumaier(acc: &mut (f64, f64), x: f64) {
    let t = acc.0 + x;
    if acc.0.abs() >= x.abs() {
        acc.1 += (acc.0 - t) + x;
    } else {
        acc.1 += (x - t) + acc.0;
    }
    acc.0 = t;
}

impl Compensated {
    pub(crate) fn add(&mut self, z: C64) {
        neumaier(&mut self.re, z.re);
        neumaier(&mut self.im, z.im);
    }

    pub(crate) fn value(&self) -> C64 {
        C64::new(self.re.0 + self.re.1, self.im.0 + self.im.1)
    }
}

/// Mixed absolute/relative stopping test: relative above 1, absolute below.
pub(crate) fn converged(err: f64, value: C64, tol: f64) -> bool {
    err <= tol * value.norm().max(1.0)
}

/// Richardson extrapolation of `vals[i] ≈ L + Σⱼ cⱼ·h[i]^{exps[j]}` along a
/// geometric sequence `h`. Returns the diagonal entry whose change from the
/// previous diagonal entry is smallest, with that change as error estimate.
pub fn richardson(h: &[f64], vals: &[C64], exps: &[f64]) -> (C64, f64) {
    assert_eq!(h.len(), vals.len());
    let n = vals.len();
    if n == 1 {
        return (vals[0], f64::INFINITY);
    }
    let mut prev: Vec<C64> = vec![vals[0]];
    let mut best = (vals[0], f64::INFINITY);
    let mut last_diag = vals[0];
    for i in 1..n {
        let mut row = vec![vals[i]];
        for j in 1..=i.min(exps.len()) {
            let ratio = (h[i - 1] / h[i]).powf(exps[j - 1]);
            let r = row[j - 1] + (row[j - 1] - prev[j - 1]) / (ratio - 1.0);
            row.push(r);
        }
        let diag = *row.last().expect("row is non-empty");
        let err = (diag - last_diag).norm();
        if err <= best.1 {
            best = (diag, err);
        }
        last_diag = diag;
        prev = row;
    }
    best
}

/// Repeated transform `Tₙ = (Sₙ₊₁ − z·Sₙ)/(1 − z)` of partial sums of
/// `Σ zⁿ·bₙ` with smooth `bₙ`; for `z = −1` this is repeated averaging.
/// Returns the final entry of the level whose change from the previous level
/// is smallest.
pub fn euler_transform(z: C64, sums: &[C64]) -> (C64, f64) {
    let one = C64::new(1.0, 0.0);
    let n = sums.len();
    let mut cur = sums.to_vec();
    let mut best = (sums[n - 1], if n > 1 { (sums[n - 1] - sums[n - 2]).norm() } else { f64::INFINITY });
    let mut prev_est = sums[n - 1];
    while cur.len() > n / 2 + 1 {
        let next: Vec<C64> = cur.windows(2).map(|w| (w[1] - z * w[0]) / (one - z)).collect();
        let est = *next.last().expect("at least one window");
        let err = (est - prev_est).norm();
        if err < best.1 {
            best = (est, err);
        }
        prev_est = est;
        cur = next;
    }
    best
}

const MAX_TERMS: u64 = 2_000_000;

/// Direct summation of `f(n)` with `|f(n+1)| ≤ ρ|f(n)|`, `ρ < 1`.
fn direct_mode(rho: f64, start: u64, mut f: impl FnMut(u64) -> Result<C64>, tol: f64) -> Result<SeriesResult> {
    let mut acc = Compensated::default();
    for n in start..start + MAX_TERMS {
        let t = f(n)?;
        acc.add(t);
        let bound = t.norm() * rho / (1.0 - rho);
        if converged(bound, acc.value(), tol) {
            return Ok(SeriesResult { value: acc.value(), terms_used: n - start + 1, tail_bound: bound, accelerated: false });
        }
    }
    Err(Error::Nonconvergent(format!("geometric series not converged after {MAX_TERMS} terms")))
}

/// Ratio-test truncation for terms that eventually decay geometrically.
fn ratio_mode(start: u64, mut f: impl FnMut(u64) -> Result<C64>, tol: f64) -> Result<SeriesResult> {
    let mut acc = Compensated::default();
    let mut last = f64::NAN;
    for n in start..start + MAX_TERMS {
        let t = f(n)?;
        acc.add(t);
        let a = t.norm();
        if a == 0.0 && last == 0.0 {
            return Ok(SeriesResult { value: acc.value(), terms_used: n - start + 1, tail_bound: 0.0, accelerated: false });
        }
        let rho = a / last;
        if rho < 1.0 {
            let bound = a * rho / (1.0 - rho);
            if converged(bound, acc.value(), tol) {
                return Ok(SeriesResult { value: acc.value(), terms_used: n - start + 1, tail_bound: bound, accelerated: false });
            }
        }
        last = a;
    }
    Err(Error::Nonconvergent(format!("series not converged after {MAX_TERMS} terms")))
}

fn euler_mode(z: C64, start: u64, mut f: impl FnMut(u64) -> Result<C64>, tol: f64) -> Result<SeriesResult> {
    let mut acc = Compensated::default();
    let mut sums = Vec::new();
    let mut target = 64usize;
    let mut n = start;
    let mut best = (C64::new(0.0, 0.0), f64::INFINITY);
    while target <= 16_384 {
        while sums.len() < target {
            acc.add(f(n)?);
            sums.push(acc.value());
            n += 1;
        }
        best = euler_transform(z, &sums);
        if converged(best.1, best.0, tol) {
            return Ok(SeriesResult { value: best.0, terms_used: sums.len() as u64, tail_bound: best.1, accelerated: true });
        }
        target *= 2;
    }
    Err(Error::Nonconvergent(format!(
        "Euler transform stalled at {} (change {:e})",
        best.0, best.1
    )))
}

/// Partial sums at `N = 16·2ⁱ`, extrapolated in `1/N` with exponents
/// `1, 2, 3, …`.
fn richardson_mode(start: u64, mut f: impl FnMut(u64) -> Result<C64>, tol: f64) -> Result<SeriesResult> {
    let mut acc = Compensated::default();
    let mut hs = Vec::new();
    let mut vals = Vec::new();
    let exps: Vec<f64> = (1..=16).map(f64::from).collect();
    let mut n = start;
    let mut count = 0u64;
    let mut target = 16u64;
    let mut best = (C64::new(0.0, 0.0), f64::INFINITY);
    while target <= 1 << 15 {
        while count < target {
            acc.add(f(n)?);
            n += 1;
            count += 1;
        }
        hs.push(1.0 / target as f64);
        vals.push(acc.value());
        if vals.len() >= 4 {
            best = richardson(&hs, &vals, &exps);
            if converged(best.1, best.0, tol) {
                return Ok(SeriesResult { value: best.0, terms_used: count, tail_bound: best.1, accelerated: true });
            }
        }
        target *= 2;
    }
    Err(Error::Nonconvergent(format!(
        "Richardson extrapolation stalled at {} (change {:e})",
        best.0, best.1
    )))
}

/// `Σ_{n≥start} zⁿ·b(n)` for `|z| ≤ 1`.
///
/// `|z| ≤ 0.9`: direct sum with the geometric tail bound (requires `|bₙ|`
/// non-increasing). `|z| > 0.9`, `z ≠ 1`: repeated Euler transform of the
/// partial sums. `z = 1`: Richardson extrapolation in `1/N` (requires `bₙ`
/// to have an asymptotic expansion in integer powers of `1/n`).
pub fn sum_series(z: C64, start: u64, mut b: impl FnMut(u64) -> Result<C64>, tol: f64) -> Result<SeriesResult> {
    let az = z.norm();
    if !(az <= 1.0 + 1e-15) {
        return Err(Error::Domain(format!("|z| = {az} > 1")));
    }
    if z == C64::new(1.0, 0.0) {
        return richardson_mode(start, b, tol);
    }
    let f = move |n: u64| -> Result<C64> {
        let p = if n > i32::MAX as u64 { z.powf(n as f64) } else { z.powi(n as i32) };
        Ok(p * b(n)?)
    };
    if az <= 0.9 {
        direct_mode(az, start, f, tol)
    } else {
        euler_mode(z, start, f, tol)
    }
}

/// `Σ_{n≥start} t(n)` with an explicit acceleration hint.
pub fn sum_with_accel(accel: Accel, start: u64, t: impl FnMut(u64) -> Result<C64>, tol: f64) -> Result<SeriesResult> {
    match accel {
        Accel::None => ratio_mode(start, t, tol),
        Accel::Alternating => euler_mode(C64::new(-1.0, 0.0), start, t, tol),
        Accel::TailIntegral => richardson_mode(start, t, tol),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{LN_2, PI};

    fn re(x: f64) -> C64 {
        C64::new(x, 0.0)
    }

    #[test]
    fn richardson_exact_for_polynomial_error() {
        let h = [1.0, 0.5, 0.25, 0.125];
        let vals: Vec<C64> = h.iter().map(|&x| re(2.0 + 3.0 * x - x * x + 0.5 * x * x * x)).collect();
        let (v, _) = richardson(&h, &vals, &[1.0, 2.0, 3.0]);
        assert!((v.re - 2.0).abs() < 1e-13);
    }

    #[test]
    fn alternating_harmonic() {
        let r = sum_series(re(-1.0), 0, |n| Ok(re(1.0 / (n + 1) as f64)), 1e-14).unwrap();
        assert!((r.value.re - LN_2).abs() < 1e-14, "{:?}", r);
        assert!(r.accelerated);
    }

    #[test]
    fn basel_by_richardson() {
        let r = sum_series(re(1.0), 1, |n| Ok(re(1.0 / (n * n) as f64)), 1e-13).unwrap();
        assert!((r.value.re - PI * PI / 6.0).abs() < 1e-13, "{:?}", r);
    }

    #[test]
    fn geometric_tail_bound_holds() {
        let r = sum_series(re(0.5), 0, |_| Ok(re(1.0)), 1e-12).unwrap();
        assert!((r.value.re - 2.0).abs() <= r.tail_bound.max(1e-15));
        assert!(!r.accelerated);
    }

    #[test]
    fn ratio_mode_exponential() {
        let mut fact = 1.0;
        let r = sum_with_accel(
            Accel::None,
            0,
            |n| {
                if n > 0 {
                    fact *= n as f64;
                }
                Ok(re(1.0 / fact))
            },
            1e-15,
        )
        .unwrap();
        assert!((r.value.re - std::f64::consts::E).abs() < 1e-15);
    }

    #[test]
    fn unit_circle_rotation() {
        // Σ iⁿ/(n+1) = −i·log(1 − i)
        let z = C64::new(0.0, 1.0);
        let r = sum_series(z, 0, |n| Ok(re(1.0 / (n + 1) as f64)), 1e-13).unwrap();
        let want = -(C64::new(1.0, 0.0) - z).ln() / z;
        assert!((r.value - want).norm() < 1e-13, "{:?} vs {want}", r.value);
    }
}
