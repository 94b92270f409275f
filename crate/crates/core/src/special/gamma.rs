use std::sync::OnceLock;

use super::bernoulli::B2;
use super::zeta::hurwitz_zeta;
use crate::expr::EULER_GAMMA;
use crate::{Error, Result, C64};

const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;

/// Number of Taylor coefficients kept for `log Γ(2 + t)`, `|t| ≤ ½`.
const TAYLOR_TERMS: usize = 40;

/// `ζ(k) − 1` for `k = 2..TAYLOR_TERMS+1`.
fn zeta_minus_one() -> &'static [f64] {
    static CACHE: OnceLock<Vec<f64>> = OnceLock::new();
    CACHE.get_or_init(|| {
        (2..=TAYLOR_TERMS + 1)
            .map(|k| hurwitz_zeta(k as f64, 2.0).expect("s ≥ 2, a = 2"))
            .collect()
    })
}

/// `log Γ(2 + t)` for real `|t| ≤ ½`.
fn log_gamma_near_two(t: f64) -> f64 {
    let z = zeta_minus_one();
    let mut sum = 0.0;
    // pow = (−t)ᵏ
    let mut pow = -t;
    let mut terms = Vec::with_capacity(TAYLOR_TERMS);
    for (i, zk) in z.iter().enumerate() {
        pow *= -t;
        terms.push(pow * zk / (i + 2) as f64);
    }
    // Smallest terms first.
    for v in terms.iter().rev() {
        sum += v;
    }
    (1.0 - EULER_GAMMA) * t + sum
}

/// `log Γ(1 + t) = −γt + Σ_{k≥2} (−1)ᵏ ζ(k) tᵏ/k` for real `|t| ≤ ¼`.
fn log_gamma_near_one(t: f64) -> f64 {
    let z = zeta_minus_one();
    let mut pow = -t;
    let mut terms = Vec::with_capacity(TAYLOR_TERMS);
    for (i, zk) in z.iter().enumerate() {
        pow *= -t;
        terms.push(pow * (1.0 + zk) / (i + 2) as f64);
    }
    let sum: f64 = terms.iter().rev().sum();
    -EULER_GAMMA * t + sum
}

fn stirling(z: C64) -> C64 {
    let inv = z.inv();
    let inv2 = inv * inv;
    let mut corr = C64::new(0.0, 0.0);
    let mut p = inv;
    for (j, b) in B2.iter().enumerate().take(10) {
        let k = (j + 1) as f64;
        corr += p * (b / (2.0 * k * (2.0 * k - 1.0)));
        p *= inv2;
    }
    (z - 0.5) * z.ln() - z + LN_SQRT_2PI + corr
}

fn check(z: C64, what: &str) -> Result<()> {
    if !(z.re.is_finite() && z.im.is_finite()) || z.re <= 0.0 {
        return Err(Error::Domain(format!("{what} needs Re z > 0, got {z}")));
    }
    Ok(())
}

/// Principal `log Γ(z)` for `Re z > 0`.
///
/// Real arguments below 15 use Taylor series in `ζ(k)`: around 1 within
/// `¼`, otherwise around 2 after the recurrence moves the argument into
/// `[1.5, 2.5]`. Everything else is shifted to `Re z ≥ 15` and evaluated by
/// the Stirling series with ten Bernoulli terms.
pub fn log_gamma(z: C64) -> Result<C64> {
    check(z, "log Γ")?;
    if z.im == 0.0 && z.re < 15.0 {
        let mut x = z.re;
        if (x - 1.0).abs() <= 0.25 {
            return Ok(C64::new(log_gamma_near_one(x - 1.0), 0.0));
        }
        let mut shift = 0.0;
        while x < 1.5 {
            shift += x.ln();
            x += 1.0;
        }
        while x > 2.5 {
            x -= 1.0;
            shift -= x.ln();
        }
        return Ok(C64::new(log_gamma_near_two(x - 2.0) - shift, 0.0));
    }
    let mut w = z;
    let mut shift = C64::new(0.0, 0.0);
    while w.re < 15.0 {
        shift += w.ln();
        w += 1.0;
    }
    Ok(stirling(w) - shift)
}

/// `ψ(z) = Γ′(z)/Γ(z)` for `Re z > 0`: recurrence to `|z| ≥ 10`, then the
/// asymptotic series.
pub fn digamma(z: C64) -> Result<C64> {
    check(z, "ψ")?;
    let mut w = z;
    let mut shift = C64::new(0.0, 0.0);
    while w.norm() < 10.0 || w.re < 10.0 {
        shift += w.inv();
        w += 1.0;
    }
    let inv = w.inv();
    let inv2 = inv * inv;
    let mut corr = C64::new(0.0, 0.0);
    let mut p = inv2;
    for (j, b) in B2.iter().enumerate().take(9) {
        corr += p * (b / (2.0 * (j + 1) as f64));
        p *= inv2;
    }
    Ok(w.ln() - inv * 0.5 - corr - shift)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lg(x: f64) -> f64 {
        log_gamma(C64::new(x, 0.0)).unwrap().re
    }

    fn psi(x: f64) -> f64 {
        digamma(C64::new(x, 0.0)).unwrap().re
    }

    #[test]
    fn log_gamma_values() {
        assert_eq!(lg(1.0), 0.0);
        assert_eq!(lg(2.0), 0.0);
        assert!((lg(0.5) - 0.572_364_942_924_700_1).abs() < 1e-15);
        // log Γ(10) = log 362880
        assert!((lg(10.0) - 362_880f64.ln()).abs() < 1e-13 * 12.8);
        assert!((lg(50.0) - 144.565_743_946_344_9).abs() < 1e-13 * 144.6);
        assert!((lg(0.1) - 2.252_712_651_734_206).abs() < 1e-13 * 2.26);
        assert!((lg(3.0) - 2f64.ln()).abs() < 1e-15);
    }

    #[test]
    fn log_gamma_near_one_is_relative() {
        // log Γ(1 + ε) ≈ −γε
        let x = 1.0 + 1e-6;
        // the representable offset, not 1e−6
        let e = x - 1.0;
        let v = lg(x);
        let want = -EULER_GAMMA * e + 0.822_467_033_424_113_2 * e * e - 0.400_685_634_386_531_4 * e * e * e;
        assert!((v - want).abs() < 1e-13 * want.abs(), "{v} vs {want}");
    }

    #[test]
    fn log_gamma_complex_recurrence() {
        let z = C64::new(0.7, 2.3);
        let lhs = log_gamma(z + 1.0).unwrap();
        let rhs = log_gamma(z).unwrap() + z.ln();
        assert!((lhs - rhs).norm() < 1e-13);
    }

    #[test]
    fn log_gamma_domain() {
        assert!(log_gamma(C64::new(0.0, 1.0)).is_err());
        assert!(log_gamma(C64::new(-1.5, 0.0)).is_err());
    }

    #[test]
    fn digamma_values() {
        assert!((psi(1.0) + EULER_GAMMA).abs() < 1e-15);
        assert!((psi(0.5) - (-EULER_GAMMA - 2.0 * 2f64.ln())).abs() < 1e-14);
        assert!((psi(2.0) - (1.0 - EULER_GAMMA)).abs() < 1e-15);
        assert!((psi(0.05) - (-20.497_844_991_299_87)).abs() < 1e-12);
    }
}
