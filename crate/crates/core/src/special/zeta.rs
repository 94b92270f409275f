use super::accel::{sum_series, SeriesResult};
use super::bernoulli::B2;
use crate::{Error, Result, C64};

/// Closest approach of `s` to 1 accepted for `z = 1`.
pub const MIN_S_MINUS_ONE: f64 = 1e-2;

/// Hurwitz `ζ(s, a) = Σ_{k≥0} (k + a)^{−s}` for `s > 1`, `a > 0`, by
/// Euler–Maclaurin summation with the direct part taken to `x = N + a ≥ s + 20`.
pub fn hurwitz_zeta(s: f64, a: f64) -> Result<f64> {
    if !(s > 1.0 && s - 1.0 >= MIN_S_MINUS_ONE && s.is_finite()) {
        return Err(Error::Domain(format!("ζ(s, a) needs s ≥ 1 + {MIN_S_MINUS_ONE}, got s = {s}")));
    }
    if !(a > 0.0 && a.is_finite()) {
        return Err(Error::Domain(format!("ζ(s, a) needs a > 0, got a = {a}")));
    }
    let n = ((s + 20.0 - a).ceil().max(10.0)) as usize;
    let x = n as f64 + a;
    let mut head = 0.0;
    for k in (0..n).rev() {
        head += (k as f64 + a).powf(-s);
    }
    let xs = x.powf(-s);
    let mut tail = x * xs / (s - 1.0) + 0.5 * xs;
    // Term j: B₂ⱼ/(2j)! · s(s+1)⋯(s+2j−2) · x^{−s−2j+1}
    let mut rising = s;
    let mut fact = 2.0;
    let mut xp = xs / x;
    for (j, b) in B2.iter().enumerate() {
        let j = j + 1;
        if j > 1 {
            let k = 2.0 * j as f64;
            rising *= (s + k - 3.0) * (s + k - 2.0);
            fact *= (k - 1.0) * k;
            xp /= x * x;
        }
        let term = b / fact * rising * xp;
        tail += term;
        if term.abs() < 1e-18 * (head + tail) {
            break;
        }
    }
    Ok(head + tail)
}

/// Riemann `ζ(s)` for real `s > 1`, as `Φ(1, s, 1)`.
pub fn zeta(s: f64) -> Result<f64> {
    Ok(lerch_phi(C64::new(1.0, 0.0), s, 1.0)?.value.re)
}

/// Lerch `Φ(z, s, a) = Σ_{k≥0} zᵏ/(k + a)ˢ` for `|z| ≤ 1`, `a > 0`, and
/// `s > 1` (or `s ≥ 1` when `z ≠ 1`).
pub fn lerch_phi(z: C64, s: f64, a: f64) -> Result<SeriesResult> {
    if !(a > 0.0 && a.is_finite()) {
        return Err(Error::Domain(format!("Φ needs a > 0, got {a}")));
    }
    if !(z.re.is_finite() && z.im.is_finite()) || z.norm() > 1.0 + 1e-15 {
        return Err(Error::Domain(format!("Φ needs |z| ≤ 1, got {z}")));
    }
    if z == C64::new(0.0, 0.0) {
        return Ok(SeriesResult { value: C64::new(a.powf(-s), 0.0), terms_used: 1, tail_bound: 0.0, accelerated: false });
    }
    if z == C64::new(1.0, 0.0) {
        let v = hurwitz_zeta(s, a)?;
        return Ok(SeriesResult { value: C64::new(v, 0.0), terms_used: 1, tail_bound: 0.0, accelerated: false });
    }
    if !(s >= 1.0 && s.is_finite()) {
        return Err(Error::Domain(format!("Φ needs s ≥ 1, got {s}")));
    }
    sum_series(z, 0, |k| Ok(C64::new((k as f64 + a).powf(-s), 0.0)), 1e-15)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::CATALAN;
    use std::f64::consts::PI;

    #[test]
    fn zeta_values() {
        assert!((zeta(2.0).unwrap() - PI * PI / 6.0).abs() < 1e-15);
        assert!((zeta(3.0).unwrap() - 1.202_056_903_159_594_3).abs() < 1e-15);
        assert!((zeta(7.0).unwrap() - 1.008_349_277_381_922_8).abs() < 1e-15);
        assert!(zeta(1.0).is_err());
        assert!(zeta(1.001).is_err());
    }

    #[test]
    fn hurwitz_large_order() {
        // ζ(40, 2) = ζ(40) − 1 ≈ 2⁻⁴⁰(1 + (2/3)⁴⁰ + …)
        let v = hurwitz_zeta(40.0, 2.0).unwrap();
        let want: f64 = (2..60).map(|k| (k as f64).powi(-40)).sum();
        assert!((v - want).abs() < 1e-15 * want);
    }

    #[test]
    fn lerch_special_cases() {
        let v = lerch_phi(C64::new(0.0, 0.0), 2.0, 3.0).unwrap();
        assert_eq!(v.value.re, 1.0 / 9.0);
        let v = lerch_phi(C64::new(-1.0, 0.0), 2.0, 0.5).unwrap();
        assert!((v.value.re - 4.0 * CATALAN).abs() < 1e-13, "{:?}", v);
        let v = lerch_phi(C64::new(0.5, 0.0), 2.0, 1.0).unwrap();
        // Li₂(1/2)/(1/2) = 2(π²/12 − log²2/2)
        let want = 2.0 * (PI * PI / 12.0 - 2f64.ln().powi(2) / 2.0);
        assert!((v.value.re - want).abs() < 1e-14);
    }

    #[test]
    fn lerch_alternating_order_one() {
        // Φ(−1, 1, 1) = log 2
        let v = lerch_phi(C64::new(-1.0, 0.0), 1.0, 1.0).unwrap();
        assert!((v.value.re - 2f64.ln()).abs() < 1e-14);
    }
}
