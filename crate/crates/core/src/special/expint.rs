use crate::expr::EULER_GAMMA;
use crate::{Error, Result, C64};

const EPS: f64 = 1e-16;
/// The continued-fraction ratio settles within a few ulps of one.
const CF_EPS: f64 = 4.0 * f64::EPSILON;
const MAX_ITER: usize = 100_000;

/// `Eₙ(z)` by its power series (Abramowitz–Stegun 5.1.12).
fn series(n: u32, z: C64) -> Result<C64> {
    let nm1 = n as i64 - 1;
    let mut psi = -EULER_GAMMA;
    for m in 1..n {
        psi += 1.0 / m as f64;
    }
    // Σ_{k≠n−1} −(−z)ᵏ/((k − n + 1)·k!)
    let mut sum = C64::new(0.0, 0.0);
    let mut fact_term = C64::new(1.0, 0.0); // (−z)ᵏ/k!
    let mut special = C64::new(0.0, 0.0);
    for k in 0..MAX_ITER as i64 {
        if k > 0 {
            fact_term *= -z / k as f64;
        }
        if k == nm1 {
            special = fact_term * (psi - z.ln());
        } else {
            let t = -fact_term / (k - nm1) as f64;
            sum += t;
            if k > nm1 && t.norm() < EPS * sum.norm() {
                return Ok(sum + special);
            }
        }
    }
    Err(Error::Nonconvergent(format!("E_{n}({z}) series")))
}

/// `e^{z}Eₙ(z)` by the modified-Lentz continued fraction.
fn continued_fraction(n: u32, z: C64) -> Result<C64> {
    let nf = n as f64;
    let mut b = z + nf;
    // c starts at infinity, so the first update leaves c = b.
    let mut c = b;
    let mut d = b.inv();
    let mut h = d;
    for i in 1..MAX_ITER {
        let an = -(i as f64) * (nf - 1.0 + i as f64);
        b += 2.0;
        d = (d * an + b).inv();
        c = if i == 1 { b } else { b + c.inv() * an };
        let del = c * d;
        h *= del;
        if (del - 1.0).norm() < CF_EPS {
            return Ok(h);
        }
    }
    Err(Error::Nonconvergent(format!("E_{n}({z}) continued fraction")))
}

fn use_series(z: C64) -> bool {
    let r = z.norm();
    r <= 1.0 || (z.re < 0.0 && z.im.abs() <= 1.0 && r <= 30.0)
}

fn check(n: u32, z: C64) -> Result<()> {
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::Domain(format!("E_{n} at non-finite {z}")));
    }
    if z.im == 0.0 && z.re < 0.0 {
        return Err(Error::Domain(format!("E_{n} on its branch cut at {z}")));
    }
    if z == C64::new(0.0, 0.0) && n <= 1 {
        return Err(Error::Domain(format!("E_{n}(0) diverges")));
    }
    Ok(())
}

/// `e^{z}·Eₙ(z)` on the principal branch (cut along the negative real axis).
///
/// Series for `|z| ≤ 1` and for the strip `Re z < 0, |Im z| ≤ 1` next to the
/// cut; continued fraction elsewhere.
pub fn exp_integral_e_scaled(n: u32, z: C64) -> Result<C64> {
    check(n, z)?;
    if n == 0 {
        return Ok(z.inv());
    }
    if z == C64::new(0.0, 0.0) {
        return Ok(C64::new(1.0 / (n as f64 - 1.0), 0.0));
    }
    if use_series(z) {
        Ok(series(n, z)? * z.exp())
    } else {
        continued_fraction(n, z)
    }
}

/// `Eₙ(z) = ∫₁^∞ e^{−zt} t^{−n} dt` on the principal branch.
pub fn exp_integral_e(n: u32, z: C64) -> Result<C64> {
    check(n, z)?;
    if n == 0 {
        return Ok((-z).exp() / z);
    }
    if z == C64::new(0.0, 0.0) {
        return Ok(C64::new(1.0 / (n as f64 - 1.0), 0.0));
    }
    if use_series(z) {
        series(n, z)
    } else {
        Ok(continued_fraction(n, z)? * (-z).exp())
    }
}
