use crate::{Error, Result, C64};

/// `K(α, p, q) = ∫₀¹∫₀¹ (xy)^{α−1} logᵖx log^q y / (−log xy) dx dy
/// = (−1)^{p+q} p! q! / ((p + q + 1) α^{p+q+1})`.
///
/// In orthant coordinates with `s = t₁ + t₂` the integral factors into a
/// Beta integral over the simplex times a Gamma integral in `s`.
pub fn log_moment_kernel(alpha: C64, p: u32, q: u32) -> Result<C64> {
    if !(alpha.re > 0.0) || !alpha.im.is_finite() {
        return Err(Error::Domain(format!("kernel needs Re α > 0, got {alpha}")));
    }
    let fact = |n: u32| (1..=n).map(f64::from).product::<f64>();
    let sign = if (p + q).is_multiple_of(2) { 1.0 } else { -1.0 };
    let n = p + q + 1;
    let pow = if n <= 64 { alpha.powu(n) } else { (alpha.ln() * f64::from(n)).exp() };
    Ok(sign * fact(p) * fact(q) / f64::from(n) / pow)
}
