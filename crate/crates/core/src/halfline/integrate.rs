use super::partial::{partial_fractions, PartialFractionExpansion};
use crate::expr::{FactorProduct, Validate, Violation};
use crate::special;
use crate::special::Compensated;
use crate::{Error, Result, C64};

fn divergent(v: &[Violation]) -> Error {
    Error::Divergent(v.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))
}

/// `w^{−p}` for `p ≥ 1`; log scale once repeated squaring could leave the
/// binary64 range.
fn inv_pow(w: C64, p: u32) -> C64 {
    if p <= 64 {
        let v = C64::new(1.0, 0.0) / w.powu(p);
        if v.re.is_finite() && v.im.is_finite() && v != C64::new(0.0, 0.0) {
            return v;
        }
    }
    (-(p as f64) * w.ln()).exp()
}

fn check_branch(w: C64) -> Result<()> {
    if w.im == 0.0 && w.re <= 0.0 {
        return Err(Error::BranchConflict(format!("−z = {w} lies on the principal cut")));
    }
    Ok(())
}

/// `∫₀^∞` of an expansion without a polynomial part:
/// `Σ_{r≥2} A·(−z)^{1−r}/(r−1) − Σ_{r=1} A·log(−z)`.
pub fn integrate_expansion(pf: &PartialFractionExpansion) -> Result<C64> {
    if pf.polynomial.iter().any(|c| *c != C64::new(0.0, 0.0)) {
        return Err(Error::Divergent("polynomial part does not decay".into()));
    }
    let mut acc = Compensated::default();
    for t in &pf.terms {
        let w = -t.root;
        check_branch(w)?;
        if t.order == 1 {
            acc.add(-t.coef * w.ln());
        } else {
            let k = (t.order - 1) as f64;
            let v = t.coef * inv_pow(w, t.order - 1);
            // Split v/k into a head and its rounding residue.
            let hi = v / k;
            let lo = C64::new((-hi.re).mul_add(k, v.re) / k, (-hi.im).mul_add(k, v.im) / k);
            acc.add(hi);
            acc.add(lo);
        }
    }
    Ok(pf.scale * acc.value())
}

/// `∫₀^∞ P(x)/∏(aₙx + bₙ + cₙi)^{mₙ} dx` in closed form.
pub fn integrate_rational(fp: &FactorProduct) -> Result<C64> {
    let v = fp.violations();
    if !v.is_empty() {
        return Err(divergent(&v));
    }
    integrate_expansion(&partial_fractions(fp)?)
}

/// `∫₀^∞ e^{−mx} P(x)/∏(aₙx + bₙ + cₙi)^{mₙ} dx` in closed form.
///
/// Each `(x − z)^{−r}` term contributes `(−z)^{1−r}·e^{−mz}E_r(−mz)` and each
/// polynomial coefficient `cₖ` contributes `cₖ·k!/m^{k+1}`.
pub fn integrate_rational_exp(fp: &FactorProduct, m: f64) -> Result<C64> {
    if m == 0.0 {
        return integrate_rational(fp);
    }
    let v = fp.weighted_violations(m);
    if !v.is_empty() {
        return Err(divergent(&v));
    }
    let pf = partial_fractions(fp)?;
    let mut acc = Compensated::default();
    let mut fact = 1.0;
    for (k, &c) in pf.polynomial.iter().enumerate() {
        if k > 0 {
            fact *= k as f64;
        }
        acc.add(c * (fact / m.powi(k as i32 + 1)));
    }
    for t in &pf.terms {
        let w = -t.root;
        check_branch(w)?;
        let scaled = special::exp_integral_e_scaled(t.order, w * m)?;
        let pw = if t.order == 1 { C64::new(1.0, 0.0) } else { inv_pow(w, t.order - 1) };
        acc.add(t.coef * pw * scaled);
    }
    Ok(pf.scale * acc.value())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::LinearFactor;
    use std::f64::consts::LN_2;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn square_of_shifted_line() {
        let fp = FactorProduct::unit(vec![LinearFactor::new(1.0, c(1.0, 0.0), 2)]);
        assert_eq!(integrate_rational(&fp).unwrap(), c(1.0, 0.0));
    }

    #[test]
    fn two_complex_factors() {
        let fp = FactorProduct::unit(vec![LinearFactor::simple(1.0, 1.0, 1.0), LinearFactor::simple(2.0, 1.0, 1.0)]);
        let v = integrate_rational(&fp).unwrap();
        assert!((v - c(0.5 * LN_2, -0.5 * LN_2)).norm() < 1e-15);
    }

    #[test]
    fn three_real_factors() {
        let fp = FactorProduct::unit(vec![
            LinearFactor::simple(1.0, 4.0, 0.0),
            LinearFactor::simple(2.0, 3.0, 0.0),
            LinearFactor::simple(3.0, 2.0, 0.0),
        ]);
        let v = integrate_rational(&fp).unwrap();
        let want = (2187.0f64 / 512.0).ln() / 50.0;
        assert!((v.re - want).abs() < 1e-16 * 10.0);
        assert_eq!(v.im, 0.0);
    }

    #[test]
    fn polynomial_numerator() {
        // s/(s+1)⁴ → 1/((n−1)(n−2)) = 1/6
        let fp = FactorProduct::new(vec![LinearFactor::new(1.0, c(1.0, 0.0), 4)], vec![0.0, 1.0]);
        assert!((integrate_rational(&fp).unwrap().re - 1.0 / 6.0).abs() < 1e-16);
    }

    #[test]
    fn huge_power_in_log_scale() {
        let fp = FactorProduct::unit(vec![LinearFactor::new(1.0, c(1.0, 1.0), 2015)]);
        let v = integrate_rational(&fp).unwrap();
        let want = -(2.0f64).powi(-1007) / 2014.0;
        assert!(((-v.im) - want).abs() <= 1e-12 * want.abs(), "{v}");
    }

    #[test]
    fn divergent_inputs() {
        let fp = FactorProduct::unit(vec![LinearFactor::simple(1.0, 1.0, 1.0)]);
        assert!(matches!(integrate_rational(&fp), Err(Error::Divergent(_))));
        let fp = FactorProduct::unit(vec![LinearFactor::simple(1.0, -1.0, 0.0), LinearFactor::simple(1.0, 1.0, 0.0)]);
        assert!(matches!(integrate_rational(&fp), Err(Error::Divergent(_))));
    }

    #[test]
    fn weighted_examples() {
        let e1 = 0.219_383_934_395_520_3;
        let e = std::f64::consts::E;
        let fp = FactorProduct::new(vec![LinearFactor::new(1.0, c(1.0, 0.0), 2)], vec![0.0, 1.0]);
        let v = integrate_rational_exp(&fp, 1.0).unwrap();
        assert!((v.re - (2.0 * e * e1 - 1.0)).abs() < 1e-14, "{v}");
        let fp = FactorProduct::unit(vec![LinearFactor::simple(1.0, 1.0, 0.0)]);
        let v = integrate_rational_exp(&fp, 1.0).unwrap();
        assert!((v.re - e * e1).abs() < 1e-14);
        let fp = FactorProduct::unit(vec![LinearFactor::new(1.0, c(1.0, 0.0), 2)]);
        assert_eq!(integrate_rational_exp(&fp, 0.0).unwrap(), c(1.0, 0.0));
    }

    #[test]
    fn weighted_polynomial_part() {
        // ∫ e^{−2x}(x² + 1)/(x + 1) dx: quotient x − 1, remainder 2/(x+1).
        let fp = FactorProduct::new(vec![LinearFactor::simple(1.0, 1.0, 0.0)], vec![1.0, 0.0, 1.0]);
        let v = integrate_rational_exp(&fp, 2.0).unwrap();
        let tail = 2.0 * special::exp_integral_e_scaled(1, c(2.0, 0.0)).unwrap().re;
        let want = 1.0 / 4.0 - 1.0 / 2.0 + tail;
        assert!((v.re - want).abs() < 1e-15);
    }
}
