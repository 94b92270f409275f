use super::integrate_rational;
use crate::expr::{FactorProduct, LinearFactor};
use crate::{Error, Result, C64};

/// Products `∏_{n=1}^{k} (1 + ρₙ²x²)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ProductFamily {
    /// `ρₙ = r^{n−1}`, `0 < r < 1`.
    Geometric { r: f64 },
    /// `ρₙ = 1/(a + n − 1)`, `a > 0`.
    Shifted { a: f64 },
}

impl ProductFamily {
    fn rho(self, n: u32) -> f64 {
        match self {
            ProductFamily::Geometric { r } => r.powi(n as i32 - 1),
            ProductFamily::Shifted { a } => 1.0 / (a + n as f64 - 1.0),
        }
    }

    fn check(self) -> Result<()> {
        match self {
            ProductFamily::Geometric { r } if !(r > 0.0 && r < 1.0) => {
                Err(Error::Domain(format!("ratio r = {r} must lie in (0, 1)")))
            }
            ProductFamily::Shifted { a } if !(a > 0.0 && a.is_finite()) => {
                Err(Error::Domain(format!("shift a = {a} must be positive")))
            }
            _ => Ok(()),
        }
    }
}

/// The `2k` conjugate linear factors `(ρₙx + i)(ρₙx − i) = 1 + ρₙ²x²`.
pub fn ramanujan_product(family: ProductFamily, k: u32) -> Result<FactorProduct> {
    family.check()?;
    if k == 0 {
        return Err(Error::Domain("k must be at least 1".into()));
    }
    let factors = (1..=k)
        .flat_map(|n| {
            let rho = family.rho(n);
            [LinearFactor::new(rho, C64::new(0.0, 1.0), 1), LinearFactor::new(rho, C64::new(0.0, -1.0), 1)]
        })
        .collect();
    Ok(FactorProduct::unit(factors))
}

/// `∫₀^∞ dx / ∏_{n=1}^{k} (1 + ρₙ²x²)`.
pub fn ramanujan_product_integral(family: ProductFamily, k: u32) -> Result<C64> {
    let v = integrate_rational(&ramanujan_product(family, k)?)?;
    if v.im.abs() > 1e-12 * v.re.abs().max(1.0) {
        return Err(Error::IllConditioned(format!("conjugate-paired product has imaginary part {}", v.im)));
    }
    Ok(v)
}

/// `(1 + x²)(1 + r²x²)(1 + r⁴x³)`: the three-factor product with a cubic
/// third factor, split as `r⁴·∏(x − ωⱼ/r^{4/3})` over the cube roots `ωⱼ`
/// of −1.
pub fn cubic_variant_product(r: f64) -> Result<FactorProduct> {
    ProductFamily::Geometric { r }.check()?;
    let mut fp = ramanujan_product(ProductFamily::Geometric { r }, 2)?;
    let s = r.powf(4.0 / 3.0);
    for j in 0..3 {
        let theta = std::f64::consts::PI * (2 * j + 1) as f64 / 3.0;
        let omega = C64::from_polar(1.0, theta);
        fp.factors.push(LinearFactor::new(s, -omega, 1));
    }
    Ok(fp)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    #[test]
    fn single_factor_pair() {
        for fam in [ProductFamily::Geometric { r: 0.3 }, ProductFamily::Shifted { a: 1.0 }] {
            let v = ramanujan_product_integral(fam, 1).unwrap();
            assert!((v.re - FRAC_PI_2).abs() < 1e-15);
        }
    }

    #[test]
    fn shifted_family_closed_form() {
        // For a = 1 the k-fold integral equals πk/(2(2k − 1)).
        for k in 1..=8u32 {
            let v = ramanujan_product_integral(ProductFamily::Shifted { a: 1.0 }, k).unwrap();
            let kf = k as f64;
            assert!((v.re - std::f64::consts::PI * kf / (2.0 * (2.0 * kf - 1.0))).abs() < 1e-13, "k = {k}");
        }
    }

    #[test]
    fn cubic_variant_matches_direct_evaluation() {
        let r = 0.5;
        let fp = cubic_variant_product(r).unwrap();
        for x in [0.0, 0.4, 2.0, 7.5] {
            let want = 1.0 / ((1.0 + x * x) * (1.0 + r * r * x * x) * (1.0 + r.powi(4) * x * x * x));
            let got = fp.eval(C64::new(x, 0.0));
            assert!((got.re - want).abs() < 1e-14 && got.im.abs() < 1e-14, "x = {x}: {got}");
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(ramanujan_product(ProductFamily::Geometric { r: 1.0 }, 2).is_err());
        assert!(ramanujan_product(ProductFamily::Shifted { a: 0.0 }, 2).is_err());
        assert!(ramanujan_product(ProductFamily::Shifted { a: 1.0 }, 0).is_err());
    }
}
