//! Randomized quasi-Monte Carlo: Sobol points with independent random
//! digital (XOR) shifts. The value is the shift mean and the error estimate
//! its standard error.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use rayon::prelude::*;

use super::sobol::Sobol;
use super::{Budget, Method, QuadratureResult};
use crate::expr::{CubeIntegrandSpec, Part};
use crate::special::Compensated;
use crate::{Error, Result, C64};

const SCALE: f64 = 1.0 / 4_294_967_296.0;

fn shift_mean(terms: &[(C64, CubeIntegrandSpec)], part: Part, shift: &[u32], points: u64) -> C64 {
    let k = shift.len();
    let mut gen = Sobol::new(k);
    let mut x = vec![0.0; k];
    let mut xc = vec![0.0; k];
    let mut acc = Compensated::default();
    for _ in 0..points {
        for (j, (&p, &s)) in gen.next_point().iter().zip(shift).enumerate() {
            let b = p ^ s;
            x[j] = (f64::from(b) + 0.5) * SCALE;
            xc[j] = (f64::from(u32::MAX - b) + 0.5) * SCALE;
        }
        let mut v = C64::new(0.0, 0.0);
        for (c, s) in terms {
            v += c * s.eval_cube(&x, &xc);
        }
        acc.add(part.apply(v));
    }
    acc.value() / points as f64
}

pub(crate) fn integrate(terms: &[(C64, CubeIntegrandSpec)], part: Part, budget: &Budget) -> Result<QuadratureResult> {
    let k = terms[0].1.dim;
    if budget.shifts < 2 || budget.points == 0 {
        return Err(Error::Domain("low-discrepancy engine needs ≥ 2 shifts and ≥ 1 point".into()));
    }
    let points = budget.points.next_power_of_two();
    let mut rng = ChaCha20Rng::seed_from_u64(budget.seed);
    let shifts: Vec<Vec<u32>> = (0..budget.shifts).map(|_| (0..k).map(|_| rng.gen()).collect()).collect();
    let means: Vec<C64> = shifts.par_iter().map(|s| shift_mean(terms, part, s, points)).collect();
    let n = means.len() as f64;
    let mean: C64 = means.iter().sum::<C64>() / n;
    let var = means.iter().map(|m| (m - mean).norm_sqr()).sum::<f64>() / (n - 1.0);
    let value = mean;
    if !(value.re.is_finite() && value.im.is_finite()) {
        return Err(Error::Nonconvergent("non-finite shift mean".into()));
    }
    Ok(QuadratureResult {
        value,
        error_estimate: (var / n).sqrt(),
        evaluations: points * budget.shifts as u64,
        method: Method::LowDiscrepancy,
        truncation: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_and_accurate() {
        let spec = CubeIntegrandSpec::real(&[1.0, 2.0, 0.5], 0);
        let budget = Budget { points: 1 << 12, ..Budget::default() };
        let a = integrate(&[(C64::new(1.0, 0.0), spec.clone())], Part::Full, &budget).unwrap();
        let b = integrate(&[(C64::new(1.0, 0.0), spec)], Part::Full, &budget).unwrap();
        assert_eq!(a, b);
        // (1/2)(1/3)(2/3)
        let want = 1.0 / 9.0;
        assert!(a.error_estimate < 1e-4, "{a:?}");
        assert!((a.value.re - want).abs() < 5.0 * a.error_estimate, "{a:?}");
    }
}
