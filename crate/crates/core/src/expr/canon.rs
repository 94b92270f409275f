use super::{FactorProduct, LinearFactor};
use crate::C64;

/// Absolute distance under which two canonical roots are coalesced.
pub const ROOT_MERGE_TOL: f64 = 1e-12;

/// A distinct root of a canonicalized denominator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CanonicalRoot {
    pub root: C64,
    pub multiplicity: u32,
}

/// Splits `fp` into `scale · P(x) / ∏ (x − zⱼ)^{mⱼ}` with merged, sorted roots.
///
/// Returns `(scale, roots)`; the numerator is left untouched.
pub fn canonical_roots(fp: &FactorProduct) -> (f64, Vec<CanonicalRoot>) {
    let mut scale = 1.0;
    let mut monic: Vec<(C64, u32)> = Vec::with_capacity(fp.factors.len());
    for f in &fp.factors {
        scale *= f.slope.powi(-(f.multiplicity as i32));
        monic.push((f.offset / f.slope, f.multiplicity));
    }
    monic.sort_by(|a, b| {
        a.0.re
            .total_cmp(&b.0.re)
            .then(a.0.im.total_cmp(&b.0.im))
    });
    // Offsets w with factor (x + w); first member of a cluster represents it.
    let mut reps: Vec<(C64, u32)> = Vec::new();
    for (w, m) in monic {
        match reps.iter_mut().find(|(r, _)| (*r - w).norm() <= ROOT_MERGE_TOL) {
            Some(rep) => rep.1 += m,
            None => reps.push((w, m)),
        }
    }
    let roots = reps
        .into_iter()
        .map(|(w, m)| CanonicalRoot { root: -w, multiplicity: m })
        .collect();
    (scale, roots)
}

/// Normalizes every factor to slope 1, folds the extracted constant into the
/// numerator and merges roots closer than [`ROOT_MERGE_TOL`].
pub fn canonicalize(fp: &FactorProduct) -> FactorProduct {
    let (scale, roots) = canonical_roots(fp);
    let factors = roots
        .into_iter()
        .map(|r| LinearFactor::new(1.0, -r.root, r.multiplicity))
        .collect();
    let numerator = fp.numerator.iter().map(|c| c * scale).collect();
    FactorProduct { factors, numerator }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn extracts_constant() {
        let fp = FactorProduct::unit(vec![LinearFactor::new(2.0, c(2.0, 2.0), 1)]);
        let canon = canonicalize(&fp);
        assert_eq!(canon.numerator, vec![0.5]);
        assert_eq!(canon.factors, vec![LinearFactor::new(1.0, c(1.0, 1.0), 1)]);
    }

    #[test]
    fn merges_equal_roots() {
        let fp = FactorProduct::unit(vec![
            LinearFactor::simple(1.0, 1.0, 0.0),
            LinearFactor::simple(1.0, 1.0, 0.0),
        ]);
        let canon = canonicalize(&fp);
        assert_eq!(canon.factors, vec![LinearFactor::new(1.0, c(1.0, 0.0), 2)]);
    }

    #[test]
    fn merges_nearly_equal_roots() {
        let fp = FactorProduct::unit(vec![
            LinearFactor::simple(1.0, 1.0, 0.0),
            LinearFactor::simple(1.0, 1.0, 1e-15),
        ]);
        let canon = canonicalize(&fp);
        assert_eq!(canon.factors.len(), 1);
        assert_eq!(canon.factors[0].multiplicity, 2);
    }

    #[test]
    fn keeps_separated_roots() {
        let fp = FactorProduct::unit(vec![
            LinearFactor::simple(1.0, 1.0, 0.0),
            LinearFactor::simple(1.0, 1.0, 1e-9),
        ]);
        assert_eq!(canonicalize(&fp).factors.len(), 2);
    }

    #[test]
    fn evaluation_is_preserved() {
        let fp = FactorProduct::new(
            vec![
                LinearFactor::simple(3.0, 2.0, 0.0),
                LinearFactor::simple(-2.0, -1.0, 0.5),
                LinearFactor::new(0.5, c(1.0, -1.0), 2),
            ],
            vec![1.0, -0.25],
        );
        let canon = canonicalize(&fp);
        for x in [0.0, 0.3, 1.7, 12.0] {
            let a = fp.eval(c(x, 0.0));
            let b = canon.eval(c(x, 0.0));
            assert!((a - b).norm() <= 1e-12 * a.norm(), "x = {x}: {a} vs {b}");
        }
    }
}
