//! Globally adaptive Gauss–Kronrod (7/15-point) quadrature on a finite
//! interval.

use super::de::Quad1d;
use crate::C64;

const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
/// Gauss weights for the odd-indexed Kronrod nodes (1, 3, 5) and the centre.
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

/// One G7K15 panel: `(Kronrod value, |Kronrod − Gauss|)`.
fn panel(f: &mut impl FnMut(f64) -> C64, a: f64, b: f64) -> (C64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut k = fc * WGK[7];
    let mut g = fc * WG[3];
    for j in 0..7 {
        let dx = h * XGK[j];
        let s = f(c - dx) + f(c + dx);
        k += s * WGK[j];
        if j % 2 == 1 {
            g += s * WG[j / 2];
        }
    }
    (k * h, ((k - g) * h).norm())
}

/// `∫_a^b f` to `max(abs_tol, rel_tol·|I|)` with at most `max_panels`
/// bisections of the worst panel.
pub fn gauss_kronrod(mut f: impl FnMut(f64) -> C64, a: f64, b: f64, abs_tol: f64, rel_tol: f64, max_panels: usize) -> Quad1d {
    let mut panels = vec![(a, b, panel(&mut f, a, b))];
    let mut evals = 15u64;
    loop {
        let total: C64 = panels.iter().map(|p| p.2 .0).sum();
        let err: f64 = panels.iter().map(|p| p.2 .1).sum();
        if err <= abs_tol.max(rel_tol * total.norm()) || panels.len() >= max_panels {
            return Quad1d { value: total, error: err, evals };
        }
        let worst = panels
            .iter()
            .enumerate()
            .max_by(|x, y| x.1 .2 .1.total_cmp(&y.1 .2 .1))
            .map(|(i, _)| i)
            .expect("at least one panel");
        let (lo, hi, _) = panels.swap_remove(worst);
        let mid = 0.5 * (lo + hi);
        panels.push((lo, mid, panel(&mut f, lo, mid)));
        panels.push((mid, hi, panel(&mut f, mid, hi)));
        evals += 30;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smooth_and_oscillatory() {
        let q = gauss_kronrod(|x| C64::new(x.exp(), 0.0), 0.0, 1.0, 1e-15, 1e-15, 50);
        assert!((q.value.re - (std::f64::consts::E - 1.0)).abs() < 1e-14);
        let q = gauss_kronrod(|x| C64::new(0.0, x).exp() * 40.0, 0.0, 40.0, 1e-13, 1e-13, 200);
        let want = (C64::new(0.0, 40.0).exp() - 1.0) / C64::new(0.0, 1.0) * 40.0;
        assert!((q.value - want).norm() < 1e-11, "{q:?}");
    }
}
