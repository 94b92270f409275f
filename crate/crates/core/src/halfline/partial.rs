use crate::expr::{canonical_roots, FactorProduct};
use crate::{Error, Result, C64};

/// Distinct canonical roots closer than this are rejected as ill-conditioned.
pub const MIN_ROOT_SEPARATION: f64 = 1e-9;

/// `coef / (x − root)^order`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PfTerm {
    pub root: C64,
    pub order: u32,
    pub coef: C64,
}

/// `scale · (Σ polynomialₖ xᵏ + Σ coef/(x − root)^order)`.
///
/// `polynomial` is empty unless the numerator degree reaches the denominator
/// degree. Terms are sorted by root (real part, then imaginary part), then by
/// order.
#[derive(Debug, Clone, PartialEq)]
pub struct PartialFractionExpansion {
    pub scale: C64,
    pub polynomial: Vec<C64>,
    pub terms: Vec<PfTerm>,
}

impl PartialFractionExpansion {
    pub fn eval(&self, x: C64) -> C64 {
        let poly = self
            .polynomial
            .iter()
            .rev()
            .fold(C64::new(0.0, 0.0), |acc, &c| acc * x + c);
        let frac: C64 = self
            .terms
            .iter()
            .map(|t| t.coef / (x - t.root).powu(t.order))
            .sum();
        self.scale * (poly + frac)
    }

    /// Σ of first-order coefficients, without the scale.
    pub fn residue_sum(&self) -> C64 {
        self.terms.iter().filter(|t| t.order == 1).map(|t| t.coef).sum()
    }
}

/// Coefficients of `P(u + z)` in ascending order.
fn taylor_shift(p: &[f64], z: C64) -> Vec<C64> {
    let mut a: Vec<C64> = p.iter().map(|&c| C64::new(c, 0.0)).collect();
    let n = a.len().saturating_sub(1);
    for k in 0..n {
        for i in (k..n).rev() {
            let next = a[i + 1];
            a[i] += z * next;
        }
    }
    a
}

/// First `len` coefficients of `(u + d)^{−m}`.
fn inverse_power_series(d: C64, m: u32, len: usize) -> Vec<C64> {
    let mut out = Vec::with_capacity(len);
    let mut c = C64::new(1.0, 0.0) / d.powu(m);
    if !(c.re.is_finite() && c.im.is_finite()) || c == C64::new(0.0, 0.0) {
        c = (-(m as f64) * d.ln()).exp();
    }
    out.push(c);
    for t in 1..len {
        c = c * (-((m as usize + t - 1) as f64) / (t as f64)) / d;
        out.push(c);
    }
    out
}

fn mul_truncated(a: &[C64], b: &[C64], len: usize) -> Vec<C64> {
    let mut out = vec![C64::new(0.0, 0.0); len];
    for (i, &x) in a.iter().enumerate().take(len) {
        for (j, &y) in b.iter().enumerate().take(len - i) {
            out[i + j] += x * y;
        }
    }
    out
}

/// Quotient of `p / ∏(x − zⱼ)^{mⱼ}` in ascending order (empty if
/// `deg p < D`).
fn polynomial_part(p: &[f64], roots: &[(C64, u32)]) -> Vec<C64> {
    let mut q = vec![C64::new(1.0, 0.0)];
    for &(z, m) in roots {
        for _ in 0..m {
            let mut next = vec![C64::new(0.0, 0.0); q.len() + 1];
            for (i, &c) in q.iter().enumerate() {
                next[i + 1] += c;
                next[i] -= z * c;
            }
            q = next;
        }
    }
    let dq = q.len() - 1;
    let mut rem: Vec<C64> = p.iter().map(|&c| C64::new(c, 0.0)).collect();
    if rem.len() <= dq {
        return Vec::new();
    }
    let mut quot = vec![C64::new(0.0, 0.0); rem.len() - dq];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dq];
        quot[k] = c;
        for (i, &qi) in q.iter().enumerate() {
            rem[k + i] -= c * qi;
        }
    }
    quot
}

/// Complex partial fractions of a factor product.
///
/// For each root `z` of multiplicity `m` the numerator is Taylor-shifted to
/// `z` and multiplied by the binomial series of the other factors around
/// `z`; the first `m` coefficients of the product are the coefficients of
/// `(x − z)^{−m}, …, (x − z)^{−1}`.
pub fn partial_fractions(fp: &FactorProduct) -> Result<PartialFractionExpansion> {
    let structural = fp.structural_violations();
    if !structural.is_empty() {
        let msg: Vec<String> = structural.iter().map(|v| v.to_string()).collect();
        return Err(Error::Domain(msg.join("; ")));
    }
    let (scale, canon) = canonical_roots(fp);
    let roots: Vec<(C64, u32)> = canon.iter().map(|r| (r.root, r.multiplicity)).collect();
    for (i, &(zi, _)) in roots.iter().enumerate() {
        for &(zj, _) in &roots[i + 1..] {
            let d = (zi - zj).norm();
            if d < MIN_ROOT_SEPARATION {
                return Err(Error::IllConditioned(format!(
                    "roots {zi} and {zj} are {d:e} apart"
                )));
            }
        }
    }
    let deg = fp.numerator_degree().map_or(0, |d| d + 1);
    let p = &fp.numerator[..deg.max(1)];
    let mut terms = Vec::new();
    for (j, &(zj, mj)) in roots.iter().enumerate() {
        let len = mj as usize;
        let mut g: Vec<C64> = taylor_shift(p, zj);
        g.resize(len.max(g.len()), C64::new(0.0, 0.0));
        g.truncate(len);
        for (l, &(zl, ml)) in roots.iter().enumerate() {
            if l != j {
                g = mul_truncated(&g, &inverse_power_series(zj - zl, ml, len), len);
            }
        }
        for (t, &c) in g.iter().enumerate() {
            if c != C64::new(0.0, 0.0) {
                terms.push(PfTerm { root: zj, order: mj - t as u32, coef: c });
            }
        }
    }
    terms.sort_by(|a, b| {
        a.root
            .re
            .total_cmp(&b.root.re)
            .then(a.root.im.total_cmp(&b.root.im))
            .then(a.order.cmp(&b.order))
    });
    Ok(PartialFractionExpansion {
        scale: C64::new(scale, 0.0),
        polynomial: polynomial_part(p, &roots),
        terms,
    })
}
