//! Nested tanh-sinh on the unit cube.
//!
//! Each axis is integrated with the complement `1 − x` carried alongside `x`,
//! so the logarithm next to the corner `x = 1` keeps full relative accuracy.

use std::cell::Cell;

use super::de::tanh_sinh_unit;
use super::{Budget, Method, QuadratureResult, DIRECT_MAX_DIM};
use crate::expr::{CubeIntegrandSpec, Part};
use crate::{Error, Result, C64};

/// Refinement cap per axis by dimension; the innermost axis gets one more.
fn max_level(k: usize) -> u32 {
    match k {
        1 => 10,
        2 => 8,
        _ => 6,
    }
}

struct Nest<'a> {
    terms: &'a [(C64, CubeIntegrandSpec)],
    part: Part,
    k: usize,
    tol: f64,
    evals: Cell<u64>,
}

impl Nest<'_> {
    fn leaf(&self, x: &[f64], xc: &[f64]) -> C64 {
        self.evals.set(self.evals.get() + 1);
        let mut v = C64::new(0.0, 0.0);
        for (c, s) in self.terms {
            v += c * s.eval_cube(x, xc);
        }
        self.part.apply(v)
    }

    /// Integral over axes `depth..k` with the leading coordinates fixed.
    fn axis(&self, depth: usize, x: &mut [f64], xc: &mut [f64]) -> (C64, f64) {
        let inner_tol = self.tol * 0.1f64.powi((self.k - 1 - depth) as i32).max(1e-14);
        let err = Cell::new(0.0f64);
        let x0 = x.to_vec();
        let xc0 = xc.to_vec();
        let q = tanh_sinh_unit(
            |u, uc| {
                let mut xs = x0.clone();
                let mut xcs = xc0.clone();
                xs.push(u);
                xcs.push(uc);
                if depth + 1 == self.k {
                    self.leaf(&xs, &xcs)
                } else {
                    let (v, e) = self.axis(depth + 1, &mut xs, &mut xcs);
                    err.set(err.get().max(e));
                    v
                }
            },
            inner_tol,
            max_level(self.k) + u32::from(depth + 1 == self.k),
            u64::MAX,
        );
        (q.value, q.error + err.get())
    }
}

pub(crate) fn integrate(terms: &[(C64, CubeIntegrandSpec)], part: Part, tol: f64, budget: &Budget) -> Result<QuadratureResult> {
    let k = terms[0].1.dim;
    if k > DIRECT_MAX_DIM {
        return Err(Error::InvalidDim(k));
    }
    let nest = Nest { terms, part, k, tol, evals: Cell::new(0) };
    let (value, error) = nest.axis(0, &mut Vec::with_capacity(k), &mut Vec::with_capacity(k));
    let evals = nest.evals.get();
    if evals > budget.max_evals.saturating_mul(64) {
        return Err(Error::Nonconvergent(format!("tensor rule used {evals} evaluations")));
    }
    Ok(QuadratureResult {
        value,
        error_estimate: error,
        evaluations: evals,
        method: if k == 1 { Method::TanhSinh1d } else { Method::AdaptiveTensor },
        truncation: None,
    })
}
