//! Human-readable rendering. Numbers carry 9 significant digits; JSON
//! output goes through serde_json, which prints shortest round-trip
//! decimals.

use squarint::registry::{Status, VerificationReport};
use squarint::C64;

/// `v` to 9 significant digits, fixed notation for moderate magnitudes.
pub fn sig9(v: f64) -> String {
    if !v.is_finite() {
        return format!("{v}");
    }
    if v == 0.0 {
        return "0".into();
    }
    let e = v.abs().log10().floor() as i32;
    if (-5..9).contains(&e) {
        let s = format!("{:.*}", (8 - e) as usize, v);
        trim_zeros(&s)
    } else {
        let s = format!("{v:.8e}");
        match s.split_once('e') {
            Some((m, x)) => format!("{}e{x}", trim_zeros(m)),
            None => s,
        }
    }
}

fn trim_zeros(s: &str) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s.to_string()
    }
}

pub fn complex(z: C64) -> String {
    if z.im == 0.0 {
        sig9(z.re)
    } else if z.im < 0.0 {
        format!("{} - {}i", sig9(z.re), sig9(-z.im))
    } else {
        format!("{} + {}i", sig9(z.re), sig9(z.im))
    }
}

/// Two-digit scientific notation for error magnitudes.
pub fn err(v: f64) -> String {
    if v.is_finite() {
        format!("{v:.2e}")
    } else {
        format!("{v}")
    }
}

pub fn report_line(r: &VerificationReport) -> String {
    let mut line = format!(
        "{:<7} {:<22} lhs = {}  rhs = {}  abs = {}  rel = {}  tol = {:e}",
        r.status.name(),
        r.id,
        complex(r.lhs),
        complex(r.rhs),
        err(r.abs_error),
        err(r.rel_error),
        r.tolerance
    );
    if let Some(d) = r.engine() {
        line.push_str(&format!("  [{}, {} evals, est {}]", d.method, d.evals, err(d.estimate)));
    }
    if let Some(f) = &r.failure {
        line.push_str(&format!("\n        {f}"));
    }
    line
}

pub fn summary(reports: &[VerificationReport]) -> String {
    let ids = |s: Status| reports.iter().filter(|r| r.status == s).map(|r| r.id.as_str()).collect::<Vec<_>>();
    let (pass, flagged, fail) = (ids(Status::Pass), ids(Status::Flagged), ids(Status::Fail));
    let mut out = format!("{} PASS, {} FLAGGED, {} FAIL", pass.len(), flagged.len(), fail.len());
    if !flagged.is_empty() {
        out.push_str(&format!("\nflagged: {}", flagged.join(", ")));
    }
    if !fail.is_empty() {
        out.push_str(&format!("\nfailed: {}", fail.join(", ")));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nine_significant_digits() {
        assert_eq!(sig9(std::f64::consts::LN_2 / 2.0), "0.34657359");
        assert_eq!(sig9(0.029_039_227_912_745_2), "0.0290392279");
        assert_eq!(sig9(1.0), "1");
        assert_eq!(sig9(-1.076_674_047_468_581), "-1.07667405");
        assert_eq!(sig9(1.0 / 2_245_502.0), "4.45334718e-7");
        assert_eq!(sig9(123_456_789_012.0), "1.23456789e11");
    }

    #[test]
    fn complex_sign() {
        let h = std::f64::consts::LN_2 / 2.0;
        assert_eq!(complex(C64::new(h, -h)), "0.34657359 - 0.34657359i");
    }
}
