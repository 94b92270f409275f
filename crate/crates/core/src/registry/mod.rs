//! Identity catalog and verification planner.
//!
//! A [`Registry`] is an ordered list of [`IdentityRecord`]s. Verifying a
//! record evaluates both sides through [`planner::evaluate`] and compares
//! them against the record tolerance.

mod catalog;
pub mod planner;

use rayon::prelude::*;
use serde::ser::{Serialize, SerializeStruct, Serializer};

pub use catalog::{builtin_registry, frullani_log_record, REGISTRY_VERSION};
pub use planner::{evaluate, plan_label, PlanDiagnostics};

use crate::cubature::Budget;
use crate::expr::{IdentityRecord, Trust, Validate};
use crate::{Error, Result, C64};

/// Budget profile of a verification run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Profile {
    Quick,
    Thorough,
}

impl Profile {
    pub fn name(self) -> &'static str {
        match self {
            Profile::Quick => "quick",
            Profile::Thorough => "thorough",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        match s {
            "quick" => Some(Profile::Quick),
            "thorough" => Some(Profile::Thorough),
            _ => None,
        }
    }

    pub fn budget(self) -> Budget {
        match self {
            Profile::Quick => Budget::quick(),
            Profile::Thorough => Budget::thorough(),
        }
    }
}

/// Profile plus the (possibly overridden) budget and seed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Settings {
    pub profile: Profile,
    pub budget: Budget,
}

impl Settings {
    pub fn new(profile: Profile) -> Self {
        Settings { profile, budget: profile.budget() }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.budget.seed = seed;
        self
    }

    /// Acceptance tolerance of a record under this profile. Quadrature-backed
    /// records are held to a hundredth of their quick tolerance when
    /// thorough.
    pub fn tolerance(&self, r: &IdentityRecord) -> f64 {
        let quad = r.lhs.is_quadrature_backed() || r.rhs.is_quadrature_backed();
        match self.profile {
            Profile::Thorough if quad => r.tolerance / 100.0,
            _ => r.tolerance,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub enum Status {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
    /// A suspected-typo record whose sides disagree.
    #[serde(rename = "FLAGGED")]
    Flagged,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Flagged => "FLAGGED",
        }
    }
}

/// Outcome of verifying one record.
#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub id: String,
    pub lhs: C64,
    pub rhs: C64,
    pub abs_error: f64,
    /// `abs_error/|rhs|`; infinite when `rhs = 0 ≠ lhs`.
    pub rel_error: f64,
    pub tolerance: f64,
    pub trust: Trust,
    pub status: Status,
    pub lhs_diagnostics: Option<PlanDiagnostics>,
    pub rhs_diagnostics: Option<PlanDiagnostics>,
    /// Engine failure message when a side could not be evaluated.
    pub failure: Option<String>,
    pub seed: u64,
    pub profile: Profile,
}

impl VerificationReport {
    /// The less exact side: larger error estimate, lhs on ties.
    pub fn engine(&self) -> Option<&PlanDiagnostics> {
        match (&self.lhs_diagnostics, &self.rhs_diagnostics) {
            (Some(l), Some(r)) => Some(if r.estimate > l.estimate || l.method == "constant" { r } else { l }),
            (l, r) => l.as_ref().or(r.as_ref()),
        }
    }
}

struct Cx(C64);

impl Serialize for Cx {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("complex", 2)?;
        st.serialize_field("re", &self.0.re)?;
        st.serialize_field("im", &self.0.im)?;
        st.end()
    }
}

#[derive(serde::Serialize)]
struct Engine<'a> {
    method: &'a str,
    evals: u64,
    estimate: f64,
}

impl Serialize for VerificationReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("report", 14)?;
        st.serialize_field("id", &self.id)?;
        st.serialize_field("lhs", &Cx(self.lhs))?;
        st.serialize_field("rhs", &Cx(self.rhs))?;
        st.serialize_field("absError", &self.abs_error)?;
        st.serialize_field("relError", &self.rel_error)?;
        st.serialize_field("status", &self.status)?;
        let engine = self.engine().map(|d| Engine { method: &d.method, evals: d.evals, estimate: d.estimate });
        st.serialize_field("engine", &engine)?;
        st.serialize_field("seed", &self.seed)?;
        st.serialize_field("profile", &self.profile)?;
        st.serialize_field("tolerance", &self.tolerance)?;
        st.serialize_field("trust", &self.trust)?;
        st.serialize_field("diagnostics", &[&self.lhs_diagnostics, &self.rhs_diagnostics])?;
        st.serialize_field("failure", &self.failure)?;
        st.end()
    }
}

/// Ordered identity catalog.
#[derive(Debug, Clone, PartialEq)]
pub struct Registry {
    pub records: Vec<IdentityRecord>,
    pub version: String,
}

impl Registry {
    /// Checks id uniqueness, positive tolerances and plan validity.
    pub fn new(records: Vec<IdentityRecord>, version: impl Into<String>) -> Result<Self> {
        let mut seen = std::collections::HashSet::new();
        for r in &records {
            if !seen.insert(r.id.as_str()) {
                return Err(Error::Domain(format!("duplicate identity id `{}`", r.id)));
            }
            let v = r.violations();
            if !v.is_empty() {
                let msg = v.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; ");
                return Err(Error::Domain(format!("{}: {msg}", r.id)));
            }
        }
        Ok(Registry { records, version: version.into() })
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn lookup(&self, id: &str) -> Option<&IdentityRecord> {
        self.records.iter().find(|r| r.id == id)
    }

    /// Records whose id satisfies `keep`, in registry order.
    pub fn select(&self, keep: impl Fn(&str) -> bool) -> Registry {
        Registry {
            records: self.records.iter().filter(|r| keep(&r.id)).cloned().collect(),
            version: self.version.clone(),
        }
    }

    /// Errors: `UnknownIdentity`, or `EngineFailure` naming the side and
    /// plan that failed.
    pub fn verify(&self, id: &str, settings: &Settings) -> Result<VerificationReport> {
        let r = self.lookup(id).ok_or_else(|| Error::UnknownIdentity(id.to_string()))?;
        verify_record(r, settings)
    }

    /// Reports in registry order. Engine failures become FAIL (asserted) or
    /// FLAGGED (suspected-typo) reports carrying the failure message.
    pub fn verify_all(&self, settings: &Settings) -> Vec<VerificationReport> {
        self.records.par_iter().map(|r| report_record(r, settings)).collect()
    }
}

fn side(r: &IdentityRecord, which: &str, settings: &Settings, tol: f64) -> Result<(C64, PlanDiagnostics)> {
    let plan = if which == "lhs" { &r.lhs } else { &r.rhs };
    evaluate(plan, tol, &settings.budget).map_err(|e| Error::EngineFailure {
        plan: format!("{} of {}: {}", which, r.id, plan_label(plan)),
        source: Box::new(e),
    })
}

/// Evaluates both sides of one record.
pub fn verify_record(r: &IdentityRecord, settings: &Settings) -> Result<VerificationReport> {
    let tol = settings.tolerance(r);
    // Engines aim a decade below the acceptance tolerance.
    let engine_tol = tol / 10.0;
    let (lhs, ld) = side(r, "lhs", settings, engine_tol)?;
    let (rhs, rd) = side(r, "rhs", settings, engine_tol)?;
    let abs_error = (lhs - rhs).norm();
    let scale = rhs.norm();
    let rel_error = if abs_error == 0.0 { 0.0 } else if scale == 0.0 { f64::INFINITY } else { abs_error / scale };
    let status = if abs_error <= tol || rel_error <= tol {
        Status::Pass
    } else if r.trust == Trust::SuspectedTypo {
        Status::Flagged
    } else {
        Status::Fail
    };
    Ok(VerificationReport {
        id: r.id.clone(),
        lhs,
        rhs,
        abs_error,
        rel_error,
        tolerance: tol,
        trust: r.trust,
        status,
        lhs_diagnostics: Some(ld),
        rhs_diagnostics: Some(rd),
        failure: None,
        seed: settings.budget.seed,
        profile: settings.profile,
    })
}

/// Like [`verify_record`] but never fails: engine errors are recorded in
/// the report.
pub fn report_record(r: &IdentityRecord, settings: &Settings) -> VerificationReport {
    verify_record(r, settings).unwrap_or_else(|e| {
        let nan = C64::new(f64::NAN, f64::NAN);
        VerificationReport {
            id: r.id.clone(),
            lhs: nan,
            rhs: nan,
            abs_error: f64::NAN,
            rel_error: f64::NAN,
            tolerance: settings.tolerance(r),
            trust: r.trust,
            status: if r.trust == Trust::SuspectedTypo { Status::Flagged } else { Status::Fail },
            lhs_diagnostics: None,
            rhs_diagnostics: None,
            failure: Some(e.to_string()),
            seed: settings.budget.seed,
            profile: settings.profile,
        }
    })
}

/// [`Registry::verify`] on the built-in catalog with the default seed.
pub fn verify(id: &str, profile: Profile) -> Result<VerificationReport> {
    builtin_registry().verify(id, &Settings::new(profile))
}

/// [`Registry::verify_all`] on the built-in catalog with the default seed.
pub fn verify_all(profile: Profile) -> Vec<VerificationReport> {
    builtin_registry().verify_all(&Settings::new(profile))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::sexpr::{format_registry, parse_registry};

    #[test]
    fn catalog_round_trips_through_text() {
        let reg = builtin_registry();
        let text = format_registry(&reg.records);
        let back = parse_registry(&text).unwrap();
        assert_eq!(back, reg.records);
    }

    #[test]
    fn quick_run_has_no_asserted_failure() {
        let reports = verify_all(Profile::Quick);
        assert!(reports.len() >= 30);
        for r in &reports {
            assert_ne!(r.status, Status::Fail, "{r:?}");
            if r.status == Status::Flagged {
                assert_eq!(r.trust, Trust::SuspectedTypo);
            }
        }
    }

    #[test]
    fn repeated_runs_are_bit_identical() {
        let bits = |rs: Vec<VerificationReport>| -> Vec<[u64; 4]> {
            rs.iter().map(|r| [r.lhs.re.to_bits(), r.lhs.im.to_bits(), r.rhs.re.to_bits(), r.rhs.im.to_bits()]).collect()
        };
        assert_eq!(bits(verify_all(Profile::Quick)), bits(verify_all(Profile::Quick)));
    }

    #[test]
    fn unknown_id_is_reported() {
        assert!(matches!(verify("NOPE", Profile::Quick), Err(Error::UnknownIdentity(_))));
    }

    #[test]
    fn thorough_tightens_quadrature_records_only() {
        let reg = builtin_registry();
        let s = Settings::new(Profile::Thorough);
        assert_eq!(s.tolerance(reg.lookup("T1-EX3").unwrap()), 1e-7 / 100.0);
        assert_eq!(s.tolerance(reg.lookup("T1-EX3-CONST").unwrap()), 1e-9);
        assert_eq!(s.tolerance(reg.lookup("T5-LOG").unwrap()), 1e-6 / 100.0);
    }
}
