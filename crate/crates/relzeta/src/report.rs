//! Verification bookkeeping shared by the asymptotics checker, the
//! cross-validation suite and the command line `verify` front end.

use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    /// Documented discrepancy against a stated reference value; informational.
    Warn,
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CheckStatus::Pass => "PASS",
            CheckStatus::Fail => "FAIL",
            CheckStatus::Warn => "WARN",
        };
        write!(f, "{s}")
    }
}

#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub computed: f64,
    pub reference: f64,
    pub tolerance: f64,
    pub status: CheckStatus,
    pub detail: String,
}

impl Check {
    /// Pass/fail on |computed - reference| <= tolerance.
    pub fn absolute(name: impl Into<String>, computed: f64, reference: f64, tol: f64) -> Self {
        let ok = (computed - reference).abs() <= tol;
        Check {
            name: name.into(),
            computed,
            reference,
            tolerance: tol,
            status: if ok { CheckStatus::Pass } else { CheckStatus::Fail },
            detail: String::new(),
        }
    }

    /// Pass/fail on |computed - reference| <= tol * |reference|.
    pub fn relative(name: impl Into<String>, computed: f64, reference: f64, tol: f64) -> Self {
        let ok = (computed - reference).abs() <= tol * reference.abs();
        Check {
            name: name.into(),
            computed,
            reference,
            tolerance: tol,
            status: if ok { CheckStatus::Pass } else { CheckStatus::Fail },
            detail: String::new(),
        }
    }

    /// Informational comparison that never fails the run.
    pub fn warn(name: impl Into<String>, computed: f64, reference: f64, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            computed,
            reference,
            tolerance: f64::NAN,
            status: CheckStatus::Warn,
            detail: detail.into(),
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = detail.into();
        self
    }

    pub fn passed(&self) -> bool {
        self.status != CheckStatus::Fail
    }
}

#[derive(Debug, Clone, Default)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.checks.extend(other.checks);
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed())
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == CheckStatus::Fail)
    }

    pub fn find(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{:<58} {:>22} {:>22} {:>9} {:>6}",
            "check", "computed", "reference", "tol", "status"
        )?;
        for c in &self.checks {
            writeln!(
                f,
                "{:<58} {:>22.14e} {:>22.14e} {:>9.1e} {:>6}{}",
                c.name,
                c.computed,
                c.reference,
                c.tolerance,
                c.status,
                if c.detail.is_empty() {
                    String::new()
                } else {
                    format!("  [{}]", c.detail)
                }
            )?;
        }
        Ok(())
    }
}
