//! Named residual magnitudes with pass/fail status, shared by every identity
//! check in the crate.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    /// Not evaluated at this point; `note` on the entry says why.
    Skipped,
}

/// One named residual compared against its tolerance.
#[derive(Debug, Clone, Serialize)]
pub struct Residual {
    pub name: String,
    pub magnitude: f64,
    pub tolerance: f64,
    pub status: CheckStatus,
    /// Informational entries document an alternative reading of an equation;
    /// they never gate `all_pass`.
    pub informational: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Residual {
    pub fn checked(name: &str, magnitude: f64, tolerance: f64) -> Self {
        Residual {
            name: name.to_string(),
            magnitude,
            tolerance,
            status: if magnitude <= tolerance {
                CheckStatus::Pass
            } else {
                CheckStatus::Fail
            },
            informational: false,
            note: None,
        }
    }

    pub fn skipped(name: &str, tolerance: f64, note: impl Into<String>) -> Self {
        Residual {
            name: name.to_string(),
            magnitude: f64::NAN,
            tolerance,
            status: CheckStatus::Skipped,
            informational: false,
            note: Some(note.into()),
        }
    }

    pub fn informational(name: &str, magnitude: f64, note: impl Into<String>) -> Self {
        Residual {
            name: name.to_string(),
            magnitude,
            tolerance: f64::NAN,
            status: CheckStatus::Skipped,
            informational: true,
            note: Some(note.into()),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

/// A bundle of named residuals from one check at one point.
#[derive(Debug, Clone, Serialize)]
pub struct ResidualReport {
    pub residuals: Vec<Residual>,
}

impl ResidualReport {
    pub fn new(residuals: Vec<Residual>) -> Self {
        ResidualReport { residuals }
    }

    /// True when every non-informational entry passed or was skipped.
    pub fn all_pass(&self) -> bool {
        self.residuals
            .iter()
            .filter(|r| !r.informational)
            .all(|r| r.status != CheckStatus::Fail)
    }

    /// Largest checked magnitude (informational and skipped entries excluded).
    pub fn max_magnitude(&self) -> f64 {
        self.residuals
            .iter()
            .filter(|r| !r.informational && r.status != CheckStatus::Skipped)
            .map(|r| r.magnitude)
            .fold(0.0, f64::max)
    }

    pub fn get(&self, name: &str) -> Option<&Residual> {
        self.residuals.iter().find(|r| r.name == name)
    }
}
