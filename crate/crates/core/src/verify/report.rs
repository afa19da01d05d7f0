use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::kernel::{format_rational, Rational};
use crate::ops::DifferenceOperator;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    DegenerateResampled,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::DegenerateResampled => "degenerate-resampled",
        }
    }
}

/// Outcome of the documented candidate correction for a failing entry.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorrectionOutcome {
    pub description: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub residual_offset: Option<i32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub residual_coeff: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub relation_id: String,
    pub status: Status,
    pub params: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub residual_offset: Option<i32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub residual_coeff: Option<String>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty", default)]
    pub empirical_constants: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub correction: Option<CorrectionOutcome>,
}

impl VerificationReport {
    pub fn new(suite: &str, relation_id: impl Into<String>, params: &[Rational]) -> Self {
        VerificationReport {
            suite: suite.to_string(),
            relation_id: relation_id.into(),
            status: Status::Pass,
            params: params.iter().map(format_rational).collect(),
            residual_offset: None,
            residual_coeff: None,
            empirical_constants: BTreeMap::new(),
            note: None,
            correction: None,
        }
    }

    /// Pass when `residual` is zero, otherwise fail with its leading term.
    pub fn with_residual(mut self, residual: &DifferenceOperator) -> Self {
        match residual.leading_term() {
            None => self.status = Status::Pass,
            Some((k, c)) => {
                self.status = Status::Fail;
                self.residual_offset = Some(k);
                self.residual_coeff = Some(c.to_string());
            }
        }
        self
    }

    pub fn fail(mut self, detail: impl Into<String>) -> Self {
        self.status = Status::Fail;
        self.residual_coeff = Some(detail.into());
        self
    }

    pub fn pass_if(mut self, ok: bool, detail: impl Into<String>) -> Self {
        if ok {
            self.status = Status::Pass;
        } else {
            self = self.fail(detail);
        }
        self
    }

    pub fn note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn constant(mut self, key: impl Into<String>, value: impl Into<String>) -> Self {
        self.empirical_constants.insert(key.into(), value.into());
        self
    }

    pub fn with_correction(mut self, c: CorrectionOutcome) -> Self {
        self.correction = Some(c);
        self
    }

    /// Failed as printed and not rescued by a passing correction.
    pub fn is_hard_failure(&self) -> bool {
        self.status == Status::Fail && self.correction.as_ref().is_none_or(|c| c.status != Status::Pass)
    }

    /// Passed either as printed or through its documented correction.
    pub fn passes_with_correction(&self) -> bool {
        self.status == Status::Pass || self.correction.as_ref().is_some_and(|c| c.status == Status::Pass)
    }
}

impl CorrectionOutcome {
    pub fn from_residual(description: impl Into<String>, residual: &DifferenceOperator) -> Self {
        let (status, residual_offset, residual_coeff) = match residual.leading_term() {
            None => (Status::Pass, None, None),
            Some((k, c)) => (Status::Fail, Some(k), Some(c.to_string())),
        };
        CorrectionOutcome {
            description: description.into(),
            status,
            residual_offset,
            residual_coeff,
        }
    }

    pub fn from_check(description: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        CorrectionOutcome {
            description: description.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            residual_offset: None,
            residual_coeff: (!ok).then(|| detail.into()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

impl std::str::FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            other => Err(format!("unknown format `{other}` (expected text, json or csv)")),
        }
    }
}

/// Renders reports grouped by suite, in the order given.
pub fn render(reports: &[VerificationReport], format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(reports).expect("reports serialize");
            s.push('\n');
            s
        }
        Format::Csv => render_csv(reports),
        Format::Text => render_text(reports),
    }
}

fn render_text(reports: &[VerificationReport]) -> String {
    let mut out = String::new();
    let mut current: Option<&str> = None;
    for r in reports {
        if current != Some(r.suite.as_str()) {
            if current.is_some() {
                out.push('\n');
            }
            let _ = writeln!(out, "== {} ==", r.suite);
            current = Some(&r.suite);
        }
        let _ = write!(out, "{:<6} {}", r.status.as_str().to_uppercase(), r.relation_id);
        if !r.params.is_empty() {
            let _ = write!(out, "  params=({})", r.params.join(", "));
        }
        if let Some(k) = r.residual_offset {
            let _ = write!(out, "  residual@T^{k}");
        }
        if let Some(c) = &r.residual_coeff {
            let _ = write!(out, "  [{c}]");
        }
        out.push('\n');
        for (k, v) in &r.empirical_constants {
            let _ = writeln!(out, "         {k} = {v}");
        }
        if let Some(c) = &r.correction {
            let _ = write!(out, "         correction ({}): {}", c.description, c.status.as_str());
            if let Some(k) = c.residual_offset {
                let _ = write!(out, "  residual@T^{k}");
            }
            if let Some(d) = &c.residual_coeff {
                let _ = write!(out, "  [{d}]");
            }
            out.push('\n');
        }
        if let Some(n) = &r.note {
            let _ = writeln!(out, "         note: {n}");
        }
    }
    let hard = reports.iter().filter(|r| r.is_hard_failure()).count();
    let passed = reports.iter().filter(|r| r.status == Status::Pass).count();
    let corrected = reports
        .iter()
        .filter(|r| r.status != Status::Pass && r.passes_with_correction())
        .count();
    let _ = writeln!(
        out,
        "\n{} entries: {} pass, {} pass only with correction, {} unresolved",
        reports.len(),
        passed,
        corrected,
        hard
    );
    out
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn render_csv(reports: &[VerificationReport]) -> String {
    let mut out = String::from(
        "suite,relation_id,status,params,residual_offset,residual_coeff,empirical_constants,correction,correction_status,note\n",
    );
    for r in reports {
        let constants = r
            .empirical_constants
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(";");
        let fields = [
            r.suite.clone(),
            r.relation_id.clone(),
            r.status.as_str().to_string(),
            r.params.join(";"),
            r.residual_offset.map(|k| k.to_string()).unwrap_or_default(),
            r.residual_coeff.clone().unwrap_or_default(),
            constants,
            r.correction.as_ref().map(|c| c.description.clone()).unwrap_or_default(),
            r.correction
                .as_ref()
                .map(|c| c.status.as_str().to_string())
                .unwrap_or_default(),
            r.note.clone().unwrap_or_default(),
        ];
        out.push_str(&fields.iter().map(|f| csv_field(f)).collect::<Vec<_>>().join(","));
        out.push('\n');
    }
    out
}

pub(crate) fn fmt_r(r: &Rational) -> String {
    format_rational(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rat;
    use crate::ops::sheun_basis;

    #[test]
    fn residual_sets_status() {
        let ok = VerificationReport::new("stab", "x", &[]).with_residual(&DifferenceOperator::zero());
        assert_eq!(ok.status, Status::Pass);
        let bad = VerificationReport::new("stab", "x", &[rat(1, 2)]).with_residual(&sheun_basis().l);
        assert_eq!(bad.status, Status::Fail);
        assert_eq!(bad.residual_offset, Some(1));
        assert!(bad.is_hard_failure());
        let rescued = bad.with_correction(CorrectionOutcome::from_residual("fix", &DifferenceOperator::zero()));
        assert!(!rescued.is_hard_failure());
        assert!(rescued.passes_with_correction());
    }

    #[test]
    fn json_round_trip_and_schema() {
        let r = VerificationReport::new("casimir", "Q2", &[rat(3, 2)])
            .constant("value", "-1")
            .with_correction(CorrectionOutcome::from_check("c", true, ""));
        let text = render(std::slice::from_ref(&r), Format::Json);
        let back: Vec<VerificationReport> = serde_json::from_str(&text).unwrap();
        assert_eq!(back, vec![r]);
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v[0]["status"], "pass");
        assert_eq!(v[0]["params"][0], "3/2");
        assert!(v[0].get("residual_offset").is_none());
    }

    #[test]
    fn csv_quotes_fields() {
        let r = VerificationReport::new("s", "a,b", &[]);
        let csv = render(&[r], Format::Csv);
        assert!(csv.lines().nth(1).unwrap().starts_with("s,\"a,b\",pass"));
    }
}
