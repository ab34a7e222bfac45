//! Verification rows and their JSON/CSV renderings.

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    BoundHolds,
    BudgetExceeded,
}

impl Status {
    pub fn is_ok(self) -> bool {
        matches!(self, Status::Pass | Status::BoundHolds)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::BoundHolds => "bound-holds",
            Status::BudgetExceeded => "budget-exceeded",
        }
    }
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReportRow {
    pub theorem: String,
    pub instance: String,
    pub formula: Option<String>,
    pub solver: Option<String>,
    pub witness: Option<serde_json::Value>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<f64>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
#[serde(transparent)]
pub struct VerificationReport {
    pub rows: Vec<ReportRow>,
}

/// Exit code for a report containing a failed row.
pub const EXIT_FAIL: i32 = 1;
/// Exit code for a report whose only problems are exhausted budgets.
pub const EXIT_BUDGET: i32 = 3;

impl VerificationReport {
    pub fn all_ok(&self) -> bool {
        self.rows.iter().all(|r| r.status.is_ok())
    }

    pub fn count(&self, status: Status) -> usize {
        self.rows.iter().filter(|r| r.status == status).count()
    }

    /// 0 when every row passes or holds, [`EXIT_FAIL`] on any failure,
    /// otherwise [`EXIT_BUDGET`].
    pub fn exit_code(&self) -> i32 {
        if self.count(Status::Fail) > 0 {
            EXIT_FAIL
        } else if self.count(Status::BudgetExceeded) > 0 {
            EXIT_BUDGET
        } else {
            0
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report rows serialize")
    }

    /// One line per row; witnesses are written as compact JSON.
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let timed = self.rows.iter().any(|r| r.wall_time_ms.is_some());
        let mut header = vec![
            "theorem", "instance", "formula", "solver", "witness", "status",
        ];
        if timed {
            header.push("wall_time_ms");
        }
        let io = |e: csv::Error| Error::Internal(e.to_string());
        w.write_record(&header).map_err(io)?;
        for r in &self.rows {
            let mut rec = vec![
                r.theorem.clone(),
                r.instance.clone(),
                r.formula.clone().unwrap_or_default(),
                r.solver.clone().unwrap_or_default(),
                r.witness
                    .as_ref()
                    .map(|v| v.to_string())
                    .unwrap_or_default(),
                r.status.to_string(),
            ];
            if timed {
                rec.push(
                    r.wall_time_ms
                        .map(|t| format!("{t:.3}"))
                        .unwrap_or_default(),
                );
            }
            w.write_record(&rec).map_err(io)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Internal(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| Error::Internal(e.to_string()))
    }
}
