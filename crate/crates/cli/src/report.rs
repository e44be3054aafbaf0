//! Run reports and their text and JSON renderings.

use std::collections::BTreeMap;

use qrr_core::series::{big_to_json, EqualityReport, LaurentSeries};
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RunStatus {
    Pass,
    Fail,
    Error,
}

impl RunStatus {
    pub fn exit_code(self) -> i32 {
        match self {
            RunStatus::Pass => 0,
            RunStatus::Fail => 1,
            RunStatus::Error => 2,
        }
    }

    pub fn from_pass(pass: bool) -> Self {
        if pass {
            RunStatus::Pass
        } else {
            RunStatus::Fail
        }
    }
}

/// The stable part of a run: everything except timing.
#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub parameters: BTreeMap<String, String>,
    pub status: RunStatus,
    pub details: Vec<Value>,
}

impl RunReport {
    pub fn new(command: &str) -> Self {
        RunReport {
            command: command.to_string(),
            parameters: BTreeMap::new(),
            status: RunStatus::Pass,
            details: Vec::new(),
        }
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.parameters.insert(key.to_string(), value.to_string());
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

/// Dense rendering: the coefficient list starting at `min_exp`, plus the order.
pub fn series_json(s: &LaurentSeries) -> Value {
    let coeffs: Vec<Value> = s.coeffs().iter().map(|c| Value::Number(big_to_json(c))).collect();
    json!({ "min_exp": s.min_exp(), "order": s.order(), "coeffs": coeffs })
}

/// One line describing a comparison, with the offending coefficients on a mismatch.
pub fn report_line(r: &EqualityReport) -> String {
    let (lo, hi) = r.window;
    match (r.first_bad_exp, &r.lhs_coeff, &r.rhs_coeff) {
        (Some(e), Some(a), Some(b)) => {
            format!("mismatch on [{lo}, {hi}): first_bad_exp {e}, lhs coefficient {a}, rhs coefficient {b}")
        }
        _ => format!("equal on [{lo}, {hi})"),
    }
}
