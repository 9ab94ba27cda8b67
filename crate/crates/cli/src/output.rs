use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::args::Format;

/// How the process should exit once the report is printed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Status {
    Ok,
    VerificationFailed,
    Inexact,
}

impl Status {
    pub fn code(self) -> u8 {
        match self {
            Status::Ok => 0,
            Status::VerificationFailed => 1,
            Status::Inexact => 3,
        }
    }
}

/// A rendered report in every format the command supports.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Output {
    pub json: Value,
    pub text: String,
    pub csv: Option<String>,
    pub status: Status,
}

impl Output {
    pub fn new(json: Value, text: String) -> Self {
        Output {
            json,
            text,
            csv: None,
            status: Status::Ok,
        }
    }

    pub fn with_csv(mut self, csv: String) -> Self {
        self.csv = Some(csv);
        self
    }

    pub fn with_status(mut self, status: Status) -> Self {
        self.status = status;
        self
    }

    /// The report in `format`; `None` when the command has no such form.
    pub fn render(&self, format: Format) -> Option<String> {
        let mut s = match format {
            // serde_json maps keep keys sorted, so equal values print equal bytes
            Format::Json => serde_json::to_string(&self.json).expect("JSON values always serialize"),
            Format::Text => self.text.clone(),
            Format::Csv => self.csv.clone()?,
        };
        if !s.ends_with('\n') {
            s.push('\n');
        }
        Some(s)
    }
}

/// Serializes to a `Value` with sorted keys.
pub fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

pub fn join<T: ToString>(items: impl IntoIterator<Item = T>, sep: &str) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}
