use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;
use superquad::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_MATH: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Clone, Serialize)]
pub struct Verdict {
    pub check: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    /// The statement this verdict is an instance of.
    pub instantiates: String,
}

/// Result of running one subcommand on one file.
#[derive(Debug, Clone, Default, Serialize)]
pub struct Report {
    pub command: String,
    pub file: String,
    pub verdicts: Vec<Verdict>,
    pub data: BTreeMap<String, Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub exit_code: i32,
    /// Human-readable lines; not part of the JSON form.
    #[serde(skip)]
    pub lines: Vec<String>,
    #[serde(skip)]
    pub verbose_lines: Vec<String>,
}

pub fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::Parse(_)
        | Error::Input(_)
        | Error::DimensionMismatch(_)
        | Error::AmbientMismatch
        | Error::WrongDegree(_)
        | Error::NotHomogeneous(_)
        | Error::DegreeBudget(_) => EXIT_INPUT,
        _ => EXIT_MATH,
    }
}

impl Report {
    pub fn new(command: &str, file: &str) -> Self {
        Self {
            command: command.to_string(),
            file: file.to_string(),
            ..Self::default()
        }
    }

    pub fn verdict(&mut self, check: &str, passed: bool, detail: Option<String>, instantiates: &str) {
        self.verdicts.push(Verdict {
            check: check.to_string(),
            passed,
            detail,
            instantiates: instantiates.to_string(),
        });
    }

    pub fn put(&mut self, key: &str, value: impl Serialize) {
        let v = serde_json::to_value(value).expect("report values serialize");
        self.data.insert(key.to_string(), v);
    }

    pub fn line(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }

    pub fn detail_line(&mut self, s: impl Into<String>) {
        self.verbose_lines.push(s.into());
    }

    pub fn fail_with(mut self, e: &Error) -> Self {
        self.error = Some(e.to_string());
        self.exit_code = exit_code_for(e);
        self
    }

    pub fn finish(mut self) -> Self {
        if self.error.is_none() {
            self.exit_code = if self.verdicts.iter().all(|v| v.passed) {
                EXIT_OK
            } else {
                EXIT_MATH
            };
        }
        self
    }

    /// Canonical JSON: keys sorted, scalars as canonical strings.
    pub fn to_json_value(&self) -> Value {
        // serde_json maps are ordered by key, so going through Value sorts
        serde_json::to_value(self).expect("report serializes")
    }

    pub fn render_text(&self, verbose: bool) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "== {} [{}] ==", self.file, self.command);
        for l in &self.lines {
            let _ = writeln!(s, "{l}");
        }
        if verbose {
            for l in &self.verbose_lines {
                let _ = writeln!(s, "{l}");
            }
        }
        for v in &self.verdicts {
            let mark = if v.passed { "PASS" } else { "FAIL" };
            let _ = write!(s, "{mark}  {}", v.check);
            if let Some(d) = &v.detail {
                let _ = write!(s, ": {d}");
            }
            let _ = writeln!(s, "    [{}]", v.instantiates);
        }
        if let Some(e) = &self.error {
            let _ = writeln!(s, "error: {e}");
        }
        let _ = writeln!(s, "exit code {}", self.exit_code);
        s
    }
}
