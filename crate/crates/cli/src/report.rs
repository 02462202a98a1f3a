//! Output for every command.
//!
//! Text mode prints `key: value` lines and one `PASS`/`FAIL`/`INFO` line per
//! check. Records mode prints one record per line in the form
//! `{"key": "...", "value": "..."}` or
//! `{"check": "...", "status": "PASS", "detail": "..."}`, with strings
//! escaped as JSON strings.

use std::fmt::Write as _;

use clap::ValueEnum;
use pushlab::suites::{all_pass, Check};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Records,
}

#[derive(Debug, Default)]
pub struct Report {
    pub fields: Vec<(String, String)>,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn field(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.fields.push((key.to_string(), value.to_string()));
        self
    }

    pub fn passed(&self) -> bool {
        all_pass(&self.checks)
    }

    pub fn render(&self, format: Format) -> String {
        let mut out = String::new();
        match format {
            Format::Text => {
                for (k, v) in &self.fields {
                    let _ = writeln!(out, "{k}: {v}");
                }
                for c in &self.checks {
                    let _ = writeln!(out, "{} {}: {}", status(c), c.name, c.detail);
                }
                if !self.checks.is_empty() {
                    let _ = writeln!(out, "result: {}", if self.passed() { "PASS" } else { "FAIL" });
                }
            }
            Format::Records => {
                for (k, v) in &self.fields {
                    let _ = writeln!(out, "{{\"key\": {}, \"value\": {}}}", quote(k), quote(v));
                }
                for c in &self.checks {
                    let _ = writeln!(
                        out,
                        "{{\"check\": {}, \"status\": \"{}\", \"detail\": {}}}",
                        quote(&c.name),
                        status(c),
                        quote(&c.detail)
                    );
                }
            }
        }
        out
    }
}

fn status(c: &Check) -> &'static str {
    match (c.gating, c.pass) {
        (false, _) => "INFO",
        (true, true) => "PASS",
        (true, false) => "FAIL",
    }
}

/// JSON string literal.
pub fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for ch in s.chars() {
        match ch {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => {
                let _ = write!(out, "\\u{:04x}", c as u32);
            }
            c => out.push(c),
        }
    }
    out.push('"');
    out
}
