//! Machine-readable run reports.
//!
//! Every CLI run produces one [`Report`]: the command echo, the full
//! configuration, one record per check, and a wall-time field. JSON is the
//! canonical schema (version "1"); CSV flattens one check per row; text is a
//! human summary. Records are sorted by check name and then by rendered
//! inputs, so identical commands with identical seeds produce byte-identical
//! JSON up to the `elapsed_ms` field. Exact values are carried as integer or
//! `p/q` strings, never floats; the one interval-valued entry is tagged
//! explicitly.

use serde::Serialize;
use serde_json::Value;

/// Schema version of the JSON report.
pub const REPORT_SCHEMA: &str = "1";

#[derive(Clone, Debug, Serialize)]
pub struct RunConfig {
    pub seed: u64,
    pub format: String,
    pub cap_subsets: usize,
    pub cap_groebner_vars: usize,
    pub verbosity: u8,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            seed: 0,
            format: "text".into(),
            cap_subsets: crate::wronskian::DEFAULT_SUBSET_CAP,
            cap_groebner_vars: crate::groebner::GroebnerCaps::default().max_vars,
            verbosity: 0,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub inputs: Value,
    pub expected: Value,
    pub got: Value,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema: String,
    pub command: String,
    pub config: RunConfig,
    pub checks: Vec<CheckRecord>,
    pub elapsed_ms: u128,
}

impl Report {
    pub fn new(command: impl Into<String>, config: RunConfig) -> Self {
        Report {
            schema: REPORT_SCHEMA.into(),
            command: command.into(),
            config,
            checks: Vec::new(),
            elapsed_ms: 0,
        }
    }

    /// Adds a record; `pass` is exact equality of `expected` and `got`.
    pub fn push(&mut self, name: impl Into<String>, inputs: Value, expected: Value, got: Value) {
        let pass = expected == got;
        self.checks.push(CheckRecord {
            name: name.into(),
            inputs,
            expected,
            got,
            pass,
        });
    }

    /// Adds a record with an explicit verdict, for checks that are not plain
    /// equalities (e.g. witness presence with attached fields).
    pub fn push_verdict(
        &mut self,
        name: impl Into<String>,
        inputs: Value,
        expected: Value,
        got: Value,
        pass: bool,
    ) {
        self.checks.push(CheckRecord {
            name: name.into(),
            inputs,
            expected,
            got,
            pass,
        });
    }

    /// Canonical record order: by name, then by rendered inputs. Execution
    /// order never leaks into the report.
    pub fn finalize(&mut self, elapsed_ms: u128) {
        self.checks.sort_by(|a, b| {
            (a.name.as_str(), render(&a.inputs)).cmp(&(b.name.as_str(), render(&b.inputs)))
        });
        self.elapsed_ms = elapsed_ms;
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization is infallible")
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("name,inputs,expected,got,pass\n");
        for c in &self.checks {
            out.push_str(&csv_field(&c.name));
            out.push(',');
            out.push_str(&csv_field(&render(&c.inputs)));
            out.push(',');
            out.push_str(&csv_field(&render(&c.expected)));
            out.push(',');
            out.push_str(&csv_field(&render(&c.got)));
            out.push(',');
            out.push_str(if c.pass { "true" } else { "false" });
            out.push('\n');
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if self.config.verbosity >= 1 {
            out.push_str(&format!(
                "# {command}\n# seed={seed} cap_subsets={cs} cap_groebner_vars={cg}\n",
                command = self.command,
                seed = self.config.seed,
                cs = self.config.cap_subsets,
                cg = self.config.cap_groebner_vars,
            ));
        }
        for c in &self.checks {
            let status = if c.pass { "PASS" } else { "FAIL" };
            out.push_str(&format!(
                "{status} {name}  inputs={inputs}  expected={expected}  got={got}\n",
                name = c.name,
                inputs = render(&c.inputs),
                expected = render(&c.expected),
                got = render(&c.got),
            ));
        }
        let passed = self.checks.iter().filter(|c| c.pass).count();
        out.push_str(&format!(
            "{passed}/{total} checks passed ({command})\n",
            total = self.checks.len(),
            command = self.command,
        ));
        out
    }

    pub fn render(&self, format: &str) -> String {
        match format {
            "json" => self.to_json(),
            "csv" => self.to_csv(),
            _ => self.to_text(),
        }
    }
}

fn render(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => serde_json::to_string(other).expect("value serialization is infallible"),
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
