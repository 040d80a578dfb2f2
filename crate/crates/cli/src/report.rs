//! Deterministic verdict reports: one line per check, named outputs, a
//! final tally. Two runs on the same input produce byte-identical text.

use serde::Serialize;

#[derive(Debug, Serialize)]
pub struct Check {
    pub law: String,
    pub anchor: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Debug, Serialize)]
pub struct Output {
    pub name: String,
    pub value: String,
}

#[derive(Debug, Serialize)]
pub struct Verdict {
    pub command: String,
    pub passed: bool,
    pub checks: Vec<Check>,
    pub outputs: Vec<Output>,
}

pub struct ReportBuilder {
    command: String,
    checks: Vec<Check>,
    outputs: Vec<Output>,
    stop_on_failure: bool,
    stopped: bool,
}

impl ReportBuilder {
    pub fn new(command: &str, stop_on_failure: bool) -> Self {
        Self {
            command: command.to_string(),
            checks: Vec::new(),
            outputs: Vec::new(),
            stop_on_failure,
            stopped: false,
        }
    }

    pub fn check(&mut self, law: &str, anchor: &str, passed: bool) -> bool {
        self.check_with_witness(law, anchor, passed, None)
    }

    /// Records one check line; returns `passed` so callers can gate
    /// follow-up checks on prerequisites.
    pub fn check_with_witness(
        &mut self,
        law: &str,
        anchor: &str,
        passed: bool,
        witness: Option<String>,
    ) -> bool {
        if self.stopped {
            return passed;
        }
        self.checks.push(Check {
            law: law.to_string(),
            anchor: anchor.to_string(),
            passed,
            witness,
        });
        if !passed && self.stop_on_failure {
            self.stopped = true;
        }
        passed
    }

    pub fn output(&mut self, name: &str, value: impl std::fmt::Display) {
        if self.stopped {
            return;
        }
        self.outputs.push(Output {
            name: name.to_string(),
            value: value.to_string(),
        });
    }

    pub fn finish(self) -> Verdict {
        let passed = self.checks.iter().all(|c| c.passed);
        Verdict {
            command: self.command,
            passed,
            checks: self.checks,
            outputs: self.outputs,
        }
    }
}

pub fn render_text(verdict: &Verdict) -> String {
    let mut out = String::new();
    out.push_str(&format!("command: {}\n", verdict.command));
    for check in &verdict.checks {
        out.push_str(&format!(
            "check: {} [{}] {}\n",
            check.law,
            check.anchor,
            if check.passed { "pass" } else { "FAIL" }
        ));
        if let Some(witness) = &check.witness {
            out.push_str(&format!("  witness: {witness}\n"));
        }
    }
    for output in &verdict.outputs {
        out.push_str(&format!("output: {} = {}\n", output.name, output.value));
    }
    let passed = verdict.checks.iter().filter(|c| c.passed).count();
    out.push_str(&format!(
        "verdict: {} ({}/{} checks)\n",
        if verdict.passed { "PASS" } else { "FAIL" },
        passed,
        verdict.checks.len()
    ));
    out
}

pub fn render_json(verdict: &Verdict) -> String {
    let mut s = serde_json::to_string_pretty(verdict).expect("verdicts serialize");
    s.push('\n');
    s
}
