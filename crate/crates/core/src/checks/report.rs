//! Case-by-case reports for the identity suites.
//!
//! Every suite produces a [`CheckReport`]: a named list of [`CheckCase`]s,
//! each recording what was compared and how it came out, with both sides
//! rendered as strings. Reports sort their cases by id, so a fixed seed
//! yields byte-identical output across runs. Long sides are clipped for
//! display; pass/fail is always decided on the exact values before clipping.

use serde::Serialize;

/// Cap on the rendered length of one side of a comparison.
const SIDE_LIMIT: usize = 160;

fn clip(s: String) -> String {
    if s.chars().count() <= SIDE_LIMIT {
        return s;
    }
    let mut out: String = s.chars().take(SIDE_LIMIT - 3).collect();
    out.push_str("...");
    out
}

/// One verified identity instance.
#[derive(Clone, Debug, Serialize)]
pub struct CheckCase {
    /// Stable identifier, unique within a suite; reports sort by this.
    pub id: String,
    /// The sizes and sampled values the case ran with.
    pub inputs: String,
    /// Which identity supplies the expected value.
    pub source: String,
    pub pass: bool,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of one suite run.
#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub suite: String,
    pub cases: Vec<CheckCase>,
}

impl CheckReport {
    pub fn new(suite: &str) -> Self {
        CheckReport { suite: suite.to_string(), cases: Vec::new() }
    }

    /// Records one case with already-rendered sides.
    pub fn record(
        &mut self,
        id: String,
        inputs: String,
        source: &str,
        pass: bool,
        lhs: String,
        rhs: String,
    ) {
        self.cases.push(CheckCase {
            id,
            inputs,
            source: source.to_string(),
            pass,
            lhs: clip(lhs),
            rhs: clip(rhs),
        });
    }

    /// Records an exact equality of two displayable values.
    pub fn record_eq<T: PartialEq + std::fmt::Display>(
        &mut self,
        id: String,
        inputs: String,
        source: &str,
        lhs: &T,
        rhs: &T,
    ) {
        self.record(id, inputs, source, lhs == rhs, lhs.to_string(), rhs.to_string());
    }

    pub fn passed(&self) -> usize {
        self.cases.iter().filter(|c| c.pass).count()
    }

    pub fn failed(&self) -> usize {
        self.cases.len() - self.passed()
    }

    pub fn all_pass(&self) -> bool {
        self.failed() == 0
    }

    /// Sorts cases by id; call once after the last `record`.
    pub fn finish(mut self) -> Self {
        self.cases.sort_by(|x, y| x.id.cmp(&y.id));
        self
    }

    pub fn summary_line(&self) -> String {
        format!(
            "{}: {} cases, {} passed, {} failed",
            self.suite,
            self.cases.len(),
            self.passed(),
            self.failed()
        )
    }

    /// Plain-text rendering: the summary line, every failing case, and (with
    /// `verbose`) every passing case too.
    pub fn render_plain(&self, verbose: bool) -> String {
        let mut out = self.summary_line();
        out.push('\n');
        for case in &self.cases {
            if case.pass && !verbose {
                continue;
            }
            if case.pass {
                out.push_str(&format!("  [ ok ] {}  ({})\n", case.id, case.inputs));
            } else {
                out.push_str(&format!(
                    "  [FAIL] {}  ({})\n         source: {}\n         lhs: {}\n         rhs: {}\n",
                    case.id, case.inputs, case.source, case.lhs, case.rhs
                ));
            }
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "suite": self.suite,
            "cases": self.cases,
            "passed": self.passed(),
            "failed": self.failed(),
        })
    }
}
