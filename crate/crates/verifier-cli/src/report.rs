use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

/// Result of running one scenario.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScenarioReport {
    pub id: String,
    pub status: Status,
    pub computed: String,
    pub expected: String,
    /// Wall time in milliseconds.
    pub ms: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    /// Scenarios that failed or raised an error.
    pub fail: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub scenarios: Vec<ScenarioReport>,
    pub summary: Summary,
}

impl SuiteReport {
    /// Sorts by id and recomputes the summary.
    pub fn from_reports(mut scenarios: Vec<ScenarioReport>) -> Self {
        scenarios.sort_by(|a, b| a.id.cmp(&b.id));
        let pass = scenarios.iter().filter(|s| s.status == Status::Pass).count();
        let summary = Summary { pass, fail: scenarios.len() - pass };
        SuiteReport { scenarios, summary }
    }

    /// `0` when every scenario passed and `1` otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.summary.fail == 0 {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for s in &self.scenarios {
            let tag = match s.status {
                Status::Pass => "PASS ",
                Status::Fail => "FAIL ",
                Status::Error => "ERROR",
            };
            out.push_str(&format!("{tag} {} ({} ms)\n", s.id, s.ms));
            if s.status != Status::Pass {
                out.push_str(&format!("      computed: {}\n      expected: {}\n", s.computed, s.expected));
            }
        }
        out.push_str(&format!("{} passed, {} failed\n", self.summary.pass, self.summary.fail));
        out
    }
}
