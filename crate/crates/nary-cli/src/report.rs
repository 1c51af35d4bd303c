//! Deterministic check reports: stable ordering, canonical rational
//! formatting, byte-identical JSON across runs on the same input.

use std::collections::BTreeMap;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub id: String,
    pub anchor: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub witness: BTreeMap<String, String>,
}

impl Check {
    pub fn new(id: &str, anchor: &str, ok: bool) -> Check {
        Check {
            id: id.to_string(),
            anchor: anchor.to_string(),
            status: if ok { Status::Pass } else { Status::Fail },
            reason: None,
            witness: BTreeMap::new(),
        }
    }

    pub fn skip(id: &str, anchor: &str, reason: String) -> Check {
        Check {
            id: id.to_string(),
            anchor: anchor.to_string(),
            status: Status::Skip,
            reason: Some(reason),
            witness: BTreeMap::new(),
        }
    }

    pub fn with(mut self, key: &str, value: impl ToString) -> Check {
        self.witness.insert(key.to_string(), value.to_string());
        self
    }
}

#[derive(Serialize)]
pub struct InputEcho {
    pub path: String,
    pub sha256: String,
}

#[derive(Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skip: usize,
}

#[derive(Serialize)]
pub struct Report {
    pub command: String,
    pub input: InputEcho,
    pub checks: Vec<Check>,
    pub summary: Summary,
}

impl Report {
    pub fn new(command: String, path: String, digest: String, checks: Vec<Check>) -> Report {
        let pass = checks.iter().filter(|c| c.status == Status::Pass).count();
        let fail = checks.iter().filter(|c| c.status == Status::Fail).count();
        let skip = checks.iter().filter(|c| c.status == Status::Skip).count();
        Report {
            command,
            input: InputEcho {
                path,
                sha256: digest,
            },
            checks,
            summary: Summary { pass, fail, skip },
        }
    }

    pub fn failed(&self) -> bool {
        self.summary.fail > 0
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialization");
        s.push('\n');
        s
    }

    /// Line-oriented human summary.
    pub fn print(&self) {
        for c in &self.checks {
            let status = match c.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Skip => "skip",
            };
            let mut line = format!("[{status}] {} ({})", c.id, c.anchor);
            if let Some(r) = &c.reason {
                line.push_str(&format!(" -- {r}"));
            }
            if !c.witness.is_empty() {
                let w: Vec<String> = c.witness.iter().map(|(k, v)| format!("{k}={v}")).collect();
                line.push_str(&format!(" [{}]", w.join(", ")));
            }
            println!("{line}");
        }
        println!(
            "summary: {} pass, {} fail, {} skip",
            self.summary.pass, self.summary.fail, self.summary.skip
        );
    }
}
