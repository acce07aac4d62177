//! The JSON report shared by every subcommand.

use std::path::Path;

use anyhow::Context;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use dextral_core::verify::{CheckRecord, Status};

/// One entry of a report. `id` is a criterion number for `verify` and a
/// dotted key such as `identity.commutative` elsewhere.
#[derive(Clone, Debug)]
pub struct Record {
    pub id: Value,
    pub module: String,
    pub source: String,
    pub status: Status,
    pub details: Vec<String>,
    pub result: Option<Value>,
}

impl Record {
    pub fn new(id: &str, module: &str, source: &str, status: Status) -> Self {
        Record {
            id: json!(id),
            module: module.to_string(),
            source: source.to_string(),
            status,
            details: Vec::new(),
            result: None,
        }
    }

    pub fn detail(mut self, d: impl Into<String>) -> Self {
        self.details.push(d.into());
        self
    }

    pub fn result(mut self, v: Value) -> Self {
        self.result = Some(v);
        self
    }

    fn to_json(&self) -> Value {
        let mut v = json!({
            "id": self.id,
            "module": self.module,
            "source": self.source,
            "status": self.status.as_str(),
            "details": self.details,
        });
        if let Some(r) = &self.result {
            v["result"] = r.clone();
        }
        v
    }
}

impl From<CheckRecord> for Record {
    fn from(r: CheckRecord) -> Self {
        let mut details = vec![r.title.to_string()];
        details.extend(r.details);
        Record {
            id: json!(r.id),
            module: r.module.to_string(),
            source: r.source.to_string(),
            status: r.status,
            details,
            result: None,
        }
    }
}

pub struct Report {
    pub command: &'static str,
    pub subject: Value,
    pub input_digest: String,
    pub records: Vec<Record>,
}

impl Report {
    pub fn count(&self, s: Status) -> usize {
        self.records.iter().filter(|r| r.status == s).count()
    }

    pub fn failed(&self) -> bool {
        self.count(Status::Fail) > 0
    }

    pub fn to_json(&self) -> Value {
        json!({
            "tool": "dextral",
            "version": env!("CARGO_PKG_VERSION"),
            "command": self.command,
            "subject": self.subject,
            "input_digest": self.input_digest,
            "checks": self.records.iter().map(Record::to_json).collect::<Vec<_>>(),
            "summary": {
                "pass": self.count(Status::Pass),
                "fail": self.count(Status::Fail),
                "unknown": self.count(Status::Unknown),
            },
        })
    }

    pub fn write(&self, path: &Path) -> anyhow::Result<()> {
        let mut text = serde_json::to_string_pretty(&self.to_json()).expect("serializable");
        text.push('\n');
        std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    format!("sha256:{}", hex::encode(Sha256::digest(bytes)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digest_of_empty_input() {
        assert_eq!(
            sha256_hex(b""),
            "sha256:e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855"
        );
    }

    #[test]
    fn result_is_omitted_when_absent() {
        let r = Record::new("x", "m", "s", Status::Pass).to_json();
        assert!(r.get("result").is_none());
        let r = Record::new("x", "m", "s", Status::Pass).result(json!(1)).to_json();
        assert_eq!(r["result"], 1);
    }
}
