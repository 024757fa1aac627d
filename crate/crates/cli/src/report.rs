//! Deterministic report rendering. Human-readable reports prefix all
//! metadata with `#`, so reports whose payload is an object body remain
//! valid format files; JSON reports carry a schema version and the input
//! digests.

use serde_json::{json, Value};

pub const SCHEMA_VERSION: u32 = 1;

pub struct Report {
    command: String,
    inputs: Vec<(String, String)>,
    lines: Vec<String>,
    json: Value,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            inputs: Vec::new(),
            lines: Vec::new(),
            json: Value::Null,
        }
    }

    pub fn add_input(&mut self, path: &str, sha256: &str) {
        self.inputs.push((path.to_string(), sha256.to_string()));
    }

    pub fn line(&mut self, l: impl Into<String>) {
        self.lines.push(l.into());
    }

    pub fn kv(&mut self, key: &str, value: impl std::fmt::Display) {
        self.lines.push(format!("{key}: {value}"));
    }

    pub fn comment(&mut self, text: impl AsRef<str>) {
        self.lines.push(format!("# {}", text.as_ref()));
    }

    /// Appends a pre-rendered format body verbatim.
    pub fn body(&mut self, text: impl AsRef<str>) {
        for l in text.as_ref().lines() {
            self.lines.push(l.to_string());
        }
    }

    pub fn set_json(&mut self, result: Value) {
        self.json = result;
    }

    pub fn render(&self, as_json: bool) -> String {
        if as_json {
            let inputs: Vec<Value> = self
                .inputs
                .iter()
                .map(|(p, d)| json!({ "path": p, "sha256": d }))
                .collect();
            let doc = json!({
                "schema": SCHEMA_VERSION,
                "command": self.command,
                "inputs": inputs,
                "result": self.json,
            });
            let mut out = serde_json::to_string_pretty(&doc).expect("report serializes");
            out.push('\n');
            return out;
        }
        let mut out = format!("# thinq {} (schema {})\n", self.command, SCHEMA_VERSION);
        for (p, d) in &self.inputs {
            out.push_str(&format!("# input {p} sha256 {d}\n"));
        }
        for l in &self.lines {
            out.push_str(l);
            out.push('\n');
        }
        out
    }
}
