//! Command reports: human-readable text or a deterministic JSON object.

use serde::Serialize;
use serde_json::Value;

use crate::error::CliError;

/// One computed fact. `basis` names the result the fact instantiates, so
/// that every reported value can be traced to the statement it checks.
#[derive(Debug, Clone, Serialize)]
pub struct Fact {
    pub name: String,
    pub value: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub basis: Option<&'static str>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ErrorEntry {
    pub kind: &'static str,
    pub message: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub ok: bool,
    pub facts: Vec<Fact>,
    pub notes: Vec<String>,
    pub outputs: Vec<String>,
    pub errors: Vec<ErrorEntry>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            ok: true,
            facts: Vec::new(),
            notes: Vec::new(),
            outputs: Vec::new(),
            errors: Vec::new(),
        }
    }

    pub fn fact(&mut self, name: &str, value: impl Serialize) -> &mut Self {
        self.push(name, value, None)
    }

    pub fn fact_with_basis(
        &mut self,
        name: &str,
        value: impl Serialize,
        basis: &'static str,
    ) -> &mut Self {
        self.push(name, value, Some(basis))
    }

    fn push(
        &mut self,
        name: &str,
        value: impl Serialize,
        basis: Option<&'static str>,
    ) -> &mut Self {
        self.facts.push(Fact {
            name: name.to_string(),
            value: serde_json::to_value(value).expect("report values serialize"),
            basis,
        });
        self
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn output(&mut self, path: impl Into<String>) {
        self.outputs.push(path.into());
    }

    pub fn fail(&mut self, error: &CliError) {
        self.ok = false;
        self.errors.push(ErrorEntry {
            kind: error.category(),
            message: error.to_string(),
        });
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("reports serialize");
        text.push('\n');
        text
    }

    /// Facts and notes for standard output; errors go to standard error.
    pub fn to_text(&self) -> (String, String) {
        let mut out = String::new();
        for f in &self.facts {
            let value = match &f.value {
                Value::String(s) => s.clone(),
                v => v.to_string(),
            };
            out.push_str(&format!("{}: {value}\n", f.name));
        }
        for n in &self.notes {
            out.push_str(&format!("note: {n}\n"));
        }
        for o in &self.outputs {
            out.push_str(&format!("wrote {o}\n"));
        }
        let err = self
            .errors
            .iter()
            .map(|e| format!("error ({}): {}\n", e.kind, e.message))
            .collect();
        (out, err)
    }
}
