//! Plain-text run reports: a command echo, an input digest, free-form
//! result sections, and a machine-readable key/value block. Rendering is
//! deterministic, so identical inputs produce byte-identical reports.

use sha2::{Digest, Sha256};

#[derive(Debug, Clone, Default)]
pub struct Report {
    command: String,
    input_digest: Option<String>,
    sections: Vec<(String, Vec<String>)>,
    values: Vec<(String, String)>,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Report {
        Report {
            command: command.into(),
            ..Report::default()
        }
    }

    /// Records the SHA-256 of the canonical input bytes.
    pub fn set_input(&mut self, bytes: &[u8]) {
        let mut hasher = Sha256::new();
        hasher.update(bytes);
        self.input_digest = Some(hex::encode(hasher.finalize()));
    }

    pub fn section(&mut self, title: impl Into<String>) -> &mut Vec<String> {
        self.sections.push((title.into(), Vec::new()));
        &mut self.sections.last_mut().expect("just pushed").1
    }

    pub fn push_value(&mut self, key: impl Into<String>, value: impl ToString) {
        self.values.push((key.into(), value.to_string()));
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("command = {}\n", self.command));
        if let Some(digest) = &self.input_digest {
            out.push_str(&format!("input_digest = sha256:{digest}\n"));
        }
        for (title, lines) in &self.sections {
            out.push_str(&format!("\n[{title}]\n"));
            for line in lines {
                out.push_str(line);
                out.push('\n');
            }
        }
        if !self.values.is_empty() {
            out.push_str("\n[values]\n");
            for (k, v) in &self.values {
                out.push_str(&format!("{k} = {v}\n"));
            }
        }
        out
    }
}
