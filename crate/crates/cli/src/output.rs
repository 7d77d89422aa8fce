use serde_json::Value;

/// A command result: JSON for machines, plain text for `--pretty`.
pub struct Output {
    pub json: Value,
    pub text: String,
    pub status: u8,
}

impl Output {
    pub fn new(json: Value, text: impl Into<String>) -> Self {
        Output { json, text: text.into(), status: 0 }
    }

    /// Exit status 1 when `failed`.
    pub fn failing_if(mut self, failed: bool) -> Self {
        if failed {
            self.status = 1;
        }
        self
    }

    pub fn render(&self, pretty: bool) -> String {
        if pretty {
            self.text.trim_end().to_string()
        } else {
            self.json.to_string()
        }
    }
}
