//! Output envelope and number formatting.

use serde_json::{json, Map, Value};

use crate::args::Format;

/// One invocation's output: `{"command", "inputs", "result", "diagnostics"}`.
pub struct Envelope {
    pub command: &'static str,
    pub inputs: Map<String, Value>,
    pub result: Value,
    /// Scalar shown on the first line in text mode.
    pub primary: Option<f64>,
    pub diagnostics: Map<String, Value>,
    /// Extra human-oriented lines for text mode.
    pub text_lines: Vec<String>,
}

impl Envelope {
    pub fn new(command: &'static str) -> Self {
        Envelope {
            command,
            inputs: Map::new(),
            result: Value::Null,
            primary: None,
            diagnostics: Map::new(),
            text_lines: Vec::new(),
        }
    }

    pub fn input(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.inputs.insert(key.to_owned(), value.into());
        self
    }

    pub fn diagnostic(&mut self, key: &str, value: impl Into<Value>) {
        self.diagnostics.insert(key.to_owned(), value.into());
    }

    pub fn scalar(mut self, value: f64) -> Self {
        self.result = json!(value);
        self.primary = Some(value);
        self
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let v = json!({
                    "command": self.command,
                    "inputs": self.inputs,
                    "result": self.result,
                    "diagnostics": self.diagnostics,
                });
                v.to_string()
            }
            Format::Text => {
                let mut out = String::new();
                if let Some(p) = self.primary {
                    out.push_str(&sig17(p));
                    out.push('\n');
                }
                for line in &self.text_lines {
                    out.push_str(line);
                    out.push('\n');
                }
                for (k, v) in &self.diagnostics {
                    out.push_str(&format!("{k}: {}\n", text_value(v)));
                }
                out.trim_end().to_owned()
            }
        }
    }
}

fn text_value(v: &Value) -> String {
    match v {
        Value::Number(n) if n.is_f64() => n.as_f64().map_or_else(|| n.to_string(), sig17),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Fixed notation with 17 significant digits; scientific outside
/// `1e-5 ..= 1e17`.
pub fn sig17(v: f64) -> String {
    if !v.is_finite() {
        return v.to_string();
    }
    if v == 0.0 {
        return format!("{v:.16}");
    }
    let sci = format!("{v:.16e}");
    let exponent: i32 = sci
        .rsplit('e')
        .next()
        .and_then(|e| e.parse().ok())
        .unwrap_or(0);
    if (-5..=16).contains(&exponent) {
        let decimals = (16 - exponent) as usize;
        format!("{v:.decimals$}")
    } else {
        sci
    }
}
