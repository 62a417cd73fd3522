//! Output documents: `{command, inputs, results}` rendered either as aligned
//! text or as JSON with sorted keys.

use kneading::{AbelianGroup, IntMatrix};
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Machine,
}

pub struct OutputDocument {
    pub command: &'static str,
    pub inputs: Map<String, Value>,
    pub results: Map<String, Value>,
    /// Human rendering of the results.
    pub text: String,
}

impl OutputDocument {
    pub fn new(command: &'static str) -> Self {
        OutputDocument {
            command,
            inputs: Map::new(),
            results: Map::new(),
            text: String::new(),
        }
    }

    pub fn input(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.inputs.insert(key.to_string(), value.into());
        self
    }

    pub fn result(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.results.insert(key.to_string(), value.into());
        self
    }

    pub fn line(&mut self, line: impl AsRef<str>) -> &mut Self {
        self.text.push_str(line.as_ref());
        self.text.push('\n');
        self
    }

    pub fn to_value(&self) -> Value {
        json!({
            "command": self.command,
            "inputs": Value::Object(self.inputs.clone()),
            "results": Value::Object(self.results.clone()),
        })
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text.clone(),
            Format::Machine => render_machine(&self.to_value()),
        }
    }
}

pub fn render_machine(value: &Value) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("documents are plain JSON");
    out.push('\n');
    out
}

fn integer(x: &num_bigint::BigInt) -> Value {
    match x.to_i64() {
        Some(v) => Value::from(v),
        None => Value::from(x.to_string()),
    }
}

pub fn matrix_value(m: &IntMatrix) -> Value {
    let entries: Vec<Value> = (0..m.rows())
        .map(|i| Value::Array(m.row(i).iter().map(integer).collect()))
        .collect();
    json!({ "rows": m.rows(), "cols": m.cols(), "entries": entries })
}

pub fn group_value(g: &AbelianGroup) -> Value {
    let torsion: Vec<Value> = g.torsion.iter().map(integer).collect();
    json!({ "free_rank": g.free_rank, "torsion": torsion })
}

/// `x` with `digits` significant digits; scientific notation outside
/// `[1e-5, 10^digits)`.
pub fn format_real(x: f64, digits: usize) -> String {
    let digits = digits.max(1);
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let exponent = x.abs().log10().floor() as i64;
    if (-5..digits as i64).contains(&exponent) {
        let decimals = (digits as i64 - 1 - exponent).max(0) as usize;
        format!("{x:.decimals$}")
    } else {
        format!("{x:.prec$e}", prec = digits - 1)
    }
}
