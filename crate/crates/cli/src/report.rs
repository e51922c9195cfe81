//! The report envelope shared by every subcommand: inputs echoed back,
//! per-claim provenance tags, and deterministic text/JSON rendering.

use serde::Serialize;
use serde_json::Value;
use std::collections::BTreeMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Provenance {
    #[serde(rename = "computed")]
    Computed,
    #[serde(rename = "paper-expected")]
    PaperExpected,
    #[serde(rename = "assumption")]
    Assumption,
}

impl Provenance {
    fn label(self) -> &'static str {
        match self {
            Provenance::Computed => "computed",
            Provenance::PaperExpected => "paper-expected",
            Provenance::Assumption => "assumption",
        }
    }
}

/// One tagged numeric (or structured) claim of a report.
#[derive(Clone, Debug, Serialize)]
pub struct Claim {
    pub name: String,
    pub value: Value,
    pub provenance: Provenance,
}

/// A full report: reproducible given the echoed inputs and seed.
#[derive(Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub paper_section: Option<String>,
    pub inputs: BTreeMap<String, Value>,
    pub seed: u64,
    pub grid: usize,
    pub samples: Option<usize>,
    pub tolerance: Option<f64>,
    pub results: Vec<Claim>,
    pub payload: Value,
}

impl Report {
    pub fn new(command: &str, section: Option<&str>, seed: u64, grid: usize) -> Self {
        Self {
            command: command.to_string(),
            paper_section: section.map(str::to_string),
            inputs: BTreeMap::new(),
            seed,
            grid,
            samples: None,
            tolerance: None,
            results: Vec::new(),
            payload: Value::Null,
        }
    }

    pub fn input(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.inputs.insert(key.to_string(), value.into());
        self
    }

    pub fn claim(&mut self, name: &str, value: impl Into<Value>, provenance: Provenance) {
        self.results.push(Claim {
            name: name.to_string(),
            value: value.into(),
            provenance,
        });
    }

    pub fn set_payload<T: Serialize>(&mut self, payload: &T) {
        self.payload = serde_json::to_value(payload).expect("payload serializes");
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("command: {}\n", self.command));
        if let Some(section) = &self.paper_section {
            out.push_str(&format!("section: {section}\n"));
        }
        out.push_str(&format!("seed: {}\n", self.seed));
        out.push_str(&format!("grid: {}\n", self.grid));
        if let Some(samples) = self.samples {
            out.push_str(&format!("samples: {samples}\n"));
        }
        if let Some(tol) = self.tolerance {
            out.push_str(&format!("tolerance: {tol:e}\n"));
        }
        for (k, v) in &self.inputs {
            out.push_str(&format!("input {k} = {}\n", render_value(v)));
        }
        for claim in &self.results {
            out.push_str(&format!(
                "result {} = {} [{}]\n",
                claim.name,
                render_value(&claim.value),
                claim.provenance.label()
            ));
        }
        out
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            self.to_json()
        } else {
            self.to_text()
        }
    }
}

fn render_value(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
