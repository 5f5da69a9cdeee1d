use monideal::{IrreducibleComponent, Monomial, MonomialIdeal, PrimeSupport, RingContext};
use serde_json::{json, Map, Value};

use crate::Format;

/// Output of one command: text lines plus the JSON document.
#[derive(Debug, Clone)]
pub struct Report {
    lines: Vec<String>,
    json: Map<String, Value>,
    verified: Option<bool>,
}

impl Report {
    pub fn new(ring: &RingContext, name: &str, ideal: &MonomialIdeal) -> Self {
        let mut json = Map::new();
        json.insert("ring".into(), json!(ring.names()));
        json.insert(
            "ideal".into(),
            json!({
                "name": name,
                "generators": ideal.generators().iter().map(|g| monomial_json(ring, g)).collect::<Vec<_>>(),
                "text": ideal.generators_text(),
            }),
        );
        for key in ["components", "associated_primes", "witness", "verified"] {
            json.insert(key.into(), Value::Null);
        }
        Self { lines: Vec::new(), json, verified: None }
    }

    pub fn line(&mut self, text: impl Into<String>) {
        self.lines.push(text.into());
    }

    pub fn set(&mut self, key: &str, value: Value) {
        self.json.insert(key.into(), value);
    }

    /// Records a verdict; a single failure makes the whole report fail.
    pub fn verdict(&mut self, ok: bool) {
        let v = self.verified.unwrap_or(true) && ok;
        self.verified = Some(v);
        self.json.insert("verified".into(), Value::Bool(v));
    }

    pub fn verified(&self) -> Option<bool> {
        self.verified
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.lines.iter().map(|l| format!("{l}\n")).collect(),
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&Value::Object(self.json.clone())).expect("plain JSON values");
                s.push('\n');
                s
            }
        }
    }
}

pub fn monomial_json(ring: &RingContext, m: &Monomial) -> Value {
    let map: Map<String, Value> = m
        .exponents()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| (ring.name(i).to_string(), json!(e)))
        .collect();
    Value::Object(map)
}

pub fn prime_json(p: &PrimeSupport) -> Value {
    json!(p.names())
}

pub fn component_json(ring: &RingContext, q: &IrreducibleComponent) -> Value {
    let exps: Map<String, Value> = q.powers().iter().map(|&(v, a)| (ring.name(v).to_string(), json!(a))).collect();
    json!({ "support": q.prime().names(), "exponents": exps })
}

/// Witness monomial with space-separated factors, `1` for the unit.
pub fn spaced(ring: &RingContext, m: &Monomial) -> String {
    ring.format_monomial_with(m, " ")
}
