//! Report assembly and canonical serialization.
//!
//! The machine format is pretty-printed JSON with keys sorted at every level,
//! integers only, and a trailing newline.

use serde_json::{json, Map, Value};

pub const SCHEMA_VERSION: u64 = 1;
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, PartialEq)]
pub struct Claim {
    pub quote: String,
    pub reproduced: bool,
    pub note: String,
}

/// An expected verdict embedded in a scenario.
#[derive(Clone, Debug, PartialEq)]
pub struct Expectation {
    pub verdict: String,
    pub expected: Value,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub scenario: String,
    pub params: Value,
    pub verdicts: Map<String, Value>,
    pub artifacts: Map<String, Value>,
    pub claims: Vec<Claim>,
    pub expectations: Vec<Expectation>,
}

impl Report {
    pub fn new(scenario: &str, params: Value) -> Self {
        Report {
            scenario: scenario.to_string(),
            params,
            verdicts: Map::new(),
            artifacts: Map::new(),
            claims: Vec::new(),
            expectations: Vec::new(),
        }
    }

    pub fn verdict(&mut self, key: &str, v: impl Into<Value>) {
        self.verdicts.insert(key.to_string(), v.into());
    }

    pub fn artifact(&mut self, key: &str, v: impl Into<Value>) {
        self.artifacts.insert(key.to_string(), v.into());
    }

    pub fn claim(&mut self, quote: &str, reproduced: bool, note: &str) {
        self.claims.push(Claim {
            quote: quote.to_string(),
            reproduced,
            note: note.to_string(),
        });
    }

    pub fn expect(&mut self, verdict: &str, expected: impl Into<Value>) {
        self.expectations.push(Expectation {
            verdict: verdict.to_string(),
            expected: expected.into(),
        });
    }

    fn actual(&self, e: &Expectation) -> Value {
        self.verdicts.get(&e.verdict).cloned().unwrap_or(Value::Null)
    }

    /// Verdicts that differ from their embedded expectation.
    pub fn mismatches(&self) -> Vec<String> {
        self.expectations
            .iter()
            .filter(|e| self.actual(e) != e.expected)
            .map(|e| e.verdict.clone())
            .collect()
    }

    pub fn to_json(&self) -> Value {
        let claims: Vec<Value> = self
            .claims
            .iter()
            .map(|c| json!({"quote": c.quote, "reproduced": c.reproduced, "note": c.note}))
            .collect();
        let expectations: Vec<Value> = self
            .expectations
            .iter()
            .map(|e| {
                let actual = self.actual(e);
                json!({"verdict": e.verdict, "expected": e.expected, "actual": actual, "matched": actual == e.expected})
            })
            .collect();
        canonicalize(json!({
            "schema_version": SCHEMA_VERSION,
            "tool_version": TOOL_VERSION,
            "scenario": {"name": self.scenario, "params": self.params},
            "verdicts": self.verdicts,
            "artifacts": self.artifacts,
            "claims": claims,
            "expectations": expectations,
        }))
    }

    pub fn canonical_bytes(&self) -> Vec<u8> {
        let mut s = serde_json::to_string_pretty(&self.to_json()).expect("serializable");
        s.push('\n');
        s.into_bytes()
    }

    /// Human-readable summary: verdicts, claims and expectations.
    pub fn render_table(&self) -> String {
        render_table(&self.to_json())
    }
}

/// Renders the table view of a canonical report.
pub fn render_table(v: &Value) -> String {
    let mut out = format!(
        "scenario  {}\nparams    {}\n",
        v["scenario"]["name"].as_str().unwrap_or(""),
        compact(&v["scenario"]["params"])
    );
    out.push_str("verdicts\n");
    if let Some(vs) = v["verdicts"].as_object() {
        let width = vs.keys().map(String::len).max().unwrap_or(0);
        for (k, x) in vs {
            out.push_str(&format!("  {k:width$}  {}\n", compact(x)));
        }
    }
    if let Some(cs) = v["claims"].as_array().filter(|c| !c.is_empty()) {
        out.push_str("claims\n");
        for c in cs {
            let mark = if c["reproduced"] == Value::Bool(true) { "reproduced" } else { "NOT reproduced" };
            out.push_str(&format!("  \"{}\"  {mark}  {}\n", c["quote"].as_str().unwrap_or(""), c["note"].as_str().unwrap_or("")));
        }
    }
    if let Some(es) = v["expectations"].as_array().filter(|e| !e.is_empty()) {
        out.push_str("expectations\n");
        for e in es {
            let mark = if e["matched"] == Value::Bool(true) { "ok" } else { "MISMATCH" };
            out.push_str(&format!(
                "  {}  expected {}  got {}  {mark}\n",
                e["verdict"].as_str().unwrap_or(""),
                compact(&e["expected"]),
                compact(&e["actual"])
            ));
        }
    }
    out
}

fn compact(v: &Value) -> String {
    serde_json::to_string(v).expect("serializable")
}

/// Rebuilds every object with sorted keys, whatever map order serde_json was
/// built with.
pub fn canonicalize(v: Value) -> Value {
    match v {
        Value::Object(m) => {
            let mut entries: Vec<(String, Value)> = m.into_iter().collect();
            entries.sort_by(|a, b| a.0.cmp(&b.0));
            Value::Object(entries.into_iter().map(|(k, v)| (k, canonicalize(v))).collect())
        }
        Value::Array(a) => Value::Array(a.into_iter().map(canonicalize).collect()),
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn keys_are_sorted_and_bytes_stable() {
        let mut r = Report::new("x", json!({"b": 1, "a": 2}));
        r.verdict("zeta", true);
        r.verdict("alpha", json!([1, 2]));
        let s = String::from_utf8(r.canonical_bytes()).unwrap();
        assert!(s.find("\"alpha\"").unwrap() < s.find("\"zeta\"").unwrap());
        assert!(s.find("\"a\"").unwrap() < s.find("\"b\"").unwrap());
        assert_eq!(r.canonical_bytes(), r.clone().canonical_bytes());
        assert!(s.ends_with("}\n"));
    }

    #[test]
    fn mismatches_are_listed() {
        let mut r = Report::new("x", json!({}));
        r.verdict("membership", false);
        r.expect("membership", false);
        assert!(r.mismatches().is_empty());
        r.expect("missing", true);
        assert_eq!(r.mismatches(), vec!["missing".to_string()]);
    }
}
