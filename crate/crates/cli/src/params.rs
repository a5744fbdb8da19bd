//! Scenario parameters: typed specs, parsing from `--key value` pairs and
//! canonical JSON encoding.

use std::collections::BTreeMap;

use serde_json::{json, Value};

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParamKind {
    Int { min: i64, max: i64 },
    Prime,
    IntList { min: i64, max: i64 },
    /// `lo,hi` with `lo <= hi`.
    Window { min: i64, max: i64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParamValue {
    Int(i64),
    List(Vec<i64>),
    Window(i64, i64),
}

impl ParamValue {
    pub fn to_json(&self) -> Value {
        match self {
            ParamValue::Int(v) => json!(v),
            ParamValue::List(v) => json!(v),
            ParamValue::Window(lo, hi) => json!([lo, hi]),
        }
    }

    fn render(&self) -> String {
        match self {
            ParamValue::Int(v) => v.to_string(),
            ParamValue::List(v) => v.iter().map(i64::to_string).collect::<Vec<_>>().join(","),
            ParamValue::Window(lo, hi) => format!("{lo},{hi}"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ParamSpec {
    pub key: &'static str,
    pub kind: ParamKind,
    pub default: &'static str,
    pub help: &'static str,
}

impl ParamSpec {
    pub fn parse(&self, raw: &str) -> Result<ParamValue, CliError> {
        let bad = |why: String| CliError::Validation(format!("--{} {raw}: {why}", self.key));
        let int = |s: &str| s.trim().parse::<i64>().map_err(|e| bad(e.to_string()));
        let in_range = |v: i64, min: i64, max: i64| {
            if v < min || v > max {
                Err(bad(format!("must lie in [{min}, {max}]")))
            } else {
                Ok(v)
            }
        };
        match self.kind {
            ParamKind::Int { min, max } => Ok(ParamValue::Int(in_range(int(raw)?, min, max)?)),
            ParamKind::Prime => {
                let p = in_range(int(raw)?, 2, 251)?;
                if (2..p).take_while(|q| q * q <= p).any(|q| p % q == 0) {
                    return Err(bad("not a prime".into()));
                }
                Ok(ParamValue::Int(p))
            }
            ParamKind::IntList { min, max } => {
                let v = raw
                    .split(',')
                    .map(|s| in_range(int(s)?, min, max))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(ParamValue::List(v))
            }
            ParamKind::Window { min, max } => {
                let parts: Vec<&str> = raw.split(',').collect();
                if parts.len() != 2 {
                    return Err(bad("expected lo,hi".into()));
                }
                let (lo, hi) = (in_range(int(parts[0])?, min, max)?, in_range(int(parts[1])?, min, max)?);
                if lo > hi {
                    return Err(bad("lo exceeds hi".into()));
                }
                Ok(ParamValue::Window(lo, hi))
            }
        }
    }

    pub fn schema(&self) -> Value {
        let kind = match self.kind {
            ParamKind::Int { min, max } => json!({"type": "int", "min": min, "max": max}),
            ParamKind::Prime => json!({"type": "prime"}),
            ParamKind::IntList { min, max } => json!({"type": "int-list", "min": min, "max": max}),
            ParamKind::Window { min, max } => json!({"type": "window", "min": min, "max": max}),
        };
        json!({"key": self.key, "kind": kind, "default": self.default, "help": self.help})
    }
}

/// Fully resolved parameters, defaults filled in.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Params(BTreeMap<String, ParamValue>);

impl Params {
    pub fn resolve(specs: &[ParamSpec], given: &[(String, String)]) -> Result<Self, CliError> {
        let mut out = BTreeMap::new();
        for (k, raw) in given {
            let spec = specs
                .iter()
                .find(|s| s.key == k)
                .ok_or_else(|| CliError::Validation(format!("unknown parameter --{k}")))?;
            if out.insert(k.clone(), spec.parse(raw)?).is_some() {
                return Err(CliError::Validation(format!("parameter --{k} given twice")));
            }
        }
        for s in specs {
            if !out.contains_key(s.key) {
                out.insert(s.key.to_string(), s.parse(s.default)?);
            }
        }
        Ok(Params(out))
    }

    pub fn int(&self, key: &str) -> i64 {
        match self.0.get(key) {
            Some(ParamValue::Int(v)) => *v,
            other => panic!("parameter {key} is not an int: {other:?}"),
        }
    }

    pub fn list(&self, key: &str) -> &[i64] {
        match self.0.get(key) {
            Some(ParamValue::List(v)) => v,
            other => panic!("parameter {key} is not a list: {other:?}"),
        }
    }

    pub fn window(&self, key: &str) -> (i64, i64) {
        match self.0.get(key) {
            Some(ParamValue::Window(lo, hi)) => (*lo, *hi),
            other => panic!("parameter {key} is not a window: {other:?}"),
        }
    }

    pub fn to_json(&self) -> Value {
        Value::Object(self.0.iter().map(|(k, v)| (k.clone(), v.to_json())).collect())
    }

    /// `--key value` pairs that reproduce these parameters.
    pub fn to_args(&self) -> Vec<(String, String)> {
        self.0.iter().map(|(k, v)| (k.clone(), v.render())).collect()
    }
}

/// Splits `--key value` tokens into pairs.
pub fn pairs_from_tokens(tokens: &[String]) -> Result<Vec<(String, String)>, CliError> {
    let mut out = Vec::new();
    let mut it = tokens.iter();
    while let Some(tok) = it.next() {
        let key = tok
            .strip_prefix("--")
            .ok_or_else(|| CliError::Validation(format!("expected --key, found {tok}")))?;
        let (key, value) = match key.split_once('=') {
            Some((k, v)) => (k.to_string(), v.to_string()),
            None => {
                let v = it
                    .next()
                    .ok_or_else(|| CliError::Validation(format!("--{key} needs a value")))?;
                (key.to_string(), v.clone())
            }
        };
        out.push((key.replace('-', "_"), value));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(kind: ParamKind) -> ParamSpec {
        ParamSpec {
            key: "k",
            kind,
            default: "0",
            help: "",
        }
    }

    #[test]
    fn parsing() {
        assert_eq!(spec(ParamKind::Prime).parse("7").unwrap(), ParamValue::Int(7));
        assert!(spec(ParamKind::Prime).parse("9").is_err());
        let w = spec(ParamKind::Window { min: -64, max: 64 });
        assert_eq!(w.parse("-9,-1").unwrap(), ParamValue::Window(-9, -1));
        assert!(w.parse("-1,-9").is_err());
        let l = spec(ParamKind::IntList { min: 1, max: 8 });
        assert_eq!(l.parse("2,3").unwrap(), ParamValue::List(vec![2, 3]));
        assert!(l.parse("2,9").is_err());
    }

    #[test]
    fn token_pairs() {
        let toks: Vec<String> = ["--p", "3", "--window=-9,-1", "--e-max", "4"].iter().map(|s| s.to_string()).collect();
        assert_eq!(
            pairs_from_tokens(&toks).unwrap(),
            vec![
                ("p".into(), "3".into()),
                ("window".into(), "-9,-1".into()),
                ("e_max".into(), "4".into())
            ]
        );
        assert!(pairs_from_tokens(&["p".to_string()]).is_err());
    }
}
