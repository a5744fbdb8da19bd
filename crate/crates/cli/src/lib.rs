//! Scenario runner: named, reproducible computations with canonical reports
//! and an on-disk cache.

pub mod cache;
pub mod params;
pub mod report;
pub mod scenarios;

use serde_json::Value;

pub use cache::{Cache, CacheStatus};
pub use params::Params;
pub use report::Report;
pub use scenarios::{registry, ScenarioSpec};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum CliError {
    #[error("validation error: {0}")]
    Validation(String),
    #[error("internal error: {0}")]
    Internal(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation(_) => 2,
            CliError::Internal(_) | CliError::Io(_) => 3,
        }
    }

    fn in_scenario(self, name: &str) -> Self {
        match self {
            CliError::Validation(m) => CliError::Validation(format!("{name}: {m}")),
            CliError::Internal(m) => CliError::Internal(format!("{name}: {m}")),
            CliError::Io(m) => CliError::Io(format!("{name}: {m}")),
        }
    }
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;

/// A registry name with validated, fully defaulted parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scenario {
    pub name: String,
    pub params: Params,
}

impl Scenario {
    pub fn new(name: &str, given: &[(String, String)]) -> Result<Self, CliError> {
        let reg = registry();
        let spec = reg
            .iter()
            .find(|s| s.name == name)
            .ok_or_else(|| CliError::Validation(format!("unknown scenario {name}")))?;
        let params = Params::resolve(&spec.params, given).map_err(|e| e.in_scenario(name))?;
        Ok(Scenario {
            name: name.to_string(),
            params,
        })
    }
}

pub fn run_scenario(s: &Scenario) -> Result<Report, CliError> {
    let reg = registry();
    let spec = reg
        .iter()
        .find(|spec| spec.name == s.name)
        .ok_or_else(|| CliError::Validation(format!("unknown scenario {}", s.name)))?;
    let mut report = Report::new(&s.name, s.params.to_json());
    (spec.run)(&s.params, &mut report).map_err(|e| e.in_scenario(&s.name))?;
    Ok(report)
}

/// Registry entries whose name contains `filter`, in registry order.
pub fn list_scenarios(filter: Option<&str>) -> Vec<ScenarioSpec> {
    registry()
        .into_iter()
        .filter(|s| filter.map_or(true, |f| s.name.contains(f)))
        .collect()
}

pub fn listing_json(filter: Option<&str>) -> Value {
    report::canonicalize(Value::Array(list_scenarios(filter).iter().map(ScenarioSpec::schema).collect()))
}

/// Canonical report bytes for a scenario, served from `cache` when present.
/// Returns the bytes and whether they came from the cache.
pub fn run_cached(s: &Scenario, cache: Option<&Cache>) -> Result<(Vec<u8>, bool), CliError> {
    if let Some(c) = cache {
        if let CacheStatus::Hit(bytes) = c.get(&c.key(s))? {
            return Ok((bytes, true));
        }
    }
    let bytes = run_scenario(s)?.canonical_bytes();
    if let Some(c) = cache {
        c.put(&c.key(s), &bytes)?;
    }
    Ok((bytes, false))
}

/// Exit status implied by a canonical report: mismatched embedded
/// expectations give [`EXIT_MISMATCH`].
pub fn report_exit_code(bytes: &[u8]) -> i32 {
    let v: Value = match serde_json::from_slice(bytes) {
        Ok(v) => v,
        Err(_) => return 3,
    };
    let mismatch = v["expectations"]
        .as_array()
        .is_some_and(|es| es.iter().any(|e| e["matched"] != Value::Bool(true)));
    if mismatch {
        EXIT_MISMATCH
    } else {
        EXIT_OK
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_listing() {
        assert_eq!(list_scenarios(None).len(), 10);
        assert_eq!(list_scenarios(Some("cone")).len(), 2);
    }

    #[test]
    fn validation_errors() {
        assert_eq!(Scenario::new("nope", &[]).unwrap_err().exit_code(), 2);
        let bad = [("q".to_string(), "3".to_string())];
        assert_eq!(Scenario::new("quadric_cone", &bad).unwrap_err().exit_code(), 2);
        let s = Scenario::new("hochster_family", &[("a".into(), "7".into())]).unwrap();
        assert_eq!(run_scenario(&s).unwrap_err().exit_code(), 2);
    }
}
