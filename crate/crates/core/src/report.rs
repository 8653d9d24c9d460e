//! Pass/fail reports produced by the property checkers.

use serde_json::{Map, Value};

/// One verified identity or inequality at fixed parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub id: String,
    pub params: Vec<(String, i64)>,
    pub pass: bool,
    /// Values that exhibit a failure; empty when the check passes.
    pub witness: Vec<(String, String)>,
}

impl Check {
    pub fn passed(id: impl Into<String>, params: &[(&str, i64)]) -> Self {
        Check {
            id: id.into(),
            params: params.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            pass: true,
            witness: Vec::new(),
        }
    }

    pub fn failed(
        id: impl Into<String>,
        params: &[(&str, i64)],
        witness: Vec<(&str, String)>,
    ) -> Self {
        Check {
            pass: false,
            witness: witness
                .into_iter()
                .map(|(k, v)| (k.to_string(), v))
                .collect(),
            ..Check::passed(id, params)
        }
    }

    /// Passes iff `ok`; the witness closure only runs on failure.
    pub fn expect<F>(id: impl Into<String>, params: &[(&str, i64)], ok: bool, witness: F) -> Self
    where
        F: FnOnce() -> Vec<(&'static str, String)>,
    {
        if ok {
            Check::passed(id, params)
        } else {
            Check::failed(id, params, witness())
        }
    }

    pub fn param(&self, key: &str) -> Option<i64> {
        self.params.iter().find(|(k, _)| k == key).map(|(_, v)| *v)
    }

    pub fn to_json(&self) -> Value {
        let mut obj = Map::new();
        obj.insert("id".into(), Value::from(self.id.clone()));
        obj.insert("params".into(), pairs_to_object(&self.params));
        obj.insert("pass".into(), Value::Bool(self.pass));
        if !self.witness.is_empty() {
            let w: Map<String, Value> = self
                .witness
                .iter()
                .map(|(k, v)| (k.clone(), Value::from(v.clone())))
                .collect();
            obj.insert("witness".into(), Value::Object(w));
        }
        Value::Object(obj)
    }
}

/// A named collection of checks; passes iff every check passes.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Report {
    pub suite: String,
    pub grid: Vec<(String, i64)>,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(suite: impl Into<String>) -> Self {
        Report {
            suite: suite.into(),
            ..Report::default()
        }
    }

    pub fn with_grid(mut self, grid: &[(&str, i64)]) -> Self {
        self.grid = grid.iter().map(|(k, v)| (k.to_string(), *v)).collect();
        self
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn absorb(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    /// Orders checks by (id prefix, d, r, k) so report bytes do not depend
    /// on evaluation order. The sort is stable.
    pub fn normalize(&mut self) {
        self.checks.sort_by_key(|c| {
            let suite = c.id.split('.').next().unwrap_or_default().to_string();
            (
                suite,
                c.param("d").unwrap_or(i64::MIN),
                c.param("r").unwrap_or(i64::MIN),
                c.param("k").unwrap_or(i64::MIN),
            )
        });
    }

    pub fn to_json(&self) -> Value {
        let mut obj = Map::new();
        obj.insert("suite".into(), Value::from(self.suite.clone()));
        obj.insert("grid".into(), pairs_to_object(&self.grid));
        obj.insert(
            "checks".into(),
            Value::Array(self.checks.iter().map(Check::to_json).collect()),
        );
        obj.insert("pass".into(), Value::Bool(self.pass()));
        Value::Object(obj)
    }
}

fn pairs_to_object(pairs: &[(String, i64)]) -> Value {
    Value::Object(
        pairs
            .iter()
            .map(|(k, v)| (k.clone(), Value::from(*v)))
            .collect(),
    )
}
