use serde::Serialize;
use serde_json::Value;

/// Machine-readable report. Deterministic for a given document and
/// configuration, so no timing is recorded here.
#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct Report {
    pub task: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub section: Option<String>,
    pub engine: EngineInfo,
    pub result: Value,
    pub warnings: Vec<String>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct EngineInfo {
    pub field: String,
    pub characteristic: u64,
    pub order: String,
    pub max_pairs: usize,
    pub max_basis: usize,
    pub max_degree: u64,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Short human-readable rendering of the result.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        let title = match (&self.name, &self.section) {
            (Some(n), Some(s)) => format!("{} [{s}] {n}", self.task),
            (Some(n), None) => format!("{} {n}", self.task),
            (None, Some(s)) => format!("{} [{s}]", self.task),
            (None, None) => self.task.clone(),
        };
        out.push_str(&title);
        out.push('\n');
        out.push_str(&format!(
            "  over {} ({}), max pairs {}\n",
            self.engine.field, self.engine.order, self.engine.max_pairs
        ));
        if let Value::Object(map) = &self.result {
            for (k, v) in map {
                out.push_str(&format!("  {k}: {}\n", short(v)));
            }
        }
        for w in &self.warnings {
            out.push_str(&format!("  warning: {w}\n"));
        }
        out
    }
}

fn short(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) if items.iter().all(|i| !i.is_array() && !i.is_object()) => {
            let parts: Vec<String> = items.iter().map(short).collect();
            let joined = format!("[{}]", parts.join(", "));
            if joined.len() <= 120 {
                joined
            } else {
                format!("[{} items]", items.len())
            }
        }
        Value::Array(items) => format!("[{} items]", items.len()),
        Value::Object(map) => {
            let s = v.to_string();
            if s.len() <= 120 {
                s
            } else {
                format!("{{{} fields}}", map.len())
            }
        }
        other => other.to_string(),
    }
}
