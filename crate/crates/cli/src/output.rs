use serde::Serialize;
use serde_json::Value;

use crate::args::Format;

/// What a command produced, before formatting.
pub struct Report {
    pub result: Value,
    /// `Some(false)` when a verification check failed.
    pub passed: Option<bool>,
    /// Native CSV table; otherwise the result is flattened to `path,value` lines.
    pub csv: Option<String>,
    /// Raw text that replaces the whole output (rep files in text form).
    pub raw: Option<String>,
}

impl Report {
    pub fn value<T: Serialize>(result: &T) -> Self {
        Report {
            result: serde_json::to_value(result).expect("reports serialize"),
            passed: None,
            csv: None,
            raw: None,
        }
    }

    pub fn check<T: Serialize>(result: &T, passed: bool) -> Self {
        Report {
            passed: Some(passed),
            ..Report::value(result)
        }
    }

    pub fn with_csv(mut self, csv: String) -> Self {
        self.csv = Some(csv);
        self
    }
}

#[derive(Serialize)]
struct Envelope<'a> {
    schema: u32,
    command: &'a str,
    config: &'a Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    timestamp: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    passed: Option<bool>,
    result: &'a Value,
}

pub fn render(report: &Report, command: &str, config: &Value, format: Format, timestamp: Option<u64>) -> String {
    if let Some(raw) = &report.raw {
        return raw.clone();
    }
    match format {
        Format::Json => {
            let env = Envelope {
                schema: 1,
                command,
                config,
                timestamp,
                passed: report.passed,
                result: &report.result,
            };
            let mut s = serde_json::to_string_pretty(&env).expect("envelope serializes");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut s = format!("# schema=1 command={command} config={config}\n");
            if let Some(t) = timestamp {
                s += &format!("# timestamp={t}\n");
            }
            if let Some(p) = report.passed {
                s += &format!("# passed={p}\n");
            }
            match &report.csv {
                Some(table) => s += table,
                None => {
                    s += "path,value\n";
                    flatten("", &report.result, &mut s);
                }
            }
            s
        }
    }
}

fn csv_field(text: &str) -> String {
    if text.contains([',', '"', '\n']) {
        format!("\"{}\"", text.replace('"', "\"\""))
    } else {
        text.to_string()
    }
}

fn flatten(path: &str, v: &Value, out: &mut String) {
    let join = |k: &str| {
        if path.is_empty() {
            k.to_string()
        } else {
            format!("{path}.{k}")
        }
    };
    match v {
        Value::Object(map) => map.iter().for_each(|(k, x)| flatten(&join(k), x, out)),
        Value::Array(items) => items
            .iter()
            .enumerate()
            .for_each(|(i, x)| flatten(&join(&i.to_string()), x, out)),
        Value::String(s) => *out += &format!("{},{}\n", csv_field(path), csv_field(s)),
        other => *out += &format!("{},{}\n", csv_field(path), other),
    }
}
