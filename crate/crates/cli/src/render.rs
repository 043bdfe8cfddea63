use serde_json::Value;

use crate::args::Format;
use crate::commands::Report;

/// Renders a report. The text form is derived from the same JSON value, so
/// both forms carry identical numbers and strings.
pub fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Json => {
            let doc = serde_json::json!({
                "command": report.command,
                "exit_status": report.status,
                "result": report.result,
            });
            let mut s = serde_json::to_string_pretty(&doc).expect("json");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut out = format!("{}\n", report.command);
            text(&report.result, 1, &mut out);
            out
        }
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("none".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(a) if a.iter().all(|x| !x.is_object() && !x.is_array()) => Some(format!(
            "[{}]",
            a.iter()
                .map(|x| scalar(x).unwrap_or_default())
                .collect::<Vec<_>>()
                .join(", ")
        )),
        _ => None,
    }
}

fn text(v: &Value, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                match scalar(x) {
                    Some(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        text(x, depth + 1, out);
                    }
                }
            }
        }
        Value::Array(items) => {
            for (i, x) in items.iter().enumerate() {
                match scalar(x) {
                    Some(s) => out.push_str(&format!("{pad}- {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}[{i}]\n"));
                        text(x, depth + 1, out);
                    }
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other).unwrap_or_default())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn text_carries_every_value() {
        let r = Report {
            command: "bounds".into(),
            status: 0,
            result: json!({ "best": { "name": "leading-power", "value": 2 }, "list": [1, 2], "rows": [{ "a": null }] }),
        };
        let t = render(&r, Format::Text);
        assert!(t.contains("name: leading-power"));
        assert!(t.contains("value: 2"));
        assert!(t.contains("list: [1, 2]"));
        assert!(t.contains("a: none"));
        let j: Value = serde_json::from_str(&render(&r, Format::Json)).unwrap();
        assert_eq!(j["result"]["best"]["value"], 2);
    }
}
