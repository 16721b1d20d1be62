use std::io::{self, Write};

use serde_json::Value;

use crate::args::Format;

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

/// Writes records in the chosen format. CSV columns are the top-level keys
/// in order of first appearance; nested values are written as compact JSON.
pub fn write_records(out: &mut impl Write, records: &[Value], format: Format) -> io::Result<()> {
    match format {
        Format::Json => {
            for r in records {
                writeln!(out, "{r}")?;
            }
        }
        Format::Pretty => {
            for r in records {
                writeln!(out, "{}", serde_json::to_string_pretty(r).map_err(io::Error::other)?)?;
            }
        }
        Format::Csv => {
            let mut header: Vec<String> = Vec::new();
            for r in records {
                if let Value::Object(m) = r {
                    for k in m.keys() {
                        if !header.contains(k) {
                            header.push(k.clone());
                        }
                    }
                }
            }
            let mut w = csv::Writer::from_writer(out);
            w.write_record(&header)?;
            for r in records {
                let row: Vec<String> = header.iter().map(|k| r.get(k).map(cell).unwrap_or_default()).collect();
                w.write_record(&row)?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn csv_unions_columns() {
        let recs = vec![json!({"a": 1, "b": {"x": 2}}), json!({"a": "s", "c": true})];
        let mut buf = Vec::new();
        write_records(&mut buf, &recs, Format::Csv).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text, "a,b,c\n1,\"{\"\"x\"\":2}\",\ns,,true\n");
    }
}
