//! JSONL batch mode: one `{"id", "text"}` object in, one result object out,
//! in input order.

use std::io::{BufRead, Write};

use lip_core::{preprocess, AssetBundle, Config};
use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Debug, Deserialize)]
struct Request {
    #[serde(default)]
    id: Value,
    text: String,
}

#[derive(Debug, Serialize)]
#[serde(untagged)]
pub enum BatchLine {
    Ok {
        id: Value,
        tts_text: String,
        have_char: bool,
        emoji_count: usize,
    },
    Error {
        id: Value,
        error: String,
    },
}

/// Best-effort id recovery so error lines can still be correlated.
fn salvage_id(line: &str) -> Value {
    serde_json::from_str::<Value>(line)
        .ok()
        .and_then(|v| v.get("id").cloned())
        .unwrap_or(Value::Null)
}

pub fn process_line(line: &str, config: &Config, bundle: &AssetBundle) -> BatchLine {
    let request: Request = match serde_json::from_str(line) {
        Ok(r) => r,
        Err(e) => {
            return BatchLine::Error {
                id: salvage_id(line),
                error: format!("invalid request: {e}"),
            }
        }
    };
    match preprocess(&request.text, config, bundle) {
        Ok(m) => BatchLine::Ok {
            id: request.id,
            tts_text: m.tts_text,
            have_char: m.have_char,
            emoji_count: m.unique_emoji_count,
        },
        Err(e) => BatchLine::Error {
            id: request.id,
            error: e.to_string(),
        },
    }
}

/// Writes exactly one output line per input line. Returns the number of
/// lines that produced an error object.
pub fn run_batch(
    input: impl BufRead,
    mut output: impl Write,
    config: &Config,
    bundle: &AssetBundle,
) -> std::io::Result<usize> {
    let mut errors = 0;
    for line in input.lines() {
        let line = line?;
        let result = process_line(&line, config, bundle);
        if matches!(result, BatchLine::Error { .. }) {
            errors += 1;
        }
        serde_json::to_writer(&mut output, &result)?;
        output.write_all(b"\n")?;
    }
    output.flush()?;
    Ok(errors)
}
