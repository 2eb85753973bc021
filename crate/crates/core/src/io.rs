//! File formats: graph, biclique, result and summary JSON, and the 0/1 TSV
//! used for binary matrices.
//!
//! TSV input may carry `#` comment lines (the CLI writes its run manifest
//! there); blank lines are skipped.

use serde::de::DeserializeOwned;
use serde::Serialize;

use crate::binary::BinaryMatrix;
use crate::error::{Error, Result};
use crate::graph::Biclique;

/// Parses JSON, mapping syntax errors to [`Error::Parse`] (with position)
/// and shape errors to [`Error::Schema`].
pub fn from_json<T: DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| {
        use serde_json::error::Category;
        match e.classify() {
            Category::Data => Error::Schema(e.to_string()),
            Category::Syntax | Category::Eof | Category::Io => {
                let msg = e.to_string();
                let message = msg.split(" at line ").next().unwrap_or(&msg).to_string();
                Error::Parse { line: e.line(), column: e.column(), message }
            }
        }
    })
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("in-memory values always serialize")
}

/// Reads a biclique, requiring strictly increasing index lists.
pub fn biclique_from_json(text: &str) -> Result<Biclique> {
    let b: Biclique = from_json(text)?;
    for (name, side) in [("u1", &b.u1), ("u2", &b.u2)] {
        if side.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Schema(format!("`{name}` must be sorted and duplicate-free")));
        }
    }
    Ok(b)
}

pub fn parse_tsv(text: &str) -> Result<BinaryMatrix> {
    let mut rows: Vec<Vec<u8>> = Vec::new();
    let mut width = None;
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim_end_matches('\r');
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let mut row = Vec::new();
        let mut column = 1;
        for token in line.split('\t') {
            match token.trim() {
                "0" => row.push(0),
                "1" => row.push(1),
                other => {
                    return Err(Error::Parse {
                        line: lineno + 1,
                        column,
                        message: format!("expected 0 or 1, found `{other}`"),
                    })
                }
            }
            column += token.chars().count() + 1;
        }
        match width {
            None => width = Some(row.len()),
            Some(w) if w != row.len() => {
                return Err(Error::Schema(format!(
                    "line {}: row has {} entries, previous rows have {w}",
                    lineno + 1,
                    row.len()
                )))
            }
            _ => {}
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(Error::Schema("matrix has no rows".into()));
    }
    BinaryMatrix::from_rows(&rows)
}

pub fn write_tsv(m: &BinaryMatrix) -> String {
    let mut out = String::with_capacity(m.n1() * m.n2() * 2);
    for i in 0..m.n1() {
        for j in 0..m.n2() {
            if j > 0 {
                out.push('\t');
            }
            out.push(if m.get(i, j) { '1' } else { '0' });
        }
        out.push('\n');
    }
    out
}
