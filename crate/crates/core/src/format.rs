//! The matrix document format.
//!
//! ```text
//! {
//!   "semiring": "max_times",
//!   "rows": 2,
//!   "cols": 2,
//!   "entries": [
//!     ["1", "1/2"],
//!     ["2", "2"]
//!   ]
//! }
//! ```
//!
//! Lattice semirings add an `"N"` field after `"semiring"`. [`to_canonical`]
//! always emits this exact layout, so canonical files round-trip
//! byte-for-byte.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::semiring::Semiring;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixDoc {
    pub semiring: String,
    #[serde(rename = "N", default, skip_serializing_if = "Option::is_none")]
    pub parameter: Option<u64>,
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<String>>,
}

impl MatrixDoc {
    pub fn from_matrix(m: &Matrix) -> Self {
        let s = m.semiring();
        MatrixDoc {
            semiring: s.name().to_string(),
            parameter: s.parameter(),
            rows: m.rows(),
            cols: m.cols(),
            entries: m
                .entries()
                .chunks(m.cols())
                .map(|row| row.iter().map(ToString::to_string).collect())
                .collect(),
        }
    }

    pub fn semiring(&self) -> Result<Semiring> {
        Semiring::from_parts(&self.semiring, self.parameter)
    }

    pub fn to_matrix(&self) -> Result<Matrix> {
        let s = self.semiring()?;
        if self.entries.len() != self.rows || self.entries.iter().any(|r| r.len() != self.cols) {
            return Err(Error::Parse(format!(
                "declared shape {}x{} does not match the entries array",
                self.rows, self.cols
            )));
        }
        Matrix::parse(s, &self.entries)
    }
}

/// Parses a matrix document.
pub fn parse_matrix(text: &str) -> Result<Matrix> {
    let doc: MatrixDoc = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    doc.to_matrix()
}

fn quoted(s: &str) -> String {
    serde_json::to_string(s).expect("strings always serialize")
}

/// Deterministic text form, newline-terminated.
pub fn to_canonical(m: &Matrix) -> String {
    let doc = MatrixDoc::from_matrix(m);
    let mut out = String::from("{\n");
    out.push_str(&format!("  \"semiring\": {},\n", quoted(&doc.semiring)));
    if let Some(p) = doc.parameter {
        out.push_str(&format!("  \"N\": {p},\n"));
    }
    out.push_str(&format!("  \"rows\": {},\n", doc.rows));
    out.push_str(&format!("  \"cols\": {},\n", doc.cols));
    out.push_str("  \"entries\": [\n");
    for (i, row) in doc.entries.iter().enumerate() {
        let cells: Vec<String> = row.iter().map(|e| quoted(e)).collect();
        let sep = if i + 1 < doc.entries.len() { "," } else { "" };
        out.push_str(&format!("    [{}]{sep}\n", cells.join(", ")));
    }
    out.push_str("  ]\n}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const PAIR_A: &str = "{\n  \"semiring\": \"max_times\",\n  \"rows\": 2,\n  \"cols\": 2,\n  \"entries\": [\n    [\"1\", \"1/2\"],\n    [\"2\", \"2\"]\n  ]\n}\n";

    #[test]
    fn canonical_layout_is_exact() {
        let m = Matrix::parse(Semiring::MaxTimes, &[&["1", "0.5"], &["2", "2"]]).unwrap();
        assert_eq!(to_canonical(&m), PAIR_A);
        assert_eq!(parse_matrix(PAIR_A).unwrap(), m);
    }

    #[test]
    fn lattice_parameter_round_trips() {
        let m = Matrix::parse(Semiring::DivisorLattice(30), &[&["1", "6"], &["15", "30"]]).unwrap();
        let text = to_canonical(&m);
        assert!(text.contains("\"N\": 30"));
        assert_eq!(to_canonical(&parse_matrix(&text).unwrap()), text);
        let sets = Matrix::parse(Semiring::SubsetLattice(3), &[&["{3,1}", "{}"]]).unwrap();
        let text = to_canonical(&sets);
        assert!(text.contains("[\"{1,3}\", \"{}\"]"));
        assert_eq!(parse_matrix(&text).unwrap(), sets);
    }

    #[test]
    fn non_canonical_input_is_normalised() {
        let loose = r#"{"semiring":"max_plus","rows":1,"cols":3,"entries":[["2/4","-inf","0.25"]]}"#;
        let m = parse_matrix(loose).unwrap();
        assert!(to_canonical(&m).contains("[\"1/2\", \"-inf\", \"1/4\"]"));
    }

    #[test]
    fn malformed_documents() {
        assert!(parse_matrix("not json").is_err());
        let wrong_shape = r#"{"semiring":"boolean","rows":2,"cols":1,"entries":[["1"]]}"#;
        assert!(parse_matrix(wrong_shape).is_err());
        let bad_entry = r#"{"semiring":"fuzzy_maxmin","rows":1,"cols":1,"entries":[["2"]]}"#;
        assert!(parse_matrix(bad_entry).is_err());
        let no_n = r#"{"semiring":"divisor_lattice","rows":1,"cols":1,"entries":[["1"]]}"#;
        assert!(parse_matrix(no_n).is_err());
        let extra = r#"{"semiring":"boolean","rows":1,"cols":1,"entries":[["1"]],"x":1}"#;
        assert!(parse_matrix(extra).is_err());
        let unknown = r#"{"semiring":"tropical","rows":1,"cols":1,"entries":[["1"]]}"#;
        assert!(matches!(parse_matrix(unknown), Err(Error::UnknownSemiring(_))));
    }
}
