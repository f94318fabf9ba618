//! The sparse JSON braiding format:
//!
//! ```json
//! {"dim": 2, "name": "flip2", "entries": [{"out_pair": [2, 1], "in_pair": [1, 2], "coeff": "1"}]}
//! ```
//!
//! Indices are 1-based; each entry is the coefficient of `e_k ⊗ e_l` in the
//! image of `e_i ⊗ e_j`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};
use nichols_core::braidcore::Braiding;
use nichols_core::linalg::FieldMatrix;
use nichols_core::qfield::parse;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecEntry {
    pub out_pair: [usize; 2],
    pub in_pair: [usize; 2],
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BraidingSpecFile {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    pub entries: Vec<SpecEntry>,
}

impl BraidingSpecFile {
    pub fn from_json(text: &str) -> CliResult<Self> {
        serde_json::from_str(text).map_err(|e| {
            CliError::Input(format!("malformed spec file at line {}, column {}: {e}", e.line(), e.column()))
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("spec files serialize") + "\n"
    }

    /// The matrix described by the entries, without checking the braid equation.
    pub fn matrix(&self) -> CliResult<FieldMatrix> {
        let d = self.dim;
        if d == 0 {
            return Err(CliError::Input("dim must be at least 1".into()));
        }
        let mut seen = BTreeSet::new();
        let mut triples = Vec::with_capacity(self.entries.len());
        for (n, e) in self.entries.iter().enumerate() {
            let [k, l] = e.out_pair;
            let [i, j] = e.in_pair;
            if [k, l, i, j].iter().any(|&x| x == 0 || x > d) {
                return Err(CliError::Input(format!("entries[{n}]: indices must lie in 1..{d}")));
            }
            if !seen.insert((e.out_pair, e.in_pair)) {
                return Err(CliError::Input(format!(
                    "entries[{n}]: duplicate address out ({k}, {l}) in ({i}, {j})"
                )));
            }
            let c = parse(&e.coeff).map_err(|err| CliError::Input(format!("entries[{n}].coeff: {err}")))?;
            triples.push(((k - 1) * d + (l - 1), (i - 1) * d + (j - 1), c));
        }
        Ok(FieldMatrix::from_entries(d * d, d * d, triples)?)
    }

    pub fn from_braiding(b: &Braiding, name: Option<String>, description: Option<String>) -> Self {
        let d = b.dim();
        let entries = b
            .matrix()
            .entries_row_major()
            .into_iter()
            .map(|(r, c, v)| SpecEntry {
                out_pair: [r / d + 1, r % d + 1],
                in_pair: [c / d + 1, c % d + 1],
                coeff: v.to_string(),
            })
            .collect();
        BraidingSpecFile { dim: d, name, description, entries }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_entries() {
        let dup = r#"{"dim":1,"entries":[{"out_pair":[1,1],"in_pair":[1,1],"coeff":"1"},{"out_pair":[1,1],"in_pair":[1,1],"coeff":"q"}]}"#;
        assert!(BraidingSpecFile::from_json(dup).unwrap().matrix().is_err());
        let range = r#"{"dim":1,"entries":[{"out_pair":[2,1],"in_pair":[1,1],"coeff":"1"}]}"#;
        assert!(BraidingSpecFile::from_json(range).unwrap().matrix().is_err());
        let syntax = r#"{"dim":1,"entries":[{"out_pair":[1,1],"in_pair":[1,1],"coeff":"q+"}]}"#;
        let err = BraidingSpecFile::from_json(syntax).unwrap().matrix().unwrap_err();
        assert!(err.to_string().contains("position 2"), "{err}");
        assert!(BraidingSpecFile::from_json("{\"dim\": 1,").is_err());
    }
}
