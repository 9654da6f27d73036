//! The instance file: UTF-8 JSON with a fixed key order.
//!
//! ```json
//! {
//!   "format_version": 1,
//!   "field": "rational",
//!   "v_size": 3,
//!   "w_size": 1,
//!   "entries": [
//!     { "i": 0, "j": 0, "k": 1, "c": "1" },
//!     { "i": 2, "j": 0, "k": 2, "c": "-3/4" }
//!   ]
//! }
//! ```
//!
//! `field` is `"rational"` or `{"gf": p}`. Coefficients are reduced `p/q`
//! strings (integers without a denominator) or residues in `0..p`. Labels
//! (`v_labels`, `w_labels`) are optional string arrays.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::error::Error;
use crate::scalar::{FieldSpec, Scalar};
use crate::table::{ActionTable, Entry};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub format_version: u32,
    pub field: FieldRepr,
    pub v_size: usize,
    pub w_size: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub v_labels: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub w_labels: Option<Vec<String>>,
    pub entries: Vec<EntryRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FieldRepr {
    Named(String),
    Prime { gf: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EntryRecord {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub c: String,
}

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unsupported format_version {0} (expected {FORMAT_VERSION})")]
    Version(u32),
    #[error("unknown field {0:?} (expected \"rational\" or {{\"gf\": p}})")]
    UnknownField(String),
    #[error("entry {index}: {source}")]
    Entry { index: usize, source: Error },
    #[error(transparent)]
    Invalid(#[from] Error),
}

impl From<FieldSpec> for FieldRepr {
    fn from(f: FieldSpec) -> Self {
        match f {
            FieldSpec::Rational => FieldRepr::Named("rational".into()),
            FieldSpec::Prime(p) => FieldRepr::Prime { gf: p },
        }
    }
}

impl FieldRepr {
    pub fn to_spec(&self) -> Result<FieldSpec, FormatError> {
        match self {
            FieldRepr::Named(name) if name == "rational" => Ok(FieldSpec::Rational),
            FieldRepr::Named(name) => Err(FormatError::UnknownField(name.clone())),
            FieldRepr::Prime { gf } => Ok(FieldSpec::prime(*gf)?),
        }
    }
}

impl InstanceFile {
    pub fn from_table(t: &ActionTable) -> Self {
        InstanceFile {
            format_version: FORMAT_VERSION,
            field: t.field().into(),
            v_size: t.v_size(),
            w_size: t.w_size(),
            v_labels: t.v_labels().map(|l| l.names().to_vec()),
            w_labels: t.w_labels().map(|l| l.names().to_vec()),
            entries: t
                .entries()
                .map(|e| EntryRecord {
                    i: e.i,
                    j: e.j,
                    k: e.k,
                    c: e.c.to_string(),
                })
                .collect(),
        }
    }

    pub fn to_table(&self) -> Result<ActionTable, FormatError> {
        if self.format_version != FORMAT_VERSION {
            return Err(FormatError::Version(self.format_version));
        }
        let field = self.field.to_spec()?;
        let entries = self
            .entries
            .iter()
            .enumerate()
            .map(|(index, r)| {
                Scalar::parse(&r.c, field)
                    .map(|c| Entry::new(r.i, r.j, r.k, c))
                    .map_err(|source| FormatError::Entry { index, source })
            })
            .collect::<Result<Vec<_>, _>>()?;
        let table = ActionTable::new(entries, self.v_size, self.w_size, field)?;
        Ok(table.with_labels(self.v_labels.clone(), self.w_labels.clone())?)
    }
}

pub fn parse_instance(text: &str) -> Result<ActionTable, FormatError> {
    let file: InstanceFile = serde_json::from_str(text).map_err(|e| FormatError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    file.to_table()
}

/// Canonical text: pretty-printed, entries in `(i, j)` order, trailing newline.
pub fn serialize_instance(t: &ActionTable) -> String {
    let mut out = serde_json::to_string_pretty(&InstanceFile::from_table(t))
        .expect("instance files always serialize");
    out.push('\n');
    out
}
