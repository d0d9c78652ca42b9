//! The on-disk code-definition document and its mapping to core types.
//!
//! Documents are JSON with the exact field names
//! `{"name", "n", "stabilizers", "logical_pairs", "expected"?, "metadata"?}`.
//! `metadata` is a free-form map; the keys `genus`, `family_index`,
//! `x_paths`, and `z_paths` round-trip into the corresponding definition
//! fields, anything else is preserved verbatim.

use serde::{Deserialize, Serialize};
use stabkit::catalog::CatalogError;
use stabkit::code::CodeError;
use stabkit::pauli::{PauliError, PauliOperator};
use stabkit::{CodeDefinition, CodeParameters, LogicalPair, StabilizerCode};
use std::collections::BTreeMap;
use thiserror::Error;

/// One conjugate logical pair, as operator strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairDocument {
    /// Logical X operator.
    pub x: String,
    /// Logical Z operator.
    pub z: String,
}

/// Claimed code parameters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpectedDocument {
    /// Logical qubit count.
    pub k: usize,
    /// Code distance.
    pub d: usize,
    /// Ancilla count of the measurement layout.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
}

/// Free-form metadata with a few recognized keys.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct MetadataDocument {
    /// Genus label of the originating layout.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub genus: Option<usize>,
    /// Family index (grid size or chain length).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family_index: Option<usize>,
    /// Candidate logical-X path operators.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x_paths: Option<Vec<String>>,
    /// Candidate logical-Z path operators.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub z_paths: Option<Vec<String>>,
    /// Unrecognized keys, preserved verbatim.
    #[serde(flatten)]
    pub extra: BTreeMap<String, serde_json::Value>,
}

impl MetadataDocument {
    fn is_empty(&self) -> bool {
        self.genus.is_none()
            && self.family_index.is_none()
            && self.x_paths.is_none()
            && self.z_paths.is_none()
            && self.extra.is_empty()
    }
}

/// The full code-definition document.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CodeDefinitionDocument {
    /// Code identifier.
    pub name: String,
    /// Data qubit count.
    pub n: usize,
    /// Stabilizer generators as operator strings.
    pub stabilizers: Vec<String>,
    /// Conjugate logical pairs.
    #[serde(default)]
    pub logical_pairs: Vec<PairDocument>,
    /// Claimed parameters, when the layout states them.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<ExpectedDocument>,
    /// Free-form metadata.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metadata: Option<MetadataDocument>,
}

/// Import/export failures, with enough context to locate the offender.
#[derive(Debug, Error)]
pub enum DocumentError {
    /// Malformed JSON; the message carries line and column.
    #[error("document syntax error: {0}")]
    Syntax(#[from] serde_json::Error),
    /// An operator string failed to parse, with its document field named.
    #[error("{context}: {source}")]
    Operator {
        /// Which field held the bad string, e.g. `stabilizers[2]`.
        context: String,
        /// The underlying parse failure.
        source: PauliError,
    },
    /// The parsed definition failed stabilizer-code validation.
    #[error(transparent)]
    Build(#[from] CodeError),
    /// A catalog lookup failed.
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    /// The file could not be read or written.
    #[error("{path}: {source}")]
    Io {
        /// Offending path.
        path: String,
        /// The underlying I/O failure.
        source: std::io::Error,
    },
}

fn parse_operator(text: &str, n: usize, context: impl Fn() -> String) -> Result<PauliOperator, DocumentError> {
    PauliOperator::parse(text, n).map_err(|source| DocumentError::Operator {
        context: context(),
        source,
    })
}

impl CodeDefinitionDocument {
    /// Serialize a definition into its document form.
    pub fn from_definition(def: &CodeDefinition) -> Self {
        let strings = |ops: &[PauliOperator]| -> Vec<String> {
            ops.iter().map(PauliOperator::canonical_string).collect()
        };
        let metadata = MetadataDocument {
            genus: def.genus,
            family_index: def.expected.as_ref().and_then(|e| e.family_index),
            x_paths: (!def.x_paths.is_empty()).then(|| strings(&def.x_paths)),
            z_paths: (!def.z_paths.is_empty()).then(|| strings(&def.z_paths)),
            extra: BTreeMap::new(),
        };
        CodeDefinitionDocument {
            name: def.name.clone(),
            n: def.n,
            stabilizers: strings(&def.generators),
            logical_pairs: def
                .logical_pairs
                .iter()
                .map(|p| PairDocument {
                    x: p.x_bar.canonical_string(),
                    z: p.z_bar.canonical_string(),
                })
                .collect(),
            expected: def.expected.as_ref().map(|e| ExpectedDocument {
                k: e.k,
                d: e.d,
                m: e.m,
            }),
            metadata: (!metadata.is_empty()).then_some(metadata),
        }
    }

    /// Reconstruct the unvalidated definition, naming the offending field on
    /// any operator-parse failure.
    pub fn to_definition(&self) -> Result<CodeDefinition, DocumentError> {
        let n = self.n;
        let mut generators = Vec::with_capacity(self.stabilizers.len());
        for (i, s) in self.stabilizers.iter().enumerate() {
            generators.push(parse_operator(s, n, || format!("stabilizers[{i}]"))?);
        }
        let mut logical_pairs = Vec::with_capacity(self.logical_pairs.len());
        for (i, p) in self.logical_pairs.iter().enumerate() {
            logical_pairs.push(LogicalPair {
                x_bar: parse_operator(&p.x, n, || format!("logical_pairs[{i}].x"))?,
                z_bar: parse_operator(&p.z, n, || format!("logical_pairs[{i}].z"))?,
            });
        }
        let meta = self.metadata.clone().unwrap_or_default();
        let parse_paths = |field: &str, texts: &Option<Vec<String>>| -> Result<Vec<PauliOperator>, DocumentError> {
            match texts {
                None => Ok(Vec::new()),
                Some(list) => list
                    .iter()
                    .enumerate()
                    .map(|(i, s)| parse_operator(s, n, || format!("metadata.{field}[{i}]")))
                    .collect(),
            }
        };
        Ok(CodeDefinition {
            name: self.name.clone(),
            n,
            generators,
            logical_pairs,
            expected: self.expected.as_ref().map(|e| CodeParameters {
                n,
                k: e.k,
                d: e.d,
                m: e.m,
                family_index: meta.family_index,
            }),
            genus: meta.genus,
            x_paths: parse_paths("x_paths", &meta.x_paths)?,
            z_paths: parse_paths("z_paths", &meta.z_paths)?,
        })
    }

    /// Parse a document from JSON text.
    pub fn parse(text: &str) -> Result<Self, DocumentError> {
        Ok(serde_json::from_str(text)?)
    }

    /// Render the document as deterministic pretty JSON.
    pub fn render(&self) -> String {
        crate::report::to_json(self)
    }
}

/// Import a document and build the validated code.
pub fn import_code(text: &str) -> Result<StabilizerCode, DocumentError> {
    let document = CodeDefinitionDocument::parse(text)?;
    let def = document.to_definition()?;
    Ok(StabilizerCode::build_from(def)?)
}

/// Resolve `--code NAME` or `--file PATH` into an unvalidated definition.
pub fn load_definition(
    code: &Option<String>,
    file: &Option<std::path::PathBuf>,
) -> Result<CodeDefinition, DocumentError> {
    match (code, file) {
        (Some(name), None) => Ok(stabkit::catalog::definition_by_name(name)?),
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path).map_err(|source| DocumentError::Io {
                path: path.display().to_string(),
                source,
            })?;
            let document = CodeDefinitionDocument::parse(&text)?;
            document.to_definition()
        }
        // clap enforces exactly one; this arm is unreachable through the CLI.
        _ => unreachable!("argument parsing enforces exactly one source"),
    }
}

/// Read a document file and build the validated code.
pub fn import_code_from_path(path: &std::path::Path) -> Result<StabilizerCode, DocumentError> {
    let text = std::fs::read_to_string(path).map_err(|source| DocumentError::Io {
        path: path.display().to_string(),
        source,
    })?;
    import_code(&text)
}
