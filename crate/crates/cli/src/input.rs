//! The JSON input document: either generators on `{0..degree-1}` or an
//! abstract multiplication table.

use serde::{Deserialize, Serialize};
use unrep_core::{represent, Error, MulTable, Result, TransSemigroup, Transformation};

/// The only accepted value of the optional `version` field.
pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Source {
    Generators {
        degree: usize,
        generators: Vec<Vec<usize>>,
    },
    Table {
        table: Vec<Vec<usize>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        labels: Option<Vec<String>>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InputDocument {
    pub version: u32,
    pub source: Source,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Raw {
    version: Option<u32>,
    degree: Option<usize>,
    generators: Option<Vec<Vec<usize>>>,
    table: Option<Vec<Vec<usize>>>,
    labels: Option<Vec<String>>,
}

fn input_err(msg: impl Into<String>) -> Error {
    Error::Input(msg.into())
}

pub fn parse_input(text: &str) -> Result<InputDocument> {
    let raw: Raw =
        serde_json::from_str(text).map_err(|e| input_err(format!("malformed JSON: {e}")))?;
    let version = raw.version.unwrap_or(FORMAT_VERSION);
    if version != FORMAT_VERSION {
        return Err(input_err(format!(
            "field `version`: unsupported format version {version}, expected {FORMAT_VERSION}"
        )));
    }
    let source = match (raw.generators, raw.table) {
        (Some(_), Some(_)) => {
            return Err(input_err(
                "give exactly one of `generators` and `table`, not both",
            ))
        }
        (None, None) => return Err(input_err("give exactly one of `generators` and `table`")),
        (Some(generators), None) => {
            if raw.labels.is_some() {
                return Err(input_err("field `labels` only applies to `table` input"));
            }
            let degree = raw
                .degree
                .ok_or_else(|| input_err("field `degree` is required with `generators`"))?;
            check_generators(degree, &generators)?;
            Source::Generators { degree, generators }
        }
        (None, Some(table)) => {
            if raw.degree.is_some() {
                return Err(input_err(
                    "field `degree` only applies to `generators` input",
                ));
            }
            check_table(&table, raw.labels.as_deref())?;
            Source::Table {
                table,
                labels: raw.labels,
            }
        }
    };
    Ok(InputDocument { version, source })
}

fn check_generators(degree: usize, generators: &[Vec<usize>]) -> Result<()> {
    if degree == 0 {
        return Err(input_err("field `degree`: must be at least 1"));
    }
    if generators.is_empty() {
        return Err(input_err(
            "field `generators`: at least one generator is required",
        ));
    }
    for (i, g) in generators.iter().enumerate() {
        if g.len() != degree {
            return Err(input_err(format!(
                "field `generators[{i}]`: image list has length {}, degree is {degree}",
                g.len()
            )));
        }
        if let Some((x, &v)) = g.iter().enumerate().find(|(_, &v)| v >= degree) {
            return Err(input_err(format!(
                "field `generators[{i}][{x}]`: image {v} out of range 0..{degree}"
            )));
        }
    }
    Ok(())
}

fn check_table(table: &[Vec<usize>], labels: Option<&[String]>) -> Result<()> {
    let n = table.len();
    if n == 0 {
        return Err(input_err("field `table`: empty table"));
    }
    for (x, row) in table.iter().enumerate() {
        if row.len() != n {
            return Err(input_err(format!(
                "field `table[{x}]`: row has length {}, table has {n} rows",
                row.len()
            )));
        }
        if let Some((y, &v)) = row.iter().enumerate().find(|(_, &v)| v >= n) {
            return Err(input_err(format!(
                "field `table[{x}][{y}]`: entry {v} out of range 0..{n}"
            )));
        }
    }
    if let Some(l) = labels {
        if l.len() != n {
            return Err(input_err(format!(
                "field `labels`: {} labels for {n} elements",
                l.len()
            )));
        }
    }
    Ok(())
}

/// What the analyses run on: the transformation semigroup, and the abstract
/// table when the input was one.
pub struct Subject {
    pub semigroup: TransSemigroup,
    pub table: Option<MulTable>,
    /// For table input, whether the representation is injective.
    pub faithful: Option<bool>,
}

impl InputDocument {
    pub fn subject(&self, cap: usize) -> Result<Subject> {
        match &self.source {
            Source::Generators { generators, .. } => {
                let gens = generators
                    .iter()
                    .cloned()
                    .map(Transformation::new)
                    .collect::<Result<Vec<_>>>()?;
                Ok(Subject {
                    semigroup: TransSemigroup::closure(&gens, cap)?,
                    table: None,
                    faithful: None,
                })
            }
            Source::Table { table, labels } => {
                let mut t = MulTable::new(table.clone())?;
                if let Some(l) = labels {
                    t = t.with_labels(l.clone())?;
                }
                let r = represent(&t);
                Ok(Subject {
                    semigroup: r.semigroup,
                    faithful: Some(r.faithful),
                    table: Some(t),
                })
            }
        }
    }
}
