use serde::{Deserialize, Serialize};

use super::FiniteQuandle;
use crate::error::{Error, Result};

/// On-disk quandle table: `{"size": n, "labels": [...], "table": [[..], ..]}`
/// with `table[x][y] = x * y`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct QuandleJson {
    pub size: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    pub table: Vec<Vec<usize>>,
}

impl QuandleJson {
    /// Converts to a quandle, checking all axioms.
    pub fn into_quandle(self) -> Result<FiniteQuandle> {
        self.convert(true)
    }

    /// Converts without the self-distributivity scan (entries, idempotency and
    /// invertibility are still checked, since nothing else works without them).
    pub fn into_quandle_unchecked(self) -> Result<FiniteQuandle> {
        self.convert(false)
    }

    fn convert(self, checked: bool) -> Result<FiniteQuandle> {
        if self.table.len() != self.size {
            return Err(Error::MalformedTable(format!(
                "size is {} but table has {} rows",
                self.size,
                self.table.len()
            )));
        }
        if let Some(l) = &self.labels {
            if l.len() != self.size {
                return Err(Error::MalformedTable(format!(
                    "{} labels for {} elements",
                    l.len(),
                    self.size
                )));
            }
        }
        let q = if checked {
            FiniteQuandle::new(self.table)?
        } else {
            if self
                .table
                .iter()
                .any(|r| r.len() != self.size || r.iter().any(|&z| z >= self.size))
            {
                return Err(Error::MalformedTable("ragged or out-of-range table".into()));
            }
            FiniteQuandle::trusted(self.table)?
        };
        Ok(match self.labels {
            Some(l) => q.with_labels(l),
            None => q,
        })
    }

    pub fn parse(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

impl From<&FiniteQuandle> for QuandleJson {
    fn from(q: &FiniteQuandle) -> Self {
        QuandleJson {
            size: q.size(),
            labels: q.labels().map(<[String]>::to_vec),
            table: q.rows(),
        }
    }
}

impl FiniteQuandle {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&QuandleJson::from(self)).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        QuandleJson::parse(text)?.into_quandle()
    }
}
