//! Output records. Every line on stdout (or `--out`) is one JSON object
//! whose `record` field names its kind.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use regmatch::characterization::CharacterizationReport;
use regmatch::gallai_edmonds::GEDecomposition;
use regmatch::harness::{GraphAudit, RunSummary};
use regmatch::VertexSet;
use serde::Serialize;

/// Where a graph came from: its position in the stream and, for file or
/// stdin input, the 1-based line number.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct Origin {
    pub index: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub line: Option<usize>,
}

#[derive(Serialize)]
#[serde(tag = "record", rename_all = "snake_case")]
pub enum Record<'a> {
    Header {
        command: &'a str,
        args: &'a [String],
    },
    Alpha {
        #[serde(flatten)]
        origin: Origin,
        graph6: &'a str,
        n: usize,
        alpha: usize,
        witness: &'a VertexSet,
    },
    Mu {
        #[serde(flatten)]
        origin: Origin,
        graph6: &'a str,
        n: usize,
        mu: usize,
        matching: &'a [(usize, usize)],
    },
    Decompose {
        #[serde(flatten)]
        origin: Origin,
        graph6: &'a str,
        #[serde(flatten)]
        decomposition: &'a GEDecomposition,
    },
    Check {
        #[serde(flatten)]
        origin: Origin,
        graph6: &'a str,
        #[serde(flatten)]
        report: &'a CharacterizationReport,
    },
    Audit {
        #[serde(flatten)]
        origin: Origin,
        #[serde(flatten)]
        audit: &'a GraphAudit,
    },
    Skip {
        #[serde(flatten)]
        origin: Origin,
        graph6: &'a str,
        reason: &'a str,
    },
    Error {
        #[serde(flatten)]
        origin: Option<Origin>,
        message: &'a str,
    },
    Summary {
        /// Graphs produced by the generator, before the connectivity filter.
        #[serde(skip_serializing_if = "Option::is_none")]
        generated: Option<usize>,
        /// Generated graphs dropped by the connectivity filter.
        #[serde(skip_serializing_if = "Option::is_none")]
        filtered_disconnected: Option<usize>,
        #[serde(flatten)]
        run: &'a RunSummary,
        /// Audit records written (failures only unless `--all-records`).
        audit_records: usize,
        exit_status: i32,
    },
}

pub struct Sink {
    out: Box<dyn Write>,
}

impl Sink {
    pub fn open(path: Option<&Path>) -> io::Result<Sink> {
        let out: Box<dyn Write> = match path {
            Some(p) => Box::new(BufWriter::new(File::create(p)?)),
            None => Box::new(BufWriter::new(io::stdout().lock())),
        };
        Ok(Sink { out })
    }

    pub fn record(&mut self, record: &Record) -> io::Result<()> {
        serde_json::to_writer(&mut self.out, record)?;
        self.out.write_all(b"\n")
    }

    pub fn line(&mut self, text: &str) -> io::Result<()> {
        self.out.write_all(text.as_bytes())?;
        self.out.write_all(b"\n")
    }

    pub fn finish(mut self) -> io::Result<()> {
        self.out.flush()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tagged_and_flattened() {
        let origin = Origin {
            index: 3,
            line: Some(4),
        };
        let witness = VertexSet::from(vec![0, 2]);
        let alpha = Record::Alpha {
            origin,
            graph6: "Bw",
            n: 3,
            alpha: 2,
            witness: &witness,
        };
        assert_eq!(
            serde_json::to_string(&alpha).unwrap(),
            r#"{"record":"alpha","index":3,"line":4,"graph6":"Bw","n":3,"alpha":2,"witness":[0,2]}"#
        );
        let error = Record::Error {
            origin: None,
            message: "bad",
        };
        assert_eq!(
            serde_json::to_string(&error).unwrap(),
            r#"{"record":"error","message":"bad"}"#
        );
        let generated = Origin {
            index: 0,
            line: None,
        };
        let skip = Record::Skip {
            origin: generated,
            graph6: "A_",
            reason: "not regular",
        };
        assert_eq!(
            serde_json::to_string(&skip).unwrap(),
            r#"{"record":"skip","index":0,"graph6":"A_","reason":"not regular"}"#
        );
    }
}
