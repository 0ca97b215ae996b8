//! FIMI transaction files: one transaction per line, decimal item ids
//! separated by spaces or tabs. Blank lines are skipped.

use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::path::Path;

use rbm_core::{Item, TransactionDatabase};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FimiError {
    #[error("line {line}: {token:?} is not a non-negative integer item id")]
    BadToken { line: usize, token: String },
    #[error("{0}")]
    Io(#[from] io::Error),
    #[error("{0}")]
    Database(#[from] rbm_core::Error),
}

pub fn parse<R: BufRead>(reader: R) -> Result<TransactionDatabase, FimiError> {
    let mut rows = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let row = line
            .split_ascii_whitespace()
            .map(|tok| {
                tok.parse::<Item>().map_err(|_| FimiError::BadToken {
                    line: idx + 1,
                    token: tok.to_string(),
                })
            })
            .collect::<Result<Vec<Item>, _>>()?;
        if !row.is_empty() {
            rows.push(row);
        }
    }
    Ok(TransactionDatabase::from_transactions(rows)?)
}

pub fn parse_str(text: &str) -> Result<TransactionDatabase, FimiError> {
    parse(text.as_bytes())
}

pub fn read_path(path: impl AsRef<Path>) -> Result<TransactionDatabase, FimiError> {
    parse(BufReader::new(File::open(path)?))
}

/// Writes one line per transaction, items ascending and space-separated.
pub fn write<W: Write>(db: &TransactionDatabase, mut out: W) -> io::Result<()> {
    for t in db.transactions() {
        writeln!(out, "{t}")?;
    }
    Ok(())
}
