//! Tab-separated representation files (tabs shown as two spaces below).
//!
//! ```text
//! #kind  RMCR
//! #minsupp  4
//! #minbond  1/5
//! #ntrans  5
//! #minsupp_spec  80%        (optional: the threshold as the user wrote it)
//! 1  3  3/3  M,C
//! 1 2  2  2/5  M
//! ```
//!
//! Entry columns are the items (space-separated), the conjunctive support,
//! the bond as `p/q` and the role flags (`-` when none). The disjunctive
//! support is recovered as `conj · q / p`. Unknown `#` lines are ignored on
//! read.

use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::path::Path;

use rbm_core::{
    Item, MeasuredPattern, MiningParams, Pattern, Rational, Representation, RepresentationKind,
    RoleFlaggedPattern, Roles,
};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum RepFileError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("missing header #{0}")]
    MissingHeader(&'static str),
    #[error("{0}")]
    Io(#[from] io::Error),
    #[error("{0}")]
    Representation(#[from] rbm_core::Error),
}

/// A representation together with the threshold text it was mined with.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepFile {
    pub rep: Representation,
    pub minsupp_spec: Option<String>,
}

pub fn write<W: Write>(
    rep: &Representation,
    minsupp_spec: Option<&str>,
    mut out: W,
) -> io::Result<()> {
    let p = rep.params();
    writeln!(out, "#kind\t{}", rep.kind())?;
    writeln!(out, "#minsupp\t{}", p.minsupp)?;
    writeln!(out, "#minbond\t{}", p.minbond)?;
    writeln!(out, "#ntrans\t{}", p.num_transactions)?;
    if let Some(spec) = minsupp_spec {
        writeln!(out, "#minsupp_spec\t{spec}")?;
    }
    for e in rep.entries() {
        let m = &e.measured;
        writeln!(out, "{}\t{}\t{}\t{}", m.pattern, m.conj, m.bond, e.roles)?;
    }
    Ok(())
}

pub fn to_string(rep: &Representation, minsupp_spec: Option<&str>) -> String {
    let mut buf = Vec::new();
    write(rep, minsupp_spec, &mut buf).expect("writing to memory");
    String::from_utf8(buf).expect("output is ASCII")
}

pub fn parse<R: BufRead>(reader: R) -> Result<RepFile, RepFileError> {
    let mut kind = None;
    let mut minsupp = None;
    let mut minbond = None;
    let mut ntrans = None;
    let mut minsupp_spec = None;
    let mut entries = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let line = line.trim_end_matches('\r');
        let lineno = idx + 1;
        let syntax = |msg: String| RepFileError::Syntax { line: lineno, msg };
        if line.trim().is_empty() {
            continue;
        }
        if let Some(header) = line.strip_prefix('#') {
            let (key, value) = header.split_once('\t').unwrap_or((header, ""));
            let value = value.trim();
            match key.trim() {
                "kind" => {
                    kind = Some(
                        value
                            .parse::<RepresentationKind>()
                            .map_err(|e| syntax(e.to_string()))?,
                    )
                }
                "minsupp" => {
                    minsupp = Some(
                        value
                            .parse::<u64>()
                            .map_err(|_| syntax(format!("bad minsupp {value:?}")))?,
                    )
                }
                "minbond" => {
                    minbond = Some(
                        value
                            .parse::<Rational>()
                            .map_err(|e| syntax(e.to_string()))?,
                    )
                }
                "ntrans" => {
                    ntrans = Some(
                        value
                            .parse::<u64>()
                            .map_err(|_| syntax(format!("bad ntrans {value:?}")))?,
                    )
                }
                "minsupp_spec" => minsupp_spec = Some(value.to_string()),
                _ => {}
            }
            continue;
        }
        let cols: Vec<&str> = line.split('\t').collect();
        if cols.len() != 4 {
            return Err(syntax(format!(
                "expected 4 tab-separated columns, found {}",
                cols.len()
            )));
        }
        let items = cols[0]
            .split_ascii_whitespace()
            .map(|t| {
                t.parse::<Item>()
                    .map_err(|_| syntax(format!("bad item {t:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let pattern = Pattern::new(items).map_err(|e| syntax(e.to_string()))?;
        let conj: u64 = cols[1]
            .trim()
            .parse()
            .map_err(|_| syntax(format!("bad support {:?}", cols[1])))?;
        let bond: Rational = cols[2]
            .trim()
            .parse()
            .map_err(|e: rbm_core::Error| syntax(e.to_string()))?;
        let roles: Roles = cols[3]
            .trim()
            .parse()
            .map_err(|e: rbm_core::Error| syntax(e.to_string()))?;
        if bond.is_zero() {
            return Err(syntax("bond of a stored entry cannot be 0".into()));
        }
        let scaled = conj as u128 * bond.denom() as u128;
        if !scaled.is_multiple_of(bond.numer() as u128) {
            return Err(syntax(format!(
                "support {conj} and bond {bond} give a fractional disjunctive support"
            )));
        }
        let disj = u64::try_from(scaled / bond.numer() as u128)
            .map_err(|_| syntax("disjunctive support overflows".into()))?;
        let measured =
            MeasuredPattern::new(pattern, conj, disj).map_err(|e| syntax(e.to_string()))?;
        entries.push(RoleFlaggedPattern::new(measured, roles));
    }
    let params = MiningParams::new(
        minsupp.ok_or(RepFileError::MissingHeader("minsupp"))?,
        minbond.ok_or(RepFileError::MissingHeader("minbond"))?,
        ntrans.ok_or(RepFileError::MissingHeader("ntrans"))?,
    )?;
    let kind = kind.ok_or(RepFileError::MissingHeader("kind"))?;
    Ok(RepFile {
        rep: Representation::new(kind, params, entries)?,
        minsupp_spec,
    })
}

pub fn parse_str(text: &str) -> Result<RepFile, RepFileError> {
    parse(text.as_bytes())
}

pub fn read_path(path: impl AsRef<Path>) -> Result<RepFile, RepFileError> {
    parse(BufReader::new(File::open(path)?))
}
