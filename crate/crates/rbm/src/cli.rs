//! `rbm` command-line front end.
//!
//! Exit status: 0 on success, 1 on usage, parse or configuration errors, 2
//! when the exhaustive oracle is asked to handle too many items.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rbm_core::oracle::{oracle_representation, oracle_sets};
use rbm_core::{
    approximate_query, derive_rminmf, derive_rminmmaxf, derive_rmmaxf, query_pattern,
    regenerate_all, Item, MeasuredPattern, Miner, MiningParams, Pattern, Rational, Representation,
    RepresentationKind, TransactionDatabase,
};
use thiserror::Error;

use crate::fimi::{self, FimiError};
use crate::repfile::{self, RepFileError};
use crate::threads::Parallel;

#[derive(Debug, Parser)]
#[command(
    name = "rbm",
    version,
    about = "Rare correlated itemset mining under the bond measure"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Thresholds {
    /// Transaction file in FIMI format.
    #[arg(long)]
    pub input: PathBuf,
    /// Rarity threshold: a pattern is rare when its support is below this.
    /// Either an absolute count or "x%" of the transactions, rounded up.
    #[arg(long)]
    pub minsupp: String,
    /// Correlation threshold: "p/q", an integer, or a decimal such as 0.15
    /// (read exactly, never as a float).
    #[arg(long)]
    pub minbond: String,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Mine the rare correlated set or one of its representations.
    Mine {
        #[command(flatten)]
        thresholds: Thresholds,
        #[arg(long, value_enum, default_value = "rmcr")]
        set: SetArg,
        /// Output file (default: standard output).
        #[arg(long, short)]
        output: Option<PathBuf>,
        /// Compute by exhaustive enumeration instead (at most 24 items).
        #[arg(long)]
        oracle: bool,
    },
    /// Answer one pattern from a representation file.
    Query {
        #[arg(long)]
        rep: PathBuf,
        /// Item ids separated by spaces or commas, e.g. "1 3 5".
        #[arg(long)]
        pattern: String,
    },
    /// Rebuild the full rare correlated set from an RMCR file.
    Regenerate {
        #[arg(long)]
        rep: PathBuf,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Print one row of set and representation sizes plus wall time.
    Stats {
        #[command(flatten)]
        thresholds: Thresholds,
        #[arg(long)]
        oracle: bool,
    },
    /// Print the reference sets computed by exhaustive enumeration.
    Oracle {
        #[command(flatten)]
        thresholds: Thresholds,
        #[arg(long, value_enum)]
        set: Option<OracleSetArg>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SetArg {
    Mcr,
    Rmcr,
    Rmmaxf,
    Rminmf,
    Rminmmaxf,
}

impl SetArg {
    pub fn kind(self) -> RepresentationKind {
        match self {
            SetArg::Mcr => RepresentationKind::Mcr,
            SetArg::Rmcr => RepresentationKind::Rmcr,
            SetArg::Rmmaxf => RepresentationKind::RmMaxF,
            SetArg::Rminmf => RepresentationKind::RMinMF,
            SetArg::Rminmmaxf => RepresentationKind::RMinMMaxF,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OracleSetArg {
    Mc,
    Mcmax,
    Mrmin,
    Mcr,
    Mfcr,
    Mmcr,
    Mfcrmax,
    Mmcrmin,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Config(String),
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Capacity(String),
    #[error("{0}")]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Capacity(_) => 2,
            _ => 1,
        }
    }
}

impl From<rbm_core::Error> for CliError {
    fn from(e: rbm_core::Error) -> Self {
        match e {
            rbm_core::Error::Capacity { .. } => CliError::Capacity(e.to_string()),
            rbm_core::Error::InvalidParams(_) | rbm_core::Error::InvalidRational(_) => {
                CliError::Config(e.to_string())
            }
            _ => CliError::Input(e.to_string()),
        }
    }
}

fn input_error(path: &Path, e: impl std::fmt::Display) -> CliError {
    CliError::Input(format!("{}: {e}", path.display()))
}

/// Absolute minsupp from an integer or an "x%" spec: `ceil(x/100 · |T|)`.
pub fn parse_minsupp(spec: &str, num_transactions: u64) -> Result<u64, CliError> {
    let spec = spec.trim();
    let bad = || CliError::Config(format!("invalid minsupp {spec:?}"));
    let value = if let Some(pct) = spec.strip_suffix('%') {
        let r: Rational = pct.trim().parse().map_err(|_| bad())?;
        let num = r.numer() as u128 * num_transactions as u128;
        let den = r.denom() as u128 * 100;
        u64::try_from(num.div_ceil(den)).map_err(|_| bad())?
    } else {
        spec.parse::<u64>().map_err(|_| bad())?
    };
    if value == 0 {
        return Err(CliError::Config(format!(
            "minsupp {spec:?} must amount to at least one transaction"
        )));
    }
    Ok(value)
}

pub fn parse_minbond(spec: &str) -> Result<Rational, CliError> {
    spec.trim()
        .parse()
        .map_err(|_| CliError::Config(format!("invalid minbond {spec:?}")))
}

pub fn parse_pattern(spec: &str) -> Result<Pattern, CliError> {
    let items = spec
        .split(|c: char| c.is_ascii_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<Item>()
                .map_err(|_| CliError::Config(format!("invalid item {t:?} in pattern")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Pattern::new(items)
        .map_err(|_| CliError::Config("pattern must contain at least one item".into()))
}

struct Loaded {
    db: TransactionDatabase,
    params: MiningParams,
    /// The user's minsupp text when it was relative.
    minsupp_spec: Option<String>,
}

fn load(t: &Thresholds) -> Result<Loaded, CliError> {
    let db = fimi::read_path(&t.input).map_err(|e| match e {
        FimiError::Io(e) => input_error(&t.input, e),
        other => input_error(&t.input, other),
    })?;
    let minsupp = parse_minsupp(&t.minsupp, db.num_transactions() as u64)?;
    let minbond = parse_minbond(&t.minbond)?;
    let params = MiningParams::for_db(&db, minsupp, minbond)?;
    let minsupp_spec = t
        .minsupp
        .trim()
        .ends_with('%')
        .then(|| t.minsupp.trim().to_string());
    Ok(Loaded {
        db,
        params,
        minsupp_spec,
    })
}

fn read_rep(path: &Path) -> Result<repfile::RepFile, CliError> {
    repfile::read_path(path).map_err(|e| match e {
        RepFileError::Representation(rbm_core::Error::InvalidParams(m)) => input_error(path, m),
        other => input_error(path, other),
    })
}

fn miner<'a>(
    db: &'a TransactionDatabase,
    params: &MiningParams,
) -> Result<Miner<'a, Parallel>, CliError> {
    let exec = Parallel::from_env().map_err(CliError::Config)?;
    Ok(Miner::new(db, params.clone())?.with_executor(exec))
}

fn mine(l: &Loaded, kind: RepresentationKind, oracle: bool) -> Result<Representation, CliError> {
    if oracle {
        return Ok(oracle_representation(&l.db, &l.params, kind)?);
    }
    let m = miner(&l.db, &l.params)?;
    if kind == RepresentationKind::Mcr {
        return Ok(m.mine_mcr()?.0);
    }
    let rmcr = m.mine_rmcr()?.0;
    Ok(match kind {
        RepresentationKind::RmMaxF => derive_rmmaxf(&l.db, &rmcr)?,
        RepresentationKind::RMinMF => derive_rminmf(&l.db, &rmcr)?,
        RepresentationKind::RMinMMaxF => derive_rminmmaxf(&l.db, &rmcr)?,
        _ => rmcr,
    })
}

fn emit(
    output: Option<&Path>,
    out: &mut dyn Write,
    body: impl FnOnce(&mut dyn Write) -> io::Result<()>,
) -> Result<(), CliError> {
    match output {
        Some(path) => {
            let file = File::create(path).map_err(|e| input_error(path, e))?;
            let mut w = BufWriter::new(file);
            body(&mut w)?;
            w.flush()?;
        }
        None => body(out)?,
    }
    Ok(())
}

/// Sizes reported by `stats`, in column order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct StatsRow {
    pub mcr: usize,
    pub mcf: u64,
    pub mmcr: usize,
    pub mfcr: usize,
    pub mmcr_min: usize,
    pub mfcr_max: usize,
    pub rmcr: usize,
    pub rmmaxf: usize,
    pub rminmf: usize,
    pub rminmmaxf: usize,
}

pub const STATS_COLUMNS: &str =
    "minsupp\tminsupp_spec\tminbond\tntrans\tMCR\tMCF\tMMCR\tMFCR\tMMCRMin\tMFCRMax\tRMCR\tRMMaxF\tRMinMF\tRMinMMaxF\tseconds";

fn stats_row(l: &Loaded, oracle: bool) -> Result<StatsRow, CliError> {
    if oracle {
        let s = oracle_sets(&l.db, &l.params)?;
        let size = |k| oracle_representation(&l.db, &l.params, k).map(|r| r.len());
        return Ok(StatsRow {
            mcr: s.mcr.len(),
            mcf: (s.mc.len() - s.mcr.len()) as u64,
            mmcr: s.mmcr.len(),
            mfcr: s.mfcr.len(),
            mmcr_min: s.mmcr_min.len(),
            mfcr_max: s.mfcr_max.len(),
            rmcr: size(RepresentationKind::Rmcr)?,
            rmmaxf: size(RepresentationKind::RmMaxF)?,
            rminmf: size(RepresentationKind::RMinMF)?,
            rminmmaxf: size(RepresentationKind::RMinMMaxF)?,
        });
    }
    let m = miner(&l.db, &l.params)?;
    let (mcr, stats) = m.mine_mcr()?;
    let rmcr = m.mine_rmcr()?.0;
    let both = derive_rminmmaxf(&l.db, &rmcr)?;
    Ok(StatsRow {
        mcr: mcr.len(),
        mcf: stats.frequent_correlated(mcr.len()),
        mmcr: rmcr.count_role(|r| r.minimal),
        mfcr: rmcr.count_role(|r| r.closed),
        mmcr_min: both.count_role(|r| r.minimal_minimal),
        mfcr_max: both.count_role(|r| r.closed_maximal),
        rmcr: rmcr.len(),
        rmmaxf: derive_rmmaxf(&l.db, &rmcr)?.len(),
        rminmf: derive_rminmf(&l.db, &rmcr)?.len(),
        rminmmaxf: both.len(),
    })
}

fn write_measured(out: &mut dyn Write, m: &MeasuredPattern) -> io::Result<()> {
    writeln!(out, "{}\t{}\t{}\t{}", m.pattern, m.conj, m.disj, m.bond)
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<(), CliError> {
    match cli.command {
        Command::Mine {
            thresholds,
            set,
            output,
            oracle,
        } => {
            let l = load(&thresholds)?;
            let rep = mine(&l, set.kind(), oracle)?;
            emit(output.as_deref(), out, |w| {
                repfile::write(&rep, l.minsupp_spec.as_deref(), w)
            })
        }
        Command::Query { rep, pattern } => {
            let file = read_rep(&rep)?;
            let p = parse_pattern(&pattern)?;
            if file.rep.kind() == RepresentationKind::RMinMMaxF {
                writeln!(out, "{}", approximate_query(&file.rep, &p)?)?;
            } else {
                writeln!(out, "{}", query_pattern(&file.rep, &p)?)?;
            }
            Ok(())
        }
        Command::Regenerate { rep, output } => {
            let file = read_rep(&rep)?;
            let mcr = regenerate_all(&file.rep)?;
            emit(output.as_deref(), out, |w| {
                repfile::write(&mcr, file.minsupp_spec.as_deref(), w)
            })
        }
        Command::Stats { thresholds, oracle } => {
            let l = load(&thresholds)?;
            let start = Instant::now();
            let row = stats_row(&l, oracle)?;
            let secs = start.elapsed().as_secs_f64();
            let p = &l.params;
            writeln!(out, "{STATS_COLUMNS}")?;
            writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{:.3}",
                p.minsupp,
                l.minsupp_spec.as_deref().unwrap_or("-"),
                p.minbond,
                p.num_transactions,
                row.mcr,
                row.mcf,
                row.mmcr,
                row.mfcr,
                row.mmcr_min,
                row.mfcr_max,
                row.rmcr,
                row.rmmaxf,
                row.rminmf,
                row.rminmmaxf,
                secs
            )?;
            Ok(())
        }
        Command::Oracle { thresholds, set } => {
            let l = load(&thresholds)?;
            let s = oracle_sets(&l.db, &l.params)?;
            let p = &l.params;
            writeln!(out, "#minsupp\t{}", p.minsupp)?;
            writeln!(out, "#minbond\t{}", p.minbond)?;
            writeln!(out, "#ntrans\t{}", p.num_transactions)?;
            let all = [
                (OracleSetArg::Mc, "MC", &s.mc),
                (OracleSetArg::Mcmax, "MCMax", &s.mc_max),
                (OracleSetArg::Mrmin, "MRMin", &s.mr_min),
                (OracleSetArg::Mcr, "MCR", &s.mcr),
                (OracleSetArg::Mfcr, "MFCR", &s.mfcr),
                (OracleSetArg::Mmcr, "MMCR", &s.mmcr),
                (OracleSetArg::Mfcrmax, "MFCRMax", &s.mfcr_max),
                (OracleSetArg::Mmcrmin, "MMCRMin", &s.mmcr_min),
            ];
            for (arg, name, members) in all {
                if set.is_some_and(|wanted| wanted != arg) {
                    continue;
                }
                writeln!(out, "#set\t{name}\t{}", members.len())?;
                for m in members.iter() {
                    write_measured(out, m)?;
                }
            }
            Ok(())
        }
    }
}

/// Parses `args` (including the program name) and runs the command. Returns
/// the process exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                1
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    match execute(cli, out).and_then(|()| out.flush().map_err(CliError::from)) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "rbm: {e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minsupp_specs() {
        assert_eq!(parse_minsupp("4", 5).unwrap(), 4);
        assert_eq!(parse_minsupp("20%", 5).unwrap(), 1);
        assert_eq!(parse_minsupp("50%", 5).unwrap(), 3);
        assert_eq!(parse_minsupp("12.5%", 8).unwrap(), 1);
        assert_eq!(parse_minsupp("12.5%", 9).unwrap(), 2);
        assert_eq!(parse_minsupp("100%", 7).unwrap(), 7);
        assert!(parse_minsupp("0", 5).is_err());
        assert!(parse_minsupp("0%", 5).is_err());
        assert!(parse_minsupp("x%", 5).is_err());
        assert!(parse_minsupp("-3", 5).is_err());
    }

    #[test]
    fn minbond_specs() {
        assert_eq!(parse_minbond("1/5").unwrap(), Rational::new(1, 5).unwrap());
        assert_eq!(parse_minbond("0.2").unwrap(), Rational::new(2, 10).unwrap());
        assert_eq!(parse_minbond("0.15").unwrap().denom(), 100);
        assert!(parse_minbond("abc").is_err());
    }

    #[test]
    fn pattern_specs() {
        assert_eq!(
            parse_pattern("1 3 5").unwrap(),
            Pattern::new([1, 3, 5]).unwrap()
        );
        assert_eq!(parse_pattern("5,1").unwrap(), Pattern::new([1, 5]).unwrap());
        assert!(parse_pattern("").is_err());
        assert!(parse_pattern("a").is_err());
    }
}
