//! Command-line front end.
//!
//! Exit status: 0 on success, 1 when `verify` finds a violation, 2 on a
//! usage error (bad flags, malformed bipartition, `e < 2`, empty grid).

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::abacus::{nonzero_columns_from_abacus, period_decomposition, render_abacus, required_window, Abacus};
use crate::classify::{classify_theorem, fd_obstruction, verify_range};
use crate::crystal::build_crystal_graph;
use crate::error::{Error, Result};
use crate::fock::{c_function, fock_to_cherednik, FockParams};
use crate::partitions::{enumerate_bipartitions, Bipartition};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "cherednik-fd",
    version,
    about = "Level-2 Fock space combinatorics and unitary finite-dimensional simples in type B"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Args)]
pub struct ChargedArgs {
    /// Rank e >= 2.
    #[arg(long, allow_hyphen_values = true)]
    pub e: i64,
    /// Charge s, taken as (0, s).
    #[arg(long, allow_hyphen_values = true)]
    pub s: i64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether L(λ) is unitary and finite-dimensional.
    Classify {
        #[command(flatten)]
        params: ChargedArgs,
        /// Bipartition, e.g. "2,2|" or "1|1".
        #[arg(long, allow_hyphen_values = true)]
        bp: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Draw the abacus and its e-period decomposition.
    Abacus {
        #[command(flatten)]
        params: ChargedArgs,
        #[arg(long, allow_hyphen_values = true)]
        bp: String,
        /// Column window "lo..hi"; defaults to the occupied region.
        #[arg(long, allow_hyphen_values = true)]
        window: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Export the crystal on bipartitions of size at most nmax.
    Crystal {
        #[arg(long)]
        nmax: usize,
        #[command(flatten)]
        params: ChargedArgs,
        #[arg(long, value_enum, default_value = "dot")]
        format: Format,
    },
    /// List the bipartitions of n.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Check the structural properties over a grid.
    Verify {
        #[arg(long, default_value_t = 10)]
        nmax: usize,
        /// Comma-separated ranks.
        #[arg(long, value_delimiter = ',', default_value = "2,3,4,5", allow_hyphen_values = true)]
        e: Vec<i64>,
        /// Charge range "lo..hi"; defaults to -2e..2e for each rank.
        #[arg(long, allow_hyphen_values = true)]
        s: Option<String>,
    },
}

/// Parses `"lo..hi"` (inclusive).
pub fn parse_range(text: &str) -> Result<(i64, i64)> {
    let bad = || Error::RangeSyntax(text.to_string());
    let (lo, hi) = text.split_once("..").ok_or_else(bad)?;
    Ok((lo.parse().map_err(|_| bad())?, hi.parse().map_err(|_| bad())?))
}

enum Failure {
    Usage(String),
    Verify,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(format!("output error: {e}"))
    }
}

fn formats(verb: &str, got: Format, allowed: &[Format]) -> std::result::Result<(), Failure> {
    if allowed.contains(&got) {
        Ok(())
    } else {
        Err(Failure::Usage(
            format!("{verb} does not support --format {got:?}").to_lowercase(),
        ))
    }
}

fn params(args: &ChargedArgs) -> Result<FockParams> {
    FockParams::new(args.e, args.s)
}

fn to_json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

fn execute(cmd: Command, out: &mut dyn Write) -> std::result::Result<(), Failure> {
    match cmd {
        Command::Classify { params: p, bp, format } => {
            formats("classify", format, &[Format::Json, Format::Text])?;
            let fp = params(&p)?;
            let bp: Bipartition = bp.parse()?;
            let res = classify_theorem(&bp, &fp)?;
            match format {
                Format::Json => {
                    let ch = fock_to_cherednik(&fp);
                    let mut v = serde_json::to_value(res).expect("serializable");
                    let extra = json!({
                        "bipartition": bp,
                        "e": fp.e(),
                        "s": fp.s(),
                        "c": ch.c,
                        "d": ch.d,
                        "c_function": c_function(&bp, &fp),
                        "fd_obstruction": fd_obstruction(&bp, &fp),
                    });
                    v.as_object_mut()
                        .expect("object")
                        .extend(extra.as_object().expect("object").clone());
                    writeln!(out, "{}", to_json(&v))?;
                }
                _ => {
                    let verdict = if res.unitary_fd {
                        "unitary and finite-dimensional"
                    } else {
                        "not unitary and finite-dimensional"
                    };
                    write!(
                        out,
                        "L({bp}) at e = {}, s = {}: {verdict} ({:?})",
                        fp.e(),
                        fp.s(),
                        res.reason
                    )?;
                    if let Some(w) = res.witness {
                        write!(
                            out,
                            "; rectangle {}x{} in component {}, requires s = {}",
                            w.r, w.q, w.component, w.required_s
                        )?;
                    }
                    writeln!(out)?;
                }
            }
        }
        Command::Abacus {
            params: p,
            bp,
            window,
            format,
        } => {
            formats("abacus", format, &[Format::Json, Format::Text])?;
            let fp = params(&p)?;
            let bp: Bipartition = bp.parse()?;
            let ab = Abacus::build(&bp, &fp);
            let decomposition = period_decomposition(&bp, &fp);
            match format {
                Format::Json => {
                    let v = json!({
                        "bipartition": bp,
                        "e": fp.e(),
                        "s": fp.s(),
                        "abacus": ab,
                        "nonzero_columns": nonzero_columns_from_abacus(&ab),
                        "decomposition": decomposition,
                    });
                    writeln!(out, "{}", to_json(&v))?;
                }
                _ => {
                    let (lo, hi) = match window {
                        Some(w) => parse_range(&w)?,
                        None => {
                            let (lo, hi) = required_window(&ab);
                            (lo - 1, hi + 1)
                        }
                    };
                    write!(out, "{}", render_abacus(&ab, lo, hi)?)?;
                    let e = fp.e();
                    if decomposition.totally_periodic {
                        writeln!(
                            out,
                            "totally {e}-periodic ({} periods to a vacuum abacus)",
                            decomposition.periods.len()
                        )?;
                    } else {
                        writeln!(
                            out,
                            "not totally {e}-periodic ({} periods removed)",
                            decomposition.periods.len()
                        )?;
                    }
                }
            }
        }
        Command::Crystal {
            nmax,
            params: p,
            format,
        } => {
            formats("crystal", format, &[Format::Dot, Format::Json])?;
            let graph = build_crystal_graph(nmax, &params(&p)?);
            match format {
                Format::Json => writeln!(out, "{}", to_json(&graph))?,
                _ => write!(out, "{}", graph.to_dot())?,
            }
        }
        Command::Enumerate { n, format } => {
            formats("enumerate", format, &[Format::Json, Format::Text])?;
            let all = enumerate_bipartitions(n);
            match format {
                Format::Json => writeln!(out, "{}", to_json(&all))?,
                _ => {
                    for b in all {
                        writeln!(out, "{b}")?;
                    }
                }
            }
        }
        Command::Verify { nmax, e, s } => {
            let charges = s.as_deref().map(parse_range).transpose()?;
            let report = verify_range(nmax, &e, charges)?;
            writeln!(out, "{}", to_json(&report))?;
            if !report.passed {
                return Err(Failure::Verify);
            }
        }
    }
    Ok(())
}

/// Parses `args` (program name first) and runs the command, writing data to
/// `out` and diagnostics to `err`. Returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    match execute(cli.command, out) {
        Ok(()) => EXIT_OK,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Verify) => {
            let _ = writeln!(err, "verification failed");
            EXIT_VERIFY_FAILED
        }
    }
}
