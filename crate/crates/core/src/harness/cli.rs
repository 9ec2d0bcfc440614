//! The `cwl` command line. Output is JSON lines unless `--pretty` is given.
//!
//! Exit codes: 0 success, 1 other failure (including timeouts), 2 unreadable
//! or invalid input, 3 a proven implication failed.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use super::fuzz::{run_fuzz, FuzzConfig, FuzzReport, Mode};
use super::report::run_check;
use crate::betti::{betti_table_within, FieldSpec};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::monomial::{parse_ideal, NamedIdeal, VarNames};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_VIOLATION: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "cwl", version, about = "Componentwise linearity of weighted oriented edge ideals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Common {
    /// Coefficient field: `q` or `fp:<p>`.
    #[arg(long, default_value = "q", value_parser = parse_field)]
    field: FieldSpec,
    /// Per-instance time limit in seconds (0 disables it).
    #[arg(long, default_value_t = 60)]
    timeout_secs: u64,
    /// Human-readable tables instead of JSON lines.
    #[arg(long)]
    pretty: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Classify a weighted oriented graph and run every decider on its edge ideal.
    Check {
        /// Graph file (JSON or text); stdin when omitted or `-`.
        file: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Multigraded Betti numbers of a monomial ideal.
    Betti {
        /// Ideal file (JSON or text); stdin when omitted or `-`.
        #[arg(long)]
        ideal: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Polarize a monomial ideal.
    Polarize {
        #[arg(long)]
        ideal: Option<PathBuf>,
        #[arg(long)]
        pretty: bool,
    },
    /// Test the three properties on seeded random graphs.
    Fuzz {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        count: usize,
        /// Maximum number of vertices.
        #[arg(long, default_value_t = 5)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        max_weight: u32,
        /// Run the exact deciders even when the classifier decides.
        #[arg(long)]
        verify_all: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Test the three properties on every graph with `n` vertices.
    Enumerate {
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        max_weight: u32,
        #[command(flatten)]
        common: Common,
    },
}

fn parse_field(s: &str) -> std::result::Result<FieldSpec, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

impl Common {
    fn budget(&self) -> Budget {
        self.timeout().map_or_else(Budget::unlimited, Budget::with_timeout)
    }

    fn timeout(&self) -> Option<Duration> {
        (self.timeout_secs > 0).then(|| Duration::from_secs(self.timeout_secs))
    }
}

/// Worker count from `CWL_THREADS`, if set to a positive integer.
pub fn threads_from_env() -> Option<usize> {
    std::env::var("CWL_THREADS")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .filter(|&t| t > 0)
}

fn read_input(path: Option<&PathBuf>, stdin: &mut dyn Read) -> Result<String> {
    let mut s = String::new();
    match path {
        Some(p) if p.as_os_str() != "-" => {
            s = std::fs::read_to_string(p).map_err(|e| Error::Io(format!("{}: {e}", p.display())))?;
        }
        _ => {
            stdin.read_to_string(&mut s)?;
        }
    }
    Ok(s)
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. }
        | Error::UnknownVariable(_)
        | Error::InvalidGraph(_)
        | Error::InvalidField(_)
        | Error::InvalidConfig(_)
        | Error::TooManyVariables(_)
        | Error::Io(_)
        | Error::ZeroIdeal => EXIT_INPUT,
        _ => EXIT_FAILURE,
    }
}

/// Runs the command line against the given streams and returns the exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command, stdin, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn dispatch(cmd: Command, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Check { file, common } => {
            let input = read_input(file.as_ref(), stdin)?;
            let report = run_check(&input, common.field, &common.budget())?;
            if common.pretty {
                write!(out, "{}", report.to_pretty())?;
            } else {
                writeln!(out, "{}", serde_json::to_string(&report).expect("serializable"))?;
            }
            if let Some(v) = report.implication_violation {
                writeln!(err, "implication violated: {v:?}")?;
                writeln!(err, "{}", serde_json::to_string_pretty(&report).expect("serializable"))?;
                return Ok(EXIT_VIOLATION);
            }
            Ok(EXIT_OK)
        }
        Command::Betti { ideal, common } => {
            let named = parse_ideal(&read_input(ideal.as_ref(), stdin)?)?;
            run_betti(&named, common.field, &common.budget(), common.pretty, out)?;
            Ok(EXIT_OK)
        }
        Command::Polarize { ideal, pretty } => {
            let named = parse_ideal(&read_input(ideal.as_ref(), stdin)?)?;
            run_polarize(&named, pretty, out)?;
            Ok(EXIT_OK)
        }
        Command::Fuzz {
            seed,
            count,
            n,
            max_weight,
            verify_all,
            common,
        } => {
            let config = FuzzConfig {
                n,
                max_weight,
                count,
                seed,
                field: common.field,
                mode: Mode::Fuzz,
                verify_all,
                timeout: common.timeout(),
                threads: threads_from_env(),
            };
            fuzz_command(&config, common.pretty, out, err)
        }
        Command::Enumerate { n, max_weight, common } => {
            let config = FuzzConfig {
                n,
                max_weight,
                count: 1,
                seed: 0,
                field: common.field,
                mode: Mode::Enumerate,
                verify_all: true,
                timeout: common.timeout(),
                threads: threads_from_env(),
            };
            fuzz_command(&config, common.pretty, out, err)
        }
    }
}

fn fuzz_command(config: &FuzzConfig, pretty: bool, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let start = Instant::now();
    let report: FuzzReport = run_fuzz(config)?;
    let secs = start.elapsed().as_secs_f64();
    writeln!(
        err,
        "{} instances in {:.2} s ({:.1}/s)",
        report.summary.instances,
        secs,
        report.summary.instances as f64 / secs.max(1e-9)
    )?;
    if pretty {
        write!(out, "{}", report.to_pretty())?;
    } else {
        write!(out, "{}", report.to_json_lines())?;
    }
    Ok(if report.summary.implication_violations > 0 {
        EXIT_VIOLATION
    } else {
        EXIT_OK
    })
}

/// Writes Betti rows and a summary line for `named`.
pub fn run_betti(
    named: &NamedIdeal,
    field: FieldSpec,
    budget: &Budget,
    pretty: bool,
    out: &mut dyn Write,
) -> Result<()> {
    if named.ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let table = betti_table_within(&named.ideal, field, budget)?;
    let regularity = table.regularity();
    if pretty {
        write!(out, "{}", graded_table(&table))?;
        writeln!(
            out,
            "regularity {}  projective dimension {}",
            regularity.unwrap_or(0),
            table.projective_dimension().unwrap_or(0)
        )?;
        return Ok(());
    }
    for row in table.rows(|m| named.names.render(m)) {
        writeln!(out, "{}", serde_json::to_string(&row).expect("serializable"))?;
    }
    let summary = json!({
        "summary": {
            "field": field,
            "generators": named.ideal.num_generators(),
            "regularity": regularity,
            "projective_dimension": table.projective_dimension(),
            "totals": table.totals(),
        }
    });
    writeln!(out, "{summary}")?;
    Ok(())
}

/// The usual graded Betti diagram: row `j - i`, column `i`.
fn graded_table(table: &crate::betti::BettiTable) -> String {
    let graded = table.graded();
    let cols = table.projective_dimension().map_or(0, |p| p + 1);
    let rows: Vec<u32> = {
        let mut r: Vec<u32> = graded.keys().map(|(i, j)| j - *i as u32).collect();
        r.sort();
        r.dedup();
        r
    };
    let mut s = format!("{:>6}:", "");
    for i in 0..cols {
        s.push_str(&format!(" {i:>5}"));
    }
    s.push('\n');
    s.push_str(&format!("{:>6}:", "total"));
    for t in table.totals() {
        s.push_str(&format!(" {t:>5}"));
    }
    s.push('\n');
    for r in rows {
        s.push_str(&format!("{r:>6}:"));
        for i in 0..cols {
            match graded.get(&(i, r + i as u32)) {
                Some(v) => s.push_str(&format!(" {v:>5}")),
                None => s.push_str(&format!(" {:>5}", ".")),
            }
        }
        s.push('\n');
    }
    s
}

/// Writes the polarized ideal with new variables named `<old>_<slot>`.
pub fn run_polarize(named: &NamedIdeal, pretty: bool, out: &mut dyn Write) -> Result<()> {
    let p = named.ideal.polarize();
    let new_names: Vec<String> = p
        .origin
        .iter()
        .map(|(v, slot)| format!("{}_{slot}", named.names.name(*v)))
        .collect();
    let names = VarNames::new(new_names.iter().cloned());
    let gens = names.render_ideal(&p.ideal);
    if pretty {
        writeln!(out, "({})", gens.join(", "))?;
        for (name, (v, slot)) in new_names.iter().zip(&p.origin) {
            writeln!(out, "  {name} = {} slot {slot}", named.names.name(*v))?;
        }
        return Ok(());
    }
    let variables: serde_json::Map<String, serde_json::Value> = new_names
        .iter()
        .zip(&p.origin)
        .map(|(name, (v, slot))| (name.clone(), json!([named.names.name(*v), slot])))
        .collect();
    writeln!(out, "{}", json!({ "ideal": gens, "variables": variables }))?;
    Ok(())
}
