//! Command-line interface.
//!
//! Exit codes: 0 on success or a passing check, 1 on a failing check, 2 on
//! a usage or input error.

use std::fs::File;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use conifold_core::gv::check_resummation_forms;
use conifold_core::{
    bernoulli, check_generating_identity, check_gv_corollary, check_recursion_upto, check_theorem, free_energy_genus,
    polylog_negative_closed, polylog_series, potential, resum_genus0, sin_expansion, solve_recursion, CheckReport,
    GvDataset,
};
use serde_json::{json, Map, Value};

use crate::error::{CliError, Result};
use crate::formats::{
    lambda_series_json, load_gv_dataset, multiclass_json, potential_json, q_series_json, ratfunc_json, report_json,
};
use crate::render::{multiclass_table, potential_table, report_text};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Bernoulli number B_n (needs --n)
    Bernoulli,
    /// Li_s(q) through q^N, plus the closed form when s <= 0 (needs --order)
    Polylog,
    /// Conifold potential for genera 0..=G and q-degrees 1..=N
    Potential,
    /// Laurent expansion of (2 sin(s/2))^-2 through s^(2G-2)
    SinExpansion,
    /// Bernoulli generating-function identity through w^(2G)
    CheckIdentity,
    /// Difference equation of the conifold potential
    CheckTheorem,
    /// Genus recursion for every genus 1..=G
    CheckRecursion,
    /// Rebuild F^1..F^G from Li_3 alone via the genus recursion
    SolveRecursion,
    /// Genus-zero GV resummation of a dataset (--input or stdin)
    GvResum,
    /// Difference equation of the GV-resummed potential in t^alpha (needs --alpha)
    GvCheck,
}

#[derive(Clone, Debug, Parser)]
#[command(name = "conifold", version, about = "Exact series checks for the resolved conifold potential")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,

    /// Genus cutoff G
    #[arg(long = "genus", global = true, default_value_t = 6, value_parser = clap::value_parser!(u32).range(1..))]
    pub genus_cut: u32,

    /// q-degree cutoff N
    #[arg(long = "qdeg", global = true, default_value_t = 20, value_parser = clap::value_parser!(u32).range(1..))]
    pub q_cut: u32,

    /// Multi-cover cutoff K
    #[arg(long = "kdeg", global = true, default_value_t = 20, value_parser = clap::value_parser!(u32).range(1..))]
    pub k_cut: u32,

    /// Polylogarithm order s
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub order: Option<i32>,

    /// Bernoulli index
    #[arg(long, global = true)]
    pub n: Option<u32>,

    /// Curve class whose variable is shifted
    #[arg(long, global = true)]
    pub alpha: Option<String>,

    /// GV dataset path; standard input when absent
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,
}

/// What a successful run concluded.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Done,
    Passed,
    Failed,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Done | Status::Passed => EXIT_PASS,
            Status::Failed => EXIT_FAIL,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        let missing = |flag| Err(CliError::MissingFlag { command: self.command_name(), flag });
        match self.command {
            Command::Bernoulli if self.n.is_none() => missing("--n"),
            Command::Polylog if self.order.is_none() => missing("--order"),
            Command::GvCheck if self.alpha.is_none() => missing("--alpha"),
            _ => Ok(()),
        }
    }

    fn command_name(&self) -> &'static str {
        match self.command {
            Command::Bernoulli => "bernoulli",
            Command::Polylog => "polylog",
            Command::Potential => "potential",
            Command::SinExpansion => "sin-expansion",
            Command::CheckIdentity => "check-identity",
            Command::CheckTheorem => "check-theorem",
            Command::CheckRecursion => "check-recursion",
            Command::SolveRecursion => "solve-recursion",
            Command::GvResum => "gv-resum",
            Command::GvCheck => "gv-check",
        }
    }

    fn lambda_order(&self) -> i32 {
        2 * self.genus_cut as i32 - 2
    }

    fn dataset(&self, stdin: &mut dyn Read) -> Result<GvDataset> {
        match &self.input {
            Some(path) => load_gv_dataset(File::open(path)?),
            None => load_gv_dataset(stdin),
        }
    }
}

fn emit(out: &mut dyn Write, format: Format, json: Value, text: impl FnOnce() -> String) -> Result<()> {
    match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&json)?)?,
        Format::Table => write!(out, "{}", text())?,
    }
    Ok(())
}

fn emit_report(out: &mut dyn Write, format: Format, report: &CheckReport) -> Result<Status> {
    emit(out, format, report_json(report), || report_text(report))?;
    Ok(if report.passed { Status::Passed } else { Status::Failed })
}

/// Execute one command, writing its output to `out`.
pub fn run(config: &RunConfig, stdin: &mut dyn Read, out: &mut dyn Write) -> Result<Status> {
    config.validate()?;
    let (g, n, k, fmt) = (config.genus_cut, config.q_cut, config.k_cut, config.format);
    match config.command {
        Command::Bernoulli => {
            let idx = config.n.expect("validated");
            let b = bernoulli(idx);
            emit(out, fmt, json!({ "n": idx, "value": b.to_string() }), || format!("{b}\n"))?;
        }
        Command::Polylog => {
            let s = config.order.expect("validated");
            let series = polylog_series(s, n);
            let closed = (s <= 0).then(|| polylog_negative_closed(s.unsigned_abs()));
            let json = json!({
                "order": s,
                "q_cut": n,
                "coeffs": q_series_json(&series),
                "closed_form": closed.as_ref().map(ratfunc_json),
            });
            emit(out, fmt, json, || match &closed {
                Some(f) => format!("{series}closed form: {f}\n"),
                None => series.to_string(),
            })?;
        }
        Command::Potential => {
            let p = potential(g, n)?;
            emit(out, fmt, potential_json(&p), || potential_table(&p))?;
        }
        Command::SinExpansion => {
            let s = sin_expansion(config.lambda_order())?;
            emit(out, fmt, json!({ "max_exp": s.max_exp(), "coeffs": lambda_series_json(&s) }), || format!("{s}\n"))?;
        }
        Command::CheckIdentity => return emit_report(out, fmt, &check_generating_identity(2 * g as i32)?),
        Command::CheckTheorem => return emit_report(out, fmt, &check_theorem(g, n)?),
        Command::CheckRecursion => return emit_report(out, fmt, &check_recursion_upto(g, n)?),
        Command::SolveRecursion => {
            let solved = solve_recursion(g, n)?;
            let matches = solved.iter().all(|(genus, s)| *s == free_energy_genus(*genus, n));
            let genera: Map<String, Value> =
                solved.iter().map(|(genus, s)| (genus.to_string(), q_series_json(s))).collect();
            let json = json!({ "genus_cut": g, "q_cut": n, "genera": genera, "matches_closed_form": matches });
            emit(out, fmt, json, || {
                let mut text = String::new();
                for (genus, s) in &solved {
                    text.push_str(&format!("genus {genus}\n{s}"));
                }
                text.push_str(&format!("matches closed form: {matches}\n"));
                text
            })?;
            return Ok(if matches { Status::Passed } else { Status::Failed });
        }
        Command::GvResum => {
            let data = config.dataset(stdin)?;
            let series = resum_genus0(&data, g, k)?;
            let forms = check_resummation_forms(&data, g, k)?;
            emit(out, fmt, multiclass_json(&series), || multiclass_table(&series, config.lambda_order()))?;
            if !forms.passed {
                return Ok(Status::Failed);
            }
        }
        Command::GvCheck => {
            let data = config.dataset(stdin)?;
            let alpha = config.alpha.as_deref().expect("validated");
            return emit_report(out, fmt, &check_gv_corollary(&data, alpha, g, k)?);
        }
    }
    Ok(Status::Done)
}

/// Parse arguments, run, and return the process exit code. Errors go to
/// `err`.
pub fn main_with<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
        }
    };
    match run(&config, stdin, out) {
        Ok(status) => status.exit_code(),
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}
