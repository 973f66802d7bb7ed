//! Command-line front end.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::Parser;

use crate::emit::{render, Format, LabelStyle, RenderOptions};
use crate::graph::MultipletGraph;
use crate::multiplet::MultipletSpec;
use crate::symexpr::Symbol;
use crate::Error;

/// A parameter value: symbolic or a nonnegative integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParamValue {
    Symbolic,
    Value(i64),
}

fn parse_param(s: &str) -> Result<ParamValue, String> {
    if s == "sym" {
        return Ok(ParamValue::Symbolic);
    }
    match s.parse::<i64>() {
        Ok(v) if v >= 0 => Ok(ParamValue::Value(v)),
        _ => Err(format!(
            "expected `sym` or a nonnegative integer, got `{s}`"
        )),
    }
}

fn parse_symbol(s: &str) -> Result<Symbol, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_epsilon(s: &str) -> Result<i8, String> {
    match s {
        "1" | "+1" => Ok(1),
        "-1" => Ok(-1),
        _ => Err(format!("epsilon must be 1 or -1, got `{s}`")),
    }
}

/// Emit a multiplet of so(4,2) representations induced from the maximal
/// cuspidal parabolic.
#[derive(Debug, Parser)]
#[command(name = "so42-multiplets", version)]
pub struct Cli {
    /// Value of p: `sym` or a nonnegative integer (0 = formal reduction).
    #[arg(long, default_value = "sym", value_parser = parse_param)]
    pub p: ParamValue,
    /// Value of ν.
    #[arg(long, default_value = "sym", value_parser = parse_param)]
    pub nu: ParamValue,
    /// Value of n.
    #[arg(long, default_value = "sym", value_parser = parse_param)]
    pub n: ParamValue,
    /// Parameters set formally to zero (p, nu, n); repeatable or comma separated.
    #[arg(long, value_delimiter = ',', value_parser = parse_symbol)]
    pub zero: Vec<Symbol>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Keep only the transitive reduction of the operator arrows.
    #[arg(long)]
    pub reduce_edges: bool,
    /// Omit Knapp–Stein pairs.
    #[arg(long)]
    pub no_ks: bool,
    #[arg(long, value_enum, default_value_t = LabelStyle::FigureLabel)]
    pub labels: LabelStyle,
    /// Exclude k = 0 members (default: only for the main multiplet).
    #[arg(long, action = clap::ArgAction::Set)]
    pub strict_k: Option<bool>,
    /// Discrete-series parameter ε used for holomorphy tags.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_epsilon)]
    pub epsilon: Option<i8>,
    /// Plain ASCII output.
    #[arg(long)]
    pub ascii: bool,
    /// Output file (default: stdout).
    #[arg(long)]
    pub out: Option<PathBuf>,
}

impl Cli {
    pub fn spec(&self) -> Result<MultipletSpec, Error> {
        let numeric = [
            (Symbol::P, self.p),
            (Symbol::Nu, self.nu),
            (Symbol::N, self.n),
        ]
        .into_iter()
        .filter_map(|(s, v)| match v {
            ParamValue::Value(v) => Some((s, v)),
            ParamValue::Symbolic => None,
        });
        MultipletSpec::new(self.zero.iter().copied(), numeric, self.strict_k)
    }

    pub fn options(&self) -> RenderOptions {
        RenderOptions {
            format: self.format,
            reduced_edges: self.reduce_edges,
            show_ks: !self.no_ks,
            label_style: self.labels,
            ascii: self.ascii,
            epsilon: self.epsilon,
        }
    }
}

/// Renders the multiplet requested by `cli`.
pub fn run(cli: &Cli) -> Result<String, Error> {
    let spec = cli.spec()?;
    let graph = MultipletGraph::build(&spec)?;
    render(&graph, &cli.options())
}

/// Exit codes: 0 success, 2 usage error, 1 internal invariant violation.
pub fn cli_main<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let output = match run(&cli) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return if e.is_usage() { 2 } else { 1 };
        }
    };
    let written = match &cli.out {
        Some(path) => std::fs::write(path, output.as_bytes()),
        None => {
            use std::io::Write;
            std::io::stdout().write_all(output.as_bytes())
        }
    };
    match written {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}
