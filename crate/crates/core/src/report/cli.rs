//! `varpart` command line.
//!
//! Exit codes: 0 success, 2 input error, 3 singular design (including a
//! constant column), 4 too many predictors for exhaustive orderings.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use super::views::{decompose_document, fit_document, orderings_document, venn_document};
use super::{svg, tabular, text};
use crate::decomposition::{Ordering, OrderingRequest, MAX_EXHAUSTIVE_PREDICTORS};
use crate::error::Error;
use crate::io::{dwaine_fixture, generate_orthogonal, generate_synthetic, load_csv, write_csv, CsvSpec, SyntheticSpec};
use crate::ols::{mean_center, CenteredData};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_SINGULAR: i32 = 3;
pub const EXIT_ORDERINGS: i32 = 4;

/// Environment variable that overrides the `synth` seed.
pub const SEED_ENV: &str = "VARPART_SEED";

#[derive(Debug, Parser)]
#[command(
    name = "varpart",
    version,
    about = "Traditional vs corrected variance decomposition for multiple regression"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// OLS fit: ANOVA table and coefficients (b, se, z, t)
    Fit(CommonArgs),
    /// Traditional vs corrected statistics, Type III SS, residualized fits
    Decompose(CommonArgs),
    /// Type I tables and orthogonal-function fits for each ordering
    Orderings(CommonArgs),
    /// Venn region accounting (text, json, csv or svg)
    Venn(CommonArgs),
    /// Write a seeded synthetic dataset as CSV
    #[command(hide = true)]
    Synth(SynthArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Text,
    Json,
    Csv,
    Svg,
}

#[derive(Debug, Args)]
#[command(group = clap::ArgGroup::new("source").required(true).args(["dwaine", "input"]))]
struct CommonArgs {
    /// Use the embedded Dwaine Studios dataset
    #[arg(long)]
    dwaine: bool,
    /// CSV file with a header row
    #[arg(long, value_name = "PATH")]
    input: Option<PathBuf>,
    /// Response column (required with --input)
    #[arg(long, value_name = "NAME")]
    response: Option<String>,
    /// Predictor columns to load (default: every other column)
    #[arg(long, value_name = "A,B,...", value_delimiter = ',')]
    predictors: Vec<String>,
    /// Predictors in the model (default: all loaded predictors)
    #[arg(long, value_name = "A,B,...", value_delimiter = ',')]
    model: Vec<String>,
    /// An explicit ordering; repeat for several
    #[arg(long = "order", value_name = "A,B,...")]
    orders: Vec<String>,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    format: ReportFormat,
    /// CSV field delimiter
    #[arg(long, default_value_t = ',')]
    delimiter: char,
    /// Write to this file instead of stdout
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct SynthArgs {
    #[arg(long, default_value_t = 50)]
    n: usize,
    #[arg(long, default_value_t = 3)]
    p: usize,
    /// Common pairwise correlation
    #[arg(long, default_value_t = 0.6, allow_negative_numbers = true)]
    r: f64,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Exactly orthogonal predictors (ignores --r)
    #[arg(long)]
    orthogonal: bool,
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

/// Maps a library error to the documented exit code.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::SingularDesign { .. } | Error::ConstantColumn(_) => EXIT_SINGULAR,
        Error::TooManyOrderings { .. } => EXIT_ORDERINGS,
        _ => EXIT_INPUT,
    }
}

fn csv_header(path: &PathBuf, delimiter: u8) -> Result<Vec<String>, Error> {
    let file = std::fs::File::open(path).map_err(|e| match e.kind() {
        std::io::ErrorKind::NotFound => Error::FileNotFound(path.clone()),
        _ => Error::Io(e.to_string()),
    })?;
    let mut rdr = csv::ReaderBuilder::new()
        .delimiter(delimiter)
        .trim(csv::Trim::All)
        .from_reader(file);
    let headers = rdr.headers().map_err(|e| Error::ParseError {
        row: 0,
        column: 0,
        message: e.to_string(),
    })?;
    Ok(headers.iter().map(str::to_string).collect())
}

fn delimiter_byte(c: char) -> Result<u8, Error> {
    u8::try_from(c)
        .ok()
        .filter(u8::is_ascii)
        .ok_or_else(|| Error::InvalidSpec(format!("delimiter {c:?} must be a single ASCII character")))
}

fn load(args: &CommonArgs) -> Result<(CenteredData, Vec<String>), Error> {
    let dataset = if args.dwaine {
        dwaine_fixture()
    } else {
        let path = args.input.clone().expect("clap enforces a source");
        let response = args
            .response
            .clone()
            .ok_or_else(|| Error::InvalidSpec("--response is required with --input".into()))?;
        let delimiter = delimiter_byte(args.delimiter)?;
        let predictors = if args.predictors.is_empty() {
            csv_header(&path, delimiter)?
                .into_iter()
                .filter(|h| *h != response)
                .collect()
        } else {
            args.predictors.clone()
        };
        let refs: Vec<&str> = predictors.iter().map(String::as_str).collect();
        load_csv(&CsvSpec::new(path, &response, &refs).with_delimiter(delimiter))?
    };
    let model = if args.model.is_empty() {
        dataset.predictor_names().to_vec()
    } else {
        args.model.clone()
    };
    Ok((mean_center(&dataset)?, model))
}

fn explicit_orders(args: &CommonArgs) -> Result<Option<Vec<Ordering>>, Error> {
    if args.orders.is_empty() {
        return Ok(None);
    }
    args.orders
        .iter()
        .map(|o| {
            let names: Vec<&str> = o.split(',').map(str::trim).collect();
            Ordering::new(&names)
        })
        .collect::<Result<Vec<_>, _>>()
        .map(Some)
}

fn no_svg(format: ReportFormat, command: &str) -> Result<(), Error> {
    if format == ReportFormat::Svg {
        return Err(Error::InvalidSpec(format!("svg output is only available for venn, not {command}")));
    }
    Ok(())
}

fn render(command: &Command) -> Result<(String, Option<PathBuf>), Error> {
    let (out, path) = match command {
        Command::Fit(a) => {
            no_svg(a.format, "fit")?;
            let (c, model) = load(a)?;
            let doc = fit_document(&c, &model)?;
            let s = match a.format {
                ReportFormat::Text => text::fit(&doc),
                ReportFormat::Json => json(&doc),
                _ => tabular::flattened(&doc),
            };
            (s, a.out.clone())
        }
        Command::Decompose(a) => {
            no_svg(a.format, "decompose")?;
            let (c, model) = load(a)?;
            let request = match explicit_orders(a)? {
                Some(list) => OrderingRequest::Explicit(list),
                None if model.len() <= MAX_EXHAUSTIVE_PREDICTORS => OrderingRequest::Exhaustive,
                None => OrderingRequest::Explicit(vec![Ordering::new(&model)?]),
            };
            let doc = decompose_document(&c, &model, &request)?;
            let s = match a.format {
                ReportFormat::Text => text::decompose(&doc),
                ReportFormat::Json => json(&doc),
                _ => tabular::flattened(&doc),
            };
            (s, a.out.clone())
        }
        Command::Orderings(a) => {
            no_svg(a.format, "orderings")?;
            let (c, model) = load(a)?;
            let request = match explicit_orders(a)? {
                Some(list) => OrderingRequest::Explicit(list),
                None => OrderingRequest::Exhaustive,
            };
            let doc = orderings_document(&c, &model, &request)?;
            let s = match a.format {
                ReportFormat::Text => text::orderings(&doc),
                ReportFormat::Json => json(&doc),
                _ => tabular::flattened(&doc),
            };
            (s, a.out.clone())
        }
        Command::Venn(a) => {
            let (c, model) = load(a)?;
            let doc = venn_document(&c, &model)?;
            let s = match a.format {
                ReportFormat::Text => text::venn(&doc),
                ReportFormat::Json => json(&doc),
                ReportFormat::Csv => tabular::venn_regions(&doc),
                ReportFormat::Svg => svg::venn_svg(&doc),
            };
            (s, a.out.clone())
        }
        Command::Synth(a) => {
            let seed = match std::env::var(SEED_ENV) {
                Ok(v) => v
                    .trim()
                    .parse()
                    .map_err(|_| Error::InvalidSpec(format!("{SEED_ENV}={v:?} is not an unsigned integer")))?,
                Err(_) => a.seed,
            };
            let spec = SyntheticSpec::equicorrelated(a.n, a.p, if a.orthogonal { 0.0 } else { a.r }, seed);
            let d = if a.orthogonal {
                generate_orthogonal(&spec)?
            } else {
                generate_synthetic(&spec)?
            };
            let mut buf = Vec::new();
            write_csv(&d, &mut buf, b',')?;
            (String::from_utf8(buf).expect("csv is utf-8"), a.out.clone())
        }
    };
    Ok((out, path))
}

fn json<T: serde::Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
    s.push('\n');
    s
}

/// Runs the CLI with explicit arguments and output streams; returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(rendered.as_bytes())
            } else {
                stdout.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    let result = render(&cli.command).and_then(|(body, path)| match path {
        Some(p) => std::fs::write(&p, body).map_err(|e| Error::Io(format!("{}: {e}", p.display()))),
        None => stdout.write_all(body.as_bytes()).map_err(Error::from),
    });
    match result {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(stderr, "varpart: error: {e}");
            exit_code(&e)
        }
    }
}
