use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use compactor::compact::{GreedyConfig, OracleLimits, Orientation};
use compactor::model::{Method, TieStrategy};
use compactor::report::{compact_and_emit, oracle_for_spec, probe_split, RunError};
use compactor::transform::flatten;
use compactor::{parse_spec, CompactionSpec};

const EXIT_FAILURE: u8 = 1;
const EXIT_IO: u8 = 3;
const EXIT_SPEC: u8 = 4;
const EXIT_VERIFY: u8 = 5;

#[derive(Parser)]
#[command(
    name = "compactor",
    version,
    about = "Pack read-only C arrays into one shared byte array"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Strategy {
    First,
    Last,
    Random,
}

#[derive(Subcommand)]
enum Command {
    /// Compact a spec and write C source.
    Compact {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Also write the uncompacted arrays.
        #[arg(long)]
        reference: Option<PathBuf>,
        /// Write a JSON size and timing report.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Comma-separated: remove_subarrays, greedy, reverse, lossy, mapping.
        #[arg(long, value_delimiter = ',')]
        methods: Option<Vec<String>>,
        #[arg(long, value_enum)]
        strategy: Option<Strategy>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        lossy_threshold: Option<f64>,
        #[arg(long)]
        var_name: Option<String>,
        #[arg(long = "static")]
        emit_static: bool,
        #[arg(long = "const", conflicts_with = "no_const")]
        emit_const: bool,
        #[arg(long)]
        no_const: bool,
        /// Size reached by another tool, recorded in the report (NAME=BYTES).
        #[arg(long, value_parser = parse_comparison)]
        compare: Vec<(String, f64)>,
        #[arg(long)]
        parallel: bool,
    },
    /// Compare the greedy result with the exact shortest superstring.
    Oracle {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = OracleLimits::default().max_segments)]
        max_segments: usize,
        #[arg(long, default_value_t = OracleLimits::default().max_len)]
        max_len: usize,
    },
    /// Estimate the compacted size if every row were split into pieces.
    ProbeSplit {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        parts: usize,
    },
}

fn parse_comparison(s: &str) -> Result<(String, f64), String> {
    let (name, value) = s.split_once('=').ok_or("expected NAME=BYTES")?;
    let value = value.parse::<f64>().map_err(|e| e.to_string())?;
    Ok((name.to_string(), value))
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Self {
            code,
            message: message.into(),
        }
    }
}

impl From<RunError> for Failure {
    fn from(e: RunError) -> Self {
        let code = match e {
            RunError::Verify(_) => EXIT_VERIFY,
            _ => EXIT_FAILURE,
        };
        Failure::new(code, e.to_string())
    }
}

fn load(path: &Path) -> Result<CompactionSpec, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::new(EXIT_IO, format!("{}: {e}", path.display())))?;
    parse_spec(&text).map_err(|e| Failure::new(EXIT_SPEC, format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::new(EXIT_IO, format!("{}: {e}", path.display())))
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Compact {
            input,
            out,
            reference,
            report,
            methods,
            strategy,
            seed,
            lossy_threshold,
            var_name,
            emit_static,
            emit_const,
            no_const,
            compare,
            parallel,
        } => {
            let mut spec = load(&input)?;
            let o = &mut spec.options;
            if let Some(names) = methods {
                o.methods = names
                    .iter()
                    .map(|n| {
                        Method::parse(n.trim()).ok_or_else(|| Failure::new(EXIT_SPEC, format!("unknown method `{n}`")))
                    })
                    .collect::<Result<_, _>>()?;
            }
            if let Some(s) = strategy {
                o.tie_strategy = match s {
                    Strategy::First => TieStrategy::First,
                    Strategy::Last => TieStrategy::Last,
                    Strategy::Random => TieStrategy::Random,
                };
            }
            if seed.is_some() {
                o.seed = seed;
            }
            if lossy_threshold.is_some() {
                o.lossy_threshold = lossy_threshold;
            }
            if let Some(name) = var_name {
                o.var_name = name;
            }
            o.emit_static |= emit_static;
            if emit_const {
                o.emit_const = true;
            }
            if no_const {
                o.emit_const = false;
            }
            spec.validate().map_err(|e| Failure::new(EXIT_SPEC, e.to_string()))?;

            let mut output = compact_and_emit(&spec, parallel, reference.is_some())?;
            output.report.comparisons.extend(compare);
            write(&out, &output.unit.source)?;
            if let (Some(path), Some(text)) = (&reference, &output.reference) {
                write(path, text)?;
            }
            if let Some(path) = &report {
                write(path, &output.report.to_json())?;
            }
            let r = &output.report;
            println!(
                "{} -> {} bytes ({:.2}%), pointer overhead {} bytes",
                r.input_bytes, r.output_bytes, r.ratio_percent, r.pointer_overhead_bytes
            );
        }
        Command::Oracle {
            input,
            max_segments,
            max_len,
        } => {
            let spec = load(&input)?;
            let limits = OracleLimits { max_segments, max_len };
            let r = oracle_for_spec(&spec, limits).map_err(|e| Failure::new(EXIT_FAILURE, e.to_string()))?;
            println!(
                "greedy: {}\noptimal: {}\nratio: {:.3}",
                r.greedy_len, r.optimal_len, r.ratio
            );
        }
        Command::ProbeSplit { input, parts } => {
            let spec = load(&input)?;
            let cfg = GreedyConfig {
                strategy: spec.options.tie_strategy,
                seed: spec.options.seed.unwrap_or(0),
                orientation: if spec.options.has(Method::Reverse) {
                    Orientation::WithReversal
                } else {
                    Orientation::Forward
                },
                parallel: false,
            };
            let segments = flatten(&spec.arrays, &spec.platform);
            let probe = probe_split(&segments, parts, &cfg).map_err(|e| Failure::new(EXIT_FAILURE, e.to_string()))?;
            println!(
                "unsplit: {} bytes\nsplit into {}: {} bytes ({} distinct pieces)",
                probe.unsplit_bytes, probe.parts, probe.split_bytes, probe.pieces
            );
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
