use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, ValueEnum};

use monodromy::pipeline::{
    emit_report, exit_code, parse_rational, run_pipeline, CurveSource, PipelineConfig, ReportFormat,
};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Structured,
}

/// Braid monodromy and the fundamental group of a plane curve complement.
#[derive(Debug, Parser)]
#[command(name = "monodromy", version, group(ArgGroup::new("input").required(true).args(["curve", "expr"])))]
struct Args {
    /// File holding the curve equation.
    #[arg(long, value_name = "FILE")]
    curve: Option<PathBuf>,
    /// Curve equation inline, e.g. "x^2 + y^2 - 1".
    #[arg(long, value_name = "TEXT")]
    expr: Option<String>,
    /// Lasso radius, a rational such as 1/256.
    #[arg(long, value_name = "Q")]
    epsilon: Option<String>,
    /// Precision ceiling in bits.
    #[arg(long, value_name = "N", default_value_t = 4096)]
    precision_bits: u32,
    /// Maximal number of cosets during enumeration.
    #[arg(long, value_name = "N", default_value_t = 1_000_000)]
    coset_bound: usize,
    /// Finite targets for epimorphism searches.
    #[arg(long, value_name = "LIST", value_delimiter = ',', default_value = "d10")]
    quotients: Vec<String>,
    /// Compute the Alexander polynomial.
    #[arg(long)]
    alexander: bool,
    /// Apply x -> x + a*y before computing.
    #[arg(long, value_name = "Q", allow_hyphen_values = true)]
    shear: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write per-lasso trajectories as JSON into this directory.
    #[arg(long, value_name = "DIR")]
    dump_trajectories: Option<PathBuf>,
    /// Cache per-lasso trajectories in this directory.
    #[arg(long, value_name = "DIR")]
    cache_dir: Option<PathBuf>,
    /// Add wall-clock timings to the report.
    #[arg(long)]
    timing: bool,
}

fn config(args: Args) -> anyhow::Result<PipelineConfig> {
    let source = match (args.curve, args.expr) {
        (Some(f), _) => CurveSource::File(f),
        (None, Some(t)) => CurveSource::Text(t),
        (None, None) => anyhow::bail!("one of --curve or --expr is required"),
    };
    let mut cfg = PipelineConfig::new(source);
    cfg.epsilon = args.epsilon.as_deref().map(parse_rational).transpose()?;
    cfg.shear = args.shear.as_deref().map(parse_rational).transpose()?;
    cfg.precision_bits = args.precision_bits;
    cfg.coset_bound = args.coset_bound;
    cfg.quotients = args.quotients.into_iter().filter(|q| !q.is_empty()).collect();
    cfg.alexander = args.alexander;
    cfg.format = match args.format {
        Format::Text => ReportFormat::Text,
        Format::Structured => ReportFormat::Structured,
    };
    cfg.dump_trajectories = args.dump_trajectories;
    cfg.cache_dir = args.cache_dir;
    cfg.timing = args.timing;
    cfg.validate()?;
    Ok(cfg)
}

fn main() -> ExitCode {
    let cfg = match config(Args::parse()) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    let result = run_pipeline(&cfg);
    let code = exit_code(&result);
    match &result {
        Ok(report) => {
            let mut out = std::io::stdout().lock();
            if out.write_all(&emit_report(report, cfg.format)).is_err() {
                return ExitCode::from(1);
            }
        }
        Err(e) => eprintln!("error: {e}"),
    }
    ExitCode::from(code as u8)
}
