use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qfact::certify::{DEFAULT_COEFF_BOUND, DEFAULT_SAMPLES, DEFAULT_SEED};
use qfact::formats::{parse_polynomial_file, parse_polynomial_text, parse_polytope_json};
use qfact::{certify, emit_report, CertificationReport, CertificationRequest, Format, Source};

#[derive(Parser)]
#[command(
    name = "qfact",
    version,
    about = "Certify Q-factoriality of Laurent rings in three variables"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Test the surjectivity criterion for a polynomial or a Newton polytope.
    Check(CheckArgs),
}

#[derive(Args)]
#[command(group = clap::ArgGroup::new("input").required(true).multiple(false))]
struct CheckArgs {
    /// Polynomial file: JSON or Laurent text in x, y, z.
    #[arg(long, group = "input", value_name = "FILE")]
    poly: Option<PathBuf>,
    /// Polynomial as Laurent text, e.g. "1 + x^4 + y^4 + z^4".
    #[arg(
        long = "poly-str",
        group = "input",
        value_name = "STRING",
        allow_hyphen_values = true
    )]
    poly_str: Option<String>,
    /// Polytope JSON file: {"vertices": [[i, j, k], ...]}.
    #[arg(long, group = "input", value_name = "FILE")]
    polytope: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Number of sampled coefficient vectors to try.
    #[arg(long, default_value_t = DEFAULT_SAMPLES, value_parser = clap::value_parser!(u32).range(1..))]
    samples: u32,
    /// Sampled coefficients are drawn from [-B, B] without zero.
    #[arg(long = "coeff-bound", default_value_t = DEFAULT_COEFF_BOUND, value_parser = clap::value_parser!(u32).range(1..))]
    coeff_bound: u32,
    /// Test the supplied coefficients instead of sampling.
    #[arg(long = "use-input-coeffs")]
    use_input_coeffs: bool,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,
    /// Write the report here instead of stdout.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Json,
    Text,
}

fn read(path: &Path) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))
}

fn source(args: &CheckArgs) -> Result<Source, String> {
    let parsed = if let Some(p) = &args.poly {
        parse_polynomial_file(&read(p)?)
    } else if let Some(s) = &args.poly_str {
        parse_polynomial_text(s)
    } else if let Some(p) = &args.polytope {
        parse_polytope_json(&read(p)?)
    } else {
        unreachable!("clap requires one input")
    };
    parsed.map_err(|e| e.to_string())
}

fn check(args: CheckArgs) -> ExitCode {
    let report = match source(&args) {
        Ok(source) => certify(&CertificationRequest {
            source,
            seed: args.seed,
            samples: args.samples,
            coeff_bound: args.coeff_bound,
            use_input_coeffs: args.use_input_coeffs,
        }),
        Err(why) => CertificationReport::error(why),
    };
    let format = match args.format {
        OutputFormat::Json => Format::Json,
        OutputFormat::Text => Format::Text,
    };
    let text = emit_report(&report, format);
    match &args.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("qfact: cannot write {}: {e}", path.display());
                return ExitCode::from(1);
            }
        }
        None => print!("{text}"),
    }
    ExitCode::from(report.exit_code() as u8)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // usage errors must not collide with the INCONCLUSIVE exit code
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match cli.command {
        Command::Check(args) => check(args),
    }
}
