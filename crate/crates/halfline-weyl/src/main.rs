use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use halfline_weyl::cli::{
    cmd_constants, cmd_eval, cmd_sigma, cmd_table, cmd_verify, CheckSelection, CliError,
    ConstantsRequest, EvalInput, EvalRequest, Format, Method, SigmaMethod, SigmaRequest, TimeSpec,
    VerifyRequest,
};
use halfline_weyl::ExtensionKind;

/// Weyl matrices and spectral functions of the Friedrichs and Krein
/// extensions of the half-line operator (-1)^n d^2n/dx^2n.
#[derive(Parser)]
#[command(name = "halfline-weyl", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a Weyl matrix at a spectral point or a real boundary point
    Eval(EvalArgs),
    /// Evaluate a spectral function at one threshold or over a range
    Sigma(SigmaArgs),
    /// Tabulate a spectral function over a range (CSV by default)
    Table(TableArgs),
    /// Run named self-checks and report worst residuals
    Verify(VerifyArgs),
    /// Print the cotangent products and sharp constants for an order
    Constants(ConstantsArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum ExtensionArg {
    /// Hard extension, spectral function vanishing at the origin
    Friedrichs,
    /// Soft extension, spectral density unbounded at the origin
    Krein,
}

impl From<ExtensionArg> for ExtensionKind {
    fn from(a: ExtensionArg) -> Self {
        match a {
            ExtensionArg::Friedrichs => ExtensionKind::Friedrichs,
            ExtensionArg::Krein => ExtensionKind::Krein,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    /// Closed-form entries
    Closed,
    /// Independent linear-solve route (upper half-plane only)
    Oracle,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum SigmaMethodArg {
    /// Closed-form power law
    Closed,
    /// Numerical Stieltjes inversion of the Weyl function
    Stieltjes,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

impl From<FormatArg> for Format {
    fn from(a: FormatArg) -> Self {
        match a {
            FormatArg::Json => Format::Json,
            FormatArg::Csv => Format::Csv,
        }
    }
}

#[derive(Args)]
#[command(group = clap::ArgGroup::new("point").required(true))]
struct EvalArgs {
    /// Operator order n, between 1 and 64
    #[arg(long)]
    n: u32,
    #[arg(long, value_enum)]
    extension: ExtensionArg,
    /// Real part of the spectral parameter
    #[arg(
        long,
        group = "point",
        requires = "lambda_im",
        allow_negative_numbers = true
    )]
    lambda_re: Option<f64>,
    /// Imaginary part of the spectral parameter, must be positive
    #[arg(long, requires = "lambda_re", allow_negative_numbers = true)]
    lambda_im: Option<f64>,
    /// Real axis point: evaluate the limit from the upper half-plane
    #[arg(long, group = "point", allow_negative_numbers = true)]
    x: Option<f64>,
    #[arg(long, value_enum, default_value_t = MethodArg::Closed)]
    method: MethodArg,
    #[arg(long, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,
}

#[derive(Args)]
#[command(group = clap::ArgGroup::new("threshold").required(true))]
struct SigmaArgs {
    /// Operator order n, between 1 and 64
    #[arg(long)]
    n: u32,
    #[arg(long, value_enum)]
    extension: ExtensionArg,
    /// Single threshold
    #[arg(long, group = "threshold", allow_negative_numbers = true)]
    t: Option<f64>,
    /// Range start; needs --t-end and --t-steps
    #[arg(long, group = "threshold", requires_all = ["t_end", "t_steps"], allow_negative_numbers = true)]
    t_start: Option<f64>,
    #[arg(long, requires = "t_start", allow_negative_numbers = true)]
    t_end: Option<f64>,
    /// Number of evenly spaced thresholds, endpoints included
    #[arg(long, requires = "t_start")]
    t_steps: Option<u32>,
    #[arg(long, value_enum, default_value_t = SigmaMethodArg::Closed)]
    method: SigmaMethodArg,
    /// Gauss-Legendre node count for the inversion route
    #[arg(long, default_value_t = 64)]
    nodes: usize,
    #[arg(long, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,
}

#[derive(Args)]
struct TableArgs {
    /// Operator order n, between 1 and 64
    #[arg(long)]
    n: u32,
    #[arg(long, value_enum)]
    extension: ExtensionArg,
    #[arg(long, allow_negative_numbers = true)]
    t_start: f64,
    #[arg(long, allow_negative_numbers = true)]
    t_end: f64,
    /// Number of evenly spaced thresholds, endpoints included
    #[arg(long)]
    t_steps: u32,
    #[arg(long, value_enum, default_value_t = SigmaMethodArg::Closed)]
    method: SigmaMethodArg,
    /// Gauss-Legendre node count for the inversion route
    #[arg(long, default_value_t = 64)]
    nodes: usize,
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    format: FormatArg,
}

#[derive(Args)]
struct VerifyArgs {
    /// Largest order swept by the checks (per-check caps still apply)
    #[arg(long, default_value_t = 4)]
    n_max: u32,
    /// "all" or a comma-separated subset of the check names
    #[arg(long, default_value = "all")]
    checks: String,
    /// Multiply every tolerance by this factor
    #[arg(long, default_value_t = 1.0)]
    tol_scale: f64,
    #[arg(long, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,
}

#[derive(Args)]
struct ConstantsArgs {
    /// Operator order n, between 1 and 64
    #[arg(long)]
    n: u32,
    #[arg(long, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,
}

fn run<W: Write>(command: Command, out: &mut W) -> Result<u8, CliError> {
    match command {
        Command::Eval(args) => {
            let input = match (args.lambda_re, args.lambda_im, args.x) {
                (Some(re), Some(im), None) => EvalInput::Lambda { re, im },
                (None, None, Some(x)) => EvalInput::Boundary { x },
                _ => unreachable!("the argument group admits exactly one input"),
            };
            let req = EvalRequest {
                n: args.n,
                extension: args.extension.into(),
                input,
                method: match args.method {
                    MethodArg::Closed => Method::Closed,
                    MethodArg::Oracle => Method::Oracle,
                },
                format: args.format.into(),
            };
            cmd_eval(&req, out)?;
            Ok(0)
        }
        Command::Sigma(args) => {
            let times = match (args.t, args.t_start, args.t_end, args.t_steps) {
                (Some(t), None, None, None) => TimeSpec::Single(t),
                (None, Some(start), Some(end), Some(steps)) => {
                    TimeSpec::Range { start, end, steps }
                }
                _ => unreachable!("the argument group admits exactly one threshold form"),
            };
            let req = SigmaRequest {
                n: args.n,
                extension: args.extension.into(),
                times,
                method: match args.method {
                    SigmaMethodArg::Closed => SigmaMethod::Closed,
                    SigmaMethodArg::Stieltjes => SigmaMethod::Stieltjes,
                },
                nodes: args.nodes,
                format: args.format.into(),
            };
            cmd_sigma(&req, out)?;
            Ok(0)
        }
        Command::Table(args) => {
            let req = SigmaRequest {
                n: args.n,
                extension: args.extension.into(),
                times: TimeSpec::Range {
                    start: args.t_start,
                    end: args.t_end,
                    steps: args.t_steps,
                },
                method: match args.method {
                    SigmaMethodArg::Closed => SigmaMethod::Closed,
                    SigmaMethodArg::Stieltjes => SigmaMethod::Stieltjes,
                },
                nodes: args.nodes,
                format: args.format.into(),
            };
            cmd_table(&req, out)?;
            Ok(0)
        }
        Command::Verify(args) => {
            let checks = if args.checks.trim() == "all" {
                CheckSelection::All
            } else {
                CheckSelection::Named(
                    args.checks
                        .split(',')
                        .map(|s| s.trim().to_owned())
                        .collect(),
                )
            };
            let req = VerifyRequest {
                n_max: args.n_max,
                checks,
                tol_scale: args.tol_scale,
                format: args.format.into(),
            };
            let all_passed = cmd_verify(&req, out)?;
            Ok(if all_passed { 0 } else { 1 })
        }
        Command::Constants(args) => {
            let req = ConstantsRequest {
                n: args.n,
                format: args.format.into(),
            };
            cmd_constants(&req, out)?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let outcome = run(cli.command, &mut out);
    if let Err(e) = out.flush() {
        eprintln!("output failed: {e}");
        return ExitCode::from(1);
    }
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(CliError::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_usage() { 2 } else { 1 })
        }
        Err(CliError::Io(e)) => {
            eprintln!("output failed: {e}");
            ExitCode::from(1)
        }
    }
}
