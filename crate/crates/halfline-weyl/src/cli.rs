//! Request handling and serialization for the command-line binary.
//!
//! Everything the binary prints flows through here so that output is
//! testable without spawning a process. Floats are serialized with 17
//! significant digits in both JSON and CSV, which round-trips every f64
//! exactly; records carry a `meta` block naming the tool version and the
//! branch convention so a stored result can always be reinterpreted.

use std::io::{self, Write};

use serde::{Deserialize, Serialize};
use serde_json::ser::Formatter;

use crate::branch::{cotangent_products, Order, UpperHalfPoint};
use crate::error::{Error, Result as DomainResult};
use crate::matrix::{ComplexMatrix, SpectralMatrix};
use crate::oracle::{oracle_weyl, ORACLE_RELIABLE_MAX_ORDER};
use crate::spectral::{sigma_closed_form, stieltjes_invert, QuadratureConfig};
use crate::verify::{run_selected, VerificationReport, Witness, CHECK_NAMES};
use crate::weyl::{sharp_constants, weyl_boundary, weyl_closed_form, ExtensionKind};

/// The square root taken of -lambda is the one with argument in
/// (-pi/2n, 0); equivalently arg(-lambda) is read in (-pi, 0).
pub const BRANCH_CONVENTION: &str = "arg(-lambda) in (-pi, 0)";

pub const CSV_HEADER: &str = "n,extension,input_kind,input_re,input_im,j,k,value_re,value_im";
pub const CONSTANTS_CSV_HEADER: &str = "n,quantity,j,value";
pub const VERIFY_CSV_HEADER: &str =
    "check,passed,worst_residual,tolerance,normalization,evaluations,witness";

/// Provenance block attached to every emitted record.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct Meta {
    pub tool_version: String,
    pub branch_convention: String,
}

impl Meta {
    pub fn current() -> Self {
        Meta {
            tool_version: env!("CARGO_PKG_VERSION").to_owned(),
            branch_convention: BRANCH_CONVENTION.to_owned(),
        }
    }
}

#[derive(Clone, Copy, Debug, Serialize, Deserialize, PartialEq)]
pub struct LambdaRepr {
    pub re: f64,
    pub im: f64,
}

/// Where a matrix was evaluated. Serialized untagged: the field name alone
/// ("lambda", "x" or "t") identifies the variant.
#[derive(Clone, Copy, Debug, Serialize, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum InputPoint {
    Lambda { lambda: LambdaRepr },
    Boundary { x: f64 },
    Time { t: f64 },
}

/// Dense matrix as nested rows. The imaginary block is omitted entirely
/// when every entry is exactly zero, which is the case for all spectral
/// function output and for boundary values on the negative axis.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct MatrixRepr {
    pub re: Vec<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub im: Option<Vec<Vec<f64>>>,
}

impl MatrixRepr {
    pub fn from_complex(m: &ComplexMatrix) -> Self {
        let dim = m.dim();
        let re = (0..dim)
            .map(|j| (0..dim).map(|k| m[(j, k)].re).collect())
            .collect();
        let any_imag = (0..dim).any(|j| (0..dim).any(|k| m[(j, k)].im != 0.0));
        let im = any_imag.then(|| {
            (0..dim)
                .map(|j| (0..dim).map(|k| m[(j, k)].im).collect())
                .collect()
        });
        MatrixRepr { re, im }
    }

    pub fn from_spectral(m: &SpectralMatrix) -> Self {
        let dim = m.dim();
        MatrixRepr {
            re: (0..dim)
                .map(|j| (0..dim).map(|k| m[(j, k)]).collect())
                .collect(),
            im: None,
        }
    }

    pub fn dim(&self) -> usize {
        self.re.len()
    }

    pub fn value_im(&self, j: usize, k: usize) -> f64 {
        self.im.as_ref().map_or(0.0, |rows| rows[j][k])
    }
}

/// One evaluated matrix with its full evaluation context.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct OutputRecord {
    pub n: u32,
    pub extension: String,
    pub input: InputPoint,
    pub matrix: MatrixRepr,
    pub meta: Meta,
}

/// Constant tables for one order.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct ConstantsRecord {
    pub n: u32,
    pub cotangent_products: Vec<f64>,
    pub sharp_constants: Vec<f64>,
    pub meta: Meta,
}

/// 17 significant digits: enough to reproduce the exact f64 on parse.
struct Sig17;

impl Formatter for Sig17 {
    fn write_f64<W>(&mut self, writer: &mut W, value: f64) -> io::Result<()>
    where
        W: ?Sized + io::Write,
    {
        write!(writer, "{value:.16e}")
    }
}

/// Format a float for CSV cells, same convention as the JSON output.
pub fn fmt_f64(value: f64) -> String {
    format!("{value:.16e}")
}

/// Serialize any value to a single JSON line with full-precision floats.
pub fn json_line<T: Serialize>(value: &T) -> String {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, Sig17);
    value
        .serialize(&mut ser)
        .expect("serialization to memory only fails on non-string map keys");
    String::from_utf8(buf).expect("serde_json output is UTF-8")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Closed,
    Oracle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SigmaMethod {
    Closed,
    Stieltjes,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum EvalInput {
    Lambda { re: f64, im: f64 },
    Boundary { x: f64 },
}

pub struct EvalRequest {
    pub n: u32,
    pub extension: ExtensionKind,
    pub input: EvalInput,
    pub method: Method,
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum TimeSpec {
    Single(f64),
    Range { start: f64, end: f64, steps: u32 },
}

pub struct SigmaRequest {
    pub n: u32,
    pub extension: ExtensionKind,
    pub times: TimeSpec,
    pub method: SigmaMethod,
    pub nodes: usize,
    pub format: Format,
}

pub enum CheckSelection {
    All,
    Named(Vec<String>),
}

pub struct VerifyRequest {
    pub n_max: u32,
    pub checks: CheckSelection,
    pub tol_scale: f64,
    pub format: Format,
}

pub struct ConstantsRequest {
    pub n: u32,
    pub format: Format,
}

/// Command failures: a domain error from the library or an output failure.
#[derive(Debug)]
pub enum CliError {
    Domain(Error),
    Io(io::Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Domain(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Domain(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "output failed: {e}"),
        }
    }
}

impl std::error::Error for CliError {}

fn write_matrix_rows<W: Write>(record: &OutputRecord, out: &mut W) -> io::Result<()> {
    let (kind, input_re, input_im) = match &record.input {
        InputPoint::Lambda { lambda } => ("lambda", fmt_f64(lambda.re), fmt_f64(lambda.im)),
        InputPoint::Boundary { x } => ("x", fmt_f64(*x), String::new()),
        InputPoint::Time { t } => ("t", fmt_f64(*t), String::new()),
    };
    for j in 0..record.matrix.dim() {
        for k in 0..record.matrix.dim() {
            writeln!(
                out,
                "{},{},{},{},{},{},{},{},{}",
                record.n,
                record.extension,
                kind,
                input_re,
                input_im,
                j,
                k,
                fmt_f64(record.matrix.re[j][k]),
                fmt_f64(record.matrix.value_im(j, k)),
            )?;
        }
    }
    Ok(())
}

fn emit_record<W: Write>(record: &OutputRecord, format: Format, out: &mut W) -> io::Result<()> {
    match format {
        Format::Json => writeln!(out, "{}", json_line(record)),
        Format::Csv => {
            writeln!(out, "{CSV_HEADER}")?;
            write_matrix_rows(record, out)
        }
    }
}

/// Evaluate one Weyl matrix, at a spectral parameter or on the boundary.
pub fn cmd_eval<W: Write>(req: &EvalRequest, out: &mut W) -> Result<(), CliError> {
    let n = Order::new(req.n)?;
    let (input, matrix) = match req.input {
        EvalInput::Lambda { re, im } => {
            let lambda = UpperHalfPoint::from_cartesian(re, im)?;
            let m = match req.method {
                Method::Closed => weyl_closed_form(n, req.extension, lambda),
                Method::Oracle => {
                    let eval = oracle_weyl(n, req.extension, lambda)?;
                    if eval.conditioning_warning {
                        eprintln!(
                            "warning: the solve route is well-conditioned only up to \
                             n = {ORACLE_RELIABLE_MAX_ORDER}; treat n = {} output as indicative",
                            req.n
                        );
                    }
                    eval.matrix
                }
            };
            (
                InputPoint::Lambda {
                    lambda: LambdaRepr { re, im },
                },
                MatrixRepr::from_complex(&m),
            )
        }
        EvalInput::Boundary { x } => {
            // the solve route needs a genuine interior point
            if req.method == Method::Oracle {
                return Err(Error::NotUpperHalfPlane { re: x, im: 0.0 }.into());
            }
            let m = weyl_boundary(n, req.extension, x)?;
            (InputPoint::Boundary { x }, MatrixRepr::from_complex(&m))
        }
    };
    let record = OutputRecord {
        n: req.n,
        extension: req.extension.to_string(),
        input,
        matrix,
        meta: Meta::current(),
    };
    emit_record(&record, req.format, out)?;
    Ok(())
}

fn expand_times(spec: &TimeSpec) -> DomainResult<Vec<f64>> {
    match *spec {
        TimeSpec::Single(t) => Ok(vec![t]),
        TimeSpec::Range { start, end, steps } => {
            if steps == 0 {
                return Err(Error::EmptyRange { steps });
            }
            if !(start <= end) {
                return Err(Error::BackwardsInterval { t1: start, t2: end });
            }
            if steps == 1 {
                return Ok(vec![start]);
            }
            let h = (end - start) / (steps - 1) as f64;
            Ok((0..steps).map(|i| start + h * i as f64).collect())
        }
    }
}

/// Evaluate a spectral function at one threshold or along a range.
pub fn cmd_sigma<W: Write>(req: &SigmaRequest, out: &mut W) -> Result<(), CliError> {
    let n = Order::new(req.n)?;
    let ts = expand_times(&req.times)?;
    let cfg = QuadratureConfig::new(req.nodes)?;
    if req.format == Format::Csv {
        writeln!(out, "{CSV_HEADER}")?;
    }
    for &t in &ts {
        let m = match req.method {
            SigmaMethod::Closed => sigma_closed_form(n, req.extension, t),
            SigmaMethod::Stieltjes => stieltjes_invert(n, req.extension, t, &cfg),
        };
        let record = OutputRecord {
            n: req.n,
            extension: req.extension.to_string(),
            input: InputPoint::Time { t },
            matrix: MatrixRepr::from_spectral(&m),
            meta: Meta::current(),
        };
        match req.format {
            Format::Json => writeln!(out, "{}", json_line(&record))?,
            Format::Csv => write_matrix_rows(&record, out)?,
        }
    }
    Ok(())
}

/// Tabulation is the sigma command restricted to a range; one shared path.
pub fn cmd_table<W: Write>(req: &SigmaRequest, out: &mut W) -> Result<(), CliError> {
    cmd_sigma(req, out)
}

fn witness_compact(witness: &Option<Witness>) -> String {
    let Some(w) = witness else {
        return String::new();
    };
    // no commas: the whole witness is one CSV cell
    let mut parts = vec![format!("n={}", w.n)];
    if let Some(ext) = &w.extension {
        parts.push(format!("ext={ext}"));
    }
    if let Some((re, im)) = w.lambda {
        parts.push(format!("lambda=({} {})", fmt_f64(re), fmt_f64(im)));
    }
    if let Some(t) = w.t {
        parts.push(format!("t={}", fmt_f64(t)));
    }
    if let Some((j, k)) = w.entry {
        parts.push(format!("entry=({j} {k})"));
    }
    parts.join(" ")
}

fn write_report_csv<W: Write>(report: &VerificationReport, out: &mut W) -> io::Result<()> {
    writeln!(
        out,
        "{},{},{},{},{},{},{}",
        report.check,
        report.passed,
        fmt_f64(report.worst_residual),
        fmt_f64(report.tolerance),
        report.normalization,
        report.evaluations,
        witness_compact(&report.witness),
    )
}

/// Run the selected checks; returns whether everything passed.
pub fn cmd_verify<W: Write>(req: &VerifyRequest, out: &mut W) -> Result<bool, CliError> {
    let names: Vec<&str> = match &req.checks {
        CheckSelection::All => CHECK_NAMES.to_vec(),
        CheckSelection::Named(list) => list.iter().map(String::as_str).collect(),
    };
    let reports = run_selected(&names, req.n_max, req.tol_scale)?;
    match req.format {
        Format::Json => {
            for report in &reports {
                writeln!(out, "{}", json_line(report))?;
            }
        }
        Format::Csv => {
            writeln!(out, "{VERIFY_CSV_HEADER}")?;
            for report in &reports {
                write_report_csv(report, out)?;
            }
        }
    }
    Ok(reports.iter().all(|r| r.passed))
}

/// Print the cotangent products and sharp constants for one order.
pub fn cmd_constants<W: Write>(req: &ConstantsRequest, out: &mut W) -> Result<(), CliError> {
    let n = Order::new(req.n)?;
    let record = ConstantsRecord {
        n: req.n,
        cotangent_products: cotangent_products(n),
        sharp_constants: sharp_constants(n),
        meta: Meta::current(),
    };
    match req.format {
        Format::Json => writeln!(out, "{}", json_line(&record))?,
        Format::Csv => {
            writeln!(out, "{CONSTANTS_CSV_HEADER}")?;
            for (j, v) in record.cotangent_products.iter().enumerate() {
                writeln!(out, "{},cotangent_product,{},{}", req.n, j, fmt_f64(*v))?;
            }
            for (j, v) in record.sharp_constants.iter().enumerate() {
                writeln!(out, "{},sharp_constant,{},{}", req.n, j, fmt_f64(*v))?;
            }
        }
    }
    Ok(())
}
