//! Command-line front end: argument surface, dispatch, and report emission.
//!
//! Exit codes: 0 success, 2 parse error (including unreadable input), 3
//! validation error, 4 unsupported field or format, 5 verification failure,
//! 1 internal error. Output is deterministic: identical inputs, flags, and
//! seed produce byte-identical output.

use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand};

use crate::error::{Error, Result};
use crate::field::{Field, FieldKind, GfElement, Rational};
use crate::hankel::{hankel_det, HankelSpec};
use crate::io::{load_matrix, InputFormat};
use crate::matrix::Matrix;
use crate::poly::Poly;
use crate::sampling::{run_verify, VerifyConfig, VerifyReport};
use crate::spectral::{
    analyze, degeneracy_test, spectral_polynomial, spectral_size, AnalysisReport,
};

/// Exact spectral analysis from traces of matrix powers.
#[derive(Debug, Parser)]
#[command(name = "trace-hankel", version, about)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the number of distinct eigenvalues.
    SpectralSize(InputArgs),
    /// Print the monic polynomial whose roots are the distinct eigenvalues,
    /// as a coefficient list with the constant term first.
    SpectralPoly(InputArgs),
    /// Print one family determinant det M_{t,l}.
    HankelDet(HankelDetArgs),
    /// Print whether the matrix is singular, decided from det M_{m,1}.
    Degenerate(InputArgs),
    /// Run the randomized exact verification sweep.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Input path, or '-' for standard input.
    pub input: String,
    /// Input format: dense | edges | mm.
    #[arg(long, default_value = "dense")]
    pub format: String,
    /// Working field: rational | gf:<prime>.
    #[arg(long, default_value = "rational")]
    pub field: String,
    /// Emit the machine-readable record instead of plain text.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct HankelDetArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Family order t (at least 1).
    #[arg(short)]
    pub t: usize,
    /// Power offset l (at least 0).
    #[arg(short, default_value_t = 0)]
    pub l: usize,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Seed for the sampling sweep.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Number of constructed spectra for the identity grid.
    #[arg(long, default_value_t = 200)]
    pub spectra: usize,
    /// Number of random integer matrices for the oracle sweep.
    #[arg(long, default_value_t = 500)]
    pub matrices: usize,
    /// Emit the machine-readable record instead of plain text.
    #[arg(long)]
    pub json: bool,
}

/// Runs one command, writing its report to `out`; returns the exit code.
pub fn run(config: &RunConfig, out: &mut dyn Write) -> i32 {
    match execute(config, out) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            exit_code(&err)
        }
    }
}

fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Parse { .. } | Error::InvalidScalar { .. } | Error::Io(_) => 2,
        Error::Validation(_) => 3,
        Error::UnsupportedFormat(_) | Error::UnsupportedField(_) => 4,
        _ => 1,
    }
}

fn execute(config: &RunConfig, out: &mut dyn Write) -> Result<i32> {
    match &config.command {
        Command::SpectralSize(args) => dispatch(args, out, SpectralSizeCmd),
        Command::SpectralPoly(args) => dispatch(args, out, SpectralPolyCmd),
        Command::Degenerate(args) => dispatch(args, out, DegenerateCmd),
        Command::HankelDet(args) => dispatch(
            &args.input,
            out,
            HankelDetCmd {
                t: args.t,
                l: args.l,
            },
        ),
        Command::Verify(args) => verify_command(args, out),
    }
}

/// A command body, generic over the working field.
trait MatrixCommand {
    fn run<K: Field>(&self, g: &Matrix<K>, args: &InputArgs, out: &mut dyn Write) -> Result<()>;
}

fn dispatch(args: &InputArgs, out: &mut dyn Write, cmd: impl MatrixCommand) -> Result<i32> {
    let text = read_source(&args.input)?;
    let format = InputFormat::parse(&args.format)?;
    match FieldKind::parse(&args.field)? {
        FieldKind::Rational => {
            let g = load_matrix::<Rational>(&text, format, ())?;
            cmd.run(&g, args, out)?;
        }
        FieldKind::Gf(p) => {
            let g = load_matrix::<GfElement>(&text, format, p)?;
            cmd.run(&g, args, out)?;
        }
    }
    Ok(0)
}

fn read_source(input: &str) -> Result<String> {
    if input == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text)?;
        Ok(text)
    } else {
        Ok(std::fs::read_to_string(input)?)
    }
}

/// Serializes an analysis report as one deterministic JSON line.
pub fn emit_report(report: &AnalysisReport) -> String {
    serde_json::to_string(report).expect("report serialization cannot fail")
}

/// Coefficient list rendering, constant term first: `[2, -3, 1]`.
fn render_coefficients<K: Field>(p: &Poly<K>) -> String {
    let inner: Vec<String> = p.coeffs().iter().map(|c| c.to_string()).collect();
    format!("[{}]", inner.join(", "))
}

struct SpectralSizeCmd;

impl MatrixCommand for SpectralSizeCmd {
    fn run<K: Field>(&self, g: &Matrix<K>, args: &InputArgs, out: &mut dyn Write) -> Result<()> {
        if args.json {
            let report = analyze(g)?;
            writeln!(out, "{}", emit_report(&report))?;
        } else {
            if let Some(note) = gf_note::<K>(g) {
                eprintln!("note: {note}");
            }
            writeln!(out, "{}", spectral_size(g))?;
        }
        Ok(())
    }
}

fn gf_note<K: Field>(g: &Matrix<K>) -> Option<String> {
    let ch = K::characteristic(g.context());
    (ch != 0).then(|| {
        format!(
            "distinct-eigenvalue count over GF({ch}) is valid only if no multiplicity \
             is divisible by {ch} and the characteristic polynomial is separable"
        )
    })
}

struct SpectralPolyCmd;

impl MatrixCommand for SpectralPolyCmd {
    fn run<K: Field>(&self, g: &Matrix<K>, args: &InputArgs, out: &mut dyn Write) -> Result<()> {
        let p = spectral_polynomial(g)?;
        if args.json {
            let report = analyze(g)?;
            writeln!(out, "{}", emit_report(&report))?;
        } else {
            writeln!(out, "{}", render_coefficients(&p))?;
        }
        Ok(())
    }
}

struct DegenerateCmd;

impl MatrixCommand for DegenerateCmd {
    fn run<K: Field>(&self, g: &Matrix<K>, args: &InputArgs, out: &mut dyn Write) -> Result<()> {
        let degenerate = degeneracy_test(g)?;
        if args.json {
            let report = analyze(g)?;
            writeln!(out, "{}", emit_report(&report))?;
        } else {
            writeln!(out, "{degenerate}")?;
        }
        Ok(())
    }
}

struct HankelDetCmd {
    t: usize,
    l: usize,
}

impl MatrixCommand for HankelDetCmd {
    fn run<K: Field>(&self, g: &Matrix<K>, args: &InputArgs, out: &mut dyn Write) -> Result<()> {
        let spec = HankelSpec::new(self.t, self.l)?;
        let det = hankel_det(g, spec);
        if args.json {
            let record = serde_json::json!({
                "t": self.t,
                "l": self.l,
                "value": det.to_string(),
            });
            writeln!(out, "{record}")?;
        } else {
            writeln!(out, "{det}")?;
        }
        Ok(())
    }
}

fn verify_command(args: &VerifyArgs, out: &mut dyn Write) -> Result<i32> {
    let report = run_verify(VerifyConfig {
        seed: args.seed,
        spectra: args.spectra,
        matrices: args.matrices,
    });
    if args.json {
        writeln!(
            out,
            "{}",
            serde_json::to_string(&report).expect("report serializes")
        )?;
    } else {
        write_verify_text(&report, out)?;
    }
    Ok(if report.passed { 0 } else { 5 })
}

fn write_verify_text(report: &VerifyReport, out: &mut dyn Write) -> Result<()> {
    writeln!(out, "seed: {}", report.seed)?;
    writeln!(
        out,
        "determinant identity checks: {}",
        report.identity_checks
    )?;
    writeln!(out, "vanishing (t > m) checks: {}", report.vanishing_checks)?;
    writeln!(out, "oracle agreement checks: {}", report.oracle_checks)?;
    for failure in &report.failures {
        writeln!(out, "FAIL [{}] {}", failure.kind, failure.detail)?;
    }
    writeln!(
        out,
        "result: {}",
        if report.passed { "PASS" } else { "FAIL" }
    )?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    fn run_to_string(config: &RunConfig) -> (String, i32) {
        let mut buf = Vec::new();
        let code = run(config, &mut buf);
        (String::from_utf8(buf).unwrap(), code)
    }

    fn parse_args(args: &[&str]) -> RunConfig {
        RunConfig::try_parse_from(args).unwrap()
    }

    #[test]
    fn cli_definition_is_consistent() {
        RunConfig::command().debug_assert();
    }

    #[test]
    fn spectral_size_on_dense_stdin_style_file() {
        let dir = std::env::temp_dir().join("trace_hankel_cli_test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("diag112.txt");
        std::fs::write(&path, "3\n1 0 0\n0 1 0\n0 0 2\n").unwrap();
        let config = parse_args(&["trace-hankel", "spectral-size", path.to_str().unwrap()]);
        let (out, code) = run_to_string(&config);
        assert_eq!(code, 0);
        assert_eq!(out, "2\n");
    }

    #[test]
    fn hankel_det_example() {
        let dir = std::env::temp_dir().join("trace_hankel_cli_test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("diag12.txt");
        std::fs::write(&path, "2\n1 0\n0 2\n").unwrap();
        let config = parse_args(&[
            "trace-hankel",
            "hankel-det",
            "-t",
            "2",
            "-l",
            "1",
            path.to_str().unwrap(),
        ]);
        let (out, code) = run_to_string(&config);
        assert_eq!(code, 0);
        assert_eq!(out, "2\n");
    }

    #[test]
    fn unknown_flags_are_rejected() {
        // Exact arithmetic admits no tolerance; the flag must not even parse.
        assert!(
            RunConfig::try_parse_from(["trace-hankel", "verify", "--tolerance", "0.1"]).is_err()
        );
    }

    #[test]
    fn render_coefficients_constant_first() {
        let p = Poly::new(vec![Rational::from_int((), 0), Rational::from_int((), 1)]);
        assert_eq!(render_coefficients(&p), "[0, 1]");
    }

    #[test]
    fn exit_codes_by_category() {
        assert_eq!(
            exit_code(&Error::Parse {
                line: 1,
                message: "x".into()
            }),
            2
        );
        assert_eq!(exit_code(&Error::Validation("x".into())), 3);
        assert_eq!(exit_code(&Error::UnsupportedFormat("x".into())), 4);
        assert_eq!(exit_code(&Error::UnsupportedField("x".into())), 4);
        assert_eq!(exit_code(&Error::InvariantViolation("x".into())), 1);
    }
}
