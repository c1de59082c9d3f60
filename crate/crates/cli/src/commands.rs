use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};
use thiserror::Error;

use weilcert_core::certify::{run_pipeline, verify_certificate, Certificate, Verdict};
use weilcert_core::weil::{
    check_identities, coordinate_registry, det_m, eigen_decomposition, eliminate,
    fixed_point_free_check, genus_check, quadric_kernel_dim, quadric_q, verify_diagonal,
    CoefficientTriple,
};
use weilcert_core::{Rational, VariableRegistry, ZeroFreeVerdict};

use crate::parser::{parse_poly, ParseError};

#[derive(Debug, Parser)]
#[command(name = "weilcert", version, about = "Exact checks for the eigenspace, Segre relation and det M computations")]
pub struct Cli {
    /// Emit JSON using the certificate field names.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run one of the universal checks.
    Verify {
        #[arg(value_enum)]
        check: Check,
    },
    /// det M, symbolically or at a coefficient triple.
    Detm(DetmArgs),
    /// Kernel of the b-relation matrix at a coefficient triple.
    Quadric(AtArgs),
    /// Whether the curve misses the diagonal at a coefficient triple.
    Fpf(AtArgs),
    /// Run the full pipeline and emit a certificate.
    Certify {
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        max_attempts: usize,
        /// Write the certificate here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-verify a certificate file.
    Recheck {
        #[arg(long)]
        cert: PathBuf,
    },
    /// Parse a polynomial expression and print its canonical form.
    Parse {
        #[arg(long, allow_hyphen_values = true)]
        expr: String,
        /// Comma-separated variable names.
        #[arg(long, default_value = "s,t,x,y")]
        vars: String,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Check {
    Identities,
    Eigenspaces,
    Diagonal,
    Genus,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct DetmArgs {
    #[arg(long)]
    pub symbolic: bool,
    /// Nine comma-separated rationals A1,A2,A3,B1,B2,B3,C1,C2,C3.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_triple)]
    pub at: Option<CoefficientTriple>,
}

#[derive(Debug, Args)]
pub struct AtArgs {
    /// Nine comma-separated rationals A1,A2,A3,B1,B2,B3,C1,C2,C3.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_triple)]
    pub at: CoefficientTriple,
}

pub fn parse_triple(text: &str) -> Result<CoefficientTriple, String> {
    let values = text
        .split(',')
        .map(|p| Rational::from_str(p.trim()).map_err(|_| format!("`{}` is not a rational number", p.trim())))
        .collect::<Result<Vec<_>, _>>()?;
    if values.len() != 9 {
        return Err(format!("expected 9 comma-separated rationals, got {}", values.len()));
    }
    CoefficientTriple::from_slice(&values).map_err(|e| e.to_string())
}

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad input supplied by the user; exit code 2.
    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error(transparent)]
    Core(#[from] weilcert_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            Self::Usage(_) | Self::Parse(_) => 2,
            Self::Core(_) => 1,
        }
    }
}

/// Output of one subcommand.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub lines: Vec<String>,
    pub json: Value,
    pub passed: bool,
}

impl Report {
    pub fn exit_code(&self) -> u8 {
        if self.passed {
            0
        } else {
            1
        }
    }

    pub fn render(&self, as_json: bool) -> String {
        if as_json {
            serde_json::to_string_pretty(&self.json).expect("json values serialize")
        } else {
            self.lines.join("\n")
        }
    }
}

fn pass_word(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn object(pairs: Vec<(&str, Value)>) -> Value {
    Value::Object(pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect::<Map<_, _>>())
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

pub fn execute(command: &Command) -> Result<Report, CliError> {
    match command {
        Command::Verify { check } => verify(*check),
        Command::Detm(args) => match &args.at {
            Some(triple) => detm_at(triple),
            None => detm_symbolic(),
        },
        Command::Quadric(args) => quadric(&args.at),
        Command::Fpf(args) => fpf(&args.at),
        Command::Certify {
            seed,
            max_attempts,
            out,
        } => certify(*seed, *max_attempts, out.as_deref()),
        Command::Recheck { cert } => recheck(cert),
        Command::Parse { expr, vars } => parse(expr, vars),
    }
}

fn verify(check: Check) -> Result<Report, CliError> {
    Ok(match check {
        Check::Identities => {
            let checks = check_identities()?;
            let passed = checks.iter().all(|c| c.passed());
            let lines = checks
                .iter()
                .map(|c| format!("{} {}", pass_word(c.passed()), c.name))
                .collect();
            let verdicts: Vec<Value> = checks
                .iter()
                .map(|c| json!({"name": c.name, "verdict": Verdict::from_bool(c.passed())}))
                .collect();
            Report {
                lines,
                json: object(vec![("identity_verdicts", Value::Array(verdicts))]),
                passed,
            }
        }
        Check::Eigenspaces => {
            let d = eigen_decomposition()?;
            let dims = d.dims();
            let passed = dims == [6, 4, 3, 3] && d.total_rank == 16;
            let mut lines: Vec<String> = d
                .spaces
                .iter()
                .map(|s| {
                    let names: Vec<&str> = s.generators.iter().map(|(n, _)| *n).collect();
                    format!("eigenvalue {}: dim {} spanned by {}", s.eigenvalue, s.computed_dim, names.join(", "))
                })
                .collect();
            lines.push(format!("{} joint rank {}", pass_word(passed), d.total_rank));
            Report {
                lines,
                json: object(vec![("eigenspace_dims", to_value(&dims))]),
                passed,
            }
        }
        Check::Diagonal => {
            let r = verify_diagonal()?;
            let factors: Vec<String> = r.factors.iter().map(ToString::to_string).collect();
            let mut lines: Vec<String> = r
                .restricted
                .iter()
                .enumerate()
                .map(|(k, p)| format!("a{} -> {}", k + 1, p))
                .collect();
            lines.push(format!("factors {}", factors.join(", ")));
            lines.push(format!("PASS restricted forms have no common zero ({:?})", r.base_points));
            Report {
                lines,
                json: object(vec![("diagonal_factors", to_value(&factors))]),
                passed: true,
            }
        }
        Check::Genus => {
            let r = genus_check();
            Report {
                lines: vec![
                    format!("coefficient of h1*h2*h3*h4 in H^4: {}", r.top_coefficient),
                    format!("{} genus {}", pass_word(r.passed), r.genus),
                ],
                json: object(vec![
                    ("chow_coefficient", json!(r.top_coefficient)),
                    ("genus", json!(r.genus)),
                ]),
                passed: r.passed,
            }
        }
    })
}

fn detm_symbolic() -> Result<Report, CliError> {
    let elim = eliminate()?;
    let det = det_m(&elim)?;
    let at_origin = det.evaluate(&CoefficientTriple::origin().point())?;
    let passed = !det.is_zero() && at_origin == 1.into();
    Ok(Report {
        lines: vec![
            det.to_string(),
            format!("terms: {}", det.len()),
            format!("{} det M at origin = {at_origin}", pass_word(passed)),
        ],
        json: object(vec![
            ("detm_at_origin", to_value(&at_origin)),
            ("detm_term_count", json!(det.len())),
            ("detm_nonzero", json!(!det.is_zero())),
        ]),
        passed,
    })
}

fn detm_at(triple: &CoefficientTriple) -> Result<Report, CliError> {
    let elim = eliminate()?;
    let spec = elim.specialize(triple)?;
    let value = spec.m.det_bareiss()?;
    let value = value.to_rational().expect("rational triple gives a rational determinant");
    let passed = value != Rational::from_integer(0.into());
    Ok(Report {
        lines: vec![value.to_string()],
        json: object(vec![
            ("witness", to_value(triple)),
            ("witness_detm", json!(value.to_string())),
        ]),
        passed,
    })
}

fn quadric(triple: &CoefficientTriple) -> Result<Report, CliError> {
    let elim = eliminate()?;
    let spec = elim.specialize(triple)?;
    let dim = quadric_kernel_dim(&spec);
    let mut lines = vec![format!("kernel dimension: {dim}")];
    if let Ok(q) = quadric_q(&spec) {
        let parts: Vec<String> = q.iter().map(ToString::to_string).collect();
        lines.push(format!("Q: {}", parts.join(", ")));
    }
    Ok(Report {
        lines,
        json: object(vec![("witness", to_value(triple)), ("witness_kernel_dim", json!(dim))]),
        passed: dim == 1,
    })
}

fn fpf(triple: &CoefficientTriple) -> Result<Report, CliError> {
    let verdict = fixed_point_free_check(triple)?;
    Ok(Report {
        lines: vec![format!("{verdict:?}")],
        json: object(vec![("witness", to_value(triple)), ("fixed_point_free", to_value(&verdict))]),
        passed: verdict == ZeroFreeVerdict::CertifiedEmpty,
    })
}

fn certificate_report(cert: &Certificate, lines: Vec<String>) -> Report {
    Report {
        lines,
        json: to_value(cert),
        passed: cert.overall == Verdict::Pass,
    }
}

fn summary(cert: &Certificate) -> Vec<String> {
    let mut lines = vec![format!("seed {} ({} attempts)", cert.seed, cert.max_attempts)];
    match (&cert.witness, &cert.witness_detm) {
        (Some(w), Some(d)) => {
            lines.push(format!("witness {w} (attempt {})", cert.witness_attempt.unwrap_or_default()));
            lines.push(format!("det M at witness: {d}"));
        }
        _ => lines.push("no witness found".into()),
    }
    lines.push(format!("overall: {:?}", cert.overall));
    lines
}

fn certify(seed: u64, max_attempts: usize, out: Option<&std::path::Path>) -> Result<Report, CliError> {
    let cert = match run_pipeline(seed, max_attempts) {
        Ok(c) => c,
        Err(weilcert_core::Error::WitnessNotFound { certificate, .. }) => *certificate,
        Err(e) => return Err(e.into()),
    };
    let mut lines = summary(&cert);
    let text = cert.to_json()?;
    match out {
        Some(path) => {
            std::fs::write(path, text + "\n")
                .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display())))?;
            lines.push(format!("certificate written to {}", path.display()));
        }
        None => lines.push(text),
    }
    Ok(certificate_report(&cert, lines))
}

fn recheck(path: &std::path::Path) -> Result<Report, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    let cert = Certificate::from_json(&text)
        .map_err(|e| CliError::Usage(format!("{} is not a certificate: {e}", path.display())))?;
    match verify_certificate(&cert) {
        Ok(()) => {
            let mut lines = summary(&cert);
            lines.push("PASS recomputation matches the certificate".into());
            Ok(certificate_report(&cert, lines))
        }
        Err(e @ (weilcert_core::Error::Mismatch { .. } | weilcert_core::Error::MissingWitness)) => Ok(Report {
            lines: vec![format!("FAIL {e}")],
            json: json!({"overall": Verdict::Fail, "error": e.to_string()}),
            passed: false,
        }),
        Err(e) => Err(e.into()),
    }
}

fn parse(expr: &str, vars: &str) -> Result<Report, CliError> {
    let names: Vec<&str> = vars.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
    let registry = if names == ["s", "t", "x", "y"] {
        coordinate_registry().clone()
    } else {
        VariableRegistry::new(names).map_err(|e| CliError::Usage(e.to_string()))?
    };
    let p = parse_poly(expr, &registry)?;
    Ok(Report {
        lines: vec![p.to_string()],
        json: json!({"polynomial": p.to_string(), "term_count": p.len()}),
        passed: true,
    })
}
