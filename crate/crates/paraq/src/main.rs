//! Command-line front end: runs the verification suites and emits
//! human-readable or machine-readable reports.
//!
//! Exit codes: 0 when every executed check passed, 1 when any check failed,
//! 2 on usage errors. Reports are fully deterministic: identical inputs
//! produce byte-identical output.

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use paraq::cbh::{check_exp_identity, compose_theta};
use paraq::hopf::check_hopf_axioms;
use paraq::limits::{check_limits, nonlinear_target, unit_circle_commutator, TwoParamRelation};
use paraq::psi::psi_polynomials;
use paraq::rational::Rational;
use paraq::rep::{check_defining_relations, Spin};
use paraq::report::VerificationReport;
use paraq::rmatrix::{build_rmatrix, check_rmatrix_suite, format_delta_theta};

#[derive(Parser)]
#[command(
    name = "paraq",
    version,
    about = "Exact verification of nilpotent deformations of sl(2)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct OutputArgs {
    /// Output format
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Write the output to a file instead of stdout
    #[arg(long, value_name = "PATH")]
    out: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Run the defining-relation and Hopf-axiom suites over a (j, r, δ) grid
    Verify {
        /// Spin j as a half-integer string; default grid {1/2, 1, 3/2}
        #[arg(long)]
        spin: Option<String>,
        /// Truncation order r; default grid {0, 1, 2, 3}
        #[arg(long)]
        order: Option<usize>,
        /// Deformation parameter as "p/q"; default grid {1/2, 1/3}
        #[arg(long)]
        delta: Option<String>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Print the ψ_k(H) polynomials
    Psi {
        #[arg(long)]
        kmax: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Build the order-1 R-matrix on (j, j) and verify factorization,
    /// intertwiner, and Yang-Baxter
    Rmatrix {
        #[arg(long)]
        spin: String,
        #[arg(long)]
        delta: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Compose the two-variable nilpotent exponentials and check the
    /// exponential identity
    Cbh {
        #[arg(long)]
        order1: usize,
        #[arg(long)]
        order2: usize,
        #[arg(long)]
        delta1: String,
        #[arg(long)]
        delta2: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Print the nonlinear limit relation next to the finite-n commutator
    Limits {
        #[arg(long)]
        order: usize,
        /// Optional: also evaluate the two-parameter relation at this q
        #[arg(long)]
        q: Option<String>,
        /// Power r1 for the two-parameter relation (with --q)
        #[arg(long, default_value = "1")]
        order1: usize,
        /// Spin for the two-parameter evaluation (with --q)
        #[arg(long, default_value = "1/2")]
        spin: String,
        #[command(flatten)]
        output: OutputArgs,
    },
}

/// Errors that should surface as exit code 2.
struct UsageError(String);

impl From<paraq::AlgebraError> for UsageError {
    fn from(e: paraq::AlgebraError) -> Self {
        UsageError(e.to_string())
    }
}

impl From<std::io::Error> for UsageError {
    fn from(e: std::io::Error) -> Self {
        UsageError(e.to_string())
    }
}

fn parse_spin(s: &str) -> Result<Spin, UsageError> {
    Ok(s.parse::<Spin>()?)
}

fn parse_rational(s: &str) -> Result<Rational, UsageError> {
    Ok(s.parse::<Rational>()?)
}

fn emit(text: String, out: &Option<String>) -> Result<(), UsageError> {
    match out {
        None => {
            print!("{text}");
            Ok(())
        }
        Some(path) => Ok(std::fs::write(path, text)?),
    }
}

fn report_output(
    report: &VerificationReport,
    extra: Value,
    text_prefix: String,
    output: &OutputArgs,
) -> Result<bool, UsageError> {
    let passed = report.passed();
    let text = match output.format {
        Format::Text => {
            let mut t = text_prefix;
            t.push_str(&report.render_text());
            let total = report.checks.len();
            let failed = report
                .checks
                .iter()
                .filter(|c| c.status == paraq::report::Status::Fail)
                .count();
            if failed == 0 {
                let _ = writeln!(t, "all {total} checks passed");
            } else {
                let _ = writeln!(t, "{failed} of {total} checks FAILED");
            }
            t
        }
        Format::Json => {
            let mut doc = report.to_document();
            if let (Value::Object(doc_map), Value::Object(extra_map)) = (&mut doc, extra) {
                for (k, v) in extra_map {
                    doc_map.insert(k, v);
                }
            }
            let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
            s.push('\n');
            s
        }
    };
    emit(text, &output.out)?;
    Ok(passed)
}

fn cmd_verify(
    spin: Option<String>,
    order: Option<usize>,
    delta: Option<String>,
    output: &OutputArgs,
) -> Result<bool, UsageError> {
    let spins = match spin {
        Some(s) => vec![parse_spin(&s)?],
        None => vec![Spin(1), Spin(2), Spin(3)],
    };
    let orders = match order {
        Some(r) => vec![r],
        None => vec![0, 1, 2, 3],
    };
    let deltas = match delta {
        Some(d) => vec![parse_rational(&d)?],
        None => vec![Rational::new(1, 2), Rational::new(1, 3)],
    };
    let mut report = VerificationReport::new();
    for j in &spins {
        for r in &orders {
            for d in &deltas {
                report.extend(check_defining_relations(*j, d, *r));
                report.extend(check_hopf_axioms(*j, d, *r));
            }
        }
    }
    report_output(&report, json!({}), String::new(), output)
}

fn cmd_psi(kmax: usize, output: &OutputArgs) -> Result<bool, UsageError> {
    let psis = psi_polynomials(kmax);
    let text = match output.format {
        Format::Text => {
            let mut t = String::new();
            for (k, p) in psis.iter().enumerate() {
                let _ = writeln!(t, "psi_{k}(H) = {p}");
            }
            t
        }
        Format::Json => {
            let doc = json!({
                "artifact_version": env!("CARGO_PKG_VERSION"),
                "kmax": kmax,
                "polynomials": psis.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            });
            let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
            s.push('\n');
            s
        }
    };
    emit(text, &output.out)?;
    Ok(true)
}

fn cmd_rmatrix(spin: &str, delta: &str, output: &OutputArgs) -> Result<bool, UsageError> {
    let j = parse_spin(spin)?;
    let d = parse_rational(delta)?;
    let rm = build_rmatrix(j, j, &d);
    let report = check_rmatrix_suite(j, &d);
    let dim = j.dim() * j.dim();

    let entries: Vec<Vec<String>> = (0..dim)
        .map(|i| {
            (0..dim)
                .map(|k| format_delta_theta(rm.at(i, k), &d))
                .collect()
        })
        .collect();

    let mut prefix = format!("R-matrix on (j, j) = ({j}, {j}) at delta = {d}, order 1:\n");
    for row in &entries {
        let _ = writeln!(prefix, "  [{}]", row.join(", "));
    }
    report_output(&report, json!({ "rmatrix": entries }), prefix, output)
}

fn cmd_cbh(
    order1: usize,
    order2: usize,
    delta1: &str,
    delta2: &str,
    output: &OutputArgs,
) -> Result<bool, UsageError> {
    let d1 = parse_rational(delta1)?;
    let d2 = parse_rational(delta2)?;
    let theta = compose_theta(&d1, &d2, order1, order2);
    let report = check_exp_identity(&d1, &d2, order1, order2);

    let mut monomials = Vec::new();
    for a in 0..=order1 {
        for b in 0..=order2 {
            let c = theta.coeff(a, b);
            if c.is_zero() {
                continue;
            }
            let name = match (a, b) {
                (1, 0) => "θ1".to_string(),
                (0, 1) => "θ2".to_string(),
                (a, 0) => format!("θ1^{a}"),
                (0, b) => format!("θ2^{b}"),
                (1, 1) => "θ1·θ2".to_string(),
                (a, 1) => format!("θ1^{a}·θ2"),
                (1, b) => format!("θ1·θ2^{b}"),
                (a, b) => format!("θ1^{a}·θ2^{b}"),
            };
            monomials.push((name, c.to_string()));
        }
    }

    let mut prefix =
        format!("composed θ for exp({d1}·θ1)·exp({d2}·θ2) at orders ({order1}, {order2}):\n");
    for (m, c) in &monomials {
        let _ = writeln!(prefix, "  {m} : {c}");
    }
    let listed: Vec<Value> = monomials
        .iter()
        .map(|(m, c)| json!({ "monomial": m, "coefficient": c }))
        .collect();
    report_output(&report, json!({ "composed_theta": listed }), prefix, output)
}

fn cmd_limits(
    order: usize,
    q: Option<String>,
    order1: usize,
    spin: &str,
    output: &OutputArgs,
) -> Result<bool, UsageError> {
    let report = check_limits(order);
    let mut prefix = String::new();
    let mut extra = serde_json::Map::new();

    let finite = unit_circle_commutator(order);
    let _ = writeln!(
        prefix,
        "finite-n commutator at r = {order}: [J+,J-] = {finite}"
    );
    extra.insert("finite_n_commutator".into(), json!(finite.to_string()));

    if order >= 1 {
        let rel = nonlinear_target(order).expect("order >= 1");
        let _ = writeln!(
            prefix,
            "n -> ∞ limit: [J+,J-] -> {}   [H,J±] = ±2·J±",
            rel.commutator_rhs
        );
        if let Some(note) = &rel.note {
            let _ = writeln!(prefix, "  ({note})");
        }
        extra.insert(
            "limit_commutator".into(),
            json!(rel.commutator_rhs.to_string()),
        );
    } else {
        let _ = writeln!(prefix, "n -> ∞ limit undefined at r = 0");
    }

    if let Some(q) = q {
        let q = parse_rational(&q)?;
        let j = parse_spin(spin)?;
        let rel = TwoParamRelation::new(order1, &q).map_err(|e| UsageError(e.to_string()))?;
        let target = rel.diagonal_target(j);
        let values: Vec<String> = (0..j.dim()).map(|i| target.at(i, i).to_string()).collect();
        let _ = writeln!(
            prefix,
            "two-parameter relation at r1 = {order1}, q = {q}, j = {j}: diag({})",
            values.join(", ")
        );
        let _ = writeln!(
            prefix,
            "  {}  [{}]",
            rel.weight_relation(),
            rel.weight_note()
        );
        extra.insert("two_param_diagonal".into(), json!(values));
        extra.insert(
            "two_param_weight_relation".into(),
            json!(rel.weight_relation()),
        );
        extra.insert("two_param_weight_note".into(), json!(rel.weight_note()));
    }

    report_output(&report, Value::Object(extra), prefix, output)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let run: Result<bool, UsageError> = match cli.command {
        Command::Verify {
            spin,
            order,
            delta,
            output,
        } => cmd_verify(spin, order, delta, &output),
        Command::Psi { kmax, output } => cmd_psi(kmax, &output),
        Command::Rmatrix {
            spin,
            delta,
            output,
        } => cmd_rmatrix(&spin, &delta, &output),
        Command::Cbh {
            order1,
            order2,
            delta1,
            delta2,
            output,
        } => cmd_cbh(order1, order2, &delta1, &delta2, &output),
        Command::Limits {
            order,
            q,
            order1,
            spin,
            output,
        } => cmd_limits(order, q, order1, &spin, &output),
    };
    match run {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
