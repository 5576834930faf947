use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use beltrami_core::cascade::{analyze, CascadeOptions, TruncatedFactor, Verdict, DEFAULT_DEGREE_CAP};
use beltrami_core::exact::{format_rational, parse_rational};
use beltrami_core::series::verify_beltrami_cylindrical;
use beltrami_core::single::{classify_spectrum, SigmaTriple, SingleKernelReport};
use beltrami_core::suite::{harmonic_report, verify_paper_suite, SuiteConfig};
use beltrami_core::Error;
use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

/// Exact obstruction systems for Beltrami fields near critical points.
#[derive(Debug, Parser)]
#[command(name = "beltrami", version)]
struct Cli {
    /// Print the JSON report instead of a text summary.
    #[arg(long, global = true)]
    json: bool,

    /// Also write the JSON report to this file.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Resonance flags of a Hessian triple.
    Classify {
        /// Comma-separated rationals, e.g. 1,1,-3 or 1/2,2,-5.
        #[arg(long, allow_hyphen_values = true)]
        sigma: String,
    },
    /// Exact kernel of the single-degree system.
    Kernel {
        #[arg(short = 'i', long)]
        degree: u32,
        #[arg(long, allow_hyphen_values = true)]
        sigma: String,
        #[arg(long, default_value_t = DEFAULT_DEGREE_CAP)]
        max_degree: u32,
    },
    /// Window analysis at every resonant degree of a truncated factor.
    Cascade {
        /// Factor JSON: {"f0": "1", "components": {"2": <poly>, ...}}.
        #[arg(long, value_name = "PATH")]
        factor: PathBuf,
        #[arg(long, default_value_t = 3)]
        depth_zero: u32,
        #[arg(long, default_value_t = 1)]
        depth_nonzero: u32,
        /// Multiply the cubic component by this rational first.
        #[arg(long, allow_hyphen_values = true)]
        eps: Option<String>,
        #[arg(long, default_value_t = DEFAULT_DEGREE_CAP)]
        max_degree: u32,
        /// Write the cascade report to this file.
        #[arg(long, value_name = "PATH")]
        report: Option<PathBuf>,
    },
    /// Planar harmonic pairs and their lifted fields.
    VerifyHarmonic {
        #[arg(long, default_value_t = 10)]
        max_degree: u32,
    },
    /// Series check of the Bessel-type field with factor x^2 + y^2.
    VerifyBessel {
        #[arg(long, default_value_t = 30)]
        order: u32,
    },
    /// Runs every reference check.
    VerifyPaperSuite {
        /// JSON overrides for the suite parameters.
        #[arg(long, value_name = "PATH")]
        config: Option<PathBuf>,
    },
}

#[derive(Debug, Serialize)]
struct RunReport {
    command: String,
    inputs: Value,
    results: Value,
    artifact_version: String,
}

/// A finished command: its report, a text summary and the exit code.
struct Outcome {
    report: RunReport,
    summary: String,
    code: u8,
}

/// Invalid input or a refused request; exit code 2.
#[derive(Debug)]
struct Usage(String);

impl From<Error> for Usage {
    fn from(e: Error) -> Self {
        Usage(e.to_string())
    }
}

fn report(command: &str, inputs: Value, results: impl Serialize) -> RunReport {
    RunReport {
        command: command.to_string(),
        inputs,
        results: serde_json::to_value(results).expect("serializable results"),
        artifact_version: env!("CARGO_PKG_VERSION").to_string(),
    }
}

fn read_file(path: &Path) -> Result<String, Usage> {
    fs::read_to_string(path).map_err(|e| Usage(format!("cannot read {}: {e}", path.display())))
}

fn to_json(value: &impl Serialize) -> String {
    serde_json::to_string_pretty(value).expect("serializable report") + "\n"
}

fn write_file(path: &Path, contents: &str) -> Result<(), Usage> {
    fs::write(path, contents).map_err(|e| Usage(format!("cannot write {}: {e}", path.display())))
}

fn run_classify(sigma: &str) -> Result<Outcome, Usage> {
    let s = SigmaTriple::parse(sigma)?;
    let c = classify_spectrum(&s);
    let summary = format!(
        "sigma {s}: same_sign={} plus_minus_pair={} trace_zero={} resonant_pair_degree={} risky_degrees={:?}",
        c.same_sign,
        c.plus_minus_pair,
        c.trace_zero,
        c.resonant_pair_degree.map_or("none".to_string(), |i| i.to_string()),
        c.risky_degrees
    );
    Ok(Outcome { report: report("classify", json!({ "sigma": s }), c), summary, code: 0 })
}

fn run_kernel(degree: u32, sigma: &str, max_degree: u32) -> Result<Outcome, Usage> {
    let s = SigmaTriple::parse(sigma)?;
    if degree > max_degree {
        return Err(Error::DegreeCapExceeded { requested: degree, cap: max_degree }.into());
    }
    let k = SingleKernelReport::compute(degree, &s);
    let mut summary = format!("degree {degree}, sigma {s}: kernel dimension {}", k.dimension);
    for x in &k.basis {
        summary.push_str(&format!("\n  {x}"));
    }
    let inputs = json!({ "degree": degree, "sigma": s, "max_degree": max_degree });
    Ok(Outcome { report: report("kernel", inputs, k), summary, code: 0 })
}

fn run_cascade(
    factor: &Path,
    options: CascadeOptions,
    eps: Option<&str>,
    report_path: Option<&Path>,
) -> Result<Outcome, Usage> {
    let text = read_file(factor)?;
    let mut f: TruncatedFactor =
        serde_json::from_str(&text).map_err(|e| Usage(format!("malformed factor: {e}")))?;
    let eps = eps.map(parse_rational).transpose()?;
    if let Some(e) = &eps {
        f = f.with_scaled_cubic(e)?;
    }
    let r = analyze(&f, &options)?;
    let code = match r.verdict {
        Verdict::TrivialOnly => 0,
        Verdict::ObstructionInconclusive => 1,
    };
    let mut summary = format!("sigma {}: verdict {:?}", r.sigma, r.verdict);
    if r.risky.is_empty() {
        summary.push_str("\n  no resonant degrees");
    }
    for w in &r.risky {
        summary.push_str(&format!(
            "\n  degree {} depth {}: window kernel {}, first-block projection {}",
            w.degree, w.depth, w.window_kernel_dim, w.projection_dim
        ));
    }
    if let Some(path) = report_path {
        write_file(path, &to_json(&r))?;
    }
    let inputs = json!({
        "factor": f,
        "depth_zero": options.depth_zero,
        "depth_nonzero": options.depth_nonzero,
        "eps": eps.as_ref().map(format_rational),
        "max_degree": options.degree_cap,
    });
    Ok(Outcome { report: report("cascade", inputs, r), summary, code })
}

fn run_verify_harmonic(max_degree: u32) -> Result<Outcome, Usage> {
    if max_degree > DEFAULT_DEGREE_CAP {
        return Err(Error::DegreeCapExceeded { requested: max_degree, cap: DEFAULT_DEGREE_CAP }.into());
    }
    let rows = harmonic_report(max_degree);
    let ok = rows.iter().all(|r| r.ok());
    let mut summary = String::new();
    for r in &rows {
        summary.push_str(&format!(
            "degree {}: re = {}, im = {}, {}\n",
            r.degree,
            r.re_part,
            r.im_part,
            if r.ok() { "ok" } else { "FAILED" }
        ));
    }
    summary.push_str(if ok { "all degrees ok" } else { "some degrees failed" });
    let results = json!({ "all_ok": ok, "degrees": rows });
    Ok(Outcome {
        report: report("verify-harmonic", json!({ "max_degree": max_degree }), results),
        summary,
        code: if ok { 0 } else { 1 },
    })
}

fn run_verify_bessel(order: u32) -> Result<Outcome, Usage> {
    let r = verify_beltrami_cylindrical(order)?;
    let ok = r.all_ok();
    let summary = format!(
        "order {}: recurrence={} bessel_match={} cylindrical={} cartesian={} critical_axis={} first_integral={}",
        r.order,
        r.recurrence_ok,
        r.bessel_match_ok,
        r.cylindrical_ok,
        r.cartesian_ok,
        r.critical_axis_ok,
        r.first_integral_ok
    );
    Ok(Outcome {
        report: report("verify-bessel", json!({ "order": order }), r),
        summary,
        code: if ok { 0 } else { 1 },
    })
}

fn run_verify_suite(config: Option<&Path>) -> Result<Outcome, Usage> {
    let cfg = match config {
        Some(path) => serde_json::from_str(&read_file(path)?)
            .map_err(|e| Usage(format!("malformed suite config: {e}")))?,
        None => SuiteConfig::default(),
    };
    let r = verify_paper_suite(&cfg);
    let mut summary = String::new();
    for c in &r.checks {
        let status = if c.passed { "pass" } else { "FAIL" };
        summary.push_str(&format!("{status} {}: {}\n", c.name, c.detail));
    }
    summary.push_str(&format!("{} passed, {} failed", r.passed, r.failed));
    let code = if r.all_passed() { 0 } else { 1 };
    let inputs = json!({ "config": config.map(|p| p.display().to_string()) });
    Ok(Outcome { report: report("verify-paper-suite", inputs, &r), summary, code })
}

fn run(cli: &Cli) -> Result<Outcome, Usage> {
    match &cli.command {
        Command::Classify { sigma } => run_classify(sigma),
        Command::Kernel { degree, sigma, max_degree } => run_kernel(*degree, sigma, *max_degree),
        Command::Cascade { factor, depth_zero, depth_nonzero, eps, max_degree, report } => run_cascade(
            factor,
            CascadeOptions {
                depth_zero: *depth_zero,
                depth_nonzero: *depth_nonzero,
                degree_cap: *max_degree,
            },
            eps.as_deref(),
            report.as_deref(),
        ),
        Command::VerifyHarmonic { max_degree } => run_verify_harmonic(*max_degree),
        Command::VerifyBessel { order } => run_verify_bessel(*order),
        Command::VerifyPaperSuite { config } => run_verify_suite(config.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match run(&cli) {
        Ok(o) => o,
        Err(Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    let json = to_json(&outcome.report);
    if let Some(path) = &cli.out {
        if let Err(Usage(msg)) = write_file(path, &json) {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    }
    if cli.json {
        print!("{json}");
    } else {
        println!("{}", outcome.summary);
    }
    if outcome.code == 1 {
        if let Some(failed) = outcome.report.results.get("checks").and_then(Value::as_array) {
            for c in failed.iter().filter(|c| c["passed"] == Value::Bool(false)) {
                eprintln!("failed check: {}", c["name"].as_str().unwrap_or("?"));
            }
        }
    }
    ExitCode::from(outcome.code)
}
