//! `itheta`: evaluate the theta/eta/Phi_1 building blocks and the indefinite
//! families, emit exact q-expansions, export the S/T matrices, and run the
//! verification suites.
//!
//! Exit codes: 0 success, 1 failing verification case, 2 domain error,
//! 3 pole proximity, 4 truncation budget exceeded.

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;
use num_rational::Ratio;

use indefinite_theta::error::{Error, Result};
use indefinite_theta::family::{self, FamilyIndex, TorsorShift};
use indefinite_theta::modular;
use indefinite_theta::numerics::TruncationBudget;
use indefinite_theta::phi::{phi1_eval, PhiParams};
use indefinite_theta::qkernels;
use indefinite_theta::suites::{run_suite, Suite, SuiteConfig};
use indefinite_theta::theta::{
    eta_eval, mumford_eval, theta_eval, MumfordKind, ThetaIndex, ThetaSign,
};

#[derive(Parser)]
#[command(
    name = "itheta",
    version,
    about = "indefinite theta family evaluator and verifier"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a function numerically at (tau, z).
    Eval(EvalArgs),
    /// Emit an exact q-expansion.
    Qexp(QexpArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Export an S or T transformation matrix.
    Matrix(MatrixArgs),
}

#[derive(Args)]
struct EvalArgs {
    /// theta | eta | mumford | phi | g | h | bigg | biggq | f
    function: String,
    /// Half-integer like 3/2, or an integer
    #[arg(long, default_value = "1")]
    m: String,
    /// Characteristic n (half-integer for theta, integer for the families)
    #[arg(long, default_value = "0")]
    n: String,
    #[arg(long, default_value = "0")]
    nu: i64,
    #[arg(long, default_value = "0")]
    a: i64,
    #[arg(long, default_value = "0")]
    b: i64,
    /// Shift s of Phi_1 (half-integer)
    #[arg(long, default_value = "0")]
    s: String,
    /// Sign variant: plus | minus
    #[arg(long, default_value = "plus")]
    sign: String,
    /// Mumford kind: 00 | 01 | 10 | 11
    #[arg(long, default_value = "00")]
    kind: String,
    /// Point tau as re,im
    #[arg(long)]
    tau: String,
    /// Elliptic variable z as re,im
    #[arg(long, default_value = "0,0")]
    z: String,
    /// First elliptic variable of Phi_1
    #[arg(long, default_value = "0,0")]
    z1: String,
    /// Second elliptic variable of Phi_1
    #[arg(long, default_value = "0,0")]
    z2: String,
}

#[derive(Args)]
struct QexpArgs {
    /// eta | theta | mumford | g | hspec | gauss | fzero
    function: String,
    #[arg(long, default_value = "1")]
    m: String,
    #[arg(long, default_value = "0")]
    n: String,
    #[arg(long, default_value = "0")]
    nu: i64,
    #[arg(long, default_value = "1")]
    a: i64,
    #[arg(long, default_value = "plus")]
    sign: String,
    #[arg(long, default_value = "00")]
    kind: String,
    /// Eta/Mumford scale argument (rational like 3/2)
    #[arg(long, default_value = "1")]
    scale: String,
    /// Mumford shift multiplier (rational)
    #[arg(long, default_value = "0")]
    shift: String,
    /// Truncation order (rational allowed)
    #[arg(long, default_value = "10")]
    order: String,
    /// Emit the JSON serialization instead of the table
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// all | phi | indefinite | modular | qexp
    #[arg(long, default_value = "all")]
    suite: String,
    /// Comma-separated half-integers, e.g. 1/2,1,3/2
    #[arg(long, default_value = "1")]
    m: String,
    #[arg(long, default_value = "10")]
    points: u32,
    #[arg(long, default_value = "42")]
    seed: u64,
    /// Override every per-family tolerance
    #[arg(long)]
    tol: Option<f64>,
    /// Exact-track truncation order
    #[arg(long, default_value = "12")]
    order: i64,
    /// Write the JSON report here
    #[arg(long)]
    json: Option<String>,
    /// Suppress per-case lines
    #[arg(long)]
    quiet: bool,
}

#[derive(Args)]
struct MatrixArgs {
    /// S | T
    kind: String,
    #[arg(long, default_value = "1")]
    m: String,
    /// Output path (stdout when omitted)
    #[arg(long)]
    out: Option<String>,
    /// json | csv
    #[arg(long, default_value = "json")]
    format: String,
}

fn parse_complex(text: &str) -> Result<Complex64> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 2 {
        return Err(Error::Domain(format!("expected re,im — got {text:?}")));
    }
    let re: f64 = parts[0]
        .trim()
        .parse()
        .map_err(|_| Error::Domain(format!("bad real part {text:?}")))?;
    let im: f64 = parts[1]
        .trim()
        .parse()
        .map_err(|_| Error::Domain(format!("bad imaginary part {text:?}")))?;
    Ok(Complex64::new(re, im))
}

/// Half-integers arrive as "p/2" or plain integers; returns 2x the value.
fn parse_half_twice(text: &str) -> Result<i64> {
    let text = text.trim();
    if let Some((num, den)) = text.split_once('/') {
        let n: i64 = num
            .trim()
            .parse()
            .map_err(|_| Error::Domain(format!("bad numerator in {text:?}")))?;
        let d: i64 = den
            .trim()
            .parse()
            .map_err(|_| Error::Domain(format!("bad denominator in {text:?}")))?;
        match d {
            1 => Ok(2 * n),
            2 => Ok(n),
            _ => Err(Error::Domain(format!("{text:?} is not a half-integer"))),
        }
    } else {
        let n: i64 = text
            .parse()
            .map_err(|_| Error::Domain(format!("bad integer {text:?}")))?;
        Ok(2 * n)
    }
}

fn parse_ratio(text: &str) -> Result<Ratio<i64>> {
    let text = text.trim();
    if let Some((num, den)) = text.split_once('/') {
        let n: i64 = num
            .trim()
            .parse()
            .map_err(|_| Error::Domain(format!("bad rational {text:?}")))?;
        let d: i64 = den
            .trim()
            .parse()
            .map_err(|_| Error::Domain(format!("bad rational {text:?}")))?;
        if d == 0 {
            return Err(Error::Domain("zero denominator".into()));
        }
        Ok(Ratio::new(n, d))
    } else {
        let n: i64 = text
            .parse()
            .map_err(|_| Error::Domain(format!("bad rational {text:?}")))?;
        Ok(Ratio::new(n, 1))
    }
}

fn parse_sign(text: &str) -> Result<ThetaSign> {
    match text {
        "plus" | "+" => Ok(ThetaSign::Plus),
        "minus" | "-" => Ok(ThetaSign::Minus),
        other => Err(Error::Domain(format!(
            "sign must be plus or minus, got {other:?}"
        ))),
    }
}

fn format_value(v: Complex64) -> String {
    // 15 significant digits on each component
    if v.im >= 0.0 {
        format!("{:.14e} + {:.14e}i", v.re, v.im)
    } else {
        format!("{:.14e} - {:.14e}i", v.re, -v.im)
    }
}

fn cmd_eval(args: &EvalArgs) -> Result<()> {
    let budget = TruncationBudget::default();
    let tau = parse_complex(&args.tau)?;
    let z = parse_complex(&args.z)?;
    let m2 = parse_half_twice(&args.m)?;
    let sign = parse_sign(&args.sign)?;
    let value = match args.function.as_str() {
        "theta" => {
            let n2 = parse_half_twice(&args.n)?;
            theta_eval(&ThetaIndex::new(n2, m2, sign)?, tau, z, &budget)?
        }
        "eta" => eta_eval(tau, &budget)?,
        "mumford" => mumford_eval(MumfordKind::parse(&args.kind)?, tau, z, &budget)?,
        "phi" => {
            let s2 = parse_half_twice(&args.s)?;
            let z1 = parse_complex(&args.z1)?;
            let z2 = parse_complex(&args.z2)?;
            phi1_eval(&PhiParams::new(m2, s2, sign)?, tau, z1, z2, &budget)?
        }
        "g" => {
            let n: i64 = args
                .n
                .parse()
                .map_err(|_| Error::Domain("g needs integer n".into()))?;
            family::g_eval(&FamilyIndex::new(m2, n, args.nu)?, tau, &budget)?
        }
        "h" => {
            let n: i64 = args
                .n
                .parse()
                .map_err(|_| Error::Domain("h needs integer n".into()))?;
            family::h_eval(&FamilyIndex::new(m2, n, args.nu)?, tau, z, &budget)?
        }
        "bigg" => {
            let n: i64 = args
                .n
                .parse()
                .map_err(|_| Error::Domain("G needs integer n".into()))?;
            family::big_g_eval(&FamilyIndex::new(m2, n, args.nu)?, tau, z, &budget)?
        }
        "biggq" => {
            let n: i64 = args
                .n
                .parse()
                .map_err(|_| Error::Domain("G needs integer n".into()))?;
            family::big_g_quotient_eval(&FamilyIndex::new(m2, n, args.nu)?, tau, z, &budget)?
        }
        "f" => {
            let n: i64 = args
                .n
                .parse()
                .map_err(|_| Error::Domain("F needs integer n".into()))?;
            family::f_eval(
                &FamilyIndex::new(m2, n, args.nu)?,
                &TorsorShift::new(args.a, args.b),
                tau,
                z,
                &budget,
            )?
        }
        other => return Err(Error::Domain(format!("unknown function {other:?}"))),
    };
    println!("{}", format_value(value));
    Ok(())
}

fn print_expansion(series: &indefinite_theta::qseries::QExpansion, json: bool) -> Result<()> {
    if json {
        println!(
            "{}",
            serde_json::to_string(&series.to_json()?).expect("json")
        );
    } else {
        for (e, c) in series.iter() {
            println!("q^({e})\t{c}");
        }
        println!("# order {}", series.order());
    }
    Ok(())
}

fn cmd_qexp(args: &QexpArgs) -> Result<()> {
    let order = parse_ratio(&args.order)?;
    let m2 = parse_half_twice(&args.m)?;
    match args.function.as_str() {
        "eta" => {
            let series = qkernels::eta_qexp(parse_ratio(&args.scale)?, order)?;
            print_expansion(&series, args.json)?;
        }
        "theta" => {
            let n2 = parse_half_twice(&args.n)?;
            let sign = parse_sign(&args.sign)?;
            let series = qkernels::theta_qexp(&ThetaIndex::new(n2, m2, sign)?, order)?;
            print_expansion(&series, args.json)?;
        }
        "mumford" => {
            let series = qkernels::mumford_qexp(
                MumfordKind::parse(&args.kind)?,
                parse_ratio(&args.scale)?,
                parse_ratio(&args.shift)?,
                order,
            )?;
            print_expansion(&series, args.json)?;
        }
        "g" => {
            let n: i64 = args
                .n
                .parse()
                .map_err(|_| Error::Domain("g needs integer n".into()))?;
            let series = qkernels::g_qexp_auto(&FamilyIndex::new(m2, n, args.nu)?, order)?;
            print_expansion(&series, args.json)?;
        }
        "hspec" => {
            let n: i64 = args
                .n
                .parse()
                .map_err(|_| Error::Domain("h needs integer n".into()))?;
            let idx = FamilyIndex::new(m2, n, args.nu)?;
            let (direct, region) = qkernels::h_spec_qexp(&idx, args.a, 256, order)?;
            println!("identical: {}", direct.agrees_with(&region));
            print_expansion(&direct, args.json)?;
        }
        "gauss" => {
            let (lhs, rhs) = qkernels::gauss_quotient_check(m2, order)?;
            println!("identical: {}", lhs.agrees_with(&rhs));
            print_expansion(&lhs, args.json)?;
        }
        "fzero" => {
            let n: i64 = args
                .n
                .parse()
                .map_err(|_| Error::Domain("F needs integer n".into()))?;
            let series = qkernels::f_zero_qexp(&FamilyIndex::new(m2, n, args.nu)?, args.a, order)?;
            print_expansion(&series, args.json)?;
        }
        other => return Err(Error::Domain(format!("no exact track for {other:?}"))),
    }
    Ok(())
}

fn cmd_verify(args: &VerifyArgs) -> Result<bool> {
    let suite = Suite::parse(&args.suite)?;
    let mut m2_list = Vec::new();
    for part in args.m.split(',') {
        m2_list.push(parse_half_twice(part)?);
    }
    let cfg = SuiteConfig {
        m2_list,
        points: args.points,
        seed: args.seed,
        order: args.order,
        tol_override: args.tol,
        budget: TruncationBudget::default(),
    };
    let doc = run_suite(suite, &cfg);
    if !args.quiet {
        for case in &doc.cases {
            let verdict = if case.pass { "PASS" } else { "FAIL" };
            match &case.error {
                Some(e) if !case.pass => {
                    println!("{verdict} {} [{}] error: {e}", case.id, case.params)
                }
                _ => println!(
                    "{verdict} {} [{}] abs={:.3e} rel={:.3e} tol={:.1e}",
                    case.id, case.params, case.abs_err, case.rel_err, case.tol
                ),
            }
        }
    }
    println!(
        "suite {}: {}/{} passed, {} failed (seed {})",
        doc.suite, doc.summary.passed, doc.summary.total, doc.summary.failed, doc.seed
    );
    if let Some(path) = &args.json {
        std::fs::write(path, doc.to_json_string())
            .map_err(|e| Error::Domain(format!("cannot write report {path:?}: {e}")))?;
    }
    Ok(doc.all_pass())
}

fn cmd_matrix(args: &MatrixArgs) -> Result<()> {
    let m2 = parse_half_twice(&args.m)?;
    let matrix = match args.kind.as_str() {
        "S" | "s" => modular::build_s_matrix(m2)?,
        "T" | "t" => modular::build_t_matrix(m2)?,
        other => {
            return Err(Error::Domain(format!(
                "matrix kind must be S or T, got {other:?}"
            )))
        }
    };
    let rendered = match args.format.as_str() {
        "json" => serde_json::to_string_pretty(&matrix.to_json()).expect("json"),
        "csv" => matrix.to_csv(),
        other => {
            return Err(Error::Domain(format!(
                "format must be json or csv, got {other:?}"
            )))
        }
    };
    match &args.out {
        Some(path) => std::fs::write(path, rendered)
            .map_err(|e| Error::Domain(format!("cannot write {path:?}: {e}")))?,
        None => {
            let mut stdout = std::io::stdout();
            stdout.write_all(rendered.as_bytes()).ok();
            if !rendered.ends_with('\n') {
                writeln!(stdout).ok();
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Eval(args) => cmd_eval(args).map(|()| true),
        Command::Qexp(args) => cmd_qexp(args).map(|()| true),
        Command::Verify(args) => cmd_verify(args),
        Command::Matrix(args) => cmd_matrix(args).map(|()| true),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
