//! Command-line front end: compute l-regular partition counts, run named
//! verification checks, and emit machine-readable reports.
//!
//! Exit codes: 0 when everything passes, 1 when at least one check fails,
//! 2 for usage and configuration errors.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::{Deserialize, Serialize};

use regulus_core::partitions::{regular_gf, regular_mod_table};
use regulus_core::verify::{run_check, run_suite, CheckParams, CheckResult, CheckStatus, Report};

/// Hard guard on the number of coefficients any computation may allocate.
const MAX_ORDER_ENV: &str = "REGULUS_MAX_ORDER";
/// Largest index served by `bl` in exact mode.
const EXACT_CAP: u64 = 100_000;
/// Largest index served by `bl` in modular mode.
const MOD_CAP: u64 = 10_000_000;

#[derive(Parser)]
#[command(
    name = "regulus",
    about = "Exact q-series checks for l-regular partition congruences (l = 13, 17, 23)",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print b_l(n), the number of l-regular partitions of n
    Bl {
        /// Regularity index l >= 2
        l: u64,
        /// Partition index n
        n: u64,
        /// Reduce mod l (requires l prime; raises the index cap)
        #[arg(long = "mod")]
        modular: bool,
    },
    /// Run one named check
    Check {
        /// Check name, e.g. id-2.1 or t13-key (see `suite --filter '*'`)
        name: String,
        /// Series truncation order
        #[arg(long, default_value_t = CheckParams::DEFAULT_ORDER)]
        order: usize,
        /// Index bound for congruence families
        #[arg(long, default_value_t = CheckParams::DEFAULT_N_MAX)]
        nmax: usize,
    },
    /// Run every check matching a name pattern
    Suite {
        /// Name pattern with `*` wildcards
        #[arg(long, default_value = "*")]
        filter: String,
        /// Series truncation order
        #[arg(long, default_value_t = CheckParams::DEFAULT_ORDER)]
        order: usize,
        /// Index bound for congruence families
        #[arg(long, default_value_t = CheckParams::DEFAULT_N_MAX)]
        nmax: usize,
        /// Write the report as JSON to this path
        #[arg(long)]
        json: Option<PathBuf>,
        /// Bound on check-level parallelism (default: available parallelism)
        #[arg(long)]
        threads: Option<usize>,
    },
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
struct JsonReport {
    suite: String,
    order: u64,
    nmax: Option<u64>,
    results: Vec<JsonResult>,
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
struct JsonResult {
    name: String,
    status: String,
    first_mismatch: Option<JsonMismatch>,
    elapsed_ms: u64,
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
struct JsonMismatch {
    exponent: u64,
    lhs: String,
    rhs: String,
}

impl From<&CheckResult> for JsonResult {
    fn from(r: &CheckResult) -> Self {
        let (status, first_mismatch) = match &r.status {
            CheckStatus::Pass => ("pass".to_owned(), None),
            CheckStatus::Fail { exponent, lhs, rhs } => (
                "fail".to_owned(),
                Some(JsonMismatch {
                    exponent: *exponent,
                    lhs: lhs.clone(),
                    rhs: rhs.clone(),
                }),
            ),
        };
        JsonResult {
            name: r.name.clone(),
            status,
            first_mismatch,
            elapsed_ms: r.elapsed.as_millis() as u64,
        }
    }
}

impl From<&Report> for JsonReport {
    fn from(report: &Report) -> Self {
        JsonReport {
            suite: report.suite.clone(),
            order: report.order as u64,
            nmax: report.n_max,
            results: report.results.iter().map(JsonResult::from).collect(),
        }
    }
}

fn max_order_cap() -> Result<usize, String> {
    match std::env::var(MAX_ORDER_ENV) {
        Ok(raw) => raw
            .parse::<usize>()
            .map_err(|_| format!("{MAX_ORDER_ENV} must be a positive integer, got `{raw}`")),
        Err(_) => Ok(CheckParams::DEFAULT_MAX_ORDER),
    }
}

fn print_result(r: &CheckResult) {
    let status = if r.passed() { "PASS" } else { "FAIL" };
    let scope = match (r.n_max, r.verified_through) {
        (Some(_), Some(t)) => format!("n <= {t}"),
        (None, Some(t)) => format!("through q^{t}"),
        _ => String::new(),
    };
    let mut line = format!(
        "{status}  {:<22} order {:<9} {:<16} {:>6} ms",
        r.name,
        r.order,
        scope,
        r.elapsed.as_millis()
    );
    if let CheckStatus::Fail { exponent, lhs, rhs } = &r.status {
        line.push_str(&format!(
            "  first mismatch at {exponent}: got {lhs}, claimed {rhs}"
        ));
    }
    println!("{line}");
}

fn cmd_bl(l: u64, n: u64, modular: bool) -> Result<ExitCode, String> {
    if l < 2 {
        return Err(format!("l must be at least 2, got {l}"));
    }
    let max_order = max_order_cap()?;
    let cap = if modular { MOD_CAP } else { EXACT_CAP };
    let cap = cap.min(max_order.saturating_sub(1) as u64);
    if n > cap {
        let mode = if modular { "modular" } else { "exact" };
        return Err(format!("n = {n} exceeds the {mode} cap of {cap}"));
    }
    let order = n as usize + 1;
    if modular {
        let table = regular_mod_table(l, order).map_err(|e| e.to_string())?;
        println!("{}", table[n as usize]);
    } else {
        let gf = regular_gf(l, order);
        println!("{}", gf.coeff(n as usize));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_check(name: &str, order: usize, nmax: usize) -> Result<ExitCode, String> {
    if order == 0 {
        return Err("--order must be at least 1".into());
    }
    let params = CheckParams {
        order,
        n_max: nmax,
        max_order: max_order_cap()?,
    };
    let result = run_check(name, &params).map_err(|e| e.to_string())?;
    print_result(&result);
    Ok(if result.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_suite(
    filter: &str,
    order: usize,
    nmax: usize,
    json: Option<&PathBuf>,
    threads: Option<usize>,
) -> Result<ExitCode, String> {
    if order == 0 {
        return Err("--order must be at least 1".into());
    }
    if let Some(t) = threads {
        if t == 0 {
            return Err("--threads must be at least 1".into());
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .map_err(|e| e.to_string())?;
    }
    let params = CheckParams {
        order,
        n_max: nmax,
        max_order: max_order_cap()?,
    };
    let report = run_suite(filter, &params).map_err(|e| e.to_string())?;
    for result in &report.results {
        print_result(result);
    }
    let passed = report.results.iter().filter(|r| r.passed()).count();
    println!(
        "{} of {} checks passed (filter `{}`, order {}, nmax {})",
        passed,
        report.results.len(),
        report.suite,
        report.order,
        report.n_max.map_or_else(|| "-".into(), |v| v.to_string()),
    );
    if let Some(path) = json {
        let doc = JsonReport::from(&report);
        let text = serde_json::to_string_pretty(&doc).map_err(|e| e.to_string())?;
        std::fs::write(path, text).map_err(|e| format!("cannot write {}: {e}", path.display()))?;
    }
    Ok(if report.all_pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Bl { l, n, modular } => cmd_bl(*l, *n, *modular),
        Command::Check { name, order, nmax } => cmd_check(name, *order, *nmax),
        Command::Suite {
            filter,
            order,
            nmax,
            json,
            threads,
        } => cmd_suite(filter, *order, *nmax, json.as_ref(), *threads),
    };
    match outcome {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
