//! Command-line surface for the De Moivre polynomial toolkit: evaluate
//! `A_{n,k}`, run the cross-checking identity suites, and print the value
//! tables and expansion constants the library computes.
//!
//! Exit codes: 0 on success, 1 when a check suite reports a failing case,
//! 2 on usage errors or out-of-range requests.

mod output;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use demoivre::algebra::scalar::{parse_rat, rat_int, rat_to_f64};
use demoivre::algebra::Rat;
use demoivre::asymptotics::{
    compare_expansion, gamma_taylor_coeffs, partition_asym_coeffs, stirling_gamma,
    stirling_gamma_upto, GammaRoute,
};
use demoivre::checks::{run_all, run_suite, CheckReport, Suite, DEFAULT_SEED};
use demoivre::demoivre::{
    coefficient_gcd, configured_max_n, demoivre_eval, demoivre_symbolic,
};
use demoivre::sequences::bernoulli::{bernoulli_number, bernoulli_upto};
use demoivre::sequences::cyclotomic::{cyclotomic, totient};
use demoivre::sequences::orthogonal::fibonacci_shifted;
use demoivre::sequences::partitions::{partitions_p, partitions_upto};
use demoivre::sequences::stirling::{cycle_triangle, subset_triangle};
use demoivre::sequences::tau::{ramanujan_tau, tau_q_expansion_upto};

use output::{Format, Table};

#[derive(Parser)]
#[command(
    name = "demoivre",
    version,
    about = "Exact De Moivre polynomials, series identities, and asymptotic constants"
)]
struct Cli {
    /// Emit JSON instead of plain text.
    #[arg(long, global = true)]
    json: bool,

    /// Seed for randomized check cases.
    #[arg(long, global = true, value_name = "SEED")]
    seed: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print A_{n,k}: symbolic polynomial (default), value, or coefficient gcd.
    Demoivre {
        n: u32,
        k: u32,
        /// Print the symbolic polynomial in a_1, a_2, ... (the default).
        #[arg(long)]
        symbolic: bool,
        /// Evaluate at comma-separated rational arguments.
        #[arg(long, value_name = "A1,A2,...", conflicts_with_all = ["symbolic", "gcd"])]
        eval: Option<String>,
        /// Print the gcd of the coefficients.
        #[arg(long, conflicts_with = "symbolic")]
        gcd: bool,
    },
    /// Run an identity suite and report pass/fail per case.
    Check {
        suite: SuiteArg,
        /// Override the suite's principal size cap.
        #[arg(long, value_name = "N")]
        max_n: Option<u32>,
        /// List passing cases too, not only failures.
        #[arg(long)]
        verbose: bool,
    },
    /// Print a value table.
    Table {
        object: TableObject,
        /// Largest index to tabulate.
        #[arg(long, value_name = "N")]
        max: Option<u32>,
        /// Number of expansion coefficients (partition-asym only).
        #[arg(long = "R", value_name = "R")]
        r: Option<u32>,
        /// Stirling-series coefficients instead of the Stirling triangles.
        #[arg(long)]
        gamma: bool,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
    /// Print a single sequence value.
    Seq { object: SeqObject, n: u32 },
    /// Asymptotic-expansion tools.
    Asym {
        #[command(subcommand)]
        command: AsymCommand,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    All,
    Demoivre,
    Series,
    Determinant,
    Sequences,
    Asymptotics,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TableObject {
    Partition,
    Tau,
    Bernoulli,
    Stirling,
    Cyclotomic,
    Gamma,
    PartitionAsym,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SeqObject {
    Partition,
    Tau,
    Bernoulli,
    Fibonacci,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum GammaRouteArg {
    Perron,
    Bernoulli,
    Zeta,
}

impl From<GammaRouteArg> for GammaRoute {
    fn from(value: GammaRouteArg) -> Self {
        match value {
            GammaRouteArg::Perron => GammaRoute::Perron,
            GammaRouteArg::Bernoulli => GammaRoute::Bernoulli,
            GammaRouteArg::Zeta => GammaRoute::Zeta,
        }
    }
}

#[derive(Subcommand)]
enum AsymCommand {
    /// The m-th Stirling-series coefficient, exact and as a float.
    StirlingGamma {
        m: u32,
        #[arg(long, value_enum, default_value = "bernoulli")]
        route: GammaRouteArg,
    },
    /// The partition-expansion coefficients C_0..C_{R-1}, exact and float.
    PartitionCoeffs {
        #[arg(value_name = "R")]
        r: u32,
    },
    /// Compare the log-power integral expansion against adaptive quadrature.
    ValidateI {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 1.0)]
        alpha: f64,
        #[arg(long = "R", value_name = "R", default_value_t = 2)]
        r: u32,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn dispatch(cli: Cli) -> Result<ExitCode, String> {
    let json = cli.json;
    let seed = cli.seed.unwrap_or(DEFAULT_SEED);
    match cli.command {
        Command::Demoivre { n, k, symbolic, eval, gcd } => {
            cmd_demoivre(n, k, symbolic, eval, gcd, json)
        }
        Command::Check { suite, max_n, verbose } => cmd_check(suite, max_n, verbose, seed, json),
        Command::Table { object, max, r, gamma, format } => {
            let format = if json { Format::Json } else { format };
            let table = build_table(object, max, r, gamma)?;
            print!("{}", table.render(format));
            Ok(ExitCode::SUCCESS)
        }
        Command::Seq { object, n } => cmd_seq(object, n, json),
        Command::Asym { command } => cmd_asym(command, json),
    }
}

fn cmd_demoivre(
    n: u32,
    k: u32,
    _symbolic: bool,
    eval: Option<String>,
    gcd: bool,
    json: bool,
) -> Result<ExitCode, String> {
    if n > configured_max_n() {
        return Err(format!(
            "n = {} exceeds the size cap {} (raise DEMOIVRE_MAX_N to override)",
            n,
            configured_max_n()
        ));
    }
    if gcd {
        let value = coefficient_gcd(n, k).map_err(|e| e.to_string())?;
        if json {
            print_json(&serde_json::json!({ "n": n, "k": k, "gcd": value.to_string() }));
        } else {
            println!("{value}");
        }
        return Ok(ExitCode::SUCCESS);
    }
    if let Some(list) = eval {
        let mut args: Vec<Rat> = Vec::new();
        for piece in list.split(',') {
            args.push(parse_rat(piece.trim())?);
        }
        // Missing trailing arguments count as zero.
        while args.len() < n as usize {
            args.push(rat_int(0));
        }
        let value = demoivre_eval(n, k, &args).map_err(|e| e.to_string())?;
        if json {
            print_json(&serde_json::json!({
                "n": n,
                "k": k,
                "args": args.iter().map(Rat::to_string).collect::<Vec<_>>(),
                "value": value.to_string(),
            }));
        } else {
            println!("{value}");
        }
        return Ok(ExitCode::SUCCESS);
    }
    let poly = demoivre_symbolic(n, k).map_err(|e| e.to_string())?;
    if json {
        print_json(&poly.to_json());
    } else {
        println!("{}", poly.to_multipoly());
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_check(
    suite: SuiteArg,
    max_n: Option<u32>,
    verbose: bool,
    seed: u64,
    json: bool,
) -> Result<ExitCode, String> {
    if let Some(m) = max_n {
        if m == 0 || m > 100 {
            return Err(format!("--max-n must be between 1 and 100, got {m}"));
        }
    }
    let reports: Vec<CheckReport> = match suite {
        SuiteArg::All => run_all(max_n, seed),
        SuiteArg::Demoivre => vec![run_suite(Suite::Demoivre, max_n, seed)],
        SuiteArg::Series => vec![run_suite(Suite::Series, max_n, seed)],
        SuiteArg::Determinant => vec![run_suite(Suite::Determinant, max_n, seed)],
        SuiteArg::Sequences => vec![run_suite(Suite::Sequences, max_n, seed)],
        SuiteArg::Asymptotics => vec![run_suite(Suite::Asymptotics, max_n, seed)],
    };
    let failed: usize = reports.iter().map(CheckReport::failed).sum();
    let cases: usize = reports.iter().map(|r| r.cases.len()).sum();
    if json {
        print_json(&serde_json::json!({
            "reports": reports.iter().map(CheckReport::to_json).collect::<Vec<_>>(),
            "cases": cases,
            "failed": failed,
        }));
    } else {
        for report in &reports {
            print!("{}", report.render_plain(verbose));
        }
        if reports.len() > 1 {
            println!("overall: {} cases, {} failed", cases, failed);
        }
    }
    Ok(if failed == 0 { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn checked_max(requested: Option<u32>, default: u32, cap: u32, what: &str) -> Result<u32, String> {
    let value = requested.unwrap_or(default);
    if value > cap {
        return Err(format!("--max {value} exceeds the {what} cap {cap}"));
    }
    Ok(value)
}

fn build_table(
    object: TableObject,
    max: Option<u32>,
    r: Option<u32>,
    gamma: bool,
) -> Result<Table, String> {
    match object {
        TableObject::Partition => {
            let max = checked_max(max, 40, 2000, "partition")?;
            let p = partitions_upto(max as usize);
            let mut t = Table::new("partition", &["n", "p_n"]);
            for (n, v) in p.iter().enumerate() {
                t.push(vec![n.to_string(), v.to_string()]);
            }
            Ok(t)
        }
        TableObject::Tau => {
            let max = checked_max(max, 30, 200, "tau")?;
            let tau = tau_q_expansion_upto(max as usize);
            let mut t = Table::new("tau", &["n", "tau_n"]);
            for n in 1..=max as usize {
                t.push(vec![n.to_string(), tau[n].to_string()]);
            }
            Ok(t)
        }
        TableObject::Bernoulli => {
            let max = checked_max(max, 20, 300, "bernoulli")?;
            let b = bernoulli_upto(max);
            let mut t = Table::new("bernoulli", &["n", "B_n"]);
            for (n, v) in b.iter().enumerate() {
                t.push(vec![n.to_string(), v.to_string()]);
            }
            Ok(t)
        }
        TableObject::Stirling if gamma => {
            let max = checked_max(max, 6, 12, "stirling gamma")?;
            let gammas = stirling_gamma_upto(max, GammaRoute::Bernoulli)
                .map_err(|e| e.to_string())?;
            let mut t = Table::new("stirling-gamma", &["m", "gamma_m", "float"]);
            for (m, g) in gammas.iter().enumerate() {
                t.push(vec![m.to_string(), g.to_string(), rat_to_f64(g).to_string()]);
            }
            Ok(t)
        }
        TableObject::Stirling => {
            let max = checked_max(max, 8, 40, "stirling")?;
            let subset = subset_triangle(max as usize);
            let cycle = cycle_triangle(max as usize);
            let mut t = Table::new("stirling", &["n", "k", "subset", "cycle"]);
            for n in 0..=max as usize {
                for k in 0..=n {
                    t.push(vec![
                        n.to_string(),
                        k.to_string(),
                        subset[n][k].to_string(),
                        cycle[n][k].to_string(),
                    ]);
                }
            }
            Ok(t)
        }
        TableObject::Cyclotomic => {
            let max = checked_max(max, 30, 2000, "cyclotomic")?;
            if max < 2 {
                return Err("cyclotomic polynomials start at index 2".into());
            }
            let mut t = Table::new("cyclotomic", &["n", "degree", "Phi_n"]);
            for n in 2..=max as u64 {
                let poly = cyclotomic(n).map_err(|e| e.to_string())?;
                t.push(vec![n.to_string(), totient(n).to_string(), poly.to_string()]);
            }
            Ok(t)
        }
        TableObject::Gamma => {
            let max = checked_max(max, 12, 30, "gamma")?;
            let coeffs = gamma_taylor_coeffs(max).map_err(|e| e.to_string())?;
            let mut t = Table::new("gamma", &["m", "g_m"]);
            for (m, g) in coeffs.iter().enumerate() {
                t.push(vec![m.to_string(), g.to_string()]);
            }
            Ok(t)
        }
        TableObject::PartitionAsym => Ok(partition_asym_table(r.unwrap_or(3))?),
    }
}

fn partition_asym_table(r_terms: u32) -> Result<Table, String> {
    if r_terms == 0 || r_terms > 12 {
        return Err(format!("--R must be between 1 and 12, got {r_terms}"));
    }
    let coeffs = partition_asym_coeffs(r_terms - 1).map_err(|e| e.to_string())?;
    let mut t = Table::new("partition-asym", &["r", "exact", "float"]);
    for (r, c) in coeffs.iter().enumerate() {
        t.push(vec![r.to_string(), c.to_string(), c.eval_f64().to_string()]);
    }
    Ok(t)
}

fn cmd_seq(object: SeqObject, n: u32, json: bool) -> Result<ExitCode, String> {
    let (name, value) = match object {
        SeqObject::Partition => {
            if n > 100_000 {
                return Err(format!("n = {n} exceeds the partition cap 100000"));
            }
            ("partition", partitions_p(n).to_string())
        }
        SeqObject::Tau => {
            if n == 0 {
                return Err("tau starts at n = 1".into());
            }
            ("tau", ramanujan_tau(n).map_err(|e| e.to_string())?.to_string())
        }
        SeqObject::Bernoulli => {
            if n > 500 {
                return Err(format!("n = {n} exceeds the bernoulli cap 500"));
            }
            ("bernoulli", bernoulli_number(n).to_string())
        }
        SeqObject::Fibonacci => {
            if n > 300 {
                return Err(format!("n = {n} exceeds the fibonacci cap 300"));
            }
            ("fibonacci", fibonacci_shifted(n).map_err(|e| e.to_string())?.to_string())
        }
    };
    if json {
        print_json(&serde_json::json!({ "object": name, "n": n, "value": value }));
    } else {
        println!("{value}");
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_asym(command: AsymCommand, json: bool) -> Result<ExitCode, String> {
    match command {
        AsymCommand::StirlingGamma { m, route } => {
            if m > 16 {
                return Err(format!("m = {m} exceeds the coefficient cap 16"));
            }
            let value = stirling_gamma(m, route.into()).map_err(|e| e.to_string())?;
            if json {
                print_json(&serde_json::json!({
                    "m": m,
                    "route": format!("{:?}", route).to_lowercase(),
                    "exact": value.to_string(),
                    "float": rat_to_f64(&value),
                }));
            } else {
                println!("gamma_{m} = {value} = {}", rat_to_f64(&value));
            }
            Ok(ExitCode::SUCCESS)
        }
        AsymCommand::PartitionCoeffs { r } => {
            let table = partition_asym_table(r)?;
            if json {
                print_json(&table.to_json());
            } else {
                print!("{}", table.render(Format::Plain));
            }
            Ok(ExitCode::SUCCESS)
        }
        AsymCommand::ValidateI { n, alpha, r } => {
            if n < 2 {
                return Err("n must be at least 2".into());
            }
            if !(alpha > 0.0) {
                return Err(format!("alpha must be positive, got {alpha}"));
            }
            if r == 0 || r > 6 {
                return Err(format!("--R must be between 1 and 6, got {r}"));
            }
            let c = compare_expansion(n, alpha, r).map_err(|e| e.to_string())?;
            if json {
                print_json(&serde_json::json!({
                    "n": c.n,
                    "alpha": c.alpha,
                    "R": c.r_terms,
                    "saddle": c.saddle,
                    "log_integral": c.log_integral,
                    "log_expansion": c.log_expansion,
                    "rel_error": c.rel_error,
                    "quadrature_converged": c.quadrature_converged,
                }));
            } else {
                println!("n = {}  alpha = {}  R = {}", c.n, c.alpha, c.r_terms);
                println!("saddle u                  = {}", c.saddle);
                println!("log integral (quadrature) = {}", c.log_integral);
                println!("log expansion             = {}", c.log_expansion);
                println!("relative error            = {:e}", c.rel_error);
                println!("quadrature converged      = {}", c.quadrature_converged);
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn print_json(value: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(value).unwrap());
}
