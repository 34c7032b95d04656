use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use qleft::parser::parse_poly;
use qleft::render::{self, Format};
use qleft::verify::{self, Check, Config};
use qleft_core::rewrite::{build_rules, normal_form};
use qleft_core::Mode;

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum ModeArg {
    Sl,
    M,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Sl => Mode::SlTilde,
            ModeArg::M => Mode::MTilde,
        }
    }
}

/// Relations, reduction and verification for the left quantum groups
/// SL~_q(n) and M~_q(n).
#[derive(Parser, Debug)]
#[command(name = "qleft", version)]
struct Cli {
    /// Matrix size.
    #[arg(long, global = true, default_value_t = 2, value_parser = clap::value_parser!(u64).range(2..=5))]
    n: u64,
    /// Quotient: `sl` sets D = 1, `m` keeps D.
    #[arg(long, global = true, value_enum, default_value_t = ModeArg::Sl)]
    mode: ModeArg,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    output: Format,
    /// Degree bound for exhaustive verification over irreducible words
    /// [default: 3 for n <= 3, 2 for n = 4, 1 for n = 5].
    #[arg(long, global = true)]
    degree: Option<usize>,
    /// Number of seeded random samples.
    #[arg(long, global = true, default_value_t = 100)]
    samples: usize,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the reduction rules.
    Relations,
    /// Print the normal form of an expression.
    Reduce {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Print an expression expanded in the free algebra, without reduction.
    Eval {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Run a verification check; exit code 1 if it fails.
    Verify {
        #[arg(value_enum)]
        check: Check,
    },
}

const USAGE: u8 = 2;

fn configure_threads() -> Result<(), String> {
    let Ok(raw) = std::env::var("QLEFT_THREADS") else {
        return Ok(());
    };
    let threads: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| format!("QLEFT_THREADS must be a positive integer, got {raw:?}"))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = configure_threads() {
        eprintln!("error: {e}");
        return ExitCode::from(USAGE);
    }
    let n = cli.n as usize;
    let mode = Mode::from(cli.mode);

    let (text, code) = match &cli.command {
        Command::Relations => {
            let rs = build_rules(n, mode).expect("n is validated by the argument parser");
            (render::rules(&rs.rules_by_index(), cli.output), 0)
        }
        Command::Reduce { expr } | Command::Eval { expr } => {
            let p = match parse_poly(expr, n) {
                Ok(p) => p,
                Err(e) => {
                    eprintln!("error: {}", e.annotate(expr));
                    return ExitCode::from(USAGE);
                }
            };
            if matches!(cli.command, Command::Reduce { .. }) {
                let rs = build_rules(n, mode).expect("n is validated by the argument parser");
                (render::poly(&normal_form(&p, &rs), expr, n, Some(mode), cli.output), 0)
            } else {
                (render::poly(&p, expr, n, None, cli.output), 0)
            }
        }
        Command::Verify { check } => {
            let cfg = Config {
                n,
                mode,
                degree: cli.degree.unwrap_or_else(|| Config::default_degree(n)),
                samples: cli.samples,
                seed: cli.seed,
            };
            let reports = verify::run_many(*check, &cfg);
            let code = if reports.iter().all(|r| r.passed()) { 0 } else { 1 };
            (render::reports(&reports, *check == Check::All, cli.output), code)
        }
    };
    let mut stdout = std::io::stdout().lock();
    if stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()).is_err() {
        return ExitCode::FAILURE;
    }
    ExitCode::from(code)
}
