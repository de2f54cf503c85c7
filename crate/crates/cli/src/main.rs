//! `lagwron`: exact Laguerre-Wronskian polynomials, spectral determinants and
//! quantum KdV checks from the command line.
//!
//! Exit status: 0 when every check held (conjectural misses only warn), 1 on a
//! verification failure, 2 on bad input.

mod commands;
mod output;

use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use num_rational::BigRational;

use lagwron::par::{self, Exec};
use lagwron::partitions::Partition;
use lagwron::verify::{VerifyConfig, SUITES};

use commands::{Outcome, QkdvCheck, Status};
use output::{to_json, Format};

#[derive(Parser, Debug)]
#[command(
    name = "lagwron",
    version,
    about = "Laguerre-Wronskian polynomials, partitions and quantum KdV at c = -2"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, value_enum, default_value = "json", global = true)]
    format: Format,
    /// Worker threads; 1 runs everything sequentially.
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    jobs: Option<u16>,
}

#[derive(Args, Debug)]
struct Pair {
    #[arg(long, value_parser = parse_partition, default_value = "")]
    lambda: Partition,
    #[arg(long, value_parser = parse_partition, default_value = "")]
    mu: Partition,
}

#[derive(Args, Debug)]
struct AtBeta {
    #[arg(long, value_parser = parse_partition)]
    lambda: Partition,
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    beta: BigRational,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Wronskian polynomial Φ_{λ,μ}(y), symbolic in β unless --beta is given.
    Phi {
        #[command(flatten)]
        pair: Pair,
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        beta: Option<BigRational>,
    },
    /// Apply coalescence moves until the constant term is nonzero.
    Reduce {
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        beta: BigRational,
        #[command(flatten)]
        pair: Pair,
    },
    /// Integer zeros of the symmetric constant terms against the critical set.
    Bset { n: usize },
    /// Shifted power sums, hamiltonian eigenvalues and root sums of λ.
    Sseval {
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        beta: Option<BigRational>,
    },
    /// Zeros of Q⁺ and Q⁻ for λ.
    Spectrum {
        #[command(flatten)]
        at: AtBeta,
        #[arg(long, default_value_t = 8)]
        kmax: usize,
    },
    /// QQ relation and Stokes factorization on a 3 × 3 energy grid.
    QqCheck {
        #[command(flatten)]
        at: AtBeta,
        #[arg(long, default_value_t = 1e-9, value_parser = parse_tol)]
        tol: f64,
    },
    /// Partitions of n whose symmetric Wronskian has nonzero constant term at β.
    BlzCount {
        n: usize,
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        beta: BigRational,
    },
    /// Verma-module irreducibility in degree n against the BLZ count.
    VermaReport {
        n: usize,
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        beta: BigRational,
    },
    /// Checks on the free-field quantum KdV operators up to a degree.
    Qkdv {
        #[arg(long, default_value_t = 6)]
        degree: usize,
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        beta: Option<BigRational>,
        #[arg(long, value_enum)]
        check: QkdvCheck,
    },
    /// Numeric roots of the BLZ polynomial P_λ at β.
    Roots {
        #[command(flatten)]
        at: AtBeta,
    },
    /// Largest residual of the BLZ equations at the roots of P_λ.
    BlzResidual {
        #[command(flatten)]
        at: AtBeta,
        #[arg(long, default_value_t = 1e-7, value_parser = parse_tol)]
        tol: f64,
    },
    /// Numeric root sums against their closed forms.
    NewtonCheck {
        #[command(flatten)]
        at: AtBeta,
        #[arg(long, default_value_t = 1e-8, value_parser = parse_tol)]
        tol: f64,
    },
    /// Run invariant suites over all partitions up to --max-size.
    Verify {
        /// `all` or one suite name.
        #[arg(value_parser = parse_suite)]
        suite: String,
        #[arg(long, default_value_t = 5)]
        max_size: usize,
        /// Overrides every floating-point threshold.
        #[arg(long, value_parser = parse_tol)]
        tol: Option<f64>,
    },
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    Partition::from_str(s).map_err(|e| e.to_string())
}

/// `p/q`, an integer, or a terminating decimal, all read exactly.
fn parse_rational(s: &str) -> Result<BigRational, String> {
    let t = s.trim();
    let err = || format!("expected a rational like 3/7, -2 or 0.3, got {s:?}");
    if let Some((int, frac)) = t.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err());
        }
        let digits = format!("{int}{frac}");
        let num = BigInt::from_str(&digits).map_err(|_| err())?;
        let den = num_traits::pow(BigInt::from(10), frac.len());
        return Ok(BigRational::new(num, den));
    }
    let q = BigRational::from_str(t).map_err(|_| err())?;
    Ok(q)
}

fn parse_tol(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(t) if t > 0.0 && t.is_finite() => Ok(t),
        _ => Err(format!("tolerance must be a positive number, got {s:?}")),
    }
}

fn parse_suite(s: &str) -> Result<String, String> {
    if s == "all" || SUITES.contains(&s) {
        Ok(s.to_string())
    } else {
        Err(format!(
            "unknown suite {s:?}; use `all` or one of: {}",
            SUITES.join(", ")
        ))
    }
}

fn run(cli: &Cli, exec: Exec) -> anyhow::Result<Outcome> {
    use commands::*;
    match &cli.command {
        Command::Phi { pair, beta } => phi_cmd(&pair.lambda, &pair.mu, beta.as_ref()),
        Command::Reduce { beta, pair } => reduce_cmd(beta, &pair.lambda, &pair.mu),
        Command::Bset { n } => bset_cmd(*n),
        Command::Sseval { lambda, beta } => sseval_cmd(lambda, beta.as_ref()),
        Command::Spectrum { at, kmax } => spectrum_cmd(&at.lambda, &at.beta, *kmax),
        Command::QqCheck { at, tol } => qq_check_cmd(&at.lambda, &at.beta, *tol),
        Command::BlzCount { n, beta } => blz_count_cmd(*n, beta, exec),
        Command::VermaReport { n, beta } => verma_report_cmd(*n, beta),
        Command::Qkdv {
            degree,
            beta,
            check,
        } => qkdv_cmd(*degree, beta.as_ref(), *check),
        Command::Roots { at } => roots_cmd(&at.lambda, &at.beta),
        Command::BlzResidual { at, tol } => blz_residual_cmd(&at.lambda, &at.beta, *tol),
        Command::NewtonCheck { at, tol } => newton_check_cmd(&at.lambda, &at.beta, *tol),
        Command::Verify {
            suite,
            max_size,
            tol,
        } => {
            let cfg = VerifyConfig {
                max_size: *max_size,
                tol: *tol,
                exec,
            };
            verify_cmd(suite, &cfg)
        }
    }
}

/// Input the library rejects is a usage error; anything else is a failed
/// computation.
fn is_usage_error(err: &anyhow::Error) -> bool {
    use lagwron::Error;
    matches!(
        err.downcast_ref::<Error>(),
        Some(
            Error::Domain(_)
                | Error::Parse { .. }
                | Error::InvalidCell { .. }
                | Error::MomentumExcluded(_)
        )
    )
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let exec = match cli.jobs {
        Some(1) => Exec::Sequential,
        Some(n) => {
            par::set_threads(n as usize);
            Exec::default()
        }
        None => Exec::default(),
    };
    match run(&cli, exec) {
        Ok(out) => {
            print!("{}", out.report.render(cli.format));
            match out.status {
                Status::Ok => ExitCode::SUCCESS,
                Status::Conjecture => {
                    eprintln!("warning: conjecture not confirmed; see the \"conjecture\" block");
                    ExitCode::SUCCESS
                }
                Status::Failed => ExitCode::from(1),
            }
        }
        Err(err) => {
            eprintln!("error: {err}");
            if is_usage_error(&err) {
                ExitCode::from(2)
            } else {
                println!(
                    "{}",
                    to_json(&serde_json::json!({"error": err.to_string()}))
                );
                ExitCode::from(1)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;
    use lagwron::exactalg::rat;

    #[test]
    fn rationals_parse_exactly() {
        assert_eq!(parse_rational("5/3").unwrap(), rat(5, 3));
        assert_eq!(parse_rational("-7").unwrap(), rat(-7, 1));
        assert_eq!(parse_rational("-0.7").unwrap(), rat(-7, 10));
        assert_eq!(parse_rational("0.30").unwrap(), rat(3, 10));
        for bad in ["x", "1/0", "1.", "1.2.3", "", "0.1e3"] {
            assert!(parse_rational(bad).is_err(), "{bad:?}");
        }
    }

    #[test]
    fn argument_definitions_are_consistent() {
        Cli::command().debug_assert();
    }
}
