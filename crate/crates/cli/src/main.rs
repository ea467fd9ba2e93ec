use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use osp_capelli::eigenformulas::BiPartition;
use osp_capelli_cli::commands::{cmd_decompose, cmd_eigenvalue, cmd_express, cmd_matrix, cmd_verify, CliError};
use osp_capelli_cli::output::{Format, Report};
use osp_capelli_cli::suite::{Fault, SuiteConfig};

/// Capelli operators for gosp(1|2n) over exact rationals.
#[derive(Debug, Parser)]
#[command(name = "osp-capelli", version)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Pretty)]
    format: Format,

    /// Add approximate decimal columns (non-authoritative) next to rationals.
    #[arg(long, global = true)]
    decimal: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Eigenvalues c_nu(mu) of the Capelli operator D_nu.
    Eigenvalue {
        #[arg(long, value_parser = positive)]
        n: usize,
        /// "a,b" with a >= b.
        #[arg(long)]
        nu: BiPartition,
        /// Single target; without it, every mu with |mu| <= max-degree.
        #[arg(long)]
        mu: Option<BiPartition>,
        #[arg(long, default_value_t = 6)]
        max_degree: usize,
        /// Also compute the eigenvalue by applying D_nu to V_mu.
        #[arg(long)]
        oracle: bool,
    },
    /// det M_d, det M_d' and the factorization over the roots s/2.
    Matrix {
        #[arg(long, value_parser = positive)]
        n: usize,
        #[arg(long)]
        d: u32,
    },
    /// Coefficients of D_nu in the basis C^{mu2} Z^{mu1 - mu2}.
    Express {
        #[arg(long, value_parser = positive)]
        n: usize,
        #[arg(long)]
        nu: BiPartition,
        /// Compare with D_nu as operators on degrees up to this bound.
        #[arg(long)]
        verify_blocks: Option<usize>,
    },
    /// Fischer decomposition of each degree with dimensions and highest weights.
    Decompose {
        #[arg(long, value_parser = positive)]
        n: usize,
        #[arg(long)]
        max_degree: usize,
        /// Print bases of the harmonic spaces.
        #[arg(long)]
        bases: bool,
    },
    /// Run the verification suite.
    Verify {
        /// A single value or an inclusive range such as "1..3".
        #[arg(long, value_parser = n_range)]
        n: NRange,
        #[arg(long, default_value_t = 6)]
        max_degree: usize,
        /// Matrix size bound; defaults to max-degree.
        #[arg(long)]
        d: Option<u32>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, hide = true)]
        inject_fault: Option<FaultArg>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FaultArg {
    LaplacianSign,
}

#[derive(Debug, Clone)]
struct NRange(Vec<usize>);

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("n must be at least 1".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

fn n_range(s: &str) -> Result<NRange, String> {
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (positive(a.trim())?, positive(b.trim().trim_start_matches('='))?),
        None => {
            let n = positive(s.trim())?;
            (n, n)
        }
    };
    if a > b {
        return Err(format!("empty range {s}"));
    }
    Ok(NRange((a..=b).collect()))
}

fn run(cli: &Cli) -> Result<Report, CliError> {
    match &cli.command {
        Command::Eigenvalue { n, nu, mu, max_degree, oracle } => cmd_eigenvalue(*n, *nu, *mu, *max_degree, *oracle),
        Command::Matrix { n, d } => cmd_matrix(*n, *d),
        Command::Express { n, nu, verify_blocks } => cmd_express(*n, *nu, *verify_blocks),
        Command::Decompose { n, max_degree, bases } => cmd_decompose(*n, *max_degree, *bases),
        Command::Verify { n, max_degree, d, seed, inject_fault } => {
            let cfg = SuiteConfig {
                ns: n.0.clone(),
                max_degree: *max_degree,
                d: d.unwrap_or(*max_degree as u32),
                seed: *seed,
                fault: inject_fault.map(|FaultArg::LaplacianSign| Fault::LaplacianSign),
            };
            let (report, diagnostics) = cmd_verify(&cfg)?;
            for line in diagnostics {
                eprintln!("{line}");
            }
            Ok(report)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            print!("{}", report.render(cli.format, cli.decimal));
            if report.passed == Some(false) {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(match e {
                CliError::Usage(_) => 2,
                CliError::Failed(_) => 1,
            })
        }
    }
}
