//! `rpd-lab`: evaluate radial kernels, inspect Schoenberg matrices and
//! measures, and run the acceptance suite.
//!
//! Exit codes: 0 success, 1 failed verification, 2 usage error, 3 numerical
//! failure. `RPD_QUAD_TOL` overrides the default quadrature tolerance.

mod commands;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use commands::{Failure, Grid};

#[derive(Parser)]
#[command(name = "rpd-lab", version, about = "Radial positive definite functions at desk scale")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a kernel at points or on a grid (CSV r,f(r)).
    Eval(EvalArgs),
    /// Inertia of a Schoenberg matrix (JSON).
    Inertia(InertiaArgs),
    /// Simplex-with-centre witness for a kernel (JSON).
    SimplexScan(SimplexArgs),
    /// Closed-form spectrum of a polygon Schoenberg matrix (CSV).
    PolygonSpectrum(PolygonArgs),
    /// Fourier coefficients g(2r sin(t/2)) against cos(kt) (CSV).
    Fourier(FourierArgs),
    /// Dimension-m density from a dimension-(m+k) measure (density CSV).
    Transition(TransitionArgs),
    /// Sample a Schoenberg density (density CSV).
    Density(DensityArgs),
    /// Grow negative eigenvalues on shifted copies of a base set (JSON).
    NegeigsGrowth(GrowthArgs),
    /// Moment-determinant obstruction for Ω_n in dimension n+1 (JSON).
    MomentTest(MomentArgs),
    /// Run the acceptance criteria and print a pass/fail table.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct EvalArgs {
    /// Kernel, e.g. omega:3, prod(omega:2,scale:3(omega:2)), mix:3@nu.txt
    #[arg(long)]
    kernel: String,
    /// Evaluation point r >= 0 (repeatable)
    #[arg(long = "at", value_parser = commands::nonneg_f64)]
    at: Vec<f64>,
    /// Evenly spaced points lo:hi:count
    #[arg(long, value_parser = commands::parse_grid)]
    grid: Option<Grid>,
}

#[derive(Args)]
struct InertiaArgs {
    #[arg(long)]
    kernel: String,
    /// Configuration, e.g. simplex-center:2@0.1, polygon:64@5, random:2,40,7,10
    #[arg(long)]
    config: String,
    /// Eigenvalue threshold; defaults to 1e-9 max(1, |A|_inf)
    #[arg(long, value_parser = commands::positive_f64)]
    tol: Option<f64>,
    /// Include the sorted eigenvalues
    #[arg(long)]
    eigenvalues: bool,
    /// Print the Schoenberg matrix as CSV instead
    #[arg(long, conflicts_with = "eigenvalues")]
    matrix_csv: bool,
}

#[derive(Args)]
struct SimplexArgs {
    #[arg(long)]
    kernel: String,
    /// Simplex dimension m (m+3 points in R^{m+1})
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..=200))]
    m: u32,
    #[arg(long, default_value_t = 1e-9, value_parser = commands::positive_f64)]
    tol: f64,
    /// Random search over (m+2)-point sets instead; reports the smallest eigenvalue found
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    random_search: Option<u32>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Side of the sampling box for the random search
    #[arg(long = "box", default_value_t = 1.0, value_parser = commands::positive_f64)]
    side: f64,
}

#[derive(Args)]
struct PolygonArgs {
    #[arg(long)]
    kernel: String,
    /// Vertex count
    #[arg(long, value_parser = clap::value_parser!(u32).range(3..=1_000_000))]
    m: u32,
    /// Circumradius
    #[arg(long, value_parser = commands::positive_f64)]
    r: f64,
    #[arg(long, value_parser = commands::positive_f64)]
    tol: Option<f64>,
}

#[derive(Args)]
struct FourierArgs {
    #[arg(long)]
    kernel: String,
    #[arg(long, value_parser = commands::positive_f64)]
    r: f64,
    /// Largest index k
    #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u32).range(1..=10_000))]
    k_max: u32,
}

#[derive(Args)]
struct TransitionArgs {
    /// The dimension-(m+k) measure: a family (exp:n, gauss:n, omegasq:n, stepback:n) or @FILE
    #[arg(long)]
    measure: String,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..=500))]
    m: u32,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..=500))]
    k: u32,
    /// Point x > 0 (repeatable)
    #[arg(long = "at", value_parser = commands::positive_f64)]
    at: Vec<f64>,
    #[arg(long, value_parser = commands::parse_grid)]
    grid: Option<Grid>,
}

#[derive(Args)]
struct DensityArgs {
    /// A family (exp:m, gauss:m, omegasq:n, stepback:n) or @FILE
    #[arg(long)]
    of: String,
    #[arg(long = "at", value_parser = commands::positive_f64)]
    at: Vec<f64>,
    #[arg(long, value_parser = commands::parse_grid)]
    grid: Option<Grid>,
}

#[derive(Args)]
struct GrowthArgs {
    #[arg(long)]
    kernel: String,
    /// Base configuration with at least one negative eigenvalue
    #[arg(long)]
    base: String,
    /// Number of shifted copies N
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..=64))]
    n: u32,
    #[arg(long, value_parser = commands::positive_f64)]
    tol: Option<f64>,
}

#[derive(Args)]
struct MomentArgs {
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..=100_000))]
    n: u32,
}

#[derive(Args)]
struct VerifyArgs {
    /// Comma-separated criterion numbers or tags (specfun, transition, polygon, ...)
    #[arg(long)]
    only: Option<String>,
    /// Emit JSON instead of the table
    #[arg(long)]
    json: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let spec = match commands::quadrature_from_env() {
        Ok(s) => s,
        Err(f) => return report(f),
    };
    let result = match cli.command {
        Command::Eval(a) => commands::eval(&a.kernel, &a.at, a.grid, &spec),
        Command::Inertia(a) => commands::inertia(&a.kernel, &a.config, a.tol, a.eigenvalues, a.matrix_csv, &spec),
        Command::SimplexScan(a) => match a.random_search {
            Some(trials) => commands::random_search(&a.kernel, a.m, trials, a.seed, a.side, &spec),
            None => commands::simplex_scan(&a.kernel, a.m, a.tol, &spec),
        },
        Command::PolygonSpectrum(a) => commands::polygon_spectrum(&a.kernel, a.m, a.r, a.tol, &spec),
        Command::Fourier(a) => commands::fourier(&a.kernel, a.r, a.k_max, &spec),
        Command::Transition(a) => commands::transition(&a.measure, a.m, a.k, &a.at, a.grid, &spec),
        Command::Density(a) => commands::density(&a.of, &a.at, a.grid, &spec),
        Command::NegeigsGrowth(a) => commands::growth(&a.kernel, &a.base, a.n, a.tol, &spec),
        Command::MomentTest(a) => commands::moment_test(a.n),
        Command::Verify(a) => commands::verify(a.only.as_deref(), a.json),
    };
    match result {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => report(f),
    }
}

fn report(f: Failure) -> ExitCode {
    match f {
        Failure::Verification(out) => {
            print!("{out}");
            ExitCode::from(1)
        }
        Failure::Usage(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Failure::Numerical(msg) => {
            eprintln!("numerical failure: {msg}");
            ExitCode::from(3)
        }
    }
}
