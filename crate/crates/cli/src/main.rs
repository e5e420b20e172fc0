//! `sqfbox`: experiments on squarefree polynomials with coefficients
//! prescribed by boxes over small finite fields.
//!
//! Every flag can also come from a `--config` file of flat `key = value`
//! lines (keys named after the long flags); explicit flags win. Exit
//! codes: 0 all checks passed, 1 an assertion failed, 2 usage or budget
//! errors.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use sqfbox_cli::{
    parse_guarantee, parse_mode, parse_out, require, run_count_squarefree, run_density,
    run_show_disc, run_theorem_check, run_verify_monomials, CliError, Config,
};

#[derive(Parser)]
#[command(name = "sqfbox", version, about = "Squarefree polynomial experiments over finite fields")]
struct Cli {
    /// Config file with `key = value` defaults for the flags below.
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the discriminant monomial facts degree by degree.
    VerifyMonomials {
        /// Largest degree to check (2..=8).
        #[arg(long)]
        n_max: Option<usize>,
    },
    /// Search every qualifying coefficient box (or a sample) for the
    /// squarefree witness its guarantee promises.
    TheoremCheck {
        /// Field characteristic (prime).
        #[arg(long)]
        p: Option<u64>,
        /// Extension degree, so the field has p^k elements.
        #[arg(long)]
        k: Option<usize>,
        /// Polynomial degree.
        #[arg(long)]
        n: Option<usize>,
        /// Box selection: `exhaustive` or `sample`.
        #[arg(long)]
        mode: Option<String>,
        /// Number of boxes to draw in sample mode.
        #[arg(long)]
        samples: Option<u64>,
        /// RNG seed for sample mode.
        #[arg(long)]
        seed: Option<u64>,
        /// Restrict to one guarantee family: general, char2, or sparse.
        #[arg(long)]
        guarantee: Option<String>,
        /// Write the CSV here instead of stdout.
        #[arg(long, value_name = "FILE.csv")]
        out: Option<PathBuf>,
    },
    /// Count monic squarefree polynomials by enumeration and compare to
    /// the classical exact count q^n - q^(n-1).
    CountSquarefree {
        /// Field characteristic (prime).
        #[arg(long)]
        p: Option<u64>,
        /// Extension degree.
        #[arg(long)]
        k: Option<usize>,
        /// Polynomial degree (at least 2).
        #[arg(long)]
        n: Option<usize>,
    },
    /// Sample random coefficient cubes and record the squarefree density.
    Density {
        /// Field characteristic (prime).
        #[arg(long)]
        p: Option<u64>,
        /// Extension degree.
        #[arg(long)]
        k: Option<usize>,
        /// Polynomial degree (at least 2).
        #[arg(long)]
        n: Option<usize>,
        /// Common size C of the sampled coefficient sets (C <= q).
        #[arg(long)]
        cube_size: Option<u64>,
        /// Number of independent cubes to draw.
        #[arg(long)]
        trials: Option<u64>,
        /// RNG seed.
        #[arg(long)]
        seed: Option<u64>,
        /// Write the CSV here instead of stdout.
        #[arg(long, value_name = "FILE.csv")]
        out: Option<PathBuf>,
    },
    /// Print the symbolic discriminant of the generic degree-n polynomial.
    ShowDisc {
        /// Degree (2..=7).
        #[arg(long)]
        n: Option<usize>,
    },
}

fn run(cli: Cli) -> Result<(), CliError> {
    let cfg = match &cli.config {
        Some(path) => Config::load(path)?,
        None => Config::default(),
    };
    match cli.command {
        Command::VerifyMonomials { n_max } => {
            let n_max = require(cfg.resolve(n_max, "n-max")?, "n-max")?;
            run_verify_monomials(n_max)
        }
        Command::TheoremCheck { p, k, n, mode, samples, seed, guarantee, out } => {
            let p = require(cfg.resolve(p, "p")?, "p")?;
            let k = require(cfg.resolve(k, "k")?, "k")?;
            let n = require(cfg.resolve(n, "n")?, "n")?;
            let mode_name: String = require(cfg.resolve(mode, "mode")?, "mode")?;
            let samples = cfg.resolve(samples, "samples")?;
            let seed = cfg.resolve(seed, "seed")?;
            let mode = parse_mode(&mode_name, samples, seed)?;
            let guarantee = cfg
                .resolve(guarantee, "guarantee")?
                .map(|g: String| parse_guarantee(&g))
                .transpose()?;
            let out = parse_out(cfg.resolve(out.map(path_to_string), "out")?);
            run_theorem_check(p, k, n, mode, guarantee, out.as_deref())
        }
        Command::CountSquarefree { p, k, n } => {
            let p = require(cfg.resolve(p, "p")?, "p")?;
            let k = require(cfg.resolve(k, "k")?, "k")?;
            let n = require(cfg.resolve(n, "n")?, "n")?;
            run_count_squarefree(p, k, n)
        }
        Command::Density { p, k, n, cube_size, trials, seed, out } => {
            let p = require(cfg.resolve(p, "p")?, "p")?;
            let k = require(cfg.resolve(k, "k")?, "k")?;
            let n = require(cfg.resolve(n, "n")?, "n")?;
            let c = require(cfg.resolve(cube_size, "cube-size")?, "cube-size")?;
            let trials = require(cfg.resolve(trials, "trials")?, "trials")?;
            let seed = require(cfg.resolve(seed, "seed")?, "seed")?;
            let out = parse_out(cfg.resolve(out.map(path_to_string), "out")?);
            run_density(p, k, n, c, trials, seed, out.as_deref())
        }
        Command::ShowDisc { n } => {
            let n = require(cfg.resolve(n, "n")?, "n")?;
            run_show_disc(n)
        }
    }
}

fn path_to_string(p: PathBuf) -> String {
    p.to_string_lossy().into_owned()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
