//! Experiment harness over the squarefree-witness algebra core.
//!
//! The binary exposes five subcommands — `verify-monomials`,
//! `theorem-check`, `count-squarefree`, `density`, and `show-disc` —
//! all implemented as library functions in [`experiments`] so tests can
//! call them directly. [`config`] merges optional flat key=value files
//! under command-line flags, and [`rng`] pins the random number
//! generator so seeded runs are reproducible byte for byte.

pub mod config;
pub mod experiments;
pub mod rng;

pub use config::{require, Config};
pub use experiments::{
    count_monic_squarefree, decimal6, density_experiment, family_count, family_shape,
    parse_guarantee, parse_mode, parse_out, qualifying_box_count, qualifying_kinds,
    run_count_squarefree, run_density, run_show_disc, run_theorem_check, run_verify_monomials,
    theorem_check_with, CliError, DensityReport, DensityRow, Mode, TheoremStats,
    ENUMERATION_CAP, EXHAUSTIVE_BOX_CAP,
};
pub use rng::Xoshiro256;
