//! `focal-images`: validate, inspect, classify, dualize and generate matrix
//! systems, and cross-check parametric models numerically.

mod commands;
mod document;
mod failure;
mod output;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "focal-images", version, about = "Focal images, classification and duality of matrix systems for degenerate Gauss maps")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Torsal,
    Cone,
    Hypersurface,
    Torse,
    Reducible,
    Valid,
    Plane,
    Symmetroid,
}

#[derive(Subcommand)]
enum Command {
    /// Check the symmetry relations and regularity of a system file.
    Validate {
        path: String,
        #[arg(long)]
        json: bool,
    },
    /// Print the focal hypersurface and hypercone.
    Focal {
        path: String,
        #[arg(long)]
        json: bool,
    },
    /// Classify a system and print the structure report.
    Classify {
        path: String,
        #[arg(long, conflicts_with = "text")]
        json: bool,
        #[arg(long)]
        text: bool,
        #[arg(long)]
        out: Option<String>,
    },
    /// Exchange the roles of the two matrix families.
    Dualize {
        path: String,
        #[arg(long)]
        out: Option<String>,
    },
    /// Generate a system (and a matched parametric model where available).
    Generate {
        kind: Kind,
        #[arg(long)]
        l: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        codim: Option<usize>,
        /// Ambient dimension for torse curves and planes.
        #[arg(long = "N", alias = "n")]
        ambient: Option<usize>,
        #[arg(long, env = "FOCAL_IMAGES_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<String>,
        #[arg(long)]
        model_out: Option<String>,
    },
    /// Measure gauss rank, generator linearity and singular points of a model.
    OracleCheck {
        model: String,
        #[arg(long, default_value_t = focal_core::oracle::DEFAULT_TOL)]
        tol: f64,
        #[arg(long, default_value_t = focal_core::oracle::MIN_SAMPLES)]
        samples: usize,
        #[arg(long, env = "FOCAL_IMAGES_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Validate { path, json } => commands::validate(&path, json),
        Command::Focal { path, json } => commands::focal(&path, json),
        Command::Classify { path, json, text: _, out } => commands::classify(&path, json, out.as_deref()),
        Command::Dualize { path, out } => commands::dualize(&path, out.as_deref()),
        Command::Generate {
            kind,
            l,
            r,
            codim,
            ambient,
            seed,
            out,
            model_out,
        } => commands::generate(
            kind,
            commands::Shape { l, r, codim, ambient },
            seed,
            out.as_deref(),
            model_out.as_deref(),
        ),
        Command::OracleCheck {
            model,
            tol,
            samples,
            seed,
            json,
        } => commands::oracle_check(&model, tol, samples, seed, json),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
