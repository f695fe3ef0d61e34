mod commands;
mod config;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Result};
use clap::{Parser, Subcommand};

use commands::Ctx;
use config::{Filters, Format, RunConfig};
use schubert_core::fibration::Family;

#[derive(Parser)]
#[command(name = "schubert", version, about = "Galois groups of Schubert problems")]
struct Cli {
    /// Grassmannian Gr(K,N)
    #[arg(short = 'g', num_args = 2, value_names = ["K", "N"], global = true)]
    grassmannian: Option<Vec<usize>>,

    #[arg(long, default_value_t = 1, global = true)]
    seed: u64,

    /// Defaults to the number of available cores.
    #[arg(long, global = true)]
    workers: Option<usize>,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    /// Problems per checkpoint in long sweeps.
    #[arg(long, default_value_t = config::CHECKPOINT_EVERY, global = true, hide = true)]
    checkpoint_every: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Default)]
struct FilterArgs {
    #[arg(long)]
    essential_only: bool,
    /// Keep problems of degree 0 and 1.
    #[arg(long)]
    include_trivial: bool,
    /// Only problems with at most two conditions other than (1).
    #[arg(long)]
    simple_only: bool,
    #[arg(long)]
    max_degree: Option<u64>,
}

impl FilterArgs {
    fn filters(&self) -> Filters {
        Filters {
            essential_only: self.essential_only,
            nontrivial_only: !self.include_trivial,
            simple_only: self.simple_only,
            max_degree: self.max_degree,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// List problems with their degrees.
    Enumerate {
        #[command(flatten)]
        filters: FilterArgs,
    },
    /// Degree of one problem.
    Degree {
        #[arg(short = 'P', long)]
        problem: String,
    },
    /// Essentiality of every problem, with the reducing pair when not essential.
    EssentialScan {
        #[command(flatten)]
        filters: FilterArgs,
    },
    /// Tournament test for at-least-alternating groups.
    VakilScan {
        #[command(flatten)]
        filters: FilterArgs,
        #[arg(long, default_value_t = 4)]
        max_orderings: usize,
        /// Continue from the checkpoint next to --out.
        #[arg(long)]
        resume: bool,
    },
    /// Problems explained by the fibration families.
    ClassifyEnriched {
        #[arg(long)]
        family: Option<Family>,
    },
    /// Sample Frobenius cycle types and infer the Galois group.
    Frobenius {
        #[arg(short = 'P', long)]
        problem: String,
        #[arg(short = 'p', long)]
        prime: Option<u64>,
        #[arg(short = 'm', long, default_value_t = config::DEFAULT_SAMPLES)]
        samples: usize,
        /// Stop once the verdict is conclusive.
        #[arg(long)]
        early_exit: bool,
    },
    /// Essential problems through the tournament test, fibrations and sampling.
    Pipeline {
        #[arg(long, default_value_t = 4)]
        max_orderings: usize,
        /// Sample Frobenius elements for inconclusive problems.
        #[arg(long)]
        frobenius: bool,
        #[arg(short = 'p', long)]
        prime: Option<u64>,
        #[arg(short = 'm', long, default_value_t = config::DEFAULT_SAMPLES)]
        samples: usize,
        #[arg(long)]
        resume: bool,
    },
    /// Compare two JSON reports. Exits 1 when they differ.
    Diff { a: PathBuf, b: PathBuf },
}

fn context(cli: &Cli, prime: u64, samples: usize, filters: Filters) -> Result<Ctx> {
    let Some(g) = &cli.grassmannian else { bail!("this command needs -g K N") };
    let workers = cli.workers.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    let config = RunConfig { k: g[0], n: g[1], prime, samples, seed: cli.seed, workers, filters, format: cli.format };
    config.validate()?;
    Ok(Ctx { config, out: cli.out.clone(), checkpoint_every: cli.checkpoint_every })
}

fn run(cli: Cli) -> Result<bool> {
    let env_prime = config::prime_from_env()?;
    let none = Filters { nontrivial_only: true, ..Default::default() };
    let ctx = |prime: Option<u64>, samples, filters| context(&cli, prime.unwrap_or(env_prime), samples, filters);
    let m = config::DEFAULT_SAMPLES;
    match &cli.command {
        Command::Enumerate { filters } => commands::enumerate(&ctx(None, m, filters.filters())?)?,
        Command::Degree { problem } => commands::degree(&ctx(None, m, FilterArgs::default().filters())?, problem)?,
        Command::EssentialScan { filters } => commands::essential_scan(&ctx(None, m, filters.filters())?)?,
        Command::VakilScan { filters, max_orderings, resume } => {
            commands::vakil_scan(&ctx(None, m, filters.filters())?, *max_orderings, *resume)?
        }
        Command::ClassifyEnriched { family } => commands::classify(&ctx(None, m, none)?, *family)?,
        Command::Frobenius { problem, prime, samples, early_exit } => {
            commands::frobenius(&ctx(*prime, *samples, none)?, problem, *early_exit)?
        }
        Command::Pipeline { max_orderings, frobenius, prime, samples, resume } => {
            let filters = Filters { essential_only: true, ..none };
            commands::pipeline(&ctx(*prime, *samples, filters)?, *max_orderings, *frobenius, *resume)?
        }
        Command::Diff { a, b } => return commands::diff(a, b),
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
