use anyhow::{bail, Context, Result};
use ffalg::PrimeField;
use serde::{Deserialize, Serialize};

pub const PRIME_ENV: &str = "SCHUBERT_PRIME";
pub const DEFAULT_PRIME: u64 = 10007;
pub const DEFAULT_SAMPLES: usize = 50_000;
pub const CHECKPOINT_EVERY: usize = 1000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Filters {
    pub essential_only: bool,
    pub nontrivial_only: bool,
    pub simple_only: bool,
    pub max_degree: Option<u64>,
}

/// Everything that determines a report's contents. The output path is not
/// part of it, so reports written to different files still compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunConfig {
    pub k: usize,
    pub n: usize,
    pub prime: u64,
    pub samples: usize,
    pub seed: u64,
    pub workers: usize,
    pub filters: Filters,
    pub format: Format,
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if self.k == 0 || self.n == 0 {
            bail!("-g K N must be positive");
        }
        if self.samples == 0 || self.workers == 0 {
            bail!("sample and worker counts must be positive");
        }
        if self.filters.max_degree == Some(0) {
            bail!("--max-degree must be positive");
        }
        validate_prime(self.prime)?;
        Ok(())
    }
}

pub fn validate_prime(p: u64) -> Result<u64> {
    PrimeField::new(p).with_context(|| format!("{p} is not a usable prime modulus"))?;
    Ok(p)
}

/// The default prime, overridden by the environment. Called once at startup
/// so a bad value fails every command, not just the ones that sample.
pub fn prime_from_env() -> Result<u64> {
    match std::env::var(PRIME_ENV) {
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_PRIME),
        Err(e) => bail!("{PRIME_ENV}: {e}"),
        Ok(s) => {
            let p: u64 = s.trim().parse().with_context(|| format!("{PRIME_ENV}={s:?} is not an integer"))?;
            validate_prime(p).with_context(|| format!("{PRIME_ENV}={s:?}"))
        }
    }
}
