//! Optional `key = value` configuration file for computation limits.

use std::path::Path;

use anyhow::{Context, Result};
use serde::Deserialize;

#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Config {
    /// Largest ground set accepted by the flat-lattice computations.
    pub max_ground: usize,
    /// Largest `n` for the braid family.
    pub max_braid_n: usize,
    /// Truncation order in `u` and `x` for the uniform series checks.
    pub gf_order: u32,
    /// Truncation order in `z` for the braid series checks.
    pub egf_order: usize,
    /// Largest symmetric-group degree for Kronecker products.
    pub max_kronecker_degree: usize,
}

impl Default for Config {
    fn default() -> Self {
        Self {
            max_ground: eqkl::lattice::DEFAULT_GROUND_LIMIT,
            max_braid_n: eqkl::braid::DEFAULT_MAX_N,
            gf_order: eqkl::uniform::gf::DEFAULT_ORDER,
            egf_order: eqkl::braid::egf::MAX_ORDER,
            max_kronecker_degree: eqkl::logconcave::DEFAULT_MAX_DEGREE,
        }
    }
}

impl Config {
    pub fn parse(text: &str) -> Result<Self> {
        Ok(toml::from_str(text)?)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        Self::parse(&text).with_context(|| format!("parsing {}", path.display()))
    }

    /// Push the process-wide limits into the library.
    pub fn apply(&self) {
        eqkl::braid::set_max_n(self.max_braid_n);
        eqkl::logconcave::set_max_degree(self.max_kronecker_degree);
    }
}
