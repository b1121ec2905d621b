use std::env;

use finaut_core::build::BuildOptions;
use serde::Serialize;

/// Resource limits in effect for one command.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Caps {
    /// Largest group materialized as an element table.
    pub max_elements: usize,
    /// Coset limit for Todd-Coxeter.
    pub max_cosets: usize,
    /// Largest automorphism group materialized as a table.
    pub max_order: usize,
    /// Wall-clock budget for long-running rows, in seconds.
    pub budget_secs: Option<u64>,
}

pub const ENV_MAX_ELEMENTS: &str = "FINAUT_MAX_ELEMENTS";
pub const ENV_MAX_COSETS: &str = "FINAUT_MAX_COSETS";
pub const ENV_MAX_ORDER: &str = "FINAUT_MAX_ORDER";
pub const ENV_BUDGET_SECS: &str = "FINAUT_BUDGET_SECS";

impl Default for Caps {
    fn default() -> Self {
        Caps { max_elements: 200_000, max_cosets: finaut_core::DEFAULT_MAX_COSETS, max_order: 200_000, budget_secs: None }
    }
}

impl Caps {
    /// Defaults overridden by `FINAUT_MAX_ELEMENTS`, `FINAUT_MAX_COSETS`,
    /// `FINAUT_MAX_ORDER` and `FINAUT_BUDGET_SECS`. Unparsable values are ignored.
    pub fn from_env() -> Caps {
        let get = |k: &str| env::var(k).ok().and_then(|v| v.trim().parse::<u64>().ok());
        let mut c = Caps::default();
        if let Some(v) = get(ENV_MAX_ELEMENTS) {
            c.max_elements = v as usize;
        }
        if let Some(v) = get(ENV_MAX_COSETS) {
            c.max_cosets = v as usize;
        }
        if let Some(v) = get(ENV_MAX_ORDER) {
            c.max_order = v as usize;
        }
        if let Some(v) = get(ENV_BUDGET_SECS) {
            c.budget_secs = Some(v);
        }
        c
    }

    pub fn build_options(&self) -> BuildOptions {
        BuildOptions { max_elements: self.max_elements, max_cosets: self.max_cosets }
    }
}
