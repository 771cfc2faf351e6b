//! Exact independence polynomials.
//!
//! [`brute`] enumerates vertex subsets and serves as the oracle;
//! [`branch`] is the memoized branching workhorse; [`formula`] evaluates the
//! closed forms for clique and cycle cover products; [`methods`] exposes all
//! of them behind one trait, selectable by name.

pub mod branch;
pub mod brute;
pub mod formula;
pub mod methods;
pub mod stevanovic;

pub use branch::{independence_number, independence_poly, independence_poly_with};
pub use brute::independence_poly_brute;
pub use formula::{
    ccp_poly_convolution, ccp_poly_formula, corona_poly_formula, cycle_cover_poly_formula,
    rooted_product_poly_formula,
};
pub use methods::{IndependenceMethod, MethodRegistry};
pub use stevanovic::{check_stevanovic_condition, stevanovic_formula};

/// Environment variable overriding [`EngineConfig::oracle_bound`].
pub const ORACLE_BOUND_ENV: &str = "INDPOLY_ORACLE_BOUND";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EngineConfig {
    /// Largest vertex count the subset-enumeration oracle accepts.
    pub oracle_bound: usize,
    /// Largest number of memo entries a single branching run may create.
    pub memo_limit: usize,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig { oracle_bound: 24, memo_limit: 20_000_000 }
    }
}

impl EngineConfig {
    /// Defaults, with the oracle bound taken from [`ORACLE_BOUND_ENV`] when
    /// set to a valid number.
    pub fn from_env() -> Self {
        let mut cfg = EngineConfig::default();
        if let Some(bound) = std::env::var(ORACLE_BOUND_ENV).ok().and_then(|v| v.trim().parse().ok()) {
            cfg.oracle_bound = bound;
        }
        cfg
    }
}
