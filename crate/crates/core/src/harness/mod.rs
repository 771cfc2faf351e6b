//! Seeded verification campaigns and family scans.
//!
//! Each trial draws from its own ChaCha8 stream, selected by trial index
//! under the campaign seed, so parallel and serial runs give identical
//! reports. Failures carry the full instance as JSON for replay.

mod campaigns;
mod scan;

use std::collections::BTreeMap;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::engine::{independence_poly_brute, independence_poly_with, EngineConfig};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::poly::IntPoly;

pub use campaigns::{
    CcpCampaign, CoronaCampaign, CycleCoverCampaign, RealLogConcaveCampaign, RootedCampaign,
    RootedRealCampaign, StevanovicCampaign, SymmetryCampaign,
};
pub use scan::{family_scan, ScanRow};

/// Seed used when none is given.
pub const DEFAULT_SEED: u64 = 42;

/// Edge probabilities cycled through by trial index.
pub const EDGE_PROBABILITIES: [f64; 3] = [0.2, 0.5, 0.8];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CampaignParams {
    pub trials: usize,
    pub seed: u64,
    /// Overrides the campaign's default bound on `n(G)`.
    pub max_n_g: Option<usize>,
    /// Overrides the campaign's default bound on `n(H)`.
    pub max_n_h: Option<usize>,
}

impl CampaignParams {
    pub fn new(trials: usize, seed: u64) -> Self {
        CampaignParams { trials, seed, max_n_g: None, max_n_h: None }
    }

    pub fn with_sizes(mut self, max_n_g: usize, max_n_h: usize) -> Self {
        self.max_n_g = Some(max_n_g);
        self.max_n_h = Some(max_n_h);
        self
    }
}

/// Sizes a trial may draw up to, after defaults are applied.
#[derive(Debug, Clone, Copy)]
pub struct Sizes {
    pub max_n_g: usize,
    pub max_n_h: usize,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tally {
    pub run: usize,
    pub failed: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Failure {
    pub trial: usize,
    pub check: String,
    /// Operands, cover, attachment set and the disagreeing polynomials.
    pub instance: serde_json::Value,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrialReport {
    pub campaign: String,
    pub seed: u64,
    pub trials: usize,
    pub max_n_g: usize,
    pub max_n_h: usize,
    pub passed: bool,
    pub checks: BTreeMap<String, Tally>,
    /// Event counts such as which oracle ran or how often a hypothesis held.
    pub counts: BTreeMap<String, usize>,
    pub failures: Vec<Failure>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub elapsed_ms: Option<u64>,
}

impl TrialReport {
    /// JSON with the timing field dropped, for byte comparison.
    pub fn canonical_json(&self) -> String {
        let mut r = self.clone();
        r.elapsed_ms = None;
        serde_json::to_string(&r).expect("report serializes")
    }

    pub fn check_runs(&self, name: &str) -> usize {
        self.checks.get(name).map_or(0, |t| t.run)
    }
}

/// Records the outcome of the checks made during one trial.
#[derive(Debug, Default)]
pub struct TrialLog {
    trial: usize,
    checks: BTreeMap<String, Tally>,
    counts: BTreeMap<String, usize>,
    failures: Vec<Failure>,
}

impl TrialLog {
    fn new(trial: usize) -> Self {
        TrialLog { trial, ..Default::default() }
    }

    /// `instance` is only built when the check fails.
    pub fn check(&mut self, name: &str, ok: bool, instance: impl FnOnce() -> serde_json::Value) {
        let tally = self.checks.entry(name.to_string()).or_default();
        tally.run += 1;
        if !ok {
            tally.failed += 1;
            self.failures.push(Failure { trial: self.trial, check: name.to_string(), instance: instance() });
        }
    }

    pub fn count(&mut self, name: &str) {
        *self.counts.entry(name.to_string()).or_default() += 1;
    }

    /// Brute force within the oracle bound, branching above it.
    pub fn oracle_poly(&mut self, g: &Graph, cfg: &EngineConfig) -> Result<IntPoly> {
        if g.n() <= cfg.oracle_bound {
            self.count("oracle:brute");
            independence_poly_brute(g, cfg)
        } else {
            self.count("oracle:branch");
            independence_poly_with(g, cfg)
        }
    }
}

pub trait Campaign: Send + Sync {
    fn name(&self) -> &'static str;

    fn description(&self) -> &'static str;

    /// Default `(max n(G), max n(H))`.
    fn default_sizes(&self) -> (usize, usize);

    fn trial(&self, index: usize, rng: &mut ChaCha8Rng, sizes: Sizes, cfg: &EngineConfig, log: &mut TrialLog) -> Result<()>;
}

/// The RNG for trial `index`: the campaign seed with stream `index`.
pub fn trial_rng(seed: u64, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    rng
}

pub fn run_campaign(campaign: &dyn Campaign, params: &CampaignParams, cfg: &EngineConfig) -> TrialReport {
    let start = Instant::now();
    let (dg, dh) = campaign.default_sizes();
    let sizes = Sizes { max_n_g: params.max_n_g.unwrap_or(dg), max_n_h: params.max_n_h.unwrap_or(dh) };
    let logs: Vec<TrialLog> = (0..params.trials)
        .into_par_iter()
        .map(|index| {
            let mut log = TrialLog::new(index);
            let mut rng = trial_rng(params.seed, index);
            if let Err(e) = campaign.trial(index, &mut rng, sizes, cfg, &mut log) {
                log.check("error", false, || serde_json::json!({ "error": e.to_string() }));
            }
            log
        })
        .collect();

    let mut checks: BTreeMap<String, Tally> = BTreeMap::new();
    let mut counts: BTreeMap<String, usize> = BTreeMap::new();
    let mut failures = Vec::new();
    for log in logs {
        for (name, t) in log.checks {
            let total = checks.entry(name).or_default();
            total.run += t.run;
            total.failed += t.failed;
        }
        for (name, c) in log.counts {
            *counts.entry(name).or_default() += c;
        }
        failures.extend(log.failures);
    }
    TrialReport {
        campaign: campaign.name().to_string(),
        seed: params.seed,
        trials: params.trials,
        max_n_g: sizes.max_n_g,
        max_n_h: sizes.max_n_h,
        passed: failures.is_empty(),
        checks,
        counts,
        failures,
        elapsed_ms: Some(start.elapsed().as_millis() as u64),
    }
}

pub struct CampaignRegistry {
    campaigns: Vec<Box<dyn Campaign>>,
}

impl Default for CampaignRegistry {
    fn default() -> Self {
        let mut reg = CampaignRegistry { campaigns: Vec::new() };
        reg.register(Box::new(CcpCampaign));
        reg.register(Box::new(CycleCoverCampaign));
        reg.register(Box::new(CoronaCampaign));
        reg.register(Box::new(RootedCampaign));
        reg.register(Box::new(StevanovicCampaign));
        reg.register(Box::new(SymmetryCampaign));
        reg.register(Box::new(RealLogConcaveCampaign));
        reg.register(Box::new(RootedRealCampaign));
        reg
    }
}

impl CampaignRegistry {
    pub fn register(&mut self, campaign: Box<dyn Campaign>) {
        self.campaigns.retain(|c| c.name() != campaign.name());
        self.campaigns.push(campaign);
    }

    pub fn get(&self, name: &str) -> Result<&dyn Campaign> {
        self.campaigns
            .iter()
            .find(|c| c.name() == name)
            .map(|c| c.as_ref())
            .ok_or_else(|| Error::Unknown { kind: "campaign", name: name.to_string() })
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.campaigns.iter().map(|c| c.name()).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn Campaign> {
        self.campaigns.iter().map(|c| c.as_ref())
    }
}

/// `G(n, p)` with `n` uniform in `[1, max_n]` and `p` taken from
/// [`EDGE_PROBABILITIES`] by `p_index`.
pub fn random_graph(rng: &mut impl Rng, max_n: usize, p_index: usize) -> Graph {
    let n = rng.gen_range(1..=max_n.max(1));
    random_graph_on(rng, n, EDGE_PROBABILITIES[p_index % EDGE_PROBABILITIES.len()])
}

pub fn random_graph_on(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("simple by construction")
}

/// Each vertex independently with probability 1/2.
pub fn random_subset(rng: &mut impl Rng, n: usize) -> VertexSet {
    (0..n).filter(|_| rng.gen_bool(0.5)).collect()
}

/// A maximal independent set grown in random order.
pub fn random_maximal_independent_set(rng: &mut impl Rng, g: &Graph) -> VertexSet {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.shuffle(rng);
    let mut chosen: Vec<usize> = Vec::new();
    for v in order {
        if chosen.iter().all(|&c| !g.has_edge(c, v)) {
            chosen.push(v);
        }
    }
    VertexSet::new(chosen)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trial_streams_are_distinct_and_stable() {
        let a: u64 = trial_rng(7, 0).gen();
        let b: u64 = trial_rng(7, 1).gen();
        assert_ne!(a, b);
        assert_eq!(a, trial_rng(7, 0).gen::<u64>());
    }

    #[test]
    fn zero_trials_is_a_vacuous_pass() {
        let reg = CampaignRegistry::default();
        for c in reg.iter() {
            let r = run_campaign(c, &CampaignParams::new(0, 1), &EngineConfig::default());
            assert!(r.passed && r.failures.is_empty() && r.checks.is_empty(), "{}", c.name());
        }
    }

    #[test]
    fn registry_names() {
        let reg = CampaignRegistry::default();
        assert_eq!(
            reg.names(),
            vec!["ccp", "cycle", "corona", "rooted", "stevanovic", "symmetry", "real-logconcave", "rooted-real"]
        );
        assert!(reg.get("nope").is_err());
    }

    #[test]
    fn failures_drive_the_pass_flag() {
        let mut log = TrialLog::new(3);
        log.check("a", true, || unreachable!());
        log.check("a", false, || serde_json::json!({"x": 1}));
        assert_eq!(log.checks["a"], Tally { run: 2, failed: 1 });
        assert_eq!(log.failures[0].trial, 3);
    }

    #[test]
    fn random_sets() {
        let mut rng = trial_rng(1, 0);
        for i in 0..50 {
            let g = random_graph(&mut rng, 8, i);
            assert!((1..=8).contains(&g.n()));
            let s = random_maximal_independent_set(&mut rng, &g);
            assert!(g.is_independent_set(&s).unwrap());
            assert!(random_subset(&mut rng, g.n()).check_within(g.n()).is_ok());
        }
    }
}
