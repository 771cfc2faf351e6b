use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use super::{random_graph, random_maximal_independent_set, random_subset, Campaign, Sizes, TrialLog};
use crate::engine::formula::{
    ccp_poly, corona_poly, cycle_cover_poly, pendant_rooted_product_poly, rooted_product_poly,
};
use crate::engine::{
    ccp_poly_convolution, check_stevanovic_condition, independence_poly_with, stevanovic_formula, EngineConfig,
};
use crate::error::Result;
use crate::families::{complete, complete_minus_edge, empty, path};
use crate::graph::{Graph, VertexSet};
use crate::poly::IntPoly;
use crate::products::{
    corona, random_clique_cover, random_cycle_cover, root_neighborhood_in_remainder, rooted_product, CliqueCover,
    ProductRecipe,
};
use crate::properties::{analyze, has_only_real_zeros, is_log_concave, is_symmetric, is_unimodal};

/// Resampling attempts before falling back to a path.
const RESAMPLE_TRIES: usize = 64;

fn to_json<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn mismatch(recipe: &ProductRecipe, expected: &IntPoly, actual: &IntPoly) -> Value {
    json!({ "recipe": to_json(recipe), "oracle": to_json(expected), "computed": to_json(actual) })
}

fn with_poly(recipe: &ProductRecipe, poly: &IntPoly) -> Value {
    json!({ "recipe": to_json(recipe), "poly": to_json(poly), "report": to_json(&analyze(poly)) })
}

fn real_rooted(p: &IntPoly) -> bool {
    has_only_real_zeros(p).unwrap_or(false)
}

fn log_concave(p: &IntPoly) -> bool {
    is_log_concave(p).map(|l| l.log_concave).unwrap_or(false)
}

fn symmetric_unimodal(p: &IntPoly) -> bool {
    is_symmetric(p) && is_unimodal(p).map(|u| u.unimodal).unwrap_or(false)
}

/// Draws random graphs until `accept` holds; after [`RESAMPLE_TRIES`]
/// misses returns a path of the last drawn order, which satisfies every
/// predicate used here (claw-free, real-rooted, log-concave).
fn sample_where(
    rng: &mut ChaCha8Rng,
    max_n: usize,
    p_index: usize,
    log: &mut TrialLog,
    accept: impl Fn(&Graph) -> Result<bool>,
) -> Result<Graph> {
    let mut last_n = 1;
    for _ in 0..RESAMPLE_TRIES {
        let g = random_graph(rng, max_n, p_index);
        if accept(&g)? {
            return Ok(g);
        }
        last_n = g.n();
        log.count("resampled");
    }
    log.count("fallback-path");
    Ok(path(last_n))
}

fn real_rooted_graph(rng: &mut ChaCha8Rng, max_n: usize, p_index: usize, cfg: &EngineConfig, log: &mut TrialLog) -> Result<Graph> {
    sample_where(rng, max_n, p_index, log, |g| Ok(real_rooted(&independence_poly_with(g, cfg)?)))
}

/// Random `(G, clique cover, H, U)`; checks the closed form, the
/// divisibility by `I(H)^(q - α(G))` and the coefficient convolution
/// against the oracle.
pub struct CcpCampaign;

impl Campaign for CcpCampaign {
    fn name(&self) -> &'static str {
        "ccp"
    }

    fn description(&self) -> &'static str {
        "clique cover product formula, divisibility and convolution against the oracle"
    }

    fn default_sizes(&self) -> (usize, usize) {
        (7, 5)
    }

    fn trial(&self, index: usize, rng: &mut ChaCha8Rng, sizes: Sizes, cfg: &EngineConfig, log: &mut TrialLog) -> Result<()> {
        let g = random_graph(rng, sizes.max_n_g, index);
        let cover = random_clique_cover(&g, rng);
        let h = random_graph(rng, sizes.max_n_h, index / 3);
        let u = random_subset(rng, h.n());
        let recipe = ProductRecipe::CliqueCover { base: g.clone(), cover: cover.clone(), fiber: h.clone(), attach: u.clone() };

        let text = serde_json::to_string(&recipe)?;
        log.check("roundtrip", serde_json::from_str::<ProductRecipe>(&text).ok().as_ref() == Some(&recipe), || {
            json!({ "recipe": to_json(&recipe) })
        });

        let oracle = log.oracle_poly(&recipe.build()?, cfg)?;
        let formula = ccp_poly(&g, &cover, &h, &u, cfg)?;
        log.check("formula", formula == oracle, || mismatch(&recipe, &oracle, &formula));

        let ig = log.oracle_poly(&g, cfg)?;
        let ih = log.oracle_poly(&h, cfg)?;
        let ihu = log.oracle_poly(&h.delete_vertices(&u)?, cfg)?;
        let alpha = ig.degree().unwrap_or(0);
        let divisor = ih.pow_usize(cover.len() - alpha);
        log.check("divisibility", oracle.exact_divide(&divisor).is_ok(), || {
            json!({ "recipe": to_json(&recipe), "oracle": to_json(&oracle), "divisor": to_json(&divisor) })
        });

        let conv = ccp_poly_convolution(&ig, &ih, &ihu, cover.len())?;
        log.check("convolution", conv == oracle, || mismatch(&recipe, &oracle, &conv));
        Ok(())
    }
}

/// Random cycle cover products against the oracle; when the cover has no
/// proper cycle, also against the clique cover product with `2H` and `2U`.
pub struct CycleCoverCampaign;

impl Campaign for CycleCoverCampaign {
    fn name(&self) -> &'static str {
        "cycle"
    }

    fn description(&self) -> &'static str {
        "cycle cover product formula against the oracle, and the doubled clique cover form"
    }

    fn default_sizes(&self) -> (usize, usize) {
        (6, 4)
    }

    fn trial(&self, index: usize, rng: &mut ChaCha8Rng, sizes: Sizes, cfg: &EngineConfig, log: &mut TrialLog) -> Result<()> {
        let g = random_graph(rng, sizes.max_n_g, index);
        let cover = random_cycle_cover(&g, rng);
        let h = random_graph(rng, sizes.max_n_h, index / 3);
        let u = random_subset(rng, h.n());
        let recipe = ProductRecipe::CycleCover { base: g.clone(), cover: cover.clone(), fiber: h.clone(), attach: u.clone() };

        let oracle = log.oracle_poly(&recipe.build()?, cfg)?;
        let formula = cycle_cover_poly(&g, &cover, &h, &u, cfg)?;
        log.check("formula", formula == oracle, || mismatch(&recipe, &oracle, &formula));

        if cover.has_proper_cycle() {
            log.count("proper-cycle");
        } else if let Some(cliques) = cover.as_clique_cover() {
            let doubled_u: VertexSet = u.iter().chain(u.iter().map(|v| v + h.n())).collect();
            let doubled = ccp_poly(&g, &cliques, &h.copies(2), &doubled_u, cfg)?;
            log.check("doubled-clique-cover", doubled == oracle, || mismatch(&recipe, &oracle, &doubled));
        }
        Ok(())
    }
}

/// `G ∘ H` against the oracle, by the corona form and by the clique cover
/// form with singleton cliques.
pub struct CoronaCampaign;

impl Campaign for CoronaCampaign {
    fn name(&self) -> &'static str {
        "corona"
    }

    fn description(&self) -> &'static str {
        "corona product formula against the oracle"
    }

    fn default_sizes(&self) -> (usize, usize) {
        (7, 5)
    }

    fn trial(&self, index: usize, rng: &mut ChaCha8Rng, sizes: Sizes, cfg: &EngineConfig, log: &mut TrialLog) -> Result<()> {
        let g = random_graph(rng, sizes.max_n_g, index);
        let h = random_graph(rng, sizes.max_n_h, index / 3);
        let recipe = ProductRecipe::corona(&g, &h);
        let oracle = log.oracle_poly(&corona(&g, &h), cfg)?;
        let formula = corona_poly(&g, &h, cfg)?;
        log.check("formula", formula == oracle, || mismatch(&recipe, &oracle, &formula));
        let general = ccp_poly(&g, &CliqueCover::singletons(g.n()), &h, &VertexSet::all(h.n()), cfg)?;
        log.check("singleton-cover", general == oracle, || mismatch(&recipe, &oracle, &general));
        Ok(())
    }
}

/// `G ō H` with a random root against the oracle. Odd trials give `H` a
/// pendant root so the pendant form is exercised as well.
pub struct RootedCampaign;

impl Campaign for RootedCampaign {
    fn name(&self) -> &'static str {
        "rooted"
    }

    fn description(&self) -> &'static str {
        "rooted product formula, including the pendant-root form, against the oracle"
    }

    fn default_sizes(&self) -> (usize, usize) {
        (7, 5)
    }

    fn trial(&self, index: usize, rng: &mut ChaCha8Rng, sizes: Sizes, cfg: &EngineConfig, log: &mut TrialLog) -> Result<()> {
        let g = random_graph(rng, sizes.max_n_g, index);
        let (h, root) = if index % 2 == 1 && sizes.max_n_h >= 2 {
            let base = random_graph(rng, sizes.max_n_h - 1, index / 3);
            let anchor = rng.gen_range(0..base.n());
            let mut edges: Vec<(usize, usize)> = base.edges().collect();
            edges.push((anchor, base.n()));
            (Graph::from_edges(base.n() + 1, &edges)?, base.n())
        } else {
            let h = random_graph(rng, sizes.max_n_h, index / 3);
            let root = rng.gen_range(0..h.n());
            (h, root)
        };
        let recipe = ProductRecipe::rooted(&g, &h, root)?;
        let oracle = log.oracle_poly(&rooted_product(&g, &h, root)?, cfg)?;
        let formula = rooted_product_poly(&g, &h, root, cfg)?;
        log.check("formula", formula == oracle, || mismatch(&recipe, &oracle, &formula));
        if h.degree(root) == 1 {
            let pendant = pendant_rooted_product_poly(&g, &h, root, cfg)?;
            log.check("pendant", pendant == oracle, || mismatch(&recipe, &oracle, &pendant));
        }
        Ok(())
    }
}

/// `G ∘ 2K_1` with `S` the pendant vertices satisfies the neighbourhood
/// condition; the expansion must then equal the oracle and be symmetric
/// and unimodal. Random maximal independent sets of `G` itself are tried
/// too, checked only when the condition happens to hold.
pub struct StevanovicCampaign;

impl Campaign for StevanovicCampaign {
    fn name(&self) -> &'static str {
        "stevanovic"
    }

    fn description(&self) -> &'static str {
        "symmetric expansion under the neighbourhood condition"
    }

    fn default_sizes(&self) -> (usize, usize) {
        (6, 2)
    }

    fn trial(&self, index: usize, rng: &mut ChaCha8Rng, sizes: Sizes, cfg: &EngineConfig, log: &mut TrialLog) -> Result<()> {
        let g = random_graph(rng, sizes.max_n_g, index);
        let n = g.n();
        let product = corona(&g, &empty(2));
        let s: VertexSet = (n..3 * n).collect();
        let instance = || json!({ "graph": to_json(&product.to_json(None)), "s": to_json(&s) });
        let holds = check_stevanovic_condition(&product, &s)?;
        log.check("condition", holds, instance);
        if holds {
            let oracle = log.oracle_poly(&product, cfg)?;
            let expansion = stevanovic_formula(&product, &s)?;
            log.check("formula", expansion == oracle, || {
                json!({ "graph": to_json(&product.to_json(None)), "s": to_json(&s), "oracle": to_json(&oracle), "computed": to_json(&expansion) })
            });
            log.check("symmetric-unimodal", symmetric_unimodal(&expansion), || {
                json!({ "graph": to_json(&product.to_json(None)), "poly": to_json(&expansion) })
            });
        }

        let s = random_maximal_independent_set(rng, &g);
        if check_stevanovic_condition(&g, &s)? {
            log.count("condition-held-on-base");
            let oracle = log.oracle_poly(&g, cfg)?;
            let expansion = stevanovic_formula(&g, &s)?;
            log.check("formula-on-base", expansion == oracle, || {
                json!({ "graph": to_json(&g.to_json(None)), "s": to_json(&s), "oracle": to_json(&oracle), "computed": to_json(&expansion) })
            });
        }
        Ok(())
    }
}

/// Hypothesis pools with `α(H) = α(H - U) + 2` and both polynomials
/// symmetric and unimodal: `2K_1`, `K_3 - e`, `P_3`, each with `U = V(H)`.
pub fn symmetry_pool() -> Vec<(&'static str, Graph)> {
    vec![
        ("2K1", empty(2)),
        ("K3-e", complete_minus_edge(3).expect("p >= 2")),
        ("P3", path(3)),
    ]
}

/// Every trial draws one `(G, clique cover)` and checks it against each
/// pool member, plus a cycle cover product with `H = K_1`, `U = V`.
pub struct SymmetryCampaign;

impl Campaign for SymmetryCampaign {
    fn name(&self) -> &'static str {
        "symmetry"
    }

    fn description(&self) -> &'static str {
        "symmetry and unimodality of products over the hypothesis pools"
    }

    fn default_sizes(&self) -> (usize, usize) {
        (7, 3)
    }

    fn trial(&self, index: usize, rng: &mut ChaCha8Rng, sizes: Sizes, cfg: &EngineConfig, log: &mut TrialLog) -> Result<()> {
        let g = random_graph(rng, sizes.max_n_g, index);
        let cover = random_clique_cover(&g, rng);
        for (name, h) in symmetry_pool() {
            let recipe = ProductRecipe::CliqueCover {
                base: g.clone(),
                cover: cover.clone(),
                fiber: h.clone(),
                attach: VertexSet::all(h.n()),
            };
            let poly = independence_poly_with(&recipe.build()?, cfg)?;
            log.check(&format!("symmetric-unimodal:{name}"), symmetric_unimodal(&poly), || with_poly(&recipe, &poly));
        }

        let cycles = random_cycle_cover(&g, rng);
        let recipe = ProductRecipe::CycleCover { base: g.clone(), cover: cycles, fiber: complete(1), attach: VertexSet::all(1) };
        let poly = independence_poly_with(&recipe.build()?, cfg)?;
        log.check("cycle-symmetric-unimodal:K1", symmetric_unimodal(&poly), || with_poly(&recipe, &poly));
        Ok(())
    }
}

/// `(name, H, a, b)` with `U = V(H)`, so `I(H) = I(H - U)(a x^2 + b x + 1)`
/// where `I(H - U) = 1`.
pub fn factor_pool(rng: &mut impl Rng, index: usize) -> (String, Graph, i64, i64) {
    match index % 3 {
        0 => {
            let p = rng.gen_range(1..=4);
            (format!("K{p}"), complete(p), 0, p as i64)
        }
        1 => {
            let p = rng.gen_range(2..=4);
            (format!("K{p}-e"), complete_minus_edge(p).expect("p >= 2"), 1, p as i64)
        }
        _ => ("2K1".to_string(), empty(2), 1, 2),
    }
}

/// Real-rootedness and log-concavity transfer through factor-shaped `H`.
pub struct RealLogConcaveCampaign;

impl Campaign for RealLogConcaveCampaign {
    fn name(&self) -> &'static str {
        "real-logconcave"
    }

    fn description(&self) -> &'static str {
        "real zeros and log-concavity of products with H = I(H - U)(ax^2 + bx + 1)"
    }

    fn default_sizes(&self) -> (usize, usize) {
        (7, 4)
    }

    fn trial(&self, index: usize, rng: &mut ChaCha8Rng, sizes: Sizes, cfg: &EngineConfig, log: &mut TrialLog) -> Result<()> {
        let g = real_rooted_graph(rng, sizes.max_n_g, index, cfg, log)?;
        let cover = random_clique_cover(&g, rng);
        let (name, h, a, b) = factor_pool(rng, index);
        let u = VertexSet::all(h.n());
        let ih = independence_poly_with(&h, cfg)?;
        let ihu = independence_poly_with(&h.delete_vertices(&u)?, cfg)?;
        let factor = IntPoly::from_i64s(&[1, b, a]);
        log.check(&format!("factorization:{name}"), ih.exact_divide(&ihu).ok() == Some(factor.clone()), || {
            json!({ "h": to_json(&h.to_json(Some(name.clone()))), "i_h": to_json(&ih), "factor": to_json(&factor) })
        });

        let recipe = ProductRecipe::CliqueCover { base: g.clone(), cover: cover.clone(), fiber: h.clone(), attach: u.clone() };
        let poly = independence_poly_with(&recipe.build()?, cfg)?;
        if real_rooted(&ih) {
            log.check("real-rooted", real_rooted(&poly), || with_poly(&recipe, &poly));
        }
        if log_concave(&ihu) && log_concave(&factor) {
            log.check("log-concave", log_concave(&poly), || with_poly(&recipe, &poly));
        }

        // a = 0 with I(G) merely log-concave
        let g2 = sample_where(rng, sizes.max_n_g, index / 3, log, |g| Ok(log_concave(&independence_poly_with(g, cfg)?)))?;
        let p = rng.gen_range(1..=sizes.max_n_h.max(1));
        let kp = complete(p);
        let recipe = ProductRecipe::CliqueCover {
            base: g2.clone(),
            cover: random_clique_cover(&g2, rng),
            fiber: kp.clone(),
            attach: VertexSet::all(p),
        };
        let poly = independence_poly_with(&recipe.build()?, cfg)?;
        log.check("log-concave:a=0", log_concave(&poly), || with_poly(&recipe, &poly));
        Ok(())
    }
}

/// Real-rooted `G` with a random clique cover, claw-free `H` with a random
/// root `v`, `U = N(v)`: the product with `H - v` must be real-rooted. Also
/// `G ō H` and `P_n ō H` for `n = 1..=8` by trial index.
pub struct RootedRealCampaign;

impl Campaign for RootedRealCampaign {
    fn name(&self) -> &'static str {
        "rooted-real"
    }

    fn description(&self) -> &'static str {
        "real zeros of products with a rooted claw-free graph"
    }

    fn default_sizes(&self) -> (usize, usize) {
        (6, 6)
    }

    fn trial(&self, index: usize, rng: &mut ChaCha8Rng, sizes: Sizes, cfg: &EngineConfig, log: &mut TrialLog) -> Result<()> {
        let g = real_rooted_graph(rng, sizes.max_n_g, index, cfg, log)?;
        let h = sample_where(rng, sizes.max_n_h, index / 3, log, |h| Ok(h.is_claw_free()))?;
        let root = rng.gen_range(0..h.n());
        let u = root_neighborhood_in_remainder(&h, root)?;
        let fiber = h.delete_vertex(root)?;

        let recipe = ProductRecipe::CliqueCover { base: g.clone(), cover: random_clique_cover(&g, rng), fiber: fiber.clone(), attach: u };
        let poly = independence_poly_with(&recipe.build()?, cfg)?;
        log.check("clique-cover-real-rooted", real_rooted(&poly), || with_poly(&recipe, &poly));

        let recipe = ProductRecipe::rooted(&g, &h, root)?;
        let poly = independence_poly_with(&recipe.build()?, cfg)?;
        log.check("rooted-real-rooted", real_rooted(&poly), || with_poly(&recipe, &poly));

        let recipe = ProductRecipe::rooted(&path(index % 8 + 1), &h, root)?;
        let poly = independence_poly_with(&recipe.build()?, cfg)?;
        log.check("path-rooted-real-rooted", real_rooted(&poly), || with_poly(&recipe, &poly));
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::{run_campaign, CampaignParams};

    #[test]
    fn pools_meet_their_hypotheses() {
        for (name, h) in symmetry_pool() {
            let ih = independence_poly_with(&h, &EngineConfig::default()).unwrap();
            assert_eq!(ih.degree(), Some(2), "{name}");
            assert!(symmetric_unimodal(&ih), "{name}");
        }
        let mut rng = crate::harness::trial_rng(0, 0);
        for i in 0..30 {
            let (name, h, a, b) = factor_pool(&mut rng, i);
            let ih = independence_poly_with(&h, &EngineConfig::default()).unwrap();
            assert_eq!(ih, IntPoly::from_i64s(&[1, b, a]), "{name}");
        }
    }

    #[test]
    fn small_runs_pass() {
        let cfg = EngineConfig::default();
        let params = CampaignParams::new(12, 5).with_sizes(4, 3);
        for c in crate::harness::CampaignRegistry::default().iter() {
            let r = run_campaign(c, &params, &cfg);
            assert!(r.passed, "{}: {:?}", c.name(), r.failures);
        }
    }
}
