//! `indpoly`: independence polynomials of graphs and graph products.
//!
//! Every command prints one JSON document on stdout. Exit codes: 0 success,
//! 1 a requested property or verification failed, 2 bad input, 3 a
//! resource or oracle bound was hit.

use std::io::Write;
use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use indpoly::engine::formula::recipe_poly;
use indpoly::engine::{independence_poly_brute, EngineConfig, MethodRegistry, ORACLE_BOUND_ENV};
use indpoly::error::{Error, Result};
use indpoly::families::FamilyRegistry;
use indpoly::graph::{Graph, VertexSet};
use indpoly::harness::{family_scan, run_campaign, CampaignParams, CampaignRegistry, DEFAULT_SEED};
use indpoly::poly::{parse_coeff_list, IntPoly};
use indpoly::products::{
    extract_random_clique_cover, extract_random_cycle_cover, CliqueCover, CycleCover, Instance, ProductRecipe,
};
use indpoly::properties::{analyze, PROPERTY_NAMES};

#[derive(Parser)]
#[command(name = "indpoly", version, about = "Independence polynomials of graphs and graph products")]
#[command(after_help = "Graph sources are JSON files (a graph or a product recipe) or family specs such as \
path:5, ktpath:3,4, K3, 2K1. The oracle bound can be overridden with INDPOLY_ORACLE_BOUND.")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Independence polynomial, independence number and property report.
    Compute {
        source: String,
        /// auto, branch, brute, formula or convolution.
        #[arg(long, default_value = "auto")]
        method: String,
        /// Second method to compute with and compare against.
        #[arg(long)]
        cross_check: Option<String>,
    },
    /// Build a product and compare its closed-form polynomial with the oracle.
    Product {
        kind: ProductKind,
        g: String,
        h: String,
        /// Cover file, `random:SEED` or `vertex` (singletons / vertex-cycles).
        #[arg(long, default_value = "vertex")]
        cover: String,
        /// `all` or a comma-separated vertex list of H.
        #[arg(long, default_value = "all")]
        u: String,
        /// Root of H for rooted products.
        #[arg(long, default_value_t = 0)]
        root: usize,
    },
    /// Property report; succeeds only if every requested property holds.
    Check {
        source: Option<String>,
        /// Coefficients, constant term first, e.g. `1,4,3`.
        #[arg(long, conflicts_with = "source")]
        poly: Option<String>,
        /// Comma-separated subset of symmetric, unimodal, log-concave, real-rooted.
        #[arg(long, value_delimiter = ',')]
        props: Vec<String>,
    },
    /// Run a seeded verification campaign, or `families` for a family scan.
    Verify {
        campaign: String,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        max_n_g: Option<usize>,
        #[arg(long)]
        max_n_h: Option<usize>,
        /// Family spec with ranges, for `verify families`.
        #[arg(long)]
        spec: Option<String>,
    },
    /// Emit the graph JSON of a family member.
    Family { spec: String },
    /// List methods, families and campaigns.
    List,
}

#[derive(Clone, Copy, ValueEnum)]
enum ProductKind {
    Ccp,
    Cycle,
    Corona,
    Rooted,
}

enum Outcome {
    Ok(Value),
    Failed(Value),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = EngineConfig::from_env();
    match run(cli.command, &cfg) {
        Ok(Outcome::Ok(v)) => {
            emit(&v);
            ExitCode::SUCCESS
        }
        Ok(Outcome::Failed(v)) => {
            emit(&v);
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            if let Error::OracleBound { .. } = e {
                eprintln!("hint: raise {ORACLE_BOUND_ENV} or use --method branch");
            }
            ExitCode::from(exit_code(&e))
        }
    }
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(v: &Value) {
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{}", serde_json::to_string_pretty(v).expect("json"));
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::OracleBound { .. } | Error::ResourceLimit(_) => 3,
        _ => 2,
    }
}

fn to_json<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn run(command: Command, cfg: &EngineConfig) -> Result<Outcome> {
    let families = FamilyRegistry::default();
    match command {
        Command::Compute { source, method, cross_check } => compute(&families, cfg, &source, &method, cross_check.as_deref()),
        Command::Product { kind, g, h, cover, u, root } => product(&families, cfg, kind, &g, &h, &cover, &u, root),
        Command::Check { source, poly, props } => check(&families, cfg, source.as_deref(), poly.as_deref(), &props),
        Command::Verify { campaign, trials, seed, max_n_g, max_n_h, spec } => {
            if campaign == "families" {
                let spec = spec.ok_or_else(|| Error::Parse("verify families needs --spec".into()))?;
                let rows = family_scan(&spec, &families, cfg)?;
                return Ok(Outcome::Ok(json!({ "spec": spec, "rows": to_json(&rows) })));
            }
            let campaigns = CampaignRegistry::default();
            let params = CampaignParams { trials, seed, max_n_g, max_n_h };
            let report = run_campaign(campaigns.get(&campaign)?, &params, cfg);
            let v = to_json(&report);
            Ok(if report.passed { Outcome::Ok(v) } else { Outcome::Failed(v) })
        }
        Command::Family { spec } => {
            let inst = families.resolve(&spec)?;
            Ok(Outcome::Ok(to_json(&inst.graph.to_json(Some(spec)))))
        }
        Command::List => {
            let methods = MethodRegistry::default();
            Ok(Outcome::Ok(json!({
                "methods": methods.iter().map(|m| json!({ "name": m.name(), "description": m.description() })).collect::<Vec<_>>(),
                "families": families.iter().map(|f| json!({ "name": f.name(), "args": f.usage() })).collect::<Vec<_>>(),
                "campaigns": CampaignRegistry::default().iter().map(|c| json!({ "name": c.name(), "description": c.description() })).collect::<Vec<_>>(),
                "properties": PROPERTY_NAMES,
            })))
        }
    }
}

/// A JSON file (graph or product recipe) or a family spec.
fn resolve_source(families: &FamilyRegistry, source: &str) -> Result<Instance> {
    if Path::new(source).is_file() {
        let text = std::fs::read_to_string(source)?;
        let value: Value = serde_json::from_str(&text)?;
        if value.get("kind").is_some() {
            return Instance::from_recipe(serde_json::from_value(value)?);
        }
        // a campaign failure payload carries its recipe under "recipe"
        if let Some(recipe) = value.get("recipe").or_else(|| value.pointer("/instance/recipe")) {
            return Instance::from_recipe(serde_json::from_value(recipe.clone())?);
        }
        let graph: Graph = serde_json::from_value(value)?;
        return Ok(Instance::plain(graph));
    }
    families.resolve(source)
}

fn resolve_graph(families: &FamilyRegistry, source: &str) -> Result<Graph> {
    Ok(resolve_source(families, source)?.graph)
}

fn compute(families: &FamilyRegistry, cfg: &EngineConfig, source: &str, method: &str, cross: Option<&str>) -> Result<Outcome> {
    let methods = MethodRegistry::default();
    let inst = resolve_source(families, source)?;
    let poly = methods.get(method)?.compute(&inst, cfg)?;
    let mut out = json!({
        "poly": to_json(&poly),
        "alpha": poly.degree().unwrap_or(0),
        "report": to_json(&analyze(&poly)),
    });
    if let Some(other) = cross {
        let other_poly = methods.get(other)?.compute(&inst, cfg)?;
        let matched = other_poly == poly;
        out["cross_check"] = json!({ "method": other, "poly": to_json(&other_poly), "match": matched });
        if !matched {
            return Ok(Outcome::Failed(out));
        }
    }
    Ok(Outcome::Ok(out))
}

fn parse_u(spec: &str, h: &Graph) -> Result<VertexSet> {
    if spec == "all" {
        return Ok(VertexSet::all(h.n()));
    }
    if spec.is_empty() || spec == "none" {
        return Ok(VertexSet::empty());
    }
    let members = spec
        .split(',')
        .map(|s| s.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad vertex `{s}` in --u"))))
        .collect::<Result<Vec<_>>>()?;
    let u = VertexSet::new(members);
    u.check_within(h.n())?;
    Ok(u)
}

fn random_seed(spec: &str) -> Result<Option<u64>> {
    match spec.strip_prefix("random:") {
        Some(seed) => seed.parse().map(Some).map_err(|_| Error::Parse(format!("bad cover seed `{seed}`"))),
        None => Ok(None),
    }
}

fn clique_cover_arg(spec: &str, g: &Graph) -> Result<CliqueCover> {
    if spec == "vertex" {
        return Ok(CliqueCover::singletons(g.n()));
    }
    if let Some(seed) = random_seed(spec)? {
        return Ok(extract_random_clique_cover(g, seed));
    }
    Ok(serde_json::from_str(&std::fs::read_to_string(spec)?)?)
}

fn cycle_cover_arg(spec: &str, g: &Graph) -> Result<CycleCover> {
    if spec == "vertex" {
        return Ok(CycleCover::all_vertices(g.n()));
    }
    if let Some(seed) = random_seed(spec)? {
        return Ok(extract_random_cycle_cover(g, seed));
    }
    Ok(serde_json::from_str(&std::fs::read_to_string(spec)?)?)
}

#[allow(clippy::too_many_arguments)]
fn product(
    families: &FamilyRegistry,
    cfg: &EngineConfig,
    kind: ProductKind,
    g: &str,
    h: &str,
    cover: &str,
    u: &str,
    root: usize,
) -> Result<Outcome> {
    let g = resolve_graph(families, g)?;
    let h = resolve_graph(families, h)?;
    let recipe = match kind {
        ProductKind::Ccp => ProductRecipe::CliqueCover {
            cover: clique_cover_arg(cover, &g)?,
            attach: parse_u(u, &h)?,
            base: g,
            fiber: h,
        },
        ProductKind::Cycle => ProductRecipe::CycleCover {
            cover: cycle_cover_arg(cover, &g)?,
            attach: parse_u(u, &h)?,
            base: g,
            fiber: h,
        },
        ProductKind::Corona => ProductRecipe::corona(&g, &h),
        ProductKind::Rooted => ProductRecipe::rooted(&g, &h, root)?,
    };
    let graph = recipe.build()?;
    let formula = recipe_poly(&recipe, cfg)?;
    let (oracle_method, oracle) = if graph.n() <= cfg.oracle_bound {
        ("brute", independence_poly_brute(&graph, cfg)?)
    } else {
        ("branch", indpoly::engine::independence_poly_with(&graph, cfg)?)
    };
    let matched = formula == oracle;
    let out = json!({
        "graph": to_json(&graph.to_json(None)),
        "recipe": to_json(&recipe),
        "formula": to_json(&formula),
        "oracle": to_json(&oracle),
        "oracle_method": oracle_method,
        "match": matched,
    });
    Ok(if matched { Outcome::Ok(out) } else { Outcome::Failed(out) })
}

fn check(
    families: &FamilyRegistry,
    cfg: &EngineConfig,
    source: Option<&str>,
    poly: Option<&str>,
    props: &[String],
) -> Result<Outcome> {
    let p: IntPoly = match (source, poly) {
        (_, Some(list)) => parse_coeff_list(list)?,
        (Some(src), None) => indpoly::engine::independence_poly_with(&resolve_graph(families, src)?, cfg)?,
        (None, None) => return Err(Error::Parse("check needs a graph source or --poly".into())),
    };
    let report = analyze(&p);
    let mut verdicts = serde_json::Map::new();
    let mut all = true;
    for prop in props {
        let holds = report.holds(prop.trim())?;
        all &= holds;
        verdicts.insert(prop.trim().to_string(), json!(holds));
    }
    let out = json!({ "poly": to_json(&p), "report": to_json(&report), "props": verdicts, "all_hold": all });
    Ok(if all { Outcome::Ok(out) } else { Outcome::Failed(out) })
}
