//! Named graph families, addressable by spec strings such as `path:5`,
//! `ktpath:3,4` or `spider:star,4`.
//!
//! Vertex conventions: paths use edges `{i, i+1}`; cycles add `{n-1, 0}`;
//! `K_p - e` removes `{0, 1}`; `K_{t,n}` has parts `0..t` and `t..t+n`;
//! stars have centre 0. One-indexed vertices `v_i` map to `i - 1`.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::products::{corona, CliqueCover, Instance, ProductRecipe};

fn edges_to_graph(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Graph {
    let edges: Vec<_> = edges.into_iter().collect();
    Graph::from_edges(n, &edges).expect("generator edges are simple")
}

pub fn path(n: usize) -> Graph {
    edges_to_graph(n, (1..n).map(|i| (i - 1, i)))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::Parameter(format!("cycle needs n >= 3, got {n}")));
    }
    Ok(edges_to_graph(n, (1..n).map(|i| (i - 1, i)).chain([(n - 1, 0)])))
}

pub fn complete(p: usize) -> Graph {
    edges_to_graph(p, (0..p).flat_map(|u| (u + 1..p).map(move |v| (u, v))))
}

/// `pK_1`
pub fn empty(p: usize) -> Graph {
    Graph::empty(p)
}

/// `K_p - e` with the edge `{0, 1}` removed.
pub fn complete_minus_edge(p: usize) -> Result<Graph> {
    if p < 2 {
        return Err(Error::Parameter(format!("K_p - e needs p >= 2, got {p}")));
    }
    Ok(edges_to_graph(
        p,
        (0..p).flat_map(|u| (u + 1..p).map(move |v| (u, v))).filter(|&e| e != (0, 1)),
    ))
}

pub fn complete_bipartite(t: usize, n: usize) -> Graph {
    edges_to_graph(t + n, (0..t).flat_map(|u| (t..t + n).map(move |v| (u, v))))
}

/// `K_{1,m}` with centre 0.
pub fn star(m: usize) -> Graph {
    complete_bipartite(1, m)
}

/// `W_n = P_n ∘ K_1`.
pub fn centipede(n: usize) -> Instance {
    Instance::from_recipe(ProductRecipe::corona(&path(n), &empty(1))).expect("corona is valid")
}

/// `P_n ∘ 2K_1`.
pub fn caterpillar(n: usize) -> Instance {
    Instance::from_recipe(ProductRecipe::corona(&path(n), &empty(2))).expect("corona is valid")
}

/// `C_n ∘ K_1`.
pub fn sunlet(n: usize) -> Result<Instance> {
    Instance::from_recipe(ProductRecipe::corona(&cycle(n)?, &empty(1)))
}

/// `K_{t,n} ∘ K_1`.
pub fn bipartite_corona(t: usize, n: usize) -> Instance {
    Instance::from_recipe(ProductRecipe::corona(&complete_bipartite(t, n), &empty(1))).expect("corona is valid")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpiderKind {
    K1,
    K2,
    /// `K_{1,m} ∘ K_1`, `m >= 1`.
    Star(usize),
}

/// Well-covered spiders.
pub fn spider(kind: SpiderKind) -> Result<Instance> {
    match kind {
        SpiderKind::K1 => Ok(Instance::plain(complete(1))),
        SpiderKind::K2 => Ok(Instance::plain(complete(2))),
        SpiderKind::Star(0) => Err(Error::Parameter("spider star needs m >= 1".into())),
        SpiderKind::Star(m) => Instance::from_recipe(ProductRecipe::corona(&star(m), &empty(1))),
    }
}

/// The `K_t`-path of length `k`: `k` copies of `K_t`, consecutive copies
/// sharing a `K_{t-1}`. Vertices `0..t+k-1`, with `{i, i+j}` an edge for
/// `1 <= j <= min(t-1, t+k-2-i)`.
pub fn kt_path(t: usize, k: usize) -> Result<Graph> {
    if t < 2 || k < 1 {
        return Err(Error::Parameter(format!("ktpath needs t >= 2, k >= 1, got t={t}, k={k}")));
    }
    let n = t + k - 1;
    Ok(edges_to_graph(
        n,
        (1..=t + k - 2).flat_map(|i| (1..=(t - 1).min(t + k - i - 1)).map(move |j| (i - 1, i + j - 1))),
    ))
}

/// The `d`-augmented `K_t`-path: `kt_path(t, k)` plus `d` new vertices for
/// each index `i` in `0..=t+k-2`. For `i >= 1` they are adjacent to `v_i`
/// and `v_{i+1}`; for `i = 0` to `v_1` only. New vertices follow the path
/// vertices, `i`-major.
pub fn augmented_kt_path(t: usize, k: usize, d: usize) -> Result<Graph> {
    let base = kt_path(t, k)?;
    let n = base.n();
    let mut edges: Vec<(usize, usize)> = base.edges().collect();
    let mut next = n;
    for i in 0..=t + k - 2 {
        for _ in 0..d {
            if i == 0 {
                edges.push((0, next));
            } else {
                edges.push((i - 1, next));
                edges.push((i, next));
            }
            next += 1;
        }
    }
    Graph::from_edges(next, &edges)
}

/// The clique cover of `P_n` used for the Levit–Mandrescu graphs: pairs
/// `{v_1 v_2}, {v_3 v_4}, ...` for even `n`; `{v_1}` then `{v_2 v_3}, ...`
/// for odd `n`.
pub fn levit_mandrescu_cover(n: usize) -> CliqueCover {
    let mut parts = Vec::new();
    let mut start = 0;
    if n % 2 == 1 {
        parts.push(VertexSet::new([0]));
        start = 1;
    }
    while start + 1 < n {
        parts.push(VertexSet::new([start, start + 1]));
        start += 2;
    }
    CliqueCover::new(parts)
}

/// `H_n`: `P_n` with an edge-pairing clique cover, each part joined to both
/// vertices of its own `2K_1`. `H_0` is the null graph.
pub fn levit_mandrescu(n: usize) -> Instance {
    let recipe = ProductRecipe::CliqueCover {
        base: path(n),
        cover: levit_mandrescu_cover(n),
        fiber: empty(2),
        attach: VertexSet::all(2),
    };
    Instance::from_recipe(recipe).expect("cover is valid")
}

/// A family generator that can be looked up by name.
pub trait FamilyGenerator: Send + Sync {
    fn name(&self) -> &'static str;

    /// Argument synopsis, e.g. `t,k`.
    fn usage(&self) -> &'static str;

    fn build(&self, args: &[&str]) -> Result<Instance>;
}

struct FnFamily {
    name: &'static str,
    usage: &'static str,
    build: fn(&[usize]) -> Result<Instance>,
    arity: usize,
}

impl FamilyGenerator for FnFamily {
    fn name(&self) -> &'static str {
        self.name
    }

    fn usage(&self) -> &'static str {
        self.usage
    }

    fn build(&self, args: &[&str]) -> Result<Instance> {
        if args.len() != self.arity {
            return Err(Error::Parse(format!(
                "{} expects {} argument(s) ({}), got {}",
                self.name,
                self.arity,
                self.usage,
                args.len()
            )));
        }
        let nums = args.iter().map(|a| parse_num(a)).collect::<Result<Vec<_>>>()?;
        (self.build)(&nums)
    }
}

struct SpiderFamily;

impl FamilyGenerator for SpiderFamily {
    fn name(&self) -> &'static str {
        "spider"
    }

    fn usage(&self) -> &'static str {
        "k1 | k2 | star,m"
    }

    fn build(&self, args: &[&str]) -> Result<Instance> {
        let kind = match args {
            ["k1"] | ["K1"] => SpiderKind::K1,
            ["k2"] | ["K2"] => SpiderKind::K2,
            ["star", m] => SpiderKind::Star(parse_num(m)?),
            _ => return Err(Error::Parse(format!("spider expects {}, got {:?}", self.usage(), args))),
        };
        spider(kind)
    }
}

fn parse_num(s: &str) -> Result<usize> {
    s.trim()
        .parse()
        .map_err(|_| Error::Parse(format!("expected a nonnegative integer, got `{s}`")))
}

pub struct FamilyRegistry {
    families: Vec<Box<dyn FamilyGenerator>>,
}

impl Default for FamilyRegistry {
    fn default() -> Self {
        macro_rules! fam {
            ($name:expr, $usage:expr, $arity:expr, $f:expr) => {
                Box::new(FnFamily { name: $name, usage: $usage, arity: $arity, build: $f })
            };
        }
        let families: Vec<Box<dyn FamilyGenerator>> = vec![
            fam!("path", "n", 1, |a| Ok(Instance::plain(path(a[0])))),
            fam!("cycle", "n", 1, |a| Ok(Instance::plain(cycle(a[0])?))),
            fam!("complete", "p", 1, |a| Ok(Instance::plain(complete(a[0])))),
            fam!("empty", "p", 1, |a| Ok(Instance::plain(empty(a[0])))),
            fam!("kminuse", "p", 1, |a| Ok(Instance::plain(complete_minus_edge(a[0])?))),
            fam!("kbip", "t,n", 2, |a| Ok(Instance::plain(complete_bipartite(a[0], a[1])))),
            fam!("star", "m", 1, |a| Ok(Instance::plain(star(a[0])))),
            fam!("centipede", "n", 1, |a| Ok(centipede(a[0]))),
            fam!("caterpillar", "n", 1, |a| Ok(caterpillar(a[0]))),
            fam!("sunlet", "n", 1, |a| sunlet(a[0])),
            fam!("kbipcorona", "t,n", 2, |a| Ok(bipartite_corona(a[0], a[1]))),
            fam!("ktpath", "t,k", 2, |a| Ok(Instance::plain(kt_path(a[0], a[1])?))),
            fam!("augktpath", "t,k,d", 3, |a| Ok(Instance::plain(augmented_kt_path(a[0], a[1], a[2])?))),
            fam!("lm", "n", 1, |a| Ok(levit_mandrescu(a[0]))),
            Box::new(SpiderFamily),
        ];
        FamilyRegistry { families }
    }
}

impl FamilyRegistry {
    pub fn register(&mut self, family: Box<dyn FamilyGenerator>) {
        self.families.retain(|f| f.name() != family.name());
        self.families.push(family);
    }

    pub fn get(&self, name: &str) -> Result<&dyn FamilyGenerator> {
        self.families
            .iter()
            .find(|f| f.name() == name)
            .map(|f| f.as_ref())
            .ok_or_else(|| Error::Unknown { kind: "family", name: name.to_string() })
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn FamilyGenerator> {
        self.families.iter().map(|f| f.as_ref())
    }

    /// Resolves `name:args` or a shorthand such as `K3`, `P4`, `C5`, `2K1`.
    pub fn resolve(&self, spec: &str) -> Result<Instance> {
        let spec = spec.trim();
        if let Some((name, args)) = spec.split_once(':') {
            let args: Vec<&str> = args.split(',').map(str::trim).collect();
            return self.get(name.trim())?.build(&args);
        }
        shorthand(spec).ok_or_else(|| Error::Parse(format!("unrecognised graph spec `{spec}`")))?
    }
}

fn shorthand(spec: &str) -> Option<Result<Instance>> {
    if let Some(count) = spec.strip_suffix("K1") {
        if count.is_empty() {
            return Some(Ok(Instance::plain(complete(1))));
        }
        return count.parse().ok().map(|p| Ok(Instance::plain(empty(p))));
    }
    let (head, tail) = spec.split_at(spec.char_indices().nth(1)?.0);
    let n: usize = tail.parse().ok()?;
    Some(match head {
        "K" => Ok(Instance::plain(complete(n))),
        "P" => Ok(Instance::plain(path(n))),
        "C" => cycle(n).map(Instance::plain),
        _ => return None,
    })
}

/// Expands numeric ranges `a..b` (inclusive) in a spec into the list of
/// concrete specs, e.g. `kbip:1..2,3` gives `kbip:1,3` and `kbip:2,3`.
pub fn expand_spec_range(spec: &str) -> Result<Vec<String>> {
    let Some((name, args)) = spec.trim().split_once(':') else {
        return Ok(vec![spec.trim().to_string()]);
    };
    let mut combos: Vec<Vec<String>> = vec![Vec::new()];
    for arg in args.split(',').map(str::trim) {
        let values: Vec<String> = match arg.split_once("..") {
            Some((lo, hi)) => {
                let (lo, hi) = (parse_num(lo)?, parse_num(hi.trim_start_matches('='))?);
                if lo > hi {
                    return Err(Error::Parse(format!("empty range `{arg}`")));
                }
                (lo..=hi).map(|v| v.to_string()).collect()
            }
            None => vec![arg.to_string()],
        };
        combos = combos
            .into_iter()
            .flat_map(|prefix| {
                values.iter().map(move |v| {
                    let mut next = prefix.clone();
                    next.push(v.clone());
                    next
                })
            })
            .collect();
    }
    Ok(combos.into_iter().map(|c| format!("{name}:{}", c.join(","))).collect())
}

/// The same graph built directly from its drawn edge list, for the three
/// corona families. Used to check the corona compositions.
pub fn drawn_pendant_family(kind: &str, n: usize) -> Result<Graph> {
    let (spine, pendants): (Graph, usize) = match kind {
        "centipede" => (path(n), 1),
        "caterpillar" => (path(n), 2),
        "sunlet" => (cycle(n)?, 1),
        other => return Err(Error::Unknown { kind: "pendant family", name: other.to_string() }),
    };
    let mut edges: Vec<(usize, usize)> = spine.edges().collect();
    for v in 0..n {
        for j in 0..pendants {
            edges.push((v, n + v * pendants + j));
        }
    }
    Graph::from_edges(n * (1 + pendants), &edges)
}

/// `corona` re-exported for callers composing families by hand.
pub fn corona_of(g: &Graph, h: &Graph) -> Graph {
    corona(g, h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::independence_poly;
    use crate::poly::IntPoly;

    #[test]
    fn basic_generators() {
        assert_eq!(path(1), complete(1));
        assert_eq!(complete_minus_edge(2).unwrap(), empty(2));
        assert!(complete_minus_edge(1).is_err());
        assert!(cycle(2).is_err());
        assert_eq!(cycle(5).unwrap().edge_count(), 5);
        let kb = complete_bipartite(2, 3);
        assert_eq!(kb.edge_count(), 6);
        let expected = &(&IntPoly::linear(1).pow(2) + &IntPoly::linear(1).pow(3)) - &IntPoly::one();
        assert_eq!(independence_poly(&kb).unwrap(), expected);
        assert_eq!(star(3).degree(0), 3);
    }

    #[test]
    fn corona_families() {
        assert_eq!(independence_poly(&centipede(2).graph).unwrap(), independence_poly(&path(4)).unwrap());
        assert_eq!(caterpillar(1).graph, Graph::from_edges(3, &[(0, 1), (0, 2)]).unwrap());
        let s = sunlet(3).unwrap().graph;
        assert_eq!((s.n(), s.edge_count()), (6, 6));
        for n in 1..=5 {
            for kind in ["centipede", "caterpillar"] {
                let built = if kind == "centipede" { centipede(n) } else { caterpillar(n) };
                assert_eq!(built.graph, drawn_pendant_family(kind, n).unwrap());
            }
        }
        for n in 3..=5 {
            assert_eq!(sunlet(n).unwrap().graph, drawn_pendant_family("sunlet", n).unwrap());
        }
    }

    #[test]
    fn spiders() {
        assert_eq!(spider(SpiderKind::K1).unwrap().graph, complete(1));
        let s1 = spider(SpiderKind::Star(1)).unwrap();
        assert_eq!(independence_poly(&s1.graph).unwrap(), independence_poly(&path(4)).unwrap());
        assert!(spider(SpiderKind::Star(0)).is_err());
    }

    #[test]
    fn kt_paths() {
        for k in 1..6 {
            assert_eq!(kt_path(2, k).unwrap(), path(k + 1));
        }
        for t in 2..6 {
            assert_eq!(kt_path(t, 1).unwrap(), complete(t));
        }
        let g = kt_path(3, 2).unwrap();
        assert_eq!((g.n(), g.edge_count()), (4, 5));
        assert!(kt_path(1, 3).is_err());
        assert!(kt_path(3, 0).is_err());
        for t in 2..=5 {
            for k in 1..=5 {
                assert!(kt_path(t, k).unwrap().is_claw_free(), "P({t},{k})");
            }
        }
    }

    #[test]
    fn augmented_kt_paths() {
        assert_eq!(augmented_kt_path(3, 2, 0).unwrap(), kt_path(3, 2).unwrap());
        let g = augmented_kt_path(2, 1, 1).unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2), (0, 3), (1, 3)]);
        let g = augmented_kt_path(3, 4, 2).unwrap();
        assert_eq!(g.n(), 6 + 2 * 6);
    }

    #[test]
    fn levit_mandrescu_graphs() {
        assert_eq!(levit_mandrescu(0).graph.n(), 0);
        assert_eq!(independence_poly(&levit_mandrescu(0).graph).unwrap(), IntPoly::one());
        assert_eq!(independence_poly(&levit_mandrescu(1).graph).unwrap(), IntPoly::from_i64s(&[1, 3, 1]));
        assert_eq!(independence_poly(&levit_mandrescu(2).graph).unwrap(), IntPoly::from_i64s(&[1, 4, 1]));
        assert_eq!(levit_mandrescu_cover(5).cliques.len(), 3);
        assert_eq!(levit_mandrescu(7).graph.n(), 7 + 2 * 4);
    }

    #[test]
    fn spec_resolution() {
        let reg = FamilyRegistry::default();
        assert_eq!(reg.resolve("path:5").unwrap().graph, path(5));
        assert_eq!(reg.resolve("ktpath:3,4").unwrap().graph, kt_path(3, 4).unwrap());
        assert_eq!(reg.resolve("augktpath:3,4,2").unwrap().graph, augmented_kt_path(3, 4, 2).unwrap());
        assert_eq!(reg.resolve("lm:7").unwrap(), levit_mandrescu(7));
        assert_eq!(reg.resolve("sunlet:6").unwrap(), sunlet(6).unwrap());
        assert_eq!(reg.resolve("caterpillar:8").unwrap(), caterpillar(8));
        assert_eq!(reg.resolve("spider:star,4").unwrap(), spider(SpiderKind::Star(4)).unwrap());
        assert_eq!(reg.resolve("kbip:3,5").unwrap().graph, complete_bipartite(3, 5));
        assert_eq!(reg.resolve("K3").unwrap().graph, complete(3));
        assert_eq!(reg.resolve("2K1").unwrap().graph, empty(2));
        assert_eq!(reg.resolve("K1").unwrap().graph, complete(1));
        assert_eq!(reg.resolve("P4").unwrap().graph, path(4));
        assert_eq!(reg.resolve("C5").unwrap().graph, cycle(5).unwrap());
        assert!(reg.resolve("nope:3").is_err());
        assert!(reg.resolve("path:x").is_err());
        assert!(reg.resolve("kbip:3").is_err());
        assert!(reg.resolve("Q7").is_err());
    }

    #[test]
    fn range_expansion() {
        assert_eq!(expand_spec_range("caterpillar:1..3").unwrap(), vec!["caterpillar:1", "caterpillar:2", "caterpillar:3"]);
        assert_eq!(expand_spec_range("kbip:1..2,3").unwrap(), vec!["kbip:1,3", "kbip:2,3"]);
        assert_eq!(expand_spec_range("spider:star,1..2").unwrap(), vec!["spider:star,1", "spider:star,2"]);
        assert!(expand_spec_range("path:3..1").is_err());
    }
}
