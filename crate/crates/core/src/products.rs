//! Clique cover products, cycle cover products, and the corona and rooted
//! product as special cases.
//!
//! Vertex layout of every product: the base graph `G` keeps labels
//! `0..n(G)`, then the copies of `H` follow as contiguous blocks in cover-part
//! order. Within a block, vertex `h` of `H` becomes `offset + h`.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// A partition of `V(G)` into cliques.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueCover {
    pub cliques: Vec<VertexSet>,
}

impl CliqueCover {
    pub fn new(cliques: Vec<VertexSet>) -> Self {
        CliqueCover { cliques }
    }

    /// Every vertex its own part.
    pub fn singletons(n: usize) -> Self {
        CliqueCover { cliques: (0..n).map(|v| VertexSet::new([v])).collect() }
    }

    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        let mut seen = vec![false; g.n()];
        for part in &self.cliques {
            part.check_within(g.n())?;
            if part.is_empty() {
                return Err(Error::InvalidCover("empty clique".into()));
            }
            if !g.is_clique(part)? {
                return Err(Error::InvalidCover(format!("{:?} is not a clique", part.members())));
            }
            for v in part.iter() {
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Error::InvalidCover(format!("vertex {v} covered twice")));
                }
            }
        }
        match seen.iter().position(|s| !s) {
            Some(v) => Err(Error::InvalidCover(format!("vertex {v} not covered"))),
            None => Ok(()),
        }
    }
}

/// One component of a cycle cover.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum CyclePart {
    Vertex { v: usize },
    Edge { u: usize, v: usize },
    /// Consecutive entries (and last/first) are adjacent; at least three.
    Cycle { vs: Vec<usize> },
}

impl CyclePart {
    pub fn vertices(&self) -> Vec<usize> {
        match self {
            CyclePart::Vertex { v } => vec![*v],
            CyclePart::Edge { u, v } => vec![*u, *v],
            CyclePart::Cycle { vs } => vs.clone(),
        }
    }

    /// Number of `H`-copies the part receives in a cycle cover product.
    pub fn copies(&self) -> usize {
        match self {
            CyclePart::Vertex { .. } | CyclePart::Edge { .. } => 2,
            CyclePart::Cycle { vs } => vs.len(),
        }
    }
}

/// A partition of `V(G)` into vertex-cycles, edge-cycles and proper cycles.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleCover {
    pub cycle_parts: Vec<CyclePart>,
}

impl CycleCover {
    pub fn new(cycle_parts: Vec<CyclePart>) -> Self {
        CycleCover { cycle_parts }
    }

    pub fn all_vertices(n: usize) -> Self {
        CycleCover { cycle_parts: (0..n).map(|v| CyclePart::Vertex { v }).collect() }
    }

    /// Number of vertex-cycles.
    pub fn vertex_cycles(&self) -> usize {
        self.cycle_parts
            .iter()
            .filter(|p| matches!(p, CyclePart::Vertex { .. }))
            .count()
    }

    pub fn has_proper_cycle(&self) -> bool {
        self.cycle_parts.iter().any(|p| matches!(p, CyclePart::Cycle { .. }))
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        let mut seen = vec![false; g.n()];
        for part in &self.cycle_parts {
            let vs = part.vertices();
            for &v in &vs {
                g.check_vertex(v)?;
            }
            match part {
                CyclePart::Vertex { .. } => {}
                CyclePart::Edge { u, v } => {
                    if !g.has_edge(*u, *v) {
                        return Err(Error::InvalidCover(format!("edge-cycle {u}-{v} is not an edge")));
                    }
                }
                CyclePart::Cycle { vs } => {
                    if vs.len() < 3 {
                        return Err(Error::InvalidCover("proper cycle needs at least 3 vertices".into()));
                    }
                    for i in 0..vs.len() {
                        let (a, b) = (vs[i], vs[(i + 1) % vs.len()]);
                        if !g.has_edge(a, b) {
                            return Err(Error::InvalidCover(format!("cycle step {a}-{b} is not an edge")));
                        }
                    }
                }
            }
            for v in vs {
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Error::InvalidCover(format!("vertex {v} covered twice")));
                }
            }
        }
        match seen.iter().position(|s| !s) {
            Some(v) => Err(Error::InvalidCover(format!("vertex {v} not covered"))),
            None => Ok(()),
        }
    }

    /// The `K_1`/`K_2` clique cover with the same parts, if there is no
    /// proper cycle.
    pub fn as_clique_cover(&self) -> Option<CliqueCover> {
        self.cycle_parts
            .iter()
            .map(|p| match p {
                CyclePart::Cycle { .. } => None,
                other => Some(VertexSet::new(other.vertices())),
            })
            .collect::<Option<Vec<_>>>()
            .map(CliqueCover::new)
    }
}

/// Starts a product: `G` followed by `copies` blocks of `H`.
fn base_with_copies(g: &Graph, h: &Graph, copies: usize) -> Graph {
    g.disjoint_union(&h.copies(copies))
}

/// `G^C ⋆ H^U`: one copy of `H` per clique, the clique joined to the copy's
/// `U`.
pub fn clique_cover_product(g: &Graph, cover: &CliqueCover, h: &Graph, u: &VertexSet) -> Result<Graph> {
    cover.validate(g)?;
    u.check_within(h.n())?;
    let mut out = base_with_copies(g, h, cover.len());
    for (i, clique) in cover.cliques.iter().enumerate() {
        let offset = g.n() + i * h.n();
        for c in clique.iter() {
            for x in u.iter() {
                out.link(c, offset + x);
            }
        }
    }
    Ok(out)
}

/// `G ∘ H`.
pub fn corona(g: &Graph, h: &Graph) -> Graph {
    clique_cover_product(g, &CliqueCover::singletons(g.n()), h, &VertexSet::all(h.n()))
        .expect("singleton cover is valid")
}

/// `N_H(root)` relabeled into `H - root`.
pub fn root_neighborhood_in_remainder(h: &Graph, root: usize) -> Result<VertexSet> {
    h.check_vertex(root)?;
    Ok(h.neighbors(root).map(|w| if w > root { w - 1 } else { w }).collect())
}

/// `G ō H`: one copy of `H - root` per vertex of `G`, joined along the
/// root's neighbourhood.
pub fn rooted_product(g: &Graph, h: &Graph, root: usize) -> Result<Graph> {
    let u = root_neighborhood_in_remainder(h, root)?;
    let rest = h.delete_vertex(root)?;
    clique_cover_product(g, &CliqueCover::singletons(g.n()), &rest, &u)
}

/// `G^Γ ⊗ H^U`. Vertex- and edge-cycles get two copies whose `U` is joined
/// to the part's vertices; a proper cycle `v_1..v_s` gets `s` copies, copy
/// `i` joined to `v_i` and `v_{i+1}` (copy `s` to `v_s` and `v_1`).
pub fn cycle_cover_product(g: &Graph, cover: &CycleCover, h: &Graph, u: &VertexSet) -> Result<Graph> {
    cover.validate(g)?;
    u.check_within(h.n())?;
    let total: usize = cover.cycle_parts.iter().map(CyclePart::copies).sum();
    let mut out = base_with_copies(g, h, total);
    let mut block = 0;
    let attach = |out: &mut Graph, block: usize, targets: &[usize]| {
        let offset = g.n() + block * h.n();
        for &t in targets {
            for x in u.iter() {
                out.link(t, offset + x);
            }
        }
    };
    for part in &cover.cycle_parts {
        match part {
            CyclePart::Vertex { v } => {
                attach(&mut out, block, &[*v]);
                attach(&mut out, block + 1, &[*v]);
            }
            CyclePart::Edge { u: a, v: b } => {
                attach(&mut out, block, &[*a, *b]);
                attach(&mut out, block + 1, &[*a, *b]);
            }
            CyclePart::Cycle { vs } => {
                for i in 0..vs.len() {
                    attach(&mut out, block + i, &[vs[i], vs[(i + 1) % vs.len()]]);
                }
            }
        }
        block += part.copies();
    }
    Ok(out)
}

/// A product described by its operands, buildable on demand and evaluable
/// by the closed-form formulas without building the graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ProductRecipe {
    CliqueCover { base: Graph, cover: CliqueCover, fiber: Graph, attach: VertexSet },
    CycleCover { base: Graph, cover: CycleCover, fiber: Graph, attach: VertexSet },
}

impl ProductRecipe {
    pub fn corona(g: &Graph, h: &Graph) -> Self {
        ProductRecipe::CliqueCover {
            base: g.clone(),
            cover: CliqueCover::singletons(g.n()),
            fiber: h.clone(),
            attach: VertexSet::all(h.n()),
        }
    }

    pub fn rooted(g: &Graph, h: &Graph, root: usize) -> Result<Self> {
        Ok(ProductRecipe::CliqueCover {
            base: g.clone(),
            cover: CliqueCover::singletons(g.n()),
            fiber: h.delete_vertex(root)?,
            attach: root_neighborhood_in_remainder(h, root)?,
        })
    }

    pub fn build(&self) -> Result<Graph> {
        match self {
            ProductRecipe::CliqueCover { base, cover, fiber, attach } => {
                clique_cover_product(base, cover, fiber, attach)
            }
            ProductRecipe::CycleCover { base, cover, fiber, attach } => {
                cycle_cover_product(base, cover, fiber, attach)
            }
        }
    }
}

/// A graph together with the product recipe that produced it, when known.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub graph: Graph,
    pub recipe: Option<ProductRecipe>,
}

impl Instance {
    pub fn plain(graph: Graph) -> Self {
        Instance { graph, recipe: None }
    }

    pub fn from_recipe(recipe: ProductRecipe) -> Result<Self> {
        Ok(Instance { graph: recipe.build()?, recipe: Some(recipe) })
    }
}

/// Greedy random clique cover: pick a random uncovered vertex and grow a
/// maximal clique among uncovered vertices in random order.
pub fn random_clique_cover(g: &Graph, rng: &mut impl Rng) -> CliqueCover {
    let mut covered = vec![false; g.n()];
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.shuffle(rng);
    let mut cliques = Vec::new();
    for &start in &order {
        if covered[start] {
            continue;
        }
        let mut clique = vec![start];
        covered[start] = true;
        let mut cand: Vec<usize> = g.neighbors(start).filter(|&w| !covered[w]).collect();
        cand.shuffle(rng);
        for w in cand {
            if clique.iter().all(|&c| g.has_edge(c, w)) {
                clique.push(w);
                covered[w] = true;
            }
        }
        cliques.push(VertexSet::new(clique));
    }
    CliqueCover::new(cliques)
}

pub fn extract_random_clique_cover(g: &Graph, seed: u64) -> CliqueCover {
    random_clique_cover(g, &mut ChaCha8Rng::seed_from_u64(seed))
}

/// Greedy random cycle cover mixing proper cycles, edges and single
/// vertices. Always succeeds: a vertex with no usable partner becomes a
/// vertex-cycle.
pub fn random_cycle_cover(g: &Graph, rng: &mut impl Rng) -> CycleCover {
    let mut covered = vec![false; g.n()];
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.shuffle(rng);
    let mut parts = Vec::new();
    for &start in &order {
        if covered[start] {
            continue;
        }
        let part = match rng.gen_range(0..3) {
            0 => find_cycle_through(g, start, &covered, rng).map(|vs| CyclePart::Cycle { vs }),
            1 => {
                let free: Vec<usize> = g.neighbors(start).filter(|&w| !covered[w]).collect();
                free.choose(rng).map(|&w| CyclePart::Edge { u: start, v: w })
            }
            _ => None,
        }
        .unwrap_or(CyclePart::Vertex { v: start });
        for v in part.vertices() {
            covered[v] = true;
        }
        parts.push(part);
    }
    CycleCover::new(parts)
}

pub fn extract_random_cycle_cover(g: &Graph, seed: u64) -> CycleCover {
    random_cycle_cover(g, &mut ChaCha8Rng::seed_from_u64(seed))
}

/// Randomized depth-first search for a cycle of length at least three
/// through `start`, using uncovered vertices only.
fn find_cycle_through(g: &Graph, start: usize, covered: &[bool], rng: &mut impl Rng) -> Option<Vec<usize>> {
    fn dfs(
        g: &Graph,
        start: usize,
        path: &mut Vec<usize>,
        on_path: &mut [bool],
        covered: &[bool],
        rng: &mut impl Rng,
        budget: &mut usize,
    ) -> bool {
        if *budget == 0 {
            return false;
        }
        *budget -= 1;
        let last = *path.last().expect("nonempty path");
        let mut next: Vec<usize> = g.neighbors(last).filter(|&w| !covered[w]).collect();
        next.shuffle(rng);
        if path.len() >= 3 && next.contains(&start) && rng.gen_bool(0.5) {
            return true;
        }
        for w in next {
            if on_path[w] {
                continue;
            }
            path.push(w);
            on_path[w] = true;
            if dfs(g, start, path, on_path, covered, rng, budget) {
                return true;
            }
            on_path[w] = false;
            path.pop();
        }
        path.len() >= 3 && g.has_edge(last, start)
    }

    let mut path = vec![start];
    let mut on_path = vec![false; g.n()];
    on_path[start] = true;
    let mut budget = 64;
    dfs(g, start, &mut path, &mut on_path, covered, rng, &mut budget).then_some(path)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((n - 1, 0));
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn corona_of_single_vertices() {
        let k1 = Graph::empty(1);
        assert_eq!(
            clique_cover_product(&k1, &CliqueCover::singletons(1), &k1, &VertexSet::all(1)).unwrap(),
            complete(2)
        );
        // P_2 ∘ K_1: 0-1 with pendants 2 on 0 and 3 on 1, the path 2-0-1-3
        let w2 = corona(&path(2), &k1);
        assert_eq!(w2.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2), (1, 3)]);
    }

    #[test]
    fn ccp_layout_and_edge_count() {
        let g = path(3);
        let cover = CliqueCover::new(vec![VertexSet::new([0, 1]), VertexSet::new([2])]);
        let h = Graph::empty(2);
        let out = clique_cover_product(&g, &cover, &h, &VertexSet::all(2)).unwrap();
        assert_eq!(out.n(), 7);
        // |E(G)| + q|E(H)| + |U| n(G)
        assert_eq!(out.edge_count(), 2 + 2 * 3);
        for c in [0, 1] {
            assert!(out.has_edge(c, 3) && out.has_edge(c, 4));
        }
        assert!(out.has_edge(2, 5) && out.has_edge(2, 6));
        assert!(!out.has_edge(2, 3));
    }

    #[test]
    fn invalid_covers_rejected() {
        let g = path(3);
        let h = Graph::empty(1);
        let u = VertexSet::all(1);
        let not_clique = CliqueCover::new(vec![VertexSet::new([0, 2]), VertexSet::new([1])]);
        assert!(matches!(clique_cover_product(&g, &not_clique, &h, &u), Err(Error::InvalidCover(_))));
        let overlap = CliqueCover::new(vec![VertexSet::new([0, 1]), VertexSet::new([1, 2])]);
        assert!(clique_cover_product(&g, &overlap, &h, &u).is_err());
        let missing = CliqueCover::new(vec![VertexSet::new([0, 1])]);
        assert!(clique_cover_product(&g, &missing, &h, &u).is_err());
        let cover = CliqueCover::singletons(3);
        assert!(clique_cover_product(&g, &cover, &h, &VertexSet::new([1])).is_err());
    }

    #[test]
    fn rooted_product_cases() {
        let g = path(3);
        assert_eq!(rooted_product(&g, &complete(2), 0).unwrap(), corona(&g, &Graph::empty(1)));
        assert_eq!(rooted_product(&Graph::empty(1), &path(3), 1).unwrap().n(), 3);
        assert_eq!(
            rooted_product(&Graph::empty(1), &path(3), 1).unwrap().edge_count(),
            2
        );
        let r = rooted_product(&g, &path(3), 0).unwrap();
        assert_eq!(r.n(), 9);
        assert!(rooted_product(&g, &path(3), 3).is_err());
    }

    #[test]
    fn cycle_cover_product_cases() {
        let k1 = Graph::empty(1);
        let u = VertexSet::all(1);
        let p3 = cycle_cover_product(&k1, &CycleCover::all_vertices(1), &k1, &u).unwrap();
        assert_eq!(p3.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2)]);

        let edge = CycleCover::new(vec![CyclePart::Edge { u: 0, v: 1 }]);
        let out = cycle_cover_product(&complete(2), &edge, &k1, &u).unwrap();
        // K_4 minus the edge between the two copies of K_1
        let k4_minus = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert_eq!(out, k4_minus);

        let tri = CycleCover::new(vec![CyclePart::Cycle { vs: vec![0, 1, 2] }]);
        let out = cycle_cover_product(&cycle(3), &tri, &k1, &u).unwrap();
        assert_eq!(out.n(), 6);
        assert_eq!(out.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2), (0, 3), (0, 5), (1, 2), (1, 3), (1, 4), (2, 4), (2, 5)]);
    }

    #[test]
    fn cycle_cover_validation() {
        let g = path(3);
        assert!(CycleCover::new(vec![CyclePart::Edge { u: 0, v: 2 }, CyclePart::Vertex { v: 1 }])
            .validate(&g)
            .is_err());
        assert!(CycleCover::new(vec![CyclePart::Cycle { vs: vec![0, 1, 2] }]).validate(&g).is_err());
        assert!(CycleCover::new(vec![CyclePart::Cycle { vs: vec![0, 1] }, CyclePart::Vertex { v: 2 }])
            .validate(&g)
            .is_err());
        assert!(CycleCover::all_vertices(3).validate(&g).is_ok());
    }

    #[test]
    fn random_covers_are_valid_and_deterministic() {
        let graphs = [complete(3), Graph::empty(3), cycle(4), cycle(6), complete(5), path(7)];
        for g in &graphs {
            for seed in 0..40 {
                let c = extract_random_clique_cover(g, seed);
                c.validate(g).unwrap();
                assert_eq!(c, extract_random_clique_cover(g, seed));
                let cc = extract_random_cycle_cover(g, seed);
                cc.validate(g).unwrap();
                assert_eq!(cc, extract_random_cycle_cover(g, seed));
            }
        }
        assert_eq!(extract_random_clique_cover(&Graph::empty(3), 1).len(), 3);
        // proper cycles do show up on a cycle graph
        assert!((0..40).any(|s| extract_random_cycle_cover(&cycle(4), s).has_proper_cycle()));
    }

    #[test]
    fn cover_json_shapes() {
        let cc: CycleCover = serde_json::from_str(
            r#"{"cycle_parts": [{"kind":"vertex","v":0}, {"kind":"edge","u":1,"v":2}, {"kind":"cycle","vs":[3,4,5]}]}"#,
        )
        .unwrap();
        assert_eq!(cc.vertex_cycles(), 1);
        assert!(cc.has_proper_cycle());
        let c: CliqueCover = serde_json::from_str(r#"{"cliques": [[0,1],[2]]}"#).unwrap();
        assert_eq!(serde_json::to_string(&c).unwrap(), r#"{"cliques":[[0,1],[2]]}"#);
    }
}
