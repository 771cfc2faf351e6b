//! Finite simple graphs on vertices `0..n`.
//!
//! Adjacency is one bit-vector per vertex. Graphs are immutable values: every
//! operation returns a new graph. Deleting vertices relabels the survivors
//! `0..` in ascending order of their original index.

use std::collections::BTreeSet;
use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A sorted, duplicate-free set of vertex indices.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new<I: IntoIterator<Item = usize>>(members: I) -> Self {
        let set: BTreeSet<usize> = members.into_iter().collect();
        VertexSet(set.into_iter().collect())
    }

    pub fn empty() -> Self {
        VertexSet(Vec::new())
    }

    /// Every vertex of a graph on `n` vertices.
    pub fn all(n: usize) -> Self {
        VertexSet((0..n).collect())
    }

    pub fn members(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    /// Checks every member against a parent graph of order `n`.
    pub fn check_within(&self, n: usize) -> Result<()> {
        match self.0.last() {
            Some(&v) if v >= n => Err(Error::VertexOutOfRange { vertex: v, n }),
            _ => Ok(()),
        }
    }

    /// `V(parent) \ self` for a parent of order `n`.
    pub fn complement(&self, n: usize) -> VertexSet {
        VertexSet((0..n).filter(|&v| !self.contains(v)).collect())
    }

    pub fn to_bitset(&self, n: usize) -> FixedBitSet {
        let mut bits = FixedBitSet::with_capacity(n);
        for &v in &self.0 {
            bits.insert(v);
        }
        bits
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::new(iter)
    }
}

/// Undirected simple graph, vertices labeled `0..n`.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GraphJson", into = "GraphJson")]
pub struct Graph {
    adj: Vec<FixedBitSet>,
}

impl Graph {
    /// The edgeless graph `nK_1`; `Graph::empty(0)` is the null graph.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![FixedBitSet::with_capacity(n); n],
        }
    }

    /// Builds a graph from an edge list, rejecting loops, out-of-range
    /// endpoints and repeated edges (in either orientation).
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
            }
            if g.adj[u].contains(v) {
                return Err(Error::InvalidGraph(format!("duplicate edge {{{u},{v}}}")));
            }
            g.link(u, v);
        }
        Ok(g)
    }

    pub(crate) fn link(&mut self, u: usize, v: usize) {
        debug_assert!(u != v);
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones(..)).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones(..)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].ones()
    }

    pub fn neighbor_bits(&self, v: usize) -> &FixedBitSet {
        &self.adj[v]
    }

    /// `N(v)` as a vertex set.
    pub fn open_neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(self.neighbors(v).collect())
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.ones().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n() })
        }
    }

    /// `G[keep]`, relabeled `0..|keep|` in ascending original order.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> Result<Graph> {
        keep.check_within(self.n())?;
        let mut index = vec![usize::MAX; self.n()];
        for (new, old) in keep.iter().enumerate() {
            index[old] = new;
        }
        let mut g = Graph::empty(keep.len());
        for (new_u, old_u) in keep.iter().enumerate() {
            for old_v in self.neighbors(old_u) {
                let new_v = index[old_v];
                if new_v != usize::MAX && new_v > new_u {
                    g.link(new_u, new_v);
                }
            }
        }
        Ok(g)
    }

    /// `G - U`.
    pub fn delete_vertices(&self, remove: &VertexSet) -> Result<Graph> {
        remove.check_within(self.n())?;
        self.induced_subgraph(&remove.complement(self.n()))
    }

    /// `G - v`.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        self.delete_vertices(&VertexSet::new([v]))
    }

    /// `G - N[v]`.
    pub fn delete_closed_neighborhood(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        let closed: VertexSet = self.neighbors(v).chain(std::iter::once(v)).collect();
        self.delete_vertices(&closed)
    }

    /// `G1 ∪ G2`: the second graph's vertices are shifted by `n(G1)`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let offset = self.n();
        let mut g = Graph::empty(offset + other.n());
        for (u, v) in self.edges() {
            g.link(u, v);
        }
        for (u, v) in other.edges() {
            g.link(u + offset, v + offset);
        }
        g
    }

    /// `G1 + G2`: disjoint union plus every cross edge.
    pub fn join(&self, other: &Graph) -> Graph {
        let mut g = self.disjoint_union(other);
        let offset = self.n();
        for u in 0..self.n() {
            for v in 0..other.n() {
                g.link(u, v + offset);
            }
        }
        g
    }

    /// `k` disjoint copies of this graph.
    pub fn copies(&self, k: usize) -> Graph {
        (0..k).fold(Graph::empty(0), |acc, _| acc.disjoint_union(self))
    }

    pub fn is_independent_set(&self, set: &VertexSet) -> Result<bool> {
        set.check_within(self.n())?;
        let members = set.members();
        Ok(members
            .iter()
            .enumerate()
            .all(|(i, &u)| members[i + 1..].iter().all(|&v| !self.adj[u].contains(v))))
    }

    /// Singletons and the empty set count as cliques.
    pub fn is_clique(&self, set: &VertexSet) -> Result<bool> {
        set.check_within(self.n())?;
        let members = set.members();
        Ok(members
            .iter()
            .enumerate()
            .all(|(i, &u)| members[i + 1..].iter().all(|&v| self.adj[u].contains(v))))
    }

    /// True iff no vertex has three pairwise non-adjacent neighbours.
    pub fn is_claw_free(&self) -> bool {
        (0..self.n()).all(|v| {
            let nb: Vec<usize> = self.neighbors(v).collect();
            for (i, &a) in nb.iter().enumerate() {
                for (j, &b) in nb.iter().enumerate().skip(i + 1) {
                    if self.has_edge(a, b) {
                        continue;
                    }
                    if nb[j + 1..]
                        .iter()
                        .any(|&c| !self.has_edge(a, c) && !self.has_edge(b, c))
                    {
                        return false;
                    }
                }
            }
            true
        })
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for start in 0..self.n() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut stack = vec![start];
            let mut comp = Vec::new();
            while let Some(u) = stack.pop() {
                comp.push(u);
                for w in self.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            out.push(VertexSet::new(comp));
        }
        out
    }

    pub fn to_json(&self, name: Option<String>) -> GraphJson {
        GraphJson {
            n: self.n(),
            edges: self.edges().map(|(u, v)| [u, v]).collect(),
            name,
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<_> = self.edges().collect();
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &edges)
            .finish()
    }
}

/// Wire form of a graph: `{"n": .., "edges": [[u,v],..], "name": ..}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

impl TryFrom<GraphJson> for Graph {
    type Error = Error;

    fn try_from(json: GraphJson) -> Result<Graph> {
        let edges: Vec<(usize, usize)> = json.edges.iter().map(|e| (e[0], e[1])).collect();
        Graph::from_edges(json.n, &edges)
    }
}

impl From<Graph> for GraphJson {
    fn from(g: Graph) -> GraphJson {
        g.to_json(None)
    }
}
