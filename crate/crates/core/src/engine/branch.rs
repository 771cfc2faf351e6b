//! Vertex branching `I(G) = I(G - v) + x I(G - N[v])` with component
//! splitting, memoized on the surviving vertex subset of the root graph.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;

use crate::engine::EngineConfig;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::IntPoly;

pub fn independence_poly(g: &Graph) -> Result<IntPoly> {
    independence_poly_with(g, &EngineConfig::default())
}

pub fn independence_poly_with(g: &Graph, cfg: &EngineConfig) -> Result<IntPoly> {
    let mut all = FixedBitSet::with_capacity(g.n());
    all.insert_range(..);
    Brancher { g, memo: HashMap::new(), limit: cfg.memo_limit }.solve(&all)
}

/// `α(G)`, the degree of `I(G)`.
pub fn independence_number(g: &Graph) -> Result<usize> {
    Ok(independence_poly(g)?.degree().expect("I(G) has constant term 1"))
}

struct Brancher<'g> {
    g: &'g Graph,
    memo: HashMap<FixedBitSet, IntPoly>,
    limit: usize,
}

impl Brancher<'_> {
    fn solve(&mut self, alive: &FixedBitSet) -> Result<IntPoly> {
        let size = alive.count_ones(..);
        if size == 0 {
            return Ok(IntPoly::one());
        }
        if size == 1 {
            return Ok(IntPoly::linear(1));
        }
        if let Some(p) = self.memo.get(alive) {
            return Ok(p.clone());
        }

        let comps = self.components(alive);
        let result = if comps.len() > 1 {
            let mut acc = IntPoly::one();
            for c in &comps {
                acc = &acc * &self.solve(c)?;
            }
            acc
        } else {
            self.branch(alive, size)?
        };

        if self.memo.len() >= self.limit {
            return Err(Error::ResourceLimit(format!(
                "branching memo exceeded {} entries",
                self.limit
            )));
        }
        self.memo.insert(alive.clone(), result.clone());
        Ok(result)
    }

    fn branch(&mut self, alive: &FixedBitSet, size: usize) -> Result<IntPoly> {
        // maximum degree within `alive`, ties to the lowest index
        let (v, deg) = alive
            .ones()
            .map(|v| (v, self.g.neighbor_bits(v).intersection_count(alive)))
            .fold((usize::MAX, 0), |best, cur| if best.0 == usize::MAX || cur.1 > best.1 { cur } else { best });
        if deg + 1 == size && alive.ones().all(|u| self.g.neighbor_bits(u).intersection_count(alive) + 1 == size) {
            // clique
            return Ok(IntPoly::linear(size as i64));
        }

        let mut without_v = alive.clone();
        without_v.set(v, false);
        let mut without_closed = without_v.clone();
        without_closed.difference_with(self.g.neighbor_bits(v));

        let left = self.solve(&without_v)?;
        let right = self.solve(&without_closed)?.shift_up(1);
        Ok(&left + &right)
    }

    fn components(&self, alive: &FixedBitSet) -> Vec<FixedBitSet> {
        let mut unvisited = alive.clone();
        let mut out = Vec::new();
        while let Some(start) = unvisited.minimum() {
            let mut comp = FixedBitSet::with_capacity(self.g.n());
            let mut frontier = vec![start];
            unvisited.set(start, false);
            comp.insert(start);
            while let Some(u) = frontier.pop() {
                for w in self.g.neighbor_bits(u).intersection(&unvisited).collect::<Vec<_>>() {
                    unvisited.set(w, false);
                    comp.insert(w);
                    frontier.push(w);
                }
            }
            out.push(comp);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::brute::independence_poly_brute;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn gnp(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn named_examples() {
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(independence_poly(&p3).unwrap(), IntPoly::from_i64s(&[1, 3, 1]));
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(independence_poly(&c5).unwrap(), IntPoly::from_i64s(&[1, 5, 5]));
        assert_eq!(independence_number(&c5).unwrap(), 2);
        assert_eq!(independence_number(&Graph::empty(6)).unwrap(), 6);
        assert_eq!(independence_poly(&Graph::empty(0)).unwrap(), IntPoly::one());
    }

    #[test]
    fn agrees_with_enumeration_on_random_graphs() {
        let cfg = EngineConfig::default();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for i in 0..150 {
            let n = rng.gen_range(0..=12);
            let p = [0.2, 0.5, 0.8][i % 3];
            let g = gnp(n, p, &mut rng);
            assert_eq!(independence_poly(&g).unwrap(), independence_poly_brute(&g, &cfg).unwrap(), "{g:?}");
        }
    }

    #[test]
    fn memo_limit_is_reported() {
        let c = Graph::from_edges(8, &(0..8).map(|i| (i, (i + 1) % 8)).collect::<Vec<_>>()).unwrap();
        let cfg = EngineConfig { memo_limit: 1, ..EngineConfig::default() };
        assert!(matches!(independence_poly_with(&c, &cfg), Err(Error::ResourceLimit(_))));
    }
}
