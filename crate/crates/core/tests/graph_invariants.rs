use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use indpoly::families::*;
use indpoly::graph::{Graph, VertexSet};
use indpoly::harness::random_graph;
use indpoly::products::{
    clique_cover_product, cycle_cover_product, random_clique_cover, random_cycle_cover, CliqueCover, CycleCover,
};

/// Claw check over all 4-subsets.
fn has_claw(g: &Graph) -> bool {
    let n = g.n();
    for c in 0..n {
        for a in 0..n {
            for b in a + 1..n {
                for d in b + 1..n {
                    if [a, b, d].contains(&c) {
                        continue;
                    }
                    if g.has_edge(c, a) && g.has_edge(c, b) && g.has_edge(c, d)
                        && !g.has_edge(a, b) && !g.has_edge(a, d) && !g.has_edge(b, d)
                    {
                        return true;
                    }
                }
            }
        }
    }
    false
}

#[test]
fn claw_free_matches_subset_search() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for i in 0..400 {
        let g = random_graph(&mut rng, 9, i);
        assert_eq!(g.is_claw_free(), !has_claw(&g), "{:?}", g.to_json(None));
    }
}

#[test]
fn join_and_union_edge_counts() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for i in 0..100 {
        let a = random_graph(&mut rng, 8, i);
        let b = random_graph(&mut rng, 8, i + 1);
        let j = a.join(&b);
        assert_eq!(j.n(), a.n() + b.n());
        assert_eq!(j.edge_count(), a.edge_count() + b.edge_count() + a.n() * b.n());
        let u = a.disjoint_union(&b);
        assert_eq!(u.edge_count(), a.edge_count() + b.edge_count());
        assert_eq!(a.copies(3).edge_count(), 3 * a.edge_count());
    }
}

#[test]
fn deletions_and_components() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for i in 0..100 {
        let g = random_graph(&mut rng, 10, i);
        let v = rng.gen_range(0..g.n());
        assert_eq!(g.delete_vertex(v).unwrap().n(), g.n() - 1);
        assert_eq!(g.delete_closed_neighborhood(v).unwrap().n(), g.n() - 1 - g.degree(v));
        let parts = g.components();
        assert_eq!(parts.iter().map(VertexSet::len).sum::<usize>(), g.n());
        let edges_in_parts: usize = parts.iter().map(|c| g.induced_subgraph(c).unwrap().edge_count()).sum();
        assert_eq!(edges_in_parts, g.edge_count());
    }
}

#[test]
fn product_sizes() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for i in 0..100 {
        let g = random_graph(&mut rng, 7, i);
        let h = random_graph(&mut rng, 5, i + 1);
        let u: VertexSet = (0..h.n()).filter(|_| rng.gen_bool(0.5)).collect();
        let cover = random_clique_cover(&g, &mut rng);
        cover.validate(&g).unwrap();
        let p = clique_cover_product(&g, &cover, &h, &u).unwrap();
        let attached: usize = cover.cliques.iter().map(|c| c.len() * u.len()).sum();
        assert_eq!(p.n(), g.n() + cover.len() * h.n());
        assert_eq!(p.edge_count(), g.edge_count() + cover.len() * h.edge_count() + attached);

        let cc = random_cycle_cover(&g, &mut rng);
        cc.validate(&g).unwrap();
        let copies: usize = cc.cycle_parts.iter().map(|c| c.copies()).sum();
        let p = cycle_cover_product(&g, &cc, &h, &u).unwrap();
        assert_eq!(p.n(), g.n() + copies * h.n());
    }
}

#[test]
fn bad_covers_are_rejected() {
    let g = path(4);
    assert!(CliqueCover::new(vec![VertexSet::new([0, 1]), VertexSet::new([2])]).validate(&g).is_err());
    assert!(CliqueCover::new(vec![VertexSet::new([0, 2]), VertexSet::new([1, 3])]).validate(&g).is_err());
    assert!(CliqueCover::new(vec![VertexSet::new([0, 1]), VertexSet::new([1, 2, 3])]).validate(&g).is_err());
    assert!(CycleCover::all_vertices(3).validate(&g).is_err());
    assert!(clique_cover_product(&g, &CliqueCover::singletons(4), &complete(2), &VertexSet::new([5])).is_err());
}

#[test]
fn family_sizes() {
    for n in 1..=12 {
        assert_eq!((path(n).n(), path(n).edge_count()), (n, n - 1));
        let c = centipede(n).graph;
        assert_eq!((c.n(), c.edge_count()), (2 * n, 2 * n - 1));
        let c = caterpillar(n).graph;
        assert_eq!((c.n(), c.edge_count()), (3 * n, 3 * n - 1));
        let lm = levit_mandrescu(n).graph;
        let parts = n.div_ceil(2);
        assert_eq!(lm.n(), n + 2 * parts);
        assert_eq!(lm.edge_count(), n - 1 + 2 * n);
        if n >= 3 {
            let s = sunlet(n).unwrap().graph;
            assert_eq!((s.n(), s.edge_count()), (2 * n, 2 * n));
            assert_eq!(cycle(n).unwrap().edge_count(), n);
        }
        assert_eq!(complete(n).edge_count(), n * (n - 1) / 2);
        assert_eq!(star(n).edge_count(), n);
    }
    for t in 1..=5 {
        for n in 1..=5 {
            assert_eq!(complete_bipartite(t, n).edge_count(), t * n);
            let g = bipartite_corona(t, n).graph;
            assert_eq!((g.n(), g.edge_count()), (2 * (t + n), t * n + t + n));
        }
    }
    for t in 2..=5 {
        for k in 1..=5 {
            let g = kt_path(t, k).unwrap();
            // k copies of K_t sharing K_{t-1}
            let expected = t * (t - 1) / 2 + (k - 1) * (t - 1);
            assert_eq!((g.n(), g.edge_count()), (t + k - 1, expected));
            for d in 0..=2 {
                let a = augmented_kt_path(t, k, d).unwrap();
                let slots = t + k - 1;
                assert_eq!(a.n(), t + k - 1 + d * slots);
                assert_eq!(a.edge_count(), expected + d * (1 + 2 * (slots - 1)));
            }
        }
    }
    for m in 1..=5 {
        let s = spider(SpiderKind::Star(m)).unwrap().graph;
        assert_eq!((s.n(), s.edge_count()), (2 * (m + 1), 2 * m + 1));
    }
}
