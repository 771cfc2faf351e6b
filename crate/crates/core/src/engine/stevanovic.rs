//! Symmetric expansion for graphs with an independent set `S` such that
//! every independent `A ⊆ V - S` has exactly `2|A|` neighbours in `S`.

use fixedbitset::FixedBitSet;

use crate::engine::independence_poly;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::poly::IntPoly;

/// Independent sets visited before the condition check gives up.
const CHECK_BUDGET: usize = 50_000_000;

fn require_independent(g: &Graph, s: &VertexSet) -> Result<()> {
    if g.is_independent_set(s)? {
        Ok(())
    } else {
        Err(Error::NotIndependent(s.members().to_vec()))
    }
}

/// `Σ_{k ≤ |S|/2} i_k(G[V-S]) x^k (1+x)^(|S|-2k)`.
pub fn stevanovic_formula(g: &Graph, s: &VertexSet) -> Result<IntPoly> {
    require_independent(g, s)?;
    let rest = independence_poly(&g.delete_vertices(s)?)?;
    let one_plus_x = IntPoly::linear(1);
    Ok((0..=s.len() / 2)
        .map(|k| one_plus_x.pow_usize(s.len() - 2 * k).shift_up(k).scale(&rest.coeff(k)))
        .sum())
}

/// Checks `|N(A) ∩ S| = 2|A|` for every independent `A ⊆ V - S`, the empty
/// set included.
pub fn check_stevanovic_condition(g: &Graph, s: &VertexSet) -> Result<bool> {
    require_independent(g, s)?;
    let s_bits = s.to_bitset(g.n());
    let outside: Vec<usize> = s.complement(g.n()).iter().collect();
    let mut budget = CHECK_BUDGET;
    let mut touched = FixedBitSet::with_capacity(g.n());
    let mut blocked = FixedBitSet::with_capacity(g.n());
    walk(g, &s_bits, &outside, 0, 0, &mut touched, &mut blocked, &mut budget)
}

/// Depth-first over independent subsets of `outside`, extending only with
/// later candidates. `touched` is `N(A) ∩ S`; `blocked` is `N(A)`.
#[allow(clippy::too_many_arguments)]
fn walk(
    g: &Graph,
    s_bits: &FixedBitSet,
    outside: &[usize],
    from: usize,
    size: usize,
    touched: &mut FixedBitSet,
    blocked: &mut FixedBitSet,
    budget: &mut usize,
) -> Result<bool> {
    if *budget == 0 {
        return Err(Error::ResourceLimit("too many independent sets to check".into()));
    }
    *budget -= 1;
    if touched.count_ones(..) != 2 * size {
        return Ok(false);
    }
    for i in from..outside.len() {
        let v = outside[i];
        if blocked.contains(v) {
            continue;
        }
        let (saved_touched, saved_blocked) = (touched.clone(), blocked.clone());
        blocked.union_with(g.neighbor_bits(v));
        blocked.insert(v);
        for w in g.neighbor_bits(v).intersection(s_bits) {
            touched.insert(w);
        }
        let ok = walk(g, s_bits, outside, i + 1, size + 1, touched, blocked, budget)?;
        *touched = saved_touched;
        *blocked = saved_blocked;
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}
