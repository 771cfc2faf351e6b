//! Closed forms for the independence polynomial of clique cover and cycle
//! cover products.
//!
//! With `I(G) = Σ s_i x^i` and `α = α(G)`, the clique cover product
//! satisfies
//!
//! ```text
//! I(G^C ⋆ H^U) = I(H)^(q-α) · Σ_i s_i (x I(H-U))^i I(H)^(α-i)
//! ```
//!
//! which is `I(H)^q · I(G; x I(H-U) / I(H))` cleared of denominators. The
//! cycle cover product is the same shape with `I(H-U)^2`, `I(H)^2` and
//! exponent `n + k` in place of `q`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::engine::{independence_poly_with, EngineConfig};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::poly::IntPoly;
use crate::products::{CliqueCover, CycleCover, ProductRecipe};

fn require_unit_constant(p: &IntPoly) -> Result<()> {
    let c = p.constant_term();
    if c.is_one() {
        Ok(())
    } else {
        Err(Error::ConstantTerm(c.to_string()))
    }
}

/// `I(G^C ⋆ H^U)` from `I(G)`, `I(H)`, `I(H-U)` and the number of cliques.
pub fn ccp_poly_formula(ig: &IntPoly, ih: &IntPoly, ihu: &IntPoly, q: usize) -> Result<IntPoly> {
    for p in [ig, ih, ihu] {
        require_unit_constant(p)?;
    }
    let alpha = ig.degree_or_zero();
    if q < alpha {
        return Err(Error::DegreeTooSmall { q, required: alpha });
    }
    let num = ihu.shift_up(1);
    let body = IntPoly::rational_substitution(ig, &num, ih, alpha)?;
    Ok(&body * &ih.pow_usize(q - alpha))
}

/// `I(G ∘ H) = I(H)^n I(G; x / I(H))`.
pub fn corona_poly_formula(ig: &IntPoly, ih: &IntPoly, n: usize) -> Result<IntPoly> {
    ccp_poly_formula(ig, ih, &IntPoly::one(), n)
}

/// `I(G ō H) = I(H-v)^n I(G; x I(H-N[v]) / I(H-v))`.
pub fn rooted_product_poly_formula(
    ig: &IntPoly,
    ih_minus_v: &IntPoly,
    ih_minus_closed: &IntPoly,
    n: usize,
) -> Result<IntPoly> {
    ccp_poly_formula(ig, ih_minus_v, ih_minus_closed, n)
}

/// `I(G^Γ ⊗ H^U) = I(H)^(n+k) I(G; x I(H-U)^2 / I(H)^2)` for a cover with
/// `k` vertex-cycles of a graph on `n` vertices.
pub fn cycle_cover_poly_formula(
    ig: &IntPoly,
    ih: &IntPoly,
    ihu: &IntPoly,
    n: usize,
    k: usize,
) -> Result<IntPoly> {
    for p in [ig, ih, ihu] {
        require_unit_constant(p)?;
    }
    let alpha = ig.degree_or_zero();
    if n + k < 2 * alpha {
        return Err(Error::DegreeTooSmall { q: n + k, required: 2 * alpha });
    }
    let num = (ihu * ihu).shift_up(1);
    let den = ih * ih;
    let body = IntPoly::rational_substitution(ig, &num, &den, alpha)?;
    Ok(&body * &ih.pow_usize(n + k - 2 * alpha))
}

/// Second evaluator for the clique cover product, coefficient by
/// coefficient:
///
/// ```text
/// t_k = Σ_m s_m Σ_{i_1+..+i_m+j_1+..+j_(q-m) = k-m} b_i1..b_im a_j1..a_j(q-m)
/// ```
///
/// with `a = I(H)` and `b = I(H-U)`. The inner sums are built slot by slot
/// on plain coefficient vectors; no polynomial powers are used.
pub fn ccp_poly_convolution(ig: &IntPoly, ih: &IntPoly, ihu: &IntPoly, q: usize) -> Result<IntPoly> {
    let alpha = ig.degree_or_zero();
    if q < alpha {
        return Err(Error::DegreeTooSmall { q, required: alpha });
    }
    let a = ih.coeffs();
    let b = ihu.coeffs();
    let top = alpha + q * ih.degree_or_zero().max(ihu.degree_or_zero());
    let mut t = vec![BigInt::zero(); top + 1];

    for (m, s_m) in ig.coeffs().iter().enumerate() {
        if s_m.is_zero() {
            continue;
        }
        // ways[r]: number of weighted choices over the slots filled so far
        // whose indices sum to r
        let mut ways = vec![BigInt::one()];
        for slot in 0..q {
            let seq = if slot < m { b } else { a };
            let mut next = vec![BigInt::zero(); ways.len() + seq.len().saturating_sub(1)];
            for (r, w) in ways.iter().enumerate() {
                if w.is_zero() {
                    continue;
                }
                for (i, c) in seq.iter().enumerate() {
                    next[r + i] += w * c;
                }
            }
            ways = next;
        }
        for (r, w) in ways.iter().enumerate() {
            t[m + r] += s_m * w;
        }
    }
    Ok(IntPoly::new(t))
}

/// Formula evaluation of a clique cover product from its operands.
pub fn ccp_poly(g: &Graph, cover: &CliqueCover, h: &Graph, u: &VertexSet, cfg: &EngineConfig) -> Result<IntPoly> {
    cover.validate(g)?;
    u.check_within(h.n())?;
    let ig = independence_poly_with(g, cfg)?;
    let ih = independence_poly_with(h, cfg)?;
    let ihu = independence_poly_with(&h.delete_vertices(u)?, cfg)?;
    ccp_poly_formula(&ig, &ih, &ihu, cover.len())
}

pub fn corona_poly(g: &Graph, h: &Graph, cfg: &EngineConfig) -> Result<IntPoly> {
    let ig = independence_poly_with(g, cfg)?;
    let ih = independence_poly_with(h, cfg)?;
    corona_poly_formula(&ig, &ih, g.n())
}

pub fn rooted_product_poly(g: &Graph, h: &Graph, root: usize, cfg: &EngineConfig) -> Result<IntPoly> {
    let ig = independence_poly_with(g, cfg)?;
    let ihv = independence_poly_with(&h.delete_vertex(root)?, cfg)?;
    let ihn = independence_poly_with(&h.delete_closed_neighborhood(root)?, cfg)?;
    rooted_product_poly_formula(&ig, &ihv, &ihn, g.n())
}

/// The pendant-root form: when `root` has the single neighbour `u`,
/// `I(H - N[v])` is `I(H - v - u)`.
pub fn pendant_rooted_product_poly(g: &Graph, h: &Graph, root: usize, cfg: &EngineConfig) -> Result<IntPoly> {
    let nb = h.open_neighborhood(root)?;
    if nb.len() != 1 {
        return Err(Error::Parameter(format!("root {root} is not a pendant vertex")));
    }
    let u = nb.members()[0];
    let ig = independence_poly_with(g, cfg)?;
    let h_minus_v = h.delete_vertex(root)?;
    let u_shifted = if u > root { u - 1 } else { u };
    let h_minus_v_u = h_minus_v.delete_vertex(u_shifted)?;
    let ihv = independence_poly_with(&h_minus_v, cfg)?;
    let ihvu = independence_poly_with(&h_minus_v_u, cfg)?;
    rooted_product_poly_formula(&ig, &ihv, &ihvu, g.n())
}

pub fn cycle_cover_poly(g: &Graph, cover: &CycleCover, h: &Graph, u: &VertexSet, cfg: &EngineConfig) -> Result<IntPoly> {
    cover.validate(g)?;
    u.check_within(h.n())?;
    let ig = independence_poly_with(g, cfg)?;
    let ih = independence_poly_with(h, cfg)?;
    let ihu = independence_poly_with(&h.delete_vertices(u)?, cfg)?;
    cycle_cover_poly_formula(&ig, &ih, &ihu, g.n(), cover.vertex_cycles())
}

/// Formula evaluation of any recipe.
pub fn recipe_poly(recipe: &ProductRecipe, cfg: &EngineConfig) -> Result<IntPoly> {
    match recipe {
        ProductRecipe::CliqueCover { base, cover, fiber, attach } => ccp_poly(base, cover, fiber, attach, cfg),
        ProductRecipe::CycleCover { base, cover, fiber, attach } => cycle_cover_poly(base, cover, fiber, attach, cfg),
    }
}
