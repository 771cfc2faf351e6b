//! Exact real-root counting over `Z[x]` with Sturm chains.
//!
//! Remainders are taken as pseudo-remainders with the sign corrected so each
//! chain element is a positive multiple of the true Euclidean remainder; the
//! sign-variation counts are therefore those of the classical chain.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::IntPoly;

/// `lc(b)^(deg a - deg b + 1) · a mod b`, computed in `Z[x]`.
pub fn pseudo_remainder(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let bdeg = b.degree().expect("nonzero divisor");
    let blead = b.leading().expect("nonzero divisor").clone();
    let Some(adeg) = a.degree() else {
        return IntPoly::zero();
    };
    if adeg < bdeg {
        return a.clone();
    }
    let delta = adeg - bdeg + 1;
    let mut r = a.clone();
    let mut steps = 0;
    while let Some(rdeg) = r.degree() {
        if rdeg < bdeg {
            break;
        }
        let top = r.leading().expect("nonzero").clone();
        r = &r.scale(&blead) - &b.scale(&top).shift_up(rdeg - bdeg);
        steps += 1;
    }
    let pad = num_traits::pow(blead, delta - steps);
    r.scale(&pad)
}

/// Primitive gcd of two integer polynomials, positive leading coefficient.
pub fn gcd(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let (mut a, mut b) = (a.primitive_part(), b.primitive_part());
    if a.degree() < b.degree() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        let r = pseudo_remainder(&a, &b);
        a = b;
        b = r.primitive_part();
    }
    a
}

/// The square-free part of `p` (same distinct roots, each simple).
pub fn square_free_part(p: &IntPoly) -> Result<IntPoly> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let pp = p.primitive_part();
    if pp.degree() == Some(0) {
        return Ok(pp);
    }
    let g = gcd(&pp, &pp.derivative());
    Ok(pp.exact_divide(&g)?)
}

/// The Sturm chain `f, f', -rem(f, f'), ...`, each element scaled by a
/// positive constant.
pub fn sturm_chain(f: &IntPoly) -> Vec<IntPoly> {
    let mut chain = vec![f.primitive_part()];
    let d = f.derivative();
    if d.is_zero() {
        return chain;
    }
    chain.push(d.primitive_part());
    loop {
        let n = chain.len();
        let (a, b) = (&chain[n - 2], &chain[n - 1]);
        let mut r = pseudo_remainder(a, b);
        let delta = a.degree().unwrap_or(0) + 1 - b.degree().unwrap_or(0);
        if b.leading().is_some_and(Signed::is_negative) && delta % 2 == 1 {
            r = -&r;
        }
        if r.is_zero() {
            break;
        }
        let c = r.content();
        let next = IntPoly::new(r.coeffs().iter().map(|x| -(x / &c)).collect());
        chain.push(next);
    }
    chain
}

fn variations(signs: impl Iterator<Item = i8>) -> usize {
    let mut last = 0i8;
    let mut count = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

fn sign(x: &BigInt) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_negative() {
        -1
    } else {
        1
    }
}

/// Number of distinct real roots of a nonzero polynomial.
pub fn count_distinct_real_roots(p: &IntPoly) -> Result<usize> {
    let f = square_free_part(p)?;
    let chain = sturm_chain(&f);
    let at_pos_inf = variations(chain.iter().map(|q| sign(q.leading().expect("nonzero"))));
    let at_neg_inf = variations(chain.iter().map(|q| {
        let s = sign(q.leading().expect("nonzero"));
        if q.degree().unwrap_or(0) % 2 == 1 {
            -s
        } else {
            s
        }
    }));
    Ok(at_neg_inf - at_pos_inf)
}

/// True iff every complex zero of `p` is real. Constants are vacuously
/// real-rooted; the zero polynomial is rejected.
pub fn has_only_real_zeros(p: &IntPoly) -> Result<bool> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (_, core) = p.strip_x_power();
    let f = square_free_part(&core)?;
    let deg = f.degree().unwrap_or(0);
    if deg == 0 {
        return Ok(true);
    }
    Ok(count_distinct_real_roots(&f)? == deg)
}
