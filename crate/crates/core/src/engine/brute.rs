use num_bigint::BigInt;
use rayon::prelude::*;

use crate::engine::EngineConfig;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::IntPoly;

/// Hard ceiling for the enumeration, independent of configuration.
const MASK_BITS: usize = 40;

/// Counts independent sets of every size by enumerating all `2^n` vertex
/// subsets.
pub fn independence_poly_brute(g: &Graph, cfg: &EngineConfig) -> Result<IntPoly> {
    let n = g.n();
    let bound = cfg.oracle_bound.min(MASK_BITS);
    if n > bound {
        return Err(Error::OracleBound { n, bound });
    }
    let nbr: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).fold(0u64, |m, w| m | (1 << w)))
        .collect();
    let counts = (0..1u64 << n)
        .into_par_iter()
        .fold(
            || vec![0u64; n + 1],
            |mut acc, mask| {
                let mut rest = mask;
                let mut independent = true;
                while rest != 0 {
                    let v = rest.trailing_zeros() as usize;
                    if nbr[v] & mask != 0 {
                        independent = false;
                        break;
                    }
                    rest &= rest - 1;
                }
                if independent {
                    acc[mask.count_ones() as usize] += 1;
                }
                acc
            },
        )
        .reduce(
            || vec![0u64; n + 1],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );
    Ok(IntPoly::new(counts.into_iter().map(BigInt::from).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> EngineConfig {
        EngineConfig::default()
    }

    #[test]
    fn small_graphs() {
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(independence_poly_brute(&k4, &cfg()).unwrap(), IntPoly::linear(4));
        assert_eq!(
            independence_poly_brute(&Graph::empty(5), &cfg()).unwrap(),
            IntPoly::linear(1).pow(5)
        );
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(independence_poly_brute(&p3, &cfg()).unwrap(), IntPoly::from_i64s(&[1, 3, 1]));
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(independence_poly_brute(&p4, &cfg()).unwrap(), IntPoly::from_i64s(&[1, 4, 3]));
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(independence_poly_brute(&c5, &cfg()).unwrap(), IntPoly::from_i64s(&[1, 5, 5]));
        assert_eq!(independence_poly_brute(&Graph::empty(0), &cfg()).unwrap(), IntPoly::one());
    }

    #[test]
    fn bound_is_enforced() {
        let tight = EngineConfig { oracle_bound: 4, ..EngineConfig::default() };
        assert!(matches!(
            independence_poly_brute(&Graph::empty(5), &tight),
            Err(Error::OracleBound { n: 5, bound: 4 })
        ));
    }
}
