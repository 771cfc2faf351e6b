use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use indpoly::poly::IntPoly;
use indpoly::properties::{analyze, has_only_real_zeros};
use indpoly::sturm::{count_distinct_real_roots, square_free_part};

fn linear(root: i64, scale: i64) -> IntPoly {
    // scale * (x - root)
    IntPoly::from_i64s(&[-scale * root, scale])
}

/// Polynomials with a known number of distinct real roots: products of
/// linear factors with repeated roots, times quadratics with negative
/// discriminant.
#[test]
fn sturm_counts_constructed_roots() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..300 {
        let distinct: Vec<i64> = {
            let mut r: Vec<i64> = (0..rng.gen_range(0..5)).map(|_| rng.gen_range(-8..=8)).collect();
            r.sort();
            r.dedup();
            r
        };
        let mut p = IntPoly::constant(BigInt::from(rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 }));
        for &r in &distinct {
            for _ in 0..rng.gen_range(1..=3) {
                p = &p * &linear(r, 1);
            }
        }
        let complex_pairs = rng.gen_range(0..=2);
        for _ in 0..complex_pairs {
            let b = rng.gen_range(-4i64..=4);
            let c = b * b / 4 + rng.gen_range(1..=5);
            p = &p * &IntPoly::from_i64s(&[c, b, 1]);
        }
        let sf = square_free_part(&p).unwrap();
        assert_eq!(count_distinct_real_roots(&sf).unwrap(), distinct.len(), "{p}");
        assert_eq!(has_only_real_zeros(&p).unwrap(), complex_pairs == 0, "{p}");
    }
}

#[test]
fn zero_and_constants() {
    assert!(has_only_real_zeros(&IntPoly::zero()).is_err());
    assert!(has_only_real_zeros(&IntPoly::one()).unwrap());
    assert!(has_only_real_zeros(&IntPoly::x().pow(4)).unwrap());
    let r = analyze(&IntPoly::zero());
    assert_eq!(r.real_rooted, None);
}

#[test]
fn reports_on_negative_coefficients() {
    let r = analyze(&IntPoly::from_i64s(&[1, -3, 2]));
    assert_eq!(r.real_rooted, Some(true));
    assert_eq!((r.unimodal, r.log_concave), (None, None));
    assert!(!r.witnesses.is_empty());
}

#[test]
fn json_round_trip() {
    let p = IntPoly::from_i64s(&[1, 4, 3]);
    let s = serde_json::to_string(&p).unwrap();
    assert_eq!(s, r#"{"coeffs":["1","4","3"]}"#);
    assert_eq!(serde_json::from_str::<IntPoly>(&s).unwrap(), p);
    assert_eq!(serde_json::to_string(&IntPoly::zero()).unwrap(), r#"{"coeffs":["0"]}"#);
    let big: IntPoly = serde_json::from_str(r#"{"coeffs":["1","123456789012345678901234567890"]}"#).unwrap();
    assert_eq!(big.degree(), Some(1));
}
