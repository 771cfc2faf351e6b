//! Symmetry, unimodality, log-concavity and real-rootedness of integer
//! polynomials. Every verdict is exact.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::IntPoly;
use crate::sturm;

/// `a_k = a_{n-k}` for all `k`, with `n` the degree. The zero polynomial is
/// symmetric.
pub fn is_symmetric(p: &IntPoly) -> bool {
    match p.degree() {
        None => true,
        Some(d) => p.reciprocal(d).map(|r| &r == p).unwrap_or(false),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Unimodality {
    pub unimodal: bool,
    /// First and last index attaining the maximum, when unimodal.
    pub mode: Option<(usize, usize)>,
}

fn require_nonnegative(p: &IntPoly) -> Result<()> {
    match p.first_negative() {
        Some(k) => Err(Error::NegativeCoefficient(k)),
        None => Ok(()),
    }
}

/// Rise-then-fall test on the coefficient sequence.
///
/// The modes of a unimodal sequence are exactly the indices attaining the
/// maximum, so the reported range is that plateau.
pub fn is_unimodal(p: &IntPoly) -> Result<Unimodality> {
    require_nonnegative(p)?;
    let a = p.coeffs();
    if a.is_empty() {
        return Ok(Unimodality { unimodal: true, mode: Some((0, 0)) });
    }
    let mut i = 0;
    while i + 1 < a.len() && a[i] <= a[i + 1] {
        i += 1;
    }
    while i + 1 < a.len() && a[i] >= a[i + 1] {
        i += 1;
    }
    if i + 1 != a.len() {
        return Ok(Unimodality { unimodal: false, mode: None });
    }
    let max = a.iter().max().expect("nonempty");
    let first = a.iter().position(|c| c == max).expect("max present");
    let last = a.iter().rposition(|c| c == max).expect("max present");
    Ok(Unimodality { unimodal: true, mode: Some((first, last)) })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LogConcavity {
    pub log_concave: bool,
    /// Smallest `k` with `a_k^2 < a_{k-1} a_{k+1}`.
    pub first_failure: Option<usize>,
    /// A zero coefficient strictly between two nonzero ones.
    pub internal_zeros: bool,
}

pub fn is_log_concave(p: &IntPoly) -> Result<LogConcavity> {
    require_nonnegative(p)?;
    let a = p.coeffs();
    let first_failure = (1..a.len().saturating_sub(1)).find(|&k| &a[k] * &a[k] < &a[k - 1] * &a[k + 1]);
    Ok(LogConcavity {
        log_concave: first_failure.is_none(),
        first_failure,
        internal_zeros: has_internal_zeros(a),
    })
}

fn has_internal_zeros(a: &[BigInt]) -> bool {
    let Some(lo) = a.iter().position(|c| !c.is_zero()) else {
        return false;
    };
    let hi = a.iter().rposition(|c| !c.is_zero()).expect("nonzero present");
    a[lo..=hi].iter().any(Zero::is_zero)
}

pub fn has_only_real_zeros(p: &IntPoly) -> Result<bool> {
    sturm::has_only_real_zeros(p)
}

/// Bundled verdicts for one polynomial.
///
/// `unimodal` and `log_concave` are `None` when the polynomial has a negative
/// coefficient, since both notions are defined on nonnegative sequences.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyReport {
    pub degree: Option<usize>,
    pub symmetric: bool,
    pub unimodal: Option<bool>,
    pub mode: Option<(usize, usize)>,
    pub log_concave: Option<bool>,
    pub log_concave_failure: Option<usize>,
    pub internal_zeros: bool,
    pub real_rooted: Option<bool>,
    pub witnesses: Vec<String>,
}

/// Property names accepted by [`PropertyReport::holds`].
pub const PROPERTY_NAMES: [&str; 4] = ["symmetric", "unimodal", "log-concave", "real-rooted"];

impl PropertyReport {
    /// Looks up a verdict by name; undefined verdicts count as not holding.
    pub fn holds(&self, prop: &str) -> Result<bool> {
        match prop {
            "symmetric" => Ok(self.symmetric),
            "unimodal" => Ok(self.unimodal == Some(true)),
            "log-concave" | "logconcave" => Ok(self.log_concave == Some(true)),
            "real-rooted" | "real" => Ok(self.real_rooted == Some(true)),
            other => Err(Error::Unknown { kind: "property", name: other.to_string() }),
        }
    }
}

pub fn analyze(p: &IntPoly) -> PropertyReport {
    let mut witnesses = Vec::new();
    let symmetric = is_symmetric(p);
    if !symmetric {
        if let Some(d) = p.degree() {
            if let Some(k) = (0..=d).find(|&k| p.coeff(k) != p.coeff(d - k)) {
                witnesses.push(format!("a_{k} = {} != a_{} = {}", p.coeff(k), d - k, p.coeff(d - k)));
            }
        }
    }

    let (unimodal, mode, log_concave, log_concave_failure, internal_zeros) =
        match (is_unimodal(p), is_log_concave(p)) {
            (Ok(u), Ok(l)) => {
                if let Some(k) = l.first_failure {
                    witnesses.push(format!(
                        "a_{k}^2 = {} < a_{}*a_{} = {}",
                        p.coeff(k) * p.coeff(k),
                        k - 1,
                        k + 1,
                        p.coeff(k - 1) * p.coeff(k + 1)
                    ));
                }
                if !u.unimodal {
                    witnesses.push("coefficients rise again after falling".to_string());
                }
                (Some(u.unimodal), u.mode, Some(l.log_concave), l.first_failure, l.internal_zeros)
            }
            _ => {
                let k = p.first_negative().expect("negative coefficient");
                witnesses.push(format!("negative coefficient a_{k} = {}", p.coeff(k)));
                (None, None, None, None, has_internal_zeros(p.coeffs()))
            }
        };

    let real_rooted = if p.is_zero() {
        witnesses.push("zero polynomial has no root decision".to_string());
        None
    } else {
        let (_, core) = p.strip_x_power();
        let f = sturm::square_free_part(&core).expect("nonzero");
        let distinct = sturm::count_distinct_real_roots(&f).expect("nonzero");
        let needed = f.degree().unwrap_or(0);
        if distinct != needed {
            witnesses.push(format!(
                "square-free part has degree {needed} but only {distinct} distinct real roots"
            ));
        }
        Some(distinct == needed)
    };

    let positive = !p.is_zero() && p.coeffs().iter().all(Signed::is_positive);
    if real_rooted == Some(true) && positive {
        assert_eq!(log_concave, Some(true), "real-rooted positive polynomial must be log-concave: {p}");
    }
    if log_concave == Some(true) && positive {
        assert_eq!(unimodal, Some(true), "log-concave positive polynomial must be unimodal: {p}");
    }

    PropertyReport {
        degree: p.degree(),
        symmetric,
        unimodal,
        mode,
        log_concave,
        log_concave_failure,
        internal_zeros,
        real_rooted,
        witnesses,
    }
}
