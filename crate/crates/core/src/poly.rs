//! Dense univariate polynomials with unbounded integer coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{DivisionError, Error, Result};

/// `coeffs[k]` is the coefficient of `x^k`. The vector never ends in a zero,
/// so the zero polynomial is the empty vector and has no degree.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly::new(vec![c])
    }

    /// `x`
    pub fn x() -> Self {
        IntPoly::from_i64s(&[0, 1])
    }

    /// `c x^k`
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.push(c);
        IntPoly::new(coeffs)
    }

    /// `1 + c x`
    pub fn linear(c: i64) -> Self {
        IntPoly::from_i64s(&[1, c])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `x^k`, zero past the degree.
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree, treating the zero polynomial as degree 0.
    pub(crate) fn degree_or_zero(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    pub fn first_negative(&self) -> Option<usize> {
        self.coeffs.iter().position(Signed::is_negative)
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplies by `x^k`.
    pub fn shift_up(&self, k: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    /// Largest `k` with `x^k` dividing `self`, and the cofactor.
    pub fn strip_x_power(&self) -> (usize, IntPoly) {
        let k = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        (k, IntPoly::new(self.coeffs[k..].to_vec()))
    }

    pub fn pow(&self, mut e: u32) -> IntPoly {
        let mut base = self.clone();
        let mut acc = IntPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn pow_usize(&self, e: usize) -> IntPoly {
        self.pow(u32::try_from(e).expect("exponent fits in u32"))
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> IntPoly {
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        )
    }

    /// gcd of the coefficients, always nonnegative.
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// `self / content`, with positive leading coefficient.
    pub fn primitive_part(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut c = self.content();
        if self.leading().is_some_and(Signed::is_negative) {
            c = -c;
        }
        IntPoly::new(self.coeffs.iter().map(|a| a / &c).collect())
    }

    /// Exact quotient over the integers.
    ///
    /// Fails with [`DivisionError::NotDivisible`] carrying the remainder left
    /// at the point where long division could not continue in `Z[x]`.
    pub fn exact_divide(&self, divisor: &IntPoly) -> std::result::Result<IntPoly, DivisionError> {
        let dlead = divisor.leading().ok_or(DivisionError::ByZero)?;
        let ddeg = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        let qlen = (rem.len() + 1).saturating_sub(divisor.coeffs.len());
        let mut quot = vec![BigInt::zero(); qlen];
        for shift in (0..qlen).rev() {
            let top = &rem[shift + ddeg];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(dlead);
            if !r.is_zero() {
                return Err(DivisionError::NotDivisible { remainder: IntPoly::new(rem) });
            }
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] -= &q * d;
            }
            quot[shift] = q;
        }
        let remainder = IntPoly::new(rem);
        if remainder.is_zero() {
            Ok(IntPoly::new(quot))
        } else {
            Err(DivisionError::NotDivisible { remainder })
        }
    }

    /// `x^n P(1/x)`: coefficient `k` of the result is coefficient `n - k` of
    /// `self`.
    pub fn reciprocal(&self, n: usize) -> Result<IntPoly> {
        if let Some(d) = self.degree() {
            if n < d {
                return Err(Error::DeclaredDegree { declared: n, actual: d });
            }
        }
        Ok(IntPoly::new((0..=n).rev().map(|k| self.coeff(k)).collect()))
    }

    /// `P(x + r)`.
    pub fn shift(&self, r: u64) -> IntPoly {
        let step = IntPoly::new(vec![BigInt::from(r), BigInt::one()]);
        self.coeffs
            .iter()
            .rev()
            .fold(IntPoly::zero(), |acc, c| &(&acc * &step) + &IntPoly::constant(c.clone()))
    }

    /// `Σ_m s_m · num^m · den^(q-m)`, i.e. `den^q · s(num / den)`.
    pub fn rational_substitution(
        s: &IntPoly,
        num: &IntPoly,
        den: &IntPoly,
        q: usize,
    ) -> Result<IntPoly> {
        let deg = s.degree_or_zero();
        if q < deg {
            return Err(Error::DegreeTooSmall { q, required: deg });
        }
        let mut den_pows = vec![IntPoly::one()];
        for _ in 0..deg {
            let next = den_pows.last().expect("nonempty") * den;
            den_pows.push(next);
        }
        // homogeneous Horner: acc = s_d, acc = acc*N + s_m*D^(d-m)
        let mut acc = IntPoly::zero();
        for (m, c) in s.coeffs.iter().enumerate().rev() {
            acc = &(&acc * num) + &den_pows[deg - m].scale(c);
        }
        Ok(&acc * &den.pow_usize(q - deg))
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            let abs = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match (k, abs.is_one()) {
                (0, _) => write!(f, "{abs}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{abs}x")?,
                (_, true) => write!(f, "x^{k}")?,
                (_, false) => write!(f, "{abs}x^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cs: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "IntPoly[{}]", cs.join(", "))
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;

    fn add(self, rhs: &IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;

    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..len).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;

    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;

    fn neg(self) -> IntPoly {
        IntPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: IntPoly) -> IntPoly {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl std::iter::Product for IntPoly {
    fn product<I: Iterator<Item = IntPoly>>(iter: I) -> IntPoly {
        iter.fold(IntPoly::one(), |acc, p| &acc * &p)
    }
}

impl std::iter::Sum for IntPoly {
    fn sum<I: Iterator<Item = IntPoly>>(iter: I) -> IntPoly {
        iter.fold(IntPoly::zero(), |acc, p| &acc + &p)
    }
}

/// `{"coeffs": ["1", "4", "3"]}`; decimal strings keep large values exact.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub coeffs: Vec<String>,
}

impl From<&IntPoly> for PolyJson {
    fn from(p: &IntPoly) -> PolyJson {
        let coeffs = if p.is_zero() {
            vec!["0".to_string()]
        } else {
            p.coeffs.iter().map(|c| c.to_string()).collect()
        };
        PolyJson { coeffs }
    }
}

impl TryFrom<PolyJson> for IntPoly {
    type Error = Error;

    fn try_from(json: PolyJson) -> Result<IntPoly> {
        json.coeffs
            .iter()
            .map(|s| {
                s.trim()
                    .parse::<BigInt>()
                    .map_err(|e| Error::Parse(format!("coefficient `{s}`: {e}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(IntPoly::new)
    }
}

impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        PolyJson::from(self).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for IntPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let json = PolyJson::deserialize(deserializer)?;
        IntPoly::try_from(json).map_err(serde::de::Error::custom)
    }
}

/// Parses a comma-separated coefficient list such as `1,4,3`.
pub fn parse_coeff_list(s: &str) -> Result<IntPoly> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<BigInt>()
                .map_err(|e| Error::Parse(format!("coefficient `{t}`: {e}")))
        })
        .collect::<Result<Vec<_>>>()
        .map(IntPoly::new)
}
