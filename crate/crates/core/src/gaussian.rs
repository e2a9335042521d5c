//! Gaussian integers `a + bi` as a Euclidean domain.
//!
//! The norm is `re^2 + im^2`. Division goes through the nearest-quotient
//! integer division [`div_rem_appx`]: to divide `y` by `x`, both components
//! of `y * conj(x)` are divided by the positive integer `x * conj(x)`, and the
//! remainder is whatever is left of `y`. All rounding is exact integer
//! arithmetic.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::{Integer, Roots};
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::algebra::{CommutativeRing, EuclideanDomain, Factorization};
use crate::error::{AlgebraError, Result};
use crate::integers::positive_divisors;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct GaussianInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussianInt {
    pub fn new(re: impl Into<BigInt>, im: impl Into<BigInt>) -> Self {
        Self { re: re.into(), im: im.into() }
    }

    pub fn zero() -> Self {
        Self::new(0, 0)
    }

    pub fn one() -> Self {
        Self::new(1, 0)
    }

    pub fn i() -> Self {
        Self::new(0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// The four units `1, i, -1, -i`, in that order.
    pub fn units() -> [GaussianInt; 4] {
        [Self::new(1, 0), Self::new(0, 1), Self::new(-1, 0), Self::new(0, -1)]
    }

    /// `re^2 + im^2`, defined for every element (zero has norm 0).
    pub fn norm_squared(&self) -> BigUint {
        (&self.re * &self.re + &self.im * &self.im).to_biguint().expect("sum of squares is nonnegative")
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<GaussianInt> for GaussianInt {
            type Output = GaussianInt;
            fn $method(self, rhs: GaussianInt) -> GaussianInt {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&GaussianInt> for GaussianInt {
            type Output = GaussianInt;
            fn $method(self, rhs: &GaussianInt) -> GaussianInt {
                (&self).$method(rhs)
            }
        }
    };
}

impl Add<&GaussianInt> for &GaussianInt {
    type Output = GaussianInt;
    fn add(self, rhs: &GaussianInt) -> GaussianInt {
        GaussianInt { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl Sub<&GaussianInt> for &GaussianInt {
    type Output = GaussianInt;
    fn sub(self, rhs: &GaussianInt) -> GaussianInt {
        GaussianInt { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl Mul<&GaussianInt> for &GaussianInt {
    type Output = GaussianInt;
    fn mul(self, rhs: &GaussianInt) -> GaussianInt {
        GaussianInt { re: &self.re * &rhs.re - &self.im * &rhs.im, im: &self.re * &rhs.im + &self.im * &rhs.re }
    }
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for &GaussianInt {
    type Output = GaussianInt;
    fn neg(self) -> GaussianInt {
        GaussianInt { re: -&self.re, im: -&self.im }
    }
}

impl Neg for GaussianInt {
    type Output = GaussianInt;
    fn neg(self) -> GaussianInt {
        -&self
    }
}

impl From<BigInt> for GaussianInt {
    fn from(re: BigInt) -> Self {
        GaussianInt { re, im: BigInt::zero() }
    }
}

impl fmt::Display for GaussianInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "{}i", self.im),
            (false, false) => {
                let sign = if self.im.is_negative() { '-' } else { '+' };
                write!(f, "{}{}{}i", self.re, sign, self.im.magnitude())
            }
        }
    }
}

/// Parses `sign? nat (sign nat 'i')? | sign? nat 'i'`, e.g. `3+1i`, `-2-5i`,
/// `4`, `2i`, `-1i`.
impl FromStr for GaussianInt {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self> {
        let err = || AlgebraError::Parse { what: "Gaussian integer", input: s.to_string() };
        let (first, rest) = signed_nat(s, true).ok_or_else(err)?;
        match rest {
            "" => Ok(GaussianInt::from(first)),
            "i" => Ok(GaussianInt { re: BigInt::zero(), im: first }),
            _ => {
                let (second, tail) = signed_nat(rest, false).ok_or_else(err)?;
                if tail != "i" {
                    return Err(err());
                }
                Ok(GaussianInt { re: first, im: second })
            }
        }
    }
}

/// Splits a leading signed decimal off `s`. The sign is optional only when
/// `sign_optional` is set.
fn signed_nat(s: &str, sign_optional: bool) -> Option<(BigInt, &str)> {
    let (negative, body) = match s.as_bytes().first()? {
        b'+' => (false, &s[1..]),
        b'-' => (true, &s[1..]),
        _ if sign_optional => (false, s),
        _ => return None,
    };
    let end = body.bytes().position(|b| !b.is_ascii_digit()).unwrap_or(body.len());
    if end == 0 {
        return None;
    }
    let magnitude: BigUint = body[..end].parse().ok()?;
    let sign = if negative { Sign::Minus } else { Sign::Plus };
    Some((BigInt::from_biguint(sign, magnitude), &body[end..]))
}

#[derive(Serialize, Deserialize)]
struct GaussianRepr {
    re: String,
    im: String,
}

impl Serialize for GaussianInt {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        GaussianRepr { re: self.re.to_string(), im: self.im.to_string() }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for GaussianInt {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error;
        let repr = GaussianRepr::deserialize(deserializer)?;
        let re = crate::integers::parse_int(&repr.re).map_err(D::Error::custom)?;
        let im = crate::integers::parse_int(&repr.im).map_err(D::Error::custom)?;
        Ok(GaussianInt { re, im })
    }
}

pub fn conjugate(x: &GaussianInt) -> GaussianInt {
    GaussianInt { re: x.re.clone(), im: -&x.im }
}

/// The Euclidean norm `x * conj(x) = re^2 + im^2` of a nonzero element.
pub fn phi_zi(x: &GaussianInt) -> Result<BigUint> {
    if x.is_zero() {
        return Err(AlgebraError::ZeroArgument("phi_zi"));
    }
    Ok(x.norm_squared())
}

/// Integer division rounding to the nearest multiple: `a = b*q + r` with
/// `2|r| <= |b|`.
///
/// Starts from the nonnegative-remainder pair and, when the remainder
/// exceeds `|b|/2`, moves the quotient one step toward `a` (up for positive
/// `b`, down for negative `b`). Ties keep the nonnegative remainder.
pub fn div_rem_appx(a: &BigInt, b: &BigInt) -> Result<(BigInt, BigInt)> {
    if b.is_zero() {
        return Err(AlgebraError::ZeroArgument("div_rem_appx"));
    }
    let abs_b = b.abs();
    let r = a.mod_floor(&abs_b);
    let q = if b.is_positive() { a.div_floor(b) } else { -a.div_floor(&abs_b) };
    if &r * 2 <= abs_b {
        Ok((q, r))
    } else if b.is_positive() {
        Ok((q + 1, r - abs_b))
    } else {
        Ok((q - 1, r - abs_b))
    }
}

/// Euclidean division of `y` by nonzero `x`: `y = q*x + r` with `r = 0` or
/// `phi_zi(r) < phi_zi(x)`.
pub fn f_phi_zi(y: &GaussianInt, x: &GaussianInt) -> Result<(GaussianInt, GaussianInt)> {
    if x.is_zero() {
        return Err(AlgebraError::ZeroArgument("f_phi_zi"));
    }
    let n = BigInt::from_biguint(Sign::Plus, x.norm_squared());
    let w = y * &conjugate(x);
    let q = GaussianInt { re: div_rem_appx(&w.re, &n)?.0, im: div_rem_appx(&w.im, &n)?.0 };
    let r = y - &(&q * x);
    Ok((q, r))
}

pub fn is_unit_zi(u: &GaussianInt) -> bool {
    u.norm_squared().is_one()
}

/// Canonical associates (`re > 0`, `im >= 0`) of norm exactly `m`, ascending by `re`.
pub fn canonical_with_norm(m: &BigUint) -> Vec<GaussianInt> {
    let mut out = Vec::new();
    let limit = m.sqrt();
    let mut a = BigUint::one();
    while a <= limit {
        let rest = m - &a * &a;
        let b = rest.sqrt();
        if &b * &b == rest {
            out.push(GaussianInt {
                re: BigInt::from_biguint(Sign::Plus, a.clone()),
                im: BigInt::from_biguint(Sign::Plus, b),
            });
        }
        a += 1u32;
    }
    out
}

/// Every element of norm exactly `m >= 1`.
pub fn elements_with_norm(m: &BigUint) -> Vec<GaussianInt> {
    let mut out: Vec<GaussianInt> =
        canonical_with_norm(m).iter().flat_map(|c| GaussianInt::units().map(|u| &u * c)).collect();
    out.sort();
    out
}

/// Every element with `re^2 + im^2 <= bound` (zero included), ordered by
/// norm, then `re`, then `im`.
pub fn elements_with_norm_at_most(bound: u64) -> Vec<GaussianInt> {
    let side = bound.sqrt() as i64;
    let mut out: Vec<(u64, i64, i64)> = Vec::new();
    for re in -side..=side {
        for im in -side..=side {
            let n = (re * re + im * im) as u64;
            if n <= bound {
                out.push((n, re, im));
            }
        }
    }
    out.sort();
    out.into_iter().map(|(_, re, im)| GaussianInt::new(re, im)).collect()
}

/// Smallest-norm canonical divisor of `x` with norm > 1, if any. Such a
/// divisor is irreducible: any proper factor of it would be a divisor of `x`
/// with smaller norm.
fn least_nontrivial_divisor(x: &GaussianInt, below_own_norm: bool) -> Option<GaussianInt> {
    let n = x.norm_squared();
    positive_divisors(&n)
        .into_iter()
        .filter(|m| *m > BigUint::one() && (!below_own_norm || *m < n))
        .find_map(|m| canonical_with_norm(&m).into_iter().find(|d| matches!(f_phi_zi(x, d), Ok((_, r)) if r.is_zero())))
}

/// Irreducible iff nonzero, not a unit, and no divisor has norm strictly
/// between 1 and `phi_zi(x)`. Divisor norms divide `phi_zi(x)` by
/// multiplicativity, so only those norms are enumerated.
pub fn is_irreducible_zi(x: &GaussianInt) -> bool {
    if x.is_zero() || is_unit_zi(x) {
        return false;
    }
    least_nontrivial_divisor(x, true).is_none()
}

/// Factors a nonzero non-unit into a unit and canonical irreducibles sorted
/// by norm, then `re`, then `im`.
pub fn factor_zi(x: &GaussianInt) -> Result<Factorization<GaussianInt>> {
    if x.is_zero() {
        return Err(AlgebraError::ZeroArgument("factor_zi"));
    }
    if is_unit_zi(x) {
        return Err(AlgebraError::UnitArgument("factor_zi"));
    }
    let mut rest = x.clone();
    let mut factors = Vec::new();
    while !is_unit_zi(&rest) {
        let d = least_nontrivial_divisor(&rest, false).expect("a non-unit has a divisor of norm > 1");
        let (q, r) = f_phi_zi(&rest, &d)?;
        assert!(r.is_zero(), "exact division left a remainder");
        factors.push(d);
        rest = q;
    }
    factors.sort_by(|a, b| a.norm_squared().cmp(&b.norm_squared()).then_with(|| a.cmp(b)));
    Ok(Factorization::new(rest, factors))
}

/// The ring of Gaussian integers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GaussianIntegers;

impl CommutativeRing for GaussianIntegers {
    type Elem = GaussianInt;

    fn name(&self) -> String {
        "Z[i]".to_string()
    }

    fn zero(&self) -> GaussianInt {
        GaussianInt::zero()
    }

    fn one(&self) -> GaussianInt {
        GaussianInt::one()
    }

    fn add(&self, a: &GaussianInt, b: &GaussianInt) -> GaussianInt {
        a + b
    }

    fn mul(&self, a: &GaussianInt, b: &GaussianInt) -> GaussianInt {
        a * b
    }

    fn neg(&self, a: &GaussianInt) -> GaussianInt {
        -a
    }

    fn is_zero(&self, a: &GaussianInt) -> bool {
        a.is_zero()
    }

    fn exact_divide(&self, a: &GaussianInt, b: &GaussianInt) -> Result<Option<GaussianInt>> {
        if a.is_zero() {
            return Err(AlgebraError::ZeroArgument("exact_divide"));
        }
        let (q, r) = f_phi_zi(b, a)?;
        Ok(r.is_zero().then_some(q))
    }

    /// The representative is the unique associate with `re > 0` and `im >= 0`.
    fn normalize(&self, x: &GaussianInt) -> (GaussianInt, GaussianInt) {
        if x.is_zero() {
            return (GaussianInt::one(), GaussianInt::zero());
        }
        for v in GaussianInt::units() {
            let rep = &v * x;
            if rep.re.is_positive() && !rep.im.is_negative() {
                return (conjugate(&v), rep);
            }
        }
        unreachable!("one rotation of a nonzero element lies in the half-open first quadrant")
    }

    fn divisor_candidates(&self, x: &GaussianInt) -> Option<Vec<GaussianInt>> {
        if x.is_zero() {
            return None;
        }
        Some(positive_divisors(&x.norm_squared()).iter().flat_map(elements_with_norm).collect())
    }

    fn is_irreducible(&self, x: &GaussianInt) -> bool {
        is_irreducible_zi(x)
    }

    /// The Gaussian integers form a principal ideal domain, so prime and
    /// irreducible elements coincide.
    fn is_prime_element(&self, x: &GaussianInt) -> bool {
        is_irreducible_zi(x)
    }
}

impl EuclideanDomain for GaussianIntegers {
    fn norm(&self, x: &GaussianInt) -> Result<BigUint> {
        phi_zi(x)
    }

    fn div_rem(&self, a: &GaussianInt, b: &GaussianInt) -> Result<(GaussianInt, GaussianInt)> {
        f_phi_zi(a, b)
    }
}
