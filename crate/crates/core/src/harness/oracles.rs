//! Brute-force oracles. None of these go through the Euclidean division
//! routines they are used to check, apart from the divisibility tests that
//! the definitions themselves are phrased in.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::algebra::{divides, is_unit, CommutativeRing};
use crate::error::{AlgebraError, Result};
use crate::gaussian::{elements_with_norm_at_most, GaussianInt, GaussianIntegers};
use crate::integers::Integers;

/// Largest `d >= 1` dividing both `a` and `b`, by descending scan from
/// `min(|a|, |b|)` (or from the nonzero one when the other is 0).
pub fn brute_force_gcd_z(a: &BigInt, b: &BigInt) -> Result<BigInt> {
    let (a, b) = (a.abs(), b.abs());
    let start = match (a.is_zero(), b.is_zero()) {
        (true, true) => return Err(AlgebraError::GcdOfZeros),
        (true, false) => return Ok(b),
        (false, true) => return Ok(a),
        (false, false) => a.clone().min(b.clone()),
    };
    let mut d = start;
    loop {
        if (&a % &d).is_zero() && (&b % &d).is_zero() {
            return Ok(d);
        }
        d -= 1;
    }
}

/// `d | x` in the Gaussian integers, decided without division: `d | x` iff
/// both components of `x * conj(d)` are multiples of `phi(d)`.
pub fn divides_by_components(d: &GaussianInt, x: &GaussianInt) -> bool {
    let n = BigInt::from(d.norm_squared());
    if n.is_zero() {
        return x.is_zero();
    }
    let re = &x.re * &d.re + &x.im * &d.im;
    let im = &x.im * &d.re - &x.re * &d.im;
    (re % &n).is_zero() && (im % &n).is_zero()
}

/// Every nonzero common divisor of `x` and nonzero `y`, found by testing all
/// elements whose norm is at most the smallest nonzero operand norm. A
/// divisor's norm divides the dividend's norm, so nothing is missed.
pub fn common_divisors_zi(x: &GaussianInt, y: &GaussianInt) -> Result<Vec<GaussianInt>> {
    if y.is_zero() {
        return Err(AlgebraError::ZeroArgument("common_divisors_zi"));
    }
    let bound = [x, y].iter().filter(|v| !v.is_zero()).map(|v| v.norm_squared()).min().expect("y is nonzero");
    let bound = u64::try_from(&bound)
        .map_err(|_| AlgebraError::Parse { what: "norm bound small enough to enumerate", input: bound.to_string() })?;
    Ok(elements_with_norm_at_most(bound)
        .into_iter()
        .filter(|d| !d.is_zero() && divides_by_components(d, x) && divides_by_components(d, y))
        .collect())
}

/// The `gcd` relation for a pair of Gaussian integers, decided with
/// [`common_divisors_zi`] instead of the ring's divisor candidates.
pub fn is_gcd_zi_by_search(x: &GaussianInt, y: &GaussianInt, d: &GaussianInt) -> Result<bool> {
    if d.is_zero() || !divides_by_components(d, x) || !divides_by_components(d, y) {
        return Ok(false);
    }
    Ok(common_divisors_zi(x, y)?.iter().all(|c| divides_by_components(c, d)))
}

/// Irreducibility of a Gaussian integer by scanning every lattice point `d`
/// with `1 < phi(d) <= phi(x)/2` as a candidate divisor. A proper divisor's
/// cofactor has norm at least 2, so nothing larger needs testing.
pub fn is_irreducible_zi_by_search(x: &GaussianInt) -> bool {
    let Ok(n) = u64::try_from(&x.norm_squared()) else {
        return false;
    };
    if n <= 1 {
        return false;
    }
    let (Ok(xr), Ok(xi)) = (i128::try_from(&x.re), i128::try_from(&x.im)) else {
        return false;
    };
    let half = (n / 2) as i128;
    let side = ((n / 2) as f64).sqrt() as i128 + 1;
    for re in -side..=side {
        for im in -side..=side {
            let m = re * re + im * im;
            if m <= 1 || m > half {
                continue;
            }
            if (xr * re + xi * im) % m == 0 && (xi * re - xr * im) % m == 0 {
                return false;
            }
        }
    }
    true
}

/// Scans `pairs` for `(a, b)` with `x | ab` but `x` dividing neither factor.
///
/// Finding nothing is evidence, not proof, that `x` is prime: only the given
/// pairs are tried.
pub fn falsify_prime_definition<R, I>(ring: &R, x: &R::Elem, pairs: I) -> Result<Option<(R::Elem, R::Elem)>>
where
    R: CommutativeRing,
    I: IntoIterator<Item = (R::Elem, R::Elem)>,
{
    if ring.is_zero(x) {
        return Err(AlgebraError::ZeroArgument("falsify_prime_definition"));
    }
    if is_unit(ring, x) {
        return Err(AlgebraError::UnitArgument("falsify_prime_definition"));
    }
    for (a, b) in pairs {
        let ab = ring.mul(&a, &b);
        if divides(ring, x, &ab)? && !divides(ring, x, &a)? && !divides(ring, x, &b)? {
            return Ok(Some((a, b)));
        }
    }
    Ok(None)
}

/// `0, 1, -1, 2, -2, ..., bound, -bound`.
pub fn signed_range(bound: u64) -> impl Iterator<Item = BigInt> + Clone {
    std::iter::once(BigInt::zero()).chain((1..=bound).flat_map(|v| [BigInt::from(v), -BigInt::from(v)]))
}

/// All pairs `(a, b)` with `|a|, |b| <= bound`, smaller magnitudes first.
pub fn integer_pairs(bound: u64) -> impl Iterator<Item = (BigInt, BigInt)> {
    signed_range(bound).flat_map(move |a| signed_range(bound).map(move |b| (a.clone(), b)))
}

pub fn falsify_prime_definition_z(x: &BigInt, pair_bound: u64) -> Result<Option<(BigInt, BigInt)>> {
    falsify_prime_definition(&Integers, x, integer_pairs(pair_bound))
}

/// Pairs are all `(a, b)` with both norms at most `pair_norm_bound`, so the
/// products reach norm `pair_norm_bound^2`.
pub fn falsify_prime_definition_zi(
    x: &GaussianInt,
    pair_norm_bound: u64,
) -> Result<Option<(GaussianInt, GaussianInt)>> {
    let elems = elements_with_norm_at_most(pair_norm_bound);
    let pairs = elems.iter().flat_map(|a| elems.iter().map(move |b| (a.clone(), b.clone())));
    falsify_prime_definition(&GaussianIntegers, x, pairs)
}

/// Definitional primality: nonzero, not a unit, and no falsifying pair
/// within the bound.
pub fn is_prime_by_definition<R, I>(ring: &R, x: &R::Elem, pairs: I) -> Result<bool>
where
    R: CommutativeRing,
    I: IntoIterator<Item = (R::Elem, R::Elem)>,
{
    if ring.is_zero(x) || is_unit(ring, x) {
        return Ok(false);
    }
    Ok(falsify_prime_definition(ring, x, pairs)?.is_none())
}
