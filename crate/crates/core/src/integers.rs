//! The ring of integers as a Euclidean domain with norm `|i|` and the
//! nonnegative-remainder division.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::algebra::{CommutativeRing, EuclideanDomain, Factorization};
use crate::error::{AlgebraError, Result};

/// The Euclidean norm on nonzero integers: `|i|`.
pub fn phi_z(i: &BigInt) -> Result<BigUint> {
    if i.is_zero() {
        return Err(AlgebraError::ZeroArgument("phi_z"));
    }
    Ok(i.magnitude().clone())
}

/// Division of `i` by nonzero `j` returning the unique `(q, r)` with
/// `i = q*j + r` and `0 <= r < |j|`.
pub fn f_phi_z(i: &BigInt, j: &BigInt) -> Result<(BigInt, BigInt)> {
    if j.is_zero() {
        return Err(AlgebraError::ZeroArgument("f_phi_z"));
    }
    let r = i.mod_floor(&j.abs());
    let q = if j.is_positive() { i.div_floor(j) } else { -i.div_floor(&-j) };
    Ok((q, r))
}

/// `|n|` is a prime natural number, by trial division up to `sqrt(|n|)`.
pub fn is_irreducible_z(n: &BigInt) -> bool {
    let m = n.magnitude();
    if *m < BigUint::from(2u32) {
        return false;
    }
    smallest_prime_factor(m) == *m
}

/// Prime elements of the integers coincide with irreducible ones (the
/// integers form a principal ideal domain).
pub fn is_prime_element_z(n: &BigInt) -> bool {
    is_irreducible_z(n)
}

/// Smallest prime factor of `m >= 2`.
fn smallest_prime_factor(m: &BigUint) -> BigUint {
    let two = BigUint::from(2u32);
    if m.is_even() {
        return two;
    }
    let mut d = BigUint::from(3u32);
    while &d * &d <= *m {
        if (m % &d).is_zero() {
            return d;
        }
        d += &two;
    }
    m.clone()
}

/// Factors `n` with `|n| >= 2` as `sign(n) * p1 * ... * pk`, primes ascending.
pub fn factor_z(n: &BigInt) -> Result<Factorization<BigInt>> {
    if n.is_zero() {
        return Err(AlgebraError::ZeroArgument("factor_z"));
    }
    if n.magnitude().is_one() {
        return Err(AlgebraError::UnitArgument("factor_z"));
    }
    let unit = if n.is_negative() { -BigInt::one() } else { BigInt::one() };
    let mut rest = n.magnitude().clone();
    let mut factors = Vec::new();
    while !rest.is_one() {
        let p = smallest_prime_factor(&rest);
        rest /= &p;
        factors.push(BigInt::from_biguint(Sign::Plus, p));
    }
    Ok(Factorization::new(unit, factors))
}

/// Positive divisors of `m >= 1`, ascending.
pub fn positive_divisors(m: &BigUint) -> Vec<BigUint> {
    let mut low = Vec::new();
    let mut high = Vec::new();
    let mut d = BigUint::one();
    while &d * &d <= *m {
        if (m % &d).is_zero() {
            let co = m / &d;
            if co != d {
                high.push(co);
            }
            low.push(d.clone());
        }
        d += 1u32;
    }
    low.extend(high.into_iter().rev());
    low
}

/// Parses a decimal integer with an optional leading sign.
pub fn parse_int(s: &str) -> Result<BigInt> {
    let err = || AlgebraError::Parse { what: "integer", input: s.to_string() };
    let digits = s.strip_prefix(['+', '-']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(err());
    }
    s.parse::<BigInt>().map_err(|_| err())
}

/// The ring of integers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Integers;

impl CommutativeRing for Integers {
    type Elem = BigInt;

    fn name(&self) -> String {
        "Z".to_string()
    }

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }

    fn one(&self) -> BigInt {
        BigInt::one()
    }

    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }

    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }

    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }

    fn exact_divide(&self, a: &BigInt, b: &BigInt) -> Result<Option<BigInt>> {
        if a.is_zero() {
            return Err(AlgebraError::ZeroArgument("exact_divide"));
        }
        let (q, r) = b.div_rem(a);
        Ok(r.is_zero().then_some(q))
    }

    fn normalize(&self, x: &BigInt) -> (BigInt, BigInt) {
        if x.is_negative() {
            (-BigInt::one(), -x)
        } else {
            (BigInt::one(), x.clone())
        }
    }

    fn divisor_candidates(&self, x: &BigInt) -> Option<Vec<BigInt>> {
        if x.is_zero() {
            return None;
        }
        let mut out = Vec::new();
        for d in positive_divisors(x.magnitude()) {
            let d = BigInt::from_biguint(Sign::Plus, d);
            out.push(-&d);
            out.push(d);
        }
        Some(out)
    }

    fn is_irreducible(&self, x: &BigInt) -> bool {
        is_irreducible_z(x)
    }

    fn is_prime_element(&self, x: &BigInt) -> bool {
        is_prime_element_z(x)
    }
}

impl EuclideanDomain for Integers {
    fn norm(&self, x: &BigInt) -> Result<BigUint> {
        phi_z(x)
    }

    fn div_rem(&self, a: &BigInt, b: &BigInt) -> Result<(BigInt, BigInt)> {
        f_phi_z(a, b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi_z(&z(1)).unwrap(), BigUint::from(1u32));
        assert_eq!(phi_z(&z(-7)).unwrap(), BigUint::from(7u32));
        assert_eq!(phi_z(&z(12)).unwrap(), BigUint::from(12u32));
        assert_eq!(phi_z(&z(0)), Err(AlgebraError::ZeroArgument("phi_z")));
    }

    #[test]
    fn f_phi_examples() {
        assert_eq!(f_phi_z(&z(7), &z(3)).unwrap(), (z(2), z(1)));
        assert_eq!(f_phi_z(&z(-7), &z(3)).unwrap(), (z(-3), z(2)));
        assert_eq!(f_phi_z(&z(7), &z(-3)).unwrap(), (z(-2), z(1)));
        assert_eq!(f_phi_z(&z(0), &z(-5)).unwrap(), (z(0), z(0)));
        assert!(f_phi_z(&z(4), &z(0)).is_err());
    }

    #[test]
    fn f_phi_matches_brute_force_search() {
        for i in -40i64..=40 {
            for j in (-12i64..=12).filter(|&j| j != 0) {
                let (q, r) = (-50i64..=50)
                    .find_map(|q| {
                        let r = i - q * j;
                        (0 <= r && r < j.abs()).then_some((q, r))
                    })
                    .unwrap();
                assert_eq!(f_phi_z(&z(i), &z(j)).unwrap(), (z(q), z(r)), "i={i} j={j}");
            }
        }
    }

    #[test]
    fn irreducibility_examples() {
        assert!(!is_irreducible_z(&z(1)));
        assert!(!is_irreducible_z(&z(-1)));
        assert!(!is_irreducible_z(&z(0)));
        assert!(is_irreducible_z(&z(-7)));
        assert!(!is_irreducible_z(&z(9)));
        assert!(is_irreducible_z(&z(2)));
        assert!(is_prime_element_z(&z(5)));
        assert!(!is_prime_element_z(&z(6)));
        assert!(!is_prime_element_z(&z(0)));
    }

    #[test]
    fn factor_examples() {
        let f = factor_z(&z(12)).unwrap();
        assert_eq!((f.unit, f.factors), (z(1), vec![z(2), z(2), z(3)]));
        let f = factor_z(&z(-30)).unwrap();
        assert_eq!((f.unit, f.factors), (z(-1), vec![z(2), z(3), z(5)]));
        let f = factor_z(&z(7)).unwrap();
        assert_eq!((f.unit, f.factors), (z(1), vec![z(7)]));
        assert!(factor_z(&z(0)).is_err());
        assert!(factor_z(&z(1)).is_err());
        assert!(factor_z(&z(-1)).is_err());
    }

    #[test]
    fn large_values_stay_exact() {
        // 3 * 2^130 * 1000003 overflows every fixed-width integer type
        let n = parse_int("4083400653216470715345179970667086081127612416").unwrap();
        let f = factor_z(&-&n).unwrap();
        assert_eq!(f.unit, z(-1));
        assert_eq!(f.factors.len(), 132);
        assert_eq!(f.factors[129], z(2));
        assert_eq!(f.factors[130..], [z(3), z(1000003)]);
    }

    #[test]
    fn divisors_are_complete() {
        let got: Vec<u32> =
            positive_divisors(&BigUint::from(36u32)).iter().map(|d| u32::try_from(d).unwrap()).collect();
        assert_eq!(got, vec![1, 2, 3, 4, 6, 9, 12, 18, 36]);
        assert_eq!(Integers.divisor_candidates(&z(-7)).unwrap().len(), 4);
        assert!(Integers.divisor_candidates(&z(0)).is_none());
    }

    #[test]
    fn parse_accepts_signs_only_once() {
        assert_eq!(parse_int("-30").unwrap(), z(-30));
        assert_eq!(parse_int("+4").unwrap(), z(4));
        for bad in ["", "-", "+-3", "3x", "1_0", " 3"] {
            assert!(parse_int(bad).is_err(), "{bad:?}");
        }
    }
}
