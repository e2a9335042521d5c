//! Domain-independent contracts and the generic algorithms built on them.
//!
//! A concrete ring implements [`CommutativeRing`]; rings that also carry a
//! Euclidean norm and a matching division implement [`EuclideanDomain`].
//! Everything in this module is written once against those traits: the
//! divisibility predicates, the `gcd` relation, sequence products and the
//! factorization checks.

use std::fmt;

use num_bigint::BigUint;

use crate::error::{AlgebraError, Result};

/// A commutative ring with identity whose elements can be compared exactly.
pub trait CommutativeRing {
    type Elem: Clone + Eq + Ord + fmt::Debug + fmt::Display;

    /// Short human-readable name used in reports, e.g. `Z[i]`.
    fn name(&self) -> String;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    /// Returns some `x` with `a * x = b`, or `None` when `a` does not divide `b`.
    /// `a` must be nonzero.
    fn exact_divide(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Option<Self::Elem>>;

    /// Splits `x` into `(unit, representative)` with `x = unit * representative`,
    /// where the representative is the same for every associate of `x`.
    /// Zero maps to `(one, zero)`.
    fn normalize(&self, x: &Self::Elem) -> (Self::Elem, Self::Elem);

    fn canonical_associate(&self, x: &Self::Elem) -> Self::Elem {
        self.normalize(x).1
    }

    /// A finite set containing every nonzero divisor of `x`, or `None` when
    /// no such finite set exists (zero in an infinite ring).
    fn divisor_candidates(&self, x: &Self::Elem) -> Option<Vec<Self::Elem>>;

    /// Decides irreducibility: nonzero, not a unit, and every factorization
    /// `x = a * b` has a unit factor.
    fn is_irreducible(&self, x: &Self::Elem) -> bool;

    /// Decides primality: nonzero, not a unit, and `x | ab` forces `x | a` or `x | b`.
    fn is_prime_element(&self, x: &Self::Elem) -> bool;
}

/// A commutative ring equipped with a Euclidean norm and a division routine
/// satisfying `a = q*b + r` with `r = 0` or `norm(r) < norm(b)`.
pub trait EuclideanDomain: CommutativeRing {
    /// The Euclidean norm of a nonzero element.
    fn norm(&self, x: &Self::Elem) -> Result<BigUint>;

    /// Division with remainder by a nonzero `b`; a zero dividend yields `(0, 0)`.
    fn div_rem(&self, a: &Self::Elem, b: &Self::Elem) -> Result<(Self::Elem, Self::Elem)>;
}

/// `a | b`: some `x` satisfies `a * x = b`. Defined only for nonzero `a`.
pub fn divides<R: CommutativeRing>(ring: &R, a: &R::Elem, b: &R::Elem) -> Result<bool> {
    if ring.is_zero(a) {
        return Err(AlgebraError::ZeroArgument("divides"));
    }
    Ok(ring.exact_divide(a, b)?.is_some())
}

/// Nonzero `a` and `b` divide each other.
pub fn associates<R: CommutativeRing>(ring: &R, a: &R::Elem, b: &R::Elem) -> Result<bool> {
    if ring.is_zero(a) || ring.is_zero(b) {
        return Err(AlgebraError::ZeroArgument("associates"));
    }
    Ok(divides(ring, a, b)? && divides(ring, b, a)?)
}

/// `u` has a multiplicative inverse. In a commutative ring one side suffices.
pub fn is_unit<R: CommutativeRing>(ring: &R, u: &R::Elem) -> bool {
    if ring.is_zero(u) {
        // 0 is a unit only in the zero ring, which no instance models.
        return false;
    }
    matches!(ring.exact_divide(u, &ring.one()), Ok(Some(_)))
}

/// Left fold of multiplication starting from one.
pub fn product_of_sequence<R: CommutativeRing>(ring: &R, seq: &[R::Elem]) -> R::Elem {
    seq.iter().fold(ring.one(), |acc, x| ring.mul(&acc, x))
}

/// The `gcd` relation: `d` divides every member of `xs` and every nonzero
/// common divisor of `xs` divides `d`.
///
/// The common divisors are drawn from the ring's finite divisor candidates
/// of one nonzero member, which contain every common divisor.
pub fn is_gcd<R: CommutativeRing>(ring: &R, xs: &[R::Elem], d: &R::Elem) -> Result<bool> {
    if xs.is_empty() {
        return Err(AlgebraError::EmptySet);
    }
    if ring.is_zero(d) {
        return Err(AlgebraError::ZeroArgument("is_gcd"));
    }
    for x in xs {
        if !divides(ring, d, x)? {
            return Ok(false);
        }
    }
    let candidates = xs
        .iter()
        .filter_map(|x| ring.divisor_candidates(x))
        .min_by_key(Vec::len)
        .ok_or_else(|| AlgebraError::UnboundedDivisors(ring.name()))?;
    for c in candidates.iter().filter(|c| !ring.is_zero(c)) {
        if is_common_divisor(ring, c, xs)? && !divides(ring, c, d)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn is_common_divisor<R: CommutativeRing>(ring: &R, c: &R::Elem, xs: &[R::Elem]) -> Result<bool> {
    for x in xs {
        if !divides(ring, c, x)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A unit together with a finite sequence of (claimed) irreducible factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization<E> {
    pub unit: E,
    pub factors: Vec<E>,
}

impl<E> Factorization<E> {
    pub fn new(unit: E, factors: Vec<E>) -> Self {
        Self { unit, factors }
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }
}

impl<E: fmt::Display> fmt::Display for Factorization<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.unit)?;
        for x in &self.factors {
            write!(f, " * {x}")?;
        }
        Ok(())
    }
}

/// Checks that `f` is a factorization of `x` into irreducibles: the unit is a
/// unit, every factor passes the ring's irreducibility decider, and
/// `unit * product(factors) = x`. `x` must be a nonzero non-unit.
pub fn verify_factorization<R: CommutativeRing>(ring: &R, x: &R::Elem, f: &Factorization<R::Elem>) -> Result<bool> {
    if ring.is_zero(x) {
        return Err(AlgebraError::ZeroArgument("verify_factorization"));
    }
    if is_unit(ring, x) {
        return Err(AlgebraError::UnitArgument("verify_factorization"));
    }
    if !is_unit(ring, &f.unit) {
        return Ok(false);
    }
    if !f.factors.iter().all(|p| ring.is_irreducible(p)) {
        return Ok(false);
    }
    Ok(ring.mul(&f.unit, &product_of_sequence(ring, &f.factors)) == *x)
}

/// Two factorizations agree up to order and associates.
///
/// Each factor is replaced by its canonical associate and the sorted lists
/// are compared, which is equivalent to finding a bijection pairing
/// associate factors.
pub fn factorization_equivalent<R: CommutativeRing>(
    ring: &R,
    f1: &Factorization<R::Elem>,
    f2: &Factorization<R::Elem>,
) -> bool {
    if f1.factors.len() != f2.factors.len() {
        return false;
    }
    let canonical = |f: &Factorization<R::Elem>| {
        let mut v: Vec<_> = f.factors.iter().map(|x| ring.canonical_associate(x)).collect();
        v.sort();
        v
    };
    canonical(f1) == canonical(f2)
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;

    use super::*;
    use crate::gaussian::{GaussianInt, GaussianIntegers};
    use crate::integers::Integers;
    use crate::modular::ModularRing;

    fn z(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn g(s: &str) -> GaussianInt {
        s.parse().unwrap()
    }

    fn zf(unit: i64, factors: &[i64]) -> Factorization<BigInt> {
        Factorization::new(z(unit), factors.iter().map(|&v| z(v)).collect())
    }

    #[test]
    fn divides_examples() {
        assert!(divides(&Integers, &z(3), &z(12)).unwrap());
        assert!(!divides(&Integers, &z(5), &z(12)).unwrap());
        for a in [-4, -1, 1, 9] {
            assert!(divides(&Integers, &z(a), &z(0)).unwrap());
        }
        assert!(divides(&GaussianIntegers, &g("2-1i"), &g("5")).unwrap());
        assert_eq!(divides(&Integers, &z(0), &z(3)), Err(AlgebraError::ZeroArgument("divides")));
    }

    #[test]
    fn associates_examples() {
        assert!(associates(&Integers, &z(3), &z(-3)).unwrap());
        assert!(associates(&GaussianIntegers, &g("2-1i"), &g("1+2i")).unwrap());
        assert!(!associates(&Integers, &z(2), &z(4)).unwrap());
        assert!(associates(&Integers, &z(0), &z(4)).is_err());
        assert!(associates(&Integers, &z(4), &z(0)).is_err());
    }

    #[test]
    fn unit_examples() {
        assert!(is_unit(&Integers, &z(1)));
        assert!(is_unit(&Integers, &z(-1)));
        assert!(!is_unit(&Integers, &z(2)));
        assert!(!is_unit(&Integers, &z(0)));
        assert!(is_unit(&GaussianIntegers, &g("1i")));
        let z6 = ModularRing::new(6).unwrap();
        assert!(is_unit(&z6, &z6.element(5).unwrap()));
        assert!(!is_unit(&z6, &z6.element(0).unwrap()));
    }

    #[test]
    fn product_examples() {
        assert_eq!(product_of_sequence(&Integers, &[]), z(1));
        assert_eq!(product_of_sequence(&Integers, &[z(2), z(3), z(5)]), z(30));
        assert_eq!(product_of_sequence(&GaussianIntegers, &[g("1+1i"), g("1+1i")]), g("2i"));
    }

    #[test]
    fn is_gcd_examples() {
        assert!(is_gcd(&Integers, &[z(12), z(18)], &z(6)).unwrap());
        assert!(is_gcd(&Integers, &[z(12), z(18)], &z(-6)).unwrap());
        assert!(is_gcd(&Integers, &[z(5)], &z(5)).unwrap());
        assert!(!is_gcd(&Integers, &[z(12), z(18)], &z(3)).unwrap());
        assert!(!is_gcd(&Integers, &[z(12), z(18)], &z(12)).unwrap());
        assert!(is_gcd(&Integers, &[z(12), z(18), z(8)], &z(2)).unwrap());
        assert!(is_gcd(&Integers, &[z(0), z(7)], &z(7)).unwrap());
        assert_eq!(is_gcd(&Integers, &[], &z(1)), Err(AlgebraError::EmptySet));
        assert!(is_gcd(&Integers, &[z(4)], &z(0)).is_err());
        assert!(matches!(is_gcd(&Integers, &[z(0)], &z(1)), Err(AlgebraError::UnboundedDivisors(_))));
    }

    #[test]
    fn verify_factorization_examples() {
        assert!(verify_factorization(&Integers, &z(12), &zf(1, &[2, 2, 3])).unwrap());
        assert!(!verify_factorization(&Integers, &z(12), &zf(1, &[4, 3])).unwrap());
        assert!(!verify_factorization(&Integers, &z(12), &zf(2, &[2, 3])).unwrap());
        assert!(!verify_factorization(&Integers, &z(12), &zf(1, &[2, 3])).unwrap());
        assert!(verify_factorization(&Integers, &z(-12), &zf(1, &[-2, 2, 3])).unwrap());
        let two = Factorization::new(g("-1i"), vec![g("1+1i"), g("1+1i")]);
        assert!(verify_factorization(&GaussianIntegers, &g("2"), &two).unwrap());
        assert!(verify_factorization(&Integers, &z(0), &zf(1, &[])).is_err());
        assert!(verify_factorization(&Integers, &z(-1), &zf(-1, &[])).is_err());
    }

    #[test]
    fn factorization_equivalence_examples() {
        assert!(factorization_equivalent(&Integers, &zf(1, &[2, 3]), &zf(1, &[-3, -2])));
        assert!(!factorization_equivalent(&Integers, &zf(1, &[2, 2, 3]), &zf(1, &[2, 3])));
        assert!(!factorization_equivalent(&Integers, &zf(1, &[2, 2, 3]), &zf(1, &[2, 3, 3])));
        let a = Factorization::new(g("1"), vec![g("2-1i")]);
        let b = Factorization::new(g("1i"), vec![g("1+2i")]);
        assert!(factorization_equivalent(&GaussianIntegers, &a, &b));
    }

    #[test]
    fn factorization_display() {
        assert_eq!(zf(-1, &[2, 3, 5]).to_string(), "-1 * 2 * 3 * 5");
    }
}
