//! The abstract Euclidean gcd algorithm, generic over any [`EuclideanDomain`].
//!
//! The recursion is
//!
//! ```text
//! gcd(a, b) = b                    if a = 0
//!           = b                    if norm(a) >= norm(b) and rem(a, b) = 0
//!           = gcd(b, rem(a, b))    if norm(a) >= norm(b)
//!           = gcd(b, a)            otherwise
//! ```
//!
//! and terminates because `(norm(b), norm(a) or 0)` strictly decreases in
//! lexicographic order at every recursive call. The loop below is the tail
//! recursive form of the same definition. The result is whatever associate
//! the recursion produces; use [`CommutativeRing::canonical_associate`] for
//! a normal form.

use num_bigint::BigUint;
use num_traits::Zero;

use crate::algebra::EuclideanDomain;
use crate::error::{AlgebraError, Result};

/// Lexicographic termination measure `(norm(b), norm(a))`, with 0 for `a = 0`.
pub type Measure = (BigUint, BigUint);

/// One invocation of the recursion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GcdStep<E> {
    pub a: E,
    pub b: E,
    /// `(quotient, remainder)` when the step divided `a` by `b`; `None` for
    /// the `a = 0` base case and for the swap branch.
    pub division: Option<(E, E)>,
    pub measure: Measure,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GcdTrace<E> {
    pub steps: Vec<GcdStep<E>>,
    pub result: E,
}

impl<E> GcdTrace<E> {
    /// True when the measure strictly decreases between every pair of
    /// consecutive steps.
    pub fn measure_strictly_decreases(&self) -> bool {
        self.steps.windows(2).all(|w| w[1].measure < w[0].measure)
    }
}

/// Computes a gcd of `a` and nonzero `b`.
pub fn euclidean_gcd<D: EuclideanDomain>(domain: &D, a: &D::Elem, b: &D::Elem) -> Result<D::Elem> {
    run(domain, a, b, None)
}

/// Same as [`euclidean_gcd`], recording every recursive step.
pub fn euclidean_gcd_traced<D: EuclideanDomain>(domain: &D, a: &D::Elem, b: &D::Elem) -> Result<GcdTrace<D::Elem>> {
    let mut steps = Vec::new();
    let result = run(domain, a, b, Some(&mut steps))?;
    Ok(GcdTrace { steps, result })
}

fn run<D: EuclideanDomain>(
    domain: &D,
    a: &D::Elem,
    b: &D::Elem,
    mut trace: Option<&mut Vec<GcdStep<D::Elem>>>,
) -> Result<D::Elem> {
    if domain.is_zero(b) {
        return Err(if domain.is_zero(a) {
            AlgebraError::GcdOfZeros
        } else {
            AlgebraError::ZeroArgument("euclidean_gcd")
        });
    }
    let mut a = a.clone();
    let mut b = b.clone();
    loop {
        let norm_b = domain.norm(&b)?;
        if domain.is_zero(&a) {
            if let Some(t) = trace.as_deref_mut() {
                t.push(GcdStep { a, b: b.clone(), division: None, measure: (norm_b, BigUint::zero()) });
            }
            return Ok(b);
        }
        let norm_a = domain.norm(&a)?;
        let measure = (norm_b.clone(), norm_a.clone());
        if norm_a >= norm_b {
            let (q, r) = domain.div_rem(&a, &b)?;
            if let Some(t) = trace.as_deref_mut() {
                t.push(GcdStep { a: a.clone(), b: b.clone(), division: Some((q, r.clone())), measure });
            }
            if domain.is_zero(&r) {
                return Ok(b);
            }
            a = std::mem::replace(&mut b, r);
        } else {
            if let Some(t) = trace.as_deref_mut() {
                t.push(GcdStep { a: a.clone(), b: b.clone(), division: None, measure });
            }
            std::mem::swap(&mut a, &mut b);
        }
    }
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;

    use super::*;
    use crate::algebra::{associates, is_gcd, CommutativeRing};
    use crate::gaussian::{GaussianInt, GaussianIntegers};
    use crate::integers::Integers;
    use crate::modular::PrimeField;

    fn z(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn g(s: &str) -> GaussianInt {
        s.parse().unwrap()
    }

    #[test]
    fn integer_examples() {
        assert_eq!(euclidean_gcd(&Integers, &z(0), &z(7)).unwrap(), z(7));
        assert_eq!(euclidean_gcd(&Integers, &z(12), &z(18)).unwrap(), z(6));
        assert_eq!(euclidean_gcd(&Integers, &z(0), &z(0)), Err(AlgebraError::GcdOfZeros));
        assert_eq!(euclidean_gcd(&Integers, &z(3), &z(0)), Err(AlgebraError::ZeroArgument("euclidean_gcd")));
    }

    #[test]
    fn raw_result_can_be_negative() {
        let d = euclidean_gcd(&Integers, &z(12), &z(-6)).unwrap();
        assert_eq!(d, z(-6));
        assert_eq!(Integers.canonical_associate(&d), z(6));
    }

    #[test]
    fn gaussian_example() {
        let d = euclidean_gcd(&GaussianIntegers, &g("5"), &g("3+1i")).unwrap();
        assert!(associates(&GaussianIntegers, &d, &g("2-1i")).unwrap());
        assert_eq!(GaussianIntegers.canonical_associate(&d), g("1+2i"));
        assert!(is_gcd(&GaussianIntegers, &[g("5"), g("3+1i")], &d).unwrap());
    }

    #[test]
    fn field_gcd_is_a_unit() {
        let f7 = PrimeField::new(7).unwrap();
        let d = euclidean_gcd(&f7, &f7.element(3).unwrap(), &f7.element(5).unwrap()).unwrap();
        assert_eq!(d.value, 5);
        assert!(crate::algebra::is_unit(&f7, &d));
    }

    #[test]
    fn trace_records_every_branch() {
        // 4 < 10 forces a swap, then 10 = 2*4 + 2, then 4 = 2*2 + 0
        let t = euclidean_gcd_traced(&Integers, &z(4), &z(10)).unwrap();
        assert_eq!(t.result, z(2));
        assert_eq!(t.steps.len(), 3);
        assert!(t.steps[0].division.is_none());
        assert_eq!(t.steps[1].division, Some((z(2), z(2))));
        assert_eq!(t.steps[2].division, Some((z(2), z(0))));
        let measures: Vec<(u32, u32)> = t
            .steps
            .iter()
            .map(|s| (u32::try_from(&s.measure.0).unwrap(), u32::try_from(&s.measure.1).unwrap()))
            .collect();
        assert_eq!(measures, vec![(10, 4), (4, 10), (2, 4)]);
        assert!(t.measure_strictly_decreases());
    }

    #[test]
    fn zero_dividend_trace_has_zero_measure() {
        let t = euclidean_gcd_traced(&Integers, &z(0), &z(-9)).unwrap();
        assert_eq!(t.result, z(-9));
        assert_eq!(t.steps.len(), 1);
        assert_eq!(t.steps[0].measure, (BigUint::from(9u32), BigUint::zero()));
    }
}
