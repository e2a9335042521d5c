use euclid_kernel::algebra::{associates, divides, is_gcd, verify_factorization};
use euclid_kernel::gaussian::{div_rem_appx, f_phi_zi, factor_zi, phi_zi};
use euclid_kernel::integers::{f_phi_z, factor_z};
use euclid_kernel::{euclidean_gcd, euclidean_gcd_traced, CommutativeRing, GaussianInt, GaussianIntegers, Integers};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

/// Integers up to about 2^190, far beyond any machine word.
fn big() -> impl Strategy<Value = BigInt> {
    (any::<i64>(), any::<u64>(), any::<u64>(), 0u32..3).prop_map(|(a, b, c, shape)| match shape {
        0 => BigInt::from(a),
        1 => BigInt::from(a) * BigInt::from(b),
        _ => BigInt::from(a) * BigInt::from(b) * BigInt::from(c),
    })
}

fn nonzero_big() -> impl Strategy<Value = BigInt> {
    big().prop_filter("nonzero", |v| !v.is_zero())
}

fn gauss() -> impl Strategy<Value = GaussianInt> {
    (big(), big()).prop_map(|(re, im)| GaussianInt::new(re, im))
}

fn nonzero_gauss() -> impl Strategy<Value = GaussianInt> {
    gauss().prop_filter("nonzero", |v| !v.is_zero())
}

fn small_gauss(r: i64) -> impl Strategy<Value = GaussianInt> {
    (-r..=r, -r..=r).prop_map(|(a, b)| GaussianInt::new(a, b))
}

proptest! {
    #[test]
    fn integer_ring_axioms(a in big(), b in big(), c in big()) {
        let r = Integers;
        prop_assert_eq!(r.mul(&a, &r.add(&b, &c)), r.add(&r.mul(&a, &b), &r.mul(&a, &c)));
        prop_assert_eq!(r.mul(&r.mul(&a, &b), &c), r.mul(&a, &r.mul(&b, &c)));
        prop_assert_eq!(r.sub(&a, &a), r.zero());
    }

    #[test]
    fn gaussian_ring_axioms(a in gauss(), b in gauss(), c in gauss()) {
        let r = GaussianIntegers;
        prop_assert_eq!(r.mul(&a, &r.add(&b, &c)), r.add(&r.mul(&a, &b), &r.mul(&a, &c)));
        prop_assert_eq!(r.mul(&r.mul(&a, &b), &c), r.mul(&a, &r.mul(&b, &c)));
        prop_assert_eq!(r.mul(&a, &b), r.mul(&b, &a));
        prop_assert_eq!(r.add(&a, &r.neg(&a)), r.zero());
    }

    #[test]
    fn integer_division_contract(a in big(), b in nonzero_big()) {
        let (q, r) = f_phi_z(&a, &b).unwrap();
        prop_assert_eq!(&q * &b + &r, a);
        prop_assert!(!r.is_negative() && r < b.abs());
    }

    #[test]
    fn rounded_division_contract(a in big(), b in nonzero_big()) {
        let (q, r) = div_rem_appx(&a, &b).unwrap();
        prop_assert_eq!(&b * &q + &r, a);
        prop_assert!(r.abs() * 2u32 <= b.abs());
    }

    #[test]
    fn gaussian_division_contract(y in gauss(), x in nonzero_gauss()) {
        let (q, r) = f_phi_zi(&y, &x).unwrap();
        prop_assert_eq!(&(&q * &x) + &r, y);
        prop_assert!(r.is_zero() || r.norm_squared() < x.norm_squared());
    }

    /// Rounding both quotient coordinates puts the remainder within half a
    /// lattice step of zero in each direction, so its norm is at most half.
    #[test]
    fn gaussian_remainder_at_most_half_norm(y in gauss(), x in nonzero_gauss()) {
        let (_, r) = f_phi_zi(&y, &x).unwrap();
        prop_assert!(r.norm_squared() * 2u32 <= x.norm_squared());
    }

    #[test]
    fn norm_is_multiplicative(x in nonzero_gauss(), y in nonzero_gauss()) {
        prop_assert_eq!(phi_zi(&(&x * &y)).unwrap(), phi_zi(&x).unwrap() * phi_zi(&y).unwrap());
    }

    #[test]
    fn canonical_associate_is_unique(x in nonzero_gauss()) {
        let r = GaussianIntegers;
        let c = r.canonical_associate(&x);
        prop_assert!(c.re.is_positive() && !c.im.is_negative());
        for u in GaussianInt::units() {
            prop_assert_eq!(r.canonical_associate(&(&u * &x)), c.clone());
        }
        let (unit, rep) = r.normalize(&x);
        prop_assert_eq!(&unit * &rep, x);
    }

    #[test]
    fn integer_canonical_is_absolute_value(x in big()) {
        prop_assert_eq!(Integers.canonical_associate(&x), x.abs());
        prop_assert_eq!(Integers.canonical_associate(&-&x), x.abs());
    }

    #[test]
    fn literals_round_trip(x in gauss()) {
        let printed = x.to_string();
        prop_assert_eq!(printed.parse::<GaussianInt>().unwrap(), x.clone());
        let json = serde_json::to_string(&x).unwrap();
        prop_assert_eq!(serde_json::from_str::<GaussianInt>(&json).unwrap(), x);
    }

    #[test]
    fn associates_is_an_equivalence(a in small_gauss(6), b in small_gauss(6), c in small_gauss(6)) {
        prop_assume!(!a.is_zero() && !b.is_zero() && !c.is_zero());
        let r = GaussianIntegers;
        prop_assert!(associates(&r, &a, &a).unwrap());
        prop_assert_eq!(associates(&r, &a, &b).unwrap(), associates(&r, &b, &a).unwrap());
        if associates(&r, &a, &b).unwrap() && associates(&r, &b, &c).unwrap() {
            prop_assert!(associates(&r, &a, &c).unwrap());
        }
    }

    #[test]
    fn gcd_is_symmetric_up_to_associates(a in small_gauss(40), b in small_gauss(40)) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        let r = GaussianIntegers;
        let d = euclidean_gcd(&r, &a, &b).unwrap();
        let e = euclidean_gcd(&r, &b, &a).unwrap();
        prop_assert!(associates(&r, &d, &e).unwrap());
        prop_assert!(is_gcd(&r, &[a, b], &d).unwrap());
    }

    #[test]
    fn integer_gcd_divides_and_measure_decreases(a in big(), b in nonzero_big()) {
        let trace = euclidean_gcd_traced(&Integers, &a, &b).unwrap();
        prop_assert!(trace.measure_strictly_decreases());
        prop_assert!(divides(&Integers, &trace.result, &a).unwrap());
        prop_assert!(divides(&Integers, &trace.result, &b).unwrap());
    }

    #[test]
    fn gaussian_gcd_measure_decreases(a in gauss(), b in nonzero_gauss()) {
        let trace = euclidean_gcd_traced(&GaussianIntegers, &a, &b).unwrap();
        prop_assert!(trace.measure_strictly_decreases());
    }

    #[test]
    fn integer_factorizations_verify(n in 2i64..1_000_000_000, negative in any::<bool>()) {
        let n = BigInt::from(if negative { -n } else { n });
        let f = factor_z(&n).unwrap();
        prop_assert!(verify_factorization(&Integers, &n, &f).unwrap());
    }

    #[test]
    fn gaussian_factorizations_verify(x in small_gauss(700)) {
        prop_assume!(x.norm_squared() > 1u32.into());
        let f = factor_zi(&x).unwrap();
        prop_assert!(verify_factorization(&GaussianIntegers, &x, &f).unwrap());
        for p in &f.factors {
            prop_assert_eq!(GaussianIntegers.canonical_associate(p), p.clone());
        }
    }
}
