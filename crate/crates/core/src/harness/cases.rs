//! Single test cases. Each [`Case`] carries every input needed to evaluate
//! it in isolation, so a counterexample record can be replayed by
//! deserializing its case and calling [`Case::check`] again.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::oracles::{
    brute_force_gcd_z, integer_pairs, is_gcd_zi_by_search, is_irreducible_zi_by_search, is_prime_by_definition,
};
use super::Hooks;
use crate::algebra::{
    associates, factorization_equivalent, is_gcd, is_unit, verify_factorization, CommutativeRing, EuclideanDomain,
    Factorization,
};
use crate::error::Result;
use crate::gaussian::{
    elements_with_norm_at_most, f_phi_zi, factor_zi, is_irreducible_zi, phi_zi, GaussianInt, GaussianIntegers,
};
use crate::gcd::{euclidean_gcd, euclidean_gcd_traced, GcdTrace};
use crate::integers::{f_phi_z, factor_z, is_irreducible_z, is_prime_element_z, Integers};
use crate::modular::{DivisibilityClause, ModularRing, PrimeClause, PrimeField};

/// Serializes a `BigInt` as a decimal string.
pub(crate) mod decimal {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let s = String::deserialize(d)?;
        crate::integers::parse_int(&s).map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "check", rename_all = "snake_case")]
pub enum Case {
    RingAxiomsZ {
        #[serde(with = "decimal")]
        a: BigInt,
        #[serde(with = "decimal")]
        b: BigInt,
        #[serde(with = "decimal")]
        c: BigInt,
    },
    RingAxiomsZi {
        a: GaussianInt,
        b: GaussianInt,
        c: GaussianInt,
    },
    RingAxiomsMod {
        n: u64,
        a: u64,
        b: u64,
        c: u64,
    },
    EuclidContractZ {
        #[serde(with = "decimal")]
        a: BigInt,
        #[serde(with = "decimal")]
        b: BigInt,
    },
    DivRemAppx {
        #[serde(with = "decimal")]
        a: BigInt,
        #[serde(with = "decimal")]
        b: BigInt,
    },
    EuclidContractZi {
        y: GaussianInt,
        x: GaussianInt,
    },
    NormMultiplicative {
        x: GaussianInt,
        y: GaussianInt,
    },
    GcdOracleZ {
        #[serde(with = "decimal")]
        a: BigInt,
        #[serde(with = "decimal")]
        b: BigInt,
    },
    GcdOracleZi {
        x: GaussianInt,
        y: GaussianInt,
    },
    EuclidStepZ {
        #[serde(with = "decimal")]
        a: BigInt,
        #[serde(with = "decimal")]
        b: BigInt,
        #[serde(with = "decimal")]
        g: BigInt,
    },
    EuclidStepZi {
        x: GaussianInt,
        y: GaussianInt,
        g: GaussianInt,
    },
    Divisibility {
        n: u64,
        clause: DivisibilityClause,
        elems: Vec<u64>,
    },
    PrimeIdeal {
        n: u64,
        clause: PrimeClause,
        elems: Vec<u64>,
    },
    UfdZ {
        #[serde(with = "decimal")]
        n: BigInt,
        seed: u64,
    },
    UfdZi {
        x: GaussianInt,
        seed: u64,
    },
    PrimeIrreducibleZ {
        #[serde(with = "decimal")]
        x: BigInt,
        pair_bound: u64,
    },
    PrimeIrreducibleZi {
        x: GaussianInt,
        pair_norm_bound: u64,
    },
    MeasureZ {
        #[serde(with = "decimal")]
        a: BigInt,
        #[serde(with = "decimal")]
        b: BigInt,
    },
    MeasureZi {
        x: GaussianInt,
        y: GaussianInt,
    },
    FieldInstance {
        p: u64,
        a: u64,
        b: u64,
    },
}

/// Collects the names of violated clauses. An evaluation error counts as a
/// violation of the clause being evaluated.
#[derive(Default)]
struct Verdict(Vec<&'static str>);

impl Verdict {
    fn expect(&mut self, clause: &'static str, holds: Result<bool>) {
        if !matches!(holds, Ok(true)) {
            self.0.push(clause);
        }
    }

    fn expect_bool(&mut self, clause: &'static str, holds: bool) {
        self.expect(clause, Ok(holds));
    }
}

impl Case {
    /// Evaluates the case and returns the violated clauses (empty when it passes).
    pub fn check(&self, hooks: &Hooks) -> Vec<&'static str> {
        let mut v = Verdict::default();
        match self {
            Case::RingAxiomsZ { a, b, c } => ring_axioms(&Integers, a, b, c, &mut v),
            Case::RingAxiomsZi { a, b, c } => ring_axioms(&GaussianIntegers, a, b, c, &mut v),
            Case::RingAxiomsMod { n, a, b, c } => match ModularRing::new(*n) {
                Ok(r) => match (r.element(*a), r.element(*b), r.element(*c)) {
                    (Ok(a), Ok(b), Ok(c)) => ring_axioms(&r, &a, &b, &c, &mut v),
                    _ => v.expect_bool("valid_input", false),
                },
                Err(_) => v.expect_bool("valid_input", false),
            },
            Case::EuclidContractZ { a, b } => match f_phi_z(a, b) {
                Ok((q, r)) => {
                    v.expect_bool("division_equation", *a == &q * b + &r);
                    v.expect_bool("remainder_range", !r.is_negative() && r < b.abs());
                    v.expect_bool("zero_dividend", !a.is_zero() || (q.is_zero() && r.is_zero()));
                    v.expect_bool("norm_monotone", a.is_zero() || a.abs() <= (a * b).abs());
                }
                Err(_) => v.expect_bool("division_equation", false),
            },
            Case::DivRemAppx { a, b } => match (hooks.div_rem_appx)(a, b) {
                Ok((q, r)) => {
                    v.expect_bool("division_equation", *a == b * &q + &r);
                    v.expect_bool("half_bound", r.abs() * 2u32 <= b.abs());
                }
                Err(_) => v.expect_bool("division_equation", false),
            },
            Case::EuclidContractZi { y, x } => match f_phi_zi(y, x) {
                Ok((q, r)) => {
                    v.expect_bool("division_equation", *y == &(&q * x) + &r);
                    v.expect_bool("norm_decrease", r.is_zero() || r.norm_squared() < x.norm_squared());
                    v.expect_bool("zero_dividend", !y.is_zero() || (q.is_zero() && r.is_zero()));
                    v.expect_bool("norm_monotone", y.is_zero() || y.norm_squared() <= (y * x).norm_squared());
                }
                Err(_) => v.expect_bool("division_equation", false),
            },
            Case::NormMultiplicative { x, y } => {
                let holds = (|| Ok(phi_zi(&(x * y))? == phi_zi(x)? * phi_zi(y)?))();
                v.expect("norm_multiplicative", holds);
            }
            Case::GcdOracleZ { a, b } => match euclidean_gcd(&Integers, a, b) {
                Ok(d) => {
                    let oracle = brute_force_gcd_z(a, b);
                    v.expect("oracle_equal", oracle.as_ref().map(|o| d.abs() == *o).map_err(Clone::clone));
                    v.expect("is_gcd", is_gcd(&Integers, &[a.clone(), b.clone()], &d));
                    v.expect("oracle_sound", oracle.and_then(|o| is_gcd(&Integers, &[a.clone(), b.clone()], &o)));
                }
                Err(_) => v.expect_bool("is_gcd", false),
            },
            Case::GcdOracleZi { x, y } => match euclidean_gcd(&GaussianIntegers, x, y) {
                Ok(d) => {
                    v.expect("is_gcd_oracle", is_gcd_zi_by_search(x, y, &d));
                    v.expect("is_gcd", is_gcd(&GaussianIntegers, &[x.clone(), y.clone()], &d));
                    if !x.is_zero() {
                        let swapped = euclidean_gcd(&GaussianIntegers, y, x);
                        v.expect("symmetric_associates", swapped.and_then(|e| associates(&GaussianIntegers, &d, &e)));
                    }
                }
                Err(_) => v.expect_bool("is_gcd", false),
            },
            Case::EuclidStepZ { a, b, g } => {
                v.expect("euclid_step", euclid_step(&Integers, a, b, g));
            }
            Case::EuclidStepZi { x, y, g } => {
                v.expect("euclid_step", euclid_step(&GaussianIntegers, x, y, g));
            }
            Case::Divisibility { n, clause, elems } => {
                let holds = ModularRing::new(*n).and_then(|r| r.check_divisibility_clause(*clause, elems));
                v.expect(clause.name(), holds);
            }
            Case::PrimeIdeal { n, clause, elems } => {
                let holds = ModularRing::new(*n).and_then(|r| r.check_prime_clause(*clause, elems));
                v.expect(clause.name(), holds);
            }
            Case::UfdZ { n, seed } => match factor_z(n) {
                Ok(f) => {
                    v.expect("verify_factorization", verify_factorization(&Integers, n, &f));
                    ufd_perturbations(&Integers, n, &f, &[BigInt::one(), -BigInt::one()], *seed, &mut v);
                }
                Err(_) => v.expect_bool("verify_factorization", false),
            },
            Case::UfdZi { x, seed } => match factor_zi(x) {
                Ok(f) => {
                    v.expect("verify_factorization", verify_factorization(&GaussianIntegers, x, &f));
                    v.expect_bool("factors_irreducible", f.factors.iter().all(is_irreducible_zi_by_search));
                    ufd_perturbations(&GaussianIntegers, x, &f, &GaussianInt::units(), *seed, &mut v);
                }
                Err(_) => v.expect_bool("verify_factorization", false),
            },
            Case::PrimeIrreducibleZ { x, pair_bound } => {
                let by_definition = is_prime_by_definition(&Integers, x, integer_pairs(*pair_bound));
                v.expect("prime_irreducible_agree", by_definition.map(|p| p == is_irreducible_z(x)));
                v.expect_bool("prime_decider_agree", is_prime_element_z(x) == is_irreducible_z(x));
            }
            Case::PrimeIrreducibleZi { x, pair_norm_bound } => {
                let elems = elements_with_norm_at_most(*pair_norm_bound);
                let pairs = elems.iter().flat_map(|a| elems.iter().map(move |b| (a.clone(), b.clone())));
                let by_definition = is_prime_by_definition(&GaussianIntegers, x, pairs);
                v.expect("prime_irreducible_agree", by_definition.map(|p| p == is_irreducible_zi(x)));
                v.expect_bool("prime_decider_agree", GaussianIntegers.is_prime_element(x) == is_irreducible_zi(x));
            }
            Case::MeasureZ { a, b } => measure(&Integers, a, b, &mut v),
            Case::MeasureZi { x, y } => measure(&GaussianIntegers, x, y, &mut v),
            Case::FieldInstance { p, a, b } => field_instance(*p, *a, *b, &mut v),
        }
        v.0
    }
}

fn ring_axioms<R: CommutativeRing>(r: &R, a: &R::Elem, b: &R::Elem, c: &R::Elem, v: &mut Verdict) {
    let (zero, one) = (r.zero(), r.one());
    v.expect_bool("add_assoc", r.add(&r.add(a, b), c) == r.add(a, &r.add(b, c)));
    v.expect_bool("add_comm", r.add(a, b) == r.add(b, a));
    v.expect_bool("add_identity", r.add(a, &zero) == *a);
    v.expect_bool("add_inverse", r.add(a, &r.neg(a)) == zero);
    v.expect_bool("mul_assoc", r.mul(&r.mul(a, b), c) == r.mul(a, &r.mul(b, c)));
    v.expect_bool("mul_comm", r.mul(a, b) == r.mul(b, a));
    v.expect_bool("mul_identity", r.mul(a, &one) == *a);
    v.expect_bool("distributive", r.mul(a, &r.add(b, c)) == r.add(&r.mul(a, b), &r.mul(a, c)));
}

/// `g` is a gcd of `{a, b}` exactly when it is a gcd of `{rem(a, b), b}`.
fn euclid_step<D: EuclideanDomain>(d: &D, a: &D::Elem, b: &D::Elem, g: &D::Elem) -> Result<bool> {
    let (_, rem) = d.div_rem(a, b)?;
    Ok(is_gcd(d, &[a.clone(), b.clone()], g)? == is_gcd(d, &[rem, b.clone()], g)?)
}

fn measure<D: EuclideanDomain>(d: &D, a: &D::Elem, b: &D::Elem, v: &mut Verdict) {
    match euclidean_gcd_traced(d, a, b) {
        Ok(trace) => {
            v.expect_bool("measure_decrease", trace.measure_strictly_decreases());
            v.expect("trace_recursion", trace_follows_recursion(d, &trace));
        }
        Err(_) => v.expect_bool("measure_decrease", false),
    }
}

/// Every step of `trace` is the one the recursion prescribes after its
/// predecessor, and the result is the `b` of the final step.
pub fn trace_follows_recursion<D: EuclideanDomain>(d: &D, trace: &GcdTrace<D::Elem>) -> Result<bool> {
    for (k, step) in trace.steps.iter().enumerate() {
        let next = if d.is_zero(&step.a) {
            None
        } else {
            match &step.division {
                Some((q, r)) => {
                    if d.add(&d.mul(q, &step.b), r) != step.a || d.norm(&step.a)? < d.norm(&step.b)? {
                        return Ok(false);
                    }
                    (!d.is_zero(r)).then(|| (step.b.clone(), r.clone()))
                }
                None => {
                    if d.norm(&step.a)? >= d.norm(&step.b)? {
                        return Ok(false);
                    }
                    Some((step.b.clone(), step.a.clone()))
                }
            }
        };
        match (next, trace.steps.get(k + 1)) {
            (None, None) => return Ok(trace.result == step.b),
            (Some((a, b)), Some(s)) if s.a == a && s.b == b => {}
            _ => return Ok(false),
        }
    }
    Ok(false)
}

/// A shuffled copy of `f` with every factor multiplied by a random unit (the
/// leading unit compensates) must be equivalent to `f`; a copy with one
/// multiplicity changed must not be.
fn ufd_perturbations<R: CommutativeRing>(
    ring: &R,
    x: &R::Elem,
    f: &Factorization<R::Elem>,
    units: &[R::Elem],
    seed: u64,
    v: &mut Verdict,
) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut unit = f.unit.clone();
    let mut factors = Vec::with_capacity(f.factors.len());
    for p in &f.factors {
        let u = units.choose(&mut rng).expect("one is a unit").clone();
        let inverse = ring.exact_divide(&u, &ring.one()).ok().flatten().expect("units are invertible");
        unit = ring.mul(&unit, &inverse);
        factors.push(ring.mul(p, &u));
    }
    factors.shuffle(&mut rng);
    let perturbed = Factorization::new(unit, factors);
    v.expect("perturbed_valid", verify_factorization(ring, x, &perturbed));
    v.expect_bool("perturbed_equivalent", factorization_equivalent(ring, f, &perturbed));

    let mut altered = f.factors.clone();
    let first = altered[0].clone();
    match altered.iter().position(|p| ring.canonical_associate(p) != ring.canonical_associate(&first)) {
        Some(k) => altered[0] = altered[k].clone(),
        None => altered.push(first),
    }
    let altered = Factorization::new(f.unit.clone(), altered);
    v.expect_bool("multiplicity_rejected", !factorization_equivalent(ring, f, &altered));
}

fn field_instance(p: u64, a: u64, b: u64, v: &mut Verdict) {
    let field = match PrimeField::new(p) {
        Ok(f) => f,
        Err(_) => return v.expect_bool("valid_input", false),
    };
    let (Ok(a), Ok(b)) = (field.element(a), field.element(b)) else {
        return v.expect_bool("valid_input", false);
    };
    if b.value != 0 {
        let holds = field.div_rem(&a, &b).map(|(q, r)| r.value == 0 && field.mul(&q, &b) == a);
        v.expect("zero_remainder", holds);
    }
    if a.value != 0 && b.value != 0 {
        v.expect("gcd_unit", euclidean_gcd(&field, &a, &b).map(|g| is_unit(&field, &g)));
    }
    if a.value != 0 {
        v.expect("norm_constant", field.norm(&a).map(|n| n == BigUint::one()));
    }
}

/// Uniform magnitude in `(bound, 4*bound]` with a random sign.
pub(crate) fn sample_int_above(rng: &mut ChaCha8Rng, bound: u64) -> BigInt {
    let m = rng.gen_range(bound + 1..=bound.saturating_mul(4).max(bound + 1));
    if rng.gen_bool(0.5) {
        -BigInt::from(m)
    } else {
        BigInt::from(m)
    }
}

/// Uniform lattice point with norm in `(bound, 4*bound]`.
pub(crate) fn sample_gaussian_above(rng: &mut ChaCha8Rng, bound: u64) -> GaussianInt {
    let top = bound.saturating_mul(4).max(bound + 1);
    let side = (top as f64).sqrt() as i64 + 1;
    loop {
        let re = rng.gen_range(-side..=side);
        let im = rng.gen_range(-side..=side);
        let n = (re * re + im * im) as u64;
        if n > bound && n <= top {
            return GaussianInt::new(re, im);
        }
    }
}
