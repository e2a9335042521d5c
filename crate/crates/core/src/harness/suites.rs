//! Case generators for every registered suite: an exhaustive enumeration
//! below the bound followed by seeded random samples above it.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::cases::{sample_gaussian_above, sample_int_above, Case};
use super::Bound;
use crate::error::AlgebraError;
use crate::gaussian::{elements_with_norm_at_most, GaussianInt};
use crate::integers::is_irreducible_z;
use crate::modular::{tuples, DivisibilityClause, ModularRing, PrimeClause};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    RingAxioms,
    EuclidContract,
    GcdOracleZ,
    GcdOracleZi,
    EuclidStep,
    Thm21,
    Thm22,
    UfdRoundtripZ,
    UfdRoundtripZi,
    PrimeIrreducible,
    MeasureDecrease,
    FieldInstance,
}

impl Suite {
    pub const ALL: [Suite; 12] = [
        Suite::RingAxioms,
        Suite::EuclidContract,
        Suite::GcdOracleZ,
        Suite::GcdOracleZi,
        Suite::EuclidStep,
        Suite::Thm21,
        Suite::Thm22,
        Suite::UfdRoundtripZ,
        Suite::UfdRoundtripZi,
        Suite::PrimeIrreducible,
        Suite::MeasureDecrease,
        Suite::FieldInstance,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::RingAxioms => "ring_axioms",
            Suite::EuclidContract => "euclid_contract",
            Suite::GcdOracleZ => "gcd_oracle_z",
            Suite::GcdOracleZi => "gcd_oracle_zi",
            Suite::EuclidStep => "euclid_step",
            Suite::Thm21 => "thm21",
            Suite::Thm22 => "thm22",
            Suite::UfdRoundtripZ => "ufd_roundtrip_z",
            Suite::UfdRoundtripZi => "ufd_roundtrip_zi",
            Suite::PrimeIrreducible => "prime_irreducible",
            Suite::MeasureDecrease => "measure_decrease",
            Suite::FieldInstance => "field_instance",
        }
    }

    pub fn domain(self) -> &'static str {
        match self {
            Suite::RingAxioms => "Z, Z[i], Z/nZ",
            Suite::GcdOracleZ | Suite::UfdRoundtripZ => "Z",
            Suite::GcdOracleZi | Suite::UfdRoundtripZi => "Z[i]",
            Suite::Thm21 | Suite::Thm22 => "Z/nZ",
            Suite::FieldInstance => "F_p",
            _ => "Z, Z[i]",
        }
    }

    /// Suites over infinite rings only ever search bounded ranges: a clean
    /// run is evidence, not proof.
    pub fn falsification_only(self) -> bool {
        !matches!(self, Suite::Thm21 | Suite::Thm22 | Suite::FieldInstance)
    }

    fn seed_salt(self) -> u64 {
        // FNV-1a of the name keeps per-suite streams independent.
        self.name().bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3))
    }

    pub(crate) fn exhaustive(self, bound: &Bound) -> Box<dyn Iterator<Item = Case>> {
        let bi = bound.integer_abs_bound;
        let bg = bound.gaussian_norm_bound;
        let bm = bound.modulus_bound;
        let seed = bound.random_seed;
        match self {
            Suite::RingAxioms => {
                let z = ints(bi).flat_map(move |a| {
                    ints(bi).flat_map(move |b| {
                        let a = a.clone();
                        ints(bi).map(move |c| Case::RingAxiomsZ { a: a.clone(), b: b.clone(), c })
                    })
                });
                let zi = triples(gaussians(bg)).map(|(a, b, c)| Case::RingAxiomsZi { a, b, c });
                let m = moduli(bm)
                    .flat_map(|n| tuples(n, 3).map(move |t| Case::RingAxiomsMod { n, a: t[0], b: t[1], c: t[2] }));
                Box::new(z.chain(zi).chain(m))
            }
            Suite::EuclidContract => {
                let z = int_pairs(bi).map(|(a, b)| Case::EuclidContractZ { a, b });
                let appx = int_pairs(bi).map(|(a, b)| Case::DivRemAppx { a, b });
                let zi = gaussian_pairs(bg).map(|(y, x)| Case::EuclidContractZi { y, x });
                let mult =
                    gaussian_pairs(bg).filter(|(x, _)| !x.is_zero()).map(|(x, y)| Case::NormMultiplicative { x, y });
                Box::new(z.chain(appx).chain(zi).chain(mult))
            }
            Suite::GcdOracleZ => Box::new(int_pairs(bi).map(|(a, b)| Case::GcdOracleZ { a, b })),
            Suite::GcdOracleZi => Box::new(gaussian_pairs(bg).map(|(x, y)| Case::GcdOracleZi { x, y })),
            Suite::EuclidStep => {
                let z = int_pairs(bi).flat_map(move |(a, b)| {
                    nonzero_ints(bi).map(move |g| Case::EuclidStepZ { a: a.clone(), b: b.clone(), g })
                });
                // Each Gaussian case enumerates divisor candidates twice, so the
                // triple space is kept at a tenth of the norm bound.
                let bz = (bg / 10).max(1);
                let zi = gaussian_pairs(bz).flat_map(move |(x, y)| {
                    nonzero_gaussians(bz).map(move |g| Case::EuclidStepZi { x: x.clone(), y: y.clone(), g })
                });
                Box::new(z.chain(zi))
            }
            Suite::Thm21 => Box::new(moduli(bm).flat_map(|n| {
                let ring = ModularRing::new(n).expect("moduli start at 2");
                DivisibilityClause::ALL.into_iter().flat_map(move |clause| {
                    tuples(n, clause.arity())
                        .filter(move |t| ring.divisibility_case_applies(clause, t))
                        .map(move |elems| Case::Divisibility { n, clause, elems })
                })
            })),
            Suite::Thm22 => Box::new(moduli(bm).flat_map(|n| {
                let ring = ModularRing::new(n).expect("moduli start at 2");
                PrimeClause::ALL.into_iter().flat_map(move |clause| {
                    tuples(n, clause.arity())
                        .filter(move |t| ring.prime_case_applies(clause, t))
                        .map(move |elems| Case::PrimeIdeal { n, clause, elems })
                })
            })),
            Suite::UfdRoundtripZ => Box::new(
                (2..=bi)
                    .flat_map(|m| [BigInt::from(m), -BigInt::from(m)])
                    .map(move |n| Case::UfdZ { seed: case_seed(seed, &n.to_string()), n }),
            ),
            Suite::UfdRoundtripZi => Box::new(
                gaussians(bg)
                    .filter(|x| x.norm_squared() >= 2u32.into())
                    .map(move |x| Case::UfdZi { seed: case_seed(seed, &x.to_string()), x }),
            ),
            Suite::PrimeIrreducible => {
                let z = ints(bi).map(move |x| Case::PrimeIrreducibleZ { x, pair_bound: bi });
                let zi = gaussians(bg).map(move |x| Case::PrimeIrreducibleZi { x, pair_norm_bound: bg });
                Box::new(z.chain(zi))
            }
            Suite::MeasureDecrease => {
                let z = int_pairs(bi).map(|(a, b)| Case::MeasureZ { a, b });
                let zi = gaussian_pairs(bg).map(|(x, y)| Case::MeasureZi { x, y });
                Box::new(z.chain(zi))
            }
            Suite::FieldInstance => Box::new(
                moduli(bm)
                    .filter(|&p| is_irreducible_z(&BigInt::from(p)))
                    .flat_map(|p| tuples(p, 2).map(move |t| Case::FieldInstance { p, a: t[0], b: t[1] })),
            ),
        }
    }

    /// `bound.random_sample_count` cases drawn above the bound from a
    /// generator seeded by `bound.random_seed` and the suite name.
    pub(crate) fn sampled(self, bound: &Bound) -> Vec<Case> {
        let mut rng = ChaCha8Rng::seed_from_u64(bound.random_seed ^ self.seed_salt());
        (0..bound.random_sample_count).map(|k| self.sample(bound, k, &mut rng)).collect()
    }

    fn sample(self, bound: &Bound, k: u64, rng: &mut ChaCha8Rng) -> Case {
        let bi = bound.integer_abs_bound;
        let bg = bound.gaussian_norm_bound;
        let bm = bound.modulus_bound;
        let int = |rng: &mut ChaCha8Rng| sample_int_above(rng, bi);
        let nonzero_gauss = |rng: &mut ChaCha8Rng| sample_gaussian_above(rng, bg);
        let modulus = |rng: &mut ChaCha8Rng| rng.gen_range(bm.max(1) + 1..=2 * bm.max(2));
        match self {
            Suite::RingAxioms => match k % 3 {
                0 => Case::RingAxiomsZ { a: int(rng), b: int(rng), c: int(rng) },
                1 => Case::RingAxiomsZi { a: nonzero_gauss(rng), b: nonzero_gauss(rng), c: nonzero_gauss(rng) },
                _ => {
                    let n = modulus(rng);
                    Case::RingAxiomsMod { n, a: rng.gen_range(0..n), b: rng.gen_range(0..n), c: rng.gen_range(0..n) }
                }
            },
            Suite::EuclidContract => match k % 4 {
                0 => Case::EuclidContractZ { a: int(rng), b: int(rng) },
                1 => Case::DivRemAppx { a: int(rng), b: int(rng) },
                2 => Case::EuclidContractZi { y: nonzero_gauss(rng), x: nonzero_gauss(rng) },
                _ => Case::NormMultiplicative { x: nonzero_gauss(rng), y: nonzero_gauss(rng) },
            },
            Suite::GcdOracleZ => Case::GcdOracleZ { a: int(rng), b: int(rng) },
            Suite::GcdOracleZi => Case::GcdOracleZi { x: nonzero_gauss(rng), y: nonzero_gauss(rng) },
            Suite::EuclidStep => {
                if k.is_multiple_of(2) {
                    Case::EuclidStepZ { a: int(rng), b: int(rng), g: int(rng) }
                } else {
                    Case::EuclidStepZi { x: nonzero_gauss(rng), y: nonzero_gauss(rng), g: nonzero_gauss(rng) }
                }
            }
            Suite::Thm21 => {
                let n = modulus(rng);
                let ring = ModularRing::new(n).expect("sampled moduli exceed 1");
                let clause = DivisibilityClause::ALL[(k % DivisibilityClause::ALL.len() as u64) as usize];
                let elems = loop {
                    let t: Vec<u64> = (0..clause.arity()).map(|_| rng.gen_range(0..n)).collect();
                    if ring.divisibility_case_applies(clause, &t) || clause == DivisibilityClause::ViConverse {
                        break t;
                    }
                };
                if ring.divisibility_case_applies(clause, &elems) {
                    Case::Divisibility { n, clause, elems }
                } else {
                    // the converse only ranges over prime moduli
                    let p = next_prime(n);
                    let elems = elems.iter().map(|v| v % p).map(|v| v.max(1)).collect();
                    Case::Divisibility { n: p, clause, elems }
                }
            }
            Suite::Thm22 => {
                let n = modulus(rng);
                let x = rng.gen_range(1..n);
                Case::PrimeIdeal { n, clause: PrimeClause::I, elems: vec![x] }
            }
            Suite::UfdRoundtripZ => {
                let n = int(rng);
                Case::UfdZ { seed: case_seed(bound.random_seed, &n.to_string()), n }
            }
            Suite::UfdRoundtripZi => {
                let x = nonzero_gauss(rng);
                Case::UfdZi { seed: case_seed(bound.random_seed, &x.to_string()), x }
            }
            Suite::PrimeIrreducible => {
                // The pair bound grows with the element so that every
                // nontrivial factorization lies inside the search range.
                if k.is_multiple_of(2) {
                    let x = int(rng);
                    let pair_bound = u64::try_from(x.magnitude()).expect("sampled below 4*bound");
                    Case::PrimeIrreducibleZ { x, pair_bound }
                } else {
                    let x = sample_gaussian_above(rng, bg);
                    let pair_norm_bound = u64::try_from(&x.norm_squared()).expect("sampled below 4*bound");
                    Case::PrimeIrreducibleZi { x, pair_norm_bound }
                }
            }
            Suite::MeasureDecrease => {
                if k.is_multiple_of(2) {
                    Case::MeasureZ { a: int(rng), b: int(rng) }
                } else {
                    Case::MeasureZi { x: nonzero_gauss(rng), y: nonzero_gauss(rng) }
                }
            }
            Suite::FieldInstance => {
                let p = next_prime(rng.gen_range(bm.max(1) + 1..=4 * bm.max(2)));
                Case::FieldInstance { p, a: rng.gen_range(0..p), b: rng.gen_range(0..p) }
            }
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, AlgebraError> {
        Suite::ALL.into_iter().find(|suite| suite.name() == s).ok_or_else(|| AlgebraError::UnknownSuite(s.to_string()))
    }
}

fn case_seed(seed: u64, label: &str) -> u64 {
    label.bytes().fold(seed ^ 0x9e37_79b9_7f4a_7c15, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3))
}

fn next_prime(mut n: u64) -> u64 {
    while !is_irreducible_z(&BigInt::from(n)) {
        n += 1;
    }
    n
}

fn ints(bound: u64) -> impl Iterator<Item = BigInt> + Clone {
    let b = bound as i64;
    (-b..=b).map(BigInt::from)
}

fn nonzero_ints(bound: u64) -> impl Iterator<Item = BigInt> + Clone {
    ints(bound).filter(|v| v.sign() != num_bigint::Sign::NoSign)
}

/// `(a, b)` with `|a|, |b| <= bound` and `b != 0`.
fn int_pairs(bound: u64) -> impl Iterator<Item = (BigInt, BigInt)> {
    ints(bound).flat_map(move |a| nonzero_ints(bound).map(move |b| (a.clone(), b)))
}

fn gaussians(bound: u64) -> std::vec::IntoIter<GaussianInt> {
    elements_with_norm_at_most(bound).into_iter()
}

fn nonzero_gaussians(bound: u64) -> impl Iterator<Item = GaussianInt> + Clone {
    gaussians(bound).filter(|x| !x.is_zero())
}

/// `(x, y)` with norms at most `bound` and `y != 0`.
fn gaussian_pairs(bound: u64) -> impl Iterator<Item = (GaussianInt, GaussianInt)> {
    gaussians(bound).flat_map(move |x| nonzero_gaussians(bound).map(move |y| (x.clone(), y)))
}

fn triples(elems: std::vec::IntoIter<GaussianInt>) -> impl Iterator<Item = (GaussianInt, GaussianInt, GaussianInt)> {
    let all: Vec<GaussianInt> = elems.collect();
    let outer = all.clone();
    outer.into_iter().flat_map(move |a| {
        let all = all.clone();
        let inner = all.clone();
        all.into_iter().flat_map(move |b| {
            let a = a.clone();
            inner.clone().into_iter().map(move |c| (a.clone(), b.clone(), c))
        })
    })
}

fn moduli(bound: u64) -> impl Iterator<Item = u64> {
    2..=bound
}
