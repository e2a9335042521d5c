//! Acceptance criteria, each checked exactly at its stated bound. Prints one
//! PASS/FAIL line per criterion and exits nonzero if any fails.

use std::process::{Command, ExitCode};
use std::time::Instant;

use euclid_cli::{run, Syntax};
use euclid_kernel::harness::{run_suite, run_suite_with, Bound, Hooks, SuiteReport};
use euclid_kernel::integers::f_phi_z;
use euclid_kernel::{
    is_unit, CommutativeRing, GaussianInt, GaussianIntegers, Integers, ModularRing, PrimeField, Result,
};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = std::result::Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn bound(integer: u64, gaussian: u64, modulus: u64) -> Bound {
    Bound { integer_abs_bound: integer, gaussian_norm_bound: gaussian, modulus_bound: modulus, ..Bound::default() }
}

/// Lattice points with norm at most `n`, counted by direct scan.
fn lattice_count(n: i64) -> u64 {
    let s = (n as f64).sqrt() as i64 + 1;
    let mut count = 0;
    for re in -s..=s {
        for im in -s..=s {
            if re * re + im * im <= n {
                count += 1;
            }
        }
    }
    count
}

/// Ordered pairs over `[-b, b]` with a nonzero second entry.
fn int_pairs(b: u64) -> u64 {
    (2 * b + 1) * (2 * b)
}

/// Ordered Gaussian pairs with norms at most `n`, second entry nonzero.
fn gaussian_pairs(n: i64) -> u64 {
    let c = lattice_count(n);
    c * (c - 1)
}

/// The report is clean and, when given, its exhaustive part has exactly
/// `expected` cases.
fn clean(report: Result<SuiteReport>, expected: Option<u64>) -> Outcome {
    let r = report.map_err(|e| e.to_string())?;
    if !r.passed() {
        let first = r.counterexamples.first().map(|c| serde_json::to_string(c).unwrap()).unwrap_or_default();
        return Err(format!("{} failed cases, first {first}", r.failed_cases));
    }
    if let Some(expected) = expected {
        if r.exhaustive_cases != expected {
            return Err(format!("{} exhaustive cases, expected {expected}", r.exhaustive_cases));
        }
    }
    Ok(format!("{} cases, 0 counterexamples", r.cases_checked))
}

fn c1() -> Outcome {
    clean(run_suite("gcd_oracle_z", &bound(200, 1, 2)), Some(int_pairs(200)))
}

fn c2() -> Outcome {
    // The Gaussian part of the suite runs at norm bound 1 here: units only.
    let units = lattice_count(1) - 1;
    let z = int_pairs(50) * 100;
    let zi = (units + 1) * units * units;
    clean(run_suite("euclid_step", &bound(50, 1, 2)), Some(z + zi))
}

fn c3_4_5(hooks: &Hooks) -> Result<SuiteReport> {
    run_suite_with("euclid_contract", &bound(200, 100, 2), hooks)
}

fn contract_cases() -> u64 {
    let c = lattice_count(100);
    // EuclidContractZ and DivRemAppx, then f_phi_zi pairs, then nonzero norm pairs
    2 * int_pairs(200) + c * (c - 1) + (c - 1) * (c - 1)
}

fn clause_free(r: &SuiteReport, clauses: &[&str]) -> Outcome {
    let hits: Vec<&str> = r.counterexamples.iter().map(|c| c.clause.as_str()).filter(|c| clauses.contains(c)).collect();
    if hits.is_empty() {
        Ok(format!("{} cases, 0 counterexamples", r.cases_checked))
    } else {
        Err(format!("violated {hits:?}"))
    }
}

fn c3(r: &SuiteReport) -> Outcome {
    if r.exhaustive_cases != contract_cases() {
        return Err(format!("{} exhaustive cases, expected {}", r.exhaustive_cases, contract_cases()));
    }
    clause_free(r, &["division_equation", "half_bound"])
}

fn c4(r: &SuiteReport) -> Outcome {
    clause_free(r, &["division_equation", "norm_decrease", "zero_dividend"])
}

fn c5(r: &SuiteReport) -> Outcome {
    clause_free(r, &["norm_multiplicative"])
}

fn c6() -> Outcome {
    clean(run_suite("gcd_oracle_zi", &bound(1, 50, 2)), Some(gaussian_pairs(50)))
}

fn c7() -> Outcome {
    clean(run_suite("measure_decrease", &bound(100, 50, 2)), Some(int_pairs(100) + gaussian_pairs(50)))
}

fn c8() -> Outcome {
    let ring = ModularRing::new(6).map_err(|e| e.to_string())?;
    let two = ring.element(2).map_err(|e| e.to_string())?;
    if !ring.is_prime_element(&two) || ring.is_irreducible(&two) {
        return Err("kernel deciders disagree with prime=true irreducible=false".into());
    }
    let out = run(["euclid", "classify", "--domain", "zmod:6", "2"]);
    let want = "zero=false unit=false prime=true irreducible=false\n";
    if out.code != 0 || out.stdout != want {
        return Err(format!("classify printed {:?} (exit {})", out.stdout, out.code));
    }
    Ok("prime=true irreducible=false".into())
}

fn c9() -> Outcome {
    clean(run_suite("thm21", &bound(1, 1, 24)), None)
}

fn c10() -> Outcome {
    clean(run_suite("thm22", &bound(1, 1, 24)), None)
}

fn c11() -> Outcome {
    let expected = 61 + lattice_count(30);
    clean(run_suite("prime_irreducible", &bound(30, 30, 2)), Some(expected))
}

fn c12() -> Outcome {
    clean(run_suite("ufd_roundtrip_z", &bound(10_000, 1, 2)), Some(2 * 9_999))
}

fn c13() -> Outcome {
    // everything of norm at most 2000 except zero and the four units
    clean(run_suite("ufd_roundtrip_zi", &bound(1, 2000, 2)), Some(lattice_count(2000) - 5))
}

fn c14() -> Outcome {
    let expected: u64 = [2u64, 3, 5, 7, 11].iter().map(|p| p * p).sum();
    clean(run_suite("field_instance", &bound(1, 1, 11)), Some(expected))?;
    for p in [2u64, 3, 5, 7, 11] {
        let f = PrimeField::new(p).map_err(|e| e.to_string())?;
        for a in 1..p {
            for b in 1..p {
                let (x, y) = (f.element(a).unwrap(), f.element(b).unwrap());
                let g = euclid_kernel::euclidean_gcd(&f, &x, &y).map_err(|e| e.to_string())?;
                if !is_unit(&f, &g) {
                    return Err(format!("gcd({a}, {b}) = {g} in F_{p} is not a unit"));
                }
            }
        }
    }
    Ok("p in {2, 3, 5, 7, 11}".into())
}

fn random_digits(rng: &mut ChaCha8Rng) -> String {
    let len = rng.gen_range(1..=40);
    let mut s: String = (0..len).map(|_| char::from(b'0' + rng.gen_range(0..10u8))).collect();
    if rng.gen_bool(0.5) {
        s.insert(0, '-');
    }
    s
}

fn round_trip<R: Syntax>(ring: &R, x: &R::Elem) -> Outcome {
    let printed = ring.render(x);
    let back = ring.parse(&printed).map_err(|e| e.to_string())?;
    if back != *x || ring.render(&back) != printed {
        return Err(format!("{printed} did not round-trip"));
    }
    Ok(printed)
}

/// A mutated `div_rem_appx` that keeps the nonnegative remainder and never
/// shifts the quotient.
fn without_shift(a: &BigInt, b: &BigInt) -> Result<(BigInt, BigInt)> {
    f_phi_z(a, b)
}

fn c15() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    for _ in 0..1000 {
        let z: BigInt = random_digits(&mut rng).parse().unwrap();
        round_trip(&Integers, &z)?;
        let re: BigInt = random_digits(&mut rng).parse().unwrap();
        let im: BigInt = if rng.gen_bool(0.2) { BigInt::from(0) } else { random_digits(&mut rng).parse().unwrap() };
        round_trip(&GaussianIntegers, &GaussianInt::new(re, im))?;
        let p = [2u64, 3, 5, 7, 11, 13, 101, 65_537][rng.gen_range(0..8)];
        let f = PrimeField::new(p).unwrap();
        round_trip(&f, &f.element(rng.gen_range(0..p)).unwrap())?;
        let n = rng.gen_range(2..1000u64);
        let m = ModularRing::new(n).unwrap();
        round_trip(&m, &m.element(rng.gen_range(0..n)).unwrap())?;
    }

    let status = Command::new(env!("CARGO_BIN_EXE_euclid"))
        .args(["verify", "--suite", "thm21", "--bound", "24"])
        .output()
        .map_err(|e| e.to_string())?;
    if status.status.code() != Some(0) {
        return Err(format!("verify --suite thm21 --bound 24 exited {:?}", status.status.code()));
    }

    let mutated = c3_4_5(&Hooks { div_rem_appx: without_shift }).map_err(|e| e.to_string())?;
    if mutated.exit_code() == 0 {
        return Err("mutated div_rem_appx went undetected".into());
    }
    Ok(format!(
        "4000 literals round-trip, verify exits 0, mutation exits {} with {} failed cases",
        mutated.exit_code(),
        mutated.failed_cases
    ))
}

fn main() -> ExitCode {
    // criteria 3 to 5 share one run of the division contract suite
    let contract = c3_4_5(&Hooks::default()).map_err(|e| e.to_string());
    let contract = &contract;
    let with_contract = |f: fn(&SuiteReport) -> Outcome| move || contract.as_ref().map_err(Clone::clone).and_then(f);

    let criteria: Vec<Criterion> = vec![
        ("gcd oracle equivalence in Z, |a|,|b| <= 200", Box::new(c1)),
        ("Euclid step theorem in Z, bound 50", Box::new(c2)),
        ("div_rem_appx on [-200, 200]", Box::new(with_contract(c3))),
        ("f_phi_Zi division witness, norm <= 100", Box::new(with_contract(c4))),
        ("norm multiplicativity, norm <= 100", Box::new(with_contract(c5))),
        ("gcd correctness in Z[i], norm <= 50", Box::new(c6)),
        ("termination measure, Z <= 100 and Z[i] <= 50", Box::new(c7)),
        ("2 is prime but not irreducible in Z/6Z", Box::new(c8)),
        ("divisibility and associates clauses on Z/nZ, n <= 24", Box::new(c9)),
        ("prime ideal and irreducible divisor clauses on Z/nZ, n <= 24", Box::new(c10)),
        ("prime iff irreducible in Z and Z[i] at bound 30", Box::new(c11)),
        ("unique factorization round-trip in Z, |n| <= 10000", Box::new(c12)),
        ("unique factorization round-trip in Z[i], norm <= 2000", Box::new(c13)),
        ("prime field instance, p <= 11", Box::new(c14)),
        ("CLI contract and mutation smoke test", Box::new(c15)),
    ];

    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let ms = start.elapsed().as_millis();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} ({ms} ms)", k + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {detail} ({ms} ms)", k + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
