//! Suite orchestration: every suite enumerates cases exhaustively inside a
//! [`Bound`] and then draws seeded random samples above it. Reports are
//! deterministic in `(suite, bound)` apart from `elapsed_ms`.

pub mod cases;
pub mod oracles;
mod suites;

use std::time::Instant;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{AlgebraError, Result};
use crate::modular::MAX_COUNTEREXAMPLES;
pub use cases::Case;
pub use suites::Suite;

/// Search limits. Integer bounds are inclusive on absolute value, Gaussian
/// bounds inclusive on norm, modulus bounds inclusive on `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bound {
    pub integer_abs_bound: u64,
    pub gaussian_norm_bound: u64,
    pub modulus_bound: u64,
    pub random_seed: u64,
    pub random_sample_count: u64,
}

impl Default for Bound {
    fn default() -> Self {
        Bound {
            integer_abs_bound: 50,
            gaussian_norm_bound: 30,
            modulus_bound: 24,
            random_seed: 0x5eed,
            random_sample_count: 64,
        }
    }
}

impl Bound {
    pub fn validate(&self) -> Result<()> {
        if self.integer_abs_bound == 0 || self.gaussian_norm_bound == 0 || self.modulus_bound == 0 {
            return Err(AlgebraError::Parse {
                what: "bound (all bounds must be at least 1)",
                input: format!("{self:?}"),
            });
        }
        Ok(())
    }

    /// Sets the bound the suite is primarily quantified over: moduli for the
    /// finite-ring suites, integer magnitude and Gaussian norm otherwise.
    pub fn with_primary(mut self, suite: Suite, n: u64) -> Self {
        match suite {
            Suite::Thm21 | Suite::Thm22 | Suite::FieldInstance => self.modulus_bound = n,
            Suite::GcdOracleZ | Suite::UfdRoundtripZ => self.integer_abs_bound = n,
            Suite::GcdOracleZi | Suite::UfdRoundtripZi => self.gaussian_norm_bound = n,
            _ => {
                self.integer_abs_bound = n;
                self.gaussian_norm_bound = n;
            }
        }
        self
    }
}

/// Replaceable internals, used to confirm that suites catch a broken
/// implementation.
#[derive(Clone, Copy, Debug)]
pub struct Hooks {
    pub div_rem_appx: fn(&BigInt, &BigInt) -> Result<(BigInt, BigInt)>,
}

impl Default for Hooks {
    fn default() -> Self {
        Hooks { div_rem_appx: crate::gaussian::div_rem_appx }
    }
}

/// One failing case and the clause it violated. `inputs` is enough to
/// re-run the case alone.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub clause: String,
    pub inputs: Case,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub domain: String,
    pub bound: Bound,
    pub cases_checked: u64,
    pub exhaustive_cases: u64,
    pub sampled_cases: u64,
    /// Cases with at least one violated clause; may exceed the number of
    /// recorded counterexamples.
    pub failed_cases: u64,
    /// Set when a clean run only shows the absence of counterexamples in the
    /// searched range.
    pub falsification_only: bool,
    pub counterexamples: Vec<Counterexample>,
    pub elapsed_ms: u64,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failed_cases == 0
    }

    /// 0 on success, 1 when any case failed.
    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }
}

pub fn run_suite(name: &str, bound: &Bound) -> Result<SuiteReport> {
    run_suite_with(name, bound, &Hooks::default())
}

/// Runs a suite with replaced internals. At most [`MAX_COUNTEREXAMPLES`]
/// counterexamples are kept per clause, in enumeration order.
pub fn run_suite_with(name: &str, bound: &Bound, hooks: &Hooks) -> Result<SuiteReport> {
    let suite: Suite = name.parse()?;
    bound.validate()?;
    let start = Instant::now();
    let mut report = SuiteReport {
        suite: suite.name().to_string(),
        domain: suite.domain().to_string(),
        bound: bound.clone(),
        cases_checked: 0,
        exhaustive_cases: 0,
        sampled_cases: 0,
        failed_cases: 0,
        falsification_only: suite.falsification_only(),
        counterexamples: Vec::new(),
        elapsed_ms: 0,
    };
    let record = |case: Case, report: &mut SuiteReport| {
        let violated = case.check(hooks);
        report.cases_checked += 1;
        if violated.is_empty() {
            return;
        }
        report.failed_cases += 1;
        for clause in violated {
            let kept = report.counterexamples.iter().filter(|c| c.clause == clause).count();
            if kept < MAX_COUNTEREXAMPLES {
                report.counterexamples.push(Counterexample { clause: clause.to_string(), inputs: case.clone() });
            }
        }
    };
    for case in suite.exhaustive(bound) {
        record(case, &mut report);
        report.exhaustive_cases += 1;
    }
    for case in suite.sampled(bound) {
        record(case, &mut report);
        report.sampled_cases += 1;
    }
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

/// Re-runs a recorded case alone; true when it still violates its clause.
pub fn replay(counterexample: &Counterexample, hooks: &Hooks) -> bool {
    counterexample.inputs.check(hooks).contains(&counterexample.clause.as_str())
}
