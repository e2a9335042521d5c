//! The `euclid` command-line front end. [`run`] does all the work and
//! returns the exit code with the captured output, so tests can drive it
//! without spawning a process.

pub mod syntax;

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand};
use euclid_kernel::gaussian::factor_zi;
use euclid_kernel::harness::{run_suite, Bound, Suite, SuiteReport};
use euclid_kernel::integers::factor_z;
use euclid_kernel::{
    euclidean_gcd_traced, is_unit, AlgebraError, EuclideanDomain, Factorization, GaussianIntegers, Integers,
    ModularRing, PrimeField,
};
use serde_json::{json, Value};

pub use syntax::{DomainSelector, Syntax};

pub const EXIT_OK: i32 = 0;
pub const EXIT_SUITE_FAILED: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "euclid", version, about = "Exact gcd, division and factorization in Euclidean domains")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub options: Options,
}

#[derive(Args, Debug, Clone)]
pub struct Options {
    /// z, zi, fp:<p> (p prime) or zmod:<n>
    #[arg(long, global = true, default_value = "z")]
    pub domain: DomainSelector,
    #[arg(long, global = true)]
    pub json: bool,
    /// Print every recursive step of the gcd with its termination measure.
    #[arg(long, global = true)]
    pub trace: bool,
    /// Print the canonical associate of the gcd.
    #[arg(long, global = true)]
    pub canonical: bool,
    /// Primary search bound for `verify`.
    #[arg(long, global = true)]
    pub bound: Option<u64>,
    /// Random seed for `verify`.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Suite name for `verify`; all suites when omitted.
    #[arg(long, global = true)]
    pub suite: Option<Suite>,
    /// Modulus for `ideal`.
    #[arg(long, global = true)]
    pub modulus: Option<u64>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Greatest common divisor of a and nonzero b.
    Gcd {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Euclidean division of a by nonzero b, printed as (q, r).
    Divrem {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Unit and irreducible factors of a nonzero non-unit.
    Factor {
        #[arg(allow_hyphen_values = true)]
        x: String,
    },
    /// Zero, unit, prime and irreducible flags of an element.
    Classify {
        #[arg(allow_hyphen_values = true)]
        x: String,
    },
    /// The principal ideal (a) in Z/nZ with its prime and maximal flags.
    Ideal {
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// Run a verification suite; exits 0 iff no counterexample was found.
    Verify,
}

/// Exit code and captured streams of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn error(err: &AlgebraError) -> Self {
        let code = match err {
            AlgebraError::Parse { .. } | AlgebraError::UnknownSuite(_) => EXIT_PARSE,
            _ => EXIT_PRECONDITION,
        };
        Outcome { code, stdout: String::new(), stderr: format!("error: {err}\n") }
    }
}

/// Parses `args` (program name first) and executes the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code, stdout: String::new(), stderr: text }
            } else {
                Outcome { code, stdout: text, stderr: String::new() }
            };
        }
    };
    execute(&cli.command, &cli.options)
}

/// Binds `$d` to the selected Euclidean domain. `zmod` is rejected because
/// `Z/nZ` need not be an integral domain.
macro_rules! with_euclidean {
    ($opts:expr, |$d:ident| $body:expr) => {
        (|| match $opts.domain {
            DomainSelector::Z => {
                let $d = &Integers;
                $body
            }
            DomainSelector::Zi => {
                let $d = &GaussianIntegers;
                $body
            }
            DomainSelector::Fp(p) => {
                let $d = &PrimeField::new(p)?;
                $body
            }
            DomainSelector::Zmod(n) => Err(not_euclidean(n)),
        })()
    };
}

/// Binds `$r` to the selected ring.
macro_rules! with_ring {
    ($opts:expr, |$r:ident| $body:expr) => {
        (|| match $opts.domain {
            DomainSelector::Z => {
                let $r = &Integers;
                $body
            }
            DomainSelector::Zi => {
                let $r = &GaussianIntegers;
                $body
            }
            DomainSelector::Fp(p) => {
                let $r = &PrimeField::new(p)?;
                $body
            }
            DomainSelector::Zmod(n) => {
                let $r = &ModularRing::new(n)?;
                $body
            }
        })()
    };
}

pub fn execute(command: &Command, opts: &Options) -> Outcome {
    let result = match command {
        Command::Gcd { a, b } => with_euclidean!(opts, |d| gcd(d, a, b, opts)),
        Command::Divrem { a, b } => with_euclidean!(opts, |d| divrem(d, a, b, opts)),
        Command::Factor { x } => factor(x, opts),
        Command::Classify { x } => with_ring!(opts, |r| classify(r, x, opts)),
        Command::Ideal { a } => ideal(a, opts),
        Command::Verify => return verify(opts),
    };
    match result {
        Ok(text) => Outcome::ok(text),
        Err(e) => Outcome::error(&e),
    }
}

type Res<T> = euclid_kernel::Result<T>;

/// `Z/nZ` is only handled as a Euclidean domain through `fp:<n>`, which
/// requires `n` prime.
fn not_euclidean(n: u64) -> AlgebraError {
    AlgebraError::NotPrime(n.to_string())
}

fn gcd<D: EuclideanDomain + Syntax>(d: &D, a: &str, b: &str, opts: &Options) -> Res<String> {
    let (a, b) = (d.parse(a)?, d.parse(b)?);
    let trace = euclidean_gcd_traced(d, &a, &b)?;
    let result = if opts.canonical { d.canonical_associate(&trace.result) } else { trace.result.clone() };
    let steps = trace.steps.iter().map(|s| {
        let (q, r) = match &s.division {
            Some((q, r)) => (Some(q), Some(r)),
            None => (None, None),
        };
        (s, q, r)
    });
    if opts.json {
        let mut out = json!({
            "domain": opts.domain.to_string(),
            "a": d.to_json(&a),
            "b": d.to_json(&b),
            "gcd": d.to_json(&result),
        });
        if opts.trace {
            let steps: Vec<Value> = steps
                .map(|(s, q, r)| {
                    json!({
                        "a": d.to_json(&s.a),
                        "b": d.to_json(&s.b),
                        "q": q.map(|q| d.to_json(q)),
                        "r": r.map(|r| d.to_json(r)),
                        "measure": [s.measure.0.to_string(), s.measure.1.to_string()],
                    })
                })
                .collect();
            out["trace"] = Value::Array(steps);
        }
        return Ok(format!("{out}\n"));
    }
    let mut text = String::new();
    if opts.trace {
        for (k, (s, q, r)) in steps.enumerate() {
            let _ = write!(text, "step {k}: a={} b={}", d.render(&s.a), d.render(&s.b));
            match (q, r) {
                (Some(q), Some(r)) => {
                    let _ = write!(text, " q={} r={}", d.render(q), d.render(r));
                }
                _ if k + 1 < trace.steps.len() => text.push_str(" swap"),
                _ => {}
            }
            let _ = writeln!(text, " measure=({}, {})", s.measure.0, s.measure.1);
        }
    }
    let _ = writeln!(text, "{}", d.render(&result));
    Ok(text)
}

fn divrem<D: EuclideanDomain + Syntax>(d: &D, a: &str, b: &str, opts: &Options) -> Res<String> {
    let (a, b) = (d.parse(a)?, d.parse(b)?);
    if d.is_zero(&b) {
        return Err(AlgebraError::ZeroArgument("divrem"));
    }
    let (q, r) = d.div_rem(&a, &b)?;
    if opts.json {
        let out = json!({ "domain": opts.domain.to_string(), "q": d.to_json(&q), "r": d.to_json(&r) });
        return Ok(format!("{out}\n"));
    }
    Ok(format!("({}, {})\n", d.render(&q), d.render(&r)))
}

fn factor(x: &str, opts: &Options) -> Res<String> {
    match opts.domain {
        DomainSelector::Z => {
            let x = Integers.parse(x)?;
            render_factorization(&Integers, &factor_z(&x)?, opts)
        }
        DomainSelector::Zi => {
            let x = GaussianIntegers.parse(x)?;
            render_factorization(&GaussianIntegers, &factor_zi(&x)?, opts)
        }
        // Every nonzero field element is a unit.
        DomainSelector::Fp(p) => {
            let f = PrimeField::new(p)?;
            let x = f.parse(x)?;
            Err(if x.value == 0 { AlgebraError::ZeroArgument("factor") } else { AlgebraError::UnitArgument("factor") })
        }
        DomainSelector::Zmod(n) => Err(not_euclidean(n)),
    }
}

fn render_factorization<R: Syntax>(r: &R, f: &Factorization<R::Elem>, opts: &Options) -> Res<String> {
    if opts.json {
        let factors: Vec<Value> = f.factors.iter().map(|x| r.to_json(x)).collect();
        let out = json!({ "domain": opts.domain.to_string(), "unit": r.to_json(&f.unit), "factors": factors });
        return Ok(format!("{out}\n"));
    }
    let mut parts = vec![r.render_factor(&f.unit)];
    parts.extend(f.factors.iter().map(|x| r.render_factor(x)));
    Ok(format!("{}\n", parts.join(" * ")))
}

fn classify<R: Syntax>(r: &R, x: &str, opts: &Options) -> Res<String> {
    let x = r.parse(x)?;
    let zero = r.is_zero(&x);
    let unit = is_unit(r, &x);
    let prime = r.is_prime_element(&x);
    let irreducible = r.is_irreducible(&x);
    if opts.json {
        let out = json!({
            "domain": opts.domain.to_string(),
            "element": r.to_json(&x),
            "zero": zero,
            "unit": unit,
            "prime_element": prime,
            "irreducible_element": irreducible,
        });
        return Ok(format!("{out}\n"));
    }
    Ok(format!("zero={zero} unit={unit} prime={prime} irreducible={irreducible}\n"))
}

/// The modulus comes from `--modulus`, or else from a `zmod`/`fp` domain.
fn ideal(a: &str, opts: &Options) -> Res<String> {
    let n = match (opts.modulus, opts.domain) {
        (Some(n), _) => n,
        (None, DomainSelector::Zmod(n) | DomainSelector::Fp(n)) => n,
        _ => return Err(AlgebraError::Parse { what: "modulus (pass --modulus <n>)", input: String::new() }),
    };
    let ring = ModularRing::new(n)?;
    let a = ring.parse(a)?;
    let ideal = ring.principal_ideal(&a);
    let prime = ring.is_prime_ideal(&ideal)?;
    // The unit ideal is not a proper ideal, hence not maximal.
    let maximal = match ring.is_maximal_principal(&ideal) {
        Ok(m) => m,
        Err(AlgebraError::WholeRing) => false,
        Err(e) => return Err(e),
    };
    if opts.json {
        let out = json!({
            "modulus": n,
            "generator": a.value,
            "members": ideal.members().iter().collect::<Vec<_>>(),
            "prime": prime,
            "maximal_principal": maximal,
        });
        return Ok(format!("{out}\n"));
    }
    Ok(format!("{ideal} prime={prime} maximal_principal={maximal}\n"))
}

fn verify(opts: &Options) -> Outcome {
    let suites: Vec<Suite> = match opts.suite {
        Some(s) => vec![s],
        None => Suite::ALL.to_vec(),
    };
    let mut stdout = String::new();
    let mut code = EXIT_OK;
    for suite in suites {
        let mut bound = Bound::default();
        if let Some(n) = opts.bound {
            bound = bound.with_primary(suite, n);
        }
        if let Some(seed) = opts.seed {
            bound.random_seed = seed;
        }
        let report = match run_suite(suite.name(), &bound) {
            Ok(r) => r,
            Err(e) => return Outcome::error(&e),
        };
        if !report.passed() {
            code = EXIT_SUITE_FAILED;
        }
        if opts.json {
            let _ = writeln!(stdout, "{}", serde_json::to_string(&report).expect("reports serialize"));
        } else {
            stdout.push_str(&render_report(&report));
        }
    }
    Outcome { code, stdout, stderr: String::new() }
}

fn render_report(r: &SuiteReport) -> String {
    let status = match (r.passed(), r.falsification_only) {
        (false, _) => "FAIL",
        (true, true) => "pass (falsification only)",
        (true, false) => "pass",
    };
    let mut text = format!(
        "{} [{}] {}: {} cases ({} exhaustive, {} sampled), {} failed, {} ms\n",
        r.suite, r.domain, status, r.cases_checked, r.exhaustive_cases, r.sampled_cases, r.failed_cases, r.elapsed_ms
    );
    for c in &r.counterexamples {
        let inputs = serde_json::to_string(&c.inputs).expect("cases serialize");
        let _ = writeln!(text, "  counterexample {}: {inputs}", c.clause);
    }
    text
}
