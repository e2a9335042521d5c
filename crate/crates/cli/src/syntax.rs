//! Domain selectors and element literals.

use std::fmt;
use std::str::FromStr;

use euclid_kernel::integers::parse_int;
use euclid_kernel::{
    AlgebraError, CommutativeRing, GaussianInt, GaussianIntegers, Integers, ModElement, ModularRing, PrimeField, Result,
};
use num_traits::Zero;
use serde_json::{json, Value};

/// `z`, `zi`, `fp:<p>` with `p` prime, or `zmod:<n>` with `n >= 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DomainSelector {
    Z,
    Zi,
    Fp(u64),
    Zmod(u64),
}

impl FromStr for DomainSelector {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self> {
        let modulus =
            |v: &str| v.parse::<u64>().map_err(|_| AlgebraError::Parse { what: "modulus", input: v.to_string() });
        match s.split_once(':') {
            None if s == "z" => Ok(DomainSelector::Z),
            None if s == "zi" => Ok(DomainSelector::Zi),
            Some(("fp", p)) => {
                let p = modulus(p)?;
                PrimeField::new(p)?;
                Ok(DomainSelector::Fp(p))
            }
            Some(("zmod", n)) => {
                let n = modulus(n)?;
                ModularRing::new(n)?;
                Ok(DomainSelector::Zmod(n))
            }
            _ => Err(AlgebraError::Parse { what: "domain (z, zi, fp:<p>, zmod:<n>)", input: s.to_string() }),
        }
    }
}

impl fmt::Display for DomainSelector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DomainSelector::Z => f.write_str("z"),
            DomainSelector::Zi => f.write_str("zi"),
            DomainSelector::Fp(p) => write!(f, "fp:{p}"),
            DomainSelector::Zmod(n) => write!(f, "zmod:{n}"),
        }
    }
}

/// Literal syntax and JSON rendering for a ring's elements. Every rendered
/// literal parses back to an equal element.
pub trait Syntax: CommutativeRing {
    fn parse(&self, s: &str) -> Result<Self::Elem>;

    fn render(&self, x: &Self::Elem) -> String {
        x.to_string()
    }

    /// Like [`Syntax::render`] but bracketed when the literal has an
    /// infix sign, for use inside products.
    fn render_factor(&self, x: &Self::Elem) -> String {
        self.render(x)
    }

    fn to_json(&self, x: &Self::Elem) -> Value {
        Value::String(self.render(x))
    }
}

impl Syntax for Integers {
    fn parse(&self, s: &str) -> Result<Self::Elem> {
        parse_int(s)
    }
}

impl Syntax for GaussianIntegers {
    fn parse(&self, s: &str) -> Result<GaussianInt> {
        s.parse()
    }

    fn render_factor(&self, x: &GaussianInt) -> String {
        if x.re.is_zero() || x.im.is_zero() {
            x.to_string()
        } else {
            format!("({x})")
        }
    }

    fn to_json(&self, x: &GaussianInt) -> Value {
        json!({ "re": x.re.to_string(), "im": x.im.to_string() })
    }
}

/// Residue literals are any decimal integer, reduced into `[0, n)`.
impl Syntax for ModularRing {
    fn parse(&self, s: &str) -> Result<ModElement> {
        Ok(self.reduce(&parse_int(s)?))
    }
}

impl Syntax for PrimeField {
    fn parse(&self, s: &str) -> Result<ModElement> {
        self.ring().parse(s)
    }
}
