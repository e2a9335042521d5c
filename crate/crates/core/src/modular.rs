//! The finite rings `Z/nZ`, their principal ideals, and prime fields as
//! Euclidean domains.
//!
//! Every predicate here is decided by exhaustive enumeration over the ring,
//! so the moduli are expected to stay small.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::algebra::{associates, divides, is_unit, CommutativeRing, EuclideanDomain};
use crate::error::{AlgebraError, Result};
use crate::integers::is_irreducible_z;

/// Counterexample lists are truncated to this many entries per clause.
pub const MAX_COUNTEREXAMPLES: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ModElement {
    pub value: u64,
    pub modulus: u64,
}

impl fmt::Display for ModElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// `Z/nZ` for `n >= 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ModularRing {
    n: u64,
}

impl ModularRing {
    pub fn new(n: u64) -> Result<Self> {
        if n < 2 {
            return Err(AlgebraError::InvalidModulus(n));
        }
        Ok(Self { n })
    }

    pub fn modulus(&self) -> u64 {
        self.n
    }

    /// The residue `value`, which must lie in `[0, n)`.
    pub fn element(&self, value: u64) -> Result<ModElement> {
        if value >= self.n {
            return Err(AlgebraError::ResidueOutOfRange { value, modulus: self.n });
        }
        Ok(ModElement { value, modulus: self.n })
    }

    /// Reduces an arbitrary integer into `[0, n)`.
    pub fn reduce(&self, value: &BigInt) -> ModElement {
        let n = BigInt::from(self.n);
        let r = ((value % &n) + &n) % &n;
        let value = u64::try_from(r).expect("residue fits below the modulus");
        ModElement { value, modulus: self.n }
    }

    pub fn check(&self, x: &ModElement) -> Result<()> {
        if x.modulus != self.n {
            return Err(AlgebraError::ModulusMismatch { left: self.n, right: x.modulus });
        }
        if x.value >= self.n {
            return Err(AlgebraError::ResidueOutOfRange { value: x.value, modulus: self.n });
        }
        Ok(())
    }

    pub fn elements(&self) -> impl Iterator<Item = ModElement> + '_ {
        (0..self.n).map(move |value| ModElement { value, modulus: self.n })
    }

    fn nonzero(&self) -> impl Iterator<Item = ModElement> + '_ {
        self.elements().skip(1)
    }

    fn assert_same(&self, a: &ModElement) {
        assert_eq!(a.modulus, self.n, "element of Z/{}Z used in Z/{}Z", a.modulus, self.n);
    }

    fn mul_raw(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.n as u128) as u64
    }

    pub fn units(&self) -> Vec<ModElement> {
        self.nonzero().filter(|u| is_unit(self, u)).collect()
    }

    /// The principal ideal `(a) = {a*r : r in Z/nZ}`.
    pub fn principal_ideal(&self, a: &ModElement) -> IdealSet {
        self.assert_same(a);
        let members = (0..self.n).map(|r| self.mul_raw(a.value, r)).collect();
        IdealSet { modulus: self.n, members }
    }

    /// All distinct principal ideals, ordered by their member sets.
    pub fn principal_ideals(&self) -> Vec<IdealSet> {
        let set: BTreeSet<IdealSet> = self.elements().map(|a| self.principal_ideal(&a)).collect();
        set.into_iter().collect()
    }

    pub fn whole_ring(&self) -> IdealSet {
        IdealSet { modulus: self.n, members: (0..self.n).collect() }
    }

    /// A proper ideal `I` with `ab in I` implying `a in I` or `b in I`.
    pub fn is_prime_ideal(&self, ideal: &IdealSet) -> Result<bool> {
        self.check_ideal(ideal)?;
        if ideal.members.len() as u64 == self.n {
            return Ok(false);
        }
        for a in 0..self.n {
            for b in 0..self.n {
                if ideal.contains(self.mul_raw(a, b)) && !ideal.contains(a) && !ideal.contains(b) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// No proper principal ideal strictly contains `I`.
    pub fn is_maximal_principal(&self, ideal: &IdealSet) -> Result<bool> {
        self.check_ideal(ideal)?;
        if ideal.members.len() as u64 == self.n {
            return Err(AlgebraError::WholeRing);
        }
        let full = self.n as usize;
        Ok(!self.principal_ideals().iter().any(|j| j.members.len() < full && ideal.is_proper_subset(j)))
    }

    fn check_ideal(&self, ideal: &IdealSet) -> Result<()> {
        if ideal.modulus != self.n {
            return Err(AlgebraError::ModulusMismatch { left: self.n, right: ideal.modulus });
        }
        Ok(())
    }

    /// `x` is nonzero, not a unit, and every `x = ab` has a unit factor.
    pub fn is_irreducible_mod(&self, x: &ModElement) -> bool {
        self.assert_same(x);
        if x.value == 0 || is_unit(self, x) {
            return false;
        }
        self.elements().all(|a| {
            self.elements().all(|b| self.mul_raw(a.value, b.value) != x.value || is_unit(self, &a) || is_unit(self, &b))
        })
    }

    /// `x` is nonzero, not a unit, and `x | ab` implies `x | a` or `x | b`.
    pub fn is_prime_element_mod(&self, x: &ModElement) -> bool {
        self.assert_same(x);
        if x.value == 0 || is_unit(self, x) {
            return false;
        }
        let div = |y: u64| self.divides_raw(x.value, y);
        (0..self.n).all(|a| (0..self.n).all(|b| !div(self.mul_raw(a, b)) || div(a) || div(b)))
    }

    fn divides_raw(&self, a: u64, b: u64) -> bool {
        (0..self.n).any(|x| self.mul_raw(a, x) == b)
    }
}

impl CommutativeRing for ModularRing {
    type Elem = ModElement;

    fn name(&self) -> String {
        format!("Z/{}Z", self.n)
    }

    fn zero(&self) -> ModElement {
        ModElement { value: 0, modulus: self.n }
    }

    fn one(&self) -> ModElement {
        ModElement { value: 1, modulus: self.n }
    }

    fn add(&self, a: &ModElement, b: &ModElement) -> ModElement {
        self.assert_same(a);
        self.assert_same(b);
        let value = ((a.value as u128 + b.value as u128) % self.n as u128) as u64;
        ModElement { value, modulus: self.n }
    }

    fn mul(&self, a: &ModElement, b: &ModElement) -> ModElement {
        self.assert_same(a);
        self.assert_same(b);
        ModElement { value: self.mul_raw(a.value, b.value), modulus: self.n }
    }

    fn neg(&self, a: &ModElement) -> ModElement {
        self.assert_same(a);
        let value = if a.value == 0 { 0 } else { self.n - a.value };
        ModElement { value, modulus: self.n }
    }

    fn exact_divide(&self, a: &ModElement, b: &ModElement) -> Result<Option<ModElement>> {
        self.check(a)?;
        self.check(b)?;
        if a.value == 0 {
            return Err(AlgebraError::ZeroArgument("exact_divide"));
        }
        Ok(self.elements().find(|x| self.mul_raw(a.value, x.value) == b.value))
    }

    /// The representative is the smallest residue among `x * u` for units `u`.
    fn normalize(&self, x: &ModElement) -> (ModElement, ModElement) {
        self.assert_same(x);
        let units = self.units();
        let (u, rep) =
            units.iter().map(|u| (*u, self.mul(x, u))).min_by_key(|(_, rep)| rep.value).expect("1 is a unit");
        let inverse = self.exact_divide(&u, &self.one()).ok().flatten().expect("units are invertible");
        (inverse, rep)
    }

    fn divisor_candidates(&self, _x: &ModElement) -> Option<Vec<ModElement>> {
        Some(self.nonzero().collect())
    }

    fn is_irreducible(&self, x: &ModElement) -> bool {
        self.is_irreducible_mod(x)
    }

    fn is_prime_element(&self, x: &ModElement) -> bool {
        self.is_prime_element_mod(x)
    }
}

/// A set of residues of `Z/nZ` closed under addition and under
/// multiplication by ring elements.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct IdealSet {
    modulus: u64,
    members: BTreeSet<u64>,
}

impl IdealSet {
    /// Validates the closure invariants before accepting `members`.
    pub fn new(modulus: u64, members: impl IntoIterator<Item = u64>) -> Result<Self> {
        let ring = ModularRing::new(modulus)?;
        let members: BTreeSet<u64> = members.into_iter().collect();
        let n = ring.n;
        let closed = members.contains(&0)
            && members.iter().all(|&m| m < n)
            && members.iter().all(|&a| members.iter().all(|&b| members.contains(&((a + b) % n))))
            && members.iter().all(|&a| (0..n).all(|r| members.contains(&ring.mul_raw(a, r))));
        if !closed {
            return Err(AlgebraError::NotAnIdeal(modulus));
        }
        Ok(Self { modulus, members })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn members(&self) -> &BTreeSet<u64> {
        &self.members
    }

    pub fn contains(&self, value: u64) -> bool {
        self.members.contains(&value)
    }

    pub fn is_subset(&self, other: &IdealSet) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn is_proper_subset(&self, other: &IdealSet) -> bool {
        self.is_subset(other) && self.members.len() < other.members.len()
    }
}

impl fmt::Display for IdealSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.members.iter().map(u64::to_string).collect();
        write!(f, "{{{}}}", items.join(","))
    }
}

/// One clause of the divisibility theorem for commutative rings with identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DivisibilityClause {
    /// `a | b` iff `(b)` is contained in `(a)`.
    I,
    /// `a`, `b` associates iff `(a) = (b)`.
    Ii,
    /// `u` is a unit iff `u | r` for every `r`.
    Iii,
    /// `u` is a unit iff `(u)` is the whole ring.
    Iv,
    VReflexive,
    VSymmetric,
    VTransitive,
    /// `a = b*r` with `r` a unit implies `a`, `b` associates.
    Vi,
    /// Associates differ by a unit factor (checked in integral domains only).
    ViConverse,
}

impl DivisibilityClause {
    pub const ALL: [DivisibilityClause; 9] = [
        Self::I,
        Self::Ii,
        Self::Iii,
        Self::Iv,
        Self::VReflexive,
        Self::VSymmetric,
        Self::VTransitive,
        Self::Vi,
        Self::ViConverse,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::I => "i",
            Self::Ii => "ii",
            Self::Iii => "iii",
            Self::Iv => "iv",
            Self::VReflexive => "v_reflexive",
            Self::VSymmetric => "v_symmetric",
            Self::VTransitive => "v_transitive",
            Self::Vi => "vi",
            Self::ViConverse => "vi_converse",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            Self::Iii | Self::Iv | Self::VReflexive => 1,
            Self::VTransitive => 3,
            _ => 2,
        }
    }
}

/// One clause of the prime/irreducible theorem that holds in every
/// commutative ring with identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PrimeClause {
    /// Nonzero `p` is prime iff `(p)` is a nonzero prime ideal.
    I,
    /// Every nonzero divisor of an irreducible is an associate or a unit.
    Vi,
}

impl PrimeClause {
    pub const ALL: [PrimeClause; 2] = [Self::I, Self::Vi];

    pub fn name(self) -> &'static str {
        match self {
            Self::I => "i",
            Self::Vi => "vi",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            Self::I => 1,
            Self::Vi => 2,
        }
    }
}

/// Result of one clause over one modulus.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClauseReport {
    pub modulus: u64,
    pub clause: String,
    pub checked_count: u64,
    pub counterexamples: Vec<Vec<u64>>,
}

impl ClauseReport {
    pub fn holds(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

impl ModularRing {
    /// Whether the tuple `elems` (residues) is in the quantification range of
    /// `clause`. Divisibility and associates only range over nonzero
    /// arguments; the converse of (vi) only over integral domains.
    pub fn divisibility_case_applies(&self, clause: DivisibilityClause, elems: &[u64]) -> bool {
        use DivisibilityClause::*;
        match clause {
            I => elems[0] != 0,
            Iii | Iv => true,
            ViConverse => is_irreducible_z(&BigInt::from(self.n)) && elems.iter().all(|&v| v != 0),
            _ => elems.iter().all(|&v| v != 0),
        }
    }

    /// Evaluates one instance of a divisibility clause; `Ok(true)` means it holds.
    pub fn check_divisibility_clause(&self, clause: DivisibilityClause, elems: &[u64]) -> Result<bool> {
        use DivisibilityClause::*;
        if elems.len() != clause.arity() {
            return Err(AlgebraError::Parse { what: "clause arguments", input: format!("{elems:?}") });
        }
        let e: Vec<ModElement> = elems.iter().map(|&v| self.element(v)).collect::<Result<_>>()?;
        let ideal = |x: &ModElement| self.principal_ideal(x);
        let full = self.whole_ring();
        Ok(match clause {
            I => divides(self, &e[0], &e[1])? == ideal(&e[1]).is_subset(&ideal(&e[0])),
            Ii => associates(self, &e[0], &e[1])? == (ideal(&e[0]) == ideal(&e[1])),
            Iii => {
                let divides_all =
                    e[0].value != 0 && self.elements().all(|r| matches!(divides(self, &e[0], &r), Ok(true)));
                is_unit(self, &e[0]) == divides_all
            }
            Iv => is_unit(self, &e[0]) == (ideal(&e[0]) == full),
            VReflexive => associates(self, &e[0], &e[0])?,
            VSymmetric => associates(self, &e[0], &e[1])? == associates(self, &e[1], &e[0])?,
            VTransitive => {
                !(associates(self, &e[0], &e[1])? && associates(self, &e[1], &e[2])?) || associates(self, &e[0], &e[2])?
            }
            Vi => !self.differ_by_unit(&e[0], &e[1]) || associates(self, &e[0], &e[1])?,
            ViConverse => !associates(self, &e[0], &e[1])? || self.differ_by_unit(&e[0], &e[1]),
        })
    }

    /// Some unit `r` has `a = b*r`.
    fn differ_by_unit(&self, a: &ModElement, b: &ModElement) -> bool {
        self.elements().any(|r| is_unit(self, &r) && self.mul(b, &r) == *a)
    }

    pub fn prime_case_applies(&self, clause: PrimeClause, elems: &[u64]) -> bool {
        match clause {
            PrimeClause::I => elems[0] != 0,
            PrimeClause::Vi => {
                elems.iter().all(|&v| v != 0)
                    && self.is_irreducible_mod(&ModElement { value: elems[0], modulus: self.n })
                    && self.divides_raw(elems[1], elems[0])
            }
        }
    }

    /// Evaluates one instance of a prime clause; for `Vi` the arguments are
    /// `(x, d)` with `x` irreducible and `d` a nonzero divisor of `x`.
    pub fn check_prime_clause(&self, clause: PrimeClause, elems: &[u64]) -> Result<bool> {
        if elems.len() != clause.arity() {
            return Err(AlgebraError::Parse { what: "clause arguments", input: format!("{elems:?}") });
        }
        let e: Vec<ModElement> = elems.iter().map(|&v| self.element(v)).collect::<Result<_>>()?;
        Ok(match clause {
            PrimeClause::I => {
                let ideal = self.principal_ideal(&e[0]);
                let nonzero_prime = self.is_prime_ideal(&ideal)? && ideal.members.len() > 1;
                self.is_prime_element_mod(&e[0]) == nonzero_prime
            }
            PrimeClause::Vi => associates(self, &e[1], &e[0])? || is_unit(self, &e[1]),
        })
    }

    /// Runs every divisibility clause over all tuples of residues.
    pub fn divisibility_suite(&self) -> Vec<ClauseReport> {
        DivisibilityClause::ALL
            .iter()
            .map(|&clause| {
                self.run_clause(clause.name(), clause.arity(), |t| {
                    self.divisibility_case_applies(clause, t)
                        .then(|| self.check_divisibility_clause(clause, t).unwrap_or(false))
                })
            })
            .collect()
    }

    /// Runs every prime clause over all residues.
    pub fn prime_ideal_suite(&self) -> Vec<ClauseReport> {
        PrimeClause::ALL
            .iter()
            .map(|&clause| {
                self.run_clause(clause.name(), clause.arity(), |t| {
                    self.prime_case_applies(clause, t).then(|| self.check_prime_clause(clause, t).unwrap_or(false))
                })
            })
            .collect()
    }

    fn run_clause(&self, name: &str, arity: usize, mut eval: impl FnMut(&[u64]) -> Option<bool>) -> ClauseReport {
        let mut report =
            ClauseReport { modulus: self.n, clause: name.to_string(), checked_count: 0, counterexamples: Vec::new() };
        for tuple in tuples(self.n, arity) {
            if let Some(holds) = eval(&tuple) {
                report.checked_count += 1;
                if !holds && report.counterexamples.len() < MAX_COUNTEREXAMPLES {
                    report.counterexamples.push(tuple);
                }
            }
        }
        report
    }
}

/// All tuples in `[0, n)^arity`, lexicographic.
pub fn tuples(n: u64, arity: usize) -> impl Iterator<Item = Vec<u64>> {
    let total = n.pow(arity as u32);
    (0..total).map(move |mut k| {
        let mut t = vec![0; arity];
        for slot in t.iter_mut().rev() {
            *slot = k % n;
            k /= n;
        }
        t
    })
}

/// `Z/pZ` for prime `p`, a field and hence a Euclidean domain with the
/// constant norm 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    ring: ModularRing,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p < 2 || !is_irreducible_z(&BigInt::from(p)) {
            return Err(AlgebraError::NotPrime(p.to_string()));
        }
        Ok(Self { ring: ModularRing::new(p)? })
    }

    pub fn modulus(&self) -> u64 {
        self.ring.n
    }

    pub fn ring(&self) -> &ModularRing {
        &self.ring
    }

    pub fn element(&self, value: u64) -> Result<ModElement> {
        self.ring.element(value)
    }

    pub fn inverse(&self, a: &ModElement) -> Result<ModElement> {
        self.ring.check(a)?;
        if a.value == 0 {
            return Err(AlgebraError::ZeroArgument("inverse"));
        }
        // Fermat: a^(p-2) = a^-1
        let (mut base, mut exp, mut acc) = (a.value, self.ring.n - 2, 1u64);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.ring.mul_raw(acc, base);
            }
            base = self.ring.mul_raw(base, base);
            exp >>= 1;
        }
        self.ring.element(acc)
    }
}

/// Division in a prime field: `q = a * b^-1`, `r = 0`.
pub fn prime_field_div_rem(p: u64, a: &ModElement, b: &ModElement) -> Result<(ModElement, ModElement)> {
    PrimeField::new(p)?.div_rem(a, b)
}

impl CommutativeRing for PrimeField {
    type Elem = ModElement;

    fn name(&self) -> String {
        format!("F_{}", self.ring.n)
    }

    fn zero(&self) -> ModElement {
        self.ring.zero()
    }

    fn one(&self) -> ModElement {
        self.ring.one()
    }

    fn add(&self, a: &ModElement, b: &ModElement) -> ModElement {
        self.ring.add(a, b)
    }

    fn mul(&self, a: &ModElement, b: &ModElement) -> ModElement {
        self.ring.mul(a, b)
    }

    fn neg(&self, a: &ModElement) -> ModElement {
        self.ring.neg(a)
    }

    fn exact_divide(&self, a: &ModElement, b: &ModElement) -> Result<Option<ModElement>> {
        self.ring.check(b)?;
        let inv = self.inverse(a).map_err(|_| AlgebraError::ZeroArgument("exact_divide"))?;
        Ok(Some(self.ring.mul(b, &inv)))
    }

    fn normalize(&self, x: &ModElement) -> (ModElement, ModElement) {
        if x.value == 0 {
            (self.one(), *x)
        } else {
            (*x, self.one())
        }
    }

    fn divisor_candidates(&self, _x: &ModElement) -> Option<Vec<ModElement>> {
        Some(self.ring.nonzero().collect())
    }

    fn is_irreducible(&self, _x: &ModElement) -> bool {
        false
    }

    fn is_prime_element(&self, _x: &ModElement) -> bool {
        false
    }
}

impl EuclideanDomain for PrimeField {
    fn norm(&self, x: &ModElement) -> Result<BigUint> {
        self.ring.check(x)?;
        if x.value == 0 {
            return Err(AlgebraError::ZeroArgument("norm"));
        }
        Ok(BigUint::one())
    }

    fn div_rem(&self, a: &ModElement, b: &ModElement) -> Result<(ModElement, ModElement)> {
        self.ring.check(a)?;
        let inv = self.inverse(b).map_err(|e| match e {
            AlgebraError::ZeroArgument(_) => AlgebraError::ZeroArgument("prime_field_div_rem"),
            other => other,
        })?;
        Ok((self.ring.mul(a, &inv), self.zero()))
    }
}
