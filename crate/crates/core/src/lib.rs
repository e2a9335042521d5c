//! A small computer-algebra kernel built around Euclidean domains.
//!
//! The generic layer ([`algebra`], [`gcd`]) states the divisibility
//! predicates, the `gcd` relation, factorization checks and the abstract
//! Euclidean gcd algorithm once, against the [`CommutativeRing`] and
//! [`EuclideanDomain`] traits. Concrete instances are the integers
//! ([`integers`]), the Gaussian integers ([`gaussian`]) and the finite
//! rings `Z/nZ` with prime fields ([`modular`]). The [`harness`] module
//! turns the algebraic theorems behind all of this into deterministic,
//! replayable property suites.

pub mod algebra;
pub mod error;
pub mod gaussian;
pub mod gcd;
pub mod harness;
pub mod integers;
pub mod modular;

pub use algebra::{
    associates, divides, factorization_equivalent, is_gcd, is_unit, product_of_sequence, verify_factorization,
    CommutativeRing, EuclideanDomain, Factorization,
};
pub use error::{AlgebraError, Result};
pub use gaussian::{GaussianInt, GaussianIntegers};
pub use gcd::{euclidean_gcd, euclidean_gcd_traced, GcdStep, GcdTrace};
pub use integers::Integers;
pub use modular::{IdealSet, ModElement, ModularRing, PrimeField};
