//! Exact decision procedures for a-regularity of reductive pairs `(g, h)` of
//! classical Lie algebras.
//!
//! A pair is a-regular when the annihilator `h^⊥` of `h` under the Killing form
//! contains a regular element of `g`. The crate decides this three ways
//! (regular element in `h^⊥`, abelian generic stabilizer, Knop's numerical
//! identity), plus an involution-based route for symmetric pairs, and checks
//! that they agree. All arithmetic is exact over the rationals; genericity is
//! sampled with an explicit Schwartz-Zippel failure bound.

#![no_std]

extern crate alloc;

pub mod catalog;
pub mod criteria;
pub mod decomposition;
mod error;
pub mod lie;
pub mod linalg;
pub mod modp;
pub mod poly;
pub mod sampling;
pub mod slodowy;
pub mod subalgebra;

pub use error::{Error, Result, RouteOutcome};
pub use lie::{build_algebra, Element, Family, LieAlgebra, SimpleFactor};
pub use linalg::{Rational, RationalMatrix, Subspace};
