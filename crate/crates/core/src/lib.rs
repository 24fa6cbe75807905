//! Exact analysis of p-ary functions `f: GF(p)^n -> GF(p)` for odd primes `p`.
//!
//! The crate is `no_std` (it needs `alloc`). Everything is exact: transform
//! values and graph eigenvalues live in the ring of cyclotomic integers
//! `Z[ζ_p]`, so bent tests, eigenvalue censuses and dual extraction are
//! plain equality checks.
//!
//! Module map:
//!
//! - [`ff`]: `GF(p)`, `GF(p^m)`, and indexing of the point space `GF(p)^n`.
//! - [`cyclotomic`]: the [`CycInt`] ring element.
//! - [`pfunc`]: value tables, level sets, ANF interpolation and the polynomial parser.
//! - [`spectral`]: Walsh and Fourier transforms, the Walsh and derivative bent tests.
//! - [`cayley`]: component Cayley graphs, strong regularity, Latin square type.
//! - [`scheme`]: translation-invariant association schemes and amorphicity.
//! - [`duality`]: regularity and dual functions.
//! - [`construct`]: orthogonal arrays and the Bush construction.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod cayley;
pub mod construct;
pub mod cyclotomic;
pub mod duality;
mod error;
pub mod ff;
pub mod pfunc;
pub mod scheme;
pub mod spectral;

pub use cayley::{CayleyGraph, EigenReport, Feasibility, LstClassification, SrgParams, SrgVerdict};
pub use construct::{OrthogonalArray, RowPartition};
pub use cyclotomic::CycInt;
pub use duality::{Regularity, RegularityReport};
pub use error::{Error, Result};
pub use ff::{ExtField, PrimeModulus, Space};
pub use pfunc::{Anf, LevelSets, PAryFunction};
pub use scheme::{AmorphicMode, AmorphicVerdict, SchemeConstants};
pub use spectral::{BentVerdict, FourierSpectrum, TransformMethod, WalshSpectrum};
