//! Exact computational convex geometry in the nonnegative orthant.
//!
//! The central objects are orthant-convex regions `conv(S) + C` (with `C`
//! the closed nonnegative orthant), their covolumes and mixed covolumes,
//! piecewise-log-linear toric plurisubharmonic functions with their
//! indicator diagrams and Lelong numbers, m-primary monomial ideals with
//! multiplicities, and the multiplier-ideal approximation sequence tying
//! them together. A family of reversed Alexandrov-Fenchel inequality
//! checkers plus a deterministic fuzzer sit on top.
//!
//! All arithmetic is exact arbitrary-precision rational; results are
//! bit-reproducible. The crate is `no_std` (alloc required); IO, file
//! formats and the CLI live in the companion `covgeo` crate.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

mod bitset;
mod dd;

pub mod covolume;
pub mod demailly;
pub mod error;
pub mod geometry;
pub mod ideal;
pub mod inequality;
pub mod linalg;
pub mod rational;
pub mod region;
pub mod toric;

pub use covolume::{covol_k, covolume, mixed_covolume, mixed_covolume_interpolated, MixedCovolReport};
pub use demailly::{
    demailly_lelong, demailly_report, multiplier_ideal, subadditivity_check, DemaillyReport,
};
pub use error::{Error, Result};
pub use geometry::{HalfSpace, Point, PolytopeVolume};
pub use ideal::{hilbert_samuel_oracle, mixed_multiplicity, multiplicity, MonomialIdeal};
pub use inequality::{fuzz, FuzzConfig, FuzzSummary, InequalityName, InequalityVerdict};
pub use rational::Rational;
pub use region::Region;
pub use toric::{kiselman_number, lelong_number, mixed_ma_mass, ToricPsh};
