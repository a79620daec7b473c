//! Exact arithmetic on the Picard group of the primary Burniat surface.
//!
//! Divisor classes are stored in symmetric coordinates. On top of the group
//! law the crate decides effectiveness, computes e-numbers and reduced
//! forms, and evaluates `h^0, h^1, h^2` of any line bundle.

pub mod cli;
pub mod cohomology;
pub mod delpezzo;
pub mod effectivity;
pub mod error;
pub mod picard;
pub mod selftest;
pub mod tables;
pub mod ulrich;

pub use error::{Error, Result};
pub use picard::{
    canonical_class, generator, parse, Bit2, CurveLabel, DivisorClass, GenCombo, NumClass, Symmetry, Torsion,
};
