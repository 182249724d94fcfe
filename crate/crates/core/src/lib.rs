//! Finite quantum structures and their unsharp residuated counterparts.
//!
//! This crate implements table-driven checkers, conversions and exhaustive
//! enumeration for three families of finite partial algebras:
//!
//! * effect algebras `(E, +, ', 0, 1)`,
//! * pseudoeffect algebras `(P, +, ¯, ˜, 0, 1)` (the non-commutative case),
//! * commutative and general unsharp residuated posets, where the arrow
//!   operations are set-valued and joins/meets are replaced by upper and
//!   lower cones.
//!
//! Everything operates on carriers of at most 64 elements so element sets
//! are plain bitmasks. All values are immutable after construction and the
//! checkers are pure functions, so sharing across threads is safe.
//!
//! The crate is `no_std` (with `alloc`); IO, file formats and the CLI live
//! in the companion `unsharp-cli` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod builtin;
pub mod effect;
pub mod enumerate;
pub mod poset;
pub mod pseudo;
pub mod report;
pub mod residuation;
pub mod tables;
pub mod transforms;

pub(crate) mod rng;

pub use poset::{Carrier, Elem, ElementSet, InvolutionMap, OrderRelation};
pub use report::{AxiomTag, CheckError, Failure, Report};
pub use tables::{PartialBinTable, SetValuedBinTable};
