//! Finite semigroups, semigroup rings, and Schur rings.
//!
//! A finite semigroup is stored as its Cayley table ([`CayleyTable`]). A
//! partition of its elements ([`Partition`]) is a *Schur ring* when the span
//! of its class indicator vectors inside the rational semigroup ring is
//! closed under multiplication; equivalently, every class-by-class product
//! has coefficients constant on every class. This crate provides:
//!
//! * exact semigroup-ring arithmetic on integer coefficient vectors ([`ring`]),
//! * set-partition machinery in restricted-growth-string form ([`partition`]),
//! * Schur ring verification and exhaustive enumeration ([`schur`]),
//! * constructors for the standard small-semigroup families ([`families`]),
//! * decomposability analysis of power ideals ([`structure`]),
//! * generation of all semigroups of order <= 6 up to equivalence ([`census`]),
//! * summary statistics over a census ([`stats`]).
//!
//! Everything is exact integer arithmetic; no floating point enters until
//! the statistics layer.

pub mod cayley;
pub mod census;
pub mod families;
pub mod partition;
pub mod reference;
pub mod ring;
pub mod schur;
pub mod stats;
pub mod structure;
pub mod verify;

pub use cayley::{CayleyTable, ElementRoles, Morphism, MorphismKind, TableError};
pub use partition::Partition;
pub use ring::ElementVector;
pub use schur::{SchurMode, SchurRingSet, Strategy};
