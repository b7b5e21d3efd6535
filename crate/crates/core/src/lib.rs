//! Exact combinatorics and finite-field computations for the enhanced and
//! exotic nilpotent cones of level `r`.
//!
//! The crate is organised bottom-up:
//!
//! - [`partitions`]: partitions, r-partitions, level compositions, dominance,
//!   and every closed-form dimension formula indexed by them.
//! - [`field`]: dense linear algebra over a prime field `F_q`.
//! - [`orbits`]: the inductive classifier that assigns an r-partition to a
//!   point `(x, v_1, ..., v_{r-1})`, plus standard witnesses for each type.
//! - [`reflection`]: dimensions of irreducible representations of
//!   `W(n,r) = S_n ⋉ (Z/rZ)^n` and of the subgroups `W♮_m`, and the
//!   label-level Springer tables.
//! - [`pointcount`]: exhaustive enumeration over `F_q` and exact polynomial
//!   interpolation of the resulting counts.
//!
//! All arithmetic is exact; nothing here uses floating point.

mod bigser;
pub mod error;
pub mod field;
pub mod orbits;
pub mod partitions;
pub mod pointcount;
pub mod reflection;

pub use error::{Error, Result};
