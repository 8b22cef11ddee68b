//! Exact combinatorics of integral multisegments, standard Kleshchev
//! multipartitions and Drinfeld root data, plus exact-arithmetic checks of
//! the Hecke algebra modules attached to them.
//!
//! All shapes and segments are plain integers. Hecke algebra computations
//! specialize `q` to a rational `q0` with `|q0| ∉ {0, 1}` and work over
//! exact rationals.

pub mod cli;
pub mod correspondences;
pub mod error;
pub mod hecke;
pub mod kleshchev;
pub mod partitions;
pub mod report;
pub mod segments;
pub mod suites;

pub use error::{Error, Result, SkViolation};
