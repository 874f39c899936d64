//! Core analysis and design kernels for time-invariant spatially coupled
//! LDPC convolutional codes (SC-LDPC-CCs).
//!
//! A time-invariant SC-LDPC-CC is described by a small `c x a` symbolic
//! parity-check matrix with polynomial entries over GF(2), or equivalently by
//! the transposed syndrome former `H_s^T`, a tall binary matrix whose shifted
//! replicas tile the semi-infinite parity-check matrix. This crate provides:
//!
//! * the matrix representations and conversions between them ([`matrix`]),
//! * cycle and girth analysis based on position differences ([`cycles`]),
//! * closed-form lower bounds on the constraint length ([`bounds`]),
//! * explicit girth-6 constructions ([`construct`]),
//! * equivalence transformations and Min-Max exponent reduction ([`equiv`]),
//! * symmetry-reduced exhaustive and heuristic searches ([`search`]).
//!
//! The crate is `no_std` (with `alloc`); IO, file formats and the Monte Carlo
//! simulator live in the companion `sclcc` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bounds;
pub mod construct;
pub mod cycles;
pub mod equiv;
mod error;
pub mod matrix;
pub mod search;

pub use error::Error;

/// Crate-level result alias.
pub type Result<T> = core::result::Result<T, Error>;
