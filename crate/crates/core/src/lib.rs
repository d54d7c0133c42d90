//! Exact-arithmetic toolkit for constructing, verifying, transforming,
//! classifying and searching finite-dimensional weak bialgebras and weak Hopf
//! algebras given by structure constants.

// Index loops below mirror the tensor index notation of the structure
// constants; iterator rewrites obscure which axis is which.
#![allow(clippy::needless_range_loop)]

pub mod axioms;
pub mod catalog;
pub mod constructions;
pub mod docs;
pub mod exactmath;
pub mod fingerprint;
pub mod io;
pub mod search;
pub mod structure;
pub mod transport;
