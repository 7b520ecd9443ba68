//! Closed braids, arc presentations on the cylinder, and the elementary-move
//! calculus with shearing intervals.
//!
//! The crate decides, by monotone memoized search over rectangular diagrams,
//! whether a closed braid is braid isotopic to one that admits a
//! destabilization, a thin exchange move, an elementary flype, or a double
//! destabilization, and emits replayable move certificates.
//!
//! Everything here is `no_std` + `alloc`: the algorithms are pure and fully
//! deterministic. IO, rendering and the CLI live in the `braidforge` crate.

#![no_std]
#![deny(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod braid;
pub mod corpus;
pub mod grid;
pub mod recognize;
pub mod transit;

pub use braid::BraidWord;
pub use grid::{ArcPresentation, ElementaryMove, Marking, ShearingConfig};
pub use recognize::{MoveCertificate, SearchBudget, Verdict};
