//! Exact-arithmetic toolkit for signed-permutation operator families over
//! symbol co-sequences: the self-similar square-root-of-minus-one family,
//! fractional powers on the dyadic exponent lattice, n-lbit constructions,
//! the celestial-sphere parameter chart, and the number-theoretic
//! definability tests that make counterfactual orientations fail exactly.
//!
//! All statistics come in two strictly separated flavors: exact rational
//! counts over full co-sequences, and seeded Monte-Carlo estimates that are
//! reproducible bit for bit (fixed chunking, one RNG stream per chunk).
//!
//! The `parallel` feature (on by default) runs the heavy sweeps and counts
//! on rayon; disabling it yields a dependency-free sequential build with
//! identical results.

pub mod celestial;
pub mod config;
pub mod error;
pub mod exponent;
pub mod family;
pub mod kernels;
pub mod lbit;
pub mod rational;
pub mod signperm;
pub mod stats;
pub mod verify;

pub use config::AmbientConfig;
pub use error::{Error, Result};
pub use exponent::{CircleCoord, Q2Exponent};
pub use family::{PowOp, RootFamily};
pub use signperm::{CoSequence, RowIndexed, Sign, SignAt, SignedPermOp};
