//! Exact lattice-point enumeration for three families of 0/1 polytopes:
//! hypersimplices, half-open hypersimplices, and independence polytopes of
//! uniform matroids.
//!
//! Every polynomial can be obtained two independent ways: through closed
//! forms built from weighted Lah numbers and Eulerian numbers
//! ([`ehrhart`]), and by brute-force integer-point counting followed by
//! exact interpolation ([`lattice`]). The [`geometry`] module checks the
//! edge structure of the independence polytopes at small scale. All
//! arithmetic is exact rational or big-integer; no floating point is used
//! anywhere.

pub mod combinatorics;
pub mod ehrhart;
pub mod error;
pub mod geometry;
pub mod lattice;

pub use combinatorics::MemoTable;
pub use ehrhart::EhrhartPolynomial;
pub use error::DomainError;
