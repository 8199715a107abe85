//! Delta-matroids over small ground sets.
//!
//! Families of subsets are stored as bitmask vectors in canonical order.
//! On top of that sit the delta-matroid calculus (twist, dual, loop
//! complementation, minors, direct sums), matroids with their circuits and
//! Eulerian / bipartite classification, GF(2) representations, ribbon
//! graphs, and a harness of exhaustive and randomized property checks.
//!
//! The crate is `no_std` and needs only `alloc`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod delta;
pub mod error;
pub mod gf2;
pub mod iso;
pub mod matroid;
pub mod ribbon;
pub mod subset;
pub mod system;
pub mod verify;

pub use delta::{DeltaMatroid, LoopComplement};
pub use error::Error;
pub use gf2::{BinaryCertificate, Gf2Matrix, Gf2SymmetricMatrix};
pub use matroid::{CircuitFamily, ClassificationReport, Matroid};
pub use ribbon::{BoundaryTrace, RibbonGraph};
pub use subset::{GroundSet, Subset};
pub use system::{MinorStep, Parity, SetSystem};
