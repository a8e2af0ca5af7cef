//! Exact computations with divisorial ideals of normal affine semigroup
//! rings: class groups, minimal generators, conic classes, depth bounds,
//! Cohen–Macaulay tests and the growth of generator counts.

pub mod cli;
pub mod conic;
pub mod depth;
pub mod divisorial;
pub mod error;
pub mod exact;
pub mod hilbert;
pub mod lattice;
pub mod polyhedral;
pub mod problem;
pub mod report;
pub mod semigroup;
pub mod xiconvex;

pub use error::{Error, Result};
