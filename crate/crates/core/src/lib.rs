//! Dimension bookkeeping for Hochschild (co)homology and Hodge numbers of
//! symmetric quotient stacks `[X^n / S_n]` and Hilbert schemes of points.
//!
//! The crate is organised bottom-up:
//!
//! * [`multigraded`]: finitely supported multigraded dimension series and
//!   super-graded symmetric powers.
//! * [`partitions`]: cycle types, centralizers, ages and permutations.
//! * [`geometry`]: twisted Hodge tables of a variety, presets and JSON I/O.
//! * [`engine`]: the orbifold decomposition, generating series and checks.
//! * [`oracle`]: brute-force invariant counting used to cross-check the engine.
//! * [`bwb`]: Borel–Weil–Bott on Grassmannians and the Hilbert square of the plane.
//! * [`quiver`]: Coxeter transformations of triangular Cartan matrices.

pub mod bwb;
pub mod engine;
pub mod error;
pub mod geometry;
pub mod multigraded;
pub mod oracle;
pub mod partitions;
pub mod quiver;

pub use error::{Error, Result};
pub use multigraded::{AxisSystem, GradedDimension, MultiDegree, SuperAxes, TruncationWindow};
