//! Explicit lower bounds for the volume of orbifold quotients `Γ\G/K` of
//! irreducible symmetric spaces of non-compact type.
//!
//! The pipeline runs from the constants `(C₁, C₂)` of the group to the
//! Wang radius `r`, the sectional curvature bound `k`, the comparison ball
//! volume `V(d, k, r)`, and finally the normalized bound. Each stage is a
//! separate module and can be used on its own.

pub mod bounds;
pub mod catalog;
pub mod cli;
pub mod constants;
pub mod curvature;
pub mod error;
pub mod geometry;
pub mod wang;

pub use bounds::{bound_table, compute_bound, BoundResult, Mode, TableFamily};
pub use catalog::{Catalog, SymmetricSpaceSpec};
pub use error::{Error, Result};
pub use geometry::LogReal;
