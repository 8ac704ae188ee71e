//! Combinatorial index of seaweed subalgebras of `sl(n)` and the partition
//! statistics it induces.
//!
//! - [`partition`]: partitions, compositions, colored partitions, enumeration
//! - [`meander`]: seaweed types, meanders, and the `2C + P - 1` index
//! - [`winding`]: winding-down moves and the move-based index
//! - [`stats`]: index statistics on partitions, Frobenius counts, periodicity
//! - [`series`]: exact truncated power series for the generating functions

pub mod error;
pub mod meander;
pub mod partition;
pub mod series;
pub mod stats;
pub mod winding;

pub use error::{Error, Result};
pub use meander::{
    build_meander, components, index_dk, index_formula_2parts, index_formula_3parts,
    is_frobenius, ComponentSummary, Meander, SeaweedType, ThreePartShape,
};
pub use partition::{
    conjugate, enumerate_colored_partitions, enumerate_partitions, phi, psi, reverse, Color,
    ColoredPartition, Composition, Partition,
};
pub use winding::{horizontal_flip, index_via_winding, wind_down, wind_step, Move, WindingTrace};
