//! Interval calculus for representations of the equioriented type-A quiver.

mod homology;
mod interval;
mod reduce;
mod representation;
mod resolution;

pub use homology::{euler_form, ext_dim, ext_dim_rep, hom_dim, hom_dim_rep, hom_into};
pub use interval::{all_intervals, interval_leq, Interval};
pub use reduce::{decompose_simple, Factor};
pub use representation::{dimension_vector, DimVector, Instance, Representation};
pub use resolution::{is_catenoid, is_simple, minimal_resolution, nonempty, Catenoid, Resolution};
