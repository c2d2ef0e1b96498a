//! Symmetry breaking for small graphs: automorphism groups, exact
//! distinguishing numbers and indices, constructive distinguishing labelings
//! with certificates, and generators for the graph families they apply to.

pub mod constructive;
pub mod distinguish;
pub mod families;
pub mod graph;
pub mod group;
pub mod report;
