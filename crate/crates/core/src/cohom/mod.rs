//! Non-abelian 2-cohomology of finite groupoids.

mod group;
mod h2;

pub use group::{automorphism_two_groupoid, AutTwoGroupoid, FiniteGroup, GroupFamily};
pub use h2::{h2, representation_check, Cocycle, RepresentationReport, H2};
