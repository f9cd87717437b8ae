//! Geometric nerves of finite strict 2-categories.
//!
//! Normal lax 2-functors between finite 2-categories correspond exactly to
//! simplicial maps between their geometric nerves, and lax natural
//! transformations to homotopies. This crate makes those correspondences
//! executable on explicit finite inputs and uses them to compute non-abelian
//! 2-cohomology of finite groupoids by brute force.

pub mod error;
pub mod format;
pub mod search;
pub mod cohom;
pub mod laxfun;
pub mod nerve;
pub mod partition;
pub mod simpl;
pub mod twocat;

pub use error::{Error, Result, ValidationErrors, Violation};
