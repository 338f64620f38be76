//! Matchstick graphs: plane drawings whose edges are non-crossing unit segments.
//!
//! The crate validates drawings, walks their faces, builds the extremal
//! constructions (zonotope tilings, the triangle-free family, flattened lattices
//! in a disk), runs the face counting identities and inequalities, reduces a
//! graph to its triangle- and fat-rhombus-free core, and traces the
//! Extend-Path procedure on monotone paths of regular edges.

pub mod analysis;
pub mod error;
pub mod faces;
pub mod generators;
pub mod geometry;
pub mod graph;
pub mod pathfinder;
pub mod reduction;
pub mod render;
pub mod search;

pub use error::{Error, Result};
pub use geometry::{Point, Tolerance};
pub use graph::{Check, DiskSpec, MatchstickGraph, ValidationReport};
