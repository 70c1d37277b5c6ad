//! Exact arithmetic for multicurves on the genus-two non-orientable surface
//! with `n` punctures and one boundary component.
//!
//! Multicurves are described by generalized Dynnikov coordinates
//! `(a; b; t; c)`. This crate converts them to and from triangle
//! coordinates, decomposes them into path components, counts large
//! components over a range of regions, computes intersection numbers with
//! the elementary curves, and checks all of this against an independent
//! strand-tracing model.

pub mod components;
pub mod coords;
pub mod error;
pub mod intersect;
pub mod inversion;
pub mod large;
pub mod oracle;
pub mod render;

pub use components::{profile, reconstruct, ComponentProfile, GluingDescription};
pub use coords::{
    format_coords, parse_coords, parse_coords_any, parse_triangle, validate, DynnikovCoordinates,
    SurfaceSpec, TriangleCoordinates, ValidatedCoordinates,
};
pub use error::{Error, Result};
pub use inversion::{coordinatize, invert};
