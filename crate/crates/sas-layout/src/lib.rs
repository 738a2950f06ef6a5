//! Layout synthesis and exact crossing verification for m x n switch-and-select
//! photonic circuits.
//!
//! The crate builds concrete planar and hybrid two-layer layouts of the
//! complete bipartite coupling graph K_{m,n} that underlies a switch-and-select
//! circuit, evaluates the closed-form crossing and overpass counts for the
//! supported coupling topologies, and verifies every closed form against an
//! independent exact-geometry crossing count of the generated drawings.
//!
//! All drawing coordinates are exact rationals; crossing detection is decided
//! by sign-of-determinant predicates, never floating point.

#![forbid(unsafe_code)]

pub mod crossing;
pub mod export;
pub mod facet;
pub mod geom;
pub mod model;
pub mod planarity;
pub mod stats;
pub mod surface;
pub mod verify;

pub use model::{
    make_spec, CircuitSpec, Coupling, Drawing, Edge, EdgeKind, LayoutError, Party, PathTrace,
    Point, Rat, Style, VertexId,
};
