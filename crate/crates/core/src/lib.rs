//! Cellular pseudomanifolds as ranked face lattices.
//!
//! Faces are identified with their vertex shadows. The crate builds and
//! validates lattices, forms duals, products and subdivisions, computes the
//! transposition-symmetry classes, enumerates the excess-1 and reducible
//! excess-2 families, and certifies excess-2 spheres with exact Gale diagrams.

pub mod classification;
pub mod constructions;
pub mod error;
pub mod gale;
pub mod io;
pub mod lattice;
pub mod shadow;
pub mod symmetry;

pub use error::{Error, Result};
pub use io::{IoError, Manifest, ManifestEntry};
pub use lattice::{Check, Face, FaceLattice, Graph, ValidationReport, Violation};
pub use shadow::{Shadow, MAX_VERTICES};
