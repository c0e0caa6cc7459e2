//! Graph homomorphism complexes, their restricted small models, interval-poset
//! subdivisions, and exact homology.
//!
//! The main entry points are [`graph::Graph`], [`poset::Poset`],
//! [`complex::SimplicialComplex`], the Hom-complex constructions in
//! [`homcomplex`], and the end-to-end checks in [`verify`].

pub mod bits;
pub mod complex;
pub mod error;
pub mod graph;
pub mod homcomplex;
pub mod homology;
pub mod neighborhoods;
pub mod poset;
pub mod report;
pub mod verify;

pub use complex::{FVector, Neighborhood, SimplicialComplex, SphereVerdict};
pub use error::{Error, Result};
pub use graph::{Graph, GraphKind, VertexSet};
pub use homcomplex::{MultiHom, RestrictionMethod};
pub use homology::{ChainComplex, HomologySummary, IntegralGroup};
pub use poset::{Payload, Poset, PosetMap};
pub use report::{Status, VerificationReport};
pub use verify::{Budget, Scenario};
