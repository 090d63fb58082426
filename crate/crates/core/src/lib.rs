//! Exact homotopic distance on finite topological spaces.
//!
//! Finite T0 spaces are modelled as posets ([`FiniteSpace`]); continuous maps
//! are order-preserving assignments ([`ContinuousMap`]) and homotopy is
//! decided combinatorially. On top of that the crate computes the homotopic
//! distance `D(f, g)` by exact minimum cover search, the LS-category and
//! topological complexity derived from it, and the topology `D` induces on a
//! map space. [`circle`] models the degree classes of circle self-maps.

// Symmetric matrices read best with explicit (i, j) indices.
#![allow(clippy::needless_range_loop)]

pub mod circle;
pub mod cli;
pub mod corpus;
pub mod cover;
pub mod distance;
pub mod error;
pub mod extended;
pub mod homotopy;
pub mod io;
pub mod limits;
pub mod maps;
pub mod oracle;
pub mod pointset;
pub mod space;
pub mod topology;

pub use distance::{
    axiom_report, cat, distance_matrix, good_open_family, homotopic_distance, tc, AxiomReport, CatMethod, CatResult,
    CoverCertificate, Distance, DistanceMatrix, GoodOpenFamily,
};
pub use error::{Error, Result};
pub use extended::ExtendedNat;
pub use homotopy::{are_homotopic, homotopy_classes, HomotopyClasses};
pub use limits::Limits;
pub use maps::{continuous_maps, ContinuousMap};
pub use pointset::PointSet;
pub use space::{FiniteSpace, OpenSet, SpaceReport};
pub use topology::{induced_space, Ball, FiniteTopology, PropertyReport, PseudometricSpace, Radius};
