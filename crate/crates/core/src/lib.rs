//! Fault diagnosis of interconnection networks.
//!
//! Builds balanced hypercubes and small reference graphs, decides whether two
//! candidate fault sets can be told apart under the PMC and MM* models, and
//! computes classical and h-edge tolerable diagnosability exactly on small
//! graphs (with certified bounds on larger ones). A syndrome simulator shows
//! the same quantities operationally.

pub mod bitset;
pub mod engine;
pub mod error;
pub mod graph;
pub mod models;
pub mod subsets;
pub mod syndrome;
pub mod topology;

pub use bitset::VertexSet;
pub use engine::{
    diagnosability, edge_tolerable_diagnosability, is_t_diagnosable, lemma_ll1_witness, pmc_diagnosability_by_core,
    verify_paper_results, DiagnosabilityReport, Strategy,
};
pub use error::{Error, Result};
pub use graph::{Edge, EdgeSet, Graph};
pub use models::{mm_distinguishable, pmc_distinguishable, DiagModel, DistinguishabilityWitness, FaultPair};
pub use topology::{balanced_hypercube, reference_topology, BhCoordinate, TopologyKind};
