//! Structural analysis of integer Laplacian eigenvalues.
//!
//! Twin classes, universal vertices, minimal vertex separators, and boundary
//! cliques of strictly chordal graphs each pin down integer Laplacian
//! eigenvalues with guaranteed multiplicities. This crate computes those
//! structural certificates in near-linear time and cross-checks every claim
//! against two independent oracles: exact eigenspace dimensions over big
//! integers and a dense numeric eigensolver.

pub mod chordal;
pub mod error;
pub mod generate;
pub mod graph;
pub mod oracle;
pub mod spectrum;
pub mod strictly;
pub mod twins;

pub use chordal::{
    boundary_cliques, minimal_vertex_separators, recognize_chordal, Chordality, CliqueStructure,
    Separator,
};
pub use error::Error;
pub use generate::{expand_true_twins, fixture, gen_block_graph, Fixture, SplitMix64};
pub use graph::{label_cmp, Graph, ParseError};
pub use oracle::{
    exact_integer_report, find_clusters, format_spectrum, integer_multiplicity, laplacian,
    numeric_spectrum, overlay_cluster_graphs, verify_cluster_factorization, Cluster, ClusterCheck,
    ExactReport, LaplacianMatrix,
};
pub use spectrum::{Provenance, SpectrumEntry, StructuralSpectrum};
pub use strictly::{
    boundary_eigenvalues, boundary_families, non_boundary_simplicial_eigenvalues,
    recognize_strictly_chordal, separator_eigenvalues, structural_pipeline,
    uniquely_provided_count, BoundaryFamily, PipelineReport,
};
pub use twins::{twin_eigenvalues, twin_partition, TwinClass, TwinPartition};
