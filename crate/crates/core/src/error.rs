use crate::graph::ParseError;

/// Errors shared across analysis operations.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("vertex id {v} out of range for graph of order {n}")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("invalid edge: {0}")]
    InvalidEdge(String),
    #[error("graph is disconnected ({components} components); operation requires a connected graph")]
    Disconnected { components: usize },
    #[error("graph is not chordal")]
    NotChordal,
    #[error("graph is not strictly chordal: minimal vertex separators overlap")]
    NotStrictlyChordal,
    #[error("cluster graph order {actual} does not match cluster size {expected}")]
    ClusterSizeMismatch { expected: usize, actual: usize },
    #[error("clusters overlap; pairwise disjoint clusters required")]
    ClusterOverlap,
    #[error("cluster graph is not regular (degrees {0} and {1} both present)")]
    NonRegularClusterGraph(usize, usize),
    #[error("eigensolver did not converge: off-diagonal norm {residual:e} after {sweeps} sweeps")]
    NonConvergence { residual: f64, sweeps: usize },
    #[error("unknown fixture '{0}'")]
    UnknownFixture(String),
}
