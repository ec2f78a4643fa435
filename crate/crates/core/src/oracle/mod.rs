//! Ground truth for eigenvalue claims: exact integer multiplicities through
//! fraction-free integer elimination, the full numeric spectrum through a
//! Jacobi eigensolver, and cluster-overlay verification.

mod cluster;
mod exact;
mod jacobi;

pub use cluster::{
    find_clusters, overlay_cluster_graphs, verify_cluster_factorization, Cluster, ClusterCheck,
    ClusterCheckLine,
};
pub use exact::integer_multiplicity;
pub use jacobi::numeric_spectrum;

use crate::graph::Graph;

/// Dense symmetric integer Laplacian `L = D - A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaplacianMatrix {
    n: usize,
    data: Vec<i64>,
}

impl LaplacianMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.n + j]
    }

    pub(crate) fn rows(&self) -> impl Iterator<Item = &[i64]> {
        self.data.chunks(self.n.max(1))
    }
}

/// Laplacian matrix of `g`: degrees on the diagonal, `-1` per edge.
pub fn laplacian(g: &Graph) -> LaplacianMatrix {
    let n = g.n();
    let mut data = vec![0i64; n * n];
    for v in 0..n {
        data[v * n + v] = g.neighbors(v).len() as i64;
        for &w in g.neighbors(v) {
            data[v * n + w] = -1;
        }
    }
    LaplacianMatrix { n, data }
}

/// Exact integer eigenvalue multiplicities, with an optional numeric spectrum.
#[derive(Debug, Clone, PartialEq)]
pub struct ExactReport {
    /// `(lambda, exact multiplicity)` for integer eigenvalues with nonzero
    /// multiplicity, ascending.
    pub candidates: Vec<(i64, usize)>,
    pub numeric_spectrum: Option<NumericSpectrum>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct NumericSpectrum {
    /// Ascending eigenvalues.
    pub values: Vec<f64>,
    /// Final off-diagonal Frobenius norm of the diagonalization.
    pub residual: f64,
}

/// Scans every integer in `0..=n` and records its exact multiplicity.
/// Eigenvalues of a Laplacian lie in `[0, n]`, so the scan is complete.
pub fn exact_integer_report(l: &LaplacianMatrix) -> ExactReport {
    let mut candidates = Vec::new();
    for lambda in 0..=l.n() as i64 {
        let mult = integer_multiplicity(l, lambda);
        if mult > 0 {
            candidates.push((lambda, mult));
        }
    }
    ExactReport { candidates, numeric_spectrum: None }
}

/// Formats a spectrum the way the reports print it: ascending, `;`-separated,
/// integers bare with `^{(k)}` multiplicity superscripts for repeats, other
/// values with five decimals.
pub fn format_spectrum(values: &[f64], int_tol: f64) -> String {
    let mut parts: Vec<String> = Vec::new();
    let mut i = 0;
    while i < values.len() {
        let v = values[i];
        let rounded = v.round();
        if (v - rounded).abs() <= int_tol {
            let mut count = 1;
            while i + count < values.len() && (values[i + count] - rounded).abs() <= int_tol {
                count += 1;
            }
            if count > 1 {
                parts.push(format!("{}^{{({})}}", rounded as i64, count));
            } else {
                parts.push(format!("{}", rounded as i64));
            }
            i += count;
        } else {
            parts.push(format!("{v:.5}"));
            i += 1;
        }
    }
    format!("[{}]", parts.join("; "))
}
