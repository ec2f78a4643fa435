//! Clusters (false-twin set plus common neighborhood), overlay graphs, and
//! verification that predicted overlay eigenvalues appear in the spectrum.

use crate::error::Error;
use crate::graph::Graph;
use crate::twins::twin_partition;

use super::{integer_multiplicity, jacobi::numeric_spectrum_full, laplacian};

/// A `(k, l)`-cluster: a false-twin set `F` of size `k` whose members share
/// the neighborhood `S` of size `l`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cluster {
    /// Sorted members of the false-twin set.
    pub members: Vec<usize>,
    /// Their common open neighborhood, sorted.
    pub neighborhood: Vec<usize>,
}

impl Cluster {
    pub fn k(&self) -> usize {
        self.members.len()
    }

    pub fn l(&self) -> usize {
        self.neighborhood.len()
    }
}

/// Candidate clusters from the false-twin partition, greedily thinned to a
/// pairwise disjoint family (disjoint twin sets and disjoint neighborhoods),
/// preferring larger twin sets, ties by smallest member id.
pub fn find_clusters(g: &Graph) -> Vec<Cluster> {
    let partition = twin_partition(g);
    let mut candidates: Vec<Cluster> = partition
        .false_classes
        .iter()
        .map(|class| Cluster {
            members: class.members.clone(),
            neighborhood: g.neighbors(class.members[0]).to_vec(),
        })
        .collect();
    candidates.sort_by_key(|c| (usize::MAX - c.k(), c.members[0]));

    let mut used_members = vec![false; g.n()];
    let mut used_neighborhood = vec![false; g.n()];
    let mut selected = Vec::new();
    for cand in candidates {
        let clash = cand.members.iter().any(|&v| used_members[v])
            || cand.neighborhood.iter().any(|&v| used_neighborhood[v]);
        if clash {
            continue;
        }
        for &v in &cand.members {
            used_members[v] = true;
        }
        for &v in &cand.neighborhood {
            used_neighborhood[v] = true;
        }
        selected.push(cand);
    }
    selected.sort_by_key(|c| c.members[0]);
    selected
}

fn check_disjoint(assignments: &[(Cluster, Graph)], n: usize) -> Result<(), Error> {
    let mut member_seen = vec![false; n];
    let mut nbhd_seen = vec![false; n];
    for (cluster, _) in assignments {
        for &v in &cluster.members {
            if member_seen[v] {
                return Err(Error::ClusterOverlap);
            }
            member_seen[v] = true;
        }
        for &v in &cluster.neighborhood {
            if nbhd_seen[v] {
                return Err(Error::ClusterOverlap);
            }
            nbhd_seen[v] = true;
        }
    }
    Ok(())
}

/// Overlays each `H_j` onto its cluster's twin set: vertex `i` of `H_j` maps
/// to the `i`-th member of `F_j` in sorted-id order, and the `H_j` edges are
/// added to `g`.
pub fn overlay_cluster_graphs(g: &Graph, assignments: &[(Cluster, Graph)]) -> Result<Graph, Error> {
    check_disjoint(assignments, g.n())?;
    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(g.m());
    for u in 0..g.n() {
        for &v in g.neighbors(u) {
            if v > u {
                edges.push((u, v));
            }
        }
    }
    for (cluster, h) in assignments {
        if h.n() != cluster.k() {
            return Err(Error::ClusterSizeMismatch { expected: cluster.k(), actual: h.n() });
        }
        for i in 0..h.n() {
            for &j in h.neighbors(i) {
                if j > i {
                    edges.push((cluster.members[i], cluster.members[j]));
                }
            }
        }
    }
    let labels: Vec<&str> = g.labels().iter().map(String::as_str).collect();
    Graph::with_labels(g.n(), &edges, &labels)
}

/// One predicted overlay eigenvalue and how it was confirmed.
#[derive(Debug, Clone, PartialEq)]
pub struct ClusterCheckLine {
    pub lambda: f64,
    pub predicted_multiplicity: usize,
    pub observed_multiplicity: usize,
    /// True when the value is integral and the observation is exact.
    pub exact: bool,
    pub ok: bool,
}

/// Outcome of verifying the cluster factorization on an overlay graph.
#[derive(Debug, Clone, PartialEq)]
pub struct ClusterCheck {
    pub lines: Vec<ClusterCheckLine>,
    /// Predicted eigenvalue count; the remaining factor of the characteristic
    /// polynomial has degree `n` minus this.
    pub predicted_total: usize,
    pub ok: bool,
}

const INT_SNAP: f64 = 1e-9;
const MATCH_TOL: f64 = 1e-6;

/// Verifies that for pairwise disjoint clusters with regular graphs `H_j`
/// overlaid, every value `l_j + mu_i(L(H_j))` (over the `k_j - 1` largest
/// `H_j` eigenvalues) appears in the overlay spectrum with at least the
/// predicted aggregate multiplicity. Integral predictions are confirmed by
/// exact rank, the rest against the numeric spectrum.
pub fn verify_cluster_factorization(
    g: &Graph,
    assignments: &[(Cluster, Graph)],
    tol: f64,
) -> Result<ClusterCheck, Error> {
    check_disjoint(assignments, g.n())?;
    for (cluster, h) in assignments {
        if h.n() != cluster.k() {
            return Err(Error::ClusterSizeMismatch { expected: cluster.k(), actual: h.n() });
        }
        let degrees: Vec<usize> = (0..h.n()).map(|v| h.neighbors(v).len()).collect();
        if let (Some(&lo), Some(&hi)) = (degrees.iter().min(), degrees.iter().max()) {
            if lo != hi {
                return Err(Error::NonRegularClusterGraph(lo, hi));
            }
        }
    }

    let overlay = overlay_cluster_graphs(g, assignments)?;
    let overlay_l = laplacian(&overlay);
    let overlay_numeric = numeric_spectrum_full(&overlay_l, tol)?.values;

    // Aggregate predictions, grouping integral values exactly and the rest
    // within the match tolerance.
    let mut predictions: Vec<f64> = Vec::new();
    for (cluster, h) in assignments {
        let k = cluster.k();
        if k < 2 {
            continue;
        }
        let mut h_spec = numeric_spectrum_full(&laplacian(h), tol)?.values;
        // Largest k-1 eigenvalues: everything except the smallest.
        h_spec.remove(0);
        for mu in h_spec {
            predictions.push(cluster.l() as f64 + mu);
        }
    }
    predictions.sort_by(f64::total_cmp);

    let mut lines: Vec<ClusterCheckLine> = Vec::new();
    let mut i = 0;
    while i < predictions.len() {
        let v = predictions[i];
        let mut count = 1;
        while i + count < predictions.len() && predictions[i + count] - v <= MATCH_TOL {
            count += 1;
        }
        let rounded = v.round();
        let (lambda, observed, exact) = if (v - rounded).abs() <= INT_SNAP && rounded >= 0.0 {
            (rounded, integer_multiplicity(&overlay_l, rounded as i64), true)
        } else {
            let observed = overlay_numeric.iter().filter(|&&x| (x - v).abs() <= MATCH_TOL).count();
            (v, observed, false)
        };
        lines.push(ClusterCheckLine {
            lambda,
            predicted_multiplicity: count,
            observed_multiplicity: observed,
            exact,
            ok: observed >= count,
        });
        i += count;
    }

    let predicted_total = lines.iter().map(|l| l.predicted_multiplicity).sum();
    let ok = lines.iter().all(|l| l.ok);
    Ok(ClusterCheck { lines, predicted_total, ok })
}
