//! Structural spectrum entries: integer Laplacian eigenvalues with the
//! structural rule that produced them and the vertex set justifying them.

use std::collections::BTreeMap;
use std::fmt;

/// The structural rule an eigenvalue entry came from. Closed set; report
/// formatting must not invent categories.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Provenance {
    /// `n` with multiplicity `k` from `k` universal vertices (non-complete graph).
    Universal,
    /// `d` with multiplicity `|F| - 1` from a false-twin class of degree `d`.
    FalseTwin,
    /// `d + 1` with multiplicity `|T| - 1` from a true-twin class of degree `d`.
    TrueTwin,
    /// `d(v) + 1` with multiplicity `|S| - 1` from a minimal vertex separator
    /// `S` of a strictly chordal graph, `v` in `S`.
    Separator,
    /// `|Q|` with multiplicity `|P| - 1` from a boundary clique `Q` with
    /// simplicial set `P` in a family with more than one boundary clique.
    BoundaryCliqueSize,
    /// `|S|` with multiplicity `b - 1` from the `b` boundary cliques sharing
    /// separator `S`.
    SeparatorCount,
    /// `|Q|` with multiplicity `|P| - 1` from a simplicial clique outside
    /// every multi-clique boundary family.
    NonBoundarySimplicial,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::Universal => "universal",
            Provenance::FalseTwin => "false-twin",
            Provenance::TrueTwin => "true-twin",
            Provenance::Separator => "separator",
            Provenance::BoundaryCliqueSize => "boundary-clique-size",
            Provenance::SeparatorCount => "separator-count",
            Provenance::NonBoundarySimplicial => "non-boundary-simplicial",
        }
    }

    /// Rank used when several rules justify the same eigenvalue on the same
    /// anchor: the merged entry keeps the lowest-ranked provenance.
    pub(crate) fn merge_rank(self) -> u8 {
        match self {
            Provenance::Universal => 0,
            Provenance::Separator => 1,
            Provenance::BoundaryCliqueSize => 2,
            Provenance::SeparatorCount => 3,
            Provenance::NonBoundarySimplicial => 4,
            Provenance::TrueTwin => 5,
            Provenance::FalseTwin => 6,
        }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One guaranteed integer Laplacian eigenvalue.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumEntry {
    pub lambda: usize,
    pub multiplicity: usize,
    pub provenance: Provenance,
    /// Sorted vertex ids of the class, separator, or simplicial set that
    /// justifies the entry.
    pub anchor: Vec<usize>,
    /// Other rules that independently justify the same entry.
    pub also: Vec<Provenance>,
}

impl SpectrumEntry {
    pub fn new(lambda: usize, multiplicity: usize, provenance: Provenance, anchor: Vec<usize>) -> Self {
        debug_assert!(anchor.windows(2).all(|w| w[0] < w[1]), "anchor must be sorted");
        SpectrumEntry { lambda, multiplicity, provenance, anchor, also: Vec::new() }
    }
}

/// Multiset of guaranteed integer Laplacian eigenvalues with provenance.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct StructuralSpectrum {
    pub entries: Vec<SpectrumEntry>,
    /// True when structural analysis fell back to twin/universal results only
    /// (connected input that is not strictly chordal).
    pub partial: bool,
}

impl StructuralSpectrum {
    pub fn from_entries(entries: Vec<SpectrumEntry>) -> Self {
        let mut s = StructuralSpectrum { entries, partial: false };
        s.sort();
        s
    }

    pub(crate) fn sort(&mut self) {
        self.entries.sort_by(|a, b| (a.lambda, &a.anchor).cmp(&(b.lambda, &b.anchor)));
    }

    /// Eigenvalue -> total multiplicity, summed over anchors.
    pub fn condensed(&self) -> BTreeMap<usize, usize> {
        let mut map = BTreeMap::new();
        for e in &self.entries {
            *map.entry(e.lambda).or_insert(0) += e.multiplicity;
        }
        map
    }

    /// Total guaranteed multiplicity.
    pub fn total_multiplicity(&self) -> usize {
        self.entries.iter().map(|e| e.multiplicity).sum()
    }

    /// Condensed summary in `lambda^(mult)` notation, descending by eigenvalue.
    pub fn condensed_summary(&self) -> String {
        let parts: Vec<String> = self
            .condensed()
            .iter()
            .rev()
            .map(|(l, m)| format!("{l}^({m})"))
            .collect();
        parts.join(" ")
    }
}
