//! Strictly chordal recognition and the structural eigenvalue pipeline.
//!
//! A chordal graph is strictly chordal exactly when its minimal vertex
//! separators are pairwise disjoint. For such graphs the separators, the
//! boundary-clique families around them, and the remaining simplicial
//! cliques each contribute guaranteed integer Laplacian eigenvalues; the
//! pipeline combines them with the twin/universal results and removes
//! double counting.

use std::collections::HashMap;

use crate::chordal::{boundary_partner, recognize_chordal, Chordality, CliqueStructure};
use crate::error::Error;
use crate::graph::Graph;
use crate::spectrum::{Provenance, SpectrumEntry, StructuralSpectrum};
use crate::twins::{twin_eigenvalues, twin_partition};

/// The boundary cliques sharing one minimal vertex separator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryFamily {
    /// Index into the structure's separator list.
    pub separator_id: usize,
    /// Sorted separator vertices.
    pub separator: Vec<usize>,
    /// `(clique id, simplicial vertices of that clique)` per boundary clique.
    pub cliques: Vec<(usize, Vec<usize>)>,
    /// Union of the simplicial sets, sorted.
    pub pooled_simplicials: Vec<usize>,
    /// Members of the pool that are false twins of one another: exactly the
    /// vertices whose whole clique is the separator plus themselves, when at
    /// least two such cliques exist.
    pub false_twin_subset: Vec<usize>,
}

impl BoundaryFamily {
    /// Number of boundary cliques in the family.
    pub fn b(&self) -> usize {
        self.cliques.len()
    }

    /// True when the family feeds the boundary eigenvalue rules.
    pub fn is_multi(&self) -> bool {
        self.cliques.len() > 1
    }
}

/// True iff the minimal vertex separators are pairwise disjoint. The
/// structure's per-vertex separator labels are exact in that case.
pub fn recognize_strictly_chordal(_g: &Graph, cs: &CliqueStructure) -> bool {
    cs.separators_disjoint
}

/// For every separator `S` with `|S| >= 2`, the common degree `d` of its
/// vertices gives the eigenvalue `d + 1` with multiplicity `|S| - 1`.
pub fn separator_eigenvalues(g: &Graph, cs: &CliqueStructure) -> Result<StructuralSpectrum, Error> {
    if !g.is_connected() {
        return Err(Error::Disconnected { components: g.component_count() });
    }
    if !cs.separators_disjoint {
        return Err(Error::NotStrictlyChordal);
    }
    let mut entries = Vec::new();
    for sep in &cs.separators {
        if sep.vertices.len() < 2 {
            continue;
        }
        let d = g.neighbors(sep.vertices[0]).len();
        debug_assert!(
            sep.vertices.iter().all(|&v| g.neighbors(v).len() == d),
            "separator vertices of a strictly chordal graph share their degree"
        );
        entries.push(SpectrumEntry::new(
            d + 1,
            sep.vertices.len() - 1,
            Provenance::Separator,
            sep.vertices.clone(),
        ));
    }
    Ok(StructuralSpectrum::from_entries(entries))
}

/// Groups the boundary cliques by the (unique) separator they contain.
/// Every separator gets a family, possibly with no cliques.
pub fn boundary_families(cs: &CliqueStructure) -> Result<Vec<BoundaryFamily>, Error> {
    if !cs.separators_disjoint {
        return Err(Error::NotStrictlyChordal);
    }
    let sep_index: HashMap<&[usize], usize> = cs
        .separators
        .iter()
        .enumerate()
        .map(|(i, s)| (s.vertices.as_slice(), i))
        .collect();

    let mut families: Vec<BoundaryFamily> = cs
        .separators
        .iter()
        .enumerate()
        .map(|(id, s)| BoundaryFamily {
            separator_id: id,
            separator: s.vertices.clone(),
            cliques: Vec::new(),
            pooled_simplicials: Vec::new(),
            false_twin_subset: Vec::new(),
        })
        .collect();

    for q in 0..cs.cliques.len() {
        if boundary_partner(cs, q).is_none() {
            continue;
        }
        let ns = cs.nonsimplicial_of(q);
        let sep_id = *sep_index
            .get(ns.as_slice())
            .expect("a boundary clique's non-simplicial part is a tree-edge separator");
        families[sep_id].cliques.push((q, cs.simplicial_of(q)));
    }

    for fam in &mut families {
        fam.cliques.sort_by_key(|(q, _)| *q);
        for (_, p) in &fam.cliques {
            fam.pooled_simplicials.extend_from_slice(p);
        }
        fam.pooled_simplicials.sort_unstable();
        let singletons: Vec<usize> = fam
            .cliques
            .iter()
            .filter(|(_, p)| p.len() == 1)
            .map(|(_, p)| p[0])
            .collect();
        if singletons.len() >= 2 {
            fam.false_twin_subset = singletons;
            fam.false_twin_subset.sort_unstable();
        }
    }
    Ok(families)
}

/// Eigenvalues from families with more than one boundary clique: `|Q_k|`
/// with multiplicity `|P_k| - 1` per clique, and `|S|` with multiplicity
/// `b - 1` per family. Per family this contributes `|pool| - 1` eigenvalues.
pub fn boundary_eigenvalues(fams: &[BoundaryFamily]) -> StructuralSpectrum {
    let mut entries = Vec::new();
    for fam in fams.iter().filter(|f| f.is_multi()) {
        for (q, p) in &fam.cliques {
            if p.len() >= 2 {
                entries.push(SpectrumEntry::new(
                    fam.separator.len() + p.len(),
                    p.len() - 1,
                    Provenance::BoundaryCliqueSize,
                    p.clone(),
                ));
                debug_assert_eq!(fam.separator.len() + p.len(), clique_len(fam, *q));
            }
        }
        entries.push(SpectrumEntry::new(
            fam.separator.len(),
            fam.b() - 1,
            Provenance::SeparatorCount,
            fam.pooled_simplicials.clone(),
        ));
    }
    StructuralSpectrum::from_entries(entries)
}

fn clique_len(fam: &BoundaryFamily, q: usize) -> usize {
    fam.cliques
        .iter()
        .find(|(id, _)| *id == q)
        .map(|(_, p)| p.len() + fam.separator.len())
        .unwrap_or(0)
}

/// Eigenvalues from simplicial cliques outside every multi-clique family:
/// `|Q|` with multiplicity `|P| - 1` whenever `|P| >= 2`. This covers both
/// single-clique families and cliques in no family at all.
pub fn non_boundary_simplicial_eigenvalues(
    cs: &CliqueStructure,
    fams: &[BoundaryFamily],
) -> StructuralSpectrum {
    let mut covered = vec![false; cs.cliques.len()];
    for fam in fams.iter().filter(|f| f.is_multi()) {
        for (q, _) in &fam.cliques {
            covered[*q] = true;
        }
    }
    let mut entries = Vec::new();
    for (q, clique) in cs.cliques.iter().enumerate() {
        if covered[q] {
            continue;
        }
        let p = cs.simplicial_of(q);
        if p.len() >= 2 {
            entries.push(SpectrumEntry::new(
                clique.len(),
                p.len() - 1,
                Provenance::NonBoundarySimplicial,
                p,
            ));
        }
    }
    StructuralSpectrum::from_entries(entries)
}

/// Count of integer eigenvalues a multi-clique family contributes beyond
/// what the twin rules already provide: the per-clique sizes duplicate the
/// true-twin rule and the singleton pool duplicates the false-twin rule.
pub fn uniquely_provided_count(fam: &BoundaryFamily) -> usize {
    let pool = fam.pooled_simplicials.len();
    let per_clique: usize = fam.cliques.iter().map(|(_, p)| p.len() - 1).sum();
    if fam.false_twin_subset.is_empty() {
        pool - 1 - per_clique
    } else {
        pool - per_clique - fam.false_twin_subset.len()
    }
}

/// Full structural analysis of a connected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PipelineReport {
    pub spectrum: StructuralSpectrum,
    pub chordal: bool,
    pub strictly_chordal: bool,
    /// Present when recognition failed.
    pub witness: Option<Vec<usize>>,
    /// Families on strictly chordal inputs.
    pub families: Vec<BoundaryFamily>,
    /// Sum of `uniquely_provided_count` over multi-clique families.
    pub uniquely_provided: usize,
}

/// Runs the staged analysis: separator labeling, separator eigenvalues,
/// boundary families, boundary and non-boundary clique eigenvalues, plus the
/// twin/universal eigenvalues, deduplicated so no anchor is counted twice.
/// Inputs that are not strictly chordal fall back to the twin results with
/// `partial` set.
pub fn structural_pipeline(g: &Graph) -> Result<PipelineReport, Error> {
    let partition = twin_partition(g);
    let twins = twin_eigenvalues(g, &partition)?;

    let (chordal, strictly, witness, structure) = match recognize_chordal(g)? {
        Chordality::Chordal(cs) => {
            let strictly = recognize_strictly_chordal(g, &cs);
            (true, strictly, None, Some(cs))
        }
        Chordality::NotChordal { witness } => (false, false, Some(witness), None),
    };

    if !strictly {
        let mut spectrum = twins;
        spectrum.partial = true;
        return Ok(PipelineReport {
            spectrum,
            chordal,
            strictly_chordal: false,
            witness,
            families: Vec::new(),
            uniquely_provided: 0,
        });
    }

    let cs = structure.expect("strictly chordal implies a clique structure");
    let separators = separator_eigenvalues(g, &cs)?;
    let families = boundary_families(&cs)?;
    let boundary = boundary_eigenvalues(&families);
    let leftover = non_boundary_simplicial_eigenvalues(&cs, &families);

    let mut entries = Vec::new();
    entries.extend(separators.entries);
    entries.extend(boundary.entries);
    entries.extend(leftover.entries);
    entries.extend(twins.entries);
    let spectrum = dedup_entries(entries);

    let uniquely_provided = families
        .iter()
        .filter(|f| f.is_multi())
        .map(uniquely_provided_count)
        .sum();

    Ok(PipelineReport {
        spectrum,
        chordal: true,
        strictly_chordal: true,
        witness: None,
        families,
        uniquely_provided,
    })
}

/// Collapses entries that certify the same eigenspace:
/// - identical `(lambda, anchor)` pairs merge, keeping the largest
///   multiplicity and the highest-priority provenance;
/// - a false-twin entry whose class sits inside a separator-count pool with
///   the same eigenvalue is absorbed by it (its difference vectors span a
///   subspace of the pool's).
fn dedup_entries(entries: Vec<SpectrumEntry>) -> StructuralSpectrum {
    let mut merged: Vec<SpectrumEntry> = Vec::new();
    let mut by_key: HashMap<(usize, Vec<usize>), usize> = HashMap::new();
    for entry in entries {
        match by_key.entry((entry.lambda, entry.anchor.clone())) {
            std::collections::hash_map::Entry::Vacant(slot) => {
                slot.insert(merged.len());
                merged.push(entry);
            }
            std::collections::hash_map::Entry::Occupied(slot) => {
                let kept = &mut merged[*slot.get()];
                debug_assert!(
                    kept.multiplicity == entry.multiplicity
                        || kept.provenance == Provenance::Universal
                        || entry.provenance == Provenance::Universal,
                    "only the universal rule may disagree on multiplicity for one anchor"
                );
                kept.multiplicity = kept.multiplicity.max(entry.multiplicity);
                if entry.provenance.merge_rank() < kept.provenance.merge_rank() {
                    let old = kept.provenance;
                    kept.provenance = entry.provenance;
                    kept.also.push(old);
                } else {
                    kept.also.push(entry.provenance);
                }
                kept.also.sort();
                kept.also.dedup();
            }
        }
    }

    // Absorb false-twin classes into separator-count pools containing them.
    let mut pool_of_vertex: HashMap<usize, usize> = HashMap::new();
    for (idx, e) in merged.iter().enumerate() {
        if e.provenance == Provenance::SeparatorCount {
            for &v in &e.anchor {
                pool_of_vertex.insert(v, idx);
            }
        }
    }
    let mut absorbed = vec![false; merged.len()];
    let mut absorbed_into: Vec<usize> = Vec::new();
    for (idx, e) in merged.iter().enumerate() {
        if e.provenance != Provenance::FalseTwin {
            continue;
        }
        if let Some(&pool_idx) = pool_of_vertex.get(&e.anchor[0]) {
            let pool = &merged[pool_idx];
            if pool.lambda == e.lambda && e.anchor.iter().all(|v| pool.anchor.binary_search(v).is_ok())
            {
                absorbed[idx] = true;
                absorbed_into.push(pool_idx);
            }
        }
    }
    for idx in absorbed_into {
        if !merged[idx].also.contains(&Provenance::FalseTwin) {
            merged[idx].also.push(Provenance::FalseTwin);
            merged[idx].also.sort();
        }
    }
    let entries: Vec<SpectrumEntry> = merged
        .into_iter()
        .zip(absorbed)
        .filter(|(_, gone)| !gone)
        .map(|(e, _)| e)
        .collect();
    StructuralSpectrum::from_entries(entries)
}
