//! Analysis report: a schema-stable view of the structural results, rendered
//! as text or JSON. All vertex references use display labels.

use serde::{Deserialize, Serialize};
use spectral_struct::{
    boundary_cliques, label_cmp, recognize_chordal, recognize_strictly_chordal,
    structural_pipeline, twin_partition, uniquely_provided_count, Chordality, Error, Graph,
};
use std::fmt::Write as _;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TwinClassReport {
    pub members: Vec<String>,
    pub degree: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SeparatorReport {
    pub vertices: Vec<String>,
    pub multiplicity: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FamilyCliqueReport {
    pub clique: Vec<String>,
    pub simplicial: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FamilyReport {
    pub separator: Vec<String>,
    pub cliques: Vec<FamilyCliqueReport>,
    pub pooled_simplicials: Vec<String>,
    pub false_twin_subset: Vec<String>,
    /// Present for families with more than one boundary clique.
    pub uniquely_provided: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EntryReport {
    pub lambda: usize,
    pub multiplicity: usize,
    pub provenance: String,
    pub anchor: Vec<String>,
    pub also: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub n: usize,
    pub m: usize,
    pub connected: bool,
    pub chordal: bool,
    pub strictly_chordal: bool,
    /// True when only the twin/universal eigenvalues could be derived.
    pub partial: bool,
    pub witness_cycle: Option<Vec<String>>,
    pub universal: Vec<String>,
    pub false_classes: Vec<TwinClassReport>,
    pub true_classes: Vec<TwinClassReport>,
    pub cliques: Vec<Vec<String>>,
    pub separators: Vec<SeparatorReport>,
    pub boundary_cliques: Vec<Vec<String>>,
    pub families: Vec<FamilyReport>,
    pub entries: Vec<EntryReport>,
    pub condensed: String,
    pub uniquely_provided_total: usize,
}

fn names(g: &Graph, vs: &[usize]) -> Vec<String> {
    let mut out: Vec<String> = vs.iter().map(|&v| g.label(v).to_string()).collect();
    out.sort_by(|a, b| label_cmp(a, b));
    out
}

fn name_sets(g: &Graph, sets: &[Vec<usize>]) -> Vec<Vec<String>> {
    let mut out: Vec<Vec<String>> = sets.iter().map(|s| names(g, s)).collect();
    out.sort_by(|a, b| {
        let key = |x: &[String]| x.first().cloned().unwrap_or_default();
        label_cmp(&key(a), &key(b)).then(a.len().cmp(&b.len()))
    });
    out
}

/// Runs the full analysis and assembles the report. Fails on disconnected
/// input, whose eigenvalue results would be vacuous.
pub fn analyze(g: &Graph) -> Result<AnalysisReport, Error> {
    if !g.is_connected() {
        return Err(Error::Disconnected { components: g.component_count() });
    }
    let partition = twin_partition(g);
    let pipeline = structural_pipeline(g)?;

    let (cliques, separators, boundary, strictly) = match recognize_chordal(g)? {
        Chordality::Chordal(cs) => {
            let strictly = recognize_strictly_chordal(g, &cs);
            let cliques = name_sets(g, &cs.cliques);
            let separators = cs
                .separators
                .iter()
                .map(|s| SeparatorReport {
                    vertices: names(g, &s.vertices),
                    multiplicity: s.multiplicity,
                })
                .collect();
            let boundary_sets: Vec<Vec<usize>> =
                boundary_cliques(&cs).into_iter().map(|q| cs.cliques[q].clone()).collect();
            (cliques, separators, name_sets(g, &boundary_sets), strictly)
        }
        Chordality::NotChordal { .. } => (Vec::new(), Vec::new(), Vec::new(), false),
    };
    debug_assert_eq!(strictly, pipeline.strictly_chordal);

    let families = pipeline
        .families
        .iter()
        .map(|f| FamilyReport {
            separator: names(g, &f.separator),
            cliques: f
                .cliques
                .iter()
                .map(|(q, p)| FamilyCliqueReport {
                    clique: {
                        let mut c = names(g, p);
                        let mut s = names(g, &f.separator);
                        s.append(&mut c);
                        s.sort_by(|a, b| label_cmp(a, b));
                        s
                    },
                    simplicial: names(g, p),
                })
                .map(|mut fc| {
                    fc.clique.dedup();
                    fc
                })
                .collect(),
            pooled_simplicials: names(g, &f.pooled_simplicials),
            false_twin_subset: names(g, &f.false_twin_subset),
            uniquely_provided: if f.is_multi() { Some(uniquely_provided_count(f)) } else { None },
        })
        .collect();

    let entries = pipeline
        .spectrum
        .entries
        .iter()
        .map(|e| EntryReport {
            lambda: e.lambda,
            multiplicity: e.multiplicity,
            provenance: e.provenance.as_str().to_string(),
            anchor: names(g, &e.anchor),
            also: e.also.iter().map(|p| p.as_str().to_string()).collect(),
        })
        .collect();

    Ok(AnalysisReport {
        n: g.n(),
        m: g.m(),
        connected: true,
        chordal: pipeline.chordal,
        strictly_chordal: pipeline.strictly_chordal,
        partial: pipeline.spectrum.partial,
        witness_cycle: pipeline.witness.map(|w| w.iter().map(|&v| g.label(v).to_string()).collect()),
        universal: names(g, &partition.universal),
        false_classes: partition
            .false_classes
            .iter()
            .map(|c| TwinClassReport { members: names(g, &c.members), degree: c.degree })
            .collect(),
        true_classes: partition
            .true_classes
            .iter()
            .map(|c| TwinClassReport { members: names(g, &c.members), degree: c.degree })
            .collect(),
        cliques,
        separators,
        boundary_cliques: boundary,
        families,
        entries,
        condensed: pipeline.spectrum.condensed_summary(),
        uniquely_provided_total: pipeline.uniquely_provided,
    })
}

fn set(labels: &[String]) -> String {
    format!("{{{}}}", labels.join(","))
}

fn set_list(sets: &[Vec<String>]) -> String {
    if sets.is_empty() {
        "(none)".to_string()
    } else {
        sets.iter().map(|s| set(s)).collect::<Vec<_>>().join(" ")
    }
}

impl AnalysisReport {
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "graph: n={} m={} connected={}", self.n, self.m, self.connected);
        let _ = writeln!(out, "chordal: {}", self.chordal);
        if let Some(w) = &self.witness_cycle {
            let _ = writeln!(out, "witness chordless cycle: {}", w.join(" "));
        }
        let _ = writeln!(out, "strictly chordal: {}", self.strictly_chordal);
        if self.partial {
            let _ = writeln!(out, "partial: true (twin and universal eigenvalues only)");
        }
        let _ = writeln!(
            out,
            "universal vertices: {}",
            if self.universal.is_empty() { "(none)".into() } else { set(&self.universal) }
        );
        let class_line = |classes: &[TwinClassReport]| -> String {
            if classes.is_empty() {
                "(none)".to_string()
            } else {
                classes
                    .iter()
                    .map(|c| format!("{} (degree {})", set(&c.members), c.degree))
                    .collect::<Vec<_>>()
                    .join("; ")
            }
        };
        let _ = writeln!(out, "false twin classes: {}", class_line(&self.false_classes));
        let _ = writeln!(out, "true twin classes: {}", class_line(&self.true_classes));
        if self.chordal {
            let _ = writeln!(out, "maximal cliques ({}): {}", self.cliques.len(), set_list(&self.cliques));
            let seps = if self.separators.is_empty() {
                "(none)".to_string()
            } else {
                self.separators
                    .iter()
                    .map(|s| format!("{} x{}", set(&s.vertices), s.multiplicity))
                    .collect::<Vec<_>>()
                    .join("; ")
            };
            let _ = writeln!(out, "minimal vertex separators ({}): {}", self.separators.len(), seps);
            let _ = writeln!(
                out,
                "boundary cliques ({}): {}",
                self.boundary_cliques.len(),
                set_list(&self.boundary_cliques)
            );
        }
        if !self.families.is_empty() {
            let _ = writeln!(out, "boundary families:");
            for f in &self.families {
                let psets: Vec<String> = f.cliques.iter().map(|c| set(&c.simplicial)).collect();
                let mut line = format!(
                    "  separator {}: {} boundary clique(s)",
                    set(&f.separator),
                    f.cliques.len()
                );
                if !psets.is_empty() {
                    let _ = write!(line, "; simplicial sets {}", psets.join(" "));
                }
                if !f.false_twin_subset.is_empty() {
                    let _ = write!(line, "; false twins {}", set(&f.false_twin_subset));
                }
                if let Some(u) = f.uniquely_provided {
                    let _ = write!(line, "; uniquely provided {u}");
                }
                let _ = writeln!(out, "{line}");
            }
        }
        let _ = writeln!(out, "structural eigenvalues:");
        if self.entries.is_empty() {
            let _ = writeln!(out, "  (none)");
        }
        for e in &self.entries {
            let mut line = format!(
                "  lambda={} multiplicity={} provenance={} anchor={}",
                e.lambda,
                e.multiplicity,
                e.provenance,
                set(&e.anchor)
            );
            if !e.also.is_empty() {
                let _ = write!(line, " (also {})", e.also.join(", "));
            }
            let _ = writeln!(out, "{line}");
        }
        let _ = writeln!(out, "condensed: {}", if self.condensed.is_empty() { "(none)" } else { &self.condensed });
        let _ = writeln!(out, "uniquely provided (total): {}", self.uniquely_provided_total);
        out
    }
}
