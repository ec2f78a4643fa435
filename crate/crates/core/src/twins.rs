//! Universal vertices and maximal false/true twin classes, and the integer
//! Laplacian eigenvalues they guarantee.

use crate::error::Error;
use crate::graph::Graph;
use crate::spectrum::{Provenance, SpectrumEntry, StructuralSpectrum};

/// A maximal class of mutually (false or true) twin vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwinClass {
    /// Sorted vertex ids, at least two.
    pub members: Vec<usize>,
    /// Common degree of the members.
    pub degree: usize,
}

/// Partition of the vertex set into maximal twin classes plus the universal set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwinPartition {
    /// Classes with identical open neighborhoods (members pairwise non-adjacent).
    pub false_classes: Vec<TwinClass>,
    /// Classes with identical closed neighborhoods (members pairwise adjacent).
    pub true_classes: Vec<TwinClass>,
    /// Vertices of degree `n - 1`, sorted.
    pub universal: Vec<usize>,
}

/// Groups `0..keys.len()` by equal key sequences using bucket refinement:
/// an initial pass buckets by key length, then one pass per position splits
/// each group by the symbol at that position. Total work is proportional to
/// the combined key mass, so the partition costs O(n + m) on neighborhood
/// lists. Only groups of size >= 2 are returned, members sorted, groups
/// ordered by smallest member.
fn equal_key_classes(keys: &[&[usize]], alphabet: usize) -> Vec<Vec<usize>> {
    let n = keys.len();
    let mut order: Vec<u32> = (0..n as u32).collect();
    order.sort_unstable_by_key(|&v| keys[v as usize].len());

    // (start, end, depth): order[start..end] agree on the first `depth` symbols
    // and share a length.
    let mut stack: Vec<(usize, usize, usize)> = Vec::new();
    let mut run = 0;
    while run < n {
        let len = keys[order[run] as usize].len();
        let mut end = run + 1;
        while end < n && keys[order[end] as usize].len() == len {
            end += 1;
        }
        stack.push((run, end, 0));
        run = end;
    }

    let mut classes: Vec<Vec<usize>> = Vec::new();
    // slot_of[symbol] gives the bucket slot claimed by `symbol` in the current
    // split; `epoch` invalidates stale slots without clearing the array.
    let mut slot_of = vec![0usize; alphabet.max(1)];
    let mut slot_epoch = vec![0u64; alphabet.max(1)];
    let mut epoch = 0u64;
    let mut buckets: Vec<Vec<u32>> = Vec::new();

    while let Some((start, end, depth)) = stack.pop() {
        if end - start < 2 {
            continue;
        }
        let len = keys[order[start] as usize].len();
        if depth == len {
            let mut members: Vec<usize> = order[start..end].iter().map(|&v| v as usize).collect();
            members.sort_unstable();
            classes.push(members);
            continue;
        }
        epoch += 1;
        let mut used = 0usize;
        for idx in start..end {
            let v = order[idx];
            let sym = keys[v as usize][depth];
            let slot = if slot_epoch[sym] == epoch {
                slot_of[sym]
            } else {
                slot_epoch[sym] = epoch;
                slot_of[sym] = used;
                if buckets.len() == used {
                    buckets.push(Vec::new());
                }
                used += 1;
                used - 1
            };
            buckets[slot].push(v);
        }
        let mut write = start;
        for slot in 0..used {
            let begin = write;
            for &v in &buckets[slot] {
                order[write] = v;
                write += 1;
            }
            buckets[slot].clear();
            stack.push((begin, write, depth + 1));
        }
    }

    classes.sort_by_key(|c| c[0]);
    classes
}

/// Computes maximal false/true twin classes and the universal vertex set.
/// Deterministic for a given graph.
pub fn twin_partition(g: &Graph) -> TwinPartition {
    let n = g.n();
    let open: Vec<&[usize]> = (0..n).map(|v| g.neighbors(v)).collect();
    let closed_owned: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            let adj = g.neighbors(v);
            let pos = adj.partition_point(|&w| w < v);
            let mut k = Vec::with_capacity(adj.len() + 1);
            k.extend_from_slice(&adj[..pos]);
            k.push(v);
            k.extend_from_slice(&adj[pos..]);
            k
        })
        .collect();
    let closed: Vec<&[usize]> = closed_owned.iter().map(|k| k.as_slice()).collect();

    let to_classes = |groups: Vec<Vec<usize>>| -> Vec<TwinClass> {
        groups
            .into_iter()
            .map(|members| {
                let degree = g.neighbors(members[0]).len();
                debug_assert!(members.iter().all(|&v| g.neighbors(v).len() == degree));
                TwinClass { members, degree }
            })
            .collect()
    };

    let false_classes = to_classes(equal_key_classes(&open, n));
    let true_classes = to_classes(equal_key_classes(&closed, n));
    // A set of two or more vertices cannot have both identical open and
    // identical closed neighborhoods: false twins are non-adjacent, true
    // twins adjacent.
    debug_assert!(false_classes.iter().all(|f| {
        true_classes.iter().all(|t| f.members != t.members)
    }));

    let universal: Vec<usize> = (0..n).filter(|&v| g.neighbors(v).len() + 1 == n).collect();
    TwinPartition { false_classes, true_classes, universal }
}

/// Eigenvalues guaranteed by the twin structure of a connected graph:
/// `d` per false class, `d + 1` per true class, and `n` for the universal
/// set of a non-complete graph.
pub fn twin_eigenvalues(g: &Graph, p: &TwinPartition) -> Result<StructuralSpectrum, Error> {
    if !g.is_connected() {
        return Err(Error::Disconnected { components: g.component_count() });
    }
    let mut entries = Vec::new();
    for class in &p.false_classes {
        entries.push(SpectrumEntry::new(
            class.degree,
            class.members.len() - 1,
            Provenance::FalseTwin,
            class.members.clone(),
        ));
    }
    for class in &p.true_classes {
        entries.push(SpectrumEntry::new(
            class.degree + 1,
            class.members.len() - 1,
            Provenance::TrueTwin,
            class.members.clone(),
        ));
    }
    if !p.universal.is_empty() && !g.is_complete() {
        entries.push(SpectrumEntry::new(
            g.n(),
            p.universal.len(),
            Provenance::Universal,
            p.universal.clone(),
        ));
    }
    Ok(StructuralSpectrum::from_entries(entries))
}
