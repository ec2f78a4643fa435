//! Brute-force oracles and random instance generators shared by the
//! integration suites. Everything here is deliberately independent of the
//! library's algorithms: separators by subset enumeration, chordality by
//! elimination certificates, subgraph search by permutation.

#![allow(dead_code)]

use std::collections::BTreeSet;

use spectral_struct::{Graph, SplitMix64};

/// O(n*m) elimination-order check: every vertex's later neighbors must form
/// a clique.
pub fn naive_is_peo(g: &Graph, peo: &[usize]) -> bool {
    let n = g.n();
    if peo.len() != n {
        return false;
    }
    let mut pos = vec![0usize; n];
    for (i, &v) in peo.iter().enumerate() {
        pos[v] = i;
    }
    for &v in peo {
        let later: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| pos[w] > pos[v]).collect();
        for (i, &a) in later.iter().enumerate() {
            for &b in &later[i + 1..] {
                if !g.has_edge(a, b) {
                    return false;
                }
            }
        }
    }
    true
}

/// Certificate check for non-chordality: distinct vertices forming an
/// induced cycle of length at least four.
pub fn is_chordless_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let k = cycle.len();
    if k < 4 {
        return false;
    }
    let distinct: BTreeSet<usize> = cycle.iter().copied().collect();
    if distinct.len() != k {
        return false;
    }
    for i in 0..k {
        for j in (i + 1)..k {
            let consecutive = j == i + 1 || (i == 0 && j == k - 1);
            if g.has_edge(cycle[i], cycle[j]) != consecutive {
                return false;
            }
        }
    }
    true
}

fn separates(g: &Graph, blocked: u32, u: usize, v: usize) -> bool {
    let n = g.n();
    let mut seen = vec![false; n];
    let mut stack = vec![u];
    seen[u] = true;
    while let Some(x) = stack.pop() {
        if x == v {
            return false;
        }
        for &y in g.neighbors(x) {
            if blocked & (1 << y) == 0 && !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    true
}

/// All minimal uv-separators over all non-adjacent pairs, by exhaustive
/// subset enumeration. Only sensible for n <= 16 or so.
pub fn brute_minimal_uv_separators(g: &Graph) -> BTreeSet<Vec<usize>> {
    let n = g.n();
    assert!(n <= 16, "exhaustive separator search");
    let mut found = BTreeSet::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if g.has_edge(u, v) {
                continue;
            }
            for mask in 0u32..(1 << n) {
                if mask & (1 << u) != 0 || mask & (1 << v) != 0 {
                    continue;
                }
                if !separates(g, mask, u, v) {
                    continue;
                }
                // Minimal for (u, v): dropping any single vertex reconnects.
                // Separation is monotone in the blocked set, so this suffices.
                let minimal = (0..n)
                    .filter(|&s| mask & (1 << s) != 0)
                    .all(|s| !separates(g, mask & !(1 << s), u, v));
                if minimal {
                    let set: Vec<usize> = (0..n).filter(|&s| mask & (1 << s) != 0).collect();
                    found.insert(set);
                }
            }
        }
    }
    found
}

fn is_global_separator(g: &Graph, mask: u32) -> bool {
    let n = g.n();
    let mut seen: u32 = mask;
    let mut comps = 0;
    for s in 0..n {
        if seen & (1 << s) != 0 {
            continue;
        }
        comps += 1;
        if comps > 1 {
            return true;
        }
        let mut stack = vec![s];
        seen |= 1 << s;
        while let Some(x) = stack.pop() {
            for &y in g.neighbors(x) {
                if seen & (1 << y) == 0 {
                    seen |= 1 << y;
                    stack.push(y);
                }
            }
        }
    }
    false
}

/// All minimal separators (no proper subset separates the graph), by
/// exhaustive enumeration over subsets and their subsets.
pub fn brute_minimal_separators(g: &Graph) -> BTreeSet<Vec<usize>> {
    let n = g.n();
    assert!(n <= 16);
    let mut found = BTreeSet::new();
    for mask in 1u32..(1 << n) {
        if !is_global_separator(g, mask) {
            continue;
        }
        let members: Vec<usize> = (0..n).filter(|&s| mask & (1 << s) != 0).collect();
        // Cheap necessary condition first; removing one vertex from a minimal
        // separator never leaves a separator. The full subset scan below
        // still decides the survivors, since vertex removal is not monotone
        // for whole-graph separation.
        if members.iter().any(|&s| is_global_separator(g, mask & !(1 << s))) {
            continue;
        }
        let k = members.len();
        let mut minimal = true;
        'subsets: for sub in 0u32..(1 << k) {
            if sub == (1 << k) - 1 {
                continue;
            }
            let mut submask = 0u32;
            for (i, &s) in members.iter().enumerate() {
                if sub & (1 << i) != 0 {
                    submask |= 1 << s;
                }
            }
            if is_global_separator(g, submask) {
                minimal = false;
                break 'subsets;
            }
        }
        if minimal {
            found.insert(members);
        }
    }
    found
}

/// Does `g` contain an induced subgraph isomorphic to `pattern`?
/// Permutation search over vertex subsets; for 5-vertex patterns on n <= 12.
pub fn contains_induced(g: &Graph, pattern: &Graph) -> bool {
    let k = pattern.n();
    let n = g.n();
    if n < k {
        return false;
    }
    let mut subset: Vec<usize> = (0..k).collect();
    loop {
        if induced_isomorphic(g, pattern, &subset) {
            return true;
        }
        // Next k-combination of 0..n.
        let mut i = k;
        loop {
            if i == 0 {
                return false;
            }
            i -= 1;
            if subset[i] != i + n - k {
                subset[i] += 1;
                for j in (i + 1)..k {
                    subset[j] = subset[j - 1] + 1;
                }
                break;
            }
        }
    }
}

fn induced_isomorphic(g: &Graph, pattern: &Graph, subset: &[usize]) -> bool {
    let k = subset.len();
    let mut perm: Vec<usize> = (0..k).collect();
    // Heap's algorithm would avoid the recursion; plain recursion is clear
    // enough at k = 5.
    fn rec(g: &Graph, pattern: &Graph, subset: &[usize], perm: &mut Vec<usize>, used: &mut Vec<bool>, depth: usize) -> bool {
        let k = subset.len();
        if depth == k {
            return true;
        }
        for cand in 0..k {
            if used[cand] {
                continue;
            }
            let ok = (0..depth).all(|earlier| {
                pattern.has_edge(depth, earlier) == g.has_edge(subset[cand], subset[perm[earlier]])
            });
            if ok {
                used[cand] = true;
                perm[depth] = cand;
                if rec(g, pattern, subset, perm, used, depth + 1) {
                    return true;
                }
                used[cand] = false;
            }
        }
        false
    }
    let mut used = vec![false; k];
    rec(g, pattern, subset, &mut perm, &mut used, 0)
}

/// Erdos-Renyi graph conditioned on connectivity (retries with fresh draws).
pub fn random_connected_graph(rng: &mut SplitMix64, n: usize, p_num: u64, p_den: u64) -> Graph {
    loop {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.chance(p_num, p_den) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(n, &edges).unwrap();
        if g.is_connected() {
            return g;
        }
    }
}

/// Random connected chordal graph: each new vertex attaches to a randomly
/// grown clique of the existing graph, so the reverse insertion order is an
/// elimination ordering by construction.
pub fn random_connected_chordal(rng: &mut SplitMix64, n: usize) -> Graph {
    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    let mut edges = Vec::new();
    for v in 1..n {
        let mut clique = vec![rng.below(v as u64) as usize];
        loop {
            let common: Vec<usize> = (0..v)
                .filter(|&c| !clique.contains(&c) && clique.iter().all(|&q| adj[q].contains(&c)))
                .collect();
            if common.is_empty() || rng.chance(2, 5) {
                break;
            }
            clique.push(common[rng.below(common.len() as u64) as usize]);
        }
        for &c in &clique {
            adj[v].insert(c);
            adj[c].insert(v);
            edges.push((c, v));
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Random graph with guaranteed twin structure: blow a small random seed
/// graph up by duplicating vertices as false twins (shared neighborhood) or
/// true twins (shared closed neighborhood).
pub fn random_twinned_graph(rng: &mut SplitMix64, base_n: usize, extra: usize) -> Graph {
    let base = random_connected_graph(rng, base_n, 2, 5);
    let mut adj: Vec<BTreeSet<usize>> = (0..base.n())
        .map(|v| base.neighbors(v).iter().copied().collect())
        .collect();
    for _ in 0..extra {
        let v = rng.below(adj.len() as u64) as usize;
        let twin = adj.len();
        let neighbors: Vec<usize> = adj[v].iter().copied().collect();
        adj.push(neighbors.iter().copied().collect());
        for &w in &neighbors {
            adj[w].insert(twin);
        }
        if rng.chance(1, 2) {
            // True twin: also adjacent to the original.
            adj[twin].insert(v);
            adj[v].insert(twin);
        }
    }
    let n = adj.len();
    let mut edges = Vec::new();
    for u in 0..n {
        for &v in adj[u].iter() {
            if v > u {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}
