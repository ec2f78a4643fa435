//! Chordality recognition and the clique/separator machinery.
//!
//! A single maximum-cardinality search drives everything: the visit order
//! reversed is a perfect elimination ordering exactly when the graph is
//! chordal, and the maximal cliques together with a clique tree fall out of
//! the same pass. Minimal vertex separators are the deduplicated clique-tree
//! edge intersections.

use std::collections::HashMap;

use crate::error::Error;
use crate::graph::Graph;

/// A deduplicated minimal vertex separator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Separator {
    /// Sorted vertex ids.
    pub vertices: Vec<usize>,
    /// Number of clique-tree edges realizing this separator.
    pub multiplicity: usize,
}

/// Maximal cliques, clique tree, separators, and simplicial labeling of a
/// connected chordal graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueStructure {
    /// Perfect elimination ordering; `peo[0]` is eliminated first.
    pub peo: Vec<usize>,
    /// Maximal cliques as sorted vertex lists. At most `n` of them.
    pub cliques: Vec<Vec<usize>>,
    /// `(clique, parent clique, separator)` edges of the clique tree; the
    /// separator is the intersection of the two endpoint cliques.
    pub tree_edges: Vec<(usize, usize, Vec<usize>)>,
    /// Deduplicated minimal vertex separators with multiplicities, ordered by
    /// first realization in the tree.
    pub separators: Vec<Separator>,
    /// Per vertex: is its neighborhood a clique (equivalently, does it lie in
    /// exactly one maximal clique)?
    pub simplicial: Vec<bool>,
    /// Per vertex: index into `separators` of a separator containing it.
    /// When separators are pairwise disjoint (strictly chordal graphs) this
    /// is the unique such separator; every non-simplicial vertex has one.
    pub vertex_separator_id: Vec<Option<usize>>,
    pub(crate) separators_disjoint: bool,
    tree_adj: Vec<Vec<usize>>,
}

/// Result of chordality recognition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Chordality {
    Chordal(CliqueStructure),
    /// Witness: a chordless cycle of length at least four.
    NotChordal { witness: Vec<usize> },
}

impl Chordality {
    pub fn structure(&self) -> Option<&CliqueStructure> {
        match self {
            Chordality::Chordal(cs) => Some(cs),
            Chordality::NotChordal { .. } => None,
        }
    }
}

/// Runs maximum-cardinality search, verifies the ordering is a perfect
/// elimination ordering, and on success builds the clique tree. On failure
/// returns a chordless cycle of length at least four.
pub fn recognize_chordal(g: &Graph) -> Result<Chordality, Error> {
    if !g.is_connected() {
        return Err(Error::Disconnected { components: g.component_count() });
    }
    let n = g.n();
    if n == 0 {
        return Ok(Chordality::Chordal(CliqueStructure {
            peo: vec![],
            cliques: vec![],
            tree_edges: vec![],
            separators: vec![],
            simplicial: vec![],
            vertex_separator_id: vec![],
            separators_disjoint: true,
            tree_adj: vec![],
        }));
    }

    let (visit, visit_time) = mcs_order(g);
    // Reverse visit order is the candidate perfect elimination ordering.
    let peo: Vec<usize> = visit.iter().rev().copied().collect();
    if let Some((v, u, w)) = peo_violation(g, &peo) {
        let witness = chordless_cycle_witness(g, v, u, w);
        return Ok(Chordality::NotChordal { witness });
    }

    Ok(Chordality::Chordal(build_clique_structure(g, &visit, &visit_time, peo)))
}

/// Maximum-cardinality search from vertex 0. Returns the visit order and each
/// vertex's visit time. Bucket queue with lazy deletion; linear in n + m.
fn mcs_order(g: &Graph) -> (Vec<usize>, Vec<usize>) {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut visited = vec![false; n];
    let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); n];
    buckets[0] = (0..n).rev().collect();
    let mut max_w = 0usize;
    let mut visit = Vec::with_capacity(n);
    let mut visit_time = vec![usize::MAX; n];

    for step in 0..n {
        let v = loop {
            match buckets[max_w].last().copied() {
                Some(v) if !visited[v] && weight[v] == max_w => {
                    buckets[max_w].pop();
                    break v;
                }
                Some(_) => {
                    buckets[max_w].pop();
                }
                None => {
                    debug_assert!(max_w > 0, "connected graph cannot exhaust buckets");
                    max_w -= 1;
                }
            }
        };
        visited[v] = true;
        visit_time[v] = step;
        visit.push(v);
        for &w in g.neighbors(v) {
            if !visited[w] {
                weight[w] += 1;
                buckets[weight[w]].push(w);
                max_w = max_w.max(weight[w]);
            }
        }
    }
    (visit, visit_time)
}

/// Checks the perfect elimination property: for every vertex, its
/// later-ordered neighbors minus the earliest of them must all be adjacent
/// to that earliest one. Returns a violating triple `(v, u, w)` with
/// `u, w` later neighbors of `v` and `u, w` non-adjacent.
fn peo_violation(g: &Graph, peo: &[usize]) -> Option<(usize, usize, usize)> {
    let n = g.n();
    let mut pos = vec![0usize; n];
    for (i, &v) in peo.iter().enumerate() {
        pos[v] = i;
    }
    // Group each vertex by its follower (the later neighbor eliminated
    // first), then verify all its other later neighbors against the
    // follower's neighborhood in one marking pass per follower.
    let mut followed_by: Vec<Vec<usize>> = vec![Vec::new(); n];
    for v in 0..n {
        if let Some(&u) = g.neighbors(v).iter().filter(|&&w| pos[w] > pos[v]).min_by_key(|&&w| pos[w]) {
            followed_by[u].push(v);
        }
    }
    let mut marked = vec![usize::MAX; n];
    for u in 0..n {
        if followed_by[u].is_empty() {
            continue;
        }
        for &w in g.neighbors(u) {
            marked[w] = u;
        }
        for &v in &followed_by[u] {
            for &w in g.neighbors(v) {
                if w != u && pos[w] > pos[v] && marked[w] != u {
                    return Some((v, u, w));
                }
            }
        }
    }
    None
}

/// Recovers a chordless cycle of length >= 4 through a failed elimination
/// triple: `u` and `w` are non-adjacent neighbors of `v`, so a shortest
/// `u`-`w` path avoiding the rest of `N[v]` closes an induced cycle with `v`.
/// Falls back to scanning all such triples; one of them admits a path in any
/// non-chordal graph.
fn chordless_cycle_witness(g: &Graph, v: usize, u: usize, w: usize) -> Vec<usize> {
    if let Some(cycle) = cycle_through(g, v, u, w) {
        return cycle;
    }
    for b in 0..g.n() {
        let nb = g.neighbors(b);
        for (i, &a) in nb.iter().enumerate() {
            for &c in &nb[i + 1..] {
                if !g.has_edge(a, c) {
                    if let Some(cycle) = cycle_through(g, b, a, c) {
                        return cycle;
                    }
                }
            }
        }
    }
    unreachable!("a failed elimination ordering implies some chordless cycle");
}

fn cycle_through(g: &Graph, v: usize, u: usize, w: usize) -> Option<Vec<usize>> {
    let n = g.n();
    // Shortest u-w path in the graph minus N[v] \ {u, w}; shortest paths in
    // an induced subgraph are induced, and the interior avoids N(v), so
    // v + path is a chordless cycle.
    let mut blocked = vec![false; n];
    blocked[v] = true;
    for &x in g.neighbors(v) {
        blocked[x] = true;
    }
    blocked[u] = false;
    blocked[w] = false;

    let mut parent = vec![usize::MAX; n];
    let mut queue = std::collections::VecDeque::new();
    parent[u] = u;
    queue.push_back(u);
    while let Some(x) = queue.pop_front() {
        if x == w {
            let mut path = vec![w];
            let mut cur = w;
            while cur != u {
                cur = parent[cur];
                path.push(cur);
            }
            path.push(v);
            debug_assert!(path.len() >= 4);
            return Some(path);
        }
        for &y in g.neighbors(x) {
            if !blocked[y] && parent[y] == usize::MAX {
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    None
}

fn build_clique_structure(
    g: &Graph,
    visit: &[usize],
    visit_time: &[usize],
    peo: Vec<usize>,
) -> CliqueStructure {
    let n = g.n();
    // Clique extraction along the search: a weight drop (relative to the
    // previous vertex's weight plus one) closes the current clique. Each new
    // clique hangs off the home clique of its most recently visited anchor
    // vertex, which is also the lowest-index clique containing the whole
    // anchor set.
    let mut cliques: Vec<Vec<usize>> = Vec::new();
    let mut tree_edges: Vec<(usize, usize, Vec<usize>)> = Vec::new();
    let mut home = vec![0usize; n];
    let mut current: Vec<usize> = vec![visit[0]];
    let mut prev_mark = 0usize;
    home[visit[0]] = 0;

    for (step, &x) in visit.iter().enumerate().skip(1) {
        let mut anchor: Vec<usize> = g
            .neighbors(x)
            .iter()
            .copied()
            .filter(|&y| visit_time[y] < step)
            .collect();
        let mark = anchor.len();
        if mark <= prev_mark {
            let closed = std::mem::take(&mut current);
            cliques.push(sorted(closed));
            let parent_of_new = cliques.len();
            let last = *anchor.iter().max_by_key(|&&y| visit_time[y]).expect("connected");
            anchor.sort_unstable();
            tree_edges.push((parent_of_new, home[last], anchor.clone()));
            current = anchor;
            current.push(x);
        } else {
            current.push(x);
        }
        home[x] = cliques.len();
        prev_mark = mark;
    }
    cliques.push(sorted(current));

    // Deduplicate separators, tracking multiplicity.
    let mut separators: Vec<Separator> = Vec::new();
    let mut sep_ids: HashMap<Vec<usize>, usize> = HashMap::new();
    for (_, _, sep) in &tree_edges {
        if let Some(&id) = sep_ids.get(sep) {
            separators[id].multiplicity += 1;
        } else {
            sep_ids.insert(sep.clone(), separators.len());
            separators.push(Separator { vertices: sep.clone(), multiplicity: 1 });
        }
    }

    // Simplicial vertices lie in exactly one maximal clique.
    let mut clique_count = vec![0usize; n];
    for clique in &cliques {
        for &v in clique {
            clique_count[v] += 1;
        }
    }
    let simplicial: Vec<bool> = clique_count.iter().map(|&c| c == 1).collect();

    let mut vertex_separator_id = vec![None; n];
    let mut separators_disjoint = true;
    for (id, sep) in separators.iter().enumerate() {
        for &v in &sep.vertices {
            match vertex_separator_id[v] {
                None => vertex_separator_id[v] = Some(id),
                Some(other) if other == id => {}
                Some(_) => separators_disjoint = false,
            }
        }
    }

    let mut tree_adj = vec![Vec::new(); cliques.len()];
    for (idx, &(a, b, _)) in tree_edges.iter().enumerate() {
        tree_adj[a].push(idx);
        tree_adj[b].push(idx);
    }

    CliqueStructure {
        peo,
        cliques,
        tree_edges,
        separators,
        simplicial,
        vertex_separator_id,
        separators_disjoint,
        tree_adj,
    }
}

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v
}

impl CliqueStructure {
    /// Non-simplicial members of a clique, sorted.
    pub fn nonsimplicial_of(&self, clique: usize) -> Vec<usize> {
        self.cliques[clique].iter().copied().filter(|&v| !self.simplicial[v]).collect()
    }

    /// Simplicial members of a clique, sorted.
    pub fn simplicial_of(&self, clique: usize) -> Vec<usize> {
        self.cliques[clique].iter().copied().filter(|&v| self.simplicial[v]).collect()
    }
}

/// Deduplicated minimal vertex separators with multiplicities.
pub fn minimal_vertex_separators(cs: &CliqueStructure) -> &[Separator] {
    &cs.separators
}

/// Ids of the boundary cliques: maximal cliques `Q` with at least one
/// simplicial vertex such that some other maximal clique meets `Q` exactly
/// in its non-simplicial vertices. Only the incident tree-edge separators
/// need checking: if any clique realizes the intersection, the
/// clique-intersection property forces the first tree edge towards it to
/// realize it too, and simplicial vertices of `Q` never cross a tree edge.
pub fn boundary_cliques(cs: &CliqueStructure) -> Vec<usize> {
    let mut out = Vec::new();
    for q in 0..cs.cliques.len() {
        if boundary_partner(cs, q).is_some() {
            out.push(q);
        }
    }
    out
}

/// The witness clique `Q'` for a boundary clique, if any.
pub(crate) fn boundary_partner(cs: &CliqueStructure, q: usize) -> Option<usize> {
    let has_simplicial = cs.cliques[q].iter().any(|&v| cs.simplicial[v]);
    if !has_simplicial {
        return None;
    }
    let ns = cs.nonsimplicial_of(q);
    for &edge in &cs.tree_adj[q] {
        let (a, b, sep) = &cs.tree_edges[edge];
        if *sep == ns {
            return Some(if *a == q { *b } else { *a });
        }
    }
    None
}
