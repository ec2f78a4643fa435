//! Seeded graph generators and named fixtures for tests and benchmarks.

use std::str::FromStr;

use crate::error::Error;
use crate::graph::Graph;

/// SplitMix64 generator. Fixed here so that generated families are
/// bit-reproducible across implementations and languages:
///
/// ```text
/// state += 0x9E3779B97F4A7C15
/// z = state
/// z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
/// z = (z ^ (z >> 27)) * 0x94D049BB133111EB
/// output = z ^ (z >> 31)
/// ```
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform-ish draw in `0..bound` by modulo (bias is irrelevant at the
    /// bounds used here and keeps the sequence trivially portable).
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0);
        self.next_u64() % bound
    }

    pub fn chance(&mut self, num: u64, den: u64) -> bool {
        self.below(den) < num
    }
}

/// Connected graph whose biconnected components are cliques, grown by
/// attaching `blocks` random-size cliques at random existing vertices.
/// Deterministic per seed.
pub fn gen_block_graph(seed: u64, blocks: usize, max_block_size: usize) -> Graph {
    assert!(blocks >= 1, "need at least one block");
    assert!(max_block_size >= 2, "blocks are cliques of at least two vertices");
    let mut rng = SplitMix64::new(seed);
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let size = |rng: &mut SplitMix64| 2 + rng.below((max_block_size - 1) as u64) as usize;

    let first = size(&mut rng);
    for u in 0..first {
        for v in (u + 1)..first {
            edges.push((u, v));
        }
    }
    let mut n = first;
    for _ in 1..blocks {
        let cut = rng.below(n as u64) as usize;
        let s = size(&mut rng);
        let fresh: Vec<usize> = (n..n + s - 1).collect();
        n += s - 1;
        let mut members = fresh;
        members.push(cut);
        for i in 0..members.len() {
            for j in (i + 1)..members.len() {
                edges.push((members[i], members[j]));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("generator produces a simple graph")
}

/// Replaces each vertex by a clique of `1 + c_v` mutual true twins, with
/// `c_v` drawn in `0..=max_copies`. Equivalent to adding the copies one at a
/// time as true twins, so block-graph inputs yield strictly chordal outputs.
/// Deterministic per seed.
pub fn expand_true_twins(g: &Graph, seed: u64, max_copies: usize) -> Graph {
    let mut rng = SplitMix64::new(seed);
    let n = g.n();
    let mut class_start = vec![0usize; n + 1];
    for v in 0..n {
        let copies = if max_copies == 0 { 0 } else { rng.below(max_copies as u64 + 1) as usize };
        class_start[v + 1] = class_start[v] + 1 + copies;
    }
    let total = class_start[n];
    let mut edges = Vec::new();
    for v in 0..n {
        let (a, b) = (class_start[v], class_start[v + 1]);
        for i in a..b {
            for j in (i + 1)..b {
                edges.push((i, j));
            }
        }
        for &w in g.neighbors(v) {
            if w > v {
                for i in a..b {
                    for j in class_start[w]..class_start[w + 1] {
                        edges.push((i, j));
                    }
                }
            }
        }
    }
    Graph::from_edges(total, &edges).expect("expansion preserves simplicity")
}

/// Named fixture graphs: the worked figures plus classical families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fixture {
    /// 12-vertex graph with false-twin class {g,h,i} and true-twin class {j,k,l}.
    Fig1,
    /// Path b-c-d-e plus a vertex adjacent to all four.
    Gem,
    /// Diamond {n,k,l,j} plus a pendant m attached to the degree-3 vertex l.
    Dart,
    /// 11-vertex strictly chordal graph with separators {b,c}, {d,e}, {g,h,k}.
    Fig3,
    /// 13-vertex strictly chordal graph with cut vertex d carrying four
    /// boundary cliques.
    Fig4,
    Complete(usize),
    Star(usize),
    Path(usize),
    Cycle(usize),
}

impl FromStr for Fixture {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let parse_param = |s: &str, prefix: &str| -> Option<usize> {
            s.strip_prefix(prefix)
                .and_then(|r| r.strip_prefix('('))
                .and_then(|r| r.strip_suffix(')'))
                .and_then(|r| r.parse().ok())
        };
        match s {
            "fig1" => Ok(Fixture::Fig1),
            "gem" => Ok(Fixture::Gem),
            "dart" => Ok(Fixture::Dart),
            "fig3" => Ok(Fixture::Fig3),
            "fig4" => Ok(Fixture::Fig4),
            _ => {
                if let Some(n) = parse_param(s, "k") {
                    Ok(Fixture::Complete(n))
                } else if let Some(n) = parse_param(s, "star") {
                    Ok(Fixture::Star(n))
                } else if let Some(n) = parse_param(s, "path") {
                    Ok(Fixture::Path(n))
                } else if let Some(n) = parse_param(s, "cycle") {
                    Ok(Fixture::Cycle(n))
                } else {
                    Err(Error::UnknownFixture(s.to_string()))
                }
            }
        }
    }
}

/// Builds the named fixture.
pub fn fixture(f: Fixture) -> Graph {
    match f {
        Fixture::Fig1 => labeled_fixture(
            &["a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "k", "l"],
            &[
                ("a", "b"),
                ("c", "d"),
                ("e", "f"),
                ("f", "a"),
                ("g", "d"),
                ("g", "e"),
                ("i", "d"),
                ("i", "e"),
                ("h", "d"),
                ("h", "e"),
                ("j", "b"),
                ("j", "c"),
                ("j", "k"),
                ("j", "l"),
                ("k", "b"),
                ("k", "c"),
                ("k", "l"),
                ("l", "b"),
                ("l", "c"),
            ],
        ),
        Fixture::Gem => labeled_fixture(
            &["a", "b", "c", "d", "e"],
            &[("c", "d"), ("c", "b"), ("c", "a"), ("d", "a"), ("d", "e"), ("b", "a"), ("e", "a")],
        ),
        Fixture::Dart => labeled_fixture(
            &["j", "k", "l", "m", "n"],
            &[("n", "k"), ("n", "l"), ("k", "l"), ("l", "m"), ("k", "j"), ("l", "j")],
        ),
        Fixture::Fig3 => labeled_fixture(
            &["a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "k"],
            &[
                ("a", "b"),
                ("a", "c"),
                ("b", "c"),
                ("b", "e"),
                ("b", "d"),
                ("b", "f"),
                ("c", "d"),
                ("c", "e"),
                ("c", "f"),
                ("d", "e"),
                ("d", "f"),
                ("d", "k"),
                ("d", "g"),
                ("d", "h"),
                ("e", "g"),
                ("e", "f"),
                ("e", "k"),
                ("e", "h"),
                ("k", "g"),
                ("k", "h"),
                ("k", "i"),
                ("g", "i"),
                ("g", "h"),
                ("h", "i"),
                ("j", "d"),
                ("j", "e"),
                ("j", "h"),
                ("j", "g"),
                ("j", "k"),
            ],
        ),
        Fixture::Fig4 => labeled_fixture(
            &["a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "k", "l", "m"],
            &[
                ("a", "b"),
                ("b", "c"),
                ("c", "d"),
                ("d", "e"),
                ("d", "f"),
                ("d", "g"),
                ("d", "h"),
                ("d", "i"),
                ("d", "j"),
                ("d", "k"),
                ("d", "l"),
                ("e", "f"),
                ("g", "h"),
                ("i", "j"),
                ("k", "l"),
                ("l", "m"),
                ("k", "m"),
                ("d", "m"),
            ],
        ),
        Fixture::Complete(n) => {
            let mut edges = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    edges.push((u, v));
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        }
        Fixture::Star(leaves) => {
            let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
            Graph::from_edges(leaves + 1, &edges).unwrap()
        }
        Fixture::Path(n) => {
            let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
            Graph::from_edges(n, &edges).unwrap()
        }
        Fixture::Cycle(n) => {
            assert!(n >= 3, "cycles need at least three vertices");
            let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
            edges.push((n - 1, 0));
            Graph::from_edges(n, &edges).unwrap()
        }
    }
}

fn labeled_fixture(labels: &[&str], edges: &[(&str, &str)]) -> Graph {
    let id = |l: &str| labels.iter().position(|x| *x == l).expect("fixture label");
    let id_edges: Vec<(usize, usize)> = edges.iter().map(|&(a, b)| (id(a), id(b))).collect();
    Graph::with_labels(labels.len(), &id_edges, labels).expect("fixture is simple")
}
