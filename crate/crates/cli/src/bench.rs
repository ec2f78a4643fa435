//! Doubling-experiment timings for the structural operations, with a fitted
//! growth exponent per operation.

use std::time::Instant;

use spectral_struct::{
    expand_true_twins, gen_block_graph, recognize_chordal, structural_pipeline, twin_partition,
    Graph,
};

#[derive(Debug, Clone)]
pub struct BenchRow {
    pub target: usize,
    pub n: usize,
    pub m: usize,
    /// Seconds, minimum over the repetitions.
    pub twin: f64,
    pub chordal: f64,
    pub pipeline: f64,
}

#[derive(Debug, Clone)]
pub struct BenchOutcome {
    pub rows: Vec<BenchRow>,
    pub twin_exponent: f64,
    pub chordal_exponent: f64,
    pub pipeline_exponent: f64,
}

fn time_min<R>(reps: usize, mut f: impl FnMut() -> R) -> f64 {
    let mut best = f64::INFINITY;
    for _ in 0..reps.max(1) {
        let start = Instant::now();
        std::hint::black_box(f());
        best = best.min(start.elapsed().as_secs_f64());
    }
    best
}

/// Least-squares slope of ln(time) against ln(n).
fn fit_exponent(points: &[(f64, f64)]) -> f64 {
    let k = points.len() as f64;
    let (mut sx, mut sy, mut sxx, mut sxy) = (0.0, 0.0, 0.0, 0.0);
    for &(n, t) in points {
        let (x, y) = (n.ln(), t.max(1e-9).ln());
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    (k * sxy - sx * sy) / (k * sxx - sx * sx)
}

fn strictly_chordal_instance(target: usize, seed: u64) -> Graph {
    // Blocks average three vertices (two fresh), and the twin expansion with
    // up to one copy multiplies the order by about 1.5.
    let blocks = (target / 3).max(1);
    let base = gen_block_graph(seed, blocks, 4);
    expand_true_twins(&base, seed ^ 0x9E3779B97F4A7C15, 1)
}

pub fn run_bench(sizes: &[usize], seed: u64, reps: usize) -> BenchOutcome {
    let mut rows = Vec::new();
    for (i, &target) in sizes.iter().enumerate() {
        let g = strictly_chordal_instance(target, seed.wrapping_add(i as u64));
        let twin = time_min(reps, || twin_partition(&g));
        let chordal = time_min(reps, || recognize_chordal(&g).unwrap());
        let pipeline = time_min(reps, || structural_pipeline(&g).unwrap());
        rows.push(BenchRow { target, n: g.n(), m: g.m(), twin, chordal, pipeline });
    }
    let points = |f: fn(&BenchRow) -> f64| -> Vec<(f64, f64)> {
        rows.iter().map(|r| (r.n as f64, f(r))).collect()
    };
    BenchOutcome {
        twin_exponent: fit_exponent(&points(|r| r.twin)),
        chordal_exponent: fit_exponent(&points(|r| r.chordal)),
        pipeline_exponent: fit_exponent(&points(|r| r.pipeline)),
        rows,
    }
}

impl BenchOutcome {
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str("strictly chordal doubling experiment (seconds, min over reps)\n");
        out.push_str("      n        m   twin_partition   recognize_chordal   structural_pipeline\n");
        for r in &self.rows {
            out.push_str(&format!(
                "{:>7} {:>8}   {:>14.6}   {:>17.6}   {:>19.6}\n",
                r.n, r.m, r.twin, r.chordal, r.pipeline
            ));
        }
        out.push_str(&format!(
            "fitted exponents: twin_partition {:.3}, recognize_chordal {:.3}, structural_pipeline {:.3}\n",
            self.twin_exponent, self.chordal_exponent, self.pipeline_exponent
        ));
        out
    }
}
