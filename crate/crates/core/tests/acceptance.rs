//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//! Run with `cargo test -p spectral-struct --test acceptance -- --nocapture`
//! to see the lines.

mod common;

use std::time::{Duration, Instant};

use common::*;
use spectral_struct::{
    boundary_eigenvalues, boundary_families, expand_true_twins, fixture, gen_block_graph,
    integer_multiplicity, laplacian, numeric_spectrum, recognize_chordal,
    recognize_strictly_chordal, structural_pipeline, twin_eigenvalues, twin_partition,
    uniquely_provided_count, Chordality, Fixture, Graph, Provenance, SplitMix64,
};

const FIG3_SPECTRUM: [f64; 11] = [
    0.0, 1.18541, 2.61293, 3.72314, 5.64590, 6.0, 6.55734, 7.0, 7.0, 9.0, 9.27527,
];
const FIG4_SPECTRUM: [f64; 13] = [
    0.0, 0.23941, 1.0, 1.0, 1.0, 1.53342, 3.0, 3.0, 3.0, 3.21582, 4.0, 4.0, 11.01135,
];

struct Criterion {
    name: &'static str,
    start: Instant,
}

impl Criterion {
    fn new(name: &'static str) -> Self {
        Criterion { name, start: Instant::now() }
    }

    fn pass(self, budget: Option<Duration>) {
        let elapsed = self.start.elapsed();
        if let Some(budget) = budget {
            if elapsed > budget {
                println!("FAIL {} ({elapsed:.2?} over budget {budget:?})", self.name);
                panic!("{} exceeded its runtime budget: {elapsed:?} > {budget:?}", self.name);
            }
        }
        println!("PASS {} ({elapsed:.2?})", self.name);
    }
}

fn exact(g: &Graph, lambda: usize) -> usize {
    integer_multiplicity(&laplacian(g), lambda as i64)
}

fn assert_spectrum_close(got: &[f64], want: &[f64], tol: f64) {
    assert_eq!(got.len(), want.len(), "spectrum length");
    for (i, (g, w)) in got.iter().zip(want).enumerate() {
        assert!(
            (g - w).abs() <= tol,
            "eigenvalue {i}: got {g}, want {w} (tol {tol})"
        );
    }
}

#[test]
fn criterion_1_fig3_reproduction() {
    let c = Criterion::new("criterion 1: fig3 spectrum and separator eigenvalues");
    let g = fixture(Fixture::Fig3);
    let numeric = numeric_spectrum(&laplacian(&g), 1e-12).unwrap();
    assert_spectrum_close(&numeric, &FIG3_SPECTRUM, 1e-4);

    let report = structural_pipeline(&g).unwrap();
    let mut got: Vec<(usize, usize)> = report
        .spectrum
        .entries
        .iter()
        .inspect(|e| assert_eq!(e.provenance, Provenance::Separator, "{e:?}"))
        .map(|e| (e.lambda, e.multiplicity))
        .collect();
    got.sort();
    assert_eq!(got, vec![(6, 1), (7, 2), (9, 1)]);
    c.pass(Some(Duration::from_secs(1)));
}

#[test]
fn criterion_2_fig4_reproduction() {
    let c = Criterion::new("criterion 2: fig4 spectrum, boundary eigenvalues, unique count");
    let g = fixture(Fixture::Fig4);
    let numeric = numeric_spectrum(&laplacian(&g), 1e-12).unwrap();
    assert_spectrum_close(&numeric, &FIG4_SPECTRUM, 1e-4);

    let cs = recognize_chordal(&g).unwrap().structure().unwrap().clone();
    let fams = boundary_families(&cs).unwrap();
    let spectrum = boundary_eigenvalues(&fams);
    assert_eq!(spectrum.total_multiplicity(), 8, "exactly eight boundary eigenvalues");
    let condensed = spectrum.condensed();
    assert_eq!(condensed.get(&1), Some(&3));
    assert_eq!(condensed.get(&3), Some(&3));
    assert_eq!(condensed.get(&4), Some(&2));
    assert_eq!(condensed.len(), 3);

    let fam = fams.iter().find(|f| f.is_multi()).expect("the family of the cut vertex");
    assert_eq!(uniquely_provided_count(fam), 3);
    c.pass(Some(Duration::from_secs(1)));
}

#[test]
fn criterion_3_fig1_reproduction() {
    let c = Criterion::new("criterion 3: fig1 twin eigenvalues confirmed exactly");
    let g = fixture(Fixture::Fig1);
    let spectrum = twin_eigenvalues(&g, &twin_partition(&g)).unwrap();
    let got: Vec<_> = spectrum
        .entries
        .iter()
        .map(|e| (e.lambda, e.multiplicity, e.provenance))
        .collect();
    assert_eq!(
        got,
        vec![(2, 2, Provenance::FalseTwin), (5, 2, Provenance::TrueTwin)]
    );
    assert!(exact(&g, 2) >= 2);
    assert!(exact(&g, 5) >= 2);
    c.pass(None);
}

#[test]
fn criterion_4_soundness_sweep() {
    let c = Criterion::new("criterion 4: soundness sweep over 300 strictly chordal graphs");
    let mut rng = SplitMix64::new(0x5EED);
    let mut accepted = 0u32;
    let mut seed = 0u64;
    let mut violations = 0u32;
    while accepted < 300 {
        seed += 1;
        let blocks = 2 + (seed % 7) as usize;
        let max_block = 2 + (seed % 5) as usize;
        let copies = (seed % 3) as usize;
        let base = gen_block_graph(seed, blocks, max_block);
        let g = expand_true_twins(&base, rng.next_u64(), copies);
        if g.n() > 60 {
            continue;
        }
        accepted += 1;
        let report = structural_pipeline(&g).unwrap();
        assert!(report.strictly_chordal, "generator output must be strictly chordal");
        for (lambda, mult) in report.spectrum.condensed() {
            if exact(&g, lambda) < mult {
                violations += 1;
                eprintln!("violation: lambda={lambda} mult={mult} on\n{}", g.to_edge_list());
            }
        }
    }
    assert_eq!(violations, 0);
    c.pass(Some(Duration::from_secs(120)));
}

#[test]
fn criterion_5_disjoint_separators_iff_gem_and_dart_free() {
    let c = Criterion::new("criterion 5: disjoint separators <=> gem-free and dart-free");
    let gem = fixture(Fixture::Gem);
    let dart = fixture(Fixture::Dart);
    let mut rng = SplitMix64::new(0xD15C);
    let mut strict_count = 0;
    let mut loose_count = 0;
    for round in 0..500 {
        let n = 4 + round % 6; // 4..=9
        let g = random_connected_chordal(&mut rng, n);
        let cs = match recognize_chordal(&g).unwrap() {
            Chordality::Chordal(cs) => cs,
            Chordality::NotChordal { .. } => panic!("construction is chordal"),
        };
        let disjoint = recognize_strictly_chordal(&g, &cs);
        let free = !contains_induced(&g, &gem) && !contains_induced(&g, &dart);
        assert_eq!(disjoint, free, "equivalence failed on\n{}", g.to_edge_list());
        if disjoint {
            strict_count += 1;
        } else {
            loose_count += 1;
        }
    }
    assert!(strict_count > 20 && loose_count > 20, "sample covers both outcomes");
    c.pass(None);
}

#[test]
fn criterion_6_oracle_agreement() {
    let c = Criterion::new("criterion 6: numeric integer counts equal exact multiplicities");
    let fixtures = vec![
        fixture(Fixture::Fig1),
        fixture(Fixture::Fig3),
        fixture(Fixture::Fig4),
        fixture(Fixture::Gem),
        fixture(Fixture::Dart),
        fixture(Fixture::Complete(5)),
        fixture(Fixture::Star(3)),
        fixture(Fixture::Path(4)),
        fixture(Fixture::Cycle(6)),
    ];
    let mut rng = SplitMix64::new(0x0AC1E);
    let mut graphs = fixtures;
    for round in 0..100 {
        let n = 4 + round % 37; // 4..=40
        graphs.push(random_connected_graph(&mut rng, n, 1, 3));
    }
    for g in &graphs {
        let l = laplacian(g);
        let numeric = numeric_spectrum(&l, 1e-12).unwrap();
        for lambda in 0..=g.n() {
            let count = numeric.iter().filter(|&&v| (v - lambda as f64).abs() <= 1e-6).count();
            let exact_mult = integer_multiplicity(&l, lambda as i64);
            assert_eq!(
                count,
                exact_mult,
                "lambda={lambda} numeric={count} exact={exact_mult} on\n{}",
                g.to_edge_list()
            );
        }
    }
    c.pass(None);
}

#[test]
fn criterion_7_separator_brute_force() {
    let c = Criterion::new("criterion 7: separators equal brute force; S = S-min on strictly chordal");
    let mut rng = SplitMix64::new(0xB10C);
    let mut strictly_seen = 0;
    for round in 0..100u64 {
        let g = if round % 2 == 0 {
            random_connected_chordal(&mut rng, 5 + (round as usize) % 8)
        } else {
            // Small strictly chordal instances keep the Property-1 half of
            // the criterion populated.
            let base = gen_block_graph(round, 2 + (round as usize) % 2, 3);
            let g = expand_true_twins(&base, rng.next_u64(), 1);
            if g.n() > 12 {
                continue;
            }
            g
        };
        assert!(g.n() <= 12);
        let cs = recognize_chordal(&g).unwrap().structure().unwrap().clone();
        let got: std::collections::BTreeSet<Vec<usize>> =
            cs.separators.iter().map(|s| s.vertices.clone()).collect();
        let want = brute_minimal_uv_separators(&g);
        assert_eq!(got, want, "separator mismatch on\n{}", g.to_edge_list());

        if recognize_strictly_chordal(&g, &cs) {
            strictly_seen += 1;
            let minimal = brute_minimal_separators(&g);
            assert_eq!(got, minimal, "S != S-minimal on\n{}", g.to_edge_list());
        }
    }
    assert!(strictly_seen >= 20, "strictly chordal subset must be populated");
    c.pass(None);
}
