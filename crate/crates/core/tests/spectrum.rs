mod common;

use std::collections::BTreeSet;

use pancyclic::random::{plant_hamilton, GnpParams, RngSeed};
use pancyclic::{
    apply_adversary, find_all_cycles, verify_certificate, AdversaryKind, AdversarySpec,
    CycleLabeling, Graph, MissingReason, SpectrumRequest,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{cycle_lengths, lengths_with_chords};

fn default_request() -> SpectrumRequest {
    SpectrumRequest::new(0.1).unwrap()
}

/// `C_n` plus `extra` uniformly chosen chords, under a random labeling.
fn hamiltonian_with_edges(n: usize, edges: usize, rng: &mut ChaCha8Rng) -> (Graph, CycleLabeling) {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut g = Graph::empty(n).unwrap();
    for k in 0..n {
        g.add_edge(order[k], order[(k + 1) % n]);
    }
    let mut rest: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .filter(|&(a, b)| !g.has_edge(a, b))
        .collect();
    rest.shuffle(rng);
    for (a, b) in rest.into_iter().take(edges.saturating_sub(n)) {
        g.add_edge(a, b);
    }
    (g, CycleLabeling::from_cycle_order(&order).unwrap())
}

#[test]
fn small_planted_graphs_match_four_chord_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for trial in 0..80 {
        let n = rng.gen_range(5..=12);
        let p = rng.gen_range(0.0..0.8);
        let (g, lab) = plant_hamilton(&GnpParams::new(n, p).unwrap(), RngSeed::new(trial, 0));
        let spectrum = find_all_cycles(&g, &lab, &default_request()).unwrap();
        let found: BTreeSet<usize> = spectrum.found.keys().copied().collect();
        let oracle = lengths_with_chords(&g, &lab, 4);
        assert!(
            oracle.is_subset(&found),
            "n={n} p={p}: oracle {oracle:?} found {found:?}"
        );
        // nothing is certified that does not exist
        assert!(found.is_subset(&cycle_lengths(&g)));
        for c in spectrum.found.values() {
            assert!(verify_certificate(&g, &lab, c));
        }
    }
}

#[test]
fn dense_hamiltonian_graphs_on_ten_vertices_are_pancyclic() {
    // more than half of the C(10, 2) = 45 pairs
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut checked = 0;
    for _ in 0..200 {
        let edges = rng.gen_range(23..=45);
        let (g, lab) = hamiltonian_with_edges(10, edges, &mut rng);
        let truth = cycle_lengths(&g);
        let spectrum = find_all_cycles(&g, &lab, &default_request()).unwrap();
        let found: BTreeSet<usize> = spectrum.found.keys().copied().collect();
        assert_eq!(found, truth);
        if edges >= 25 && g.bipartition().is_none() {
            assert_eq!(found.len(), 8, "edges = {edges}");
            checked += 1;
        }
    }
    assert!(checked > 100);
}

#[test]
fn half_dense_bipartite_graph_is_not_pancyclic() {
    // K_{5,5} minus two edges: Hamiltonian with 23 > 45/2 edges, but no odd cycle
    let mut g = Graph::empty(10).unwrap();
    for a in (0..10).step_by(2) {
        for b in (1..10).step_by(2) {
            g.add_edge(a, b);
        }
    }
    g.remove_edge(0, 5);
    g.remove_edge(2, 7);
    assert_eq!(g.edge_count(), 23);
    let lab = CycleLabeling::identity(10);
    lab.validate(&g).unwrap();
    let spectrum = find_all_cycles(&g, &lab, &default_request()).unwrap();
    let missing: Vec<usize> = spectrum.missing.iter().map(|m| m.t).collect();
    assert_eq!(missing, vec![3, 5, 7, 9]);
    assert!(spectrum
        .missing
        .iter()
        .all(|m| m.reason == MissingReason::NoOddCycle));
}

#[test]
fn complete_graph_on_twelve_matches_oracle() {
    let g = Graph::complete(12).unwrap();
    let lab = CycleLabeling::identity(12);
    let spectrum = find_all_cycles(&g, &lab, &default_request()).unwrap();
    let found: BTreeSet<usize> = spectrum.found.keys().copied().collect();
    assert_eq!(found, cycle_lengths(&g));
    assert!(spectrum.max_extra_edges() <= 4);
}

#[test]
fn planted_graphs_are_four_pancyclic() {
    for (n, seed) in [(120, 1), (200, 2), (300, 3)] {
        let (g, lab) = plant_hamilton(
            &GnpParams::threshold(n, 3.0).unwrap(),
            RngSeed::new(seed, 0),
        );
        let spectrum = find_all_cycles(&g, &lab, &default_request()).unwrap();
        assert!(spectrum.missing.is_empty(), "n={n}: {:?}", spectrum.missing);
        assert!(spectrum.max_extra_edges() <= 4);
        for c in spectrum.found.values() {
            assert!(verify_certificate(&g, &lab, c));
        }
    }
}

#[test]
fn medium_length_after_thinning() {
    let n = 500;
    let (g, lab) = plant_hamilton(&GnpParams::threshold(n, 3.0).unwrap(), RngSeed::new(5, 0));
    let (gp, _) = apply_adversary(
        &AdversarySpec::uniform_thin(0.8),
        &g,
        &lab,
        RngSeed::new(5, 1),
    )
    .unwrap();
    let req = default_request();
    let cert = pancyclic::find_medium_cycle(&gp, &lab, n / 2, &req).unwrap();
    assert_eq!(cert.t, n / 2);
    assert!(verify_certificate(&gp, &lab, &cert));
}

#[test]
fn dense_graph_has_short_shortcuts() {
    let n = 60;
    let (g, lab) = plant_hamilton(&GnpParams::new(n, 0.8).unwrap(), RngSeed::new(60, 0));
    for l in 0..=n / 20 {
        let s = pancyclic::find_shortcut(&g, &lab, l).unwrap();
        let (short, long) = pancyclic::cycles_from_shortcut(&s, n).unwrap();
        assert_eq!((short.t, long.t), (l + 8, n - l));
        assert!(verify_certificate(&g, &lab, &short));
        assert!(verify_certificate(&g, &lab, &long));
    }
}

#[test]
fn adversarial_outputs_report_structured_reasons() {
    let n = 101;
    let (g, lab) = plant_hamilton(&GnpParams::threshold(n, 3.0).unwrap(), RngSeed::new(9, 0));
    let (gp, _) = apply_adversary(
        &AdversarySpec::new(AdversaryKind::NearBipartiteOdd),
        &g,
        &lab,
        RngSeed::new(9, 1),
    )
    .unwrap();
    let spectrum = find_all_cycles(&gp, &lab, &default_request()).unwrap();
    assert!(!spectrum.found.contains_key(&3));
    assert!(spectrum.found.contains_key(&n));
    for m in &spectrum.missing {
        let text = m.reason.to_string();
        assert_eq!(text.parse::<MissingReason>().unwrap(), m.reason);
    }
}
