use pancyclic::finder::{
    find_special_vertex, peel_min_degree, posa_path, second_neighborhood,
    short_cycles_without_hamilton, ShortCycleParams, SpecialVertexMethod,
};
use pancyclic::random::{plant_hamilton, sample_gnp, GnpParams, RngSeed};
use pancyclic::{apply_adversary, AdversarySpec, Error, Graph, MissingReason};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn special_vertex_in_thinned_planted_graph() {
    let n = 2000;
    let params = GnpParams::threshold(n, 3.0).unwrap();
    let (g, lab) = plant_hamilton(&params, RngSeed::new(77, 0));
    let (gp, _) = apply_adversary(
        &AdversarySpec::uniform_thin(0.8),
        &g,
        &lab,
        RngSeed::new(77, 1),
    )
    .unwrap();
    let sv = find_special_vertex(&gp, 0.05, params.p).unwrap();
    assert_ne!(sv.method, SpecialVertexMethod::Argmax);
    // independent recount
    let recount = gp.edges_within(&second_neighborhood(&gp, sv.w));
    assert_eq!(recount, sv.second_edges);
    let threshold = 0.05 / 16.0 * (n * n) as f64 * params.p;
    assert!(recount as f64 >= threshold);
}

#[test]
fn sparse_graph_takes_warning_branch() {
    let g = Graph::cycle(40).unwrap();
    let sv = find_special_vertex(&g, 0.5, 0.5).unwrap();
    assert_eq!(sv.method, SpecialVertexMethod::Argmax);
}

#[test]
fn peeling_never_empties_dense_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for trial in 0..300 {
        let n = rng.gen_range(4..=30);
        let p = rng.gen_range(0.05..0.9);
        let g = sample_gnp(&GnpParams::new(n, p).unwrap(), RngSeed::new(trial, 0));
        let d_max = g.edge_count() / n;
        if d_max == 0 {
            continue;
        }
        let d = rng.gen_range(1..=d_max);
        let core = peel_min_degree(&g, d)
            .unwrap()
            .expect("e(G) >= d n leaves a core");
        assert!((0..n)
            .filter(|&v| core.degree(v) > 0)
            .all(|v| core.degree(v) >= d));
        assert!(core.is_subgraph_of(&g));
    }
}

#[test]
fn posa_violators_name_their_sets() {
    let star = Graph::from_edges(6, (1..6).map(|x| (0, x))).unwrap();
    match posa_path(&star, 0, 2) {
        Err(Error::ExpansionFailure {
            set,
            outside,
            required,
        }) => {
            assert_eq!(set.len(), 2);
            assert!(set.iter().all(|&x| x != 0));
            assert_eq!((outside, required), (1, 3));
        }
        other => panic!("expected expansion failure, got {other:?}"),
    }
    match posa_path(&Graph::cycle(9).unwrap(), 0, 2) {
        Err(Error::ExpansionFailure {
            outside, required, ..
        }) => {
            assert!(outside < required);
        }
        other => panic!("expected expansion failure, got {other:?}"),
    }
}

#[test]
fn short_cycle_range_is_empty_at_default_constant() {
    let n = 2000;
    let params = GnpParams::threshold(n, 3.0).unwrap();
    let g = sample_gnp(&params, RngSeed::new(1, 0));
    let out = short_cycles_without_hamilton(
        &g,
        &ShortCycleParams {
            eps: 0.1,
            p: params.p,
            cap: None,
        },
    )
    .unwrap();
    assert_eq!(out.upper, 0);
    assert_eq!(out.skipped, Some(MissingReason::RangeEmpty));
    assert!(out.spectrum.found.is_empty());
}
