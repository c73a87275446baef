use bei_algebra::minimal_free_resolution;
use bei_core::census::{
    check_names, enumerate_up_to, render, run_census, CensusConfig, Format, Status, Suite, CHECKS,
};
use bei_core::{binomial_edge_ideal, cut_sets, join_cutsets, join_decomposition_check, Engine};
use bei_graph::{connected_components, enumerate_graphs, from_graph6, Graph};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const P: u32 = 32003;

fn disconnected(n: usize) -> Vec<Graph> {
    enumerate_graphs(n)
        .unwrap()
        .into_iter()
        .filter(|g| connected_components(g).len() > 1)
        .collect()
}

#[test]
fn join_cut_sets_match_brute_force() {
    let mut pairs = 0;
    for n1 in 2..=5 {
        for n2 in 2..=7 - n1 {
            for g1 in &disconnected(n1) {
                for g2 in &disconnected(n2) {
                    pairs += 1;
                    let j = g1.join(g2);
                    assert_eq!(
                        join_cutsets(g1, g2).unwrap(),
                        cut_sets(&j).unwrap(),
                        "{g1:?} * {g2:?}"
                    );
                }
            }
        }
    }
    assert!(pairs > 50);
}

#[test]
fn join_decompositions_small() {
    for g1 in &disconnected(2)
        .into_iter()
        .chain(disconnected(3))
        .collect::<Vec<_>>()
    {
        for g2 in &disconnected(2) {
            let ev = join_decomposition_check(g1, g2, P).unwrap();
            assert!(ev.holds(), "{g1:?} * {g2:?}: {:?}", ev.first_failure());
        }
    }
}

#[test]
fn every_check_passes_somewhere() {
    let config = CensusConfig {
        second_characteristic: Some(101),
        ..CensusConfig::default()
    };
    let report = run_census(&enumerate_up_to(5).unwrap(), config).unwrap();
    assert_eq!(report.summary.fail, 0, "{}", render(&report, Format::Text));
    assert_eq!(report.summary.resource_error, 0);
    assert_eq!(report.exit_code(), 0);
    for name in check_names() {
        assert!(
            report.results(name).any(|(_, c)| c.status == Status::Pass),
            "{name} never ran"
        );
    }
}

#[test]
fn four_vertex_census() {
    let report = run_census(&enumerate_graphs(4).unwrap(), CensusConfig::default()).unwrap();
    assert_eq!((report.reports.len(), report.summary.fail), (11, 0));
}

#[test]
fn suites_select_their_checks() {
    let graphs = enumerate_up_to(4).unwrap();
    for suite in [
        Suite::ConjA,
        Suite::ConjB,
        Suite::Colon,
        Suite::Join,
        Suite::Reduced,
    ] {
        let config = CensusConfig {
            suite,
            ..CensusConfig::default()
        };
        let report = run_census(&graphs, config).unwrap();
        let expected: Vec<&str> = CHECKS
            .iter()
            .filter(|c| c.suites.contains(&suite))
            .map(|c| c.name)
            .collect();
        assert!(!expected.is_empty());
        for r in &report.reports {
            assert_eq!(
                r.checks.iter().map(|c| c.name).collect::<Vec<_>>(),
                expected
            );
        }
    }
}

#[test]
fn reports_are_deterministic() {
    let graphs = enumerate_up_to(5).unwrap();
    let a = run_census(&graphs, CensusConfig::default()).unwrap();
    let b = run_census(&graphs, CensusConfig::default()).unwrap();
    assert_eq!(a, b);
    for f in [Format::Json, Format::Csv, Format::Text] {
        assert_eq!(render(&a, f), render(&b, f));
    }
    let json: serde_json::Value = serde_json::from_str(&render(&a, Format::Json)).unwrap();
    assert_eq!(json["schema"], "bei-report/1");
    assert_eq!(json["reports"].as_array().unwrap().len(), 52);
}

#[test]
fn known_values() {
    let mut e = Engine::new(P).unwrap();
    // C_4 = K_{2,2}
    let c4 = from_graph6("Cl").unwrap();
    assert!(c4.is_cycle());
    assert_eq!(e.reg_ideal(&c4).unwrap(), 3);
    let t = e.ideal_betti(&c4).unwrap();
    assert_eq!(t.get(0, 2), 4);
    // the 5-cycle has regularity 4 = n - 1
    assert_eq!(e.reg_ideal(&bei_graph::cycle(5).unwrap()).unwrap(), 4);
}

fn arb_graph() -> impl Strategy<Value = Graph> {
    (2usize..=6).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = Graph::empty(n);
            let mut k = 0;
            for i in 1..=n {
                for j in i + 1..=n {
                    if bits[k] {
                        g.add_edge(i, j).unwrap();
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn betti_tables_ignore_labels(g in arb_graph(), seed in any::<u64>()) {
        let mut perm: Vec<usize> = (1..=g.n()).collect();
        perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let h = g.relabel(&perm);
        // resolve both labelings directly, bypassing the engine's canonical cache
        let a = minimal_free_resolution(&binomial_edge_ideal(&g, P).unwrap()).unwrap();
        let b = minimal_free_resolution(&binomial_edge_ideal(&h, P).unwrap()).unwrap();
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(Engine::new(P).unwrap().betti(&h).unwrap(), a);
    }

    #[test]
    fn regularity_bounds(g in arb_graph()) {
        let mut e = Engine::new(P).unwrap();
        let t = e.betti(&g).unwrap();
        let r = t.reg_ideal().unwrap();
        prop_assert!(r <= g.n() as i64);
        prop_assert!(r <= bei_graph::clique_count(&g) as i64 + 1);
        if g.edge_count() > 0 {
            prop_assert!(r >= 2);
            prop_assert_eq!(t.ideal_view().get(0, 2), g.edge_count() as u64);
        }
        // adding an isolated vertex changes nothing
        let bigger = g.disjoint_union(&Graph::empty(1));
        prop_assert_eq!(e.betti(&bigger).unwrap(), t);
    }
}
