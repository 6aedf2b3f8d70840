use std::time::Duration;

use avd_core::oracle::lower_bound;
use avd_core::{
    avd_color, check_avd, chi_a_exact, exists_avd_k, CirculantGraph, EdgeOrder, OracleError,
    SearchConfig, SearchOutcome,
};

fn chi(n: usize, lengths: &[usize]) -> usize {
    let g = CirculantGraph::new(n, lengths.iter().copied()).unwrap();
    chi_a_exact(&g, &SearchConfig::default()).unwrap()
}

#[test]
fn c7_two_needs_six() {
    assert_eq!(chi(7, &[1, 2]), 6);
    let g = CirculantGraph::full(7, 2).unwrap();
    assert!(matches!(
        exists_avd_k(&g, 5, &SearchConfig::default()).unwrap(),
        SearchOutcome::Unsat
    ));
}

#[test]
fn squared_cycles_need_five() {
    for n in [5, 6, 8, 9, 10, 11, 12] {
        assert_eq!(chi(n, &[1, 2]), 5, "n = {n}");
    }
}

#[test]
fn cycles() {
    for n in [6, 9, 12] {
        assert_eq!(chi(n, &[1]), 3, "n = {n}");
    }
    for n in [4, 7, 8, 10, 11] {
        assert_eq!(chi(n, &[1]), 4, "n = {n}");
    }
    assert_eq!(chi(5, &[1]), 5);
}

#[test]
fn witnesses_pass_the_verifier() {
    for (n, lengths) in [
        (9, vec![1]),
        (10, vec![1, 2]),
        (7, vec![1, 2]),
        (3, vec![1]),
    ] {
        let g = CirculantGraph::new(n, lengths).unwrap();
        let k = chi_a_exact(&g, &SearchConfig::default()).unwrap();
        match exists_avd_k(&g, k, &SearchConfig::default()).unwrap() {
            SearchOutcome::Found(c) => {
                assert!(check_avd(&c).passed);
                assert!(c.palette().len() <= k);
            }
            other => panic!("n = {n}: {other:?}"),
        }
    }
}

#[test]
fn value_independent_of_search_settings() {
    for (n, lengths) in [(7, vec![1]), (8, vec![1, 2]), (5, vec![1]), (6, vec![1, 2])] {
        let g = CirculantGraph::new(n, lengths).unwrap();
        let mut values = Vec::new();
        for edge_order in [EdgeOrder::Lexicographic, EdgeOrder::Saturating] {
            for symmetry_breaking in [true, false] {
                let cfg = SearchConfig {
                    edge_order,
                    symmetry_breaking,
                    ..SearchConfig::default()
                };
                values.push(chi_a_exact(&g, &cfg).unwrap());
            }
        }
        assert!(
            values.windows(2).all(|w| w[0] == w[1]),
            "n = {n}: {values:?}"
        );
    }
}

/// Plain enumeration of all k-colorings, no pruning.
fn brute_force_exists(g: &CirculantGraph, k: usize) -> bool {
    let n = g.n();
    let edges: Vec<(usize, usize)> = g.edges().map(|e| e.endpoints(n)).collect();
    let mut assignment = vec![0usize; edges.len()];
    loop {
        let mut sets = vec![0u64; n];
        let mut proper = true;
        for (&(a, b), &c) in edges.iter().zip(&assignment) {
            if sets[a] & (1 << c) != 0 || sets[b] & (1 << c) != 0 {
                proper = false;
                break;
            }
            sets[a] |= 1 << c;
            sets[b] |= 1 << c;
        }
        if proper && edges.iter().all(|&(a, b)| sets[a] != sets[b]) {
            return true;
        }
        let mut i = 0;
        loop {
            if i == assignment.len() {
                return false;
            }
            assignment[i] += 1;
            if assignment[i] < k {
                break;
            }
            assignment[i] = 0;
            i += 1;
        }
    }
}

#[test]
fn agrees_with_plain_enumeration() {
    for (n, lengths, k) in [
        (5, vec![1], 4),
        (5, vec![1], 5),
        (6, vec![1], 3),
        (7, vec![1], 3),
        (7, vec![1], 4),
        (5, vec![1, 2], 5),
    ] {
        let g = CirculantGraph::new(n, lengths).unwrap();
        let found = matches!(
            exists_avd_k(&g, k, &SearchConfig::default()).unwrap(),
            SearchOutcome::Found(_)
        );
        assert_eq!(found, brute_force_exists(&g, k), "n = {n}, k = {k}");
    }
}

#[test]
fn lower_bound_is_delta_plus_one() {
    for radius in 1..=4 {
        let g = CirculantGraph::full(4 * radius + 3, radius).unwrap();
        assert_eq!(lower_bound(&g), 2 * radius + 1);
    }
}

#[test]
fn constructions_meet_the_lower_bound() {
    for (n, radius) in [(12, 2), (9, 1), (6, 1), (17, 2)] {
        let c = avd_color(n, radius).unwrap().coloring;
        assert_eq!(c.palette().len(), lower_bound(c.graph()));
        let below = exists_avd_k(c.graph(), 2 * radius, &SearchConfig::default()).unwrap();
        assert!(matches!(below, SearchOutcome::Unsat), "n = {n}");
    }
}

#[test]
fn limits_and_timeouts() {
    let g = CirculantGraph::full(7, 2).unwrap();
    let cfg = SearchConfig {
        max_colors: 5,
        ..SearchConfig::default()
    };
    assert_eq!(
        chi_a_exact(&g, &cfg).unwrap_err(),
        OracleError::LimitReached { max_colors: 5 }
    );
    let cfg = SearchConfig {
        time_limit: Some(Duration::ZERO),
        ..SearchConfig::default()
    };
    assert!(matches!(
        chi_a_exact(&g, &cfg),
        Err(OracleError::Timeout { .. })
    ));
}
