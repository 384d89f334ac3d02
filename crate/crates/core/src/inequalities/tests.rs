use super::*;
use crate::measures::rational;

fn star(leaves: usize) -> Graph {
    Graph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v))).unwrap()
}

fn cycle(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).unwrap()
}

fn complete_plus_isolated(n: usize) -> Graph {
    Graph::complete(n)
        .unwrap()
        .disjoint_union(&Graph::empty(1).unwrap())
}

fn find<'a>(results: &'a [CheckResult], name: &str) -> &'a CheckResult {
    results.iter().find(|r| r.name == name).unwrap()
}

fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol
}

#[test]
fn regular_graph_irregularity_is_zero() {
    let results = check_irregularity_bounds(&cycle(5), DEFAULT_TOL).unwrap();
    assert_eq!(results.len(), 5);
    for r in &results {
        assert!(r.holds, "{r:?}");
        assert!(r.lhs.abs() < 1e-10 && r.rhs.abs() < 1e-10, "{r:?}");
    }
}

#[test]
fn star_irregularity_values() {
    let results = check_irregularity_bounds(&star(3), DEFAULT_TOL).unwrap();
    let eps = 3f64.sqrt() - 1.5;
    let lower = find(&results, "irregularity_lower_var");
    assert!(close(lower.lhs, 0.75 / (2.0 * 6f64.sqrt()), 1e-12));
    assert!(close(lower.rhs, eps, 1e-10));
    let upper = find(&results, "irregularity_upper_sqrt_s");
    assert!(close(upper.rhs, 3f64.sqrt(), 1e-12));
    assert!(results.iter().all(|r| r.holds));
    assert!(close(eps, 0.2321, 1e-4));
}

#[test]
fn complete_plus_isolated_irregularity_values() {
    let results = check_irregularity_bounds(&complete_plus_isolated(10), DEFAULT_TOL).unwrap();
    let lower = find(&results, "irregularity_lower_var");
    assert!(close(lower.rhs, 9.0 / 11.0, 1e-9));
    assert!(close(lower.lhs, 0.3528, 1e-4));
    let upper = find(&results, "irregularity_upper_sqrt_s");
    assert!(close(upper.rhs, (180f64 / 11.0).sqrt(), 1e-12));
    assert!(close(upper.rhs, 4.0452, 1e-4));
    assert!(results.iter().all(|r| r.holds));
}

#[test]
fn edgeless_graph_lower_bounds_are_trivial() {
    let results = check_irregularity_bounds(&Graph::empty(3).unwrap(), DEFAULT_TOL).unwrap();
    let lower = find(&results, "irregularity_lower_s");
    assert_eq!((lower.lhs, lower.rhs, lower.margin), (0.0, 0.0, 0.0));
}

#[test]
fn deviation_chain_is_exact() {
    let results = check_irregularity_bounds(&star(3), DEFAULT_TOL).unwrap();
    let chain = find(&results, "deviation_chain_lower");
    // s^2/n^2 = 9/16 against var = 3/4.
    assert_eq!(
        chain.witness,
        Some(Witness::Exact {
            lhs: ExactValue(rational(9, 16)),
            rhs: ExactValue(rational(3, 4))
        })
    );
    assert_eq!(chain.margin, 0.1875);
}

#[test]
fn complete_bipartite_is_centered() {
    let g = Graph::from_edges(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
    let layout = BipartiteLayout::new(2, 5).unwrap();
    let results = check_bipartite_bounds(&g, &layout, DEFAULT_TOL).unwrap();
    for r in &results {
        assert!(r.holds);
        assert!(r.margin.abs() < 1e-10, "{r:?}");
    }
}

#[test]
fn cherry_bipartite_values() {
    let g = Graph::from_edges(4, [(0, 1), (0, 2)]).unwrap();
    let layout = BipartiteLayout::new(1, 4).unwrap();
    let results = check_bipartite_bounds(&g, &layout, DEFAULT_TOL).unwrap();
    let lower = find(&results, "bipartite_lower");
    assert!(close(
        lower.lhs,
        (16.0 / 9.0) / (2.0 * 16.0 * 3f64.sqrt()),
        1e-12
    ));
    assert!(close(lower.lhs, 0.0321, 1e-4));
    assert!(close(lower.rhs, 2f64.sqrt() - 2.0 / 3f64.sqrt(), 1e-10));
    assert!(close(lower.rhs, 0.2595, 1e-4));
    let upper = find(&results, "bipartite_upper");
    assert!(close(upper.rhs, (2.0f64 / 3.0).sqrt(), 1e-12));
    assert!(results.iter().all(|r| r.holds));
}

#[test]
fn bipartite_bounds_reject_crossing_edges() {
    let g = Graph::from_edges(4, [(0, 1)]).unwrap();
    let layout = BipartiteLayout::new(2, 4).unwrap();
    assert!(matches!(
        check_bipartite_bounds(&g, &layout, DEFAULT_TOL),
        Err(Error::InvalidLayout(_))
    ));
}

#[test]
fn pair_lower_on_cycle_and_star() {
    let results = check_pair_lower(&cycle(4), DEFAULT_TOL).unwrap();
    assert_eq!(results.len(), 3);
    let k2 = &results[1];
    assert!(close(k2.rhs, -1.0, 1e-10) && close(k2.lhs, -1.0, 0.0));
    assert!(k2.holds);

    let results = check_pair_lower(&star(3), DEFAULT_TOL).unwrap();
    for r in &results {
        assert!(close(r.lhs, -1.0 - 2.0 * 6f64.sqrt(), 1e-12));
        assert!(r.margin >= 0.0);
    }
}

#[test]
fn pair_upper_audit_on_cycle() {
    let results = check_pair_upper_audit(&cycle(4), DEFAULT_TOL).unwrap();
    let a: Vec<_> = results
        .iter()
        .filter(|r| r.name == "pair_upper_a")
        .collect();
    let b: Vec<_> = results
        .iter()
        .filter(|r| r.name == "pair_upper_b")
        .collect();
    assert_eq!((a.len(), b.len()), (3, 3));
    let a3 = a
        .iter()
        .find(|r| matches!(r.witness, Some(Witness::Index { k: 3, .. })))
        .unwrap();
    assert!(close(a3.lhs, 1.0, 1e-10));
    assert!(a3.is_finding());
    // k = 1 fails as well: mu_1(C4) + mu_4(2K2) = 2 - 1.
    let failing: Vec<usize> = a
        .iter()
        .filter(|r| r.is_finding())
        .map(|r| match r.witness {
            Some(Witness::Index { k, .. }) => k,
            _ => unreachable!(),
        })
        .collect();
    assert_eq!(failing, vec![1, 3]);
    assert!(b.iter().all(|r| r.holds));
    let b2 = b[0];
    assert!(close(b2.lhs, -1.0, 1e-10));
    match b2.witness {
        Some(Witness::Index {
            k,
            index_in_complement,
            pairing,
            ..
        }) => {
            assert_eq!((k, index_in_complement, pairing), (2, 4, Some(Pairing::B)));
        }
        ref other => panic!("unexpected witness {other:?}"),
    }
}

#[test]
fn pair_upper_audit_smallest_case() {
    let results = check_pair_upper_audit(&Graph::complete(2).unwrap(), DEFAULT_TOL).unwrap();
    let b = find(&results, "pair_upper_b");
    assert!(close(b.lhs, -1.0, 1e-12) && b.margin.abs() < 1e-12);
}

#[test]
fn min_sum_examples() {
    let r = check_min_sum(&star(3), DEFAULT_TOL).unwrap();
    assert!(close(r.lhs, -3f64.sqrt() - 1.0, 1e-10));
    assert!(close(r.rhs, -1.0 - 9.0 / 64.0, 1e-12));
    assert!(r.holds);

    let r = check_min_sum(&cycle(4), DEFAULT_TOL).unwrap();
    assert!(close(r.lhs, -3.0, 1e-10) && r.holds);

    let r = check_min_sum(&cycle(5), DEFAULT_TOL).unwrap();
    let want = 4.0 * (4.0 * std::f64::consts::PI / 5.0).cos();
    assert!(close(r.lhs, want, 1e-10) && r.holds);

    assert!(check_min_sum(&Graph::empty(1).unwrap(), DEFAULT_TOL).is_err());
}

#[test]
fn haemers_examples() {
    let r = haemers_min_bound(&cycle(4), &[0, 1], &[2, 3], DEFAULT_TOL).unwrap();
    assert!(close(r.rhs, 0.0, 1e-12) && close(r.lhs, -2.0, 1e-10));

    let r = haemers_min_bound(&Graph::complete(2).unwrap(), &[0], &[1], DEFAULT_TOL).unwrap();
    assert!(close(r.rhs, -1.0, 1e-12) && r.margin.abs() < 1e-10);

    let r = haemers_min_bound(&Graph::empty(4).unwrap(), &[2], &[0, 1, 3], DEFAULT_TOL).unwrap();
    assert_eq!((r.lhs, r.rhs), (0.0, 0.0));
}

#[test]
fn haemers_rejects_bad_partitions() {
    let g = cycle(4);
    for (v1, v2) in [
        (vec![], vec![0, 1, 2, 3]),
        (vec![0, 1], vec![1, 2, 3]),
        (vec![0, 1], vec![2]),
        (vec![0, 4], vec![1, 2, 3]),
    ] {
        assert!(matches!(
            haemers_min_bound(&g, &v1, &v2, DEFAULT_TOL),
            Err(Error::InvalidPartition(_))
        ));
    }
}

#[test]
fn lear_split_on_regular_graph_holds() {
    let r = lear_split(&cycle(4), DEFAULT_TOL).unwrap();
    assert!(r.holds);
    assert_eq!(r.lhs, 0.0);
}

#[test]
fn lear_split_star_findings() {
    let r = lear_split(&star(3), DEFAULT_TOL).unwrap();
    assert_eq!((r.lhs, r.rhs, r.margin), (1.5, 1.0, -0.5));
    assert!(r.is_finding());
    match &r.witness {
        Some(Witness::Subset {
            subset,
            exhaustive_best,
            ..
        }) => {
            assert_eq!(subset, &vec![1, 2]);
            assert_eq!(*exhaustive_best, Some(1.0));
        }
        other => panic!("unexpected witness {other:?}"),
    }

    let r = lear_split(&star(4), DEFAULT_TOL).unwrap();
    assert_eq!(r.rhs, 2.0);
    assert!(close(r.lhs, 2.4, 1e-12));
    assert!(r.is_finding());
}

#[test]
fn best_half_split_matches_enumeration() {
    // e(V\S) - e(S) over 2-subsets of a path 0-1-2-3.
    let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
    let a = GraphAnalysis::new(&g).unwrap();
    let (best, set) = a.best_half_split(2);
    assert_eq!(best, 1);
    assert_eq!(set, vec![0, 3]);
}

#[test]
fn tightness_examples() {
    let t = tightness_ratios(&complete_plus_isolated(10)).unwrap();
    assert!(close(
        t.upper_ratio.unwrap(),
        (9.0 / 11.0) / (180f64 / 11.0).sqrt(),
        1e-9
    ));
    assert!(close(t.upper_ratio.unwrap(), 0.2023, 1e-4));

    let t = tightness_ratios(&cycle(6)).unwrap();
    assert!(t.upper_ratio.is_none() && t.lower_ratio.is_none());
}

#[test]
fn pr1_examples() {
    let k4 = Graph::complete(4).unwrap();
    let r = pr1_gap_check(&k4, &k4, None, DEFAULT_TOL).unwrap();
    assert_eq!(r.len(), 1);
    assert!(r[0].lhs.abs() < 1e-10 && r[0].rhs == 0.0 && r[0].holds);

    let k4_minus = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
    let r = pr1_gap_check(&k4, &k4_minus, None, DEFAULT_TOL).unwrap();
    assert!(close(r[0].lhs, 3.0 - (1.0 + 17f64.sqrt()) / 2.0, 1e-10));
    assert!(close(r[0].rhs, 2f64.sqrt(), 1e-12));

    let layout = BipartiteLayout::new(1, 5).unwrap();
    let r = pr1_gap_check(
        &star(4),
        &Graph::empty(5).unwrap(),
        Some(&layout),
        DEFAULT_TOL,
    )
    .unwrap();
    assert_eq!(r.len(), 2);
    assert!(close(r[0].lhs, 2.0, 1e-10) && close(r[0].rhs, 8f64.sqrt(), 1e-12));
    assert!(close(r[1].rhs, 2.0, 1e-12) && r[1].holds);

    assert!(pr1_gap_check(&k4, &star(4), None, DEFAULT_TOL).is_err());
}

#[test]
fn classical_checks_hold_on_small_graphs() {
    let g = Graph::from_edges(5, [(0, 2), (0, 3), (1, 3), (1, 4)]).unwrap();
    let layout = BipartiteLayout::new(2, 5).unwrap();
    let results = check_classical_bounds(&g, Some(&layout), DEFAULT_TOL).unwrap();
    assert_eq!(results.len(), 5);
    assert!(results.iter().all(|r| r.holds), "{results:?}");
}

#[test]
fn star_pair_example_differs_from_stated_values() {
    let e = star_pair_example(4).unwrap();
    assert_eq!(e.s_computed, ExactValue(rational(24, 5)));
    assert_eq!(e.s_stated, ExactValue(rational(6, 5)));
    assert!(close(e.sum_computed, -2.0, 1e-10));
    assert!(close(e.sum_stated, -3.0, 1e-12));
}

#[test]
fn bipartition_enumeration() {
    let all: Vec<_> = all_bipartitions(4).collect();
    assert_eq!(all.len(), 7);
    assert!(all
        .iter()
        .all(|(a, b)| a.contains(&0) && !b.is_empty() && a.len() + b.len() == 4));
    assert_eq!(all_bipartitions(1).count(), 0);

    let random = random_bipartitions(10, 20, 3);
    assert_eq!(random.len(), 20);
    assert_eq!(random, random_bipartitions(10, 20, 3));
}
