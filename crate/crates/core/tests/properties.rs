use irregularity::spectra::{
    eigenvalues_symmetric, predicted_blow_up_spectrum, predicted_closed_blow_up_spectrum,
};
use irregularity::{
    fine_regularize, graph_spectrum, measures::int, rough_regularize, DegreeProfile, Graph,
    SymmetricMatrix,
};
use proptest::prelude::*;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let edges = Graph::pair_order(n)
                .zip(bits)
                .filter(|(_, b)| *b)
                .map(|(e, _)| e);
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn same_order_pair(max_n: usize) -> impl Strategy<Value = (Graph, Graph, Graph)> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        let one = move || {
            proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
                let edges = Graph::pair_order(n)
                    .zip(bits)
                    .filter(|(_, b)| *b)
                    .map(|(e, _)| e);
                Graph::from_edges(n, edges).unwrap()
            })
        };
        (one(), one(), one())
    })
}

/// `Q^T D Q` for a product of Givens rotations `Q` driven by `angles`.
fn rotated_diagonal(diagonal: &[f64], angles: &[(usize, usize, f64)]) -> SymmetricMatrix<f64> {
    let n = diagonal.len();
    let mut a = vec![0.0; n * n];
    for (i, d) in diagonal.iter().enumerate() {
        a[i * n + i] = *d;
    }
    for &(p, q, theta) in angles {
        let (p, q) = (p % n, q % n);
        if p == q {
            continue;
        }
        let (s, c) = theta.sin_cos();
        // Rows, then columns: A <- G A G^T.
        for k in 0..n {
            let (x, y) = (a[p * n + k], a[q * n + k]);
            a[p * n + k] = c * x - s * y;
            a[q * n + k] = s * x + c * y;
        }
        for k in 0..n {
            let (x, y) = (a[k * n + p], a[k * n + q]);
            a[k * n + p] = c * x - s * y;
            a[k * n + q] = s * x + c * y;
        }
    }
    // Restore exact symmetry lost to rounding.
    for i in 0..n {
        for j in 0..i {
            let mean = 0.5 * (a[i * n + j] + a[j * n + i]);
            a[i * n + j] = mean;
            a[j * n + i] = mean;
        }
    }
    SymmetricMatrix::from_row_major(n, a).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn deviation_chain(g in graph_strategy(12)) {
        let p = DegreeProfile::new(&g);
        prop_assert!(p.s_squared_over_n_squared() <= p.var);
        prop_assert!(p.var <= p.s);
        prop_assert!(p.chain_holds());
    }

    #[test]
    fn deviation_is_complement_invariant(g in graph_strategy(12)) {
        prop_assert_eq!(DegreeProfile::new(&g).s, DegreeProfile::new(&g.complement()).s);
    }

    #[test]
    fn blow_up_scales_deviation(g in graph_strategy(7), t in 1usize..4) {
        let s = DegreeProfile::new(&g).s;
        let blown = g.blow_up(t).unwrap();
        prop_assert_eq!(blown.n(), g.n() * t);
        prop_assert_eq!(DegreeProfile::new(&blown).s, s * int(t * t));
    }

    #[test]
    fn closed_blow_up_is_complement_of_blown_complement(g in graph_strategy(7), t in 1usize..4) {
        let lhs = g.closed_blow_up(t).unwrap();
        let rhs = g.complement().blow_up(t).unwrap().complement();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn edit_distance_is_a_metric((a, b, c) in same_order_pair(9)) {
        let ab = a.edit_distance(&b).unwrap();
        prop_assert_eq!(ab, b.edit_distance(&a).unwrap());
        prop_assert_eq!(a.edit_distance(&a).unwrap(), 0);
        prop_assert!(a.edit_distance(&c).unwrap() <= ab + b.edit_distance(&c).unwrap());
    }

    #[test]
    fn spectrum_trace_identities(g in graph_strategy(16)) {
        let spectrum = graph_spectrum::<f64>(&g).unwrap();
        prop_assert!(spectrum.sum().abs() <= 1e-9);
        prop_assert!((spectrum.sum_of_squares() - 2.0 * g.m() as f64).abs() <= 1e-9);
    }

    #[test]
    fn blow_up_spectra_match_prediction(g in graph_strategy(6), t in 2usize..4) {
        let base = graph_spectrum::<f64>(&g).unwrap();
        let open = graph_spectrum::<f64>(&g.blow_up(t).unwrap()).unwrap();
        let closed = graph_spectrum::<f64>(&g.closed_blow_up(t).unwrap()).unwrap();
        let open_err = open.linf_distance(&predicted_blow_up_spectrum(&base, g.n(), t).unwrap()).unwrap();
        let closed_err =
            closed.linf_distance(&predicted_closed_blow_up_spectrum(&base, g.n(), t).unwrap()).unwrap();
        prop_assert!(open_err <= 1e-8, "open blow-up error {open_err}");
        prop_assert!(closed_err <= 1e-8, "closed blow-up error {closed_err}");
    }

    #[test]
    fn rough_regularization_contract(g in graph_strategy(14)) {
        let out = rough_regularize(&g).unwrap();
        prop_assert_eq!(out.result.n(), g.n());
        prop_assert_eq!(out.result.m(), g.m());
        prop_assert!(out.result.max_degree() <= out.result.min_degree() + 1);
        prop_assert!(out.within_bound());
        prop_assert_eq!(out.script.replay(&g).unwrap(), out.result.clone());
        let fine = fine_regularize(&out.result).unwrap();
        prop_assert!(fine.result.is_regular());
        prop_assert!(fine.within_bound());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn planted_spectrum_is_recovered(
        diagonal in proptest::collection::vec(-10.0f64..10.0, 1..=50),
        angles in proptest::collection::vec((0usize..50, 0usize..50, -3.2f64..3.2), 0..200),
    ) {
        let a = rotated_diagonal(&diagonal, &angles);
        let found = eigenvalues_symmetric(&a, 1e-12).unwrap();
        let mut expected = diagonal.clone();
        expected.sort_by(|x, y| y.total_cmp(x));
        for (x, y) in found.values().iter().zip(&expected) {
            prop_assert!((x - y).abs() <= 1e-9, "{x} vs {y}");
        }
        prop_assert!((found.sum() - a.trace()).abs() <= 1e-9);
    }
}
