use multipack::geometry::{build_neighbor_prefix, build_neighbor_table, Dim};
use multipack::instances::random_point_set;
use multipack::line::{greedy_max_r_multipacking_1d, verify_1d_bounds, Radius};
use multipack::multipacking::{bruteforce_max_r_multipacking, first_violation, is_r_multipacking, DEFAULT_BRUTE_LIMIT};
use multipack::plane::{
    conflict_graph, exact_max_is, fpt_independent_set, greedy_independent_set, max_1_multipacking, GP_MAX_DEGREE,
};
use multipack::{Coordinate, PointSet};
use proptest::prelude::*;

fn point_set(dim: Dim, sizes: std::ops::Range<usize>) -> impl Strategy<Value = PointSet> {
    (sizes, any::<u64>()).prop_map(move |(n, seed)| random_point_set(n, dim, seed, 100_000).unwrap())
}

fn transform() -> impl Strategy<Value = (Coordinate, i64, i64)> {
    (1i64..50, 1i64..7, -1000i64..1000, -1000i64..1000)
        .prop_map(|(a, b, dx, dy)| (Coordinate::new(a, b).unwrap(), dx, dy))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn neighbor_order_survives_similarity(p in point_set(Dim::Plane, 2..14), (k, dx, dy) in transform()) {
        let q = p.transformed(&k, &[dx.into(), dy.into()]).unwrap();
        prop_assert_eq!(build_neighbor_table(&p).unwrap(), build_neighbor_table(&q).unwrap());
    }

    #[test]
    fn neighborhoods_are_nested(p in point_set(Dim::Plane, 2..14)) {
        let t = build_neighbor_table(&p).unwrap();
        for v in 0..p.len() {
            for s in 1..p.len() {
                let small = t.closed_neighborhood(v, s - 1);
                let big = t.closed_neighborhood(v, s);
                prop_assert_eq!(big.len(), s + 1);
                prop_assert!(small.iter().all(|u| big.contains(u)));
            }
        }
    }

    #[test]
    fn prefix_table_agrees_with_full_table(p in point_set(Dim::Plane, 2..30), depth in 1usize..5) {
        let full = build_neighbor_table(&p).unwrap();
        let pre = build_neighbor_prefix(&p, depth).unwrap();
        for v in 0..p.len() {
            let d = pre.depth();
            prop_assert_eq!(pre.order(v), &full.order(v)[..d]);
        }
    }

    #[test]
    fn validity_is_hereditary_and_monotone_in_r(p in point_set(Dim::Plane, 3..11), drop in any::<prop::sample::Index>()) {
        let t = build_neighbor_table(&p).unwrap();
        for r in 1..p.len() {
            let best = bruteforce_max_r_multipacking(&p, r, DEFAULT_BRUTE_LIMIT).unwrap();
            prop_assert!(is_r_multipacking(&t, &best.indices, r).unwrap());
            for smaller in 1..r {
                prop_assert!(is_r_multipacking(&t, &best.indices, smaller).unwrap());
            }
            let mut sub = best.indices.clone();
            sub.remove(drop.index(sub.len()));
            prop_assert!(is_r_multipacking(&t, &sub, r).unwrap());
        }
    }

    #[test]
    fn optimum_is_non_increasing_in_r(p in point_set(Dim::Plane, 3..11)) {
        let sizes: Vec<usize> = (1..p.len())
            .map(|r| bruteforce_max_r_multipacking(&p, r, DEFAULT_BRUTE_LIMIT).unwrap().size)
            .collect();
        prop_assert!(sizes.windows(2).all(|w| w[0] >= w[1]));
    }

    #[test]
    fn line_greedy_is_optimal_and_maximal(p in point_set(Dim::Line, 2..12)) {
        let t = build_neighbor_table(&p).unwrap();
        for r in 1..p.len() {
            let g = greedy_max_r_multipacking_1d(&p, Radius::Fixed(r)).unwrap();
            prop_assert_eq!(g.size, bruteforce_max_r_multipacking(&p, r, DEFAULT_BRUTE_LIMIT).unwrap().size);
            for extra in (0..p.len()).filter(|i| !g.indices.contains(i)) {
                let mut more = g.indices.clone();
                more.push(extra);
                prop_assert!(first_violation(&t, &more, r).unwrap().is_some());
            }
        }
    }

    #[test]
    fn line_greedy_survives_similarity(p in point_set(Dim::Line, 2..12), (k, dx, _) in transform()) {
        let q = p.transformed(&k, &[dx.into()]).unwrap();
        let a = greedy_max_r_multipacking_1d(&p, Radius::Full).unwrap();
        let b = greedy_max_r_multipacking_1d(&q, Radius::Full).unwrap();
        prop_assert_eq!(a.indices, b.indices);
    }

    #[test]
    fn line_bounds_hold(p in point_set(Dim::Line, 2..40)) {
        prop_assert!(verify_1d_bounds(&p).unwrap().holds);
    }

    #[test]
    fn forest_witness_is_a_1_multipacking(p in point_set(Dim::Plane, 2..40)) {
        let w = max_1_multipacking(&p).unwrap();
        let t = build_neighbor_prefix(&p, 1).unwrap();
        prop_assert!(is_r_multipacking(&t, &w.indices, 1).unwrap());
        prop_assert!(w.size * 2 >= p.len());
    }

    #[test]
    fn conflict_graph_solvers_are_consistent(p in point_set(Dim::Plane, 3..40)) {
        let g = conflict_graph(&p).unwrap();
        prop_assert!(g.max_degree().0 <= GP_MAX_DEGREE);
        let exact = exact_max_is(&g).unwrap();
        let greedy = greedy_independent_set(&g);
        prop_assert!(g.is_independent(&exact.indices) && g.is_independent(&greedy.indices));
        prop_assert!(greedy.size <= exact.size && 4 * greedy.size >= exact.size);
        let hit = fpt_independent_set(&g, exact.size).unwrap();
        prop_assert!(hit.found());
        prop_assert!(!fpt_independent_set(&g, exact.size + 1).unwrap().found());
    }
}
