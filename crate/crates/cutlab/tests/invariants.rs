//! Property tests for the cross-module invariants: solver agreement
//! with the brute-force oracle, perturbation behavior, contraction and
//! tree consistency, and demand monotonicity, all over randomized
//! graphs and demand sets.

use proptest::prelude::*;

use cutlab::agrees;
use cutlab::construct::random_connected;
use cutlab::demand::DemandGraph;
use cutlab::gomory_hu::{build_gh_tree, distinct_pair_values};
use cutlab::graph::deperturb;
use cutlab::partition::{AllPartitions, Bipartitions, Partition};
use cutlab::solver::{groupcut, mincut_oracle, multicut, multiway, st_mincut};
use cutlab::{Weight, WeightedGraph};

/// Arbitrary undirected graph: n in 2..=max_n, every pair kept with a
/// random bit, weights in 0..=20 (zero weights allowed on purpose).
fn graph_strategy(max_n: usize) -> impl Strategy<Value = WeightedGraph> {
    (2..=max_n)
        .prop_flat_map(|n| {
            let pairs = n * (n - 1) / 2;
            (
                Just(n),
                proptest::collection::vec(any::<bool>(), pairs),
                proptest::collection::vec(0u64..=20, pairs),
            )
        })
        .prop_map(|(n, keep, weights)| {
            let mut edges = Vec::new();
            let mut idx = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if keep[idx] {
                        edges.push((u, v, Weight::from(weights[idx])));
                    }
                    idx += 1;
                }
            }
            WeightedGraph::new(n, edges, false).expect("valid random graph")
        })
}

fn connected_strategy(max_n: usize) -> impl Strategy<Value = WeightedGraph> {
    (2..=max_n, any::<u64>()).prop_map(|(n, seed)| random_connected(n, 50, seed))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cut_value_invariant_under_block_relabeling(g in graph_strategy(6), shift in 1usize..5) {
        for p in AllPartitions::new(g.vertex_count()) {
            let relabeled: Vec<usize> = p
                .blocks()
                .iter()
                .map(|b| (b + shift) % p.part_count())
                .collect();
            let q = Partition::new(&relabeled);
            prop_assert_eq!(g.cut_value(&p).unwrap(), g.cut_value(&q).unwrap());
        }
    }

    #[test]
    fn perturbation_separates_and_deperturbs(g in connected_strategy(8)) {
        let pg = g.perturbed().unwrap();
        let m = g.edge_count();
        let mut seen = std::collections::BTreeSet::new();
        for p in Bipartitions::new(g.vertex_count()) {
            let pv = pg.cut_value(&p).unwrap();
            prop_assert!(seen.insert(pv.clone()), "two 2-partitions share a perturbed value");
            prop_assert_eq!(deperturb(&pv, m), g.cut_value(&p).unwrap());
        }
        for p in AllPartitions::new(g.vertex_count()) {
            let pv = pg.cut_value(&p).unwrap();
            prop_assert_eq!(deperturb(&pv, m), g.cut_value(&p).unwrap());
        }
    }

    #[test]
    fn contraction_preserves_lifted_cut_values(g in graph_strategy(7), picks in proptest::collection::vec(any::<proptest::sample::Index>(), 1..4)) {
        let n = g.vertex_count();
        let mut s: Vec<usize> = picks.iter().map(|ix| ix.index(n)).collect();
        s.sort_unstable();
        s.dedup();
        let (c, map) = g.contract(&s).unwrap();
        for p in AllPartitions::new(c.vertex_count()) {
            let lifted: Vec<usize> = (0..n).map(|v| p.block_of(map[v])).collect();
            let lifted = Partition::new(&lifted);
            prop_assert_eq!(c.cut_value(&p).unwrap(), g.cut_value(&lifted).unwrap());
        }
    }

    #[test]
    fn st_mincut_symmetric_and_equals_bipartition_minimum(
        g in graph_strategy(7),
        si in any::<proptest::sample::Index>(),
        ti in any::<proptest::sample::Index>(),
    ) {
        let n = g.vertex_count();
        let s = si.index(n);
        let t = ti.index(n);
        prop_assume!(s != t);
        let fwd = st_mincut(&g, s, t).unwrap();
        let bwd = st_mincut(&g, t, s).unwrap();
        prop_assert_eq!(&fwd.value, &bwd.value);
        let brute = Bipartitions::new(n)
            .filter(|p| p.separates(s, t))
            .map(|p| g.cut_value(&p).unwrap())
            .min()
            .unwrap();
        prop_assert_eq!(&fwd.value, &brute);
        prop_assert!(fwd.partition.separates(s, t));
        prop_assert_eq!(g.cut_value(&fwd.partition).unwrap(), brute);
    }

    #[test]
    fn groupcut_equals_oracle(
        g in graph_strategy(7),
        a_picks in proptest::collection::vec(any::<proptest::sample::Index>(), 1..3),
        b_picks in proptest::collection::vec(any::<proptest::sample::Index>(), 1..3),
    ) {
        let n = g.vertex_count();
        let mut a: Vec<usize> = a_picks.iter().map(|ix| ix.index(n)).collect();
        a.sort_unstable();
        a.dedup();
        let mut b: Vec<usize> = b_picks
            .iter()
            .map(|ix| ix.index(n))
            .filter(|v| !a.contains(v))
            .collect();
        b.sort_unstable();
        b.dedup();
        prop_assume!(!b.is_empty());
        let d = DemandGraph::bipartite(&a, &b, false).unwrap();
        let fast = groupcut(&g, &a, &b).unwrap();
        let slow = mincut_oracle(&g, &d).unwrap();
        prop_assert_eq!(&fast.value, &slow.value);
        prop_assert!(agrees(&fast.partition, &d));
        prop_assert_eq!(g.cut_value(&fast.partition).unwrap(), fast.value);
    }

    #[test]
    fn multiway_and_multicut_match_oracle_and_st_special_cases(
        g in graph_strategy(6),
        picks in proptest::collection::vec(any::<proptest::sample::Index>(), 2..4),
    ) {
        let n = g.vertex_count();
        let mut s: Vec<usize> = picks.iter().map(|ix| ix.index(n)).collect();
        s.sort_unstable();
        s.dedup();
        prop_assume!(s.len() >= 2);
        let d = DemandGraph::clique(&s, false).unwrap();
        let fast = multiway(&g, &s).unwrap();
        let slow = mincut_oracle(&g, &d).unwrap();
        prop_assert_eq!(&fast.value, &slow.value);
        if s.len() == 2 {
            prop_assert_eq!(&fast.value, &st_mincut(&g, s[0], s[1]).unwrap().value);
            let pair = DemandGraph::single(s[0], s[1], false).unwrap();
            prop_assert_eq!(&multicut(&g, &pair).unwrap().value, &fast.value);
        }
    }

    #[test]
    fn mincut_monotone_under_demand_growth(
        g in graph_strategy(6),
        picks in proptest::collection::vec((any::<proptest::sample::Index>(), any::<proptest::sample::Index>()), 1..4),
    ) {
        let n = g.vertex_count();
        let pairs: Vec<(usize, usize)> = picks
            .iter()
            .map(|(a, b)| (a.index(n), b.index(n)))
            .filter(|(a, b)| a != b)
            .collect();
        prop_assume!(pairs.len() >= 2);
        let small = DemandGraph::explicit(&pairs[..1], false).unwrap();
        let large = DemandGraph::explicit(&pairs, false).unwrap();
        let lo = mincut_oracle(&g, &small).unwrap().value;
        let hi = mincut_oracle(&g, &large).unwrap().value;
        prop_assert!(lo <= hi);
    }

    #[test]
    fn gomory_hu_tree_flow_equivalent(g in graph_strategy(8)) {
        let n = g.vertex_count();
        let tree = build_gh_tree(&g).unwrap();
        let mut distinct = std::collections::BTreeSet::new();
        for s in 0..n {
            for t in s + 1..n {
                let direct = st_mincut(&g, s, t).unwrap().value;
                prop_assert_eq!(tree.tree_mincut(s, t).unwrap(), direct.clone());
                distinct.insert(direct);
            }
        }
        prop_assert!(distinct.len() < n);
        let summary = distinct_pair_values(&g).unwrap();
        prop_assert_eq!(summary.count, distinct.len());
    }

    #[test]
    fn scaling_scales_values_and_preserves_tie_break(
        g in graph_strategy(6),
        c in 2u64..9,
        picks in proptest::collection::vec((any::<proptest::sample::Index>(), any::<proptest::sample::Index>()), 1..3),
    ) {
        let n = g.vertex_count();
        let pairs: Vec<(usize, usize)> = picks
            .iter()
            .map(|(a, b)| (a.index(n), b.index(n)))
            .filter(|(a, b)| a != b)
            .collect();
        prop_assume!(!pairs.is_empty());
        let d = DemandGraph::explicit(&pairs, false).unwrap();
        let scaled = WeightedGraph::new(
            n,
            g.edges().iter().map(|e| (e.u, e.v, &e.w * c)),
            false,
        )
        .unwrap();
        let base = mincut_oracle(&g, &d).unwrap();
        let big = mincut_oracle(&scaled, &d).unwrap();
        prop_assert_eq!(big.value, &base.value * c);
        prop_assert_eq!(big.partition, base.partition);
    }
}

/// Exhaustive cross-check at a fixed size: every (A, B) with sides
/// of size at most 2 on n = 8 graphs, max-flow route against the
/// enumeration oracle.
#[test]
fn groupcut_equals_oracle_exhaustive_n8() {
    for seed in [91u64, 92] {
        let g = random_connected(8, 40, seed);
        let verts: Vec<usize> = (0..8).collect();
        for a_size in 1..=2usize {
            for a in cutlab::combin::combinations_of(&verts, a_size) {
                let rest: Vec<usize> = verts.iter().copied().filter(|v| !a.contains(v)).collect();
                for b_size in 1..=2usize {
                    for b in cutlab::combin::combinations_of(&rest, b_size) {
                        let d = DemandGraph::bipartite(&a, &b, false).unwrap();
                        let fast = groupcut(&g, &a, &b).unwrap();
                        let slow = mincut_oracle(&g, &d).unwrap();
                        assert_eq!(fast.value, slow.value, "seed {seed} A={a:?} B={b:?}");
                    }
                }
            }
        }
    }
}

/// All 2-partition cut values of a connected perturbed graph are
/// pairwise distinct, checked exhaustively at n = 10.
#[test]
fn perturbed_two_partition_values_distinct_n10() {
    for seed in 0..5u64 {
        let g = random_connected(10, 25, seed);
        let pg = g.perturbed().unwrap();
        let mut seen = std::collections::BTreeSet::new();
        for p in Bipartitions::new(10) {
            assert!(
                seen.insert(pg.cut_value(&p).unwrap()),
                "seed {seed}: duplicate perturbed 2-partition value"
            );
        }
    }
}

/// The 2-partition reference used by the acceptance suite for large
/// graphs agrees with the full-partition oracle wherever both run.
#[test]
fn bipartition_reference_matches_full_oracle() {
    for seed in 0..10u64 {
        let n = 4 + (seed as usize) % 4;
        let g = random_connected(n, 30, seed);
        let verts: Vec<usize> = (0..n).collect();
        for a in cutlab::combin::combinations_of(&verts, 2) {
            let rest: Vec<usize> = verts.iter().copied().filter(|v| !a.contains(v)).collect();
            for b in cutlab::combin::combinations_of(&rest, 2) {
                let d = DemandGraph::bipartite(&a, &b, false).unwrap();
                let two_block = Bipartitions::new(n)
                    .filter(|p| agrees(p, &d))
                    .map(|p| g.cut_value(&p).unwrap())
                    .min()
                    .unwrap();
                let full = mincut_oracle(&g, &d).unwrap().value;
                assert_eq!(two_block, full, "seed {seed}, A={a:?}, B={b:?}");
            }
        }
    }
}
