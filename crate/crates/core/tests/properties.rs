use std::collections::HashSet;

use itertools::Itertools;
use num_bigint::BigUint;
use proptest::prelude::*;

use hyperforest::counting::{
    code_space_cardinality, count_forests, count_hypercycles, count_rooted_hypertrees, hypercycle_class_count,
};
use hyperforest::oracle::{enumerate_forests, enumerate_hypercycles, DEFAULT_BUDGET};
use hyperforest::rank::code_space_size;
use hyperforest::{
    component_decomposition, decode_code, encode_forest, leaf_blocks, rank_code, unrank_code, validate_forest,
    ForestSampler, ForestShape, HypercycleForm, Hypergraph,
};

fn shapes() -> impl Strategy<Value = ForestShape> {
    (2u32..6, 0u32..25, 0u32..6).prop_map(|(b, s, k)| ForestShape::new(b, s, k).unwrap())
}

/// Shapes with n ≤ 9 whose forests the oracle can list quickly.
fn small_shapes() -> Vec<ForestShape> {
    let mut out = Vec::new();
    for b in 2..=9u32 {
        for s in 0..=8u32 {
            for k in 0..=8u32 {
                let shape = ForestShape::new(b, s, k).unwrap();
                if shape.n() <= 9 && count_forests(b, s, k).unwrap() <= BigUint::from(200_000u32) {
                    out.push(shape);
                }
            }
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn sampled_forests_round_trip(shape in shapes(), seed in any::<u64>()) {
        let forest = ForestSampler::new(shape, seed).next_forest().unwrap();
        prop_assert!(validate_forest(forest.as_hypergraph()).is_valid());
        let code = encode_forest(&forest).unwrap();
        prop_assert_eq!(&decode_code(&code).unwrap(), &forest);
        prop_assert_eq!(encode_forest(&decode_code(&code).unwrap()).unwrap(), code);
    }

    #[test]
    fn decoded_forests_have_k_plus_one_components(shape in shapes(), seed in any::<u64>()) {
        let forest = ForestSampler::new(shape, seed).next_forest().unwrap();
        let report = component_decomposition(forest.as_hypergraph()).unwrap();
        prop_assert_eq!(report.components.len() as u32, shape.root_count());
        let total_excess: i64 = report.components.iter().map(|c| c.excess).sum();
        prop_assert_eq!(total_excess, -i64::from(shape.root_count()));
        prop_assert_eq!(
            i64::from(shape.s()) * i64::from(shape.b() - 1) - i64::from(shape.n()),
            -i64::from(shape.root_count())
        );
    }

    #[test]
    fn leaf_blocks_are_disjoint_and_present(shape in shapes(), seed in any::<u64>()) {
        let forest = ForestSampler::new(shape, seed).next_forest().unwrap();
        let leaves = leaf_blocks(&forest);
        prop_assert_eq!(leaves.is_empty(), shape.s() == 0);
        let mut seen = HashSet::new();
        for leaf in &leaves {
            prop_assert_eq!(leaf.block.len() as u32, shape.b() - 1);
            for &v in &leaf.block {
                prop_assert!(seen.insert(v));
                prop_assert!(!forest.is_root(v));
            }
        }
        prop_assert!(leaves.windows(2).all(|w| w[0].key() < w[1].key()));
    }

    #[test]
    fn rank_unrank_round_trip(shape in shapes(), seed in any::<u64>()) {
        let code = ForestSampler::new(shape, seed).next_code();
        let index = rank_code(&code).unwrap();
        prop_assert!(index < code_space_size(shape));
        prop_assert_eq!(unrank_code(&index, shape).unwrap(), code);
    }

    #[test]
    fn components_partition_vertices(n in 1u32..12, b in 2u32..4, picks in prop::collection::vec(any::<prop::sample::Index>(), 0..6)) {
        prop_assume!(b <= n);
        let candidates: Vec<Vec<u32>> = (1..=n).combinations(b as usize).collect();
        let edges: Vec<Vec<u32>> = picks.iter().map(|i| i.get(&candidates).clone()).collect();
        let h = Hypergraph::new(n, b, edges, vec![1]);
        let report = component_decomposition(&h).unwrap();
        let mut all: Vec<u32> = report.components.iter().flat_map(|c| c.vertices.clone()).collect();
        all.sort_unstable();
        prop_assert_eq!(all, (1..=n).collect::<Vec<_>>());
        for c in &report.components {
            let weight = c.edges.len() as i64 * (i64::from(b) - 1);
            prop_assert_eq!(c.excess, weight - c.vertices.len() as i64);
        }
    }
}

#[test]
fn every_small_forest_round_trips_and_has_a_leaf() {
    for shape in small_shapes() {
        let forests = enumerate_forests(shape.b(), shape.s(), shape.k(), DEFAULT_BUDGET).unwrap();
        assert_eq!(BigUint::from(forests.len()), count_forests(shape.b(), shape.s(), shape.k()).unwrap());
        let mut codes = HashSet::with_capacity(forests.len());
        for forest in &forests {
            if shape.s() > 0 {
                assert!(!leaf_blocks(forest).is_empty(), "{shape}: no leaf in {forest:?}");
            }
            let code = encode_forest(forest).unwrap();
            assert_eq!(&decode_code(&code).unwrap(), forest);
            codes.insert(code);
        }
        assert_eq!(codes.len(), forests.len(), "{shape}: encode is not injective");
    }
}

#[test]
fn formulas_are_integral_on_the_grid() {
    for b in 2..=6u32 {
        for s in 0..=12u32 {
            for k in 0..=6u32 {
                let shape = ForestShape::new(b, s, k).unwrap();
                let count = count_forests(b, s, k).unwrap();
                if s >= 1 {
                    assert_eq!(count, code_space_cardinality(shape), "{shape}");
                }
                assert_eq!(count, code_space_size(shape), "{shape}");
            }
            if s >= 1 {
                assert_eq!(count_forests(b, s, 0).unwrap(), count_rooted_hypertrees(b, s).unwrap());
            }
            if s >= 2 {
                let closed = count_hypercycles(b, s, HypercycleForm::Closed).unwrap();
                assert_eq!(closed, count_hypercycles(b, s, HypercycleForm::Sum).unwrap());
                for j in 2..=s {
                    hypercycle_class_count(b, s, j).unwrap();
                }
            }
        }
    }
}

/// Connected graphs on `n` labelled vertices with `n` edges, counted by a
/// depth-first search over edge subsets of the complete graph.
fn unicyclic_graphs(n: u32) -> usize {
    let pairs: Vec<(u32, u32)> = (1..=n).tuple_combinations().collect();
    pairs
        .iter()
        .combinations(n as usize)
        .filter(|edges| {
            let mut seen = vec![false; n as usize + 1];
            let mut stack = vec![1u32];
            seen[1] = true;
            while let Some(v) = stack.pop() {
                for &&(a, b) in edges {
                    let w = if a == v { b } else if b == v { a } else { continue };
                    if !seen[w as usize] {
                        seen[w as usize] = true;
                        stack.push(w);
                    }
                }
            }
            seen[1..].iter().all(|&x| x)
        })
        .count()
}

#[test]
fn graph_hypercycles_are_unicyclic_graphs() {
    for (n, known) in [(3u32, 1usize), (4, 15), (5, 222)] {
        let oracle = enumerate_hypercycles(2, n, false, DEFAULT_BUDGET).unwrap().len();
        assert_eq!(oracle, unicyclic_graphs(n));
        assert_eq!(oracle, known);
    }
}
