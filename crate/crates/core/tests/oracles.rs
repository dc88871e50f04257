mod common;

use std::collections::BTreeSet;

use itertools::Itertools;
use kneser_core::canon::Canonize;
use kneser_core::kneser::{
    augment_tree_lambda, direct_eval, kneser_psum, lambda_t, lambda_t_tilde, pseries_eval, BlockValues, PClass,
};
use kneser_core::tree_invariants::{min_degree_sequence, min_rooted_degree_sequence, minimum_leaves, profile_of};
use kneser_core::{enumerate_graphs, enumerate_trees, Lambda, SimpleGraph};

use common::*;

#[test]
fn tree_enumeration_matches_prufer_classes() {
    for n in 1..=9 {
        let ours: BTreeSet<String> = enumerate_trees(n).unwrap().iter().map(ahu_code).collect();
        assert_eq!(ours, prufer_tree_classes(n), "n = {n}");
        assert_eq!(ours.len(), TREE_COUNTS[n - 1]);
    }
    // 10^8 Prüfer sequences is too many; check the count and distinctness
    let trees = enumerate_trees(10).unwrap();
    assert_eq!(trees.len(), TREE_COUNTS[9]);
    let codes: BTreeSet<String> = trees.iter().map(ahu_code).collect();
    assert_eq!(codes.len(), trees.len());
}

#[test]
fn graph_enumeration_counts() {
    for n in 1..=5 {
        assert_eq!(enumerate_graphs(n).unwrap().len(), GRAPH_COUNTS[n - 1]);
    }
}

#[test]
fn canonical_forms_agree_with_tree_codes() {
    for n in 2..=8 {
        let mut by_form = std::collections::BTreeMap::new();
        for t in prufer_trees(n) {
            let code = ahu_code(&t);
            let form = t.canonical_form().unwrap();
            assert_eq!(by_form.entry(form).or_insert_with(|| code.clone()), &code);
        }
        assert_eq!(by_form.len(), TREE_COUNTS[n - 1]);
    }
}

#[test]
fn greedy_profile_matches_brute_force() {
    for n in 1..=7 {
        for t in enumerate_trees(n).unwrap() {
            for root in 0..n {
                let (p, order) = min_rooted_degree_sequence(&t, root).unwrap();
                assert_eq!(p.0, brute_force_rooted_profile(&t, root));
                assert_eq!(profile_of(&t, &order.sequence), p);
            }
        }
    }
}

#[test]
fn chromatic_polynomial_specialization() {
    for n in 1..=5 {
        for g in enumerate_graphs(n).unwrap() {
            let x = kneser_psum(&g, 1).unwrap();
            for m in 1..=6 {
                let ones = BlockValues::constant(1, m, 1i128).unwrap();
                let expected = chromatic_polynomial(&g, m as i128);
                assert_eq!(direct_eval(&g, &ones).unwrap(), expected);
                assert_eq!(pseries_eval(&x, &ones).unwrap(), expected);
            }
        }
    }
}

#[test]
fn both_routes_match_the_naive_sum() {
    // distinct, non-symmetric integer values per block
    let value = |b: &[usize]| -> i128 { b.iter().fold(1, |acc, &x| acc * 7 + x as i128 * x as i128) - 3 };
    for n in 1..=3 {
        for g in enumerate_graphs(n).unwrap() {
            for k in 1..=2 {
                let x = kneser_psum(&g, k).unwrap();
                for m in 1..=5 {
                    let values = BlockValues::from_fn(k, m, value).unwrap();
                    let expected = naive_homomorphism_sum(&g, values.blocks(), value);
                    assert_eq!(direct_eval(&g, &values).unwrap(), expected, "direct k={k} m={m}");
                    assert_eq!(pseries_eval(&x, &values).unwrap(), expected, "series k={k} m={m}");
                }
            }
        }
    }
}

fn bijection_count(t: &SimpleGraph, blocks: &[Vec<usize>]) -> i64 {
    (0..blocks.len())
        .permutations(blocks.len())
        .filter(|p| {
            t.edges()
                .iter()
                .all(|&(u, v)| blocks[p[u]].iter().any(|x| blocks[p[v]].contains(x)))
        })
        .count() as i64
}

#[test]
fn tree_class_coefficients_count_admissible_bijections() {
    for n in 1..=6 {
        for t in enumerate_trees(n).unwrap() {
            let x = kneser_psum(&t, 2).unwrap();
            let sign = if n % 2 == 1 { 1 } else { -1 };
            for class in lambda_t(&t).unwrap() {
                let blocks = class.tree_form().unwrap().blocks().to_vec();
                assert_eq!(x.coefficient(&class), sign * bijection_count(&t, &blocks));
            }
        }
    }
}

#[test]
fn small_series() {
    let k1 = kneser_psum(&SimpleGraph::empty(1), 2).unwrap();
    assert_eq!(k1.to_json(), r#"{"n":1,"k":2,"terms":[{"class":["2:[[0,1]]"],"coeff":1}]}"#);

    // p_1^2 - p_2
    let p2 = kneser_psum(&SimpleGraph::path(2), 1).unwrap();
    assert_eq!(
        p2.to_json(),
        r#"{"n":2,"k":1,"terms":[{"class":["1:[[0]]","1:[[0]]"],"coeff":1},{"class":["1:[[0],[0]]"],"coeff":-1}]}"#
    );

    let p3 = kneser_psum(&SimpleGraph::path(3), 2).unwrap();
    let class = |g: SimpleGraph| PClass::connected(g.canonical_form().unwrap()).unwrap();
    assert_eq!(p3.coefficient(&class(SimpleGraph::path(4))), 2);
    assert_eq!(p3.coefficient(&class(SimpleGraph::star(3))), 6);
}

#[test]
fn example_tree_profile() {
    let t = example_tree();
    let expected = vec![1, 3, 1, 3, 1, 2, 4, 1, 1, 3, 1, 1];
    assert_eq!(min_degree_sequence(&t).unwrap().0, expected);
    // a_11 is a minimum leaf, and the listed sequence from it is minimum
    assert!(minimum_leaves(&t).unwrap().contains(&10));
    let listed = [11, 8, 12, 3, 7, 1, 2, 5, 6, 4, 9, 10].map(|a| a - 1);
    let dist = t.distances(10);
    assert!(listed.windows(2).all(|w| dist[w[0]] <= dist[w[1]]));
    assert_eq!(profile_of(&t, &listed).0, expected);
    assert_eq!(min_rooted_degree_sequence(&t, 10).unwrap().0 .0, expected);
}

#[test]
fn small_profiles() {
    assert_eq!(min_degree_sequence(&SimpleGraph::path(5)).unwrap().0, vec![1, 2, 2, 2, 1]);
    assert_eq!(min_degree_sequence(&SimpleGraph::star(4)).unwrap().0, vec![1, 4, 1, 1, 1]);
}

#[test]
fn phi_example() {
    let t = phi_example_tree();
    let shown = phi_example_blocks();
    let shown_lambda = Lambda::from_pairs(&shown).unwrap();

    // the shown order a_1, ..., a_12 is a minimum rooted sequence from a minimum leaf
    let order: Vec<usize> = (0..12).collect();
    assert_eq!(profile_of(&t, &order), min_degree_sequence(&t).unwrap());
    assert!(minimum_leaves(&t).unwrap().contains(&0));

    // the shown assignment is admissible, and its tree is T plus a leaf
    for (u, v) in t.edges() {
        let (a, b) = (shown[u], shown[v]);
        assert!([a.0, a.1].iter().any(|x| *x == b.0 || *x == b.1));
    }
    let shown_tree = shown_lambda.to_multigraph().unwrap().to_simple().unwrap();
    assert!(shown_tree.is_tree());

    let ours = augment_tree_lambda(&t).unwrap();
    let ours_tree = ours.to_multigraph().unwrap().to_simple().unwrap();
    // 13 vertices is past the canonical-form cap, so compare tree codes
    assert_eq!(ahu_code(&ours_tree), ahu_code(&shown_tree));
    for (u, v) in t.edges() {
        assert!(ours.blocks()[u].iter().any(|x| ours.blocks()[v].contains(x)));
    }
    // parent-child blocks: {parent position, own position}, with 0 above the root
    let mut seen_max = BTreeSet::new();
    for b in ours.blocks() {
        assert!(b[0] < b[1]);
        assert!(seen_max.insert(b[1]));
    }
    assert_eq!(seen_max, (1..=12).collect());
}

#[test]
fn augmented_class_is_minimal() {
    for n in 1..=9 {
        for t in enumerate_trees(n).unwrap() {
            let (tilde, profile) = lambda_t_tilde(&t).unwrap();
            assert_eq!(profile, min_degree_sequence(&t).unwrap().with_pendant_root());
            let aug = augment_tree_lambda(&t).unwrap();
            assert!(tilde.contains(&PClass::of_lambda(&aug).unwrap()));
        }
    }
    assert!(matches!(
        lambda_t_tilde(&example_tree()),
        Err(kneser_core::Error::CapExceeded { .. })
    ));
}

#[test]
fn five_vertex_chromatic_collision() {
    let report = kneser_core::catalog::collide(5, 1, 3, 9).unwrap();
    assert_eq!(report.graphs, GRAPH_COUNTS.iter().sum::<usize>());
    assert_eq!(report.confirmed.len(), 1);
    let pair = &report.confirmed[0];
    assert!(!pair.first_is_tree && !pair.second_is_tree);
    let a = kneser_core::parse_graph6(&pair.first).unwrap();
    let b = kneser_core::parse_graph6(&pair.second).unwrap();
    assert_ne!(a.canonical_form().unwrap(), b.canonical_form().unwrap());
    // equal weighted colouring sums at unrelated weights
    let value = |s: &[usize]| -> i128 { [5, -2, 11, 3, 7][s[0] - 1] };
    let blocks: Vec<Vec<usize>> = (1..=5).map(|a| vec![a]).collect();
    assert_eq!(naive_homomorphism_sum(&a, &blocks, value), naive_homomorphism_sum(&b, &blocks, value));
    for m in 1..=6 {
        assert_eq!(chromatic_polynomial(&a, m), chromatic_polynomial(&b, m));
    }

    assert!(kneser_core::catalog::collide(5, 2, 3, 9).unwrap().confirmed.is_empty());
}
