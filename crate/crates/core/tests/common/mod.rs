//! Fixtures and slow reference implementations shared by the integration
//! tests. Nothing here calls into the library's own isomorphism or counting
//! code.
#![allow(dead_code)]

use std::collections::BTreeSet;

use itertools::Itertools;
use kneser_core::SimpleGraph;

/// Free trees on 1..=10 vertices.
pub const TREE_COUNTS: [usize; 10] = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106];
/// Simple graphs on 1..=5 vertices.
pub const GRAPH_COUNTS: [usize; 5] = [1, 2, 4, 11, 34];

fn from_one_based(n: usize, edges: &[(usize, usize)]) -> SimpleGraph {
    let e: Vec<_> = edges.iter().map(|&(a, b)| (a - 1, b - 1)).collect();
    SimpleGraph::from_edges(n, &e).unwrap()
}

/// The 12-vertex tree of the rooted-sequence example, `a_i` as vertex `i - 1`.
pub fn example_tree() -> SimpleGraph {
    from_one_based(
        12,
        &[
            (1, 2),
            (1, 3),
            (2, 4),
            (2, 5),
            (2, 6),
            (3, 7),
            (3, 8),
            (4, 9),
            (4, 10),
            (8, 11),
            (8, 12),
        ],
    )
}

/// The 12-vertex tree of the `φ` construction example, `a_i` as vertex `i - 1`.
pub fn phi_example_tree() -> SimpleGraph {
    from_one_based(
        12,
        &[
            (6, 7),
            (6, 4),
            (7, 10),
            (7, 9),
            (4, 5),
            (4, 2),
            (7, 8),
            (10, 12),
            (10, 11),
            (2, 1),
            (2, 3),
        ],
    )
}

/// Blocks shown for `a_1, ..., a_12` in the `φ` example.
pub fn phi_example_blocks() -> Vec<(usize, usize)> {
    vec![
        (0, 1),
        (1, 2),
        (2, 3),
        (2, 4),
        (4, 5),
        (4, 6),
        (6, 7),
        (7, 8),
        (7, 9),
        (7, 10),
        (10, 11),
        (10, 12),
    ]
}

/// Decodes a Prüfer sequence over `0..n` into a labeled tree on `n ≥ 2` vertices.
pub fn prufer_decode(n: usize, seq: &[usize]) -> SimpleGraph {
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    SimpleGraph::from_edges(n, &edges).unwrap()
}

/// Every labeled tree on `n` vertices, via Prüfer sequences.
pub fn prufer_trees(n: usize) -> Vec<SimpleGraph> {
    match n {
        0 => vec![],
        1 => vec![SimpleGraph::empty(1)],
        _ => (0..n - 2)
            .map(|_| 0..n)
            .multi_cartesian_product()
            .map(|seq| prufer_decode(n, &seq))
            .chain(if n == 2 { Some(SimpleGraph::path(2)) } else { None })
            .collect(),
    }
}

fn rooted_code(t: &SimpleGraph, v: usize, parent: Option<usize>) -> String {
    let mut kids: Vec<String> = t
        .neighbors(v)
        .iter()
        .filter(|&&w| Some(w) != parent)
        .map(|&w| rooted_code(t, w, Some(v)))
        .collect();
    kids.sort();
    format!("({})", kids.concat())
}

/// Centre-rooted AHU code: equal exactly for isomorphic trees.
pub fn ahu_code(t: &SimpleGraph) -> String {
    let n = t.n();
    if n <= 2 {
        return rooted_code(t, 0, None);
    }
    let mut degree: Vec<usize> = (0..n).map(|v| t.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            removed[v] = true;
        }
        for &v in &layer {
            for &w in t.neighbors(v) {
                if !removed[w] {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    let centres: Vec<usize> = (0..n).filter(|&v| !removed[v]).collect();
    centres
        .iter()
        .map(|&c| rooted_code(t, c, None))
        .min()
        .unwrap()
}

/// Free trees on `n` vertices, one labeled representative per AHU code.
pub fn prufer_tree_classes(n: usize) -> BTreeSet<String> {
    prufer_trees(n).iter().map(ahu_code).collect()
}

/// Lex-min degree sequence over every vertex order starting at `root`
/// with non-decreasing distance from it.
pub fn brute_force_rooted_profile(t: &SimpleGraph, root: usize) -> Vec<usize> {
    let dist = t.distances(root);
    (0..t.n())
        .permutations(t.n())
        .filter(|p| p[0] == root && p.windows(2).all(|w| dist[w[0]] <= dist[w[1]]))
        .map(|p| p.iter().map(|&v| t.degree(v)).collect::<Vec<_>>())
        .min()
        .unwrap()
}

/// `χ(G, m)` by deletion–contraction on adjacency bitmasks.
pub fn chromatic_polynomial(g: &SimpleGraph, m: i128) -> i128 {
    let adj: Vec<u32> = (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0, |acc, &w| acc | 1 << w))
        .collect();
    dc(&adj, (1u32 << g.n()) - 1, m)
}

fn dc(adj: &[u32], alive: u32, m: i128) -> i128 {
    let edge = (0..adj.len())
        .filter(|&u| alive >> u & 1 == 1)
        .find_map(|u| {
            let nbrs = adj[u] & alive;
            (nbrs != 0).then(|| (u, nbrs.trailing_zeros() as usize))
        });
    let Some((u, v)) = edge else {
        return m.pow(alive.count_ones());
    };
    let mut deleted = adj.to_vec();
    deleted[u] &= !(1 << v);
    deleted[v] &= !(1 << u);
    // contract v into u
    let mut contracted = deleted.clone();
    contracted[u] |= deleted[v];
    for (w, row) in contracted.iter_mut().enumerate() {
        if deleted[v] >> w & 1 == 1 {
            *row |= 1 << u;
        }
    }
    contracted[u] &= !(1 << u);
    dc(&deleted, alive, m) - dc(&contracted, alive & !(1 << v), m)
}

/// `Σ_φ Π_v x_{φ(v)}` over every tuple of blocks, rejecting tuples that put
/// intersecting blocks on an edge; no pruning.
pub fn naive_homomorphism_sum(g: &SimpleGraph, blocks: &[Vec<usize>], value: impl Fn(&[usize]) -> i128) -> i128 {
    if g.n() == 0 {
        return 1;
    }
    (0..g.n())
        .map(|_| 0..blocks.len())
        .multi_cartesian_product()
        .filter(|c| {
            g.edges()
                .iter()
                .all(|&(u, v)| blocks[c[u]].iter().all(|x| !blocks[c[v]].contains(x)))
        })
        .map(|c| c.iter().map(|&b| value(&blocks[b])).product::<i128>())
        .sum()
}
