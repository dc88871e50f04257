//! Isomorphism-class enumeration of free trees, simple graphs and connected
//! multigraphs by single-step augmentation and canonical deduplication.

use std::collections::BTreeMap;

use crate::canon::{Canonize, CanonicalForm, CANON_VERTEX_CAP};
use crate::error::Result;
use crate::graph::{check_cap, Multigraph, SimpleGraph};

/// Largest `n` accepted by [`enumerate_trees`].
pub const TREE_CAP: usize = CANON_VERTEX_CAP;
/// Largest `n` accepted by [`enumerate_graphs`].
pub const GRAPH_CAP: usize = 7;

fn from_form(form: &CanonicalForm) -> SimpleGraph {
    form.to_multigraph()
        .and_then(|m| m.to_simple())
        .expect("forms of simple graphs are simple")
}

/// One representative per isomorphism class of free trees on `n` vertices,
/// labeled canonically and sorted by canonical form.
///
/// Every tree on `n + 1` vertices arises from one on `n` vertices by
/// attaching a leaf, so the classes are grown one vertex at a time.
pub fn enumerate_trees(n: usize) -> Result<Vec<SimpleGraph>> {
    check_cap("tree size", n, TREE_CAP)?;
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut level: BTreeMap<CanonicalForm, SimpleGraph> = BTreeMap::new();
    let k1 = SimpleGraph::empty(1);
    level.insert(k1.canonical_form()?, k1);
    for size in 2..=n {
        let mut next = BTreeMap::new();
        for tree in level.values() {
            for v in 0..tree.n() {
                let mut edges = tree.edges();
                edges.push((v, size - 1));
                let grown = SimpleGraph::from_edges(size, &edges)?;
                let form = grown.canonical_form()?;
                next.entry(form).or_insert_with_key(from_form);
            }
        }
        level = next;
    }
    Ok(level.into_values().collect())
}

/// One representative per isomorphism class of simple graphs on `n` vertices.
pub fn enumerate_graphs(n: usize) -> Result<Vec<SimpleGraph>> {
    check_cap("graph size", n, GRAPH_CAP)?;
    let empty = SimpleGraph::empty(n);
    let mut all: BTreeMap<CanonicalForm, SimpleGraph> = BTreeMap::new();
    let mut level: BTreeMap<CanonicalForm, SimpleGraph> = BTreeMap::new();
    level.insert(empty.canonical_form()?, empty);
    while !level.is_empty() {
        let mut next = BTreeMap::new();
        for g in level.values() {
            for u in 0..n {
                for v in u + 1..n {
                    if g.has_edge(u, v) {
                        continue;
                    }
                    let mut h = g.clone();
                    h.add_edge(u, v)?;
                    let form = h.canonical_form()?;
                    next.entry(form).or_insert_with_key(from_form);
                }
            }
        }
        all.append(&mut level);
        level = next;
    }
    Ok(all.into_values().collect())
}

/// All connected loopless multigraph classes with exactly `edges` edges
/// (`edges >= 1`), sorted by canonical form.
///
/// Removing a non-bridge edge, or a pendant edge when every edge is a
/// bridge, keeps a connected multigraph connected; so every class with
/// `e + 1` edges is an augmentation of one with `e` edges.
pub fn connected_multigraph_classes(edges: usize) -> Result<Vec<CanonicalForm>> {
    check_cap("edge count", edges, CANON_VERTEX_CAP - 1)?;
    if edges == 0 {
        return Ok(Vec::new());
    }
    let mut level: Vec<CanonicalForm> = vec![Multigraph::new(2, &[(0, 1)])?.canonical_form()?];
    for _ in 1..edges {
        let mut next = std::collections::BTreeSet::new();
        for form in &level {
            let m = form.to_multigraph().expect("pair blocks");
            let base = m.edge_list();
            let n = m.n();
            for u in 0..n {
                for v in u + 1..=n {
                    let mut e = base.clone();
                    e.push((u, v));
                    let grown = Multigraph::new(if v == n { n + 1 } else { n }, &e)?;
                    next.insert(grown.canonical_form()?);
                }
            }
        }
        level = next.into_iter().collect();
    }
    Ok(level)
}
