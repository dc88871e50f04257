//! Rebuilding a tree from the tree classes of its `k = 2` invariant.
//!
//! Among the tree classes, those of lexicographically minimal profile are
//! the original tree with an extra leaf hung off one of its minimum leaves.
//! Deleting a minimum leaf of such a class gives the tree back.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Lambda, SimpleGraph};
use crate::graph6::write_graph6;
use crate::kneser::{is_admissible, minimal_profile_classes, tree_of_form, AdmissibleWitness, PClass, PSeries};
use crate::tree_invariants::{min_rooted_degree_sequence, minimum_leaves};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReconstructionResult {
    pub tree: SimpleGraph,
    pub source_class: PClass,
    /// Label, in the class representative, of the deleted minimum leaf.
    pub removed_leaf: usize,
    /// `witness[v]` is the vertex of `tree` matched to `v` in the input graph.
    pub witness: Option<Vec<usize>>,
}

/// JSON form of a [`ReconstructionResult`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReconstructionJson {
    pub graph6: String,
    pub class: String,
    pub removed_leaf: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Vec<usize>>,
}

impl ReconstructionResult {
    pub fn to_json(&self) -> ReconstructionJson {
        ReconstructionJson {
            graph6: write_graph6(&self.tree),
            class: self
                .source_class
                .components()
                .first()
                .map(ToString::to_string)
                .unwrap_or_default(),
            removed_leaf: self.removed_leaf,
            witness: self.witness.clone(),
        }
    }
}

fn check_tree_classes(classes: &BTreeSet<PClass>) -> Result<()> {
    if classes.is_empty() {
        return Err(Error::EmptyClassSet);
    }
    for c in classes {
        if c.tree_form().is_none() {
            let names: Vec<String> = c.components().iter().map(ToString::to_string).collect();
            return Err(Error::NotATreeClass(names.join(" ")));
        }
    }
    Ok(())
}

/// The canonically smallest class of minimal profile.
fn select(classes: &BTreeSet<PClass>) -> Result<PClass> {
    check_tree_classes(classes)?;
    let (tilde, _) = minimal_profile_classes(classes)?;
    Ok(tilde.into_iter().next().expect("nonempty"))
}

/// Deletes the label-smallest minimum leaf of the class's tree.
pub fn delete_minimum_leaf(class: &PClass) -> Result<ReconstructionResult> {
    let form = class
        .tree_form()
        .ok_or_else(|| Error::NotATreeClass(format!("{:?}", class.components())))?;
    let g = tree_of_form(form)?;
    let leaf = if g.n() == 2 {
        // The one-vertex tree: either end of the single edge.
        0
    } else {
        minimum_leaves(&g)?[0]
    };
    Ok(ReconstructionResult {
        tree: g.remove_vertex(leaf),
        source_class: class.clone(),
        removed_leaf: leaf,
        witness: None,
    })
}

/// Reconstructs a tree from its tree classes `Λ_t`.
pub fn reconstruct_from_lambda_t(classes: &BTreeSet<PClass>) -> Result<ReconstructionResult> {
    delete_minimum_leaf(&select(classes)?)
}

/// Tree classes of degree `n` in the support of a `k = 2` series.
pub fn tree_classes_of(x: &PSeries) -> Result<BTreeSet<PClass>> {
    if x.k() != 2 {
        return Err(Error::Schema(format!("expected a k = 2 series, got k = {}", x.k())));
    }
    let classes: BTreeSet<PClass> = x
        .terms()
        .keys()
        .filter(|c| c.tree_form().is_some_and(|f| f.n() == x.n() + 1))
        .cloned()
        .collect();
    if classes.is_empty() {
        return Err(Error::NoTreeClass);
    }
    Ok(classes)
}

/// Reconstructs a tree from the support of its `k = 2` invariant; the
/// coefficient values are never read.
pub fn reconstruct_from_invariant(x: &PSeries) -> Result<ReconstructionResult> {
    reconstruct_from_lambda_t(&tree_classes_of(x)?)
}

/// Relabels a tree class so that `0, 1, ..., n` is a minimum rooted vertex
/// sequence from its label-smallest minimum leaf. Block positions are kept,
/// so an assignment into `λ` stays valid for the result.
pub fn rooted_relabel(lambda: &Lambda) -> Result<Lambda> {
    let base: Vec<usize> = lambda.base().into_iter().collect();
    let g = lambda
        .to_multigraph()?
        .to_simple()
        .filter(SimpleGraph::is_tree)
        .ok_or_else(|| Error::NotATreeClass(format!("{:?}", lambda.blocks())))?;
    let leaf = minimum_leaves(&g)?[0];
    let (_, order) = min_rooted_degree_sequence(&g, leaf)?;
    let pos = order.positions();
    Ok(lambda.map_symbols(|x| pos[base.binary_search(&x).unwrap()]))
}

/// `τ_λ(v) = max φ(v)` for a rooted `λ`; fails if two vertices share a maximum.
pub fn tau_witness(
    lambda: &Lambda,
    g: &SimpleGraph,
    phi: &AdmissibleWitness,
) -> Result<Vec<usize>> {
    let tau: Vec<usize> = phi
        .assignment
        .iter()
        .map(|&b| *lambda.blocks()[b].iter().max().expect("nonempty block"))
        .collect();
    let mut owner = vec![None; lambda.base().last().map_or(0, |&x| x + 1)];
    for v in 0..g.n() {
        if let Some(u) = owner[tau[v]].replace(v) {
            return Err(Error::NonInjectiveWitness(u, v));
        }
    }
    Ok(tau)
}

/// Like [`reconstruct_from_lambda_t`], but also returns an explicit
/// isomorphism from `g` onto the reconstructed tree. The tree is given in the
/// rooted labeling, so vertex `i` there is symbol `i + 1` of the rooted class.
pub fn reconstruct_with_witness(
    classes: &BTreeSet<PClass>,
    g: &SimpleGraph,
) -> Result<ReconstructionResult> {
    let class = select(classes)?;
    let plain = delete_minimum_leaf(&class)?;
    let lambda = class.tree_form().expect("selected a tree class").to_lambda();
    let phi = is_admissible(&lambda, g)?
        .ok_or_else(|| Error::Schema("class is not admissible by the given graph".into()))?;
    let rooted = rooted_relabel(&lambda)?;
    let tau = tau_witness(&rooted, g, &phi)?;
    let full = rooted
        .to_multigraph()?
        .to_simple()
        .expect("tree classes are simple");
    Ok(ReconstructionResult {
        tree: full.remove_vertex(0),
        source_class: class,
        removed_leaf: plain.removed_leaf,
        witness: Some(tau.into_iter().map(|t| t - 1).collect()),
    })
}

/// True iff `map` is a bijection `V(g) → V(h)` preserving adjacency both ways.
pub fn is_isomorphism(g: &SimpleGraph, h: &SimpleGraph, map: &[usize]) -> bool {
    if g.n() != h.n() || map.len() != g.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    let mut seen = vec![false; h.n()];
    for &x in map {
        if x >= h.n() || std::mem::replace(&mut seen[x], true) {
            return false;
        }
    }
    g.edges().into_iter().all(|(u, v)| h.has_edge(map[u], map[v]))
}
