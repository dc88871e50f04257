//! Tree classes in the support of the `k = 2` invariant of a tree.

use std::collections::BTreeSet;

use crate::canon::{CanonicalForm, Canonize, CANON_VERTEX_CAP};
use crate::enumerate::enumerate_trees;
use crate::error::{Error, Result};
use crate::graph::{check_cap, Lambda, SimpleGraph};
use crate::tree_invariants::{min_degree_sequence, min_rooted_degree_sequence, minimum_leaves, DegreeProfile};

use super::admissible::is_admissible;
use super::series::PClass;

/// Largest tree size accepted by [`lambda_t`]; the candidate classes have one
/// more vertex and must stay within the canonical-form cap.
pub const LAMBDA_T_CAP: usize = CANON_VERTEX_CAP - 1;

fn require_tree(g: &SimpleGraph) -> Result<()> {
    if g.is_tree() {
        Ok(())
    } else {
        Err(Error::NotATree)
    }
}

/// The simple tree represented by a connected `k = 2` tree class.
pub fn tree_of_form(form: &CanonicalForm) -> Result<SimpleGraph> {
    form.to_multigraph()
        .filter(|m| m.is_tree())
        .and_then(|m| m.to_simple())
        .ok_or_else(|| Error::NotATreeClass(form.to_string()))
}

/// Tree classes on `n + 1` vertices admissible by the tree `g`.
///
/// Only the full edge set of a tree gives a connected spanning subgraph, so
/// these are exactly the tree classes of the support. They are found by
/// testing every tree on `n + 1` vertices rather than by expanding the series.
pub fn lambda_t(g: &SimpleGraph) -> Result<BTreeSet<PClass>> {
    require_tree(g)?;
    check_cap("tree size", g.n(), LAMBDA_T_CAP)?;
    let mut out = BTreeSet::new();
    for candidate in enumerate_trees(g.n() + 1)? {
        let form = candidate.canonical_form()?;
        if is_admissible(&form.to_lambda(), g)?.is_some() {
            out.insert(PClass::connected(form)?);
        }
    }
    Ok(out)
}

/// Profile `r(G_λ̄)` of a tree class.
pub fn class_profile(class: &PClass) -> Result<DegreeProfile> {
    let form = class
        .tree_form()
        .ok_or_else(|| Error::NotATreeClass(format!("{:?}", class.components())))?;
    min_degree_sequence(&tree_of_form(form)?)
}

/// Restricts a set of tree classes to those of lexicographically minimal profile.
pub fn minimal_profile_classes(
    classes: &BTreeSet<PClass>,
) -> Result<(BTreeSet<PClass>, DegreeProfile)> {
    let mut best: Option<DegreeProfile> = None;
    let mut chosen = BTreeSet::new();
    for class in classes {
        let p = class_profile(class)?;
        match best.as_ref().map(|b| p.cmp(b)) {
            Some(std::cmp::Ordering::Greater) => {}
            Some(std::cmp::Ordering::Equal) => {
                chosen.insert(class.clone());
            }
            _ => {
                best = Some(p);
                chosen = BTreeSet::from([class.clone()]);
            }
        }
    }
    let best = best.ok_or(Error::EmptyClassSet)?;
    Ok((chosen, best))
}

/// `Λ̃_t`: the classes of `Λ_t` with minimal profile, and that profile.
pub fn lambda_t_tilde(g: &SimpleGraph) -> Result<(BTreeSet<PClass>, DegreeProfile)> {
    minimal_profile_classes(&lambda_t(g)?)
}

/// Hangs a new leaf `0` off a minimum leaf of `t`.
///
/// The tree is walked in a minimum rooted vertex sequence `a_1, ..., a_n`
/// from its label-smallest minimum leaf, and vertex `a_i` receives the block
/// `{i_p, i}` where `a_{i_p}` is its parent (`i_p = 0` for the root). The
/// returned `λ` lists the blocks by vertex: `blocks()[v]` is the block of `v`.
pub fn augment_tree_lambda(t: &SimpleGraph) -> Result<Lambda> {
    require_tree(t)?;
    let leaf = minimum_leaves(t)?[0];
    let (_, order) = min_rooted_degree_sequence(t, leaf)?;
    let pos = order.positions();
    let blocks = (0..t.n())
        .map(|v| {
            let i = pos[v] + 1;
            let ip = order.parent[v].map_or(0, |p| pos[p] + 1);
            vec![ip, i]
        })
        .collect();
    Lambda::new(2, blocks)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tree_class(g: &SimpleGraph) -> PClass {
        PClass::connected(g.canonical_form().unwrap()).unwrap()
    }

    #[test]
    fn small_lambda_t() {
        assert_eq!(
            lambda_t(&SimpleGraph::empty(1)).unwrap(),
            BTreeSet::from([tree_class(&SimpleGraph::path(2))])
        );
        assert_eq!(
            lambda_t(&SimpleGraph::path(2)).unwrap(),
            BTreeSet::from([tree_class(&SimpleGraph::path(3))])
        );
        assert_eq!(
            lambda_t(&SimpleGraph::path(3)).unwrap(),
            BTreeSet::from([
                tree_class(&SimpleGraph::path(4)),
                tree_class(&SimpleGraph::star(3))
            ])
        );
        assert_eq!(lambda_t(&SimpleGraph::complete(3)), Err(Error::NotATree));
    }

    #[test]
    fn small_lambda_t_tilde() {
        let (classes, profile) = lambda_t_tilde(&SimpleGraph::path(3)).unwrap();
        assert_eq!(classes, BTreeSet::from([tree_class(&SimpleGraph::path(4))]));
        assert_eq!(profile.0, vec![1, 2, 2, 1]);
        assert!(DegreeProfile(vec![1, 2, 2, 1]) < DegreeProfile(vec![1, 3, 1, 1]));

        let (classes, profile) = lambda_t_tilde(&SimpleGraph::empty(1)).unwrap();
        assert_eq!(classes, BTreeSet::from([tree_class(&SimpleGraph::path(2))]));
        assert_eq!(profile.0, vec![1, 1]);

        let (_, profile) = lambda_t_tilde(&SimpleGraph::star(3)).unwrap();
        assert_eq!(profile.0, vec![1, 2, 3, 1, 1]);
    }

    #[test]
    fn augment_small_trees() {
        assert_eq!(
            augment_tree_lambda(&SimpleGraph::empty(1)).unwrap().blocks(),
            &[vec![0, 1]]
        );
        let lambda = augment_tree_lambda(&SimpleGraph::path(3)).unwrap();
        assert_eq!(lambda.blocks(), &[vec![0, 1], vec![1, 2], vec![2, 3]]);
        let g = lambda.to_multigraph().unwrap().to_simple().unwrap();
        assert_eq!(g, SimpleGraph::path(4));
    }
}
