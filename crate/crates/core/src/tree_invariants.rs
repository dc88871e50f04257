//! Rooted vertex sequences and minimum degree sequences of trees.
//!
//! A rooted vertex sequence lists the vertices in non-decreasing distance from
//! the root. Its degree sequence is compared lexicographically; the smallest
//! one over all roots is the minimum degree sequence `r(T)`, and the roots
//! attaining it are the minimum leaves.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

/// A lexicographically ordered degree sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DegreeProfile(pub Vec<usize>);

impl DegreeProfile {
    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `(1, r_1 + 1, r_2, ..., r_n)`: the profile obtained by hanging a new
    /// leaf off the root. When the root is a leaf this is `(1, 2, r_2, ..., r_n)`.
    pub fn with_pendant_root(&self) -> DegreeProfile {
        let mut out = Vec::with_capacity(self.0.len() + 1);
        out.push(1);
        out.push(self.0.first().map_or(0, |d| d + 1));
        out.extend_from_slice(self.0.get(1..).unwrap_or_default());
        DegreeProfile(out)
    }
}

impl fmt::Display for DegreeProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{d}")?;
        }
        f.write_str(")")
    }
}

/// An ordering of the vertices by distance from `root`, with each non-root
/// vertex's unique earlier neighbour.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedOrder {
    pub sequence: Vec<usize>,
    pub root: usize,
    /// `parent[v]` for every vertex; `None` exactly at the root.
    pub parent: Vec<Option<usize>>,
}

impl RootedOrder {
    /// Position of every vertex in the sequence.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.sequence.len()];
        for (i, &v) in self.sequence.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }
}

fn require_tree(t: &SimpleGraph) -> Result<()> {
    if t.is_tree() {
        Ok(())
    } else {
        Err(Error::NotATree)
    }
}

/// Degree profile of a vertex sequence, with the single-vertex tree mapped to `(0)`.
pub fn profile_of(t: &SimpleGraph, sequence: &[usize]) -> DegreeProfile {
    DegreeProfile(sequence.iter().map(|&v| t.degree(v)).collect())
}

/// The minimum rooted vertex sequence at `root`: breadth-first layers, each
/// sorted by ascending degree and then by label.
pub fn min_rooted_degree_sequence(
    t: &SimpleGraph,
    root: usize,
) -> Result<(DegreeProfile, RootedOrder)> {
    require_tree(t)?;
    if root >= t.n() {
        return Err(Error::VertexOutOfRange {
            vertex: root,
            n: t.n(),
        });
    }
    Ok(rooted_unchecked(t, root))
}

fn rooted_unchecked(t: &SimpleGraph, root: usize) -> (DegreeProfile, RootedOrder) {
    let n = t.n();
    let mut parent = vec![None; n];
    let mut sequence = Vec::with_capacity(n);
    let mut layer = vec![root];
    while !layer.is_empty() {
        sequence.extend_from_slice(&layer);
        let mut next = Vec::new();
        for &u in &layer {
            for &w in t.neighbors(u) {
                if w != root && parent[w].is_none() && parent[u] != Some(w) {
                    parent[w] = Some(u);
                    next.push(w);
                }
            }
        }
        next.sort_unstable_by_key(|&w| (t.degree(w), w));
        layer = next;
    }
    let profile = profile_of(t, &sequence);
    (
        profile,
        RootedOrder {
            sequence,
            root,
            parent,
        },
    )
}

/// Every vertex whose rooted profile is lexicographically minimal, ascending.
pub fn minimum_leaves(t: &SimpleGraph) -> Result<Vec<usize>> {
    require_tree(t)?;
    let profiles: Vec<DegreeProfile> = (0..t.n()).map(|v| rooted_unchecked(t, v).0).collect();
    let best = profiles.iter().min().expect("trees are nonempty");
    Ok((0..t.n()).filter(|&v| profiles[v] == *best).collect())
}

/// `r(T)`, the profile at any minimum leaf.
pub fn min_degree_sequence(t: &SimpleGraph) -> Result<DegreeProfile> {
    let leaf = minimum_leaves(t)?[0];
    Ok(rooted_unchecked(t, leaf).0)
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    /// The twelve-vertex tree with `a_i` stored as vertex `i - 1`:
    /// a1-a2, a1-a3, a2-a4, a2-a5, a2-a6, a3-a7, a3-a8, a4-a9, a4-a10,
    /// a8-a11, a8-a12.
    pub(crate) fn twelve_vertex_tree() -> SimpleGraph {
        let edges = [
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
        ];
        let edges: Vec<_> = edges.iter().map(|&(a, b)| (a - 1, b - 1)).collect();
        SimpleGraph::from_edges(12, &edges).unwrap()
    }

    /// All rooted vertex sequences at `root`, by brute force over permutations
    /// that start at the root and never decrease in distance.
    pub(crate) fn brute_force_min_profile(t: &SimpleGraph, root: usize) -> DegreeProfile {
        let dist: Vec<usize> = t.distances(root).into_iter().map(Option::unwrap).collect();
        let n = t.n();
        let mut best: Option<DegreeProfile> = None;
        fn go(
            t: &SimpleGraph,
            dist: &[usize],
            seq: &mut Vec<usize>,
            used: &mut [bool],
            best: &mut Option<DegreeProfile>,
        ) {
            if seq.len() == dist.len() {
                let p = profile_of(t, seq);
                if best.as_ref().is_none_or(|b| p < *b) {
                    *best = Some(p);
                }
                return;
            }
            let last = dist[*seq.last().unwrap()];
            for v in 0..dist.len() {
                if !used[v] && dist[v] >= last {
                    used[v] = true;
                    seq.push(v);
                    go(t, dist, seq, used, best);
                    seq.pop();
                    used[v] = false;
                }
            }
        }
        let mut used = vec![false; n];
        used[root] = true;
        go(t, &dist, &mut vec![root], &mut used, &mut best);
        best.unwrap()
    }

    #[test]
    fn twelve_vertex_tree_profile() {
        let t = twelve_vertex_tree();
        let (profile, order) = min_rooted_degree_sequence(&t, 10).unwrap();
        assert_eq!(profile.0, vec![1, 3, 1, 3, 1, 2, 4, 1, 1, 3, 1, 1]);
        assert_eq!(order.root, 10);
        assert_eq!(minimum_leaves(&t).unwrap(), vec![10, 11]);
        assert_eq!(
            min_degree_sequence(&t).unwrap().0,
            vec![1, 3, 1, 3, 1, 2, 4, 1, 1, 3, 1, 1]
        );
    }

    #[test]
    fn paths_and_stars() {
        let p5 = SimpleGraph::path(5);
        assert_eq!(min_rooted_degree_sequence(&p5, 0).unwrap().0 .0, vec![1, 2, 2, 2, 1]);
        assert_eq!(minimum_leaves(&p5).unwrap(), vec![0, 4]);
        assert_eq!(min_degree_sequence(&p5).unwrap().0, vec![1, 2, 2, 2, 1]);

        let k13 = SimpleGraph::star(3);
        assert_eq!(min_rooted_degree_sequence(&k13, 1).unwrap().0 .0, vec![1, 3, 1, 1]);
        assert_eq!(minimum_leaves(&k13).unwrap(), vec![1, 2, 3]);
        assert_eq!(min_degree_sequence(&k13).unwrap().0, vec![1, 3, 1, 1]);
        assert_eq!(min_degree_sequence(&SimpleGraph::star(4)).unwrap().0, vec![1, 4, 1, 1, 1]);
    }

    #[test]
    fn single_vertex() {
        let k1 = SimpleGraph::empty(1);
        assert_eq!(min_degree_sequence(&k1).unwrap().0, vec![0]);
        assert_eq!(minimum_leaves(&k1).unwrap(), vec![0]);
    }

    #[test]
    fn rejects_non_trees_and_bad_roots() {
        assert_eq!(
            min_degree_sequence(&SimpleGraph::complete(3)),
            Err(Error::NotATree)
        );
        assert_eq!(
            min_rooted_degree_sequence(&SimpleGraph::path(3), 3).map(|_| ()),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
    }

    #[test]
    fn rooted_order_is_consistent() {
        let t = twelve_vertex_tree();
        for root in 0..t.n() {
            let (_, order) = min_rooted_degree_sequence(&t, root).unwrap();
            let pos = order.positions();
            let dist = t.distances(root);
            for w in order.sequence.windows(2) {
                assert!(dist[w[0]] <= dist[w[1]]);
            }
            for v in 0..t.n() {
                match order.parent[v] {
                    None => assert_eq!(v, root),
                    Some(p) => {
                        assert!(t.has_edge(p, v));
                        assert!(pos[p] < pos[v]);
                    }
                }
            }
        }
    }

    #[test]
    fn greedy_matches_brute_force_on_twelve_vertex_tree_leaves() {
        let t = twelve_vertex_tree();
        for root in [10, 0, 4] {
            assert_eq!(
                min_rooted_degree_sequence(&t, root).unwrap().0,
                brute_force_min_profile(&t, root)
            );
        }
    }
}
