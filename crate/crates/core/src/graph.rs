//! Labeled simple graphs, loopless multigraphs, and block multisets.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::error::{Error, Result};

/// A simple graph on vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleGraph {
    adj: Vec<Vec<usize>>,
}

impl SimpleGraph {
    pub fn empty(n: usize) -> Self {
        SimpleGraph {
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph, rejecting loops, repeated edges and out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = SimpleGraph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.n();
        for w in [u, v] {
            if w >= n {
                return Err(Error::VertexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => Err(Error::DuplicateEdge(u.min(v), u.max(v))),
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                Ok(())
            }
        }
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        SimpleGraph::from_edges(n, &edges).expect("path edges are valid")
    }

    pub fn star(leaves: usize) -> Self {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        SimpleGraph::from_edges(leaves + 1, &edges).expect("star edges are valid")
    }

    pub fn complete(n: usize) -> Self {
        let mut g = SimpleGraph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v).expect("complete graph edges are valid");
            }
        }
        g
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, nbrs) in self.adj.iter().enumerate() {
            out.extend(nbrs.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Applies a relabeling: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> SimpleGraph {
        assert_eq!(perm.len(), self.n(), "permutation length");
        let edges: Vec<_> = self
            .edges()
            .into_iter()
            .map(|(u, v)| (perm[u], perm[v]))
            .collect();
        SimpleGraph::from_edges(self.n(), &edges).expect("relabeling preserves validity")
    }

    /// Spanning subgraph on the same vertex set with the chosen edges.
    pub fn spanning_subgraph(&self, edges: &[(usize, usize)]) -> Result<SimpleGraph> {
        for &(u, v) in edges {
            if !self.has_edge(u, v) {
                return Err(Error::Schema(format!("{{{u}, {v}}} is not an edge")));
            }
        }
        SimpleGraph::from_edges(self.n(), edges)
    }

    /// Deletes vertex `v`, shifting the labels above it down by one.
    pub fn remove_vertex(&self, v: usize) -> SimpleGraph {
        let shift = |w: usize| if w > v { w - 1 } else { w };
        let edges: Vec<_> = self
            .edges()
            .into_iter()
            .filter(|&(a, b)| a != v && b != v)
            .map(|(a, b)| (shift(a), shift(b)))
            .collect();
        SimpleGraph::from_edges(self.n() - 1, &edges).expect("vertex deletion preserves validity")
    }

    /// Vertex sets of the connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().len() == 1
    }

    pub fn is_tree(&self) -> bool {
        self.n() >= 1 && self.edge_count() + 1 == self.n() && self.is_connected()
    }

    /// Induced subgraph on `vertices`, relabeled to `0..vertices.len()` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> SimpleGraph {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let edges: Vec<_> = self
            .edges()
            .into_iter()
            .filter(|&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|(u, v)| (index[u], index[v]))
            .collect();
        SimpleGraph::from_edges(vertices.len(), &edges).expect("induced subgraph is valid")
    }

    /// Distances from `root` by breadth-first search; `None` for unreachable vertices.
    pub fn distances(&self, root: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        dist[root] = Some(0);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }
}

/// A loopless multigraph stored as sorted `(pair, multiplicity)` entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multigraph {
    n: usize,
    edges: Vec<((usize, usize), usize)>,
}

impl Multigraph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut counts: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            *counts.entry((u.min(v), u.max(v))).or_default() += 1;
        }
        Ok(Multigraph {
            n,
            edges: counts.into_iter().collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Distinct pairs with their multiplicities, sorted by pair.
    pub fn entries(&self) -> &[((usize, usize), usize)] {
        &self.edges
    }

    /// Total edge count, counting multiplicity.
    pub fn edge_count(&self) -> usize {
        self.edges.iter().map(|&(_, m)| m).sum()
    }

    /// The edge multiset as a sorted list with repetitions.
    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for &(pair, m) in &self.edges {
            out.extend(std::iter::repeat_n(pair, m));
        }
        out
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> usize {
        let key = (u.min(v), u.max(v));
        self.edges
            .binary_search_by_key(&key, |&(p, _)| p)
            .map(|i| self.edges[i].1)
            .unwrap_or(0)
    }

    /// Degree counting multiplicity.
    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|((a, b), _)| *a == v || *b == v)
            .map(|&(_, m)| m)
            .sum()
    }

    pub fn has_multi_edges(&self) -> bool {
        self.edges.iter().any(|&(_, m)| m > 1)
    }

    pub fn is_connected(&self) -> bool {
        self.underlying().is_connected()
    }

    /// True iff connected, acyclic, and without repeated edges.
    pub fn is_tree(&self) -> bool {
        !self.has_multi_edges() && self.underlying().is_tree()
    }

    /// The simple graph obtained by forgetting multiplicities.
    pub fn underlying(&self) -> SimpleGraph {
        let pairs: Vec<_> = self.edges.iter().map(|&(p, _)| p).collect();
        SimpleGraph::from_edges(self.n, &pairs).expect("distinct loopless pairs")
    }

    pub fn relabel(&self, perm: &[usize]) -> Multigraph {
        let edges: Vec<_> = self
            .edge_list()
            .into_iter()
            .map(|(u, v)| (perm[u], perm[v]))
            .collect();
        Multigraph::new(self.n, &edges).expect("relabeling preserves validity")
    }

    /// Converts to a simple graph when no pair is repeated.
    pub fn to_simple(&self) -> Option<SimpleGraph> {
        (!self.has_multi_edges()).then(|| self.underlying())
    }
}

impl From<&SimpleGraph> for Multigraph {
    fn from(g: &SimpleGraph) -> Self {
        Multigraph::new(g.n(), &g.edges()).expect("simple graph edges are valid")
    }
}

/// A multiset of k-subsets of the naturals (`k ∈ {1, 2}`).
///
/// Blocks are kept in insertion order so that `blocks()[v]` can carry the
/// image of vertex `v` under an assignment. Equality is positional; use
/// [`Lambda::sorted`] for multiset comparison.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Lambda {
    k: usize,
    blocks: Vec<Vec<usize>>,
}

impl Lambda {
    pub fn new(k: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        if !(1..=2).contains(&k) {
            return Err(Error::UnsupportedBlockSize(k));
        }
        let mut out = Vec::with_capacity(blocks.len());
        for mut block in blocks {
            block.sort_unstable();
            block.dedup();
            if block.len() != k {
                return Err(Error::MalformedBlock { block, k });
            }
            out.push(block);
        }
        Ok(Lambda { k, blocks: out })
    }

    pub fn from_pairs(pairs: &[(usize, usize)]) -> Result<Self> {
        Lambda::new(2, pairs.iter().map(|&(a, b)| vec![a, b]).collect())
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// The underlying set: every symbol appearing in some block.
    pub fn base(&self) -> BTreeSet<usize> {
        self.blocks.iter().flatten().copied().collect()
    }

    /// Same multiset with blocks in sorted order.
    pub fn sorted(&self) -> Lambda {
        let mut blocks = self.blocks.clone();
        blocks.sort();
        Lambda { k: self.k, blocks }
    }

    /// Applies a symbol map to every block.
    pub fn map_symbols(&self, f: impl Fn(usize) -> usize) -> Lambda {
        let blocks = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|&x| f(x)).collect())
            .collect();
        Lambda::new(self.k, blocks).expect("symbol maps used here are injective")
    }

    /// The hyper-multigraph on the base, relabeled to `0..|base|` in increasing
    /// symbol order. Only defined for `k = 2`.
    pub fn to_multigraph(&self) -> Result<Multigraph> {
        if self.k != 2 {
            return Err(Error::UnsupportedBlockSize(self.k));
        }
        let base: Vec<usize> = self.base().into_iter().collect();
        let index = |x: usize| base.binary_search(&x).unwrap();
        let pairs: Vec<_> = self
            .blocks
            .iter()
            .map(|b| (index(b[0]), index(b[1])))
            .collect();
        Multigraph::new(base.len(), &pairs)
    }

    /// Groups blocks by connectivity of the hypergraph on the base.
    ///
    /// Components are ordered by their smallest symbol; blocks keep their
    /// relative order.
    pub fn connected_components(&self) -> Vec<Lambda> {
        let base: Vec<usize> = self.base().into_iter().collect();
        let index = |x: usize| base.binary_search(&x).unwrap();
        let mut parent: Vec<usize> = (0..base.len()).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while parent[r] != r {
                r = parent[r];
            }
            let mut c = x;
            while parent[c] != r {
                let next = parent[c];
                parent[c] = r;
                c = next;
            }
            r
        }
        for block in &self.blocks {
            let first = find(&mut parent, index(block[0]));
            for &x in &block[1..] {
                let r = find(&mut parent, index(x));
                if r != first {
                    parent[r] = first;
                }
            }
        }
        let mut groups: BTreeMap<usize, Vec<Vec<usize>>> = BTreeMap::new();
        let mut root_min: BTreeMap<usize, usize> = BTreeMap::new();
        for (i, _) in base.iter().enumerate() {
            let r = find(&mut parent, i);
            root_min.entry(r).or_insert(i);
        }
        for block in &self.blocks {
            let r = find(&mut parent, index(block[0]));
            groups.entry(root_min[&r]).or_default().push(block.clone());
        }
        groups
            .into_values()
            .map(|blocks| Lambda { k: self.k, blocks })
            .collect()
    }
}

/// Checks `g` against a vertex cap.
pub(crate) fn check_cap(what: &'static str, value: usize, cap: usize) -> Result<()> {
    if value > cap {
        Err(Error::CapExceeded { what, value, cap })
    } else {
        Ok(())
    }
}
