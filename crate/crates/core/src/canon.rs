//! Canonical forms for small graphs and multigraphs.
//!
//! The form is the sorted edge multiset under a canonical labeling. The
//! labeling is the lexicographically smallest edge list among all labelings
//! compatible with an ordered equitable partition: colour refinement fixes an
//! isomorphism-invariant cell order, and individualization explores the
//! remaining choices. Vertices that are twins are interchangeable, so only one
//! of them is individualized per cell.

use std::cmp::Reverse;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{check_cap, Lambda, Multigraph, SimpleGraph};

/// Largest vertex count accepted by [`Canonize::canonical_form`].
pub const CANON_VERTEX_CAP: usize = 12;

/// Vertex count plus the sorted block multiset of a canonically labeled
/// (hyper)graph. Serialized as `n:[[u,v],...]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl CanonicalForm {
    /// The connected `k = 1` class: `count` copies of one singleton.
    pub fn singletons(count: usize) -> Self {
        CanonicalForm {
            n: 1,
            blocks: vec![vec![0]; count],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Number of blocks (edges, counted with multiplicity).
    pub fn edge_count(&self) -> usize {
        self.blocks.len()
    }

    /// Block size, or `None` for an edgeless form.
    pub fn block_size(&self) -> Option<usize> {
        self.blocks.first().map(Vec::len)
    }

    pub fn to_lambda(&self) -> Lambda {
        let k = self.block_size().unwrap_or(2);
        Lambda::new(k, self.blocks.clone()).expect("canonical blocks are well formed")
    }

    /// The represented multigraph, if the blocks are pairs.
    pub fn to_multigraph(&self) -> Option<Multigraph> {
        if self.blocks.iter().any(|b| b.len() != 2) {
            return None;
        }
        let pairs: Vec<_> = self.blocks.iter().map(|b| (b[0], b[1])).collect();
        Multigraph::new(self.n, &pairs).ok()
    }

    pub fn is_tree(&self) -> bool {
        self.to_multigraph().is_some_and(|m| m.is_tree())
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:[", self.n)?;
        for (i, block) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str("[")?;
            for (j, x) in block.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

impl FromStr for CanonicalForm {
    type Err = Error;

    /// Parses the `n:[[u,v],...]` serialization and checks that it is in
    /// canonical form.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Schema(format!("malformed canonical form {s:?}"));
        let (n, rest) = s.split_once(':').ok_or_else(bad)?;
        let n: usize = n.parse().map_err(|_| bad())?;
        let blocks: Vec<Vec<usize>> = serde_json::from_str(rest).map_err(|_| bad())?;
        let k = blocks.first().map_or(2, Vec::len);
        if blocks
            .iter()
            .any(|b| b.len() != k || b.iter().any(|&x| x >= n))
        {
            return Err(bad());
        }
        let parsed = CanonicalForm { n, blocks };
        let recanon = match k {
            1 => Lambda::new(1, parsed.blocks.clone())?.canonical_form()?,
            2 => parsed.to_multigraph().ok_or_else(bad)?.canonical_form()?,
            _ => return Err(bad()),
        };
        if recanon != parsed {
            return Err(Error::Schema(format!("{s:?} is not in canonical form")));
        }
        Ok(parsed)
    }
}

impl Serialize for CanonicalForm {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for CanonicalForm {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

pub trait Canonize {
    fn canonical_form(&self) -> Result<CanonicalForm>;
}

impl Canonize for Multigraph {
    fn canonical_form(&self) -> Result<CanonicalForm> {
        check_cap("vertex count", self.n(), CANON_VERTEX_CAP)?;
        let labels = canonical_labeling(self);
        let mut blocks: Vec<Vec<usize>> = self
            .edge_list()
            .into_iter()
            .map(|(u, v)| {
                let (a, b) = (labels[u], labels[v]);
                vec![a.min(b), a.max(b)]
            })
            .collect();
        blocks.sort();
        Ok(CanonicalForm {
            n: self.n(),
            blocks,
        })
    }
}

impl Canonize for SimpleGraph {
    fn canonical_form(&self) -> Result<CanonicalForm> {
        Multigraph::from(self).canonical_form()
    }
}

impl Canonize for Lambda {
    /// The class of the multiset under relabeling of symbols. Symbols not
    /// present in any block are ignored.
    fn canonical_form(&self) -> Result<CanonicalForm> {
        match self.k() {
            2 => self.to_multigraph()?.canonical_form(),
            _ => {
                let mut counts: Vec<usize> = {
                    let mut map = std::collections::BTreeMap::<usize, usize>::new();
                    for b in self.blocks() {
                        *map.entry(b[0]).or_default() += 1;
                    }
                    map.into_values().collect()
                };
                counts.sort_unstable_by(|a, b| b.cmp(a));
                let blocks = counts
                    .iter()
                    .enumerate()
                    .flat_map(|(i, &c)| std::iter::repeat_n(vec![i], c))
                    .collect();
                Ok(CanonicalForm {
                    n: counts.len(),
                    blocks,
                })
            }
        }
    }
}

pub fn are_isomorphic<G: Canonize>(a: &G, b: &G) -> Result<bool> {
    Ok(a.canonical_form()? == b.canonical_form()?)
}

/// Edge multiset under a labeling, compared lexicographically.
type EdgeCode = Vec<(u8, u8)>;
/// A vertex's degree and sorted (neighbour cell, multiplicity) pairs.
type RefineKey = (Reverse<usize>, Vec<(usize, u8)>);

struct Search<'a> {
    mult: &'a [Vec<u8>],
    best: Option<(EdgeCode, Vec<usize>)>,
}

fn refine(mult: &[Vec<u8>], mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    let n = mult.len();
    let mut cell_of = vec![0usize; n];
    loop {
        for (i, cell) in cells.iter().enumerate() {
            for &v in cell {
                cell_of[v] = i;
            }
        }
        let mut next = Vec::with_capacity(cells.len());
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            // Higher degree first, so hubs take the small labels.
            let mut keyed: Vec<(RefineKey, usize)> = cell
                .iter()
                .map(|&v| {
                    let mut sig: Vec<(usize, u8)> = (0..n)
                        .filter(|&w| mult[v][w] > 0)
                        .map(|w| (cell_of[w], mult[v][w]))
                        .collect();
                    sig.sort_unstable();
                    let degree = mult[v].iter().map(|&m| m as usize).sum();
                    ((Reverse(degree), sig), v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                    start = i;
                }
            }
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

fn twins(mult: &[Vec<u8>], u: usize, v: usize) -> bool {
    (0..mult.len()).all(|w| w == u || w == v || mult[u][w] == mult[v][w])
}

impl Search<'_> {
    fn run(&mut self, cells: Vec<Vec<usize>>) {
        let cells = refine(self.mult, cells);
        let target = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(_, c)| c.len())
            .map(|(i, _)| i);
        let Some(target) = target else {
            self.leaf(&cells);
            return;
        };
        let cell = &cells[target];
        let mut tried: Vec<usize> = Vec::new();
        for &v in cell {
            if tried.iter().any(|&u| twins(self.mult, u, v)) {
                continue;
            }
            tried.push(v);
            let mut next = Vec::with_capacity(cells.len() + 1);
            next.extend_from_slice(&cells[..target]);
            next.push(vec![v]);
            next.push(cell.iter().copied().filter(|&w| w != v).collect());
            next.extend_from_slice(&cells[target + 1..]);
            self.run(next);
        }
    }

    fn leaf(&mut self, cells: &[Vec<usize>]) {
        let n = self.mult.len();
        let mut label = vec![0usize; n];
        for (i, cell) in cells.iter().enumerate() {
            label[cell[0]] = i;
        }
        let mut edges = Vec::new();
        for u in 0..n {
            for w in u + 1..n {
                let (a, b) = (label[u].min(label[w]) as u8, label[u].max(label[w]) as u8);
                for _ in 0..self.mult[u][w] {
                    edges.push((a, b));
                }
            }
        }
        edges.sort_unstable();
        if self.best.as_ref().is_none_or(|(e, _)| edges < *e) {
            self.best = Some((edges, label));
        }
    }
}

/// Canonical label of every vertex (`labels[v]`).
pub fn canonical_labeling(g: &Multigraph) -> Vec<usize> {
    let n = g.n();
    if n == 0 {
        return Vec::new();
    }
    let mut mult = vec![vec![0u8; n]; n];
    for &((u, v), m) in g.entries() {
        let m = u8::try_from(m).expect("multiplicity fits in u8");
        mult[u][v] = m;
        mult[v][u] = m;
    }
    let mut search = Search {
        mult: &mult,
        best: None,
    };
    search.run(vec![(0..n).collect()]);
    search.best.expect("search reaches a leaf").1
}

/// Number of vertex permutations preserving every pair multiplicity,
/// counted by exhaustive backtracking.
pub fn automorphism_count(g: &Multigraph) -> u64 {
    let n = g.n();
    let mut mult = vec![vec![0usize; n]; n];
    for &((u, v), m) in g.entries() {
        mult[u][v] = m;
        mult[v][u] = m;
    }
    let degree: Vec<usize> = (0..n).map(|v| mult[v].iter().sum()).collect();
    fn extend(
        v: usize,
        image: &mut Vec<usize>,
        used: &mut [bool],
        mult: &[Vec<usize>],
        degree: &[usize],
    ) -> u64 {
        let n = mult.len();
        if v == n {
            return 1;
        }
        let mut total = 0;
        for w in 0..n {
            if used[w] || degree[w] != degree[v] {
                continue;
            }
            if (0..v).any(|u| mult[u][v] != mult[image[u]][w]) {
                continue;
            }
            used[w] = true;
            image.push(w);
            total += extend(v + 1, image, used, mult, degree);
            image.pop();
            used[w] = false;
        }
        total
    }
    extend(0, &mut Vec::with_capacity(n), &mut vec![false; n], &mult, &degree)
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    /// Lexicographically smallest sorted edge list over all `n!` labelings.
    pub(crate) fn brute_force_form(g: &Multigraph) -> Vec<(usize, usize)> {
        let n = g.n();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut best: Option<Vec<(usize, usize)>> = None;
        loop {
            let mut edges: Vec<_> = g
                .edge_list()
                .into_iter()
                .map(|(u, v)| (perm[u].min(perm[v]), perm[u].max(perm[v])))
                .collect();
            edges.sort_unstable();
            if best.as_ref().is_none_or(|b| edges < *b) {
                best = Some(edges);
            }
            // next permutation
            let Some(i) = (1..n).rev().find(|&i| perm[i - 1] < perm[i]) else {
                break;
            };
            let j = (i..n).rev().find(|&j| perm[j] > perm[i - 1]).unwrap();
            perm.swap(i - 1, j);
            perm[i..].reverse();
        }
        best.unwrap_or_default()
    }

    #[test]
    fn relabeled_paths_agree() {
        let a = SimpleGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let b = SimpleGraph::from_edges(3, &[(2, 0), (0, 1)]).unwrap();
        assert_eq!(a.canonical_form().unwrap(), b.canonical_form().unwrap());
        assert!(are_isomorphic(&a, &b).unwrap());
    }

    #[test]
    fn multigraph_supports_relabel() {
        let a = Lambda::from_pairs(&[(0, 1), (0, 1)]).unwrap();
        let b = Lambda::from_pairs(&[(1, 2), (1, 2)]).unwrap();
        let fa = a.canonical_form().unwrap();
        assert_eq!(fa, b.canonical_form().unwrap());
        assert_eq!(fa.to_string(), "2:[[0,1],[0,1]]");
    }

    #[test]
    fn path_and_star_differ() {
        let p4 = SimpleGraph::path(4);
        let k13 = SimpleGraph::star(3);
        assert!(!are_isomorphic(&p4, &k13).unwrap());
    }

    #[test]
    fn display_parse_round_trip() {
        let f = SimpleGraph::star(3).canonical_form().unwrap();
        let s = f.to_string();
        assert_eq!(s.parse::<CanonicalForm>().unwrap(), f);
        assert!("4:[[1,2],[0,1],[0,3]]".parse::<CanonicalForm>().is_err());
        assert!("x".parse::<CanonicalForm>().is_err());
        let single = CanonicalForm::singletons(3);
        assert_eq!(single.to_string(), "1:[[0],[0],[0]]");
        assert_eq!(single.to_string().parse::<CanonicalForm>().unwrap(), single);
    }

    #[test]
    fn cap_is_enforced() {
        let g = SimpleGraph::path(13);
        assert_eq!(
            g.canonical_form(),
            Err(Error::CapExceeded {
                what: "vertex count",
                value: 13,
                cap: CANON_VERTEX_CAP
            })
        );
    }

    #[test]
    fn agrees_with_brute_force_on_all_graphs_up_to_five_vertices() {
        for n in 1..=5 {
            let pairs: Vec<(usize, usize)> =
                (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            let graphs: Vec<Multigraph> = (0u32..1 << pairs.len())
                .map(|mask| {
                    let e: Vec<_> = pairs
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| mask >> i & 1 == 1)
                        .map(|(_, &p)| p)
                        .collect();
                    Multigraph::new(n, &e).unwrap()
                })
                .collect();
            let mut by_brute = std::collections::HashMap::new();
            let mut by_canon = std::collections::HashMap::new();
            for g in &graphs {
                let brute = brute_force_form(g);
                let canon = g.canonical_form().unwrap();
                let prev = by_brute.insert(brute.clone(), canon.clone());
                if let Some(p) = prev {
                    assert_eq!(p, canon, "isomorphic graphs got different forms");
                }
                let prev = by_canon.insert(canon, brute.clone());
                if let Some(p) = prev {
                    assert_eq!(p, brute, "non-isomorphic graphs share a form");
                }
            }
        }
    }

    #[test]
    fn automorphism_counts() {
        assert_eq!(automorphism_count(&Multigraph::from(&SimpleGraph::path(4))), 2);
        assert_eq!(automorphism_count(&Multigraph::from(&SimpleGraph::star(3))), 6);
        assert_eq!(automorphism_count(&Multigraph::from(&SimpleGraph::complete(4))), 24);
        let double = Multigraph::new(3, &[(0, 1), (0, 1), (1, 2)]).unwrap();
        assert_eq!(automorphism_count(&double), 1);
    }
}
