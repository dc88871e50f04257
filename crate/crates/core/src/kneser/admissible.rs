//! Admissibility: assigning the blocks of `λ` bijectively to the vertices of
//! `G` so that adjacent vertices receive intersecting blocks.

use crate::error::{Error, Result};
use crate::graph::{Lambda, SimpleGraph};

/// `assignment[v]` is the index (into `λ.blocks()`) of the block given to `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissibleWitness {
    pub assignment: Vec<usize>,
}

impl AdmissibleWitness {
    /// Checks that the assignment is a bijection with intersecting blocks on every edge.
    pub fn is_valid(&self, lambda: &Lambda, g: &SimpleGraph) -> bool {
        let n = g.n();
        if self.assignment.len() != n || lambda.len() != n {
            return false;
        }
        let mut seen = vec![false; n];
        for &b in &self.assignment {
            if b >= n || std::mem::replace(&mut seen[b], true) {
                return false;
            }
        }
        g.edges().into_iter().all(|(u, v)| {
            let (a, b) = (
                &lambda.blocks()[self.assignment[u]],
                &lambda.blocks()[self.assignment[v]],
            );
            a.iter().any(|x| b.contains(x))
        })
    }
}

/// Distinct blocks of `λ` with their multiplicities and pairwise intersection table.
struct BlockTypes {
    members: Vec<Vec<usize>>,
    meets: Vec<Vec<bool>>,
}

impl BlockTypes {
    fn new(lambda: &Lambda) -> Self {
        let mut distinct: Vec<&Vec<usize>> = Vec::new();
        let mut members: Vec<Vec<usize>> = Vec::new();
        for (i, b) in lambda.blocks().iter().enumerate() {
            match distinct.iter().position(|d| *d == b) {
                Some(t) => members[t].push(i),
                None => {
                    distinct.push(b);
                    members.push(vec![i]);
                }
            }
        }
        let meets = distinct
            .iter()
            .map(|a| distinct.iter().map(|b| a.iter().any(|x| b.contains(x))).collect())
            .collect();
        BlockTypes { members, meets }
    }
}

/// Vertices ordered so that each one has as many earlier neighbours as
/// possible, with the earlier-neighbour positions of every vertex.
fn search_order(g: &SimpleGraph) -> (Vec<usize>, Vec<Vec<usize>>) {
    let n = g.n();
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let back = g.neighbors(v).iter().filter(|&&w| placed[w]).count();
                (back, g.degree(v), std::cmp::Reverse(v))
            })
            .unwrap();
        placed[v] = true;
        order.push(v);
    }
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let back = order
        .iter()
        .enumerate()
        .map(|(i, &v)| {
            g.neighbors(v)
                .iter()
                .map(|&w| pos[w])
                .filter(|&j| j < i)
                .collect()
        })
        .collect();
    (order, back)
}

struct Search<'a> {
    types: &'a BlockTypes,
    back: &'a [Vec<usize>],
    remaining: Vec<usize>,
    chosen: Vec<usize>,
    limit: u64,
    found: u64,
    first: Option<Vec<usize>>,
}

impl Search<'_> {
    fn run(&mut self, depth: usize) {
        if depth == self.back.len() {
            self.found += 1;
            if self.first.is_none() {
                self.first = Some(self.chosen.clone());
            }
            return;
        }
        for t in 0..self.types.members.len() {
            if self.remaining[t] == 0 {
                continue;
            }
            if !self.back[depth]
                .iter()
                .all(|&j| self.types.meets[t][self.chosen[j]])
            {
                continue;
            }
            self.remaining[t] -= 1;
            self.chosen.push(t);
            self.run(depth + 1);
            self.chosen.pop();
            self.remaining[t] += 1;
            if self.found >= self.limit {
                return;
            }
        }
    }
}

fn search(lambda: &Lambda, g: &SimpleGraph, limit: u64) -> Result<(u64, Option<AdmissibleWitness>)> {
    if lambda.len() != g.n() {
        return Err(Error::SizeMismatch {
            blocks: lambda.len(),
            vertices: g.n(),
        });
    }
    let types = BlockTypes::new(lambda);
    let (order, back) = search_order(g);
    let mut s = Search {
        types: &types,
        back: &back,
        remaining: types.members.iter().map(Vec::len).collect(),
        chosen: Vec::with_capacity(g.n()),
        limit,
        found: 0,
        first: None,
    };
    s.run(0);
    let witness = s.first.map(|chosen| {
        let mut next = vec![0usize; types.members.len()];
        let mut assignment = vec![0; g.n()];
        for (i, &t) in chosen.iter().enumerate() {
            assignment[order[i]] = types.members[t][next[t]];
            next[t] += 1;
        }
        AdmissibleWitness { assignment }
    });
    Ok((s.found, witness))
}

/// An admissible assignment of the blocks of `λ` to `V(G)`, if one exists.
pub fn is_admissible(lambda: &Lambda, g: &SimpleGraph) -> Result<Option<AdmissibleWitness>> {
    Ok(search(lambda, g, 1)?.1)
}

/// Number of admissible maps `V(G) → λ` whose image is exactly the multiset
/// `λ`. Repeated blocks are indistinguishable, so this is the number of
/// admissible bijections onto the edges of `G_λ` divided by the product of
/// the factorials of the block multiplicities.
pub fn count_admissible(lambda: &Lambda, g: &SimpleGraph) -> Result<u64> {
    Ok(search(lambda, g, u64::MAX)?.0)
}
