//! Power sum expansion over spanning edge subsets.
//!
//! For a spanning subgraph `G_S` with components `H_1, ..., H_l`, the
//! maps `φ: V → blocks` with intersecting blocks on every edge of `S` factor
//! over the components. For a connected `H`, grouping those maps by the
//! class of their image gives `Σ_λ̄ N(H, λ̄) p_λ̄`, where `N(H, λ̄)` counts the
//! admissible maps onto one fixed representative. Inclusion–exclusion over
//! `S` then yields
//!
//! `X = Σ_S (-1)^|S| Π_i Σ_{λ̄_i} N(H_i, λ̄_i) p_{λ̄_i}`.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::Arc;

use crate::canon::{CanonicalForm, Canonize};
use crate::enumerate::connected_multigraph_classes;
use crate::error::{Error, Result};
use crate::graph::{check_cap, SimpleGraph};

use super::admissible::count_admissible;
use super::series::{PClass, PSeries};

/// Largest vertex count for a full expansion.
pub const PSUM_VERTEX_CAP: usize = 7;

/// Component classes of one connected graph with their assignment counts.
pub type ComponentDistribution = Arc<Vec<(CanonicalForm, u64)>>;

/// Result of expanding one graph: the signed series and the unsigned union
/// of the admissible class sets over all spanning subgraphs.
#[derive(Clone, Debug)]
pub struct Expansion {
    pub series: PSeries,
    pub unsigned_support: BTreeSet<PClass>,
}

/// Caches connected-class lists and per-component distributions so that
/// repeated expansions share work. Not shared between threads; build one
/// per worker.
pub struct PsumEngine {
    k: usize,
    classes: HashMap<usize, Arc<Vec<CanonicalForm>>>,
    distributions: HashMap<CanonicalForm, ComponentDistribution>,
}

impl PsumEngine {
    pub fn new(k: usize) -> Result<Self> {
        if !(1..=2).contains(&k) {
            return Err(Error::UnsupportedBlockSize(k));
        }
        Ok(PsumEngine {
            k,
            classes: HashMap::new(),
            distributions: HashMap::new(),
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    fn connected_classes(&mut self, edges: usize) -> Result<Arc<Vec<CanonicalForm>>> {
        if let Some(c) = self.classes.get(&edges) {
            return Ok(c.clone());
        }
        let list = Arc::new(connected_multigraph_classes(edges)?);
        self.classes.insert(edges, list.clone());
        Ok(list)
    }

    /// Admissible classes of a connected graph, each with `N(H, λ̄) > 0`.
    pub fn component_distribution(&mut self, h: &SimpleGraph) -> Result<ComponentDistribution> {
        if !h.is_connected() || h.n() == 0 {
            return Err(Error::Disconnected);
        }
        if self.k == 1 {
            // Adjacent singletons intersect only when equal.
            return Ok(Arc::new(vec![(CanonicalForm::singletons(h.n()), 1)]));
        }
        let key = h.canonical_form()?;
        self.distribution_for_form(&key)
    }

    fn distribution_for_form(&mut self, key: &CanonicalForm) -> Result<ComponentDistribution> {
        if let Some(d) = self.distributions.get(key) {
            return Ok(d.clone());
        }
        let h = key
            .to_multigraph()
            .and_then(|m| m.to_simple())
            .expect("graph forms are simple");
        let mut out = Vec::new();
        for class in self.connected_classes(h.n())?.iter() {
            let count = count_admissible(&class.to_lambda(), &h)?;
            if count > 0 {
                out.push((class.clone(), count));
            }
        }
        let out = Arc::new(out);
        self.distributions.insert(key.clone(), out.clone());
        Ok(out)
    }

    /// Key identifying a connected component for distribution lookup.
    fn component_key(&mut self, h: &SimpleGraph) -> Result<CanonicalForm> {
        match self.k {
            1 => Ok(CanonicalForm::singletons(h.n())),
            _ => h.canonical_form(),
        }
    }

    fn distribution_for_key(&mut self, key: &CanonicalForm) -> Result<ComponentDistribution> {
        match self.k {
            1 => Ok(Arc::new(vec![(key.clone(), 1)])),
            _ => self.distribution_for_form(key),
        }
    }

    /// Expands `G` over all spanning edge subsets.
    pub fn expand(&mut self, g: &SimpleGraph) -> Result<Expansion> {
        check_cap("vertex count", g.n(), PSUM_VERTEX_CAP)?;
        let n = g.n();
        let edges = g.edges();
        // Net signed count of each multiset of component keys.
        let mut shapes: HashMap<Vec<CanonicalForm>, i64> = HashMap::new();
        let mut labeled: HashMap<(u32, u64), CanonicalForm> = HashMap::new();
        let mut parent = vec![0usize; n];
        for mask in 0u64..1 << edges.len() {
            for (i, p) in parent.iter_mut().enumerate() {
                *p = i;
            }
            for (i, &(u, v)) in edges.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
                    if ru != rv {
                        parent[ru.max(rv)] = ru.min(rv);
                    }
                }
            }
            let mut parts: BTreeMap<usize, (u32, u64)> = BTreeMap::new();
            for v in 0..n {
                let r = find(&mut parent, v);
                parts.entry(r).or_default().0 |= 1 << v;
            }
            for (i, &(u, _)) in edges.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    let r = find(&mut parent, u);
                    parts.get_mut(&r).unwrap().1 |= 1 << i;
                }
            }
            let mut keys = Vec::with_capacity(parts.len());
            for part in parts.into_values() {
                let key = match labeled.get(&part) {
                    Some(k) => k.clone(),
                    None => {
                        let h = component_graph(&edges, part);
                        let k = self.component_key(&h)?;
                        labeled.insert(part, k.clone());
                        k
                    }
                };
                keys.push(key);
            }
            keys.sort();
            let sign = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
            *shapes.entry(keys).or_default() += sign;
        }

        let mut terms: BTreeMap<PClass, i64> = BTreeMap::new();
        let mut unsigned = BTreeSet::new();
        let mut shapes: Vec<_> = shapes.into_iter().collect();
        shapes.sort();
        for (keys, coeff) in shapes {
            let dists = keys
                .iter()
                .map(|k| self.distribution_for_key(k))
                .collect::<Result<Vec<_>>>()?;
            for_each_product(&dists, &mut |forms, weight| {
                let mut forms = forms.to_vec();
                forms.sort();
                let class = PClass::from_sorted_unchecked(self.k, forms);
                if coeff != 0 {
                    let w = i64::try_from(weight).expect("assignment counts fit in i64");
                    *terms.entry(class.clone()).or_default() += coeff * w;
                }
                unsigned.insert(class);
            });
        }
        Ok(Expansion {
            series: PSeries::new(n, self.k, terms)?,
            unsigned_support: unsigned,
        })
    }

    pub fn kneser_psum(&mut self, g: &SimpleGraph) -> Result<PSeries> {
        Ok(self.expand(g)?.series)
    }
}

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

fn component_graph(edges: &[(usize, usize)], (vmask, emask): (u32, u64)) -> SimpleGraph {
    let vertices: Vec<usize> = (0..32).filter(|&v| vmask >> v & 1 == 1).collect();
    let index = |v: usize| vertices.binary_search(&v).unwrap();
    let local: Vec<_> = edges
        .iter()
        .enumerate()
        .filter(|(i, _)| emask >> i & 1 == 1)
        .map(|(_, &(u, v))| (index(u), index(v)))
        .collect();
    SimpleGraph::from_edges(vertices.len(), &local).expect("component edges are valid")
}

/// Calls `f` on every choice of one entry per distribution, with the product
/// of the chosen counts.
fn for_each_product(
    dists: &[ComponentDistribution],
    f: &mut impl FnMut(&[CanonicalForm], u64),
) {
    fn go(
        dists: &[ComponentDistribution],
        chosen: &mut Vec<CanonicalForm>,
        weight: u64,
        f: &mut impl FnMut(&[CanonicalForm], u64),
    ) {
        let Some((first, rest)) = dists.split_first() else {
            f(chosen, weight);
            return;
        };
        for (form, count) in first.iter() {
            chosen.push(form.clone());
            go(rest, chosen, weight * count, f);
            chosen.pop();
        }
    }
    go(dists, &mut Vec::with_capacity(dists.len()), 1, f);
}

/// `X_{K_{N,k}}(G)` in the power sum basis.
pub fn kneser_psum(g: &SimpleGraph, k: usize) -> Result<PSeries> {
    PsumEngine::new(k)?.kneser_psum(g)
}

/// Admissible classes of a connected graph.
pub fn enumerate_admissible_classes(g: &SimpleGraph, k: usize) -> Result<BTreeSet<PClass>> {
    check_cap("vertex count", g.n(), PSUM_VERTEX_CAP)?;
    let dist = PsumEngine::new(k)?.component_distribution(g)?;
    dist.iter()
        .map(|(form, _)| PClass::new(k, vec![form.clone()]))
        .collect()
}

/// Admissible classes of the spanning subgraph `G_S`: the product of the
/// per-component class sets.
pub fn admissible_for_subgraph(
    g: &SimpleGraph,
    subset: &[(usize, usize)],
    k: usize,
) -> Result<BTreeSet<PClass>> {
    check_cap("vertex count", g.n(), PSUM_VERTEX_CAP)?;
    let gs = g.spanning_subgraph(subset)?;
    let mut engine = PsumEngine::new(k)?;
    let dists = gs
        .components()
        .iter()
        .map(|c| engine.component_distribution(&gs.induced(c)))
        .collect::<Result<Vec<_>>>()?;
    let mut out = BTreeSet::new();
    for_each_product(&dists, &mut |forms, _| {
        let mut forms = forms.to_vec();
        forms.sort();
        out.insert(PClass::from_sorted_unchecked(k, forms));
    });
    Ok(out)
}

/// Signed support of `X` alongside the unsigned union `∪_S A_{G_S}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportReport {
    pub signed: BTreeSet<PClass>,
    pub unsigned: BTreeSet<PClass>,
}

impl SupportReport {
    /// Classes in the unsigned union whose signed coefficient cancelled.
    pub fn cancelled(&self) -> BTreeSet<PClass> {
        self.unsigned.difference(&self.signed).cloned().collect()
    }

    pub fn agrees(&self) -> bool {
        self.signed == self.unsigned
    }
}

pub fn lambda_support(g: &SimpleGraph, k: usize) -> Result<SupportReport> {
    let e = PsumEngine::new(k)?.expand(g)?;
    Ok(SupportReport {
        signed: e.series.support(),
        unsigned: e.unsigned_support,
    })
}
