use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::canon::{CanonicalForm, Canonize};
use crate::error::{Error, Result};
use crate::graph::Lambda;

/// A basis index `p_λ̄`: the multiset of connected component classes of `G_λ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PClass {
    k: usize,
    components: Vec<CanonicalForm>,
}

fn check_component(k: usize, form: &CanonicalForm) -> Result<()> {
    let bad = |why: &str| Err(Error::Schema(format!("component {form}: {why}")));
    if form.block_size() != Some(k) {
        return bad("wrong block size or no blocks");
    }
    let connected = match k {
        1 => form.n() == 1,
        _ => form.to_multigraph().is_some_and(|m| m.is_connected()),
    };
    if !connected {
        return bad("not connected");
    }
    Ok(())
}

impl PClass {
    pub fn new(k: usize, mut components: Vec<CanonicalForm>) -> Result<Self> {
        if !(1..=2).contains(&k) {
            return Err(Error::UnsupportedBlockSize(k));
        }
        for c in &components {
            check_component(k, c)?;
        }
        components.sort();
        Ok(PClass { k, components })
    }

    pub(crate) fn from_sorted_unchecked(k: usize, components: Vec<CanonicalForm>) -> Self {
        debug_assert!(components.windows(2).all(|w| w[0] <= w[1]));
        PClass { k, components }
    }

    /// The class of `λ` under relabeling of symbols.
    pub fn of_lambda(lambda: &Lambda) -> Result<Self> {
        let components = lambda
            .connected_components()
            .iter()
            .map(Canonize::canonical_form)
            .collect::<Result<Vec<_>>>()?;
        PClass::new(lambda.k(), components)
    }

    /// A connected single-component class.
    pub fn connected(form: CanonicalForm) -> Result<Self> {
        let k = form.block_size().ok_or_else(|| Error::Schema("empty component".into()))?;
        PClass::new(k, vec![form])
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn components(&self) -> &[CanonicalForm] {
        &self.components
    }

    /// Total number of blocks, which is the degree of `p_λ̄`.
    pub fn edge_count(&self) -> usize {
        self.components.iter().map(CanonicalForm::edge_count).sum()
    }

    /// The component form when the class is a single tree (`k = 2`).
    pub fn tree_form(&self) -> Option<&CanonicalForm> {
        match self.components.as_slice() {
            [only] if self.k == 2 && only.is_tree() => Some(only),
            _ => None,
        }
    }

    /// A representative `λ` with the components on disjoint consecutive symbol ranges.
    pub fn representative(&self) -> Lambda {
        let mut blocks = Vec::with_capacity(self.edge_count());
        let mut offset = 0;
        for c in &self.components {
            blocks.extend(
                c.blocks()
                    .iter()
                    .map(|b| b.iter().map(|&x| x + offset).collect::<Vec<_>>()),
            );
            offset += c.n();
        }
        Lambda::new(self.k, blocks).expect("component blocks are valid")
    }
}

/// An integer combination of basis elements `p_λ̄`, all of degree `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "SeriesJson", try_from = "SeriesJson")]
pub struct PSeries {
    n: usize,
    k: usize,
    terms: BTreeMap<PClass, i64>,
}

impl PSeries {
    /// Builds a series, dropping zero coefficients.
    pub fn new(n: usize, k: usize, terms: BTreeMap<PClass, i64>) -> Result<Self> {
        for class in terms.keys() {
            if class.k() != k {
                return Err(Error::Schema(format!("class with k = {} in a k = {k} series", class.k())));
            }
            if class.edge_count() != n {
                return Err(Error::Schema(format!(
                    "class of degree {} in a degree {n} series",
                    class.edge_count()
                )));
            }
        }
        let terms = terms.into_iter().filter(|&(_, c)| c != 0).collect();
        Ok(PSeries { n, k, terms })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn terms(&self) -> &BTreeMap<PClass, i64> {
        &self.terms
    }

    pub fn coefficient(&self, class: &PClass) -> i64 {
        self.terms.get(class).copied().unwrap_or(0)
    }

    /// Classes with a nonzero coefficient.
    pub fn support(&self) -> BTreeSet<PClass> {
        self.terms.keys().cloned().collect()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("series serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SeriesJson {
    n: usize,
    k: usize,
    terms: Vec<TermJson>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermJson {
    class: Vec<CanonicalForm>,
    coeff: i64,
}

impl From<PSeries> for SeriesJson {
    fn from(s: PSeries) -> Self {
        SeriesJson {
            n: s.n,
            k: s.k,
            terms: s
                .terms
                .into_iter()
                .map(|(class, coeff)| TermJson {
                    class: class.components,
                    coeff,
                })
                .collect(),
        }
    }
}

impl TryFrom<SeriesJson> for PSeries {
    type Error = Error;

    fn try_from(s: SeriesJson) -> Result<Self> {
        let mut terms = BTreeMap::new();
        for t in s.terms {
            if t.coeff == 0 {
                return Err(Error::Schema("zero coefficient".into()));
            }
            if !t.class.windows(2).all(|w| w[0] <= w[1]) {
                return Err(Error::Schema("class components are not sorted".into()));
            }
            let class = PClass::new(s.k, t.class)?;
            if terms.insert(class, t.coeff).is_some() {
                return Err(Error::Schema("duplicate class".into()));
            }
        }
        PSeries::new(s.n, s.k, terms)
    }
}
