//! Specializations of the invariant to a finite alphabet `{1, ..., m}`.
//!
//! Every k-subset of the alphabet receives a value; the remaining variables
//! are set to zero. Both routes below compute the same element of the
//! coefficient ring: one straight from the homomorphism sum, the other from
//! a power sum expansion.

use std::collections::HashMap;

use rand::Rng;

use crate::canon::{automorphism_count, CanonicalForm};
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::scalar::{Residue, Scalar};

use super::series::PSeries;

/// Values of the variables `x_B` for every k-subset `B ⊆ {1, ..., m}`.
#[derive(Clone, Debug, PartialEq)]
pub struct BlockValues<R> {
    k: usize,
    m: usize,
    blocks: Vec<Vec<usize>>,
    values: Vec<R>,
}

/// All k-subsets of `{1, ..., m}` in lexicographic order.
pub fn alphabet_blocks(k: usize, m: usize) -> Vec<Vec<usize>> {
    match k {
        1 => (1..=m).map(|a| vec![a]).collect(),
        _ => (1..=m)
            .flat_map(|a| (a + 1..=m).map(move |b| vec![a, b]))
            .collect(),
    }
}

impl<R: Scalar> BlockValues<R> {
    pub fn from_fn(k: usize, m: usize, mut f: impl FnMut(&[usize]) -> R) -> Result<Self> {
        if !(1..=2).contains(&k) {
            return Err(Error::UnsupportedBlockSize(k));
        }
        let blocks = alphabet_blocks(k, m);
        let values = blocks.iter().map(|b| f(b)).collect();
        Ok(BlockValues {
            k,
            m,
            blocks,
            values,
        })
    }

    /// Builds from an explicit map; every block of the alphabet must be present.
    pub fn from_map(k: usize, m: usize, map: &HashMap<Vec<usize>, R>) -> Result<Self> {
        let mut missing = None;
        let v = BlockValues::from_fn(k, m, |b| match map.get(b) {
            Some(r) => r.clone(),
            None => {
                missing.get_or_insert_with(|| b.to_vec());
                R::zero()
            }
        })?;
        match missing {
            Some(b) => Err(Error::MissingValue(b)),
            None => Ok(v),
        }
    }

    pub fn constant(k: usize, m: usize, value: R) -> Result<Self> {
        BlockValues::from_fn(k, m, |_| value.clone())
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    fn index(&self, block: &[usize]) -> usize {
        match *block {
            [a] => a - 1,
            [a, b] => {
                let (a, b) = (a.min(b), a.max(b));
                // pairs before row `a` plus offset inside the row
                (a - 1) * (2 * self.m - a) / 2 + (b - a - 1)
            }
            _ => unreachable!("blocks have one or two elements"),
        }
    }

    /// Value of a block given by 1-based symbols.
    pub fn get(&self, block: &[usize]) -> &R {
        &self.values[self.index(block)]
    }
}

impl<const P: u64> BlockValues<Residue<P>> {
    /// Uniformly random residues.
    pub fn random(k: usize, m: usize, rng: &mut impl Rng) -> Result<Self> {
        BlockValues::from_fn(k, m, |_| Residue::new(rng.gen_range(0..P)))
    }
}

/// `Σ_{φ ∈ Hom(G, K_{m,k})} Π_v x_{φ(v)}` by backtracking over colourings.
pub fn direct_eval<R: Scalar>(g: &SimpleGraph, values: &BlockValues<R>) -> Result<R> {
    R::validate()?;
    let blocks = values.blocks();
    let disjoint: Vec<Vec<bool>> = blocks
        .iter()
        .map(|a| blocks.iter().map(|b| !a.iter().any(|x| b.contains(x))).collect())
        .collect();
    let block_values: Vec<R> = blocks.iter().map(|b| values.get(b).clone()).collect();

    fn go<R: Scalar>(
        v: usize,
        g: &SimpleGraph,
        colour: &mut Vec<usize>,
        disjoint: &[Vec<bool>],
        block_values: &[R],
    ) -> R {
        if v == g.n() {
            return R::one();
        }
        let mut total = R::zero();
        for c in 0..block_values.len() {
            if g
                .neighbors(v)
                .iter()
                .filter(|&&w| w < v)
                .all(|&w| disjoint[c][colour[w]])
            {
                colour.push(c);
                let rest = go(v + 1, g, colour, disjoint, block_values);
                colour.pop();
                total = total + block_values[c].clone() * rest;
            }
        }
        total
    }
    Ok(go(0, g, &mut Vec::with_capacity(g.n()), &disjoint, &block_values))
}

/// Orbit sum of a connected class over the alphabet: the sum over all
/// injective labelings of its base, divided by its automorphism count.
pub fn orbit_sum<R: Scalar>(form: &CanonicalForm, values: &BlockValues<R>) -> Result<R> {
    let b = form.n();
    let m = values.m();
    if b > m {
        return Ok(R::zero());
    }
    let automorphisms = match form.to_multigraph() {
        Some(mg) => automorphism_count(&mg),
        // a k = 1 component lives on a single symbol
        None => 1,
    };
    let mut label = Vec::with_capacity(b);
    let mut used = vec![false; m + 1];
    let mut total = R::zero();
    let mut buf = Vec::with_capacity(2);
    fn go<R: Scalar>(
        form: &CanonicalForm,
        values: &BlockValues<R>,
        label: &mut Vec<usize>,
        used: &mut [bool],
        total: &mut R,
        buf: &mut Vec<usize>,
    ) {
        if label.len() == form.n() {
            let mut prod = R::one();
            for block in form.blocks() {
                buf.clear();
                buf.extend(block.iter().map(|&x| label[x]));
                prod = prod * values.get(buf).clone();
            }
            *total = total.clone() + prod;
            return;
        }
        for s in 1..used.len() {
            if !used[s] {
                used[s] = true;
                label.push(s);
                go(form, values, label, used, total, buf);
                label.pop();
                used[s] = false;
            }
        }
    }
    go(form, values, &mut label, &mut used, &mut total, &mut buf);
    total
        .divide_exact(automorphisms)
        .ok_or_else(|| Error::NonDivisible {
            total: format!("{total:?}"),
            automorphisms,
        })
}

/// Evaluates a power sum series at the given block values.
pub fn pseries_eval<R: Scalar>(x: &PSeries, values: &BlockValues<R>) -> Result<R> {
    R::validate()?;
    if x.k() != values.k() {
        return Err(Error::BlockSizeMismatch {
            series: x.k(),
            values: values.k(),
        });
    }
    let mut orbit: HashMap<&CanonicalForm, R> = HashMap::new();
    let mut total = R::zero();
    for (class, &coeff) in x.terms() {
        let mut term = R::from_coefficient(coeff);
        for c in class.components() {
            let value = match orbit.get(c) {
                Some(v) => v.clone(),
                None => {
                    let v = orbit_sum(c, values)?;
                    orbit.insert(c, v.clone());
                    v
                }
            };
            term = term * value;
        }
        total = total + term;
    }
    Ok(total)
}
