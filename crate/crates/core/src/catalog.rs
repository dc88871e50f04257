//! Result cache, exhaustive verification over small trees, and the bounded
//! search for non-isomorphic graphs with equal invariants.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canon::{are_isomorphic, Canonize};
use crate::enumerate::{enumerate_graphs, enumerate_trees};
use crate::error::{Error, Result};
use crate::graph::{check_cap, SimpleGraph};
use crate::graph6::{parse_graph6, write_graph6};
use crate::kneser::{lambda_t, lambda_t_tilde, pseries_eval, BlockValues, PClass, PSeries, PsumEngine};
use crate::reconstruction::reconstruct_from_lambda_t;
use crate::scalar::{Residue, MERSENNE_61};

pub const SCHEMA_VERSION: &str = "kneser-psum/1";
pub const DEFAULT_SEED: u64 = 0x5eed_4b4e_5345_5201;
pub const VERIFY_CAP: usize = 9;
pub const DEFAULT_TRIALS: usize = 4;

/// Largest `n_max` for the collision search at block size `k`.
pub fn collide_cap(k: usize) -> Result<usize> {
    match k {
        1 => Ok(7),
        2 => Ok(5),
        _ => Err(Error::UnsupportedBlockSize(k)),
    }
}

/// One line of the JSONL cache.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CacheRecord {
    pub key: String,
    pub k: usize,
    pub version: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub payload: serde_json::Value,
}

impl CacheRecord {
    pub fn for_series(g: &SimpleGraph, x: &PSeries) -> Self {
        CacheRecord {
            key: write_graph6(g),
            k: x.k(),
            version: SCHEMA_VERSION.to_string(),
            seed: None,
            payload: serde_json::to_value(x).expect("series serialize"),
        }
    }

    /// Checks the key and payload and returns the stored series.
    pub fn series(&self) -> Result<PSeries> {
        if self.version != SCHEMA_VERSION {
            return Err(Error::Schema(format!("unknown version {}", self.version)));
        }
        let g = parse_graph6(&self.key)?;
        if write_graph6(&g) != self.key {
            return Err(Error::Schema(format!("key {} is not in normal form", self.key)));
        }
        let x: PSeries = serde_json::from_value(self.payload.clone())
            .map_err(|e| Error::Schema(e.to_string()))?;
        if x.k() != self.k || x.n() != g.n() {
            return Err(Error::Schema(format!("payload does not match key {}", self.key)));
        }
        Ok(x)
    }
}

/// Append-only JSONL cache of series keyed by `(graph6, k)` under
/// [`SCHEMA_VERSION`]. Records of other versions are skipped on load.
#[derive(Debug)]
pub struct SeriesCache {
    path: PathBuf,
    entries: HashMap<(String, usize), PSeries>,
}

impl SeriesCache {
    pub fn open(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref().to_path_buf();
        let mut entries = HashMap::new();
        match File::open(&path) {
            Ok(f) => {
                for (i, line) in BufReader::new(f).lines().enumerate() {
                    let line = line.map_err(|e| Error::Schema(e.to_string()))?;
                    if line.trim().is_empty() {
                        continue;
                    }
                    let rec: CacheRecord = serde_json::from_str(&line)
                        .map_err(|e| Error::Schema(format!("cache line {}: {e}", i + 1)))?;
                    if rec.version != SCHEMA_VERSION {
                        continue;
                    }
                    let x = rec.series()?;
                    entries.insert((rec.key, rec.k), x);
                }
            }
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => {}
            Err(e) => return Err(Error::Schema(e.to_string())),
        }
        Ok(SeriesCache { path, entries })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, g: &SimpleGraph, k: usize) -> Option<&PSeries> {
        self.entries.get(&(write_graph6(g), k))
    }

    /// Cached series for `g`, computing and appending it on a miss.
    pub fn get_or_compute(&mut self, g: &SimpleGraph, k: usize) -> Result<PSeries> {
        let key = (write_graph6(g), k);
        if let Some(x) = self.entries.get(&key) {
            return Ok(x.clone());
        }
        let x = PsumEngine::new(k)?.kneser_psum(g)?;
        self.append(&CacheRecord::for_series(g, &x))?;
        self.entries.insert(key, x.clone());
        Ok(x)
    }

    fn append(&self, rec: &CacheRecord) -> Result<()> {
        let mut f = OpenOptions::new()
            .create(true)
            .append(true)
            .open(&self.path)
            .map_err(|e| Error::Schema(e.to_string()))?;
        let line = serde_json::to_string(rec).expect("record serialize");
        writeln!(f, "{line}").map_err(|e| Error::Schema(e.to_string()))
    }
}

/// Evaluations of a series at seeded random residue values over `{1..m}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Fingerprint {
    pub m: usize,
    pub seed: u64,
    pub prime: u64,
    pub residues: Vec<u64>,
}

/// The value maps are drawn from `seed` alone, so two series are always
/// compared at the same points.
pub struct FingerprintSampler {
    k: usize,
    m: usize,
    seed: u64,
    values: Vec<BlockValues<Residue<MERSENNE_61>>>,
}

impl FingerprintSampler {
    pub fn new(k: usize, m: usize, trials: usize, seed: u64) -> Result<Self> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let values = (0..trials)
            .map(|_| BlockValues::random(k, m, &mut rng))
            .collect::<Result<_>>()?;
        Ok(FingerprintSampler { k, m, seed, values })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn fingerprint(&self, x: &PSeries) -> Result<Fingerprint> {
        let residues = self
            .values
            .iter()
            .map(|v| pseries_eval(x, v).map(Residue::value))
            .collect::<Result<_>>()?;
        Ok(Fingerprint {
            m: self.m,
            seed: self.seed,
            prime: MERSENNE_61,
            residues,
        })
    }
}

/// Alphabet size used for fingerprints of graphs with up to `n` vertices.
pub fn fingerprint_alphabet(k: usize, n: usize) -> usize {
    match k {
        1 => n.max(1),
        _ => (2 * n).clamp(2, 6),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyRecord {
    pub n: usize,
    pub graph6: String,
    pub lambda_t_size: usize,
    pub min_profile: Vec<usize>,
    pub reconstructed: String,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifySummary {
    pub n_max: usize,
    pub total: usize,
    pub passed: usize,
    /// Whether distinct trees always had distinct `Λ_t`.
    pub injective: bool,
}

impl VerifySummary {
    pub fn ok(&self) -> bool {
        self.passed == self.total && self.injective
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub records: Vec<VerifyRecord>,
    pub summary: VerifySummary,
}

impl VerifyReport {
    /// One JSON object per tree, then the summary.
    pub fn to_jsonl(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            out.push_str(&serde_json::to_string(r).expect("record serialize"));
            out.push('\n');
        }
        out.push_str(&serde_json::to_string(&self.summary).expect("summary serialize"));
        out.push('\n');
        out
    }
}

/// Runs the round trip `T → Λ_t(T) → T'` over every tree with at most
/// `n_max` vertices.
pub fn verify(n_max: usize) -> Result<VerifyReport> {
    check_cap("n_max", n_max, VERIFY_CAP)?;
    let mut trees = Vec::new();
    for n in 1..=n_max {
        trees.extend(enumerate_trees(n)?);
    }
    let results: Vec<(VerifyRecord, BTreeSet<PClass>)> = trees
        .par_iter()
        .map(|t| {
            let classes = lambda_t(t)?;
            let (_, profile) = lambda_t_tilde(t)?;
            let r = reconstruct_from_lambda_t(&classes)?;
            let pass = are_isomorphic(&r.tree, t)?;
            let record = VerifyRecord {
                n: t.n(),
                graph6: write_graph6(t),
                lambda_t_size: classes.len(),
                min_profile: profile.0,
                reconstructed: write_graph6(&r.tree),
                pass,
            };
            Ok((record, classes))
        })
        .collect::<Result<_>>()?;
    let distinct: BTreeSet<&BTreeSet<PClass>> = results.iter().map(|(_, c)| c).collect();
    let summary = VerifySummary {
        n_max,
        total: results.len(),
        passed: results.iter().filter(|(r, _)| r.pass).count(),
        injective: distinct.len() == results.len(),
    };
    Ok(VerifyReport {
        records: results.into_iter().map(|(r, _)| r).collect(),
        summary,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CollisionPair {
    pub first: String,
    pub second: String,
    pub first_is_tree: bool,
    pub second_is_tree: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CollideReport {
    pub n_max: usize,
    pub k: usize,
    pub m: usize,
    pub seed: u64,
    pub prime: u64,
    pub trials: usize,
    pub graphs: usize,
    /// Fingerprint classes holding more than one graph.
    pub fingerprint_groups: usize,
    /// Pairs whose exact series agree.
    pub confirmed: Vec<CollisionPair>,
}

/// Groups all graphs with at most `n_max` vertices by fingerprint, then keeps
/// only those pairs inside a group whose exact series are equal.
pub fn collide(n_max: usize, k: usize, trials: usize, seed: u64) -> Result<CollideReport> {
    check_cap("n_max", n_max, collide_cap(k)?)?;
    let m = fingerprint_alphabet(k, n_max);
    let sampler = FingerprintSampler::new(k, m, trials, seed)?;
    let mut graphs = Vec::new();
    for n in 1..=n_max {
        graphs.extend(enumerate_graphs(n)?);
    }
    let rows: Vec<(String, bool, PSeries, Fingerprint)> = graphs
        .par_iter()
        .map_init(
            || PsumEngine::new(k).expect("k checked"),
            |engine, g| {
                let x = engine.kneser_psum(g)?;
                let fp = sampler.fingerprint(&x)?;
                Ok((write_graph6(g), g.is_tree(), x, fp))
            },
        )
        .collect::<Result<_>>()?;

    let mut groups: BTreeMap<&Fingerprint, Vec<usize>> = BTreeMap::new();
    for (i, row) in rows.iter().enumerate() {
        groups.entry(&row.3).or_default().push(i);
    }
    let mut fingerprint_groups = 0;
    let mut confirmed = Vec::new();
    for members in groups.values().filter(|g| g.len() > 1) {
        fingerprint_groups += 1;
        for (a, &i) in members.iter().enumerate() {
            for &j in &members[a + 1..] {
                if rows[i].2 == rows[j].2 {
                    confirmed.push(CollisionPair {
                        first: rows[i].0.clone(),
                        second: rows[j].0.clone(),
                        first_is_tree: rows[i].1,
                        second_is_tree: rows[j].1,
                    });
                }
            }
        }
    }
    confirmed.sort_by(|a, b| (&a.first, &a.second).cmp(&(&b.first, &b.second)));
    Ok(CollideReport {
        n_max,
        k,
        m,
        seed,
        prime: MERSENNE_61,
        trials,
        graphs: rows.len(),
        fingerprint_groups,
        confirmed,
    })
}

/// Checks that `x` is the expansion of some graph isomorphic to `g`.
pub fn series_matches(g: &SimpleGraph, x: &PSeries) -> Result<bool> {
    let fresh = PsumEngine::new(x.k())?.kneser_psum(g)?;
    Ok(fresh.to_json() == x.to_json() && g.canonical_form().is_ok())
}
