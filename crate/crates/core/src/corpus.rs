//! The desk-scale corpus and its invariant sweep.
//!
//! The standard corpus is every finite T0 space with at most four points, up
//! to isomorphism (1 + 2 + 5 + 16 = 24 spaces), with the familiar ones under
//! their usual names. A sweep runs every space check on each space and every
//! map-space check on each ordered pair, comparing the engine against the
//! brute-force [`oracle`](crate::oracle) wherever one exists.
//!
//! On disk a corpus is a directory with a `corpus.json` manifest:
//!
//! ```json
//! {
//!   "all_pairs": true,
//!   "entries": [
//!     { "name": "C4", "space": "spaces/C4.space", "fixtures": "fixtures/C4.json" },
//!     { "name": "C4->C4", "domain": "spaces/C4.space", "codomain": "spaces/C4.space", "fixtures": "fixtures/C4-C4.json" }
//!   ]
//! }
//! ```
//!
//! Fixture files hold oracle outputs and the run that produced them:
//! `{ "provenance": { "oracle_run": "...", "source": "..." }, "values": { "cat": 1, ... } }`.

use std::collections::{BTreeMap, HashMap};
use std::fs;
use std::path::Path;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{Arc, Mutex};

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::cover::minimum_cover_size;
use crate::distance::{axiom_report_of, cat, distance_matrix_of, homotopic_distance, is_good, projections, tc, CatMethod, DistanceMatrix};
use crate::error::{Error, Result};
use crate::extended::ExtendedNat;
use crate::homotopy::{are_homotopic, are_homotopic_by_moves, homotopy_classes, HomotopyClasses};
use crate::io::{load_space, space_to_string};
use crate::limits::Limits;
use crate::oracle;
use crate::pointset::PointSet;
use crate::space::FiniteSpace;
use crate::topology::PseudometricSpace;

/// Names of the checks a sweep tallies.
pub mod check {
    pub const OPENS: &str = "opens_match_oracle";
    pub const NORMALITY: &str = "normality_matches_oracle";
    pub const COMPONENTS: &str = "components_match_oracle";
    pub const CAT_METHODS_AGREE: &str = "cat_methods_agree";
    pub const CAT_ORACLE: &str = "cat_matches_oracle";
    pub const TC_ORACLE: &str = "tc_matches_oracle";
    pub const FIXTURES: &str = "fixtures_match";
    pub const MAPS_ORACLE: &str = "maps_match_oracle";
    pub const PRODUCT_SLICE: &str = "product_slice_isomorphic";
    pub const HOMOTOPY_ORACLE: &str = "homotopy_matches_oracle";
    pub const RESTRICTION: &str = "restriction_preserves_homotopy";
    pub const COVER_ORACLE: &str = "cover_matches_oracle";
    pub const CERTIFICATE: &str = "certificate_minimal";
    pub const ZERO_DIAGONAL: &str = "m1_zero_diagonal";
    pub const SYMMETRIC: &str = "m2_symmetric";
    pub const ZERO_IFF_HOMOTOPIC: &str = "zero_iff_homotopic";
    pub const TRIANGLE_NORMAL: &str = "m3_triangle_normal_domain";
    pub const BOUNDED_BY_CAT: &str = "distance_bounded_by_cat";
    pub const SMALL_BALLS: &str = "small_balls_indiscrete";
    pub const LARGE_BALLS: &str = "large_balls_separated";
    pub const NOT_INDISCRETE_DISCONNECTED: &str = "not_indiscrete_implies_disconnected";
    pub const INFINITE_SEPARATED: &str = "infinite_pairs_separated";
    pub const TOPOLOGY_ORACLE: &str = "topology_matches_oracle";
    pub const QUOTIENT_DISCRETE: &str = "quotient_discrete";
    pub const CONTRACTIBLE_INDISCRETE: &str = "contractible_indiscrete";
}

/// Largest map space whose induced topology is also rebuilt by the oracle.
const TOPOLOGY_ORACLE_MAX: usize = 16;
/// Class representatives whose distances are recomputed with certificates.
const CERTIFICATE_REPS: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub oracle_run: String,
    pub source: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Fixtures {
    pub provenance: Provenance,
    pub values: BTreeMap<String, Value>,
}

#[derive(Clone, Debug)]
pub struct CorpusSpace {
    pub name: String,
    pub space: Arc<FiniteSpace>,
    pub fixtures: Option<Fixtures>,
}

#[derive(Clone, Debug)]
pub struct CorpusPair {
    pub name: String,
    pub domain: Arc<FiniteSpace>,
    pub codomain: Arc<FiniteSpace>,
    pub fixtures: Option<Fixtures>,
}

/// A corpus entry as written in the manifest.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CorpusEntry {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub space: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub domain: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub codomain: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fixtures: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Manifest {
    /// Also sweep every ordered pair of the space entries.
    #[serde(default)]
    pub all_pairs: bool,
    pub entries: Vec<CorpusEntry>,
}

#[derive(Clone, Debug, Default)]
pub struct Corpus {
    pub spaces: Vec<CorpusSpace>,
    pub pairs: Vec<CorpusPair>,
}

/// Every poset on `n` points up to isomorphism, points named `0..n`.
///
/// Each poset has a linear extension, so it suffices to enumerate the
/// transitively closed relations contained in `i < j`.
pub fn posets(n: usize) -> Vec<FiniteSpace> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let names: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    let mut found: Vec<FiniteSpace> = Vec::new();
    let mut buckets: HashMap<Vec<(usize, usize)>, Vec<usize>> = HashMap::new();
    for mask in 0u64..(1 << pairs.len()) {
        let chosen: Vec<(usize, usize)> =
            pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &p)| p).collect();
        let transitive = chosen
            .iter()
            .all(|&(a, b)| chosen.iter().all(|&(c, d)| c != b || chosen.contains(&(a, d))));
        if !transitive {
            continue;
        }
        let space = FiniteSpace::from_pairs(names.clone(), &chosen).expect("acyclic relation");
        let bucket = buckets.entry(signature(&space)).or_default();
        if bucket.iter().any(|&k| found[k].is_isomorphic(&space)) {
            continue;
        }
        bucket.push(found.len());
        found.push(space);
    }
    found
}

fn signature(space: &FiniteSpace) -> Vec<(usize, usize)> {
    let mut sig: Vec<(usize, usize)> = (0..space.len()).map(|x| (space.down(x).len(), space.up(x).len())).collect();
    sig.sort_unstable();
    sig
}

fn named_spaces() -> Vec<(&'static str, FiniteSpace)> {
    vec![
        ("point", FiniteSpace::point()),
        ("S", FiniteSpace::sierpinski()),
        ("C4", FiniteSpace::pseudocircle()),
        ("D2", FiniteSpace::discrete(2)),
        ("D3", FiniteSpace::discrete(3)),
        ("D4", FiniteSpace::discrete(4)),
        ("chain3", FiniteSpace::chain(3)),
        ("chain4", FiniteSpace::chain(4)),
    ]
}

impl Corpus {
    /// All posets with at most `max_points` points and every ordered pair of them.
    pub fn standard(max_points: usize) -> Corpus {
        let named = named_spaces();
        let mut spaces = Vec::new();
        for n in 1..=max_points {
            let mut anonymous = 0;
            for space in posets(n) {
                let (name, space) = match named.iter().find(|(_, s)| s.is_isomorphic(&space)) {
                    Some((name, s)) => (name.to_string(), s.clone()),
                    None => {
                        anonymous += 1;
                        (format!("P{n}.{anonymous}"), space)
                    }
                };
                spaces.push(CorpusSpace { name, space: Arc::new(space), fixtures: None });
            }
        }
        let pairs = all_pairs(&spaces);
        Corpus { spaces, pairs }
    }

    /// Reads a corpus directory.
    pub fn load(dir: impl AsRef<Path>) -> Result<Corpus> {
        let dir = dir.as_ref();
        let manifest_path = dir.join("corpus.json");
        let text = fs::read_to_string(&manifest_path).map_err(|source| Error::Io { path: manifest_path.clone(), source })?;
        let manifest: Manifest =
            serde_json::from_str(&text).map_err(|source| Error::Json { path: manifest_path.clone(), source })?;
        let mut cache: HashMap<String, Arc<FiniteSpace>> = HashMap::new();
        let mut space_at = |rel: &str| -> Result<Arc<FiniteSpace>> {
            if let Some(s) = cache.get(rel) {
                return Ok(s.clone());
            }
            let s = Arc::new(load_space(dir.join(rel))?);
            cache.insert(rel.to_string(), s.clone());
            Ok(s)
        };
        let mut corpus = Corpus::default();
        for entry in &manifest.entries {
            let fixtures = entry.fixtures.as_deref().map(|f| load_fixtures(&dir.join(f))).transpose()?;
            match (&entry.space, &entry.domain, &entry.codomain) {
                (Some(s), None, None) => {
                    corpus.spaces.push(CorpusSpace { name: entry.name.clone(), space: space_at(s)?, fixtures });
                }
                (None, Some(x), Some(y)) => corpus.pairs.push(CorpusPair {
                    name: entry.name.clone(),
                    domain: space_at(x)?,
                    codomain: space_at(y)?,
                    fixtures,
                }),
                _ => {
                    return Err(Error::Parse(
                        format!("corpus entry `{}`", entry.name),
                        "expected either `space` or both `domain` and `codomain`".into(),
                    ))
                }
            }
        }
        if manifest.all_pairs {
            for pair in all_pairs(&corpus.spaces) {
                if !corpus.pairs.iter().any(|p| p.name == pair.name) {
                    corpus.pairs.push(pair);
                }
            }
        }
        Ok(corpus)
    }
}

fn all_pairs(spaces: &[CorpusSpace]) -> Vec<CorpusPair> {
    spaces
        .iter()
        .flat_map(|x| spaces.iter().map(move |y| (x, y)))
        .map(|(x, y)| CorpusPair {
            name: pair_name(&x.name, &y.name),
            domain: x.space.clone(),
            codomain: y.space.clone(),
            fixtures: None,
        })
        .collect()
}

fn pair_name(x: &str, y: &str) -> String {
    format!("{x}->{y}")
}

fn load_fixtures(path: &Path) -> Result<Fixtures> {
    let text = fs::read_to_string(path).map_err(|source| Error::Io { path: path.to_path_buf(), source })?;
    serde_json::from_str(&text).map_err(|source| Error::Json { path: path.to_path_buf(), source })
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub checked: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub check: &'static str,
    pub instance: String,
    pub witness: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Skipped {
    pub instance: String,
    pub reason: String,
}

/// Triangle verdict on a map space whose domain is not normal. Recorded, not asserted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TriangleRecord {
    pub instance: String,
    pub holds: bool,
    pub witness: Option<Vec<String>>,
}

/// A pair with contractible domain and disconnected codomain: outside the
/// scope of the contractibility check, since maps into different components
/// are at distance ∞.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ContractibleException {
    pub instance: String,
    pub infinite_pair: Option<(String, String)>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct SweepReport {
    pub spaces: usize,
    pub pairs: usize,
    pub maps: usize,
    pub tallies: BTreeMap<&'static str, Tally>,
    pub violations: Vec<Violation>,
    pub skipped: Vec<Skipped>,
    pub triangle_archive: Vec<TriangleRecord>,
    pub contractible_exceptions: Vec<ContractibleException>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn tally(&self, check: &str) -> Tally {
        self.tallies.get(check).copied().unwrap_or_default()
    }

    /// Violations of the given checks.
    pub fn violations_of<'a>(&'a self, checks: &'a [&str]) -> impl Iterator<Item = &'a Violation> + 'a {
        self.violations.iter().filter(move |v| checks.contains(&v.check))
    }

    fn record(&mut self, check: &'static str, instance: &str, ok: bool, witness: impl FnOnce() -> String) {
        let t = self.tallies.entry(check).or_default();
        t.checked += 1;
        if !ok {
            t.failed += 1;
            self.violations.push(Violation { check, instance: instance.to_string(), witness: witness() });
        }
    }

    fn merge(&mut self, other: SweepReport) {
        self.spaces += other.spaces;
        self.pairs += other.pairs;
        self.maps += other.maps;
        for (k, t) in other.tallies {
            let mine = self.tallies.entry(k).or_default();
            mine.checked += t.checked;
            mine.failed += t.failed;
        }
        self.violations.extend(other.violations);
        self.skipped.extend(other.skipped);
        self.triangle_archive.extend(other.triangle_archive);
        self.contractible_exceptions.extend(other.contractible_exceptions);
    }
}

/// Runs every check on every space and pair of `corpus`. Work is spread over
/// threads; the report does not depend on scheduling.
pub fn run(corpus: &Corpus, limits: &Limits) -> SweepReport {
    let jobs: Vec<Job> = corpus.spaces.iter().map(Job::Space).chain(corpus.pairs.iter().map(Job::Pair)).collect();
    let results: Mutex<Vec<Option<SweepReport>>> = Mutex::new(vec![None; jobs.len()]);
    let next = AtomicUsize::new(0);
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get()).min(jobs.len().max(1));
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(job) = jobs.get(i) else { break };
                let mut part = SweepReport::default();
                let (name, outcome) = match job {
                    Job::Space(s) => (&s.name, check_space(s, limits, &mut part)),
                    Job::Pair(p) => (&p.name, check_pair(p, limits, &mut part)),
                };
                if let Err(e) = outcome {
                    part.skipped.push(Skipped { instance: name.clone(), reason: e.to_string() });
                }
                results.lock().expect("no poisoned workers")[i] = Some(part);
            });
        }
    });
    let mut report = SweepReport::default();
    for part in results.into_inner().expect("no poisoned workers").into_iter().flatten() {
        report.merge(part);
    }
    report
}

enum Job<'a> {
    Space(&'a CorpusSpace),
    Pair(&'a CorpusPair),
}

fn names(space: &FiniteSpace, s: PointSet) -> String {
    format!("{{{}}}", space.names_of(s).join(","))
}

/// Whether TC is computed for this space during a sweep.
fn sweeps_tc(space: &FiniteSpace) -> bool {
    space.len() <= 3 || space.is_isomorphic(&FiniteSpace::pseudocircle())
}

/// Engine values recorded for a space.
pub fn space_values(space: &Arc<FiniteSpace>, with_tc: bool, limits: &Limits) -> Result<BTreeMap<String, Value>> {
    let mut v = BTreeMap::new();
    v.insert("points".into(), json!(space.len()));
    v.insert("opens".into(), json!(space.open_family(limits)?.len()));
    v.insert("components".into(), json!(space.component_sets().len()));
    v.insert("normal".into(), json!(space.is_normal()));
    v.insert("contractible".into(), json!(space.is_contractible()));
    v.insert("cat".into(), json!(cat(space, CatMethod::Cover, None, limits)?.distance.value));
    if with_tc {
        v.insert("tc".into(), json!(tc(space, limits)?.value));
    }
    Ok(v)
}

/// The same values from the brute-force oracle; TC uses plain move search for goodness.
pub fn oracle_space_values(space: &Arc<FiniteSpace>, with_tc: bool, limits: &Limits) -> Result<BTreeMap<String, Value>> {
    let mut v = BTreeMap::new();
    v.insert("points".into(), json!(space.len()));
    v.insert("opens".into(), json!(oracle::opens(space).len()));
    v.insert("components".into(), json!(oracle::component_count(space)));
    v.insert("normal".into(), json!(oracle::normality(space).0));
    let id: Vec<usize> = (0..space.len()).collect();
    v.insert("contractible".into(), json!(oracle::homotopic(space, space, &id, &vec![0; space.len()])));
    v.insert("cat".into(), json!(oracle_cat(space)));
    if with_tc {
        v.insert("tc".into(), json!(oracle_tc(space, limits)?));
    }
    Ok(v)
}

fn oracle_cat(space: &FiniteSpace) -> ExtendedNat {
    oracle::distance_with(space, |u| {
        let (sub, idx) = space.subspace(u);
        (0..space.len()).any(|t| oracle::homotopic(&sub, space, &idx, &vec![t; idx.len()]))
    })
}

fn oracle_tc(space: &Arc<FiniteSpace>, limits: &Limits) -> Result<ExtendedNat> {
    let (p1, p2) = projections(space)?;
    let square = p1.domain().clone();
    let mut failure = None;
    let value = oracle::distance_with(&square, |u| match are_homotopic_by_moves(&p1.restrict(u), &p2.restrict(u), limits) {
        Ok(b) => b,
        Err(e) => {
            failure.get_or_insert(e);
            false
        }
    });
    match failure {
        Some(e) => Err(e),
        None => Ok(value),
    }
}

fn check_fixtures(instance: &str, fixtures: &Option<Fixtures>, actual: &BTreeMap<String, Value>, r: &mut SweepReport) {
    let Some(fx) = fixtures else { return };
    for (key, expected) in &fx.values {
        let got = actual.get(key).cloned().unwrap_or(Value::Null);
        r.record(check::FIXTURES, instance, &got == expected, || {
            format!("{key}: fixture {expected} (oracle run {}), engine {got}", fx.provenance.oracle_run)
        });
    }
}

fn check_space(s: &CorpusSpace, limits: &Limits, r: &mut SweepReport) -> Result<()> {
    let x = &s.space;
    let name = s.name.as_str();
    r.spaces += 1;

    let opens: Vec<PointSet> = x.open_family(limits)?.iter().map(|o| o.points()).collect();
    let mut brute = oracle::opens(x);
    brute.sort();
    let closed = opens.iter().all(|&a| opens.iter().all(|&b| opens.contains(&a.union(b)) && opens.contains(&a.intersection(b))));
    let bounded = opens.contains(&PointSet::EMPTY) && opens.contains(&x.all_points());
    r.record(check::OPENS, name, opens == brute && closed && bounded, || format!("{} opens, oracle {}", opens.len(), brute.len()));

    let (fast, witness) = x.normality();
    let (slow, slow_witness) = oracle::normality(x);
    r.record(check::NORMALITY, name, fast == slow, || {
        let show = |w: Option<(PointSet, PointSet)>| w.map(|(a, b)| format!("{} {}", names(x, a), names(x, b)));
        format!("fast {fast} {:?}, brute force {slow} {:?}", show(witness), show(slow_witness))
    });

    let components = x.component_sets().len();
    let brute_components = oracle::component_count(x);
    r.record(check::COMPONENTS, name, components == brute_components && x.is_connected() == (components == 1), || {
        format!("{components} components, oracle {brute_components}")
    });

    let cover = cat(x, CatMethod::Cover, None, limits)?.distance.value;
    let brute_cat = oracle_cat(x);
    r.record(check::CAT_ORACLE, name, cover == brute_cat, || format!("cat {cover}, oracle {brute_cat}"));
    if x.is_connected() {
        for p in 0..x.len() {
            let dist = cat(x, CatMethod::Dist, Some(p), limits)?.distance.value;
            r.record(check::CAT_METHODS_AGREE, name, dist == cover, || format!("cover {cover}, dist@{} {dist}", x.name(p)));
        }
        let incl = cat(x, CatMethod::Incl, Some(0), limits)?.distance.value;
        r.record(check::CAT_METHODS_AGREE, name, incl == cover, || format!("cover {cover}, incl@{} {incl}", x.name(0)));
    }

    let with_tc = sweeps_tc(x);
    if with_tc {
        let engine = tc(x, limits)?.value;
        let brute = oracle_tc(x, limits)?;
        r.record(check::TC_ORACLE, name, engine == brute, || format!("tc {engine}, oracle {brute}"));
    }

    if s.fixtures.is_some() {
        let want_tc = s.fixtures.as_ref().is_some_and(|f| f.values.contains_key("tc"));
        let values = space_values(x, with_tc || want_tc, limits)?;
        check_fixtures(name, &s.fixtures, &values, r);
    }
    Ok(())
}

/// Oracle labels of every map restricted to every non-empty open, from the
/// comparability graph of each restricted map space.
struct OracleLabels {
    opens: Vec<PointSet>,
    /// `labels[u][f]`.
    labels: Vec<Vec<usize>>,
    whole: usize,
}

impl OracleLabels {
    fn new(domain: &FiniteSpace, codomain: &FiniteSpace, maps: &[Vec<usize>]) -> Self {
        let opens: Vec<PointSet> = oracle::opens(domain).into_iter().filter(|u| !u.is_empty()).collect();
        let labels = opens
            .iter()
            .map(|&u| {
                let (sub, idx) = domain.subspace(u);
                let (restricted, labels) = oracle::comparability_classes(&sub, codomain);
                maps.iter()
                    .map(|f| {
                        let fu: Vec<usize> = idx.iter().map(|&x| f[x]).collect();
                        labels[restricted.binary_search(&fu).expect("restriction is continuous")]
                    })
                    .collect()
            })
            .collect();
        let whole = opens.iter().position(|&u| u == domain.all_points()).unwrap_or(usize::MAX);
        OracleLabels { opens, labels, whole }
    }

    fn good(&self, i: usize, j: usize) -> Vec<bool> {
        self.labels.iter().map(|row| row[i] == row[j]).collect()
    }

    fn family(&self, good: &[bool]) -> Vec<PointSet> {
        self.opens.iter().zip(good).filter(|(_, &g)| g).map(|(&u, _)| u).collect()
    }
}

/// `D` on every pair of `maps` from oracle goodness and plain subset search.
pub fn oracle_matrix(domain: &FiniteSpace, codomain: &FiniteSpace, maps: &[Vec<usize>]) -> Vec<Vec<ExtendedNat>> {
    let labels = OracleLabels::new(domain, codomain, maps);
    let mut memo: HashMap<Vec<bool>, ExtendedNat> = HashMap::new();
    let n = maps.len();
    let mut d = vec![vec![ExtendedNat::ZERO; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let good = labels.good(i, j);
            let value = *memo.entry(good).or_insert_with_key(|g| cover_value(domain, oracle::min_cover_size(domain.all_points(), &labels.family(g))));
            d[i][j] = value;
            d[j][i] = value;
        }
    }
    d
}

fn cover_value(domain: &FiniteSpace, size: Option<usize>) -> ExtendedNat {
    match size {
        _ if domain.is_empty() => ExtendedNat::ZERO,
        Some(k) => ExtendedNat::Finite(k as u64 - 1),
        None => ExtendedNat::Infinite,
    }
}

/// Engine values recorded for a map space.
pub fn pair_values(classes: &HomotopyClasses, matrix: &DistanceMatrix) -> BTreeMap<String, Value> {
    pair_values_from(classes.maps.len(), classes.blocks.len(), &matrix.entries)
}

fn pair_values_from(maps: usize, classes: usize, d: &[Vec<ExtendedNat>]) -> BTreeMap<String, Value> {
    let flat = || d.iter().flatten();
    let max_finite = flat().filter_map(|v| v.finite()).max().unwrap_or(0);
    let mut v = BTreeMap::new();
    v.insert("maps".into(), json!(maps));
    v.insert("classes".into(), json!(classes));
    v.insert("max_finite_distance".into(), json!(max_finite));
    v.insert("has_infinite".into(), json!(flat().any(|v| !v.is_finite())));
    v
}

/// The same values from the oracle.
pub fn oracle_pair_values(domain: &FiniteSpace, codomain: &FiniteSpace) -> BTreeMap<String, Value> {
    let (maps, labels) = oracle::comparability_classes(domain, codomain);
    let mut distinct = labels.clone();
    distinct.sort_unstable();
    distinct.dedup();
    pair_values_from(maps.len(), distinct.len(), &oracle_matrix(domain, codomain, &maps))
}

fn check_pair(p: &CorpusPair, limits: &Limits, r: &mut SweepReport) -> Result<()> {
    let (x, y) = (&p.domain, &p.codomain);
    let name = p.name.as_str();
    r.pairs += 1;

    let classes = homotopy_classes(x, y, limits)?;
    let maps = &classes.maps;
    r.maps += maps.len();
    let show = |i: usize| format!("{:?}", maps[i]);

    let brute_maps = oracle::all_maps(x, y);
    let images: Vec<Vec<usize>> = maps.iter().map(|m| m.images().to_vec()).collect();
    r.record(check::MAPS_ORACLE, name, images == brute_maps, || format!("{} maps, oracle {}", maps.len(), brute_maps.len()));
    if images != brute_maps {
        return Ok(());
    }

    for y0 in 0..y.len() {
        let product = x.product(y)?;
        let slice: PointSet = (0..x.len()).map(|a| a * y.len() + y0).collect();
        let (sub, _) = product.subspace(slice);
        r.record(check::PRODUCT_SLICE, name, sub.is_isomorphic(x), || format!("slice at {}", y.name(y0)));
    }

    // Homotopy: the engine partition, single-point-move search and the core-reduced decision all match the comparability graph.
    let labels = OracleLabels::new(x, y, &brute_maps);
    let whole = &labels.labels[labels.whole];
    for i in 0..maps.len() {
        let rep = classes.class_of[i];
        let same = (0..maps.len()).all(|j| (classes.class_of[j] == rep) == (whole[j] == whole[i]));
        r.record(check::HOMOTOPY_ORACLE, name, same, || format!("class of {} differs from the comparability component", show(i)));
        if rep != i {
            let moves = are_homotopic_by_moves(&maps[i], &maps[rep], limits)?;
            let fast = are_homotopic(&maps[i], &maps[rep], limits)?;
            r.record(check::HOMOTOPY_ORACLE, name, moves && fast, || format!("{} ≄ {}", show(i), show(rep)));
        }
    }
    let reps = classes.representatives();
    for (a, &i) in reps.iter().enumerate() {
        for &j in &reps[a + 1..] {
            let moves = are_homotopic_by_moves(&maps[i], &maps[j], limits)?;
            let fast = are_homotopic(&maps[i], &maps[j], limits)?;
            r.record(check::HOMOTOPY_ORACLE, name, !moves && !fast, || format!("{} ≃ {}", show(i), show(j)));
        }
    }

    let opens: Vec<PointSet> = x.open_family(limits)?.iter().map(|o| o.points()).filter(|u| !u.is_empty()).collect();
    for i in 0..maps.len() {
        let rep = classes.class_of[i];
        if rep == i {
            continue;
        }
        for &v in &opens {
            let ok = are_homotopic(&maps[i].restrict(v), &maps[rep].restrict(v), limits)?;
            r.record(check::RESTRICTION, name, ok, || format!("{} and {} on {}", show(i), show(rep), names(x, v)));
        }
    }

    let matrix = distance_matrix_of(maps.clone(), limits)?;
    let d = &matrix.entries;

    let mut memo: HashMap<Vec<bool>, (Option<usize>, Option<usize>)> = HashMap::new();
    for i in 0..maps.len() {
        for j in i + 1..maps.len() {
            let good = labels.good(i, j);
            let (brute, bnb) = *memo.entry(good).or_insert_with_key(|g| {
                let family = labels.family(g);
                (oracle::min_cover_size(x.all_points(), &family), minimum_cover_size(x.all_points(), &family))
            });
            let expected = cover_value(x, brute);
            r.record(check::COVER_ORACLE, name, d[i][j] == expected && bnb == brute, || {
                format!("D({}, {}) = {}, oracle {expected}; cover search {bnb:?}, subset search {brute:?}", show(i), show(j), d[i][j])
            });
        }
    }

    for (a, &i) in reps.iter().take(CERTIFICATE_REPS).enumerate() {
        for &j in reps.iter().take(CERTIFICATE_REPS).skip(a + 1) {
            let dist = homotopic_distance(&maps[i], &maps[j], limits)?;
            let ok = match &dist.certificate {
                None => !dist.value.is_finite(),
                Some(cert) => {
                    let sets: Vec<PointSet> = cert.opens.iter().map(|o| o.points()).collect();
                    let covers = |skip: Option<usize>| {
                        sets.iter().enumerate().filter(|(k, _)| Some(*k) != skip).fold(PointSet::EMPTY, |a, (_, s)| a.union(*s)) == x.all_points()
                    };
                    let all_good = sets
                        .iter()
                        .map(|&u| is_good(&maps[i], &maps[j], u, limits))
                        .collect::<Result<Vec<bool>>>()?
                        .into_iter()
                        .all(|g| g);
                    let minimal = sets.len() == 1 || (0..sets.len()).all(|k| !covers(Some(k)));
                    dist.value == ExtendedNat::Finite(sets.len() as u64 - 1) && covers(None) && all_good && minimal
                }
            };
            r.record(check::CERTIFICATE, name, ok && dist.value == d[i][j], || {
                format!("D({}, {}) = {} with certificate {:?}, matrix {}", show(i), show(j), dist.value, dist.certificate_names(x), d[i][j])
            });
        }
    }

    let axioms = axiom_report_of(&matrix, &classes.class_of, x.is_normal());
    let pick = |w: &Option<Vec<usize>>| w.as_ref().map(|w| w.iter().map(|&i| show(i)).collect::<Vec<_>>().join(", ")).unwrap_or_default();
    r.record(check::ZERO_DIAGONAL, name, axioms.zero_diagonal.holds, || pick(&axioms.zero_diagonal.witness));
    r.record(check::SYMMETRIC, name, axioms.symmetric.holds, || pick(&axioms.symmetric.witness));
    r.record(check::ZERO_IFF_HOMOTOPIC, name, axioms.zero_iff_homotopic.holds, || pick(&axioms.zero_iff_homotopic.witness));
    if axioms.triangle.asserted {
        r.record(check::TRIANGLE_NORMAL, name, axioms.triangle.holds, || pick(&axioms.triangle.witness));
    } else {
        r.triangle_archive.push(TriangleRecord {
            instance: name.to_string(),
            holds: axioms.triangle.holds,
            witness: axioms.triangle.witness.as_ref().map(|w| w.iter().map(|&i| show(i)).collect()),
        });
    }

    if y.is_connected() {
        let bound = cat(x, CatMethod::Cover, None, limits)?.distance.value;
        let worst = d.iter().flatten().copied().max().unwrap_or(ExtendedNat::ZERO);
        r.record(check::BOUNDED_BY_CAT, name, worst <= bound, || format!("max D = {worst}, cat = {bound}"));
    }

    let labels_text: Vec<String> = (0..maps.len()).map(show).collect();
    let space = PseudometricSpace::from_matrix(labels_text, d.clone(), false)?;
    let props = space.property_report()?;
    let ball = |b: &[crate::topology::BallWitness]| {
        b.first().map(|w| format!("B_{}({}) = {:?}", w.radius, show(w.center), w.members)).unwrap_or_default()
    };
    r.record(check::SMALL_BALLS, name, props.small_balls_indiscrete, || ball(&props.small_ball_violations));
    r.record(check::LARGE_BALLS, name, props.large_balls_disconnected, || ball(&props.large_ball_violations));
    r.record(check::NOT_INDISCRETE_DISCONNECTED, name, props.not_indiscrete_implies_disconnected, || "topology is neither indiscrete nor disconnected".into());
    r.record(check::INFINITE_SEPARATED, name, props.infinite_pairs_separated, || "a pair at distance ∞ shares a component".into());

    if maps.len() <= TOPOLOGY_ORACLE_MAX {
        let generators: Vec<Vec<usize>> = (0..maps.len())
            .flat_map(|c| space.thresholds().map(move |t| (c, t)))
            .map(|(c, t)| (0..maps.len()).filter(|&g| d[c][g] < t).collect())
            .collect();
        let brute = oracle::generated_topology(maps.len(), &generators);
        let topology = space.generate_topology(None)?;
        let ok = topology.opens(1 << 16).as_ref() == Some(&brute) && topology.is_connected() == oracle::topology_connected(maps.len(), &brute);
        r.record(check::TOPOLOGY_ORACLE, name, ok, || format!("{} oracle opens", brute.len()));
    }

    let dist: Vec<Vec<ExtendedNat>> = reps.iter().map(|&i| reps.iter().map(|&j| d[i][j]).collect()).collect();
    let quotient = PseudometricSpace::from_matrix(reps.iter().map(|&i| show(i)).collect(), dist, true);
    let discrete = match &quotient {
        Ok(q) => q.generate_topology(None)?.is_discrete(),
        Err(_) => false,
    };
    r.record(check::QUOTIENT_DISCRETE, name, discrete, || match quotient {
        Err(e) => e.to_string(),
        Ok(_) => "class quotient is not discrete".into(),
    });

    let in_scope = y.is_contractible() || (x.is_contractible() && y.is_connected());
    if in_scope {
        let nonzero = (0..maps.len()).flat_map(|i| (0..maps.len()).map(move |j| (i, j))).find(|&(i, j)| d[i][j] != 0);
        r.record(check::CONTRACTIBLE_INDISCRETE, name, nonzero.is_none() && props.indiscrete, || match nonzero {
            Some((i, j)) => format!("D({}, {}) = {}", show(i), show(j), d[i][j]),
            None => "induced topology is not indiscrete".into(),
        });
    } else if x.is_contractible() {
        let infinite = (0..maps.len()).flat_map(|i| (0..maps.len()).map(move |j| (i, j))).find(|&(i, j)| !d[i][j].is_finite());
        r.contractible_exceptions.push(ContractibleException {
            instance: name.to_string(),
            infinite_pair: infinite.map(|(i, j)| (show(i), show(j))),
        });
    }

    if p.fixtures.is_some() {
        check_fixtures(name, &p.fixtures, &pair_values(&classes, &matrix), r);
    }
    Ok(())
}

/// Pairs given fixtures by [`generate`].
pub const FIXTURE_PAIRS: &[(&str, &str)] = &[("point", "C4"), ("C4", "C4"), ("D2", "D2"), ("S", "C4"), ("C4", "D2"), ("chain3", "D3")];

/// Writes the standard corpus to `dir` with oracle fixtures for every space
/// and for [`FIXTURE_PAIRS`], labelled with `run_id`.
pub fn generate(dir: impl AsRef<Path>, max_points: usize, run_id: &str, limits: &Limits) -> Result<Manifest> {
    let dir = dir.as_ref();
    let corpus = Corpus::standard(max_points);
    let write = |rel: &str, text: String| -> Result<()> {
        let path = dir.join(rel);
        if let Some(parent) = path.parent() {
            fs::create_dir_all(parent).map_err(|source| Error::Io { path: parent.to_path_buf(), source })?;
        }
        fs::write(&path, text).map_err(|source| Error::Io { path, source })
    };
    let provenance = Provenance { oracle_run: run_id.to_string(), source: "brute-force oracle".into() };
    let fixture_text = |values: BTreeMap<String, Value>| {
        let mut text = serde_json::to_string_pretty(&Fixtures { provenance: provenance.clone(), values }).expect("serializable");
        text.push('\n');
        text
    };
    let mut entries = Vec::new();
    for s in &corpus.spaces {
        let space_file = format!("spaces/{}.space", s.name);
        let fixture_file = format!("fixtures/{}.json", s.name);
        write(&space_file, space_to_string(&s.space))?;
        write(&fixture_file, fixture_text(oracle_space_values(&s.space, sweeps_tc(&s.space), limits)?))?;
        entries.push(CorpusEntry { name: s.name.clone(), space: Some(space_file), domain: None, codomain: None, fixtures: Some(fixture_file) });
    }
    for &(a, b) in FIXTURE_PAIRS {
        let find = |n: &str| corpus.spaces.iter().find(|s| s.name == n);
        let (Some(x), Some(y)) = (find(a), find(b)) else { continue };
        let fixture_file = format!("fixtures/{a}-{b}.json");
        write(&fixture_file, fixture_text(oracle_pair_values(&x.space, &y.space)))?;
        entries.push(CorpusEntry {
            name: pair_name(a, b),
            space: None,
            domain: Some(format!("spaces/{a}.space")),
            codomain: Some(format!("spaces/{b}.space")),
            fixtures: Some(fixture_file),
        });
    }
    let manifest = Manifest { all_pairs: true, entries };
    let mut text = serde_json::to_string_pretty(&manifest).expect("serializable");
    text.push('\n');
    write("corpus.json", text)?;
    Ok(manifest)
}
