//! Exhaustive enumeration of super edge-magic and edge-magic labelings.
//!
//! Both searches split their space into disjoint partitions (the label of
//! the first placed vertex for SEM, the candidate valence for EM) and merge
//! partition outcomes in index order, so every reported set, count and
//! witness is independent of the worker count.

mod em;
mod feasibility;
mod plan;
mod sem;

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Arc;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

pub use feasibility::{prune_feasibility, Feasibility, InfeasibleReason};

use crate::error::EnumerationError;
use crate::graph::Graph;
use crate::interval::{em_interval, sem_interval, IntervalReport};
use crate::labeling::{extend_sem, Mode, Signature, TotalLabeling, VertexLabeling};

/// Default bound on `p` for super edge-magic enumeration.
pub const DEFAULT_MAX_SEM_ORDER: usize = 12;
/// Default bound on `p + q` for edge-magic enumeration.
pub const DEFAULT_MAX_EM_SIZE: usize = 16;
/// Labels live in a `u64` bitset.
const HARD_LABEL_LIMIT: usize = 63;

#[derive(Debug, Clone, PartialEq)]
pub struct SearchOptions {
    pub time_limit: Option<Duration>,
    pub node_limit: Option<u64>,
    /// Count and collect signature classes instead of raw labelings.
    pub dedup: bool,
    /// Keep every labeling found, not only one witness per valence.
    pub collect_all: bool,
    /// Compute `labeling_count`. When off, the edge-magic search stops each
    /// valence at its first witness.
    pub count: bool,
    pub workers: usize,
    pub max_sem_order: usize,
    pub max_em_size: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            time_limit: None,
            node_limit: None,
            dedup: true,
            collect_all: false,
            count: true,
            workers: 1,
            max_sem_order: DEFAULT_MAX_SEM_ORDER,
            max_em_size: DEFAULT_MAX_EM_SIZE,
        }
    }
}

impl SearchOptions {
    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers;
        self
    }

    /// Spectrum only: no counting, first witness per valence.
    pub fn spectrum_only(mut self) -> Self {
        self.count = false;
        self.collect_all = false;
        self
    }

    pub fn validate(&self) -> Result<(), EnumerationError> {
        if self.workers == 0 {
            return Err(EnumerationError::Options("workers must be positive".into()));
        }
        if self.node_limit == Some(0) {
            return Err(EnumerationError::Options("node limit must be positive".into()));
        }
        if self.time_limit.is_some_and(|t| t.is_zero()) {
            return Err(EnumerationError::Options("time limit must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes: u64,
    pub partitions: usize,
    pub signature_collisions: u64,
    /// Why the search was skipped without expanding nodes, if it was.
    pub pruned: Option<String>,
    pub elapsed: Duration,
}

#[derive(Debug, Clone)]
pub struct SpectrumReport {
    pub kind: Mode,
    pub interval: IntervalReport,
    pub achieved: BTreeSet<u32>,
    pub witnesses: BTreeMap<u32, TotalLabeling>,
    /// Signature classes (or raw labelings without dedup); `None` when not
    /// requested.
    pub labeling_count: Option<u64>,
    pub labelings: Option<Vec<TotalLabeling>>,
    pub perfect: bool,
    pub exact: bool,
    pub stats: SearchStats,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct SpectrumJson {
    pub kind: Mode,
    pub interval: Option<[u32; 2]>,
    pub achieved: Vec<u32>,
    pub count: Option<u64>,
    pub perfect: bool,
    pub exact: bool,
    pub stats: StatsJson,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct StatsJson {
    pub nodes: u64,
    pub partitions: usize,
    pub signature_collisions: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pruned: Option<String>,
}

impl SpectrumReport {
    /// Wire form; elapsed time is deliberately left out so identical queries
    /// serialize identically.
    pub fn to_json(&self) -> SpectrumJson {
        SpectrumJson {
            kind: self.kind,
            interval: self.interval.bounds().map(|(a, b)| [a, b]),
            achieved: self.achieved.iter().copied().collect(),
            count: self.labeling_count,
            perfect: self.perfect,
            exact: self.exact,
            stats: StatsJson {
                nodes: self.stats.nodes,
                partitions: self.stats.partitions,
                signature_collisions: self.stats.signature_collisions,
                pruned: self.stats.pruned.clone(),
            },
        }
    }

    /// Interval values never achieved.
    pub fn missing(&self) -> Vec<u32> {
        self.interval
            .values()
            .filter(|k| !self.achieved.contains(k))
            .collect()
    }
}

/// Shared limits across partitions.
pub(crate) struct Budget {
    nodes: AtomicU64,
    node_limit: Option<u64>,
    deadline: Option<Instant>,
    aborted: AtomicBool,
    /// Smallest partition index that already found a witness (existence mode).
    found: AtomicUsize,
}

const FLUSH: u64 = 256;

impl Budget {
    fn new(opts: &SearchOptions) -> Self {
        Budget {
            nodes: AtomicU64::new(0),
            node_limit: opts.node_limit,
            deadline: opts.time_limit.map(|t| Instant::now() + t),
            aborted: AtomicBool::new(false),
            found: AtomicUsize::new(usize::MAX),
        }
    }

    fn aborted(&self) -> bool {
        self.aborted.load(Ordering::Relaxed)
    }
}

/// Per-partition node accounting with batched flushes to the shared budget.
pub(crate) struct Meter<'a> {
    budget: &'a Budget,
    partition: usize,
    pending: u64,
    flush_every: u64,
    pub nodes: u64,
    pub stopped: bool,
    pub aborted: bool,
}

impl<'a> Meter<'a> {
    fn new(budget: &'a Budget, partition: usize) -> Self {
        let aborted = budget.aborted();
        Meter {
            budget,
            partition,
            pending: 0,
            flush_every: budget.node_limit.map_or(FLUSH, |l| l.clamp(1, FLUSH)),
            nodes: 0,
            stopped: aborted || budget.found.load(Ordering::Relaxed) < partition,
            aborted,
        }
    }

    /// Counts one node; returns false when the search must unwind.
    #[inline]
    pub fn tick(&mut self) -> bool {
        if self.stopped {
            return false;
        }
        self.nodes += 1;
        self.pending += 1;
        if self.pending >= self.flush_every {
            self.flush();
        }
        !self.stopped
    }

    fn flush(&mut self) {
        let total = self.budget.nodes.fetch_add(self.pending, Ordering::Relaxed) + self.pending;
        self.pending = 0;
        let over_nodes = self.budget.node_limit.is_some_and(|l| total > l);
        let over_time = self.budget.deadline.is_some_and(|d| Instant::now() > d);
        if over_nodes || over_time {
            self.budget.aborted.store(true, Ordering::Relaxed);
        }
        if self.budget.aborted() {
            self.stopped = true;
            self.aborted = true;
        } else if self.budget.found.load(Ordering::Relaxed) < self.partition {
            self.stopped = true;
        }
    }

    /// Stops this partition after a witness; with `global`, also stops every
    /// later partition.
    pub fn found(&mut self, global: bool) {
        if global {
            self.budget.found.fetch_min(self.partition, Ordering::Relaxed);
        }
        self.stopped = true;
    }

    fn finish(&mut self) {
        if self.pending > 0 {
            let total =
                self.budget.nodes.fetch_add(self.pending, Ordering::Relaxed) + self.pending;
            self.pending = 0;
            if self.budget.node_limit.is_some_and(|l| total > l) {
                self.budget.aborted.store(true, Ordering::Relaxed);
            }
        }
    }
}

/// What one partition contributes to the merged report.
#[derive(Debug, Default)]
pub(crate) struct Outcome {
    pub nodes: u64,
    pub aborted: bool,
    /// valence → first vertex assignment found (DFS order).
    pub witnesses: BTreeMap<u32, Vec<u32>>,
    /// signature → (valence, first vertex assignment)
    pub classes: Vec<(Signature, u32, Vec<u32>)>,
    pub raw_count: u64,
    pub raw: Vec<(u32, Vec<u32>)>,
}

/// What the leaf callback should record.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Collect {
    pub dedup: bool,
    pub count: bool,
    pub collect_all: bool,
    /// Stop a partition at its first leaf.
    pub first_only: bool,
    /// Stop every later partition too.
    pub global_first: bool,
}

impl Outcome {
    /// Records one leaf standing for `multiplicity` raw labelings (isolated
    /// vertices permuted among themselves).
    pub fn record(
        &mut self,
        graph: &Graph,
        valence: u32,
        vertices: &[u32],
        collect: Collect,
        multiplicity: u64,
    ) {
        self.raw_count += multiplicity;
        self.witnesses.entry(valence).or_insert_with(|| vertices.to_vec());
        if collect.dedup && (collect.count || collect.collect_all) {
            self.classes
                .push((Signature::of(graph, vertices), valence, vertices.to_vec()));
        }
        if !collect.dedup && collect.collect_all {
            self.raw.push((valence, vertices.to_vec()));
        }
    }
}

/// Runs `n` partitions on `workers` threads and returns outcomes in
/// partition order.
fn run_partitions<F>(n: usize, opts: &SearchOptions, budget: &Budget, work: F) -> Vec<Outcome>
where
    F: Fn(usize, &mut Meter<'_>) -> Outcome + Sync,
{
    let one = |i: usize| {
        let mut meter = Meter::new(budget, i);
        let mut out = work(i, &mut meter);
        meter.finish();
        out.nodes = meter.nodes;
        out.aborted = meter.aborted;
        out
    };
    if opts.workers <= 1 || n <= 1 {
        return (0..n).map(one).collect();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(opts.workers).build() {
        Ok(pool) => pool.install(|| (0..n).into_par_iter().map(one).collect()),
        Err(_) => (0..n).map(one).collect(),
    }
}

fn check_guards(g: &Graph, kind: Mode, opts: &SearchOptions) -> Result<(), EnumerationError> {
    if g.size() == 0 {
        return Err(EnumerationError::NoEdges);
    }
    let (what, value, limit) = match kind {
        Mode::Sem => ("p", g.order(), opts.max_sem_order.min(HARD_LABEL_LIMIT)),
        Mode::Em => ("p+q", g.order() + g.size(), opts.max_em_size.min(HARD_LABEL_LIMIT)),
    };
    if value > limit {
        return Err(EnumerationError::GuardExceeded { what, value, limit });
    }
    Ok(())
}

/// Turns a leaf's vertex assignment into a checked labeling.
fn build_labeling(graph: &Arc<Graph>, kind: Mode, k: u32, vertices: Vec<u32>) -> TotalLabeling {
    match kind {
        Mode::Sem => {
            let vl = VertexLabeling::new(Arc::clone(graph), vertices)
                .expect("search yields vertex bijections");
            extend_sem(&vl).expect("search yields consecutive edge sums")
        }
        Mode::Em => {
            let edges = graph
                .edges()
                .iter()
                .map(|&(u, v)| k - vertices[u - 1] - vertices[v - 1])
                .collect();
            TotalLabeling::new(Arc::clone(graph), vertices, edges)
                .expect("search yields edge-magic labelings")
        }
    }
}

/// Merges partition outcomes (in order) into a report.
fn merge(
    graph: &Arc<Graph>,
    kind: Mode,
    interval: IntervalReport,
    outcomes: Vec<Outcome>,
    collect: Collect,
    started: Instant,
) -> SpectrumReport {
    let mut stats = SearchStats {
        partitions: outcomes.len(),
        ..SearchStats::default()
    };
    let mut exact = true;
    let mut witnesses: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
    let mut classes: HashMap<Signature, (u32, Vec<u32>)> = HashMap::new();
    let mut raw_count = 0u64;
    let mut raw = Vec::new();
    for out in outcomes {
        stats.nodes += out.nodes;
        exact &= !out.aborted;
        raw_count += out.raw_count;
        for (k, w) in out.witnesses {
            witnesses.entry(k).or_insert(w);
        }
        for (sig, k, w) in out.classes {
            match classes.get(&sig) {
                Some((k0, _)) if *k0 != k => stats.signature_collisions += 1,
                Some(_) => {}
                None => {
                    classes.insert(sig, (k, w));
                }
            }
        }
        raw.extend(out.raw);
    }
    let build = |k: u32, vertices: Vec<u32>| build_labeling(graph, kind, k, vertices);
    let achieved: BTreeSet<u32> = witnesses.keys().copied().collect();
    let labeling_count = collect.count.then_some({
        if collect.dedup {
            classes.len() as u64
        } else {
            raw_count
        }
    });
    let labelings = collect.collect_all.then(|| {
        let mut list: Vec<(u32, Vec<u32>)> = if collect.dedup {
            classes.into_values().collect()
        } else {
            raw
        };
        list.sort();
        list.into_iter().map(|(k, v)| build(k, v)).collect()
    });
    let witnesses: BTreeMap<u32, TotalLabeling> =
        witnesses.into_iter().map(|(k, v)| (k, build(k, v))).collect();
    let perfect = exact && !interval.is_empty() && interval.values().all(|k| achieved.contains(&k));
    stats.elapsed = started.elapsed();
    SpectrumReport {
        kind,
        interval,
        achieved,
        witnesses,
        labeling_count,
        labelings,
        perfect,
        exact,
        stats,
    }
}

fn empty_report(kind: Mode, interval: IntervalReport, collect: Collect, reason: String) -> SpectrumReport {
    SpectrumReport {
        kind,
        interval,
        achieved: BTreeSet::new(),
        witnesses: BTreeMap::new(),
        labeling_count: collect.count.then_some(0),
        labelings: collect.collect_all.then(Vec::new),
        perfect: false,
        exact: true,
        stats: SearchStats {
            pruned: Some(reason),
            ..SearchStats::default()
        },
    }
}

/// Every super edge-magic labeling of `g`: searches vertex bijections whose
/// edge sums are `q` consecutive integers.
pub fn enumerate_sem(g: &Graph, opts: &SearchOptions) -> Result<SpectrumReport, EnumerationError> {
    opts.validate()?;
    check_guards(g, Mode::Sem, opts)?;
    let interval = sem_interval(g)?;
    let collect = Collect {
        dedup: opts.dedup,
        count: opts.count,
        collect_all: opts.collect_all,
        first_only: false,
        global_first: false,
    };
    if let Feasibility::NotSem(reason) = prune_feasibility(g) {
        return Ok(empty_report(Mode::Sem, interval, collect, reason.to_string()));
    }
    if interval.is_empty() {
        return Ok(empty_report(Mode::Sem, interval, collect, "empty interval".into()));
    }
    let started = Instant::now();
    let graph = Arc::new(g.clone());
    let search = sem::SemSearch::new(g, opts.dedup);
    let budget = Budget::new(opts);
    let outcomes = run_partitions(search.partitions(), opts, &budget, |i, meter| {
        search.run(i, meter, collect)
    });
    Ok(merge(&graph, Mode::Sem, interval, outcomes, collect, started))
}

/// Every edge-magic labeling of `g`, one candidate valence of `λ_G` at a time.
pub fn enumerate_em(g: &Graph, opts: &SearchOptions) -> Result<SpectrumReport, EnumerationError> {
    opts.validate()?;
    check_guards(g, Mode::Em, opts)?;
    let interval = em_interval(g)?;
    let collect = Collect {
        dedup: opts.dedup,
        count: opts.count,
        collect_all: opts.collect_all,
        first_only: !opts.count && !opts.collect_all,
        global_first: false,
    };
    if interval.is_empty() {
        return Ok(empty_report(Mode::Em, interval, collect, "empty interval".into()));
    }
    let started = Instant::now();
    let graph = Arc::new(g.clone());
    let search = em::EmSearch::new(g, &interval, opts.dedup);
    let budget = Budget::new(opts);
    let outcomes = run_partitions(search.partitions(), opts, &budget, |i, meter| {
        search.run(i, meter, collect)
    });
    Ok(merge(&graph, Mode::Em, interval, outcomes, collect, started))
}

pub fn enumerate(g: &Graph, kind: Mode, opts: &SearchOptions) -> Result<SpectrumReport, EnumerationError> {
    match kind {
        Mode::Sem => enumerate_sem(g, opts),
        Mode::Em => enumerate_em(g, opts),
    }
}

/// Finds one labeling of the given kind, stopping as soon as the lowest
/// partition with a solution is settled. `Ok(None)` is an exact negative.
pub fn find_labeling(
    g: &Graph,
    kind: Mode,
    opts: &SearchOptions,
) -> Result<Option<TotalLabeling>, EnumerationError> {
    opts.validate()?;
    check_guards(g, kind, opts)?;
    let interval = match kind {
        Mode::Sem => sem_interval(g)?,
        Mode::Em => em_interval(g)?,
    };
    if interval.is_empty() {
        return Ok(None);
    }
    if kind == Mode::Sem && matches!(prune_feasibility(g), Feasibility::NotSem(_)) {
        return Ok(None);
    }
    let collect = Collect {
        dedup: true,
        count: false,
        collect_all: false,
        first_only: true,
        global_first: true,
    };
    let graph = Arc::new(g.clone());
    let budget = Budget::new(opts);
    let outcomes = match kind {
        Mode::Sem => {
            let search = sem::SemSearch::new(g, true);
            run_partitions(search.partitions(), opts, &budget, |i, meter| {
                search.run(i, meter, collect)
            })
        }
        Mode::Em => {
            let search = em::EmSearch::new(g, &interval, true);
            run_partitions(search.partitions(), opts, &budget, |i, meter| {
                search.run(i, meter, collect)
            })
        }
    };
    // the lowest partition with a witness is conclusive once every lower
    // partition ran to completion
    let mut nodes = 0;
    for out in outcomes {
        nodes += out.nodes;
        if let Some((k, v)) = out.witnesses.into_iter().next() {
            return Ok(Some(build_labeling(&graph, kind, k, v)));
        }
        if out.aborted {
            return Err(EnumerationError::Inconclusive { nodes });
        }
    }
    Ok(None)
}

#[derive(Debug, Clone)]
pub struct PerfectVerdict {
    pub perfect: bool,
    pub report: SpectrumReport,
}

/// Whether the achieved valence set covers the whole interval.
pub fn is_perfect(g: &Graph, kind: Mode, opts: &SearchOptions) -> Result<PerfectVerdict, EnumerationError> {
    let opts = SearchOptions {
        count: false,
        collect_all: false,
        ..opts.clone()
    };
    let report = enumerate(g, kind, &opts)?;
    if report.interval.is_empty() {
        return Err(EnumerationError::EmptyInterval);
    }
    if !report.exact {
        return Err(EnumerationError::Inconclusive {
            nodes: report.stats.nodes,
        });
    }
    Ok(PerfectVerdict {
        perfect: report.perfect,
        report,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::FamilySpec;
    use crate::labeling::complement;

    fn graph(s: &str) -> Graph {
        s.parse::<FamilySpec>().unwrap().build().unwrap()
    }

    fn opts() -> SearchOptions {
        SearchOptions::default()
    }

    fn set(v: &[u32]) -> BTreeSet<u32> {
        v.iter().copied().collect()
    }

    #[test]
    fn c3_family() {
        let r = enumerate_sem(&graph("cycle:3"), &opts()).unwrap();
        assert_eq!(r.achieved, set(&[9]));
        assert!(r.perfect && r.exact);
        let r = enumerate_sem(&graph("union:cycle:3+1K1"), &opts()).unwrap();
        assert_eq!(r.achieved, set(&[10, 12]));
        assert_eq!(r.interval.bounds(), Some((10, 12)));
        assert_eq!(r.missing(), vec![11]);
        assert!(!r.perfect);
    }

    #[test]
    fn star_counts_small() {
        for n in 2..=5 {
            for l in 1..=3 {
                let r = enumerate_sem(&graph(&format!("star:n={n},l={l}")), &opts()).unwrap();
                assert_eq!(r.labeling_count, Some(((l + 1) * (l + 2)) as u64), "n={n} l={l}");
            }
        }
    }

    #[test]
    fn k12_valences() {
        let g = graph("star:n=2");
        assert_eq!(enumerate_em(&g, &opts()).unwrap().achieved.len(), 3);
        assert_eq!(enumerate_sem(&g, &opts()).unwrap().achieved.len(), 2);
        assert_eq!(enumerate_em(&graph("path:2"), &opts()).unwrap().achieved, set(&[6]));
    }

    #[test]
    fn perfect_examples() {
        assert!(is_perfect(&graph("path:4"), Mode::Sem, &opts()).unwrap().perfect);
        assert!(is_perfect(&graph("cycle:3"), Mode::Sem, &opts()).unwrap().perfect);
        assert!(!is_perfect(&graph("union:cycle:3+1K1"), Mode::Sem, &opts()).unwrap().perfect);
        assert_eq!(
            is_perfect(&graph("cycle:4"), Mode::Sem, &opts()).unwrap_err(),
            EnumerationError::EmptyInterval
        );
    }

    #[test]
    fn witnesses_validate() {
        for s in ["cycle:5", "cmn:m=3,n=1", "star:n=3,l=2", "path:5"] {
            let g = graph(s);
            for kind in [Mode::Sem, Mode::Em] {
                let r = enumerate(&g, kind, &opts()).unwrap();
                for (k, w) in &r.witnesses {
                    assert_eq!(w.valence(), *k);
                    assert!(r.interval.contains(*k));
                    if kind == Mode::Sem {
                        assert!(w.is_super());
                    }
                }
            }
        }
    }

    #[test]
    fn dedup_off_counts_raw() {
        // star(2,1): every SEM bijection; leaves and isolated permute freely
        let g = graph("star:n=2,l=1");
        let raw = enumerate_sem(&g, &SearchOptions { dedup: false, ..opts() }).unwrap();
        let classes = enumerate_sem(&g, &opts()).unwrap();
        assert_eq!(classes.labeling_count, Some(6));
        assert_eq!(raw.labeling_count, Some(12));
        assert_eq!(raw.achieved, classes.achieved);
    }

    #[test]
    fn collect_all_is_complement_closed() {
        let g = graph("cycle:5");
        let r = enumerate_sem(&g, &SearchOptions { collect_all: true, ..opts() }).unwrap();
        let all = r.labelings.unwrap();
        assert_eq!(all.len() as u64, r.labeling_count.unwrap());
        for f in &all {
            let fbar = complement(f, Mode::Sem).unwrap();
            assert_eq!(f.valence() + fbar.valence(), 4 * 5 + 5 + 3);
            assert!(all.iter().any(|h| h.signature() == fbar.signature()));
        }
    }

    #[test]
    fn limits_mark_partial() {
        let g = graph("cycle:7");
        let r = enumerate_em(&g, &SearchOptions { node_limit: Some(10), ..opts() }).unwrap();
        assert!(!r.exact);
        assert!(!r.perfect);
        let err = is_perfect(&g, Mode::Em, &SearchOptions { node_limit: Some(10), ..opts() });
        assert!(matches!(err, Err(EnumerationError::Inconclusive { .. })));
    }

    #[test]
    fn guards_and_options() {
        let big = graph("path:13");
        assert!(matches!(
            enumerate_sem(&big, &opts()),
            Err(EnumerationError::GuardExceeded { .. })
        ));
        assert!(matches!(
            enumerate_em(&graph("cycle:9"), &opts()),
            Err(EnumerationError::GuardExceeded { .. })
        ));
        assert!(enumerate_sem(&graph("cycle:3"), &SearchOptions { workers: 0, ..opts() }).is_err());
        assert_eq!(
            enumerate_sem(&Graph::new(2, []).unwrap(), &opts()).unwrap_err(),
            EnumerationError::NoEdges
        );
    }

    #[test]
    fn find_labeling_examples() {
        assert!(find_labeling(&graph("cycle:4"), Mode::Sem, &opts()).unwrap().is_none());
        let f = find_labeling(&graph("union:cycle:4+1K1"), Mode::Sem, &opts()).unwrap().unwrap();
        assert!(f.is_super());
        let f = find_labeling(&graph("cycle:4"), Mode::Em, &opts()).unwrap().unwrap();
        assert_eq!(f.graph().size(), 4);
    }

    #[test]
    fn worker_count_does_not_change_results() {
        for s in ["cycle:6", "star:n=3,l=2", "cmn:m=3,n=1"] {
            let g = graph(s);
            for kind in [Mode::Sem, Mode::Em] {
                let base = enumerate(&g, kind, &opts()).unwrap().to_json();
                for w in [2, 4] {
                    let other = enumerate(&g, kind, &opts().with_workers(w)).unwrap().to_json();
                    assert_eq!(base, other, "{s} {kind} workers={w}");
                }
            }
        }
    }
}
