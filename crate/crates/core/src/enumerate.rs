//! Exhaustive generation of k-vertex-critical family-free graphs up to a
//! vertex bound, and verification of graph6 corpora.
//!
//! The generator is level-synchronous. The frontier at order n holds every
//! connected family-free (k-1)-colorable graph on n vertices, one per
//! isomorphism class: each such graph has a build order with connected
//! prefixes (breadth-first from any vertex), every prefix is family-free
//! (heredity) and (k-1)-colorable (induced subgraphs cannot need more
//! colors), so level-by-level extension reaches all of them, and in
//! particular every prefix of every k-vertex-critical family-free graph.
//! Each frontier graph is extended by one new vertex with every nonempty
//! neighborhood mask (every mask when `connected_prefix` is off); children
//! containing a family member are dropped, (k-1)-colorable children join
//! the next frontier, and the rest are emitted iff k-vertex-critical.
//!
//! Candidate children are deduplicated by canonical form through a
//! sort-merge pipeline whose sorted runs spill to temporary files past a
//! memory cap, so results are independent of worker count and level sizes
//! are bounded by disk, not RAM. Structural output-side conditions beyond
//! criticality are deliberately not used as frontier prunes: prefixes of
//! critical graphs may violate them.

use crate::canon::{canonical_form, CanonicalForm};
use crate::coloring::{
    is_k_colorable, is_k_vertex_critical, is_k_vertex_critical_fast, CriticalityReport,
};
use crate::graph::{ArgError, Graph, VertexSet, MAX_VERTICES};
use crate::graph6::{parse_graph6, Graph6Error};
use crate::patterns::{CompiledFamily, PatternFamily};
use rayon::prelude::*;
use std::collections::{BTreeMap, BTreeSet};
use std::io::{BufRead, BufReader, BufWriter, Seek, Write};

/// Configuration of one generation run.
#[derive(Clone)]
pub struct EnumerationConfig {
    /// Target criticality; outputs have chromatic number exactly k.
    pub k: usize,
    /// Forbidden induced subgraphs defining the hereditary class.
    pub family: PatternFamily,
    /// Extend to graphs on at most this many vertices.
    pub n_max: usize,
    /// Restrict extensions to nonempty neighborhoods so every prefix stays
    /// connected. Sound for criticality; `false` exists for oracle
    /// cross-validation at tiny bounds.
    pub connected_prefix: bool,
    /// Worker threads; 0 uses all available cores.
    pub jobs: usize,
    /// Candidate records held in memory per level before sorted runs spill
    /// to temporary files.
    pub spill_threshold: usize,
}

impl EnumerationConfig {
    pub fn new(k: usize, family: PatternFamily, n_max: usize) -> Self {
        EnumerationConfig {
            k,
            family,
            n_max,
            connected_prefix: true,
            jobs: 0,
            spill_threshold: 8_000_000,
        }
    }

    pub fn validate(&self) -> Result<(), ArgError> {
        if self.k < 2 {
            return Err(ArgError("enumeration requires k >= 2".into()));
        }
        if self.n_max < 1 || self.n_max > MAX_VERTICES {
            return Err(ArgError(format!(
                "n_max must be in 1..={MAX_VERTICES}, got {}",
                self.n_max
            )));
        }
        Ok(())
    }
}

/// Per-order output counts.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct CountTable {
    rows: BTreeMap<usize, u64>,
}

impl CountTable {
    pub fn new() -> Self {
        CountTable::default()
    }

    /// Ensures zero rows exist for every order in the range.
    pub fn ensure_rows(&mut self, lo: usize, hi: usize) {
        for n in lo..=hi {
            self.rows.entry(n).or_insert(0);
        }
    }

    pub fn record(&mut self, n: usize) {
        *self.rows.entry(n).or_insert(0) += 1;
    }

    pub fn count(&self, n: usize) -> u64 {
        self.rows.get(&n).copied().unwrap_or(0)
    }

    pub fn rows(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.rows.iter().map(|(&n, &c)| (n, c))
    }

    pub fn total(&self) -> u64 {
        self.rows.values().sum()
    }

    /// Two-column CSV, header `n,count`, rows ascending. Byte-identical
    /// across runs with equal configurations.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,count\n");
        for (n, c) in self.rows() {
            out.push_str(&format!("{n},{c}\n"));
        }
        out
    }

    /// Parses the `to_csv` format.
    pub fn from_csv(text: &str) -> Result<CountTable, ArgError> {
        let mut table = CountTable::new();
        for (i, line) in text.lines().enumerate() {
            if i == 0 && line.trim() == "n,count" {
                continue;
            }
            if line.trim().is_empty() {
                continue;
            }
            let (n, c) = line
                .split_once(',')
                .ok_or_else(|| ArgError(format!("bad csv line {}: {line}", i + 1)))?;
            let n: usize = n
                .trim()
                .parse()
                .map_err(|_| ArgError(format!("bad order on csv line {}", i + 1)))?;
            let c: u64 = c
                .trim()
                .parse()
                .map_err(|_| ArgError(format!("bad count on csv line {}", i + 1)))?;
            *table.rows.entry(n).or_insert(0) += c;
        }
        Ok(table)
    }
}

/// One generation level: the order and the canonically deduplicated
/// members, every one family-free and (k-1)-colorable, sorted by
/// canonical form (so no two members are isomorphic).
pub struct Frontier {
    pub n: usize,
    /// Canonical graph6 records of the members.
    pub members: Vec<String>,
}

impl Frontier {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Per-level progress numbers, mostly for diagnostics.
#[derive(Clone, Debug)]
pub struct LevelStats {
    /// Order of the children produced at this level.
    pub n: usize,
    pub parents: u64,
    /// Family-free children, duplicates included.
    pub candidates: u64,
    /// Distinct isomorphism classes among the candidates.
    pub unique: u64,
    pub to_frontier: u64,
    pub emitted: u64,
}

/// Result of a generation run.
pub struct EnumerationOutcome {
    pub counts: CountTable,
    /// True when the frontier emptied at or before `n_max`, i.e. the class
    /// is exhausted and no larger outputs exist; false means the run was
    /// truncated at `n_max` and the counts are partial.
    pub complete: bool,
    pub levels: Vec<LevelStats>,
}

/// Runs the generator, invoking `emit` for every k-vertex-critical
/// family-free graph found, in ascending order of vertex count and
/// canonical form. Every emitted graph is re-verified by the full
/// criticality certifier before emission.
pub fn enumerate_critical(
    cfg: &EnumerationConfig,
    mut emit: impl FnMut(&Graph, &CanonicalForm),
) -> Result<EnumerationOutcome, ArgError> {
    cfg.validate()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()
        .map_err(|e| ArgError(format!("worker pool: {e}")))?;

    let compiled = CompiledFamily::new(&cfg.family);
    let mut counts = CountTable::new();
    counts.ensure_rows(cfg.k.min(cfg.n_max), cfg.n_max);
    let mut levels = Vec::new();

    // Level 1: the one-vertex graph, unless the family forbids it.
    let k1 = Graph::empty(1);
    let mut frontier = Frontier {
        n: 1,
        members: if compiled.is_free(&k1) {
            vec![canonical_form(&k1).into_string()]
        } else {
            Vec::new()
        },
    };

    while frontier.n < cfg.n_max && !frontier.is_empty() {
        let (next, emitted, stats) = pool.install(|| expand_level(cfg, &compiled, &frontier));
        for line in &emitted {
            let form = CanonicalForm::from_canonical_graph6(line.clone());
            let g = form.to_graph();
            let report = is_k_vertex_critical(&g, cfg.k);
            assert!(
                report.verdict,
                "emitted graph failed re-verification: {line}"
            );
            counts.record(g.n());
            emit(&g, &form);
        }
        levels.push(stats);
        frontier = next;
    }

    Ok(EnumerationOutcome {
        counts,
        complete: frontier.is_empty(),
        levels,
    })
}

/// Expands one frontier level; returns the next frontier, the emitted
/// criticals (sorted by canonical form), and stats.
fn expand_level(
    cfg: &EnumerationConfig,
    compiled: &CompiledFamily,
    frontier: &Frontier,
) -> (Frontier, Vec<String>, LevelStats) {
    let n = frontier.n;
    let parents = &frontier.members;
    let workers = rayon::current_num_threads().max(1);
    let per_worker_cap = (cfg.spill_threshold / workers).max(1024);
    let mask_lo: u64 = if cfg.connected_prefix { 1 } else { 0 };
    let mask_hi: u64 = 1 << n;

    // Phase 1: generate family-free children, canonicalize, accumulate
    // sorted runs (spilling oversized runs to temp files).
    let runs: Vec<SortedRun> = parents
        .par_chunks(64.max(parents.len() / (workers * 8).max(1)))
        .fold(RunSet::default, |mut acc, chunk| {
            for line in chunk {
                let parent = parse_graph6(line).expect("frontier strings are canonical graph6");
                for mask in mask_lo..mask_hi {
                    let child = parent.add_vertex(VertexSet(mask));
                    if compiled.free_given_extension(&child, n) {
                        acc.push(canonical_form(&child).into_string(), per_worker_cap);
                    }
                }
            }
            acc
        })
        .map(RunSet::into_runs)
        .reduce(Vec::new, |mut a, mut b| {
            a.append(&mut b);
            a
        });

    let candidates: u64 = runs.iter().map(|r| r.len).sum();

    // Phase 2: merge runs, deduplicate, classify unique children in
    // deterministic batches.
    let mut unique = 0u64;
    let mut frontier_next = Vec::new();
    let mut emitted = Vec::new();
    let mut batch = Vec::with_capacity(CLASSIFY_BATCH);
    let classify_batch =
        |batch: &mut Vec<String>, frontier_next: &mut Vec<String>, emitted: &mut Vec<String>| {
            let classified: Vec<(String, Class)> = batch
                .par_drain(..)
                .map(|line| {
                    let g = parse_graph6(&line).expect("merged strings are canonical graph6");
                    let class = if is_k_colorable(&g, cfg.k - 1).is_some() {
                        Class::Frontier
                    } else if is_k_vertex_critical_fast(&g, cfg.k) {
                        Class::Emit
                    } else {
                        Class::Drop
                    };
                    (line, class)
                })
                .collect();
            for (line, class) in classified {
                match class {
                    Class::Frontier => frontier_next.push(line),
                    Class::Emit => emitted.push(line),
                    Class::Drop => {}
                }
            }
        };

    for line in MergeUnique::new(runs) {
        unique += 1;
        batch.push(line);
        if batch.len() == CLASSIFY_BATCH {
            classify_batch(&mut batch, &mut frontier_next, &mut emitted);
        }
    }
    classify_batch(&mut batch, &mut frontier_next, &mut emitted);

    let stats = LevelStats {
        n: n + 1,
        parents: parents.len() as u64,
        candidates,
        unique,
        to_frontier: frontier_next.len() as u64,
        emitted: emitted.len() as u64,
    };
    (
        Frontier {
            n: n + 1,
            members: frontier_next,
        },
        emitted,
        stats,
    )
}

const CLASSIFY_BATCH: usize = 1 << 16;

enum Class {
    Frontier,
    Emit,
    Drop,
}

/// Sorted run of candidate records, either in memory or spilled.
struct SortedRun {
    len: u64,
    source: RunSource,
}

enum RunSource {
    Mem(Vec<String>),
    File(BufReader<std::fs::File>),
}

/// Accumulates records, spilling each full batch to disk as a sorted run.
#[derive(Default)]
struct RunSet {
    current: Vec<String>,
    runs: Vec<SortedRun>,
}

impl RunSet {
    fn push(&mut self, line: String, cap: usize) {
        self.current.push(line);
        if self.current.len() >= cap {
            self.spill();
        }
    }

    fn spill(&mut self) {
        if self.current.is_empty() {
            return;
        }
        self.current.sort_unstable();
        let mut file = tempfile::tempfile().expect("spill file");
        {
            let mut w = BufWriter::new(&mut file);
            for line in &self.current {
                w.write_all(line.as_bytes()).unwrap();
                w.write_all(b"\n").unwrap();
            }
            w.flush().unwrap();
        }
        file.rewind().unwrap();
        self.runs.push(SortedRun {
            len: self.current.len() as u64,
            source: RunSource::File(BufReader::new(file)),
        });
        self.current.clear();
    }

    fn into_runs(mut self) -> Vec<SortedRun> {
        if !self.current.is_empty() {
            self.current.sort_unstable();
            self.runs.push(SortedRun {
                len: self.current.len() as u64,
                source: RunSource::Mem(std::mem::take(&mut self.current)),
            });
        }
        self.runs
    }
}

/// K-way merge over sorted runs that yields each distinct record once.
struct MergeUnique {
    // (next record, source index), min-heap via Reverse.
    heap: std::collections::BinaryHeap<std::cmp::Reverse<(String, usize)>>,
    sources: Vec<RunIter>,
    last: Option<String>,
}

enum RunIter {
    Mem(std::vec::IntoIter<String>),
    File(std::io::Lines<BufReader<std::fs::File>>),
}

impl RunIter {
    fn next_record(&mut self) -> Option<String> {
        match self {
            RunIter::Mem(it) => it.next(),
            RunIter::File(lines) => lines.next().map(|r| r.expect("spill read")),
        }
    }
}

impl MergeUnique {
    fn new(runs: Vec<SortedRun>) -> Self {
        let mut sources: Vec<RunIter> = runs
            .into_iter()
            .map(|r| match r.source {
                RunSource::Mem(v) => RunIter::Mem(v.into_iter()),
                RunSource::File(f) => RunIter::File(f.lines()),
            })
            .collect();
        let mut heap = std::collections::BinaryHeap::new();
        for (i, src) in sources.iter_mut().enumerate() {
            if let Some(line) = src.next_record() {
                heap.push(std::cmp::Reverse((line, i)));
            }
        }
        MergeUnique {
            heap,
            sources,
            last: None,
        }
    }
}

impl Iterator for MergeUnique {
    type Item = String;
    fn next(&mut self) -> Option<String> {
        while let Some(std::cmp::Reverse((line, i))) = self.heap.pop() {
            if let Some(next) = self.sources[i].next_record() {
                self.heap.push(std::cmp::Reverse((next, i)));
            }
            if self.last.as_deref() != Some(line.as_str()) {
                self.last = Some(line.clone());
                return Some(line);
            }
        }
        None
    }
}

/// Verdict for one corpus line.
#[derive(Clone, Debug)]
pub struct GraphVerdict {
    /// 1-based line number in the input stream.
    pub line_no: usize,
    pub n: usize,
    pub family_free: bool,
    /// Family member found when not free: name and embedding.
    pub violation: Option<(String, Vec<usize>)>,
    pub criticality: CriticalityReport,
    pub canonical: CanonicalForm,
}

impl GraphVerdict {
    pub fn positive(&self) -> bool {
        self.family_free && self.criticality.verdict
    }
}

/// Result of checking a graph6 stream against family-freeness and
/// k-vertex-criticality.
pub struct CorpusReport {
    /// Per-order counts over all parsed graphs.
    pub counts: CountTable,
    pub verdicts: Vec<GraphVerdict>,
    /// Pairs (earlier line, later line) with isomorphic graphs.
    pub duplicates: Vec<(usize, usize)>,
    pub parse_errors: Vec<(usize, Graph6Error)>,
}

impl CorpusReport {
    pub fn all_positive(&self) -> bool {
        self.parse_errors.is_empty()
            && self.duplicates.is_empty()
            && self.verdicts.iter().all(|v| v.positive())
    }

    pub fn summary(&self) -> CorpusSummary {
        CorpusSummary {
            counts: self.counts.clone(),
            forms: self.verdicts.iter().map(|v| v.canonical.clone()).collect(),
        }
    }
}

/// Checks every line of a graph6 stream for family-freeness and
/// k-vertex-criticality; malformed lines are reported and skipped.
pub fn verify_corpus<'a>(
    lines: impl Iterator<Item = &'a str>,
    k: usize,
    family: &PatternFamily,
    jobs: usize,
) -> Result<CorpusReport, ArgError> {
    if k < 1 {
        return Err(ArgError("verification requires k >= 1".into()));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| ArgError(format!("worker pool: {e}")))?;
    let compiled = CompiledFamily::new(family);

    let numbered: Vec<(usize, &str)> = lines
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim().is_empty())
        .collect();

    let mut parse_errors = Vec::new();
    let mut parsed = Vec::new();
    for (line_no, line) in numbered {
        match parse_graph6(line) {
            Ok(g) => parsed.push((line_no, g)),
            Err(e) => parse_errors.push((line_no, e)),
        }
    }

    let verdicts: Vec<GraphVerdict> = pool.install(|| {
        parsed
            .par_iter()
            .map(|(line_no, g)| {
                let violation = compiled
                    .first_violation(g)
                    .map(|(name, emb)| (name.to_string(), emb));
                GraphVerdict {
                    line_no: *line_no,
                    n: g.n(),
                    family_free: violation.is_none(),
                    violation,
                    criticality: is_k_vertex_critical(g, k),
                    canonical: canonical_form(g),
                }
            })
            .collect()
    });

    let mut counts = CountTable::new();
    let mut seen: BTreeMap<&CanonicalForm, usize> = BTreeMap::new();
    let mut duplicates = Vec::new();
    for v in &verdicts {
        counts.record(v.n);
        match seen.get(&v.canonical) {
            Some(&first) => duplicates.push((first, v.line_no)),
            None => {
                seen.insert(&v.canonical, v.line_no);
            }
        }
    }

    Ok(CorpusReport {
        counts,
        verdicts,
        duplicates,
        parse_errors,
    })
}

/// Counts plus canonical forms, the comparable essence of a corpus or an
/// enumeration run.
#[derive(Clone, Default)]
pub struct CorpusSummary {
    pub counts: CountTable,
    pub forms: BTreeSet<CanonicalForm>,
}

impl CorpusSummary {
    pub fn insert(&mut self, form: CanonicalForm) {
        self.counts.record(form.n());
        self.forms.insert(form);
    }
}

/// Differences between two summaries restricted to orders `<= n_cap`.
#[derive(Clone, Debug, Default)]
pub struct DiffReport {
    /// Orders with differing counts: (n, left count, right count).
    pub count_mismatches: Vec<(usize, u64, u64)>,
    /// Canonical graph6 records present on exactly one side.
    pub only_in_left: Vec<String>,
    pub only_in_right: Vec<String>,
}

impl DiffReport {
    pub fn equal(&self) -> bool {
        self.count_mismatches.is_empty()
            && self.only_in_left.is_empty()
            && self.only_in_right.is_empty()
    }
}

/// Compares per-order counts and membership of two summaries up to `n_cap`.
pub fn cross_check(left: &CorpusSummary, right: &CorpusSummary, n_cap: usize) -> DiffReport {
    let mut report = DiffReport::default();
    let orders: BTreeSet<usize> = left
        .counts
        .rows()
        .chain(right.counts.rows())
        .map(|(n, _)| n)
        .filter(|&n| n <= n_cap)
        .collect();
    for n in orders {
        let (a, b) = (left.counts.count(n), right.counts.count(n));
        if a != b {
            report.count_mismatches.push((n, a, b));
        }
    }
    for form in left.forms.difference(&right.forms) {
        if form.n() <= n_cap {
            report.only_in_left.push(form.as_graph6().to_string());
        }
    }
    for form in right.forms.difference(&left.forms) {
        if form.n() <= n_cap {
            report.only_in_right.push(form.as_graph6().to_string());
        }
    }
    report
}
