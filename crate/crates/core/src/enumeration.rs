//! Exhaustive and sampled generation of connected non-complete graphs.
//!
//! Three universes: every labeling separately (orders up to 7), one
//! representative per isomorphism class (orders up to 8), and seeded
//! random draws for orders beyond exhaustive reach. A census tallies
//! profiles over a universe; its result is independent of how the work
//! is split across workers.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet};
use std::ops::ControlFlow;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::analysis::{analyze, is_connected, DeltaTriple};
use crate::codec::encode_graph6;
use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Universe {
    /// Every labeled graph once; orders up to 7.
    LabeledAll,
    /// One representative per isomorphism class; orders up to 8.
    CanonicalAll,
    /// Random graphs with edge probability one half. Draw i depends
    /// only on the seed and i, never on how draws are partitioned.
    Sampled { seed: u64, draws: u64 },
}

impl Universe {
    fn check(self, n: usize) -> Result<()> {
        match self {
            _ if n == 0 => Err(Error::InvalidOrder(0)),
            Universe::LabeledAll if n > 7 => Err(Error::UniverseTooLarge { n, limit: 7 }),
            Universe::CanonicalAll if n > 8 => Err(Error::UniverseTooLarge { n, limit: 8 }),
            Universe::Sampled { .. } if n > MAX_VERTICES => Err(Error::UniverseTooLarge {
                n,
                limit: MAX_VERTICES,
            }),
            Universe::Sampled { .. } if n < 3 => Err(Error::InvalidOrder(n)),
            _ => Ok(()),
        }
    }

    pub fn label(self) -> String {
        match self {
            Universe::LabeledAll => "labeled".to_string(),
            Universe::CanonicalAll => "canonical".to_string(),
            Universe::Sampled { seed, draws } => format!("sampled(seed={seed};draws={draws})"),
        }
    }
}

/// Upper-triangle code of a labeled graph: bit order matches the
/// encoded form, column by column, high bit first. Only valid while
/// the triangle fits in 64 bits.
pub(crate) fn graph_from_code(n: usize, code: u64) -> Graph {
    let m = n * (n - 1) / 2;
    let mut edges = Vec::new();
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if code >> (m - 1 - idx) & 1 == 1 {
                edges.push((i, j));
            }
            idx += 1;
        }
    }
    Graph::from_edges(n, &edges).expect("code bits map to valid pairs")
}

struct CanonCtx<'a> {
    g: &'a Graph,
    n: usize,
    m: usize,
    best: u64,
}

fn canon_dfs(ctx: &mut CanonCtx, perm: &mut [usize], used: u64, level: usize, partial: u64) {
    if level == ctx.n {
        if partial < ctx.best {
            ctx.best = partial;
        }
        return;
    }
    // Candidates for this position ordered by the column bits they
    // would emit, cheapest first, so the first full dive is greedy.
    let mut cands: Vec<(u64, usize)> = Vec::with_capacity(ctx.n - level);
    for v in 0..ctx.n {
        if used >> v & 1 == 1 {
            continue;
        }
        let mut col = 0u64;
        for &p in perm[..level].iter() {
            col = col << 1 | u64::from(ctx.g.has_edge(p, v));
        }
        cands.push((col, v));
    }
    cands.sort_unstable();
    let bits = level * (level + 1) / 2;
    for (col, v) in cands {
        let np = partial << level | col;
        // A larger prefix can never recover; siblings are sorted, so
        // everything after it loses too.
        if np > ctx.best >> (ctx.m - bits) {
            break;
        }
        perm[level] = v;
        canon_dfs(ctx, perm, used | 1 << v, level + 1, np);
    }
}

/// Smallest upper-triangle code over all relabelings.
pub(crate) fn canonical_code(g: &Graph) -> u64 {
    let n = g.order();
    let m = n * (n - 1) / 2;
    debug_assert!(m <= 55, "canonical search supports 11 vertices at most");
    if n < 2 {
        return 0;
    }
    let mut ctx = CanonCtx {
        g,
        n,
        m,
        best: u64::MAX >> (64 - m),
    };
    let mut perm = vec![0usize; n];
    canon_dfs(&mut ctx, &mut perm, 0, 0, 0);
    ctx.best
}

/// The graph renumbered into the labeling whose encoded form is
/// smallest; isomorphic graphs come out byte-identical.
pub fn canonical_form(g: &Graph) -> Result<Graph> {
    let n = g.order();
    if n * (n - 1) / 2 > 55 {
        return Err(Error::UniverseTooLarge { n, limit: 11 });
    }
    Ok(graph_from_code(n, canonical_code(g)))
}

fn attach_vertex(parent: &Graph, nb: u64) -> Graph {
    let t = parent.order() + 1;
    let mut edges = parent.edges();
    for i in 0..parent.order() {
        if nb >> i & 1 == 1 {
            edges.push((i, t - 1));
        }
    }
    Graph::from_edges(t, &edges).expect("extension edges are in range")
}

/// Canonical representatives of every connected non-complete class on
/// n vertices, in code order. Classes are grown one vertex at a time:
/// every class on t vertices arises by attaching a new last vertex to
/// some class on t - 1, so canonicalizing and deduplicating each level
/// is exhaustive.
fn connected_classes(n: usize, workers: usize) -> Result<Vec<Graph>> {
    let mut level: Vec<u64> = vec![0];
    for t in 2..=n {
        let lanes = workers.clamp(1, level.len());
        let chunk = level.len().div_ceil(lanes);
        let sets: Vec<BTreeSet<u64>> = std::thread::scope(|scope| {
            let level = &level;
            let handles: Vec<_> = (0..lanes)
                .map(|w| {
                    scope.spawn(move || {
                        let lo = (w * chunk).min(level.len());
                        let hi = ((w + 1) * chunk).min(level.len());
                        let mut set = BTreeSet::new();
                        for &code in &level[lo..hi] {
                            let parent = graph_from_code(t - 1, code);
                            for nb in 0..1u64 << (t - 1) {
                                set.insert(canonical_code(&attach_vertex(&parent, nb)));
                            }
                        }
                        set
                    })
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("class expansion panicked"))
                .collect()
        });
        let mut merged = BTreeSet::new();
        for s in sets {
            merged.extend(s);
        }
        level = merged.into_iter().collect();
    }
    Ok(level
        .into_iter()
        .map(|code| graph_from_code(n, code))
        .filter(|g| is_connected(g) && !g.is_complete())
        .collect())
}

fn sample_graph(n: usize, seed: u64, index: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if rng.random::<bool>() {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("sampled edges are in range")
}

/// Visit the universe's connected non-complete graphs until the
/// callback breaks; returns how many were visited.
pub fn for_each_connected_graph<F>(n: usize, universe: Universe, mut visit: F) -> Result<u64>
where
    F: FnMut(&Graph) -> ControlFlow<()>,
{
    universe.check(n)?;
    let mut seen = 0u64;
    match universe {
        Universe::LabeledAll => {
            let m = n * (n - 1) / 2;
            for code in 0..1u64 << m {
                let g = graph_from_code(n, code);
                if is_connected(&g) && !g.is_complete() {
                    seen += 1;
                    if visit(&g).is_break() {
                        break;
                    }
                }
            }
        }
        Universe::CanonicalAll => {
            for g in connected_classes(n, 1)? {
                seen += 1;
                if visit(&g).is_break() {
                    break;
                }
            }
        }
        Universe::Sampled { seed, draws } => {
            for index in 0..draws {
                let g = sample_graph(n, seed, index);
                if is_connected(&g) && !g.is_complete() {
                    seen += 1;
                    if visit(&g).is_break() {
                        break;
                    }
                }
            }
        }
    }
    Ok(seen)
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CensusEntry {
    pub count: u64,
    /// Smallest encoded graph seen with this profile.
    pub sample_graph6: String,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CensusTable {
    pub n: usize,
    pub universe: String,
    pub entries: BTreeMap<DeltaTriple, CensusEntry>,
}

impl CensusTable {
    pub fn total(&self) -> u64 {
        self.entries.values().map(|e| e.count).sum()
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,f,d,k,count,sample_graph6,universe\n");
        for (delta, e) in &self.entries {
            out.push_str(&format!(
                "{},{},{},{},{},{},{}\n",
                self.n, delta.f, delta.d, delta.k, e.count, e.sample_graph6, self.universe
            ));
        }
        out
    }
}

fn record(map: &mut BTreeMap<DeltaTriple, CensusEntry>, g: &Graph) -> Result<()> {
    let report = analyze(g)?;
    let g6 = encode_graph6(g);
    match map.entry(report.delta) {
        Entry::Vacant(slot) => {
            slot.insert(CensusEntry {
                count: 1,
                sample_graph6: g6,
            });
        }
        Entry::Occupied(mut slot) => {
            let e = slot.get_mut();
            e.count += 1;
            if g6 < e.sample_graph6 {
                e.sample_graph6 = g6;
            }
        }
    }
    Ok(())
}

fn merge_counts(
    into: &mut BTreeMap<DeltaTriple, CensusEntry>,
    from: BTreeMap<DeltaTriple, CensusEntry>,
) {
    for (delta, e) in from {
        match into.entry(delta) {
            Entry::Vacant(slot) => {
                slot.insert(e);
            }
            Entry::Occupied(mut slot) => {
                let t = slot.get_mut();
                t.count += e.count;
                if e.sample_graph6 < t.sample_graph6 {
                    t.sample_graph6 = e.sample_graph6;
                }
            }
        }
    }
}

/// Split 0..total into one contiguous range per worker and merge the
/// partial tallies. Count sums and smallest-sample picks are order
/// independent, so the outcome never depends on the split.
fn run_partitions<F>(
    workers: usize,
    total: u64,
    work: F,
) -> Result<BTreeMap<DeltaTriple, CensusEntry>>
where
    F: Fn(std::ops::Range<u64>) -> Result<BTreeMap<DeltaTriple, CensusEntry>> + Sync,
{
    let mut out = BTreeMap::new();
    if total == 0 {
        return Ok(out);
    }
    let lanes = workers.clamp(1, usize::try_from(total).unwrap_or(usize::MAX));
    let chunk = total.div_ceil(lanes as u64);
    let results: Vec<Result<BTreeMap<DeltaTriple, CensusEntry>>> = std::thread::scope(|scope| {
        let work = &work;
        let handles: Vec<_> = (0..lanes)
            .map(|w| {
                let lo = (w as u64 * chunk).min(total);
                let hi = (lo + chunk).min(total);
                scope.spawn(move || work(lo..hi))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("census worker panicked"))
            .collect()
    });
    for r in results {
        merge_counts(&mut out, r?);
    }
    Ok(out)
}

pub fn census(n: usize, universe: Universe) -> Result<CensusTable> {
    census_with_workers(n, universe, 1)
}

/// Profile tally over a universe, split across the given number of
/// worker threads.
pub fn census_with_workers(n: usize, universe: Universe, workers: usize) -> Result<CensusTable> {
    universe.check(n)?;
    let entries = match universe {
        Universe::LabeledAll => {
            let m = n * (n - 1) / 2;
            run_partitions(workers, 1u64 << m, |range| {
                let mut map = BTreeMap::new();
                for code in range {
                    let g = graph_from_code(n, code);
                    if is_connected(&g) && !g.is_complete() {
                        record(&mut map, &g)?;
                    }
                }
                Ok(map)
            })?
        }
        Universe::CanonicalAll => {
            let classes = connected_classes(n, workers)?;
            let classes = &classes;
            run_partitions(workers, classes.len() as u64, |range| {
                let mut map = BTreeMap::new();
                for idx in range {
                    record(&mut map, &classes[idx as usize])?;
                }
                Ok(map)
            })?
        }
        Universe::Sampled { seed, draws } => run_partitions(workers, draws, |range| {
            let mut map = BTreeMap::new();
            for index in range {
                let g = sample_graph(n, seed, index);
                if is_connected(&g) && !g.is_complete() {
                    record(&mut map, &g)?;
                }
            }
            Ok(map)
        })?,
    };
    Ok(CensusTable {
        n,
        universe: universe.label(),
        entries,
    })
}

/// Connectivity by direct definition: the smallest vertex set whose
/// removal disconnects the graph, with the complete-graph convention
/// of n - 1. Exponential in n; capped at 10 vertices.
pub fn brute_force_kappa(g: &Graph) -> Result<usize> {
    let n = g.order();
    if n > 10 {
        return Err(Error::UniverseTooLarge { n, limit: 10 });
    }
    if n == 1 {
        return Err(Error::Degenerate);
    }
    if !is_connected(g) {
        return Err(Error::NotConnected);
    }
    if g.is_complete() {
        return Ok(n - 1);
    }
    let full = (1u64 << n) - 1;
    let rows: Vec<u64> = (0..n).map(|v| g.row(v)).collect();
    let mut best = n - 1;
    for removal in 0u64..1 << n {
        let size = removal.count_ones() as usize;
        if size >= best {
            continue;
        }
        let rest = full & !removal;
        if rest.count_ones() < 2 {
            continue;
        }
        let start = rest.trailing_zeros() as usize;
        if crate::graph::reach(&rows, start, rest) != rest {
            best = size;
        }
    }
    Ok(best)
}

#[derive(Clone, Debug)]
pub struct InequalityScan {
    pub n: usize,
    pub checked: u64,
    /// Encodings of any graphs whose profile sum exceeded n + 2.
    pub violations: Vec<String>,
}

/// Measure every labeled connected non-complete graph on n vertices
/// and collect any that break the profile sum cap f + d + k <= n + 2.
pub fn verify_inequality_exhaustive(n: usize) -> Result<InequalityScan> {
    let mut violations = Vec::new();
    let checked = for_each_connected_graph(n, Universe::LabeledAll, |g| {
        let report = analyze(g).expect("connected graph analysis cannot fail");
        if report.delta.f + report.delta.d + report.delta.k > n + 2 {
            violations.push(encode_graph6(g));
        }
        ControlFlow::Continue(())
    })?;
    Ok(InequalityScan {
        n,
        checked,
        violations,
    })
}

/// First graph in the universe whose profile matches the target.
pub fn search_triple(n: usize, target: DeltaTriple, universe: Universe) -> Result<Option<Graph>> {
    let mut found = None;
    for_each_connected_graph(n, universe, |g| {
        let report = analyze(g).expect("connected graph analysis cannot fail");
        if report.delta == target {
            found = Some(g.clone());
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    Ok(found)
}
