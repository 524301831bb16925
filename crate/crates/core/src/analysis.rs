//! Graph invariants: distances, free vertices, connectivity, and the
//! combined profile report.
//!
//! A vertex is free when its neighborhood induces a clique; vertices of
//! degree at most one are free vacuously. Local connectivity between
//! non-adjacent vertices counts internally disjoint paths, computed as
//! max-flow on the vertex-split digraph, and global connectivity is the
//! minimum of that over all non-adjacent pairs (complete graphs are
//! n - 1 by convention).

use crate::error::{Error, Result};
use crate::graph::{bit, full_mask, reach, Graph};

/// The profile (f, d, k): free vertex count, diameter, connectivity.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct DeltaTriple {
    pub f: usize,
    pub d: usize,
    pub k: usize,
}

impl DeltaTriple {
    pub fn new(f: usize, d: usize, k: usize) -> Self {
        DeltaTriple { f, d, k }
    }

    /// The profile sum f + d + k.
    pub fn phi(&self) -> usize {
        self.f + self.d + self.k
    }
}

impl std::fmt::Display for DeltaTriple {
    fn fmt(&self, fm: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(fm, "({}, {}, {})", self.f, self.d, self.k)
    }
}

/// Everything `analyze` measures in one pass.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AnalysisReport {
    pub delta: DeltaTriple,
    pub phi: usize,
    /// Free vertices, ascending, zero-based.
    pub free_set: Vec<usize>,
    pub connected: bool,
    pub complete: bool,
}

/// One BFS from vertex 0 reaches everything iff connected.
pub fn is_connected(g: &Graph) -> bool {
    let n = g.order();
    let rows: Vec<u64> = (0..n).map(|v| g.row(v)).collect();
    reach(&rows, 0, full_mask(n)) == full_mask(n)
}

/// Hop count from u to v, `None` when v is unreachable.
pub fn distance(g: &Graph, u: usize, v: usize) -> Result<Option<usize>> {
    let n = g.order();
    if u >= n {
        return Err(Error::BadVertex { v: u, n });
    }
    if v >= n {
        return Err(Error::BadVertex { v, n });
    }
    if u == v {
        return Ok(Some(0));
    }
    let mut seen = bit(u);
    let mut frontier = seen;
    let mut hops = 0;
    while frontier != 0 {
        hops += 1;
        let mut next = 0u64;
        let mut f = frontier;
        while f != 0 {
            let w = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= g.row(w);
        }
        next &= !seen;
        if next & bit(v) != 0 {
            return Ok(Some(hops));
        }
        seen |= next;
        frontier = next;
    }
    Ok(None)
}

/// Eccentricity of `src`: hop count to the farthest reachable vertex,
/// plus the set reached. Internal building block for `diameter`.
fn eccentricity(g: &Graph, src: usize) -> (usize, u64) {
    let mut seen = bit(src);
    let mut frontier = seen;
    let mut level = 0;
    loop {
        let mut next = 0u64;
        let mut f = frontier;
        while f != 0 {
            let w = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= g.row(w);
        }
        next &= !seen;
        if next == 0 {
            return (level, seen);
        }
        level += 1;
        seen |= next;
        frontier = next;
    }
}

/// Largest pairwise distance. Requires n >= 2 and a connected graph.
pub fn diameter(g: &Graph) -> Result<usize> {
    let n = g.order();
    if n == 1 {
        return Err(Error::Degenerate);
    }
    let full = full_mask(n);
    let mut best = 0;
    for v in 0..n {
        let (ecc, seen) = eccentricity(g, v);
        if seen != full {
            return Err(Error::NotConnected);
        }
        best = best.max(ecc);
    }
    Ok(best)
}

/// Does N(v) induce a clique? Subset test per neighbor: every other
/// neighbor of v must appear in u's row.
pub fn is_free_vertex(g: &Graph, v: usize) -> Result<bool> {
    let n = g.order();
    if v >= n {
        return Err(Error::BadVertex { v, n });
    }
    let nbrs = g.row(v);
    let mut m = nbrs;
    while m != 0 {
        let u = m.trailing_zeros() as usize;
        m &= m - 1;
        if nbrs & !bit(u) & !g.row(u) != 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Free vertices, ascending.
pub fn free_vertices(g: &Graph) -> Vec<usize> {
    (0..g.order())
        .filter(|&v| is_free_vertex(g, v).expect("v < n"))
        .collect()
}

pub fn free_count(g: &Graph) -> usize {
    free_vertices(g).len()
}

/// Unit-capacity flow network on the vertex-split digraph: node 2v is
/// the entry half of v, node 2v+1 the exit half, joined by a capacity-1
/// arc; each edge {x, y} contributes exit(x)->entry(y) and back. The
/// max flow from exit(u) to entry(v) counts internally disjoint paths.
struct SplitFlow {
    heads: Vec<Vec<u32>>,
    to: Vec<u32>,
    cap: Vec<u8>,
    initial_cap: Vec<u8>,
}

impl SplitFlow {
    fn new(g: &Graph) -> Self {
        let n = g.order();
        let mut net = SplitFlow {
            heads: vec![Vec::new(); 2 * n],
            to: Vec::new(),
            cap: Vec::new(),
            initial_cap: Vec::new(),
        };
        for v in 0..n {
            net.arc(2 * v, 2 * v + 1, 1);
        }
        for (x, y) in g.edges() {
            net.arc(2 * x + 1, 2 * y, 1);
            net.arc(2 * y + 1, 2 * x, 1);
        }
        net.initial_cap = net.cap.clone();
        net
    }

    /// Forward arc plus its residual mate at index ^ 1.
    fn arc(&mut self, a: usize, b: usize, c: u8) {
        self.heads[a].push(self.to.len() as u32);
        self.to.push(b as u32);
        self.cap.push(c);
        self.heads[b].push(self.to.len() as u32);
        self.to.push(a as u32);
        self.cap.push(0);
    }

    fn reset(&mut self) {
        self.cap.copy_from_slice(&self.initial_cap);
    }

    /// BFS augmenting paths until none remain or `limit` is reached.
    fn max_flow(&mut self, s: usize, t: usize, limit: usize) -> usize {
        let mut flow = 0;
        let mut parent_arc = vec![u32::MAX; self.heads.len()];
        let mut queue = Vec::with_capacity(self.heads.len());
        while flow < limit {
            parent_arc.iter_mut().for_each(|p| *p = u32::MAX);
            queue.clear();
            queue.push(s as u32);
            parent_arc[s] = u32::MAX - 1;
            let mut qi = 0;
            let mut found = false;
            'bfs: while qi < queue.len() {
                let node = queue[qi] as usize;
                qi += 1;
                for &a in &self.heads[node] {
                    let a = a as usize;
                    let next = self.to[a] as usize;
                    if self.cap[a] > 0 && parent_arc[next] == u32::MAX {
                        parent_arc[next] = a as u32;
                        if next == t {
                            found = true;
                            break 'bfs;
                        }
                        queue.push(next as u32);
                    }
                }
            }
            if !found {
                break;
            }
            let mut node = t;
            while node != s {
                let a = parent_arc[node] as usize;
                self.cap[a] -= 1;
                self.cap[a ^ 1] += 1;
                node = self.to[a ^ 1] as usize;
            }
            flow += 1;
        }
        flow
    }
}

/// Count of internally vertex-disjoint u-v paths for a non-adjacent,
/// distinct pair. Equals the minimum size of a separating vertex set.
pub fn local_connectivity(g: &Graph, u: usize, v: usize) -> Result<usize> {
    let n = g.order();
    if u >= n {
        return Err(Error::BadVertex { v: u, n });
    }
    if v >= n {
        return Err(Error::BadVertex { v, n });
    }
    if u == v {
        return Err(Error::SamePair(u));
    }
    if g.has_edge(u, v) {
        return Err(Error::AdjacentPair(u, v));
    }
    let mut net = SplitFlow::new(g);
    Ok(net.max_flow(2 * u + 1, 2 * v, n))
}

/// Vertex connectivity. Complete graphs are n - 1; otherwise the
/// minimum local connectivity over all non-adjacent pairs. Requires a
/// connected graph on at least two vertices.
pub fn vertex_connectivity(g: &Graph) -> Result<usize> {
    let n = g.order();
    if n == 1 {
        return Err(Error::Degenerate);
    }
    if !is_connected(g) {
        return Err(Error::NotConnected);
    }
    if g.is_complete() {
        return Ok(n - 1);
    }
    // The answer never exceeds the minimum degree, so flows can stop
    // early at the running bound.
    let mut best = (0..n).map(|v| g.degree(v)).min().expect("n >= 2");
    let mut net = SplitFlow::new(g);
    for u in 0..n {
        for v in u + 1..n {
            if g.has_edge(u, v) || best == 1 {
                continue;
            }
            net.reset();
            best = best.min(net.max_flow(2 * u + 1, 2 * v, best));
        }
    }
    Ok(best)
}

/// Full profile of a connected graph on at least two vertices.
pub fn analyze(g: &Graph) -> Result<AnalysisReport> {
    let d = diameter(g)?; // rejects n = 1 and disconnected input
    let k = vertex_connectivity(g)?;
    let free_set = free_vertices(g);
    let delta = DeltaTriple::new(free_set.len(), d, k);
    Ok(AnalysisReport {
        delta,
        phi: delta.phi(),
        free_set,
        connected: true,
        complete: g.is_complete(),
    })
}
