//! Building blocks for witness graphs: standard families plus the
//! three composition operators used throughout the realizability code.
//!
//! Vertex placement is part of the contract, not an implementation
//! detail: `disjoint_union` and `join` shift the second operand by the
//! order of the first, and `duplicate_vertex` appends copies at the
//! end. Recipes replay into bit-identical graphs because of this.

use crate::error::{Error, Result};
use crate::graph::{bit, full_mask, Graph, MAX_VERTICES};

/// Path on m >= 1 vertices: edges {i, i+1}.
pub fn path(m: usize) -> Result<Graph> {
    let mut g = Graph::empty(m)?;
    for i in 0..m.saturating_sub(1) {
        g = g.with_edge(i, i + 1)?;
    }
    Ok(g)
}

/// Cycle on m >= 3 vertices: the path plus the closing edge {m-1, 0}.
pub fn cycle(m: usize) -> Result<Graph> {
    if m < 3 {
        return Err(Error::InvalidOrder(m));
    }
    path(m)?.with_edge(m - 1, 0)
}

/// Complete graph on m >= 1 vertices.
pub fn complete(m: usize) -> Result<Graph> {
    if m == 0 || m > MAX_VERTICES {
        return Err(Error::InvalidOrder(m));
    }
    let full = full_mask(m);
    let adj = (0..m).map(|i| full & !bit(i)).collect();
    Ok(Graph::from_adj(m, adj))
}

/// Complete bipartite graph with parts {0..a} and {a..a+b}, a, b >= 1.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    if a == 0 || b == 0 || a + b > MAX_VERTICES {
        return Err(Error::InvalidOrder(a + b));
    }
    let n = a + b;
    let left = full_mask(a);
    let right = full_mask(n) & !left;
    let adj = (0..n).map(|i| if i < a { right } else { left }).collect();
    Ok(Graph::from_adj(n, adj))
}

/// Both graphs side by side, g2's vertices shifted by g1's order.
pub fn disjoint_union(g1: &Graph, g2: &Graph) -> Result<Graph> {
    let n1 = g1.order();
    let n2 = g2.order();
    if n1 + n2 > MAX_VERTICES {
        return Err(Error::InvalidOrder(n1 + n2));
    }
    let mut adj = Vec::with_capacity(n1 + n2);
    for v in 0..n1 {
        adj.push(g1.row(v));
    }
    for v in 0..n2 {
        adj.push(g2.row(v) << n1);
    }
    Ok(Graph::from_adj(n1 + n2, adj))
}

/// Disjoint union plus every edge between the two sides.
pub fn join(g1: &Graph, g2: &Graph) -> Result<Graph> {
    let n1 = g1.order();
    let n2 = g2.order();
    let g = disjoint_union(g1, g2)?;
    let n = n1 + n2;
    let left = full_mask(n1);
    let right = full_mask(n) & !left;
    let adj = (0..n)
        .map(|v| g.row(v) | if v < n1 { right } else { left })
        .collect();
    Ok(Graph::from_adj(n, adj))
}

/// Append `times` copies of v, each adjacent to exactly N(v) as it was
/// before the call. Copies are pairwise non-adjacent and not adjacent
/// to v itself, so every copy has v's neighborhood but never extends it.
pub fn duplicate_vertex(g: &Graph, v: usize, times: usize) -> Result<Graph> {
    let n = g.order();
    if v >= n {
        return Err(Error::BadVertex { v, n });
    }
    if n + times > MAX_VERTICES {
        return Err(Error::InvalidOrder(n + times));
    }
    let template = g.row(v);
    let mut adj: Vec<u64> = (0..n).map(|u| g.row(u)).collect();
    for c in 0..times {
        let copy = n + c;
        adj.push(template);
        let mut m = template;
        while m != 0 {
            let u = m.trailing_zeros() as usize;
            m &= m - 1;
            adj[u] |= bit(copy);
        }
    }
    Ok(Graph::from_adj(n + times, adj))
}
