//! Simple undirected graphs on up to 64 vertices.
//!
//! Adjacency is one `u64` bitmask per vertex: bit `j` of `adj[i]` says
//! `i ~ j`. Every operation keeps the matrix symmetric and irreflexive,
//! so the whole neighborhood algebra (free vertices, BFS frontiers,
//! subset tests) runs on word operations.

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

#[inline(always)]
pub(crate) const fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Mask with bits 0..n set.
#[inline(always)]
pub(crate) const fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// An undirected simple graph with vertex set {0, .., n-1}.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on n vertices, 1 <= n <= 64.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::InvalidOrder(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Graph from an explicit edge list. Endpoints are validated, the
    /// list may repeat edges and order endpoints either way.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.insert_edge_checked(u, v)?;
        }
        Ok(g)
    }

    /// Wrap raw adjacency rows. Symmetry and irreflexivity are the
    /// caller's obligation; checked in debug builds only.
    pub(crate) fn from_adj(n: usize, adj: Vec<u64>) -> Self {
        debug_assert_eq!(adj.len(), n);
        debug_assert!((1..=MAX_VERTICES).contains(&n));
        #[cfg(debug_assertions)]
        {
            let full = full_mask(n);
            for i in 0..n {
                debug_assert_eq!(adj[i] & !full, 0, "row {i} has bits beyond n");
                debug_assert_eq!(adj[i] & bit(i), 0, "self-loop at {i}");
                for j in 0..n {
                    debug_assert_eq!(
                        adj[i] & bit(j) != 0,
                        adj[j] & bit(i) != 0,
                        "asymmetry at ({i},{j})"
                    );
                }
            }
        }
        Graph { n, adj }
    }

    #[inline(always)]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Neighborhood of v as a bitmask.
    #[inline(always)]
    pub fn row(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline(always)]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & bit(v) != 0
    }

    #[inline(always)]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges as (u, v) with u < v, ascending lexicographic.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            let mut higher = self.adj[u] & !full_mask(u + 1);
            while higher != 0 {
                let v = higher.trailing_zeros() as usize;
                higher &= higher - 1;
                out.push((u, v));
            }
        }
        out
    }

    pub fn is_complete(&self) -> bool {
        let full = full_mask(self.n);
        self.adj
            .iter()
            .enumerate()
            .all(|(i, &r)| r == full & !bit(i))
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        if u >= self.n {
            return Err(Error::BadVertex { v: u, n: self.n });
        }
        if v >= self.n {
            return Err(Error::BadVertex { v, n: self.n });
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        Ok(())
    }

    fn insert_edge_checked(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_pair(u, v)?;
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
        Ok(())
    }

    /// Copy of self with edge {u, v} present (idempotent).
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self> {
        let mut g = self.clone();
        g.insert_edge_checked(u, v)?;
        Ok(g)
    }

    /// Copy of self with edge {u, v} absent (idempotent).
    pub fn without_edge(&self, u: usize, v: usize) -> Result<Self> {
        self.check_pair(u, v)?;
        let mut g = self.clone();
        g.adj[u] &= !bit(v);
        g.adj[v] &= !bit(u);
        Ok(g)
    }

    /// Subgraph induced by `keep`, relabeled to 0..keep.len() in the
    /// ascending order of the kept vertices. Duplicates are rejected
    /// via the same BadVertex check after the first occurrence is seen.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Result<Self> {
        if keep.is_empty() {
            return Err(Error::EmptySelection);
        }
        let mut mask = 0u64;
        for &v in keep {
            if v >= self.n {
                return Err(Error::BadVertex { v, n: self.n });
            }
            mask |= bit(v);
        }
        let mut order: Vec<usize> = Vec::with_capacity(mask.count_ones() as usize);
        let mut m = mask;
        while m != 0 {
            order.push(m.trailing_zeros() as usize);
            m &= m - 1;
        }
        let adj = order
            .iter()
            .map(|&v| {
                let mut row = 0u64;
                for (new, &old) in order.iter().enumerate() {
                    if self.adj[v] & bit(old) != 0 {
                        row |= bit(new);
                    }
                }
                row
            })
            .collect();
        Ok(Graph::from_adj(order.len(), adj))
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Vertices reachable from `start` inside `allowed`, as a bitmask.
/// `start` must itself lie in `allowed`.
pub(crate) fn reach(adj: &[u64], start: usize, allowed: u64) -> u64 {
    debug_assert!(allowed & bit(start) != 0);
    let mut seen = bit(start);
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0u64;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= adj[v];
        }
        next &= allowed & !seen;
        seen |= next;
        frontier = next;
    }
    seen
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_rejects_orders_outside_range() {
        assert_eq!(Graph::empty(0), Err(Error::InvalidOrder(0)));
        assert_eq!(Graph::empty(65), Err(Error::InvalidOrder(65)));
        assert!(Graph::empty(1).is_ok());
        assert!(Graph::empty(64).is_ok());
    }

    #[test]
    fn edge_surgery_is_idempotent_and_symmetric() {
        let g = Graph::empty(4).unwrap();
        let g1 = g.with_edge(0, 2).unwrap();
        let g2 = g1.with_edge(2, 0).unwrap();
        assert_eq!(g1, g2);
        assert!(g1.has_edge(0, 2) && g1.has_edge(2, 0));
        let g3 = g1.without_edge(0, 2).unwrap();
        assert_eq!(g3, g);
        assert_eq!(g3.without_edge(2, 0).unwrap(), g);
    }

    #[test]
    fn self_loops_and_bad_vertices_are_rejected() {
        let g = Graph::empty(3).unwrap();
        assert_eq!(g.with_edge(1, 1), Err(Error::SelfLoop(1)));
        assert_eq!(g.with_edge(0, 3), Err(Error::BadVertex { v: 3, n: 3 }));
        assert_eq!(g.without_edge(7, 0), Err(Error::BadVertex { v: 7, n: 3 }));
    }

    #[test]
    fn induced_subgraph_relabels_ascending() {
        // Path 0-1-2-3; keep {3, 1, 2} in scrambled order.
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let h = g.induced_subgraph(&[3, 1, 2]).unwrap();
        assert_eq!(h.order(), 3);
        assert_eq!(h.edges(), vec![(0, 1), (1, 2)]);
        assert_eq!(g.induced_subgraph(&[]), Err(Error::EmptySelection));
        assert_eq!(
            g.induced_subgraph(&[0, 9]),
            Err(Error::BadVertex { v: 9, n: 4 })
        );
    }

    #[test]
    fn induced_subgraph_on_all_vertices_is_identity() {
        let g = Graph::from_edges(5, &[(0, 4), (1, 3), (2, 4), (0, 1)]).unwrap();
        let h = g.induced_subgraph(&[0, 1, 2, 3, 4]).unwrap();
        assert_eq!(g, h);
    }

    #[test]
    fn edges_are_sorted_lexicographically() {
        let g = Graph::from_edges(5, &[(4, 2), (1, 0), (3, 1)]).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (1, 3), (2, 4)]);
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn completeness_check() {
        let mut g = Graph::empty(4).unwrap();
        for u in 0..4 {
            for v in u + 1..4 {
                g = g.with_edge(u, v).unwrap();
            }
        }
        assert!(g.is_complete());
        assert!(!g.without_edge(0, 3).unwrap().is_complete());
        assert!(Graph::empty(1).unwrap().is_complete());
    }
}
