//! Simple undirected graphs over dense vertex ids `0..n`, plus the structural
//! primitives the solvers consume.

pub(crate) mod biconnected;
pub mod edge_list;
pub(crate) mod reduction;
mod vertex_set;

use std::collections::VecDeque;

pub use biconnected::{articulation_points, blocks};
pub use reduction::{compute_r_sets, reduce_leaves, ReducedGraph, StructuralReport};
pub use vertex_set::VertexSet;

use crate::error::{Error, Result};

/// A simple undirected graph. Neighbor lists are sorted and duplicate free.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// Builds a graph on `n >= 1` vertices. Duplicate and reversed edges collapse
    /// to one edge; self-loops and out-of-range endpoints are rejected.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n || u == v {
                return Err(Error::InvalidEdge { u, v, n });
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut m = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            m += list.len();
        }
        Ok(Self { adj, m: m / 2 })
    }

    /// Builds a graph from per-vertex neighbor bitmasks (n <= 64). The masks must
    /// be symmetric and loop free.
    pub fn from_neighbor_masks(masks: &[u64]) -> Result<Self> {
        let n = masks.len();
        let mut edges = Vec::new();
        for (u, &mask) in masks.iter().enumerate() {
            let mut rest = mask;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if v >= n || masks[v] >> u & 1 == 0 {
                    return Err(Error::InvalidEdge { u, v, n });
                }
                if u < v {
                    edges.push((u, v));
                }
            }
        }
        Self::new(n, &edges)
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::InvalidVertex { v, n: self.order() })
        }
    }

    pub fn check_set(&self, s: &VertexSet) -> Result<()> {
        if s.ambient() == self.order() {
            Ok(())
        } else {
            Err(Error::AmbientMismatch {
                expected: self.order(),
                found: s.ambient(),
            })
        }
    }

    /// Neighborhoods as 64-bit masks; `None` when `n > 64`.
    pub fn neighbor_masks(&self) -> Option<Vec<u64>> {
        if self.order() > 64 {
            return None;
        }
        Some(
            self.adj
                .iter()
                .map(|list| list.iter().fold(0u64, |acc, &v| acc | 1 << v))
                .collect(),
        )
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.order()];
        seen[0] = true;
        let mut stack = vec![0];
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == self.order()
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    /// Connected components of the subgraph induced on `V \ removed`, each
    /// discovered from its smallest vertex, in ascending order of that vertex.
    pub fn components_after_removal(&self, removed: &VertexSet) -> Vec<VertexSet> {
        let n = self.order();
        let mut seen: Vec<bool> = (0..n).map(|v| removed.contains(v)).collect();
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut comp = VertexSet::empty(n);
            seen[start] = true;
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                comp.insert(u);
                for &v in &self.adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        queue.push_back(v);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    /// Whether the subgraph induced on `s` is connected. The empty set is not.
    pub fn induces_connected(&self, s: &VertexSet) -> bool {
        let Some(start) = s.first() else {
            return false;
        };
        let mut seen = VertexSet::empty(self.order());
        seen.insert(start);
        let mut stack = vec![start];
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &v in &self.adj[u] {
                if s.contains(v) && seen.insert(v) {
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == s.len()
    }

    /// Whether `s` induces a path (the single vertex counts as `P_1`).
    pub fn induces_path(&self, s: &VertexSet) -> bool {
        let k = s.len();
        if k == 0 || !self.induces_connected(s) {
            return false;
        }
        let mut edges = 0;
        for u in s.iter() {
            let d = self.adj[u].iter().filter(|&&v| s.contains(v)).count();
            if d > 2 {
                return false;
            }
            edges += d;
        }
        edges / 2 == k - 1
    }

    /// Whether `s` hangs off `v` as a path: `v` is outside `s`, has exactly one
    /// neighbor in it, and `s ∪ {v}` induces a path with `v` at one end.
    pub fn is_pendant_path(&self, v: usize, s: &VertexSet) -> bool {
        if s.contains(v) || self.adj[v].iter().filter(|&&u| s.contains(u)).count() != 1 {
            return false;
        }
        let mut with_v = s.clone();
        with_v.insert(v);
        self.induces_path(&with_v)
    }

    /// Degree-1 vertices.
    pub fn leaves(&self) -> VertexSet {
        VertexSet::from_ids(
            self.order(),
            (0..self.order()).filter(|&v| self.degree(v) == 1),
        )
    }

    /// `L(G)`: the number of leaves.
    pub fn leaf_number(&self) -> usize {
        (0..self.order()).filter(|&v| self.degree(v) == 1).count()
    }

    /// `L(v;G)`: the number of leaves adjacent to `v`.
    pub fn leaf_count_at(&self, v: usize) -> usize {
        self.adj[v].iter().filter(|&&u| self.degree(u) == 1).count()
    }

    /// Whether the graph is `P_n` for some `n >= 1`.
    pub fn is_path_graph(&self) -> bool {
        self.max_degree() <= 2 && self.m + 1 == self.order() && self.is_connected()
    }

    pub fn is_tree(&self) -> bool {
        self.m + 1 == self.order() && self.is_connected()
    }

    pub fn is_complete(&self) -> bool {
        let n = self.order();
        self.m == n * (n - 1) / 2
    }

    /// Whether the graph is the star `K_{1,k}` with `k >= 3` leaves.
    pub fn is_star(&self) -> bool {
        let n = self.order();
        n >= 4 && self.is_tree() && self.max_degree() == n - 1
    }

    /// The subgraph induced on `keep`, with ids renumbered densely in ascending
    /// order. Returns the graph and the new-to-old id map.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> Result<(Graph, Vec<usize>)> {
        let map: Vec<usize> = keep.iter().collect();
        let mut index = vec![usize::MAX; self.order()];
        for (i, &v) in map.iter().enumerate() {
            index[v] = i;
        }
        let edges: Vec<(usize, usize)> = self
            .edges()
            .filter(|&(u, v)| keep.contains(u) && keep.contains(v))
            .map(|(u, v)| (index[u], index[v]))
            .collect();
        Ok((Graph::new(map.len(), &edges)?, map))
    }

    /// `G - v`, with the new-to-old id map.
    pub fn remove_vertex(&self, v: usize) -> Result<(Graph, Vec<usize>)> {
        self.check_vertex(v)?;
        let mut keep = self.vertex_set();
        keep.remove(v);
        self.induced_subgraph(&keep)
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.order())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}
