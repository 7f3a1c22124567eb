//! Exhaustive solvers for the forcing number `F(G)`, the connected forcing
//! number `F_c(G)`, forcing spreads and the path cover number.
//!
//! Everything here is exponential in the order of the graph and works on 64-bit
//! vertex masks, so graphs are limited to 64 vertices. Candidates of one
//! cardinality are tested in parallel; results are made schedule independent
//! by scanning candidates in lexicographic order.

use std::cmp::Reverse;

use itertools::Itertools;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::forcing::{closure_mask, is_connected_forcing_set, is_forcing_set};
use crate::graph::{articulation_points, Graph, VertexSet};

const MASK_LIMIT: usize = 64;
const CHUNK: usize = 1 << 14;
const PARALLEL_THRESHOLD: usize = 2048;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchOptions {
    /// Return every minimum set instead of the first one found.
    pub collect_all: bool,
    /// Maximum number of candidate sets to test.
    pub budget: Option<u64>,
}

impl SearchOptions {
    pub fn all() -> Self {
        Self {
            collect_all: true,
            budget: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveResult {
    pub value: usize,
    /// Minimum sets in lexicographic order: all of them when requested,
    /// otherwise the lexicographically first.
    pub witnesses: Vec<VertexSet>,
    /// Number of candidate sets tested.
    pub explored: u64,
}

fn masks_of(g: &Graph) -> Result<Vec<u64>> {
    g.neighbor_masks().ok_or(Error::TooLarge {
        n: g.order(),
        limit: MASK_LIMIT,
    })
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Orders masks of equal size lexicographically by their ascending member lists.
fn lex_sort(masks: &mut [u64]) {
    masks.sort_unstable_by_key(|m| Reverse(m.reverse_bits()));
}

struct Scan {
    full: u64,
    opts: SearchOptions,
    explored: u64,
}

impl Scan {
    /// Tests one lexicographically ordered batch; returns the feasible masks
    /// (all of them, or just the first when not collecting).
    fn batch(&mut self, adj: &[u64], batch: &[u64]) -> Result<Vec<u64>> {
        if let Some(budget) = self.opts.budget {
            if self.explored + batch.len() as u64 > budget {
                return Err(Error::BudgetExceeded { budget });
            }
        }
        let full = self.full;
        let forces = |m: &u64| closure_mask(adj, *m) == full;
        let parallel = batch.len() >= PARALLEL_THRESHOLD;
        if self.opts.collect_all {
            self.explored += batch.len() as u64;
            let hits = if parallel {
                batch.par_iter().copied().filter(forces).collect()
            } else {
                batch.iter().copied().filter(forces).collect()
            };
            Ok(hits)
        } else {
            let pos = if parallel {
                batch.par_iter().position_first(forces)
            } else {
                batch.iter().position(forces)
            };
            match pos {
                Some(i) => {
                    self.explored += i as u64 + 1;
                    Ok(vec![batch[i]])
                }
                None => {
                    self.explored += batch.len() as u64;
                    Ok(Vec::new())
                }
            }
        }
    }
}

fn finish(g: &Graph, value: usize, hits: Vec<u64>, explored: u64, connected: bool) -> SolveResult {
    let n = g.order();
    let witnesses: Vec<VertexSet> = hits
        .into_iter()
        .map(|m| VertexSet::from_mask(n, m))
        .collect();
    for w in &witnesses {
        let ok = if connected {
            is_connected_forcing_set(g, w)
        } else {
            is_forcing_set(g, w)
        };
        assert_eq!(ok, Ok(true), "solver produced an invalid witness {w}");
    }
    SolveResult {
        value,
        witnesses,
        explored,
    }
}

/// `F(G)`: the size of a smallest forcing set, by testing subsets in order of
/// cardinality. Disconnected graphs are accepted; the value is then the sum
/// over components.
pub fn forcing_number(g: &Graph, collect_all: bool) -> Result<SolveResult> {
    forcing_number_with(
        g,
        &SearchOptions {
            collect_all,
            budget: None,
        },
    )
}

pub fn forcing_number_with(g: &Graph, opts: &SearchOptions) -> Result<SolveResult> {
    let adj = masks_of(g)?;
    let n = g.order();
    let mut scan = Scan {
        full: full_mask(n),
        opts: *opts,
        explored: 0,
    };
    for k in 0..=n {
        let mut hits = Vec::new();
        let mut combos = (0..n)
            .combinations(k)
            .map(|c| c.iter().fold(0u64, |a, &v| a | 1 << v));
        loop {
            let batch: Vec<u64> = combos.by_ref().take(CHUNK).collect();
            if batch.is_empty() {
                break;
            }
            hits.extend(scan.batch(&adj, &batch)?);
            if !opts.collect_all && !hits.is_empty() {
                break;
            }
        }
        if !hits.is_empty() {
            return Ok(finish(g, k, hits, scan.explored, false));
        }
    }
    unreachable!("the full vertex set always forces")
}

/// Connected vertex subsets grouped by size, each level in lexicographic order.
/// Subsets are grown one neighbor at a time, only ever adding vertices larger
/// than the subset's minimum, so each set is reached from its smallest member.
pub struct ConnectedSubsets<'a> {
    adj: &'a [u64],
    level: Vec<u64>,
    size: usize,
}

impl<'a> ConnectedSubsets<'a> {
    pub fn new(adj: &'a [u64]) -> Self {
        Self {
            adj,
            level: Vec::new(),
            size: 0,
        }
    }
}

impl Iterator for ConnectedSubsets<'_> {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        let n = self.adj.len();
        if self.size >= n {
            return None;
        }
        let mut next: Vec<u64> = if self.size == 0 {
            (0..n).map(|v| 1u64 << v).collect()
        } else {
            let adj = self.adj;
            let grow = |&s: &u64| {
                let low = s.trailing_zeros();
                let above = !((1u64 << low) | ((1u64 << low) - 1));
                let mut frontier = 0u64;
                let mut rest = s;
                while rest != 0 {
                    frontier |= adj[rest.trailing_zeros() as usize];
                    rest &= rest - 1;
                }
                frontier &= !s & above;
                let mut out = Vec::with_capacity(frontier.count_ones() as usize);
                while frontier != 0 {
                    let u = frontier.trailing_zeros();
                    frontier &= frontier - 1;
                    out.push(s | 1 << u);
                }
                out
            };
            if self.level.len() >= PARALLEL_THRESHOLD {
                self.level.par_iter().flat_map_iter(grow).collect()
            } else {
                self.level.iter().flat_map(grow).collect()
            }
        };
        next.par_sort_unstable();
        next.dedup();
        lex_sort(&mut next);
        self.size += 1;
        self.level = next.clone();
        Some(next)
    }
}

/// `F_c(G)`: the size of a smallest forcing set inducing a connected subgraph.
/// Only connected candidates are ever generated.
pub fn connected_forcing_number(g: &Graph, collect_all: bool) -> Result<SolveResult> {
    connected_forcing_number_with(
        g,
        &SearchOptions {
            collect_all,
            budget: None,
        },
    )
}

pub fn connected_forcing_number_with(g: &Graph, opts: &SearchOptions) -> Result<SolveResult> {
    g.require_connected()?;
    let adj = masks_of(g)?;
    let mut scan = Scan {
        full: full_mask(g.order()),
        opts: *opts,
        explored: 0,
    };
    for (i, level) in ConnectedSubsets::new(&adj).enumerate() {
        if let Some(budget) = opts.budget {
            if level.len() as u64 > budget {
                return Err(Error::BudgetExceeded { budget });
            }
        }
        let mut hits = Vec::new();
        for batch in level.chunks(CHUNK) {
            hits.extend(scan.batch(&adj, batch)?);
            if !opts.collect_all && !hits.is_empty() {
                break;
            }
        }
        if !hits.is_empty() {
            return Ok(finish(g, i + 1, hits, scan.explored, true));
        }
    }
    unreachable!("the full vertex set of a connected graph is a connected forcing set")
}

/// All minimum forcing sets, lexicographically sorted.
pub fn minimum_forcing_sets(g: &Graph) -> Result<Vec<VertexSet>> {
    Ok(forcing_number_with(g, &SearchOptions::all())?.witnesses)
}

/// All minimum connected forcing sets, lexicographically sorted.
pub fn minimum_connected_forcing_sets(g: &Graph) -> Result<Vec<VertexSet>> {
    Ok(connected_forcing_number_with(g, &SearchOptions::all())?.witnesses)
}

pub fn count_minimum_connected_forcing_sets(g: &Graph) -> Result<usize> {
    Ok(minimum_connected_forcing_sets(g)?.len())
}

/// `f(G;v) = F(G) - F(G - v)`. `G - v` may be disconnected, in which case its
/// forcing number is the sum over its components.
pub fn forcing_spread(g: &Graph, v: usize) -> Result<i64> {
    g.check_vertex(v)?;
    if g.order() == 1 {
        return Err(Error::Precondition(
            "spread is undefined on a single vertex".into(),
        ));
    }
    let (h, _) = g.remove_vertex(v)?;
    let whole = forcing_number(g, false)?.value as i64;
    let without = forcing_number(&h, false)?.value as i64;
    Ok(whole - without)
}

/// `f_c(G;v) = F_c(G) - F_c(G - v)` for a vertex `v` that is not an
/// articulation point.
pub fn connected_forcing_spread(g: &Graph, v: usize) -> Result<i64> {
    g.check_vertex(v)?;
    if g.order() == 1 {
        return Err(Error::Precondition(
            "spread is undefined on a single vertex".into(),
        ));
    }
    if articulation_points(g)?.contains(v) {
        return Err(Error::Precondition(format!(
            "vertex {v} is an articulation point"
        )));
    }
    let (h, _) = g.remove_vertex(v)?;
    let whole = connected_forcing_number(g, false)?.value as i64;
    let without = connected_forcing_number(&h, false)?.value as i64;
    Ok(whole - without)
}

const PATH_COVER_LIMIT: usize = 16;

/// `P(G)`: the fewest vertex-disjoint induced paths covering every vertex.
/// Dynamic program over vertex subsets, so limited to 16 vertices.
pub fn path_cover_number(g: &Graph) -> Result<usize> {
    let n = g.order();
    if n > PATH_COVER_LIMIT {
        return Err(Error::TooLarge {
            n,
            limit: PATH_COVER_LIMIT,
        });
    }
    let adj = masks_of(g)?;
    let size = 1usize << n;
    let induces_path = |s: u64| -> bool {
        let k = s.count_ones();
        let mut edges = 0;
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let d = (adj[v] & s).count_ones();
            if d > 2 {
                return false;
            }
            edges += d;
        }
        edges / 2 + 1 == k && closure_connected(&adj, s)
    };
    let is_path: Vec<bool> = (0..size as u64)
        .map(|s| s != 0 && induces_path(s))
        .collect();
    let mut best = vec![usize::MAX; size];
    best[0] = 0;
    for mask in 1..size {
        let low = mask & mask.wrapping_neg();
        let rest = mask ^ low;
        // every submask of `rest`, joined with the lowest vertex
        let mut sub = rest;
        loop {
            let part = sub | low;
            if is_path[part] && best[mask ^ part] != usize::MAX {
                best[mask] = best[mask].min(best[mask ^ part] + 1);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
    }
    Ok(best[size - 1])
}

fn closure_connected(adj: &[u64], s: u64) -> bool {
    let mut seen = s & s.wrapping_neg();
    loop {
        let mut grow = seen;
        let mut rest = seen;
        while rest != 0 {
            grow |= adj[rest.trailing_zeros() as usize] & s;
            rest &= rest - 1;
        }
        if grow == seen {
            return seen == s;
        }
        seen = grow;
    }
}
