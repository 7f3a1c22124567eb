//! Naive reference implementations. They only read neighbor lists from the
//! library and share no code with its solvers.
#![allow(dead_code)]

use cforce::{Graph, VertexSet};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn adjacency(g: &Graph) -> Vec<Vec<usize>> {
    (0..g.order()).map(|v| g.neighbors(v).to_vec()).collect()
}

/// Applies forces one at a time until none is available.
pub fn closure(adj: &[Vec<usize>], start: &[usize]) -> Vec<bool> {
    let mut colored = vec![false; adj.len()];
    for &v in start {
        colored[v] = true;
    }
    loop {
        let force = (0..adj.len()).filter(|&u| colored[u]).find_map(|u| {
            let mut open = adj[u].iter().filter(|&&w| !colored[w]);
            match (open.next(), open.next()) {
                (Some(&w), None) => Some(w),
                _ => None,
            }
        });
        match force {
            Some(w) => colored[w] = true,
            None => return colored,
        }
    }
}

/// Like `closure`, but picks a uniformly random available force each step.
pub fn closure_random_order(adj: &[Vec<usize>], start: &[usize], seed: u64) -> Vec<bool> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut colored = vec![false; adj.len()];
    for &v in start {
        colored[v] = true;
    }
    loop {
        let options: Vec<usize> = (0..adj.len())
            .filter(|&u| colored[u])
            .filter_map(|u| {
                let open: Vec<usize> = adj[u].iter().copied().filter(|&w| !colored[w]).collect();
                (open.len() == 1).then(|| open[0])
            })
            .collect();
        match options.choose(&mut rng) {
            Some(&w) => colored[w] = true,
            None => return colored,
        }
    }
}

pub fn forces_all(adj: &[Vec<usize>], s: &[usize]) -> bool {
    closure(adj, s).iter().all(|&c| c)
}

pub fn is_connected_subset(adj: &[Vec<usize>], s: &[usize]) -> bool {
    let Some(&first) = s.first() else {
        return false;
    };
    let mut seen = vec![false; adj.len()];
    let mut stack = vec![first];
    seen[first] = true;
    let mut count = 1;
    while let Some(u) = stack.pop() {
        for &w in &adj[u] {
            if !seen[w] && s.contains(&w) {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count == s.len()
}

fn combinations(n: usize, k: usize, out: &mut Vec<Vec<usize>>) {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            rec(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut Vec::new(), out);
}

/// Minimum size and all minimum sets (ascending id lists, lexicographic order).
pub fn minimum_sets(adj: &[Vec<usize>], connected: bool) -> (usize, Vec<Vec<usize>>) {
    let n = adj.len();
    for k in 1..=n {
        let mut all = Vec::new();
        combinations(n, k, &mut all);
        let found: Vec<Vec<usize>> = all
            .into_iter()
            .filter(|s| (!connected || is_connected_subset(adj, s)) && forces_all(adj, s))
            .collect();
        if !found.is_empty() {
            return (k, found);
        }
    }
    unreachable!("the whole vertex set forces")
}

pub fn forcing_number(g: &Graph) -> usize {
    minimum_sets(&adjacency(g), false).0
}

pub fn connected_forcing_number(g: &Graph) -> usize {
    minimum_sets(&adjacency(g), true).0
}

pub fn ids(g: &Graph, v: &[usize]) -> VertexSet {
    VertexSet::from_ids(g.order(), v.iter().copied())
}

pub fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::new(n, edges).expect("valid test graph")
}

/// A random connected graph: a random spanning tree plus extra edges.
pub fn random_connected(n: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let density: f64 = rng.gen_range(0.0..0.6);
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(density) {
                edges.push((u, v));
            }
        }
    }
    graph(n, &edges)
}

/// Double star `S_{2,2}`: centers 0 and 1, leaves 2,3 on 0 and 4,5 on 1.
pub fn double_star() -> Graph {
    graph(6, &[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)])
}

/// Spider with three legs of the given length around center 0.
pub fn spider(leg: usize) -> Graph {
    let mut edges = Vec::new();
    for l in 0..3 {
        let mut prev = 0;
        for i in 0..leg {
            let v = 1 + l * leg + i;
            edges.push((prev, v));
            prev = v;
        }
    }
    graph(1 + 3 * leg, &edges)
}

/// A random connected graph on 1..=10 vertices, a random vertex set, and a
/// seed for anything else the property needs.
pub fn graph_and_set() -> impl proptest::strategy::Strategy<Value = (Graph, VertexSet, u64)> {
    use proptest::prelude::*;
    (1usize..=10, any::<u64>(), any::<u64>(), any::<u64>()).prop_map(|(n, gseed, sseed, oseed)| {
        let g = random_connected(n, gseed);
        let mut rng = ChaCha8Rng::seed_from_u64(sseed);
        let p: f64 = rng.gen_range(0.05..0.7);
        let s = VertexSet::from_ids(n, (0..n).filter(|_| rng.gen_bool(p)));
        (g, s, oseed)
    })
}

/// Grows a connected set from a random vertex until it forces the graph.
pub fn grow_connected_forcing_set(g: &Graph, seed: u64) -> VertexSet {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = g.order();
    let mut s = VertexSet::from_ids(n, [rng.gen_range(0..n)]);
    while !cforce::forcing::is_forcing_set(g, &s).unwrap() {
        let boundary: Vec<usize> = s
            .iter()
            .flat_map(|u| g.neighbors(u).iter().copied())
            .filter(|&w| !s.contains(w))
            .collect();
        s.insert(boundary[rng.gen_range(0..boundary.len())]);
    }
    s
}

/// Every engine property on one instance: order independence, idempotence,
/// monotonicity, superset closure, chains inducing paths, and at most one
/// leaf per chain of a connected forcing set when the graph is not a path.
pub fn engine_properties(g: &Graph, s: &VertexSet, seed: u64) -> Result<(), String> {
    use cforce::forcing::{forcing_chains, forcing_closure, is_forcing_set};
    let n = g.order();
    let fail = |what: &str| Err(format!("{what} on {g:?} with {s}"));
    let trace = forcing_closure(g, s).unwrap();
    let adj = adjacency(g);

    let random = closure_random_order(&adj, &s.to_vec(), seed);
    if trace.final_set != VertexSet::from_ids(n, (0..n).filter(|&v| random[v])) {
        return fail("order dependence");
    }
    if forcing_closure(g, &trace.final_set).unwrap().final_set != trace.final_set {
        return fail("closure not idempotent");
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    let mut t = s.clone();
    for v in 0..n {
        if rng.gen_bool(0.3) {
            t.insert(v);
        }
    }
    let closure_t = forcing_closure(g, &t).unwrap().final_set;
    if !trace.final_set.is_subset(&closure_t) {
        return fail("closure not monotone");
    }
    if trace.is_complete() && !closure_t.eq(&g.vertex_set()) {
        return fail("superset of a forcing set does not force");
    }

    for chain in forcing_chains(&trace, g).unwrap() {
        if !g.induces_path(&VertexSet::from_ids(n, chain.iter().copied())) {
            return fail("chain does not induce a path");
        }
    }

    if !g.is_path_graph() {
        let c = grow_connected_forcing_set(g, seed);
        let leaves = g.leaves();
        let ctrace = forcing_closure(g, &c).unwrap();
        if !is_forcing_set(g, &c).unwrap() {
            return fail("grown set does not force");
        }
        for chain in forcing_chains(&ctrace, g).unwrap() {
            if chain.iter().filter(|&&v| leaves.contains(v)).count() > 1 {
                return Err(format!("chain {chain:?} of {c} holds two leaves in {g:?}"));
            }
        }
    }
    Ok(())
}
