use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

const CONNECTED_LIMIT: usize = 7;
const ISOMORPHISM_LIMIT: usize = 6;

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

fn neighbor_masks(pairs: &[(usize, usize)], n: usize, edge_mask: u64) -> Vec<u64> {
    let mut adj = vec![0u64; n];
    for (i, &(u, v)) in pairs.iter().enumerate() {
        if edge_mask >> i & 1 == 1 {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
    }
    adj
}

fn masks_connected(adj: &[u64]) -> bool {
    let full = (1u64 << adj.len()) - 1;
    let mut seen = 1u64;
    loop {
        let mut grow = seen;
        let mut rest = seen;
        while rest != 0 {
            grow |= adj[rest.trailing_zeros() as usize];
            rest &= rest - 1;
        }
        if grow == seen {
            return seen == full;
        }
        seen = grow;
    }
}

fn check_range(n: usize, limit: usize) -> Result<()> {
    match n {
        0 => Err(Error::EmptyGraph),
        n if n > limit => Err(Error::TooLarge { n, limit }),
        _ => Ok(()),
    }
}

/// Every connected graph on the labeled vertices `0..n` (`1 <= n <= 7`),
/// lazily, by filtering all edge subsets.
pub fn all_connected_graphs(n: usize) -> Result<impl Iterator<Item = Graph>> {
    check_range(n, CONNECTED_LIMIT)?;
    let pairs = pairs(n);
    let total = 1u64 << pairs.len();
    Ok((0..total).filter_map(move |mask| {
        let adj = neighbor_masks(&pairs, n, mask);
        masks_connected(&adj).then(|| Graph::from_neighbor_masks(&adj).unwrap())
    }))
}

/// The canonical form of a graph on at most 6 vertices: the lexicographically
/// smallest upper-triangle adjacency bit string over all relabelings. Two
/// graphs are isomorphic exactly when their forms agree.
pub fn canonical_form(g: &Graph) -> Result<u64> {
    let n = g.order();
    check_range(n, ISOMORPHISM_LIMIT)?;
    Ok(canonical_of(g, n))
}

fn canonical_of(g: &Graph, n: usize) -> u64 {
    let pairs = pairs(n);
    (0..n)
        .permutations(n)
        .map(|perm| {
            pairs.iter().fold(0u64, |acc, &(u, v)| {
                acc << 1 | u64::from(g.has_edge(perm[u], perm[v]))
            })
        })
        .min()
        .unwrap()
}

/// One representative per isomorphism class of connected graphs on `n <= 6`
/// vertices, in order of canonical form.
pub fn all_connected_graphs_up_to_isomorphism(n: usize) -> Result<Vec<Graph>> {
    check_range(n, ISOMORPHISM_LIMIT)?;
    let mut reps = std::collections::BTreeMap::new();
    for g in all_connected_graphs(n)? {
        reps.entry(canonical_of(&g, n)).or_insert(g);
    }
    Ok(reps.into_values().collect())
}

/// A uniformly random connected labeled graph on `n <= 64` vertices, by
/// rejection sampling over edge subsets.
pub fn random_connected_graph(n: usize, seed: u64) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_connected_graph_with(n, &mut rng)
}

pub fn random_connected_graph_with<R: Rng>(n: usize, rng: &mut R) -> Result<Graph> {
    check_range(n, 64)?;
    let pairs = pairs(n);
    loop {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .copied()
            .filter(|_| rng.gen_bool(0.5))
            .collect();
        let g = Graph::new(n, &edges)?;
        if g.is_connected() {
            return Ok(g);
        }
    }
}
