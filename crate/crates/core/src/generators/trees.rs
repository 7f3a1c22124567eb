use std::cmp::Reverse;
use std::collections::BinaryHeap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

const TREE_ENUMERATION_LIMIT: usize = 8;

/// Decodes a Prüfer sequence of length `n - 2` over `0..n` into its labeled tree.
pub fn prufer_decode(n: usize, seq: &[usize]) -> Result<Graph> {
    match n {
        0 => return Err(Error::EmptyGraph),
        1 => return Graph::new(1, &[]),
        _ => {}
    }
    if seq.len() != n - 2 {
        return Err(Error::Precondition(format!(
            "Prüfer sequence for {n} vertices must have length {}",
            n - 2
        )));
    }
    if let Some(&v) = seq.iter().find(|&&v| v >= n) {
        return Err(Error::InvalidVertex { v, n });
    }
    let mut degree = vec![1usize; n];
    for &v in seq {
        degree[v] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&v| degree[v] == 1).map(Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &v in seq {
        let Reverse(leaf) = leaves.pop().unwrap();
        edges.push((leaf, v));
        degree[v] -= 1;
        if degree[v] == 1 {
            leaves.push(Reverse(v));
        }
    }
    let Reverse(u) = leaves.pop().unwrap();
    let Reverse(w) = leaves.pop().unwrap();
    edges.push((u, w));
    Graph::new(n, &edges)
}

/// A uniformly random labeled tree on `n` vertices, from a random Prüfer
/// sequence drawn with a seeded ChaCha generator.
pub fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_tree_with(n, &mut rng)
}

pub(crate) fn random_tree_with<R: Rng>(n: usize, rng: &mut R) -> Result<Graph> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let seq: Vec<usize> = (0..n.saturating_sub(2))
        .map(|_| rng.gen_range(0..n))
        .collect();
    prufer_decode(n, &seq)
}

/// Every labeled tree on `n` vertices (`n^(n-2)` of them for `n >= 2`), lazily,
/// in lexicographic order of Prüfer sequences.
pub fn all_labeled_trees(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > TREE_ENUMERATION_LIMIT {
        return Err(Error::TooLarge {
            n,
            limit: TREE_ENUMERATION_LIMIT,
        });
    }
    let len = n.saturating_sub(2);
    let mut seq = vec![0usize; len];
    let mut done = false;
    Ok(std::iter::from_fn(move || {
        if done {
            return None;
        }
        let tree = prufer_decode(n, &seq).expect("valid sequence");
        // odometer increment; wraps to all zeros when finished
        done = true;
        for digit in seq.iter_mut().rev() {
            *digit += 1;
            if *digit < n {
                done = false;
                break;
            }
            *digit = 0;
        }
        Some(tree)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(all_labeled_trees(1).unwrap().count(), 1);
        assert_eq!(all_labeled_trees(2).unwrap().count(), 1);
        assert_eq!(all_labeled_trees(3).unwrap().count(), 3);
        assert_eq!(all_labeled_trees(5).unwrap().count(), 125);
        assert!(matches!(all_labeled_trees(9), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn labeled_trees_are_distinct_trees() {
        let trees: Vec<Graph> = all_labeled_trees(5).unwrap().collect();
        assert!(trees.iter().all(Graph::is_tree));
        let distinct: std::collections::HashSet<_> = trees.iter().collect();
        assert_eq!(distinct.len(), 125);
    }

    #[test]
    fn decode_known_sequence() {
        // sequence [3, 3, 3] on 5 vertices is the star centered at 3 plus leaf 4
        let t = prufer_decode(5, &[3, 3, 3]).unwrap();
        assert_eq!(t.degree(3), 4);
        assert!(prufer_decode(4, &[1]).is_err());
        assert!(prufer_decode(4, &[1, 4]).is_err());
    }

    #[test]
    fn random_trees() {
        assert_eq!(random_tree(1, 0).unwrap().order(), 1);
        assert_eq!(random_tree(2, 0).unwrap().size(), 1);
        let t = random_tree(8, 42).unwrap();
        assert_eq!(t.size(), 7);
        assert!(t.is_tree());
        assert_eq!(t, random_tree(8, 42).unwrap());
    }
}
