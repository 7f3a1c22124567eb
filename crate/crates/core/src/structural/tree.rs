use super::{add_all_but_one_leaves, StructuralSolution};
use crate::error::{Error, Result};
use crate::graph::reduction::{r1_r2_flags, reduction_mask};
use crate::graph::{Graph, VertexSet};

/// Leaves of the reduced tree grouped by their support vertex, ascending.
fn reduced_supports(t: &Graph) -> Vec<(usize, Vec<usize>)> {
    let n = t.order();
    let (removed, degree) = reduction_mask(t);
    let mut by_support: Vec<Vec<usize>> = vec![Vec::new(); n];
    for leaf in (0..n).filter(|&v| !removed[v] && degree[v] == 1) {
        let support = t
            .neighbors(leaf)
            .iter()
            .copied()
            .find(|&u| !removed[u])
            .expect("reduced leaf keeps its neighbor");
        by_support[support].push(leaf);
    }
    by_support
        .into_iter()
        .enumerate()
        .filter(|(_, leaves)| !leaves.is_empty())
        .collect()
}

fn require_tree(t: &Graph) -> Result<()> {
    if t.is_tree() {
        Ok(())
    } else {
        Err(Error::NotTree)
    }
}

/// Minimum connected forcing set of a tree in linear time.
///
/// A tree with maximum degree below 3 is a path and is forced from its
/// smallest-id vertex of minimum degree. Otherwise the set is `R1 ∪ R2` plus,
/// for every support vertex of the reduced tree, all of its leaves but the
/// largest-id one; its size is `|R1| + |R2| + 𝓛`.
pub fn tree_connected_forcing(t: &Graph) -> Result<StructuralSolution> {
    require_tree(t)?;
    let n = t.order();
    if t.max_degree() < 3 {
        let delta = t.min_degree();
        let v = (0..n).find(|&v| t.degree(v) == delta).unwrap();
        return Ok(StructuralSolution {
            value: 1,
            witness: VertexSet::from_ids(n, [v]),
        });
    }
    let (r1, r2) = r1_r2_flags(t);
    let mut witness = VertexSet::from_ids(n, (0..n).filter(|&v| r1[v] || r2[v]));
    add_all_but_one_leaves(&mut witness, &reduced_supports(t));
    Ok(StructuralSolution {
        value: witness.len(),
        witness,
    })
}

/// Number of minimum connected forcing sets of a tree other than a path: the
/// product of `L(v; T̄)` over the support vertices of the reduced tree.
pub fn tree_count_minimum_sets(t: &Graph) -> Result<u128> {
    require_tree(t)?;
    if t.is_path_graph() {
        return Err(Error::Precondition(
            "the counting formula excludes paths".into(),
        ));
    }
    reduced_supports(t)
        .iter()
        .try_fold(1u128, |acc, (_, leaves)| {
            acc.checked_mul(leaves.len() as u128)
                .ok_or_else(|| Error::Overflow("minimum set count exceeds u128".into()))
        })
}
