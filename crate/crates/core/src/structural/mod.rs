//! Closed-form connected forcing solvers that avoid exhaustive search.

mod clique;
mod extremal;
mod snark;
mod tree;

pub use clique::{detect_single_clique, single_clique_connected_forcing, CliqueStructure};
pub use extremal::{classify_extremal, Extremal};
pub use snark::flower_snark_upper_set;
pub use tree::{tree_connected_forcing, tree_count_minimum_sets};

use crate::graph::VertexSet;

/// A connected forcing number together with a minimum connected forcing set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructuralSolution {
    pub value: usize,
    pub witness: VertexSet,
}

/// Adds all but the largest-id leaf of each support to `set`.
fn add_all_but_one_leaves(set: &mut VertexSet, supports: &[(usize, Vec<usize>)]) {
    for (_, leaves) in supports {
        for &l in &leaves[..leaves.len() - 1] {
            set.insert(l);
        }
    }
}
