//! Graph families with fixed vertex labelings, and enumeration of small graphs
//! and labeled trees.

mod enumerate;
mod families;
mod trees;

pub use enumerate::{
    all_connected_graphs, all_connected_graphs_up_to_isomorphism, canonical_form,
    random_connected_graph, random_connected_graph_with,
};
pub use families::{
    complete, cycle, flower_snark, hypercube, make, path, pendant_cycle, pendant_path, star, torus,
    Family, FamilySpec,
};
pub use trees::{all_labeled_trees, prufer_decode, random_tree};
