use super::{add_all_but_one_leaves, StructuralSolution};
use crate::error::{Error, Result};
use crate::graph::biconnected::lowpoint_search;
use crate::graph::reduction::{leaf_supports, r1_r2_flags, reduction_mask};
use crate::graph::{Graph, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueStructure {
    /// The unique block with three or more vertices, when it is complete.
    pub clique: VertexSet,
    pub is_single_clique_graph: bool,
}

/// Recognizes graphs whose only block on three or more vertices is a clique;
/// every other block is then a bridge.
pub fn detect_single_clique(g: &Graph) -> Result<CliqueStructure> {
    g.require_connected()?;
    let n = g.order();
    let not_single = CliqueStructure {
        clique: VertexSet::empty(n),
        is_single_clique_graph: false,
    };
    let blocks = lowpoint_search(g).blocks;
    let mut large = blocks.iter().filter(|b| b.len() >= 3);
    let (Some(block), None) = (large.next(), large.next()) else {
        return Ok(not_single);
    };
    let complete = block
        .iter()
        .all(|&u| block.iter().filter(|&&w| w != u).all(|&w| g.has_edge(u, w)));
    if !complete {
        return Ok(not_single);
    }
    Ok(CliqueStructure {
        clique: VertexSet::from_ids(n, block.iter().copied()),
        is_single_clique_graph: true,
    })
}

/// Minimum connected forcing set of a connected graph with exactly one maximal
/// clique `K` on three or more vertices.
///
/// Colors `R1 ∪ R2`, all-but-one leaves of each support vertex of `Ḡ`, and
/// `K` minus one vertex `w ∈ K - R1 - R2` when some other clique vertex has
/// no leaf in `Ḡ` (otherwise all of `K`). `w` is the smallest eligible id.
pub fn single_clique_connected_forcing(g: &Graph) -> Result<StructuralSolution> {
    let structure = detect_single_clique(g)?;
    if !structure.is_single_clique_graph {
        return Err(Error::NotSingleClique);
    }
    let n = g.order();
    let clique = structure.clique;
    let (r1, r2) = r1_r2_flags(g);
    let (removed, _) = reduction_mask(g);
    let keep = VertexSet::from_ids(n, (0..n).filter(|&v| !removed[v]));
    let (reduced, original) = g.induced_subgraph(&keep)?;
    let supports = leaf_supports(&reduced, &original);

    let r3 = VertexSet::from_ids(n, supports.iter().map(|(v, _)| *v));
    let forced_in = VertexSet::from_ids(n, (0..n).filter(|&v| r1[v] || r2[v]));
    // w can be left out only if some other clique vertex without a leaf is
    // there to force it
    let leafless = clique.difference(&r3);
    let exclusion = clique
        .difference(&forced_in)
        .iter()
        .find(|&w| leafless.iter().any(|v| v != w));

    let mut witness = forced_in.union(&clique);
    if let Some(w) = exclusion {
        witness.remove(w);
    }
    add_all_but_one_leaves(&mut witness, &supports);
    Ok(StructuralSolution {
        value: witness.len(),
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::new(n, edges).unwrap()
    }

    #[test]
    fn detection() {
        let tp = g(4, &[(0, 1), (1, 2), (0, 2), (0, 3)]);
        let s = detect_single_clique(&tp).unwrap();
        assert!(s.is_single_clique_graph);
        assert_eq!(s.clique, VertexSet::from_ids(4, [0, 1, 2]));

        let tree = g(4, &[(0, 1), (1, 2), (1, 3)]);
        assert!(!detect_single_clique(&tree).unwrap().is_single_clique_graph);

        let bowtie = g(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]);
        assert!(
            !detect_single_clique(&bowtie)
                .unwrap()
                .is_single_clique_graph
        );

        let c4 = g(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert!(!detect_single_clique(&c4).unwrap().is_single_clique_graph);
    }

    #[test]
    fn triangle() {
        let k3 = g(3, &[(0, 1), (1, 2), (0, 2)]);
        let sol = single_clique_connected_forcing(&k3).unwrap();
        assert_eq!(sol.value, 2);
        assert_eq!(sol.witness, VertexSet::from_ids(3, [1, 2]));
    }

    #[test]
    fn lone_leafless_vertex_cannot_be_excluded() {
        // triangle 0,1,2 with leaves 3,5 on 0 and 4,6 on 1: only 2 is leafless,
        // and nothing else could force it
        let t = g(7, &[(0, 1), (0, 2), (0, 3), (0, 5), (1, 2), (1, 4), (1, 6)]);
        let sol = single_clique_connected_forcing(&t).unwrap();
        assert_eq!(sol.value, 5);
        assert_eq!(sol.witness, VertexSet::from_ids(7, [0, 1, 2, 3, 4]));
    }

    #[test]
    fn triangle_with_pendant() {
        let tp = g(4, &[(0, 1), (1, 2), (0, 2), (0, 3)]);
        let sol = single_clique_connected_forcing(&tp).unwrap();
        assert_eq!(sol.value, 2);
        assert_eq!(sol.witness, VertexSet::from_ids(4, [1, 2]));
    }

    #[test]
    fn net_needs_whole_triangle() {
        let net = g(6, &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)]);
        let sol = single_clique_connected_forcing(&net).unwrap();
        assert_eq!(sol.value, 3);
        assert_eq!(sol.witness, VertexSet::from_ids(6, [0, 1, 2]));
    }

    #[test]
    fn rejects_other_graphs() {
        let c5 = g(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        assert_eq!(
            single_clique_connected_forcing(&c5),
            Err(Error::NotSingleClique)
        );
    }
}
