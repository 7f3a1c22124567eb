use super::{Graph, VertexSet};
use crate::error::Result;

pub(crate) struct Lowpoint {
    pub is_cut: Vec<bool>,
    /// Vertex lists of the blocks, each sorted ascending.
    pub blocks: Vec<Vec<usize>>,
    /// Edges of each block, parallel to `blocks`.
    pub block_edges: Vec<Vec<(usize, usize)>>,
}

/// Iterative Hopcroft-Tarjan lowpoint search from vertex 0 with an edge stack.
/// Linear in `n + m`. Assumes a connected graph.
pub(crate) fn lowpoint_search(g: &Graph) -> Lowpoint {
    let n = g.order();
    const UNSEEN: usize = usize::MAX;
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut is_cut = vec![false; n];
    let mut in_block = vec![false; n];
    let mut blocks = Vec::new();
    let mut block_edges = Vec::new();
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    // (vertex, parent, next neighbor index)
    let mut stack: Vec<(usize, usize, usize)> = vec![(0, UNSEEN, 0)];
    disc[0] = 0;
    low[0] = 0;
    let mut time = 1;
    let mut root_children = 0;

    while let Some(&mut (u, parent, ref mut next)) = stack.last_mut() {
        if let Some(&v) = g.neighbors(u).get(*next) {
            *next += 1;
            if disc[v] == UNSEEN {
                disc[v] = time;
                low[v] = time;
                time += 1;
                edge_stack.push((u, v));
                if u == 0 {
                    root_children += 1;
                }
                stack.push((v, u, 0));
            } else if v != parent && disc[v] < disc[u] {
                low[u] = low[u].min(disc[v]);
                edge_stack.push((u, v));
            }
            continue;
        }
        stack.pop();
        if parent == UNSEEN {
            continue;
        }
        low[parent] = low[parent].min(low[u]);
        if low[u] >= disc[parent] {
            if parent != 0 {
                is_cut[parent] = true;
            }
            let mut block = Vec::new();
            let mut edges = Vec::new();
            while let Some((a, b)) = edge_stack.pop() {
                edges.push((a, b));
                for x in [a, b] {
                    if !in_block[x] {
                        in_block[x] = true;
                        block.push(x);
                    }
                }
                if (a, b) == (parent, u) {
                    break;
                }
            }
            for &x in &block {
                in_block[x] = false;
            }
            block.sort_unstable();
            blocks.push(block);
            block_edges.push(edges);
        }
    }
    if root_children > 1 {
        is_cut[0] = true;
    }
    Lowpoint {
        is_cut,
        blocks,
        block_edges,
    }
}

/// Vertices whose deletion disconnects the graph.
pub fn articulation_points(g: &Graph) -> Result<VertexSet> {
    g.require_connected()?;
    let is_cut = lowpoint_search(g).is_cut;
    Ok(VertexSet::from_ids(
        g.order(),
        (0..g.order()).filter(|&v| is_cut[v]),
    ))
}

/// Vertex sets of the biconnected components, sorted lexicographically. A single
/// vertex graph has the one block `{0}`.
pub fn blocks(g: &Graph) -> Result<Vec<VertexSet>> {
    g.require_connected()?;
    if g.order() == 1 {
        return Ok(vec![VertexSet::from_ids(1, [0])]);
    }
    let n = g.order();
    let mut blocks: Vec<VertexSet> = lowpoint_search(g)
        .blocks
        .into_iter()
        .map(|b| VertexSet::from_ids(n, b))
        .collect();
    blocks.sort();
    Ok(blocks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn g(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::new(n, edges).unwrap()
    }

    fn ids(n: usize, v: &[usize]) -> VertexSet {
        VertexSet::from_ids(n, v.iter().copied())
    }

    #[test]
    fn articulation_examples() {
        let p5 = g(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]);
        assert_eq!(articulation_points(&p5).unwrap(), ids(5, &[1, 2, 3]));
        let c6 = g(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]);
        assert!(articulation_points(&c6).unwrap().is_empty());
        let star = g(4, &[(0, 1), (0, 2), (0, 3)]);
        assert_eq!(articulation_points(&star).unwrap(), ids(4, &[0]));
        let leaf_center = g(4, &[(3, 0), (3, 1), (3, 2)]);
        assert_eq!(articulation_points(&leaf_center).unwrap(), ids(4, &[3]));
    }

    #[test]
    fn block_examples() {
        let p4 = g(4, &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(
            blocks(&p4).unwrap(),
            vec![ids(4, &[0, 1]), ids(4, &[1, 2]), ids(4, &[2, 3])]
        );
        let c5 = g(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        assert_eq!(blocks(&c5).unwrap(), vec![ids(5, &[0, 1, 2, 3, 4])]);
        // triangle a=0,b=1,c=2 with pendant 3 on a
        let tp = g(4, &[(0, 1), (1, 2), (0, 2), (0, 3)]);
        assert_eq!(
            blocks(&tp).unwrap(),
            vec![ids(4, &[0, 1, 2]), ids(4, &[0, 3])]
        );
    }

    #[test]
    fn bowtie() {
        let bowtie = g(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]);
        assert_eq!(articulation_points(&bowtie).unwrap(), ids(5, &[2]));
        assert_eq!(
            blocks(&bowtie).unwrap(),
            vec![ids(5, &[0, 1, 2]), ids(5, &[2, 3, 4])]
        );
    }

    #[test]
    fn disconnected_rejected() {
        let two = g(4, &[(0, 1), (2, 3)]);
        assert_eq!(articulation_points(&two), Err(Error::Disconnected));
        assert_eq!(blocks(&two), Err(Error::Disconnected));
    }
}
