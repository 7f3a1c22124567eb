use super::biconnected::{lowpoint_search, Lowpoint};
use super::{articulation_points, blocks, Graph, VertexSet};
use crate::error::{Error, Result};

/// The leaf-reduced graph `Ḡ` together with the map from its ids back to the
/// ids of the graph it was reduced from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedGraph {
    pub graph: Graph,
    pub original: Vec<usize>,
}

impl ReducedGraph {
    /// Maps a set over the reduced ids back to the original ambient order.
    pub fn lift(&self, s: &VertexSet, ambient: usize) -> VertexSet {
        VertexSet::from_ids(ambient, s.iter().map(|v| self.original[v]))
    }
}

/// Repeatedly deletes a leaf whose unique neighbor has degree 2 until none is
/// left. The fixed point does not depend on the deletion order.
pub fn reduce_leaves(g: &Graph) -> Result<ReducedGraph> {
    g.require_connected()?;
    if g.is_path_graph() {
        return Err(Error::Precondition(
            "leaf reduction is undefined for path graphs".into(),
        ));
    }
    let (removed, _) = reduction_mask(g);
    let keep = VertexSet::from_ids(g.order(), (0..g.order()).filter(|&v| !removed[v]));
    let (graph, original) = g.induced_subgraph(&keep)?;
    Ok(ReducedGraph { graph, original })
}

/// Which vertices leaf reduction deletes, and the degrees in what remains.
/// The graph must be connected and not a path. Linear time.
pub(crate) fn reduction_mask(g: &Graph) -> (Vec<bool>, Vec<usize>) {
    let n = g.order();
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let alive_neighbor =
        |v: usize, removed: &[bool]| g.neighbors(v).iter().copied().find(|&u| !removed[u]);

    let mut pending: Vec<usize> = (0..n)
        .filter(|&v| degree[v] == 1 && degree[g.neighbors(v)[0]] == 2)
        .collect();
    while let Some(leaf) = pending.pop() {
        let support = alive_neighbor(leaf, &removed).expect("leaf has a neighbor");
        removed[leaf] = true;
        degree[leaf] = 0;
        degree[support] = 1;
        // the support's remaining neighbor is not a leaf unless the graph is a path
        if let Some(next) = alive_neighbor(support, &removed) {
            if degree[next] == 2 {
                pending.push(support);
            }
        }
    }
    (removed, degree)
}

/// `R1` and `R2` membership for every vertex of a connected graph, in linear
/// time.
///
/// A component of `G - v` counts as a path only when it hangs off `v` as one:
/// `v` plus the component induces a path with `v` at an end. A single vertex
/// qualifies. A path component that `v` touches in the middle, or at several
/// vertices, cannot be forced from `v` alone and does not count.
///
/// Each component of `G - v` hangs off one block at `v` in the block-cut tree.
/// Rooting that tree gives, for every side, its vertex count, edge count and
/// number of vertices of degree three or more, which is enough to decide the
/// test above without deleting anything.
pub(crate) fn r1_r2_flags(g: &Graph) -> (Vec<bool>, Vec<bool>) {
    let n = g.order();
    let mut r1 = vec![false; n];
    let mut r2 = vec![false; n];
    if n < 3 {
        return (r1, r2);
    }
    let Lowpoint {
        is_cut,
        blocks,
        block_edges,
    } = lowpoint_search(g);
    let nb = blocks.len();
    let mut cut_node = vec![usize::MAX; n];
    let mut cuts = Vec::new();
    for v in (0..n).filter(|&v| is_cut[v]) {
        cut_node[v] = nb + cuts.len();
        cuts.push(v);
    }
    let nodes = nb + cuts.len();
    let heavy_vertex = |x: usize| usize::from(g.degree(x) >= 3);

    // per node: owned vertices, owned edges, owned vertices of degree >= 3
    let mut tree: Vec<Vec<usize>> = vec![Vec::new(); nodes];
    let mut verts = vec![0usize; nodes];
    let mut edges = vec![0usize; nodes];
    let mut heavy = vec![0usize; nodes];
    for (b, block) in blocks.iter().enumerate() {
        edges[b] = block_edges[b].len();
        for &x in block {
            if is_cut[x] {
                tree[b].push(cut_node[x]);
                tree[cut_node[x]].push(b);
            } else {
                verts[b] += 1;
                heavy[b] += heavy_vertex(x);
            }
        }
    }
    for (i, &c) in cuts.iter().enumerate() {
        verts[nb + i] = 1;
        heavy[nb + i] = heavy_vertex(c);
    }

    // for each (cut vertex, block): its degree into the block, how many of
    // those neighbors have degree exactly 3 (they drop to 2 once it is gone),
    // and the largest degree among them
    let mut attach: std::collections::HashMap<(usize, usize), (usize, usize, usize)> =
        std::collections::HashMap::new();
    for (b, list) in block_edges.iter().enumerate() {
        for &(x, y) in list {
            for (c, other) in [(x, y), (y, x)] {
                if is_cut[c] {
                    let e = attach.entry((c, b)).or_default();
                    e.0 += 1;
                    e.1 += usize::from(g.degree(other) == 3);
                    e.2 = e.2.max(g.degree(other));
                }
            }
        }
    }

    let mut parent = vec![usize::MAX; nodes];
    let mut order = Vec::with_capacity(nodes);
    let mut stack = vec![0];
    parent[0] = 0;
    while let Some(x) = stack.pop() {
        order.push(x);
        for &y in &tree[x] {
            if parent[y] == usize::MAX {
                parent[y] = x;
                stack.push(y);
            }
        }
    }
    let (mut sv, mut se, mut sh) = (verts.clone(), edges.clone(), heavy.clone());
    for &x in order.iter().rev().filter(|&&x| x != 0) {
        let p = parent[x];
        sv[p] += sv[x];
        se[p] += se[x];
        sh[p] += sh[x];
    }

    for (i, &v) in cuts.iter().enumerate() {
        let cv = nb + i;
        // the side hangs off v as a path: v has one neighbor there, that
        // neighbor is an end of the path, and the side is a tree of max degree 2
        let is_pendant_path = |b: usize| {
            let (side_v, side_e, side_h) = if parent[b] == cv {
                (sv[b], se[b], sh[b])
            } else {
                (sv[0] - sv[cv], se[0] - se[cv], sh[0] - sh[cv])
            };
            let (deg_in_block, threes, nbr_deg) = attach[&(v, b)];
            deg_in_block == 1 && nbr_deg <= 2 && side_e == side_v && side_h == threes
        };
        match tree[cv].len() {
            0 | 1 => {}
            2 => r2[v] = tree[cv].iter().all(|&b| !is_pendant_path(b)),
            _ => r1[v] = true,
        }
    }
    (r1, r2)
}

/// Structural summary used by the closed-form solvers.
///
/// `r1`, `r2`, `leaves`, `articulation_points` and `blocks` describe the graph
/// itself. `r3_reduced`, `reduced_leaves` and `curly_l` describe `Ḡ` (reported
/// in the original ids). For a path there is no reduction and those fields
/// describe the path itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructuralReport {
    pub r1: VertexSet,
    pub r2: VertexSet,
    pub r3_reduced: VertexSet,
    /// For each `v` in `r3_reduced` (ascending), its leaf neighbors in `Ḡ`.
    pub reduced_leaves: Vec<(usize, Vec<usize>)>,
    pub leaves: VertexSet,
    pub leaf_number: usize,
    pub curly_l: usize,
    pub articulation_points: VertexSet,
    pub blocks: Vec<VertexSet>,
    pub reduced: Option<ReducedGraph>,
}

/// Leaves of each leaf-adjacent vertex of `h`, mapped through `original`.
pub(crate) fn leaf_supports(h: &Graph, original: &[usize]) -> Vec<(usize, Vec<usize>)> {
    let mut out: Vec<(usize, Vec<usize>)> = (0..h.order())
        .filter_map(|v| {
            let mut leaves: Vec<usize> = h
                .neighbors(v)
                .iter()
                .filter(|&&u| h.degree(u) == 1)
                .map(|&u| original[u])
                .collect();
            if leaves.is_empty() {
                None
            } else {
                leaves.sort_unstable();
                Some((original[v], leaves))
            }
        })
        .collect();
    out.sort_unstable();
    out
}

pub fn compute_r_sets(g: &Graph) -> Result<StructuralReport> {
    let n = g.order();
    let articulation = articulation_points(g)?;
    let (r1_flags, r2_flags) = r1_r2_flags(g);
    let r1 = VertexSet::from_ids(n, (0..n).filter(|&v| r1_flags[v]));
    let r2 = VertexSet::from_ids(n, (0..n).filter(|&v| r2_flags[v]));

    let reduced = if g.is_path_graph() {
        None
    } else {
        Some(reduce_leaves(g)?)
    };
    let reduced_leaves = match &reduced {
        Some(red) => leaf_supports(&red.graph, &red.original),
        None => leaf_supports(g, &(0..n).collect::<Vec<_>>()),
    };
    let r3_reduced = VertexSet::from_ids(n, reduced_leaves.iter().map(|(v, _)| *v));
    let curly_l = reduced_leaves.iter().map(|(_, l)| l.len() - 1).sum();

    Ok(StructuralReport {
        r1,
        r2,
        r3_reduced,
        reduced_leaves,
        leaves: g.leaves(),
        leaf_number: g.leaf_number(),
        curly_l,
        articulation_points: articulation,
        blocks: blocks(g)?,
        reduced,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Deletion-based classification, used as the oracle for `r1_r2_flags`.
    fn r_class(g: &Graph, v: usize) -> (bool, bool) {
        let comps = g.components_after_removal(&VertexSet::from_ids(g.order(), [v]));
        match comps.len() {
            0 | 1 => (false, false),
            2 => (false, comps.iter().all(|c| !g.is_pendant_path(v, c))),
            _ => (true, false),
        }
    }

    fn g(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::new(n, edges).unwrap()
    }

    fn ids(n: usize, v: &[usize]) -> VertexSet {
        VertexSet::from_ids(n, v.iter().copied())
    }

    fn double_star() -> Graph {
        // centers 0 and 1; leaves 2,3 on 0 and 4,5 on 1
        g(6, &[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)])
    }

    #[test]
    fn reduction_without_degree_two_supports_is_identity() {
        let ds = double_star();
        let red = reduce_leaves(&ds).unwrap();
        assert_eq!(red.graph, ds);
        assert_eq!(red.original, (0..6).collect::<Vec<_>>());
    }

    #[test]
    fn subdivided_star_reduces_to_claw() {
        // center 0, leaves 1,2 and a subdivided leg 0-3-4
        let t = g(5, &[(0, 1), (0, 2), (0, 3), (3, 4)]);
        let red = reduce_leaves(&t).unwrap();
        assert_eq!(red.original, vec![0, 1, 2, 3]);
        assert_eq!(red.graph, g(4, &[(0, 1), (0, 2), (0, 3)]));
    }

    #[test]
    fn spider_reduces_to_claw() {
        // legs 0-1-2-3, 0-4-5-6, 0-7-8-9
        let t = g(
            10,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (0, 4),
                (4, 5),
                (5, 6),
                (0, 7),
                (7, 8),
                (8, 9),
            ],
        );
        let red = reduce_leaves(&t).unwrap();
        assert_eq!(red.original, vec![0, 1, 4, 7]);
        assert!(red.graph.is_star());
    }

    #[test]
    fn reduction_rejects_paths_and_disconnected() {
        assert!(matches!(
            reduce_leaves(&g(3, &[(0, 1), (1, 2)])),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            reduce_leaves(&g(1, &[])),
            Err(Error::Precondition(_))
        ));
        assert_eq!(
            reduce_leaves(&g(4, &[(0, 1), (2, 3)])),
            Err(Error::Disconnected)
        );
    }

    #[test]
    fn r_sets_double_star() {
        let rep = compute_r_sets(&double_star()).unwrap();
        assert_eq!(rep.r1, ids(6, &[0, 1]));
        assert!(rep.r2.is_empty());
        assert_eq!(rep.r3_reduced, ids(6, &[0, 1]));
        assert_eq!(rep.curly_l, 2);
        assert_eq!(rep.leaf_number, 4);
    }

    #[test]
    fn r_sets_cycle_and_claw() {
        let c6 = g(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]);
        let rep = compute_r_sets(&c6).unwrap();
        assert!(rep.r1.is_empty() && rep.r2.is_empty() && rep.r3_reduced.is_empty());
        assert_eq!(rep.curly_l, 0);

        let claw = g(4, &[(0, 1), (0, 2), (0, 3)]);
        let rep = compute_r_sets(&claw).unwrap();
        assert_eq!(rep.r1, ids(4, &[0]));
        assert!(rep.r2.is_empty());
        assert_eq!(rep.r3_reduced, ids(4, &[0]));
        assert_eq!(rep.curly_l, 2);
    }

    #[test]
    fn singleton_component_counts_as_path() {
        // triangle 0,1,2 with pendant 3 on 0: deleting 0 leaves {3} and {1,2}
        let tp = g(4, &[(0, 1), (1, 2), (0, 2), (0, 3)]);
        let rep = compute_r_sets(&tp).unwrap();
        assert!(rep.r1.is_empty() && rep.r2.is_empty());
        assert_eq!(rep.r3_reduced, ids(4, &[0]));
        assert_eq!(rep.curly_l, 0);
    }

    #[test]
    fn path_component_touched_in_the_middle_is_not_a_path() {
        // 0-1-2 with leaves 3,4 on 0 and 5,6 on 2: both sides of 1 are P_3
        // attached at their centers
        let t = g(7, &[(0, 1), (0, 3), (0, 4), (1, 2), (2, 5), (2, 6)]);
        let rep = compute_r_sets(&t).unwrap();
        assert_eq!(rep.r1, ids(7, &[0, 2]));
        assert_eq!(rep.r2, ids(7, &[1]));
    }

    #[test]
    fn r2_membership() {
        // two triangles joined by a path 2-3-4; deleting 2 leaves the edge 0-1,
        // but 2 touches both of its ends
        let t = g(
            7,
            &[
                (0, 1),
                (1, 2),
                (0, 2),
                (2, 3),
                (3, 4),
                (4, 5),
                (5, 6),
                (4, 6),
            ],
        );
        let rep = compute_r_sets(&t).unwrap();
        assert_eq!(rep.r2, ids(7, &[2, 3, 4]));
        assert!(rep.r1.is_empty());
        assert!(rep.r1.union(&rep.r2).is_subset(&rep.articulation_points));
    }

    #[test]
    fn path_report_uses_the_path_itself() {
        let p4 = g(4, &[(0, 1), (1, 2), (2, 3)]);
        let rep = compute_r_sets(&p4).unwrap();
        assert!(rep.reduced.is_none());
        assert_eq!(rep.r3_reduced, ids(4, &[1, 2]));
        assert_eq!(rep.curly_l, 0);
    }

    #[test]
    fn linear_r_sets_match_deletion_oracle() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let mut checked = 0;
        while checked < 3000 {
            let n = rng.gen_range(1..=9);
            let p = rng.gen_range(0.15..0.6);
            let edges: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|_| rng.gen_bool(p))
                .collect();
            let h = Graph::new(n, &edges).unwrap();
            if !h.is_connected() {
                continue;
            }
            checked += 1;
            let (r1, r2) = r1_r2_flags(&h);
            for v in 0..n {
                assert_eq!((r1[v], r2[v]), r_class(&h, v), "vertex {v} of {h:?}");
            }
        }
    }
}
