mod common;

use cforce::exact;
use cforce::generators::{all_connected_graphs, all_labeled_trees, random_tree};
use cforce::structural::{
    detect_single_clique, single_clique_connected_forcing, tree_connected_forcing,
};
use cforce::Graph;
use common::{adjacency, ids, minimum_sets};

fn check_against_oracle(g: &Graph) {
    let adj = adjacency(g);
    let (f, f_sets) = minimum_sets(&adj, false);
    let (fc, fc_sets) = minimum_sets(&adj, true);

    let lib_f = exact::forcing_number(g, true).unwrap();
    assert_eq!(lib_f.value, f, "F of {g:?}");
    let mut lib_sets: Vec<Vec<usize>> = lib_f.witnesses.iter().map(|s| s.to_vec()).collect();
    lib_sets.sort();
    assert_eq!(lib_sets, f_sets, "minimum forcing sets of {g:?}");

    let lib_fc = exact::connected_forcing_number(g, true).unwrap();
    assert_eq!(lib_fc.value, fc, "F_c of {g:?}");
    let mut lib_sets: Vec<Vec<usize>> = lib_fc.witnesses.iter().map(|s| s.to_vec()).collect();
    lib_sets.sort();
    assert_eq!(lib_sets, fc_sets, "minimum connected forcing sets of {g:?}");
}

#[test]
fn exhaustive_solvers_match_oracle_on_small_graphs() {
    for n in 1..=5 {
        for g in all_connected_graphs(n).unwrap() {
            check_against_oracle(&g);
        }
    }
}

#[test]
fn exhaustive_solvers_match_oracle_on_random_graphs() {
    for seed in 0..300 {
        let n = 6 + (seed as usize) % 4;
        check_against_oracle(&common::random_connected(n, seed));
    }
}

#[test]
fn disconnected_forcing_number_matches_oracle() {
    let g = common::graph(7, &[(0, 1), (1, 2), (3, 4), (4, 5), (5, 3)]);
    assert_eq!(
        exact::forcing_number(&g, false).unwrap().value,
        common::forcing_number(&g)
    );
}

#[test]
fn tree_solver_matches_oracle() {
    for n in 1..=6 {
        for t in all_labeled_trees(n).unwrap() {
            let sol = tree_connected_forcing(&t).unwrap();
            let adj = adjacency(&t);
            assert_eq!(sol.value, common::connected_forcing_number(&t), "{t:?}");
            let w = sol.witness.to_vec();
            assert!(common::is_connected_subset(&adj, &w) && common::forces_all(&adj, &w));
        }
    }
    for seed in 0..200 {
        let t = random_tree(8 + (seed as usize) % 3, seed).unwrap();
        assert_eq!(
            tree_connected_forcing(&t).unwrap().value,
            common::connected_forcing_number(&t)
        );
    }
}

#[test]
fn single_clique_solver_matches_oracle() {
    let mut seen = 0;
    for n in 3..=6 {
        for g in all_connected_graphs(n).unwrap() {
            if !detect_single_clique(&g).unwrap().is_single_clique_graph {
                continue;
            }
            seen += 1;
            let sol = single_clique_connected_forcing(&g).unwrap();
            assert_eq!(sol.value, common::connected_forcing_number(&g), "{g:?}");
            let adj = adjacency(&g);
            let w = sol.witness.to_vec();
            assert_eq!(w.len(), sol.value);
            assert!(
                common::is_connected_subset(&adj, &w) && common::forces_all(&adj, &w),
                "{g:?}"
            );
        }
    }
    assert!(seen > 1000);
}

#[test]
fn spreads_match_oracle() {
    for g in all_connected_graphs(5).unwrap() {
        let f = common::forcing_number(&g);
        for v in 0..5 {
            let keep = ids(&g, &(0..5).filter(|&u| u != v).collect::<Vec<_>>());
            let (h, _) = g.induced_subgraph(&keep).unwrap();
            let expected = f as i64 - common::forcing_number(&h) as i64;
            assert_eq!(exact::forcing_spread(&g, v).unwrap(), expected);
        }
    }
}
