mod common;

use cforce::forcing::{forcing_chains, forcing_closure, is_connected_forcing_set, is_forcing_set};
use cforce::VertexSet;
use common::{graph_and_set, grow_connected_forcing_set};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn closure_is_order_independent((g, s, seed) in graph_and_set()) {
        let lib = forcing_closure(&g, &s).unwrap().final_set;
        let adj = common::adjacency(&g);
        let random = common::closure_random_order(&adj, &s.to_vec(), seed);
        let random = VertexSet::from_ids(g.order(), (0..g.order()).filter(|&v| random[v]));
        prop_assert_eq!(lib, random);
    }

    #[test]
    fn closure_is_idempotent_and_extensive((g, s, _seed) in graph_and_set()) {
        let once = forcing_closure(&g, &s).unwrap();
        prop_assert!(s.is_subset(&once.final_set));
        prop_assert_eq!(forcing_closure(&g, &once.final_set).unwrap().final_set, once.final_set.clone());
        prop_assert!(once.validate(&g).is_ok());
    }

    #[test]
    fn closure_is_monotone((g, s, seed) in graph_and_set()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut t = s.clone();
        for v in 0..g.order() {
            if rng.gen_bool(0.3) {
                t.insert(v);
            }
        }
        let cs = forcing_closure(&g, &s).unwrap().final_set;
        let ct = forcing_closure(&g, &t).unwrap().final_set;
        prop_assert!(cs.is_subset(&ct));
        if is_forcing_set(&g, &s).unwrap() {
            prop_assert!(is_forcing_set(&g, &t).unwrap());
        }
    }

    #[test]
    fn chains_induce_paths((g, s, _seed) in graph_and_set()) {
        let trace = forcing_closure(&g, &s).unwrap();
        let chains = forcing_chains(&trace, &g).unwrap();
        prop_assert_eq!(chains.len(), s.len());
        let mut covered = VertexSet::empty(g.order());
        for chain in &chains {
            prop_assert!(s.contains(chain[0]));
            let set = VertexSet::from_ids(g.order(), chain.iter().copied());
            prop_assert!(g.induces_path(&set));
            prop_assert!(covered.is_disjoint(&set));
            covered = covered.union(&set);
        }
        prop_assert_eq!(covered, trace.final_set);
    }

    #[test]
    fn connected_forcing_chains_hold_at_most_one_leaf((g, _s, seed) in graph_and_set()) {
        prop_assume!(!g.is_path_graph());
        let s = grow_connected_forcing_set(&g, seed);
        prop_assert!(is_connected_forcing_set(&g, &s).unwrap());
        let trace = forcing_closure(&g, &s).unwrap();
        let leaves = g.leaves();
        for chain in forcing_chains(&trace, &g).unwrap() {
            prop_assert!(chain.iter().filter(|&&v| leaves.contains(v)).count() <= 1);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn all_engine_properties((g, s, seed) in graph_and_set()) {
        if let Err(msg) = common::engine_properties(&g, &s, seed) {
            prop_assert!(false, "{}", msg);
        }
    }
}
