use gbhard_core::levels::Level;
use gbhard_core::problems::{
    ham_cycle_oracle, knapsack_oracle, push1_oracle, sat_oracle, validate_skull_door_graph,
};
use gbhard_core::reductions::{check_size_bounds, SourceInstance};
use gbhard_core::simulators::{replay, solve};
use gbhard_core::verify::{
    gen_random_3cnf, gen_random_knapsack, gen_random_push1, gen_random_skull_graph, KnapsackBounds,
    Push1Bounds,
};
use proptest::prelude::*;

/// Reduces, checks size relation, solves, replays any witness; returns the verdict.
fn reduced_verdict(source: &SourceInstance) -> bool {
    let level: Level = source.reduce().unwrap();
    assert!(level.validate().is_empty());
    check_size_bounds(source, &level).unwrap();
    let d = solve(&level).unwrap();
    if let Some(w) = &d.witness {
        replay(&level, w).unwrap();
    }
    assert_eq!(d.solvable, d.witness.is_some());
    d.solvable
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn sat_iff_donkey_kong(seed: u64, n in 1usize..=5, m in 0usize..=6) {
        let f = gen_random_3cnf(seed, n, m);
        prop_assert_eq!(sat_oracle(&f).unwrap(), reduced_verdict(&SourceInstance::Cnf(f)));
    }

    #[test]
    fn ham_cycle_iff_wario(seed: u64, pairs in 1usize..=4) {
        let g = gen_random_skull_graph(seed, pairs).unwrap();
        prop_assert!(validate_skull_door_graph(&g).is_valid);
        prop_assert_eq!(ham_cycle_oracle(&g).unwrap(), reduced_verdict(&SourceInstance::Graph(g)));
    }

    #[test]
    fn knapsack_iff_harvest(seed: u64) {
        let k = gen_random_knapsack(seed, &KnapsackBounds::default());
        prop_assert_eq!(knapsack_oracle(&k).unwrap(), reduced_verdict(&SourceInstance::Knapsack(k)));
    }

    #[test]
    fn push1_iff_mole(seed: u64) {
        let p = gen_random_push1(seed, &Push1Bounds::default());
        prop_assert_eq!(push1_oracle(&p).unwrap(), reduced_verdict(&SourceInstance::Push1(p)));
    }
}

#[test]
fn contradiction_gives_unsolvable_room() {
    use gbhard_core::problems::{CnfFormula, Literal};
    let f = CnfFormula::new(1, vec![vec![Literal::pos(1); 3], vec![Literal::neg(1); 3]]).unwrap();
    assert!(!reduced_verdict(&SourceInstance::Cnf(f)));
}

#[test]
fn formula_without_clauses_is_solvable() {
    use gbhard_core::problems::CnfFormula;
    let f = CnfFormula::new(3, vec![]).unwrap();
    assert!(reduced_verdict(&SourceInstance::Cnf(f)));
}
