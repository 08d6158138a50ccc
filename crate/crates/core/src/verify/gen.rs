use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::SplitMix64;
use crate::problems::{CnfFormula, DirectedGraph, Item, KnapsackInstance, Literal, Push1Instance};
use crate::Cell;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum GenError {
    #[error("skull-door graph needs at least one degree pair")]
    NoPairs,
    #[error("no self-loop-free stub matching for {pairs} pairs after {attempts} attempts")]
    RetryLimit { pairs: usize, attempts: usize },
}

/// Stub matchings tried before the skull-door generator gives up.
pub const SKULL_MATCH_ATTEMPTS: usize = 10_000;

/// `m` clauses of three literals, each an independent uniform variable in
/// `1..=n` with a fair-coin sign. Panics if `n == 0`.
pub fn gen_random_3cnf(seed: u64, n: usize, m: usize) -> CnfFormula {
    assert!(n >= 1, "gen_random_3cnf needs at least one variable");
    let mut rng = SplitMix64::new(seed);
    let clauses = (0..m)
        .map(|_| {
            (0..3)
                .map(|_| Literal::new(1 + rng.index(n), rng.coin()))
                .collect()
        })
        .collect();
    CnfFormula::new(n, clauses).expect("generated literals are in range")
}

/// Random skull-door multigraph with `pairs` vertices of profile
/// (in 1, out 2) and `pairs` of profile (in 2, out 1).
///
/// Profiles are assigned by shuffling vertex labels; out-stubs (in vertex
/// order) are matched to a shuffled list of in-stubs, reshuffling whenever
/// the matching has a self-loop. Parallel edges are allowed. Planarity is
/// not enforced.
pub fn gen_random_skull_graph(seed: u64, pairs: usize) -> Result<DirectedGraph, GenError> {
    if pairs == 0 {
        return Err(GenError::NoPairs);
    }
    let mut rng = SplitMix64::new(seed);
    let n = 2 * pairs;
    let mut labels: Vec<usize> = (0..n).collect();
    rng.shuffle(&mut labels);
    // labels[..pairs] get profile (1, 2); the rest (2, 1).
    let mut out_deg = alloc::vec![0usize; n];
    let mut in_deg = alloc::vec![0usize; n];
    for (k, &v) in labels.iter().enumerate() {
        let alpha = k < pairs;
        out_deg[v] = if alpha { 2 } else { 1 };
        in_deg[v] = if alpha { 1 } else { 2 };
    }
    let outs: Vec<usize> = (0..n)
        .flat_map(|v| core::iter::repeat_n(v, out_deg[v]))
        .collect();
    let mut ins: Vec<usize> = (0..n)
        .flat_map(|v| core::iter::repeat_n(v, in_deg[v]))
        .collect();
    for _ in 0..SKULL_MATCH_ATTEMPTS {
        rng.shuffle(&mut ins);
        if outs.iter().zip(&ins).all(|(a, b)| a != b) {
            let edges = outs.iter().copied().zip(ins.iter().copied()).collect();
            return Ok(DirectedGraph::new(n, edges).expect("stub matching is loop-free"));
        }
    }
    Err(GenError::RetryLimit {
        pairs,
        attempts: SKULL_MATCH_ATTEMPTS,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KnapsackBounds {
    pub max_capacity: u64,
    pub max_items: usize,
    pub max_weight: u64,
    pub max_value: u64,
}

impl Default for KnapsackBounds {
    fn default() -> Self {
        KnapsackBounds {
            max_capacity: 30,
            max_items: 6,
            max_weight: 10,
            max_value: 20,
        }
    }
}

/// Value reached by filling greedily in order of value per unit weight.
/// A lower bound on the optimum.
pub fn greedy_value(capacity: u64, items: &[Item]) -> u64 {
    let mut order: Vec<&Item> = items.iter().collect();
    // Descending v/w, compared exactly by cross-multiplication.
    order.sort_by(|a, b| (b.value * a.weight).cmp(&(a.value * b.weight)));
    let mut left = capacity;
    let mut total = 0;
    for it in order {
        total += (left / it.weight) * it.value;
        left %= it.weight;
    }
    total
}

/// Capacity in `1..=max_capacity`, `1..=max_items` items with weights in
/// `1..=max_weight` and values in `1..=max_value`. The target is uniform in
/// `[greedy, bound + 1]`, where `greedy` is [`greedy_value`] and `bound` is
/// `floor(W * best ratio)`; the greedy end is always reachable and the top
/// end never is, so both answers occur.
pub fn gen_random_knapsack(seed: u64, bounds: &KnapsackBounds) -> KnapsackInstance {
    let mut rng = SplitMix64::new(seed);
    let capacity = rng.range(1, bounds.max_capacity.max(1));
    let count = rng.range(1, bounds.max_items.max(1) as u64) as usize;
    let items: Vec<Item> = (0..count)
        .map(|_| Item {
            weight: rng.range(1, bounds.max_weight.max(1)),
            value: rng.range(1, bounds.max_value.max(1)),
        })
        .collect();
    let low = greedy_value(capacity, &items);
    let high = items
        .iter()
        .map(|it| capacity * it.value / it.weight)
        .max()
        .unwrap_or(0);
    let target = rng.range(low, high + 1);
    KnapsackInstance::new(capacity, target, items).expect("weights are positive")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Push1Bounds {
    pub max_width: usize,
    pub max_height: usize,
    pub max_blocks: usize,
}

impl Default for Push1Bounds {
    fn default() -> Self {
        Push1Bounds {
            max_width: 4,
            max_height: 4,
            max_blocks: 3,
        }
    }
}

/// Uniform width and height, robot on a uniform cell, win on a uniform
/// other cell (unless the grid is a single cell), then up to `max_blocks`
/// blocks on distinct non-robot cells. A block may cover the win cell.
pub fn gen_random_push1(seed: u64, bounds: &Push1Bounds) -> Push1Instance {
    let mut rng = SplitMix64::new(seed);
    let width = rng.range(1, bounds.max_width.max(1) as u64) as usize;
    let height = rng.range(1, bounds.max_height.max(1) as u64) as usize;
    let cells = width * height;
    let robot = rng.index(cells);
    let win = if cells == 1 {
        robot
    } else {
        (robot + 1 + rng.index(cells - 1)) % cells
    };
    let mut others: Vec<usize> = (0..cells).filter(|&c| c != robot).collect();
    rng.shuffle(&mut others);
    let count = rng.range(0, bounds.max_blocks.min(others.len()) as u64) as usize;
    let blocks: BTreeSet<Cell> = others[..count]
        .iter()
        .map(|&i| Cell::from_index(i, width))
        .collect();
    Push1Instance::new(
        width,
        height,
        blocks,
        Cell::from_index(robot, width),
        Cell::from_index(win, width),
    )
    .expect("cells are in bounds and distinct from the robot")
}
