//! Deliberately wrong reductions. A campaign run with any of these must
//! report disagreements; they exist to show the harness can falsify.

use crate::levels::{DonkeyKongRoom, HarvestMoonInstance, MoleManiaRoom, WarioLevel};
use crate::problems::{CnfFormula, DirectedGraph, KnapsackInstance, Push1Instance};
use crate::reductions::{
    reduce_3cnf_to_dk, reduce_hamcycle_to_wario, reduce_knapsack_to_harvest, reduce_push1_to_mole,
    ReductionError,
};
use crate::{Cell, Direction};

/// Board 0 opens on the wrong switch setting.
pub fn dk_flipped_polarity(f: &CnfFormula) -> Result<DonkeyKongRoom, ReductionError> {
    let mut room = reduce_3cnf_to_dk(f)?;
    if let Some(board) = room.boards.first_mut() {
        board.polarity = board.polarity.flipped();
    }
    Ok(room)
}

/// The start room has no key.
pub fn wario_missing_key(g: &DirectedGraph) -> Result<WarioLevel, ReductionError> {
    let mut level = reduce_hamcycle_to_wario(g)?;
    let start = level.start_room;
    level.rooms[start].key = false;
    Ok(level)
}

/// One day short.
pub fn harvest_short_season(k: &KnapsackInstance) -> HarvestMoonInstance {
    let mut h = reduce_knapsack_to_harvest(k);
    h.days = h.days.saturating_sub(1);
    h
}

/// The first weight moves one cell (first free direction in U, D, L, R
/// order that keeps it off Muddy and the other weights).
pub fn mole_shifted_weight(p: &Push1Instance) -> MoleManiaRoom {
    let mut room = reduce_push1_to_mole(p);
    let Some(&w) = room.weights.iter().next() else {
        return room;
    };
    let target = Direction::ALL.iter().find_map(|&d| {
        w.step(d, room.width, room.height)
            .filter(|c: &Cell| *c != room.start && !room.weights.contains(c))
    });
    if let Some(t) = target {
        room.weights.remove(&w);
        room.weights.insert(t);
    }
    room
}
