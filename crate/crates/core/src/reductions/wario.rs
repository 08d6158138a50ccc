use alloc::vec::Vec;

use super::ReductionError;
use crate::levels::{Door, DoorState, Room, WarioLevel};
use crate::problems::{find_pivot_vertex, DirectedGraph, ProblemError};

/// Compiles a skull-door graph into a Wario Land level.
///
/// Room `i` stands for vertex `i`; an extra room `u = |V|` is added. Every
/// room holds a treasure and every room but `u` holds a key. Edge `(i, j)`
/// becomes a closed one-way door `i -> j` (in edge order), and one extra
/// open door leads from the pivot vertex's room to `u`, where Wario starts.
/// `u` has no exits.
pub fn reduce_hamcycle_to_wario(g: &DirectedGraph) -> Result<WarioLevel, ReductionError> {
    if g.num_vertices() == 0 {
        return Err(ProblemError::EmptyGraph.into());
    }
    let pivot = find_pivot_vertex(g)?;
    let n = g.num_vertices();
    let mut rooms = Vec::with_capacity(n + 1);
    rooms.resize(
        n,
        Room {
            treasure: true,
            key: true,
        },
    );
    rooms.push(Room {
        treasure: true,
        key: false,
    });
    let mut doors: Vec<Door> = g
        .edges()
        .iter()
        .map(|&(from, to)| Door {
            from,
            to,
            state: DoorState::Closed,
        })
        .collect();
    doors.push(Door {
        from: pivot,
        to: n,
        state: DoorState::Open,
    });
    Ok(WarioLevel {
        rooms,
        doors,
        start_room: pivot,
    })
}
