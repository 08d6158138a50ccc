use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use super::search::bfs;
use super::{check_valid, Decision, ReplayError, SolveError, Witness};
use crate::bits::BitSet;
use crate::levels::{DoorState, WarioLevel};

/// `O<d>` spends the current room's key to open closed door `d`;
/// `G<d>` walks through open door `d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WarioAction {
    Open(usize),
    Go(usize),
}

impl fmt::Display for WarioAction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WarioAction::Open(d) => write!(f, "O{d}"),
            WarioAction::Go(d) => write!(f, "G{d}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct WarioState {
    room: usize,
    keys: BitSet,
    open: BitSet,
    collected: BitSet,
}

struct Rules<'a> {
    level: &'a WarioLevel,
    treasures: usize,
    /// Door indices leaving each room, in door order.
    exits: Vec<Vec<usize>>,
}

impl<'a> Rules<'a> {
    fn new(level: &'a WarioLevel) -> Self {
        let mut exits = alloc::vec![Vec::new(); level.rooms.len()];
        for (d, door) in level.doors.iter().enumerate() {
            exits[door.from].push(d);
        }
        Rules {
            level,
            treasures: level.rooms.iter().filter(|r| r.treasure).count(),
            exits,
        }
    }

    fn start(&self) -> WarioState {
        let rooms = &self.level.rooms;
        let mut collected = BitSet::with_len(rooms.len());
        let start = self.level.start_room;
        if rooms[start].treasure {
            collected.insert(start);
        }
        WarioState {
            room: start,
            keys: BitSet::from_bools(rooms.iter().map(|r| r.key)),
            open: BitSet::from_bools(self.level.doors.iter().map(|d| d.state == DoorState::Open)),
            collected,
        }
    }

    fn is_win(&self, s: &WarioState) -> bool {
        s.collected.count() == self.treasures
    }

    fn apply(&self, s: &WarioState, action: WarioAction) -> Option<WarioState> {
        let d = match action {
            WarioAction::Open(d) | WarioAction::Go(d) => d,
        };
        let door = self.level.doors.get(d)?;
        if door.from != s.room {
            return None;
        }
        let mut next = s.clone();
        match action {
            WarioAction::Open(_) => {
                if s.open.contains(d) || !s.keys.contains(s.room) {
                    return None;
                }
                next.keys.remove(s.room);
                next.open.insert(d);
            }
            WarioAction::Go(_) => {
                if !s.open.contains(d) {
                    return None;
                }
                next.room = door.to;
                if self.level.rooms[door.to].treasure {
                    next.collected.insert(door.to);
                }
            }
        }
        Some(next)
    }

    fn actions(&self, s: &WarioState, out: &mut Vec<(WarioAction, WarioState)>) {
        for &d in &self.exits[s.room] {
            for action in [WarioAction::Open(d), WarioAction::Go(d)] {
                if let Some(next) = self.apply(s, action) {
                    out.push((action, next));
                }
            }
        }
    }
}

/// Breadth-first search over (room, keys left, door states, treasures).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WarioSolver {
    pub max_states: u64,
}

impl Default for WarioSolver {
    fn default() -> Self {
        WarioSolver {
            max_states: 1 << 24,
        }
    }
}

impl WarioSolver {
    pub fn solve(&self, level: &WarioLevel) -> Result<Decision, SolveError> {
        check_valid(level.validate())?;
        let rules = Rules::new(level);
        let explored = bfs(
            rules.start(),
            self.max_states,
            "wario land states",
            |s| rules.is_win(s),
            |s, out| rules.actions(s, out),
        )?;
        Ok(Decision {
            solvable: explored.path.is_some(),
            states_explored: explored.states.len() as u64,
            witness: explored.path.map(Witness::WarioLand),
        })
    }
}

/// [`WarioSolver::solve`] with the default state cap.
pub fn solve_wario(level: &WarioLevel) -> Result<Decision, SolveError> {
    WarioSolver::default().solve(level)
}

pub(super) fn replay(level: &WarioLevel, actions: &[WarioAction]) -> Result<(), ReplayError> {
    if let Some(v) = level.validate().first() {
        return Err(ReplayError::new(0, format!("invalid level: {v}")));
    }
    let rules = Rules::new(level);
    let mut state = rules.start();
    for (step, &action) in actions.iter().enumerate() {
        state = rules.apply(&state, action).ok_or_else(|| {
            ReplayError::new(
                step,
                format!("{action} is not possible in room {}", state.room),
            )
        })?;
    }
    if rules.is_win(&state) {
        Ok(())
    } else {
        Err(ReplayError::new(
            actions.len(),
            "treasures left uncollected",
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::levels::{Door, Room};
    use alloc::vec;

    const T: Room = Room {
        treasure: true,
        key: false,
    };
    const TK: Room = Room {
        treasure: true,
        key: true,
    };

    fn closed(from: usize, to: usize) -> Door {
        Door {
            from,
            to,
            state: DoorState::Closed,
        }
    }

    #[test]
    fn single_room_is_won_immediately() {
        let level = WarioLevel {
            rooms: vec![T],
            doors: vec![],
            start_room: 0,
        };
        let d = solve_wario(&level).unwrap();
        assert!(d.solvable);
        assert_eq!(d.witness, Some(Witness::WarioLand(vec![])));
    }

    #[test]
    fn closed_door_without_key() {
        let level = WarioLevel {
            rooms: vec![T, T],
            doors: vec![closed(0, 1)],
            start_room: 0,
        };
        assert!(!solve_wario(&level).unwrap().solvable);
    }

    #[test]
    fn key_opens_door_and_is_consumed() {
        let level = WarioLevel {
            rooms: vec![TK, T],
            doors: vec![closed(0, 1)],
            start_room: 0,
        };
        let d = solve_wario(&level).unwrap();
        assert_eq!(
            d.witness,
            Some(Witness::WarioLand(vec![
                WarioAction::Open(0),
                WarioAction::Go(0)
            ]))
        );
        // One key, two closed doors out of the start room: only one opens.
        let fork = WarioLevel {
            rooms: vec![TK, T, T],
            doors: vec![closed(0, 1), closed(0, 2)],
            start_room: 0,
        };
        assert!(!solve_wario(&fork).unwrap().solvable);
    }

    #[test]
    fn keys_do_not_travel_between_rooms() {
        // Room 0's key cannot open the door leaving room 1.
        let level = WarioLevel {
            rooms: vec![
                Room {
                    treasure: false,
                    key: true,
                },
                T,
                T,
            ],
            doors: vec![
                Door {
                    from: 0,
                    to: 1,
                    state: DoorState::Open,
                },
                closed(1, 2),
            ],
            start_room: 0,
        };
        assert!(!solve_wario(&level).unwrap().solvable);
    }

    #[test]
    fn replay_checks_key_use() {
        let level = WarioLevel {
            rooms: vec![TK, T],
            doors: vec![closed(0, 1)],
            start_room: 0,
        };
        assert!(replay(&level, &[WarioAction::Go(0)]).is_err());
        assert!(replay(&level, &[WarioAction::Open(0)]).is_err());
        assert!(replay(&level, &[WarioAction::Open(0), WarioAction::Go(0)]).is_ok());
    }
}
