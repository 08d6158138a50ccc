use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::search::bfs;
use super::{check_valid, Decision, ReplayError, SolveError, Witness};
use crate::bits::BitSet;
use crate::levels::{DkTile, DonkeyKongRoom};
use crate::Cell;

/// Mario's abstract kinematics. These constants are part of the level
/// format version: the reduction's staircases and drops are built
/// against them.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DkMovementRules {
    /// Highest step Mario climbs by walking into it.
    pub step_up_max: usize,
    /// Longest fall Mario survives; `None` means any height.
    pub safe_fall: Option<usize>,
    /// Horizontal gap Mario can jump across.
    pub jump_gap: usize,
    /// Switches toggle only while Mario stands on them.
    pub toggle_on_own_cell: bool,
    pub format_version: u32,
}

pub const DK_RULES: DkMovementRules = DkMovementRules {
    step_up_max: 1,
    safe_fall: None,
    jump_gap: 0,
    toggle_on_own_cell: true,
    format_version: 1,
};

/// `L`/`R` walk one cell, stepping up a one-high ledge or falling as
/// needed. `T` toggles the switch under Mario.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DkAction {
    Left,
    Right,
    Toggle,
}

impl DkAction {
    const ALL: [DkAction; 3] = [DkAction::Left, DkAction::Right, DkAction::Toggle];
}

impl fmt::Display for DkAction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DkAction::Left => "L",
            DkAction::Right => "R",
            DkAction::Toggle => "T",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct DkState {
    col: u32,
    row: u32,
    switches: BitSet,
}

struct Physics<'a> {
    room: &'a DonkeyKongRoom,
    board_at: Vec<Option<usize>>,
    switch_at: Vec<Option<usize>>,
}

impl<'a> Physics<'a> {
    fn new(room: &'a DonkeyKongRoom) -> Self {
        let mut board_at = vec![None; room.num_cells()];
        for (b, board) in room.boards.iter().enumerate() {
            for cell in &board.cells {
                board_at[cell.index(room.width)] = Some(b);
            }
        }
        let mut switch_at = vec![None; room.num_cells()];
        for (s, cell) in room.switches.iter().enumerate() {
            switch_at[cell.index(room.width)] = Some(s);
        }
        Physics {
            room,
            board_at,
            switch_at,
        }
    }

    fn solid(&self, col: usize, row: usize, switches: &BitSet) -> bool {
        let i = row * self.room.width + col;
        match self.room.tiles[i] {
            DkTile::BrickFloor | DkTile::Block => true,
            DkTile::Empty | DkTile::Switch => false,
            DkTile::SlideBoardTop | DkTile::SlideBoardBody => match self.board_at[i] {
                Some(b) => {
                    let board = &self.room.boards[b];
                    !board.polarity.is_open(switches.contains(board.switch))
                }
                None => true,
            },
        }
    }

    /// Row where Mario comes to rest dropping down from `(col, row)`, or
    /// `None` if he falls out of the room.
    fn settle(&self, col: usize, mut row: usize, switches: &BitSet) -> Option<usize> {
        loop {
            if row + 1 >= self.room.height {
                return None;
            }
            if self.solid(col, row + 1, switches) {
                return Some(row);
            }
            row += 1;
        }
    }

    fn start(&self) -> DkState {
        DkState {
            col: self.room.start.col as u32,
            row: self.room.start.row as u32,
            switches: BitSet::with_len(self.room.switches.len()),
        }
    }

    fn is_win(&self, s: &DkState) -> bool {
        Cell::new(s.col as usize, s.row as usize) == self.room.win
    }

    fn apply(&self, s: &DkState, action: DkAction) -> Option<DkState> {
        let (col, row) = (s.col as usize, s.row as usize);
        match action {
            DkAction::Left | DkAction::Right => {
                let next = if action == DkAction::Left {
                    col.checked_sub(1)?
                } else {
                    col + 1
                };
                if next >= self.room.width {
                    return None;
                }
                let new_row = if !self.solid(next, row, &s.switches) {
                    self.settle(next, row, &s.switches)?
                } else if row >= DK_RULES.step_up_max
                    && !self.solid(next, row - 1, &s.switches)
                    && !self.solid(col, row - 1, &s.switches)
                {
                    row - 1
                } else {
                    return None;
                };
                Some(DkState {
                    col: next as u32,
                    row: new_row as u32,
                    switches: s.switches.clone(),
                })
            }
            DkAction::Toggle => {
                let sw = self.switch_at[row * self.room.width + col]?;
                let mut switches = s.switches.clone();
                switches.toggle(sw);
                let row = self.settle(col, row, &switches)?;
                Some(DkState {
                    col: s.col,
                    row: row as u32,
                    switches,
                })
            }
        }
    }
}

/// Breadth-first search over (Mario's cell, switch states).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DkSolver {
    pub max_states: u64,
}

impl Default for DkSolver {
    fn default() -> Self {
        DkSolver {
            max_states: 1 << 22,
        }
    }
}

impl DkSolver {
    pub fn solve(&self, room: &DonkeyKongRoom) -> Result<Decision, SolveError> {
        check_valid(room.validate())?;
        let physics = Physics::new(room);
        let explored = bfs(
            physics.start(),
            self.max_states,
            "donkey kong states",
            |s| physics.is_win(s),
            |s, out| {
                for action in DkAction::ALL {
                    if let Some(next) = physics.apply(s, action) {
                        out.push((action, next));
                    }
                }
            },
        )?;
        Ok(Decision {
            solvable: explored.path.is_some(),
            states_explored: explored.states.len() as u64,
            witness: explored.path.map(Witness::DonkeyKong),
        })
    }
}

/// [`DkSolver::solve`] with the default state cap.
pub fn solve_donkey_kong(room: &DonkeyKongRoom) -> Result<Decision, SolveError> {
    DkSolver::default().solve(room)
}

pub(super) fn replay(room: &DonkeyKongRoom, actions: &[DkAction]) -> Result<(), ReplayError> {
    if let Some(v) = room.validate().first() {
        return Err(ReplayError::new(0, format!("invalid level: {v}")));
    }
    let physics = Physics::new(room);
    let mut state = physics.start();
    for (step, &action) in actions.iter().enumerate() {
        state = physics.apply(&state, action).ok_or_else(|| {
            ReplayError::new(
                step,
                format!("{action} is not possible at [{},{}]", state.col, state.row),
            )
        })?;
    }
    if physics.is_win(&state) {
        Ok(())
    } else {
        Err(ReplayError::new(
            actions.len(),
            "Mario did not reach the win cell",
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::levels::{Polarity, SlideBoard};

    fn floor_row(room: &mut DonkeyKongRoom, row: usize) {
        for c in 0..room.width {
            room.set_tile(Cell::new(c, row), DkTile::BrickFloor);
        }
    }

    #[test]
    fn flat_room_walk_right() {
        let mut room = DonkeyKongRoom::empty(4, 2, Cell::new(0, 0), Cell::new(3, 0));
        floor_row(&mut room, 1);
        let d = solve_donkey_kong(&room).unwrap();
        assert!(d.solvable);
        assert_eq!(
            d.witness,
            Some(Witness::DonkeyKong(vec![DkAction::Right; 3]))
        );
    }

    #[test]
    fn one_step_up_but_not_two() {
        // ..*      ...*
        // .#=      ..#=
        // ===      .#==
        //          ====
        let mut low = DonkeyKongRoom::empty(3, 3, Cell::new(0, 1), Cell::new(2, 0));
        floor_row(&mut low, 2);
        low.set_tile(Cell::new(1, 1), DkTile::Block);
        low.set_tile(Cell::new(2, 1), DkTile::BrickFloor);
        assert!(solve_donkey_kong(&low).unwrap().solvable);

        let mut high = DonkeyKongRoom::empty(3, 4, Cell::new(0, 2), Cell::new(2, 0));
        floor_row(&mut high, 3);
        high.set_tile(Cell::new(1, 2), DkTile::Block);
        high.set_tile(Cell::new(1, 1), DkTile::Block);
        high.set_tile(Cell::new(2, 1), DkTile::BrickFloor);
        high.set_tile(Cell::new(2, 2), DkTile::Block);
        assert!(!solve_donkey_kong(&high).unwrap().solvable);
    }

    #[test]
    fn step_up_needs_headroom() {
        // Ceiling right above Mario blocks the climb.
        let mut room = DonkeyKongRoom::empty(3, 4, Cell::new(0, 2), Cell::new(2, 1));
        floor_row(&mut room, 3);
        room.set_tile(Cell::new(1, 2), DkTile::Block);
        room.set_tile(Cell::new(2, 2), DkTile::BrickFloor);
        room.set_tile(Cell::new(0, 1), DkTile::Block);
        assert!(!solve_donkey_kong(&room).unwrap().solvable);
        room.set_tile(Cell::new(0, 1), DkTile::Empty);
        assert!(solve_donkey_kong(&room).unwrap().solvable);
    }

    fn board_room(polarity: Polarity) -> DonkeyKongRoom {
        // M S T *
        // = = | =
        // = = = =
        // Board stands in Mario's way on row 0..1.
        let mut room = DonkeyKongRoom::empty(4, 3, Cell::new(0, 0), Cell::new(3, 0));
        floor_row(&mut room, 1);
        floor_row(&mut room, 2);
        room.set_tile(Cell::new(1, 0), DkTile::Switch);
        room.switches.push(Cell::new(1, 0));
        room.set_tile(Cell::new(2, 0), DkTile::SlideBoardTop);
        room.set_tile(Cell::new(2, 1), DkTile::SlideBoardBody);
        room.boards.push(SlideBoard {
            cells: vec![Cell::new(2, 0), Cell::new(2, 1)],
            switch: 0,
            polarity,
        });
        room
    }

    #[test]
    fn switch_opens_board() {
        let on = solve_donkey_kong(&board_room(Polarity::OpenWhenOn)).unwrap();
        assert!(on.solvable);
        let Some(Witness::DonkeyKong(w)) = on.witness else {
            panic!()
        };
        assert!(w.contains(&DkAction::Toggle));
        let off = solve_donkey_kong(&board_room(Polarity::OpenWhenOff)).unwrap();
        assert!(off.solvable);
        let Some(Witness::DonkeyKong(w)) = off.witness else {
            panic!()
        };
        assert!(!w.contains(&DkAction::Toggle));
    }

    #[test]
    fn states_are_bounded_by_cells_times_switch_states() {
        let room = board_room(Polarity::OpenWhenOn);
        let d = solve_donkey_kong(&room).unwrap();
        assert!(d.states_explored <= (room.num_cells() as u64) << room.switches.len());
    }

    #[test]
    fn replay_rejects_bad_witness() {
        let room = board_room(Polarity::OpenWhenOn);
        assert!(replay(&room, &[DkAction::Right, DkAction::Right]).is_err());
        assert!(replay(
            &room,
            &[
                DkAction::Right,
                DkAction::Toggle,
                DkAction::Right,
                DkAction::Right
            ]
        )
        .is_ok());
    }

    #[test]
    fn invalid_room_is_refused() {
        let room = DonkeyKongRoom::empty(2, 1, Cell::new(0, 0), Cell::new(1, 0));
        assert!(matches!(
            solve_donkey_kong(&room),
            Err(SolveError::InvalidLevel(_))
        ));
    }
}
