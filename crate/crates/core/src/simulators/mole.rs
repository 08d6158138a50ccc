use alloc::format;
use core::fmt;

use super::search::bfs;
use super::{check_valid, Decision, ReplayError, SolveError, Witness};
use crate::bits::BitSet;
use crate::levels::{Floor, MoleManiaRoom};
use crate::{Cell, Direction};

/// A one-cell move (pushing a weight if one is in the way above ground),
/// or `Dig` to switch layers through a Soft floor tile.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MoleAction {
    Move(Direction),
    Dig,
}

impl fmt::Display for MoleAction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MoleAction::Move(d) => write!(f, "{}", d.letter()),
            MoleAction::Dig => f.write_str("Dig"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct MoleState {
    cell: u32,
    below: bool,
    weights: BitSet,
}

struct Rules<'a> {
    room: &'a MoleManiaRoom,
}

impl Rules<'_> {
    fn cell(&self, s: &MoleState) -> Cell {
        Cell::from_index(s.cell as usize, self.room.width)
    }

    fn start(&self) -> MoleState {
        let mut weights = BitSet::with_len(self.room.num_cells());
        for w in &self.room.weights {
            weights.insert(w.index(self.room.width));
        }
        MoleState {
            cell: self.room.start.index(self.room.width) as u32,
            below: false,
            weights,
        }
    }

    fn is_win(&self, s: &MoleState) -> bool {
        !s.below && self.cell(s) == self.room.win
    }

    fn apply(&self, s: &MoleState, action: MoleAction) -> Option<MoleState> {
        let (w, h) = (self.room.width, self.room.height);
        let here = self.cell(s);
        match action {
            MoleAction::Move(dir) => {
                let next = here.step(dir, w, h)?;
                let mut out = s.clone();
                out.cell = next.index(w) as u32;
                if !s.below && s.weights.contains(next.index(w)) {
                    let beyond = next.step(dir, w, h)?;
                    if s.weights.contains(beyond.index(w)) {
                        return None;
                    }
                    out.weights.remove(next.index(w));
                    out.weights.insert(beyond.index(w));
                }
                Some(out)
            }
            MoleAction::Dig => {
                if self.room.floor_at(here) != Floor::Soft {
                    return None;
                }
                if s.below && s.weights.contains(here.index(w)) {
                    return None;
                }
                let mut out = s.clone();
                out.below = !s.below;
                Some(out)
            }
        }
    }
}

const ACTIONS: [MoleAction; 5] = [
    MoleAction::Move(Direction::Up),
    MoleAction::Move(Direction::Down),
    MoleAction::Move(Direction::Left),
    MoleAction::Move(Direction::Right),
    MoleAction::Dig,
];

/// Discovered states split by layer.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct MoleSearchCounts {
    pub above: u64,
    pub below: u64,
}

/// Breadth-first search over (Muddy's cell, layer, weight placement).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MoleSolver {
    pub max_states: u64,
}

impl Default for MoleSolver {
    fn default() -> Self {
        MoleSolver {
            max_states: 1 << 24,
        }
    }
}

impl MoleSolver {
    pub fn solve(&self, room: &MoleManiaRoom) -> Result<Decision, SolveError> {
        self.solve_counted(room).map(|(d, _)| d)
    }

    /// Like [`MoleSolver::solve`], also reporting how many discovered
    /// states were underground.
    pub fn solve_counted(
        &self,
        room: &MoleManiaRoom,
    ) -> Result<(Decision, MoleSearchCounts), SolveError> {
        check_valid(room.validate())?;
        let rules = Rules { room };
        let explored = bfs(
            rules.start(),
            self.max_states,
            "mole mania states",
            |s| rules.is_win(s),
            |s, out| {
                for action in ACTIONS {
                    if let Some(next) = rules.apply(s, action) {
                        out.push((action, next));
                    }
                }
            },
        )?;
        let below = explored.states.iter().filter(|s| s.below).count() as u64;
        let counts = MoleSearchCounts {
            above: explored.states.len() as u64 - below,
            below,
        };
        let decision = Decision {
            solvable: explored.path.is_some(),
            states_explored: explored.states.len() as u64,
            witness: explored.path.map(Witness::MoleMania),
        };
        Ok((decision, counts))
    }
}

/// [`MoleSolver::solve`] with the default state cap.
pub fn solve_mole(room: &MoleManiaRoom) -> Result<Decision, SolveError> {
    MoleSolver::default().solve(room)
}

pub(super) fn replay(room: &MoleManiaRoom, actions: &[MoleAction]) -> Result<(), ReplayError> {
    if let Some(v) = room.validate().first() {
        return Err(ReplayError::new(0, format!("invalid level: {v}")));
    }
    let rules = Rules { room };
    let mut state = rules.start();
    for (step, &action) in actions.iter().enumerate() {
        state = rules.apply(&state, action).ok_or_else(|| {
            ReplayError::new(
                step,
                format!("{action} is not possible at {}", rules.cell(&state)),
            )
        })?;
    }
    if rules.is_win(&state) {
        Ok(())
    } else {
        Err(ReplayError::new(
            actions.len(),
            "Muddy is not on the win cell above ground",
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn row(floor: Floor, weight_at: Option<usize>) -> MoleManiaRoom {
        let mut room = MoleManiaRoom::uniform(3, 1, floor, Cell::new(0, 0), Cell::new(2, 0));
        if let Some(c) = weight_at {
            room.weights.insert(Cell::new(c, 0));
        }
        room
    }

    #[test]
    fn hard_corridor_walk() {
        let d = solve_mole(&row(Floor::Hard, None)).unwrap();
        assert!(d.solvable);
        assert_eq!(
            d.witness,
            Some(Witness::MoleMania(vec![
                MoleAction::Move(Direction::Right);
                2
            ]))
        );
    }

    #[test]
    fn weight_pushed_onto_win_blocks_it() {
        let (d, counts) = MoleSolver::default()
            .solve_counted(&row(Floor::Hard, Some(1)))
            .unwrap();
        assert!(!d.solvable);
        assert_eq!(counts.below, 0);
        // (Muddy, weight): (0,1) -> (1,2) -> (0,2).
        assert_eq!(d.states_explored, 3);
    }

    #[test]
    fn dig_under_the_weight() {
        let (d, counts) = MoleSolver::default()
            .solve_counted(&row(Floor::Soft, Some(1)))
            .unwrap();
        assert!(d.solvable);
        assert!(counts.below > 0);
        let Some(Witness::MoleMania(w)) = &d.witness else {
            panic!()
        };
        assert!(w.contains(&MoleAction::Dig));
        replay(&row(Floor::Soft, Some(1)), w).unwrap();
    }

    #[test]
    fn cannot_surface_under_a_weight() {
        // Soft only at the start; win sits under a weight on Hard floor
        // and the weight cannot be pushed anywhere.
        let mut room = MoleManiaRoom::uniform(2, 1, Floor::Hard, Cell::new(0, 0), Cell::new(1, 0));
        room.floor[0] = Floor::Soft;
        room.weights.insert(Cell::new(1, 0));
        assert!(!solve_mole(&room).unwrap().solvable);
    }

    #[test]
    fn start_on_win() {
        let room = MoleManiaRoom::uniform(1, 1, Floor::Hard, Cell::new(0, 0), Cell::new(0, 0));
        let d = solve_mole(&room).unwrap();
        assert!(d.solvable);
        assert_eq!(d.witness, Some(Witness::MoleMania(vec![])));
    }

    #[test]
    fn witness_string() {
        let w = Witness::MoleMania(vec![
            MoleAction::Move(Direction::Right),
            MoleAction::Dig,
            MoleAction::Move(Direction::Down),
        ]);
        assert_eq!(alloc::format!("{w}"), "R Dig D");
    }
}
