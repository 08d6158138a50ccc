use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec::Vec;

use super::ProblemError;
use crate::{CapExceeded, Cell, Direction};

/// Two-dimensional Push-1: the robot walks orthogonally and may push a
/// single block one cell into an empty cell, never pull.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Push1Instance {
    width: usize,
    height: usize,
    blocks: BTreeSet<Cell>,
    robot: Cell,
    win: Cell,
}

impl Push1Instance {
    /// A block may rest on the win cell and the robot may start on it; the
    /// robot may not start on a block.
    pub fn new(
        width: usize,
        height: usize,
        blocks: BTreeSet<Cell>,
        robot: Cell,
        win: Cell,
    ) -> Result<Self, ProblemError> {
        if width == 0 || height == 0 {
            return Err(ProblemError::EmptyGrid);
        }
        let check = |what, cell: Cell| {
            if cell.in_bounds(width, height) {
                Ok(())
            } else {
                Err(ProblemError::CellOutOfBounds {
                    what,
                    cell,
                    width,
                    height,
                })
            }
        };
        check("robot", robot)?;
        check("win", win)?;
        for &b in &blocks {
            check("block", b)?;
        }
        if blocks.contains(&robot) {
            return Err(ProblemError::RobotOnBlock { cell: robot });
        }
        Ok(Push1Instance {
            width,
            height,
            blocks,
            robot,
            win,
        })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn blocks(&self) -> &BTreeSet<Cell> {
        &self.blocks
    }

    pub fn robot(&self) -> Cell {
        self.robot
    }

    pub fn win(&self) -> Cell {
        self.win
    }

    pub fn num_cells(&self) -> usize {
        self.width * self.height
    }
}

/// Breadth-first search over (robot cell, block placement).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Push1Oracle {
    /// Refuse when `cells * C(cells, blocks)` exceeds this.
    pub max_states: u128,
}

impl Default for Push1Oracle {
    fn default() -> Self {
        Push1Oracle {
            max_states: 1 << 24,
        }
    }
}

/// Saturating binomial coefficient.
fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n.saturating_sub(k));
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = match acc.checked_mul(n - i) {
            Some(v) => v / (i + 1),
            None => return u128::MAX,
        };
    }
    acc
}

impl Push1Oracle {
    pub fn state_bound(p: &Push1Instance) -> u128 {
        Self::bound_for(p.num_cells(), p.blocks.len())
    }

    /// `cells * C(cells, blocks)`.
    pub fn bound_for(cells: usize, blocks: usize) -> u128 {
        let cells = cells as u128;
        cells.saturating_mul(binomial(cells, blocks as u128))
    }

    pub fn decide(&self, p: &Push1Instance) -> Result<bool, CapExceeded> {
        let bound = Self::state_bound(p);
        if bound > self.max_states {
            return Err(CapExceeded {
                what: "push-1 oracle state bound",
                needed: bound,
                cap: self.max_states,
            });
        }
        let start: (Cell, Vec<Cell>) = (p.robot, p.blocks.iter().copied().collect());
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert(start.clone());
        queue.push_back(start);
        while let Some((robot, blocks)) = queue.pop_front() {
            if robot == p.win {
                return Ok(true);
            }
            for dir in Direction::ALL {
                let Some(next) = robot.step(dir, p.width, p.height) else {
                    continue;
                };
                let mut moved = blocks.clone();
                if let Ok(pos) = blocks.binary_search(&next) {
                    let Some(beyond) = next.step(dir, p.width, p.height) else {
                        continue;
                    };
                    if blocks.binary_search(&beyond).is_ok() {
                        continue;
                    }
                    moved.remove(pos);
                    let at = moved.binary_search(&beyond).unwrap_err();
                    moved.insert(at, beyond);
                }
                let state = (next, moved);
                if seen.insert(state.clone()) {
                    queue.push_back(state);
                }
            }
        }
        Ok(false)
    }
}

/// [`Push1Oracle::decide`] with the default state cap.
pub fn push1_oracle(p: &Push1Instance) -> Result<bool, CapExceeded> {
    Push1Oracle::default().decide(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid(rows: &[&str]) -> Push1Instance {
        let mut blocks = BTreeSet::new();
        let (mut robot, mut win) = (None, None);
        for (r, line) in rows.iter().enumerate() {
            for (c, ch) in line.chars().enumerate() {
                let cell = Cell::new(c, r);
                match ch {
                    'B' => {
                        blocks.insert(cell);
                    }
                    'R' => robot = Some(cell),
                    'W' => win = Some(cell),
                    _ => {}
                }
            }
        }
        Push1Instance::new(
            rows[0].len(),
            rows.len(),
            blocks,
            robot.unwrap(),
            win.unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn walk_right() {
        assert_eq!(push1_oracle(&grid(&["R.W"])), Ok(true));
    }

    #[test]
    fn block_parked_on_win() {
        // Reachable states: robot at 0 with block at 1, robot at 1 with
        // block at 2 (the win). Neither has the robot on the win.
        assert_eq!(push1_oracle(&grid(&["RBW"])), Ok(false));
    }

    #[test]
    fn walk_around_via_second_row() {
        assert_eq!(push1_oracle(&grid(&["RBW", "..."])), Ok(true));
    }

    #[test]
    fn pushes_clear_a_blocked_column() {
        // Column 1 is fully blocked: push the lower block right twice,
        // then step up and walk to the win.
        assert_eq!(push1_oracle(&grid(&["RB.W", ".B.."])), Ok(true));
        assert_eq!(push1_oracle(&grid(&["RB.W"])), Ok(false));
        assert_eq!(push1_oracle(&grid(&["R.BW"])), Ok(false));
    }

    #[test]
    fn rejects_robot_on_block() {
        let mut blocks = BTreeSet::new();
        blocks.insert(Cell::new(0, 0));
        assert!(matches!(
            Push1Instance::new(2, 1, blocks, Cell::new(0, 0), Cell::new(1, 0)),
            Err(ProblemError::RobotOnBlock { .. })
        ));
    }

    #[test]
    fn refuses_large_state_space() {
        let p = grid(&["RB.B.B.B.B", "..........", "........W."]);
        let oracle = Push1Oracle { max_states: 100 };
        assert!(oracle.decide(&p).is_err());
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(16, 3), 560);
        assert_eq!(binomial(4, 0), 1);
        assert_eq!(binomial(3, 5), 0);
    }
}
