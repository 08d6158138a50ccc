//! Instance compilers from classical NP-complete problems into abstract
//! models of four Game Boy games, plus the machinery to check them.
//!
//! * [`problems`]: the source problems (3-CNF-SAT, Hamiltonian cycle on
//!   skull-door graphs, unbounded knapsack, Push-1) and brute-force oracles.
//! * [`levels`]: level data models for Donkey Kong, Wario Land,
//!   Harvest Moon GB and Mole Mania, with validation and ASCII rendering.
//! * [`simulators`]: exhaustive rule-level solvers for each game.
//! * [`reductions`]: the four instance compilers.
//! * [`verify`]: seeded generators and oracle-vs-solver equivalence campaigns.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod bits;
pub mod levels;
pub mod problems;
pub mod reductions;
pub mod simulators;
pub mod verify;

use core::fmt;

/// A grid position. Column grows to the right, row grows downward.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub col: usize,
    pub row: usize,
}

impl Cell {
    pub const fn new(col: usize, row: usize) -> Self {
        Cell { col, row }
    }

    pub fn in_bounds(self, width: usize, height: usize) -> bool {
        self.col < width && self.row < height
    }

    /// Row-major index into a grid of the given width.
    pub fn index(self, width: usize) -> usize {
        self.row * width + self.col
    }

    pub fn from_index(index: usize, width: usize) -> Self {
        Cell::new(index % width, index / width)
    }

    /// Neighbor one step in `dir`, or `None` when it leaves the grid.
    pub fn step(self, dir: Direction, width: usize, height: usize) -> Option<Cell> {
        let (col, row) = match dir {
            Direction::Up => (self.col, self.row.checked_sub(1)?),
            Direction::Down => (self.col, self.row + 1),
            Direction::Left => (self.col.checked_sub(1)?, self.row),
            Direction::Right => (self.col + 1, self.row),
        };
        let next = Cell::new(col, row);
        next.in_bounds(width, height).then_some(next)
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.col, self.row)
    }
}

/// Orthogonal move direction on a grid.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Up,
    Down,
    Left,
    Right,
}

impl Direction {
    pub const ALL: [Direction; 4] = [
        Direction::Up,
        Direction::Down,
        Direction::Left,
        Direction::Right,
    ];

    pub fn letter(self) -> char {
        match self {
            Direction::Up => 'U',
            Direction::Down => 'D',
            Direction::Left => 'L',
            Direction::Right => 'R',
        }
    }
}

/// A search or enumeration would exceed its configured budget.
///
/// Oracles and solvers refuse deterministically instead of running
/// unbounded.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{what}: {needed} exceeds cap {cap}")]
pub struct CapExceeded {
    pub what: &'static str,
    pub needed: u128,
    pub cap: u128,
}
