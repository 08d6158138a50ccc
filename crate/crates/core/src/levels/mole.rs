use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::Violation;
use crate::Cell;

/// Soft floor can be dug through to the underground layer; Hard cannot.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Floor {
    Soft,
    Hard,
}

impl Floor {
    /// Character used in the level schema.
    pub fn symbol(self) -> char {
        match self {
            Floor::Soft => 's',
            Floor::Hard => 'h',
        }
    }

    pub fn from_symbol(c: char) -> Option<Floor> {
        match c {
            's' => Some(Floor::Soft),
            'h' => Some(Floor::Hard),
            _ => None,
        }
    }
}

/// Two-layer Mole Mania room with push-only weights above ground.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MoleManiaRoom {
    pub width: usize,
    pub height: usize,
    /// Row-major, `width * height` entries.
    pub floor: Vec<Floor>,
    pub weights: BTreeSet<Cell>,
    pub start: Cell,
    pub win: Cell,
}

impl MoleManiaRoom {
    pub fn uniform(width: usize, height: usize, floor: Floor, start: Cell, win: Cell) -> Self {
        MoleManiaRoom {
            width,
            height,
            floor: vec![floor; width * height],
            weights: BTreeSet::new(),
            start,
            win,
        }
    }

    pub fn floor_at(&self, cell: Cell) -> Floor {
        self.floor[cell.index(self.width)]
    }

    pub fn num_cells(&self) -> usize {
        self.width * self.height
    }

    pub(crate) fn structural_violations(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        if self.width == 0 || self.height == 0 {
            out.push(Violation::new("width/height", "room must be at least 1x1"));
        }
        if self.floor.len() != self.width * self.height {
            out.push(Violation::new(
                "floor",
                format!(
                    "expected {} floor tiles for {}x{}, found {}",
                    self.width * self.height,
                    self.width,
                    self.height,
                    self.floor.len()
                ),
            ));
        }
        for (name, cell) in [("start", self.start), ("win", self.win)] {
            if !cell.in_bounds(self.width, self.height) {
                out.push(Violation::new(name, format!("{cell} is out of bounds")));
            }
        }
        for cell in &self.weights {
            if !cell.in_bounds(self.width, self.height) {
                out.push(Violation::new(
                    format!("weights{cell}"),
                    "weight is out of bounds",
                ));
            }
        }
        out
    }

    pub fn validate(&self) -> Vec<Violation> {
        let mut out = self.structural_violations();
        if self.weights.contains(&self.start) {
            out.push(Violation::new(
                "start",
                format!("{} is occupied by a weight", self.start),
            ));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn start_on_weight_is_one_violation() {
        let mut room = MoleManiaRoom::uniform(3, 1, Floor::Hard, Cell::new(0, 0), Cell::new(2, 0));
        assert!(room.validate().is_empty());
        room.weights.insert(Cell::new(0, 0));
        let v = room.validate();
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].path, "start");
    }

    #[test]
    fn weight_out_of_bounds() {
        let mut room = MoleManiaRoom::uniform(2, 2, Floor::Soft, Cell::new(0, 0), Cell::new(1, 1));
        room.weights.insert(Cell::new(2, 0));
        assert_eq!(room.validate().len(), 1);
    }
}
